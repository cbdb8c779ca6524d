"""Gray codes and binary node labels.

Two codes live here. The binary reflected Gray code (``i ^ (i >> 1)``) labels
the digits of a cube coordinate bit by bit. The k-ary reflected Gray code
orders whole digit tuples so that consecutive tuples differ in one digit by
exactly 1, which is what the column sequence of an embedding needs: a one-bit
change across a multi-dimension field is not enough for cube adjacency.

Bit order is most significant first everywhere. Dimension 0 of a coordinate
owns the most significant ``log2 k`` bits of its label.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import DomainError, UnsupportedArityError

if TYPE_CHECKING:
    from .embedding import GridSpec
    from .topology import CubeSpec


@dataclass(frozen=True)
class BitString:
    """Immutable bit sequence, most significant bit first.

    Width 0 is allowed so that empty label fields (a one-row grid, a zero-width
    pad) are ordinary values.
    """

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        if any(b not in (0, 1) for b in bits):
            raise DomainError(f"bits must be 0 or 1, got {bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_str(cls, text: str) -> BitString:
        if any(ch not in "01" for ch in text):
            raise DomainError(f"not a bit string: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def from_int(cls, value: int, width: int) -> BitString:
        if width < 0 or value < 0 or value >> width:
            raise DomainError(f"{value} does not fit in {width} bits")
        return cls(tuple((value >> (width - 1 - i)) & 1 for i in range(width)))

    @property
    def width(self) -> int:
        return len(self.bits)

    def to_int(self) -> int:
        value = 0
        for b in self.bits:
            value = (value << 1) | b
        return value

    def hamming(self, other: BitString) -> int:
        if self.width != other.width:
            raise DomainError(f"width mismatch: {self.width} vs {other.width}")
        return sum(a != b for a, b in zip(self.bits, other.bits))

    def __add__(self, other: BitString) -> BitString:
        return BitString(self.bits + other.bits)

    def __getitem__(self, item: slice) -> BitString:
        return BitString(self.bits[item])

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class LabelPartition:
    """A node label split into row, pad and column fields (in label order)."""

    row_bits: BitString
    pad_bits: BitString
    col_bits: BitString

    @property
    def width(self) -> int:
        return self.row_bits.width + self.pad_bits.width + self.col_bits.width

    def reassemble(self) -> BitString:
        return self.row_bits + self.pad_bits + self.col_bits


def ceil_log2(value: int) -> int:
    """Smallest ``b`` with ``2**b >= value``; ``ceil_log2(1) == 0``."""
    if value < 1:
        raise DomainError(f"ceil_log2 needs a positive integer, got {value}")
    return (value - 1).bit_length()


def is_power_of_two(value: int) -> bool:
    return value >= 1 and value & (value - 1) == 0


def bin_gray_encode(index: int, width: int) -> BitString:
    if width < 1:
        raise DomainError(f"width must be positive, got {width}")
    if not 0 <= index < (1 << width):
        raise DomainError(f"index {index} out of range: need 0 <= index < 2**{width} = {1 << width}")
    return BitString.from_int(index ^ (index >> 1), width)


def bin_gray_decode(code: BitString) -> int:
    # prefix XOR from the top bit down
    index = 0
    acc = 0
    for b in code.bits:
        acc ^= b
        index = (index << 1) | acc
    return index


def _check_kary(k: int, d: int) -> None:
    if k < 2:
        raise DomainError(f"arity must be >= 2, got {k}")
    if d < 1:
        raise DomainError(f"digit count must be >= 1, got {d}")


def kary_gray_rank_to_tuple(index: int, k: int, d: int) -> tuple[int, ...]:
    """Rank ``index`` of the reflected base-``k`` Gray code over ``d`` digits.

    Digit ``i`` (0 = most significant) runs upward when the number formed by
    the digits above it is even and downward when it is odd. That prefix value,
    not the digit sum, decides the direction: the two agree only for odd ``k``.
    """
    _check_kary(k, d)
    if not 0 <= index < k**d:
        raise DomainError(f"index {index} out of range: need 0 <= index < {k}**{d} = {k**d}")
    if d == 1:
        return (index,)
    plain = [0] * d
    rest = index
    for i in range(d - 1, -1, -1):
        rest, plain[i] = divmod(rest, k)
    out = []
    prefix = 0
    for digit in plain:
        out.append(k - 1 - digit if prefix & 1 else digit)
        prefix = prefix * k + digit
    return tuple(out)


def kary_gray_tuple_to_rank(digits: Sequence[int], k: int, d: int) -> int:
    _check_kary(k, d)
    if len(digits) != d:
        raise DomainError(f"expected {d} digits, got {len(digits)}")
    prefix = 0
    for g in digits:
        if not 0 <= g < k:
            raise DomainError(f"digit {g} out of range [0, {k - 1}]")
        prefix = prefix * k + (k - 1 - g if prefix & 1 else g)
    return prefix


def label_of_coordinate(coord: Iterable[int], k: int) -> BitString:
    if not is_power_of_two(k) or k < 2:
        raise UnsupportedArityError(k)
    per_digit = k.bit_length() - 1
    label = BitString(())
    for digit in coord:
        label = label + bin_gray_encode(digit, per_digit)
    return label


def field_widths(grid: GridSpec, cube: CubeSpec) -> tuple[int, int, int]:
    """(row, pad, column) widths of a label partition."""
    if not is_power_of_two(cube.k):
        raise UnsupportedArityError(cube.k)
    total = cube.n * (cube.k.bit_length() - 1)
    row = ceil_log2(grid.rows)
    col = ceil_log2(grid.cols)
    if row + col > total:
        raise DomainError(
            f"row field ({row} bits) and column field ({col} bits) exceed the {total}-bit label"
        )
    return row, total - row - col, col


def partition_label(label: BitString, grid: GridSpec, cube: CubeSpec) -> LabelPartition:
    row, pad, col = field_widths(grid, cube)
    if label.width != row + pad + col:
        raise DomainError(f"label width {label.width} != n*log2(k) = {row + pad + col}")
    return LabelPartition(
        row_bits=label[:row],
        pad_bits=label[row : row + pad],
        col_bits=label[row + pad :],
    )
