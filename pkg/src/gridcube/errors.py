"""Exception hierarchy shared by every gridcube module."""

from __future__ import annotations


class GridCubeError(Exception):
    """Base class for all gridcube errors."""


class DomainError(GridCubeError, ValueError):
    """An argument lies outside the domain of the operation."""


class UnsupportedArityError(GridCubeError, ValueError):
    """Binary labels need a power-of-2 arity."""

    def __init__(self, k: int):
        self.k = k
        super().__init__(
            f"arity k={k} is not a power of 2; binary labels need one "
            f"(use inflate_k to move to a {1 << (k - 1).bit_length()}-ary cube)"
        )


class FitError(GridCubeError, ValueError):
    """The grid does not fit in the cube."""

    def __init__(self, value: int, bound: int, what: str):
        self.value = value
        self.bound = bound
        self.excess = value - bound
        super().__init__(f"{what}: {value} exceeds bound {bound} by {self.excess}")


class RowOverflow(FitError):
    def __init__(self, rows: int, k: int):
        super().__init__(rows, k, f"RowOverflow: A={rows} rows > k={k}")


class ColOverflow(FitError):
    def __init__(self, cols: int, bound: int):
        super().__init__(cols, bound, f"ColOverflow: B={cols} columns > k^(n-1)={bound}")


class ValidationError(GridCubeError, ValueError):
    """A malformed embedding map; ``offenders`` lists each problem found."""

    def __init__(self, offenders: list[str]):
        self.offenders = list(offenders)
        shown = "; ".join(self.offenders[:10])
        more = f" (+{len(self.offenders) - 10} more)" if len(self.offenders) > 10 else ""
        super().__init__(f"malformed embedding map: {shown}{more}")
