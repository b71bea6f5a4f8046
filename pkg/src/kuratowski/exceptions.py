"""
Domain errors

Everything a caller can trigger with bad input is a ValueError,
so ``except ValueError`` keeps working around any public function.
"""

from typing import Any, Optional, Tuple


class DimensionError(ValueError):
    """A point set does not belong to the space it is used with"""


class ArityError(ValueError):
    """A term mentions a generator that has no assigned set"""


class CapExceededError(ValueError):
    """A size limit (enumeration, Dedekind, order bound) was exceeded"""


class RangeError(ValueError):
    """An integer argument fell outside its valid range"""

    def __init__(self, message: str, valid: Tuple[int, Optional[int]]):
        bounds = f"{valid[0]}..{valid[1]}" if valid[1] is not None else f"at least {valid[0]}"
        super().__init__(f"{message} (valid range: {bounds})")
        self.valid = valid


class UnknownOpSetError(ValueError):
    """An operation flag string or table cell could not be recognised"""


class TermSyntaxError(ValueError):
    """Term text failed to parse"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InvalidSpaceError(ValueError):
    """A specialization matrix is not a finite topology"""

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class NotAntisymmetricError(ValueError):
    """Two terms evaluate identically everywhere up to the order bound"""

    def __init__(self, first: str, second: str, max_points: int):
        super().__init__(
            f"not antisymmetric at this bound: {first} and {second} agree on every space up to {max_points} points"
        )
        self.pair = (first, second)
        self.max_points = max_points


class MonoidOverflowError(RuntimeError):
    """The unary monoid grew past its hard cap; the rewrite rules are inconsistent"""
