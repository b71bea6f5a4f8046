"""
Closed-form family sizes and Dedekind numbers

Table rows are unary operation sets (I, i, k, c, ik, ikc) and columns are
binary ones (I, ^, v, ^v). With one generator the sizes are the fixed
values of TABLE1; with n generators they follow the formulas of TABLE2.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..exceptions import CapExceededError, RangeError, UnknownOpSetError
from ..saturation.opset import TABLE_COLUMNS, TABLE_ROWS, OpSet

logger = logging.getLogger(__name__)

DEDEKIND_CAP = 6
BRUTE_FORCE_CAP = 4

# fmt: off
# None marks an infinite family
TABLE1: Dict[Tuple[str, str], Optional[int]] = {
    ("I", "I"): 1, ("I", "^"): 1, ("I", "v"): 1, ("I", "^v"): 1,
    ("i", "I"): 2, ("i", "^"): 2, ("i", "v"): 2, ("i", "^v"): 2,
    ("k", "I"): 2, ("k", "^"): 2, ("k", "v"): 2, ("k", "^v"): 2,
    ("c", "I"): 2, ("c", "^"): 4, ("c", "v"): 4, ("c", "^v"): 4,
    ("ik", "I"): 7, ("ik", "^"): 13, ("ik", "v"): 13, ("ik", "^v"): 35,
    ("ikc", "I"): 14, ("ikc", "^"): None, ("ikc", "v"): None, ("ikc", "^v"): None,
}

TABLE2: Dict[Tuple[str, str], str] = {
    ("I", "I"): "n", ("I", "^"): "2^n-1", ("I", "v"): "2^n-1", ("I", "^v"): "D_n",
    ("i", "I"): "2n", ("i", "^"): "3^n-1", ("i", "v"): "inf", ("i", "^v"): "inf",
    ("k", "I"): "2n", ("k", "^"): "inf", ("k", "v"): "3^n-1", ("k", "^v"): "inf",
    ("c", "I"): "2n", ("c", "^"): "2^(2^n)", ("c", "v"): "2^(2^n)", ("c", "^v"): "2^(2^n)",
    ("ik", "I"): "7n", ("ik", "^"): "inf", ("ik", "v"): "inf", ("ik", "^v"): "inf",
    ("ikc", "I"): "14n", ("ikc", "^"): "inf", ("ikc", "v"): "inf", ("ikc", "^v"): "inf",
}
# fmt: on


@dataclass(frozen=True)
class CellCount:
    """A table entry: an exact count, or infinite"""

    value: Optional[int]
    formula: str

    @property
    def infinite(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


def cell_of(ops: OpSet) -> Tuple[str, str]:
    cell = (ops.row, ops.column)
    if cell not in TABLE2:
        raise UnknownOpSetError(f"Operation set {ops.label} is not a table cell")
    return cell


def closed_form_counts(n: int, ops: OpSet) -> CellCount:
    """Size of the family n generic sets generate under ops"""
    if n < 1:
        raise RangeError(f"Need at least one generator, got {n}", (1, None))
    cell = cell_of(ops)
    formula = TABLE2[cell]
    if formula == "inf":
        # one generator can be finite where several are not
        if n == 1 and TABLE1[cell] is not None:
            return CellCount(TABLE1[cell], "one generator")
        return CellCount(None, "inf")
    values = {
        "n": lambda: n,
        "2n": lambda: 2 * n,
        "7n": lambda: 7 * n,
        "14n": lambda: 14 * n,
        "2^n-1": lambda: 2**n - 1,
        "3^n-1": lambda: 3**n - 1,
        "2^(2^n)": lambda: 2 ** (2**n),
        "D_n": lambda: dedekind_count(n),
    }
    return CellCount(values[formula](), formula)


def table_grid(n: int) -> List[List[CellCount]]:
    return [[closed_form_counts(n, OpSet.from_cell(row, column)) for column in TABLE_COLUMNS] for row in TABLE_ROWS]


@lru_cache(maxsize=None)
def monotone_functions(variables: int) -> Tuple[int, ...]:
    """
    Truth tables of all monotone boolean functions, as integers

    Bit x of a table is the value at the input whose bits are x. A function
    of v variables splits on its top variable into f0 <= f1 on v - 1.
    """
    if variables == 0:
        return (0, 1)
    lower = np.array(monotone_functions(variables - 1), dtype=np.uint64)
    shift = 1 << (variables - 1)
    f0, f1 = np.meshgrid(lower, lower, indexing="ij")
    ok = (f0 & ~f1) == 0
    tables = f0[ok] | (f1[ok] << np.uint64(shift))
    return tuple(sorted(int(t) for t in tables))


def _count_pairs(tables: np.ndarray, chunk: int = 1024) -> int:
    """Number of pairs (a, b) with a <= b pointwise"""
    total = 0
    for start in range(0, len(tables), chunk):
        block = tables[start : start + chunk, None]
        total += int(np.count_nonzero((block & ~tables[None, :]) == 0))
    return total


def dedekind_count(n: int) -> int:
    """
    Size of the free distributive lattice on n generators, no empty meet or join

    The monotone functions on n variables minus the two constants. Exact
    for n <= 6; the 7-variable count would need about 10^12 comparisons.
    """
    if n < 1:
        raise RangeError(f"Dedekind counts start at n=1, got {n}", (1, DEDEKIND_CAP))
    if n > DEDEKIND_CAP:
        raise CapExceededError(f"Dedekind counts are computed for n <= {DEDEKIND_CAP}; n={n} would take days")
    if n <= 5:
        return len(monotone_functions(n)) - 2
    count = _count_pairs(np.array(monotone_functions(n - 1), dtype=np.uint64))
    logger.debug("Monotone functions on %d variables: %d", n, count)
    return count - 2


def monotone_function_count(n: int) -> int:
    """Brute force over every boolean function of n variables; an oracle for small n"""
    if not 0 <= n <= BRUTE_FORCE_CAP:
        raise CapExceededError(f"Brute-force monotone counts support n <= {BRUTE_FORCE_CAP}, got {n}")
    points = 1 << n
    functions = np.arange(1 << points, dtype=np.uint64)
    monotone = np.ones(len(functions), dtype=bool)
    for x in range(points):
        for bit in range(n):
            y = x | (1 << bit)
            if y == x:
                continue
            at_x = (functions >> np.uint64(x)) & np.uint64(1)
            at_y = (functions >> np.uint64(y)) & np.uint64(1)
            monotone &= at_x <= at_y
    return int(np.count_nonzero(monotone))
