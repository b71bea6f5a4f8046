"""
Finite topological spaces and the five set operations
Points are 0-indexed internally, 1-indexed in all I/O
"""

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import sparse

from ..exceptions import DimensionError, InvalidSpaceError, RangeError

logger = logging.getLogger(__name__)

# Above this many points closure runs as a sparse matrix-vector product
SPARSE_THRESHOLD = 64

DEFAULT_EXHAUSTIVE_POINTS = 12
DEFAULT_SAMPLES = 200


@dataclass(frozen=True)
class PointSet:
    """A subset of a space's points, stored as a bit vector (bit x = point x + 1)"""

    bits: int
    size: int

    def __post_init__(self) -> None:
        """Validate inputs"""
        if self.size < 1:
            raise DimensionError("A point set needs a space with at least one point")
        if self.bits < 0 or self.bits >> self.size:
            raise DimensionError(f"Bits {self.bits:#x} do not fit in {self.size} points")

    @classmethod
    def from_points(cls, points: Iterable[int], size: int) -> "PointSet":
        """Build from 1-indexed point labels"""
        bits = 0
        for point in points:
            if not 1 <= point <= size:
                raise DimensionError(f"Point {point} outside 1..{size}")
            bits |= 1 << (point - 1)
        return cls(bits, size)

    @classmethod
    def empty(cls, size: int) -> "PointSet":
        return cls(0, size)

    @classmethod
    def full(cls, size: int) -> "PointSet":
        return cls((1 << size) - 1, size)

    def points(self) -> List[int]:
        """Members as sorted 1-indexed labels"""
        return [x + 1 for x in range(self.size) if self.bits >> x & 1]

    def issubset(self, other: "PointSet") -> bool:
        _check_same_size(self, other)
        return self.bits & ~other.bits == 0

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, point: object) -> bool:
        return isinstance(point, int) and 1 <= point <= self.size and bool(self.bits >> (point - 1) & 1)

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.points()) + "}"


class TopSpace:
    """
    A finite topological space given by its specialization relation

    spec[x][y] is True when point x lies in the closure of {y}; the closure
    of a set is the image of the set under this relation.
    """

    def __init__(self, spec: Union[np.ndarray, Sequence[Sequence[bool]], sparse.spmatrix]):
        if sparse.issparse(spec):
            matrix = sparse.csr_matrix(spec).astype(np.int32)
        else:
            dense = np.asarray(spec, dtype=bool)
            if dense.ndim != 2:
                raise InvalidSpaceError(f"Specialization matrix must be 2-dimensional, got shape {dense.shape}")
            matrix = sparse.csr_matrix(dense.astype(np.int32))

        if matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 1:
            raise InvalidSpaceError(f"Specialization matrix must be square and non-empty, got shape {matrix.shape}")

        matrix.eliminate_zeros()
        matrix.sort_indices()
        matrix.data[:] = 1

        self._matrix = matrix
        self.point_count = int(matrix.shape[0])
        self.full_bits = (1 << self.point_count) - 1
        self._columns: Optional[Tuple[int, ...]] = None

    @property
    def spec(self) -> np.ndarray:
        """Dense boolean specialization matrix"""
        return self._matrix.toarray().astype(bool)

    @property
    def matrix(self) -> sparse.csr_matrix:
        return self._matrix

    @property
    def columns(self) -> Tuple[int, ...]:
        """Closure of each singleton as a bit mask"""
        if self._columns is None:
            csc = self._matrix.tocsc()
            csc.sort_indices()
            columns = []
            for y in range(self.point_count):
                mask = 0
                for x in csc.indices[csc.indptr[y] : csc.indptr[y + 1]]:
                    mask |= 1 << int(x)
                columns.append(mask)
            self._columns = tuple(columns)
        return self._columns

    def close_bits(self, bits: int) -> int:
        """Closure on raw bit masks"""
        if self.point_count <= SPARSE_THRESHOLD:
            out = 0
            columns = self.columns
            while bits:
                low = bits & -bits
                out |= columns[low.bit_length() - 1]
                bits ^= low
            return out

        image = self._matrix @ _bits_to_vector(bits, self.point_count)
        return _vector_to_bits(image > 0)

    def interior_bits(self, bits: int) -> int:
        """Interior on raw bit masks (i = ckc)"""
        return self.full_bits ^ self.close_bits(self.full_bits ^ bits)

    def to_json(self) -> Dict[str, Any]:
        return {"points": self.point_count, "closure": self.spec.tolist()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TopSpace) or other.point_count != self.point_count:
            return False
        return (self._matrix != other._matrix).nnz == 0

    def __hash__(self) -> int:
        return hash((self.point_count, self._matrix.indices.tobytes(), self._matrix.indptr.tobytes()))

    def __repr__(self) -> str:
        return f"TopSpace(points={self.point_count}, relations={self._matrix.nnz})"


def _bits_to_vector(bits: int, size: int) -> np.ndarray:
    raw = np.frombuffer(bits.to_bytes((size + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size]


def _vector_to_bits(vector: np.ndarray) -> int:
    return int.from_bytes(np.packbits(vector.astype(np.uint8), bitorder="little").tobytes(), "little")


def _check_same_size(*sets: PointSet) -> None:
    sizes = {s.size for s in sets}
    if len(sizes) > 1:
        raise DimensionError(f"Point sets come from different spaces (sizes {sorted(sizes)})")


def _check(space: TopSpace, *sets: PointSet) -> None:
    for s in sets:
        if s.size != space.point_count:
            raise DimensionError(f"Point set of size {s.size} used with a {space.point_count}-point space")


def closure(space: TopSpace, a: PointSet) -> PointSet:
    """Smallest closed set containing a"""
    _check(space, a)
    return PointSet(space.close_bits(a.bits), space.point_count)


def interior(space: TopSpace, a: PointSet) -> PointSet:
    """Largest open set inside a"""
    _check(space, a)
    return PointSet(space.interior_bits(a.bits), space.point_count)


def complement(space: TopSpace, a: PointSet) -> PointSet:
    _check(space, a)
    return PointSet(space.full_bits ^ a.bits, space.point_count)


def meet(space: TopSpace, a: PointSet, b: PointSet) -> PointSet:
    _check(space, a, b)
    return PointSet(a.bits & b.bits, space.point_count)


def join(space: TopSpace, a: PointSet, b: PointSet) -> PointSet:
    _check(space, a, b)
    return PointSet(a.bits | b.bits, space.point_count)


@dataclass(frozen=True)
class Violation:
    """One failed axiom with the subsets that witness it"""

    axiom: str
    detail: str
    witnesses: Tuple[PointSet, ...] = ()


@dataclass
class ValidationReport:
    """Result of validate_space; never raised, always returned"""

    point_count: int
    exhaustive: bool
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def axioms_violated(self) -> List[str]:
        return sorted({v.axiom for v in self.violations})

    def summary(self) -> str:
        mode = "exhaustive" if self.exhaustive else "sampled"
        if self.valid:
            return f"valid ({self.point_count} points, {mode} axiom check)"
        lines = [f"invalid ({self.point_count} points, {mode} axiom check)"]
        lines += [f"  {v.axiom}: {v.detail}" for v in self.violations]
        return "\n".join(lines)


def validate_space(
    space: TopSpace,
    exhaustive_points: int = DEFAULT_EXHAUSTIVE_POINTS,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> ValidationReport:
    """
    Check reflexivity, transitivity and the four Kuratowski axioms

    Up to exhaustive_points every subset is tried; additivity is checked as
    k(A ∪ {y}) = kA ∪ k{y} for every A and y, which by induction is the same
    as k(A ∪ B) = kA ∪ kB for all pairs. Above the bound, random pairs are drawn.
    """
    n = space.point_count
    report = ValidationReport(point_count=n, exhaustive=n <= exhaustive_points)
    matrix = space.matrix
    seen = set()

    def record(axiom: str, detail: str, *witnesses: int) -> None:
        if axiom in seen:
            return
        seen.add(axiom)
        report.violations.append(Violation(axiom, detail, tuple(PointSet(w, n) for w in witnesses)))

    missing = np.flatnonzero(matrix.diagonal() == 0)
    if missing.size:
        x = int(missing[0])
        record("reflexivity", f"point {x + 1} is not in the closure of {{{x + 1}}}", 1 << x)

    square = (matrix @ matrix).tocsr()
    square.data[:] = 1
    extra = square - square.multiply(matrix)
    extra.eliminate_zeros()
    if extra.nnz:
        coo = extra.tocoo()
        x, z = int(coo.row[0]), int(coo.col[0])
        middle = set(matrix.getrow(x).indices) & set(matrix.getcol(z).nonzero()[0])
        y = min(int(v) for v in middle)
        record(
            "transitivity",
            f"point {x + 1} is in k{{{y + 1}}} and {y + 1} is in k{{{z + 1}}}, but {x + 1} is not in k{{{z + 1}}}",
            1 << z,
        )

    if space.close_bits(0) != 0:
        record("empty-closure", "closure of the empty set is not empty", 0)

    def check_one(a: int) -> None:
        ka = space.close_bits(a)
        if a & ~ka:
            record("extensivity", "set is not contained in its closure", a)
        if space.close_bits(ka) != ka:
            record("idempotence", "closure of the closure differs from the closure", a)

    if report.exhaustive:
        singles = [space.close_bits(1 << y) for y in range(n)]
        for a in range(1 << n):
            check_one(a)
            ka = space.close_bits(a)
            for y in range(n):
                if space.close_bits(a | 1 << y) != ka | singles[y]:
                    record("additivity", "closure of a union differs from the union of closures", a, 1 << y)
                    break
    else:
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            a = _vector_to_bits(rng.integers(0, 2, size=n))
            b = _vector_to_bits(rng.integers(0, 2, size=n))
            check_one(a)
            if space.close_bits(a | b) != space.close_bits(a) | space.close_bits(b):
                record("additivity", "closure of a union differs from the union of closures", a, b)

    if report.violations:
        logger.debug("Space with %d points failed: %s", n, ", ".join(report.axioms_violated()))
    return report


def prefix_space(point_count: int) -> TopSpace:
    """Points 1..N with closure(A) = {min A, ..., N}"""
    if point_count < 1:
        raise RangeError(f"Prefix space needs at least one point, got {point_count}", (1, None))
    return TopSpace(np.tril(np.ones((point_count, point_count), dtype=bool)))


def discrete_space(point_count: int) -> TopSpace:
    return TopSpace(np.eye(point_count, dtype=bool))


def indiscrete_space(point_count: int) -> TopSpace:
    return TopSpace(np.ones((point_count, point_count), dtype=bool))


def disjoint_sum(spaces: Sequence[TopSpace]) -> Tuple[TopSpace, List[int]]:
    """Topological sum; returns the space and each summand's first point index"""
    if not spaces:
        raise DimensionError("A disjoint sum needs at least one summand")
    offsets = []
    position = 0
    for space in spaces:
        offsets.append(position)
        position += space.point_count
    total = sparse.block_diag([space.matrix for space in spaces], format="csr")
    return TopSpace(total), offsets


def concat_sets(sets: Sequence[PointSet], offsets: Sequence[int], total: int) -> PointSet:
    """Place summand subsets into a disjoint sum"""
    bits = 0
    for s, offset in zip(sets, offsets):
        bits |= s.bits << offset
    return PointSet(bits, total)


@lru_cache(maxsize=None)
def subset_order(point_count: int) -> Tuple[int, ...]:
    """All subset masks, increasing popcount then numeric value"""
    return tuple(sorted(range(1 << point_count), key=lambda bits: (bin(bits).count("1"), bits)))


def iter_subsets(point_count: int) -> Iterator[PointSet]:
    for bits in subset_order(point_count):
        yield PointSet(bits, point_count)


def iter_assignments(point_count: int, n_generators: int) -> Iterator[Tuple[PointSet, ...]]:
    """Every tuple of n_generators subsets, lexicographic in subset order"""
    order = subset_order(point_count)
    for combo in product(order, repeat=n_generators):
        yield tuple(PointSet(bits, point_count) for bits in combo)


def space_from_json(data: Dict[str, Any]) -> TopSpace:
    """Build a space from the JSON file schema (no validation)"""
    try:
        points = int(data["points"])
        rows = data["closure"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSpaceError(f"Space JSON needs 'points' and 'closure': {exc}") from None
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise InvalidSpaceError("Closure must be a list of rows")
    if len(rows) != points or any(len(row) != points for row in rows):
        raise InvalidSpaceError(f"Closure matrix must be {points}x{points}")
    if not all(isinstance(entry, (bool, int)) for row in rows for entry in row):
        raise InvalidSpaceError("Closure entries must be true/false or 0/1")
    return TopSpace(np.array(rows, dtype=bool))


def read_space(
    path: Union[str, Path],
    exhaustive_points: int = DEFAULT_EXHAUSTIVE_POINTS,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> TopSpace:
    """Read a space file and reject it unless validate_space passes"""
    with open(path) as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise InvalidSpaceError(f"Space file {path} is not JSON: {exc}") from None
    space = space_from_json(data)
    report = validate_space(space, exhaustive_points=exhaustive_points, samples=samples, seed=seed)
    if not report.valid:
        raise InvalidSpaceError(f"Space file {path} is not a topology:\n{report.summary()}", report)
    return space


def write_space(space: TopSpace, path: Union[str, Path]) -> None:
    with open(path, "w") as f:
        json.dump(space.to_json(), f, indent=2)
        f.write("\n")
