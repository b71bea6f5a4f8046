"""
Infinite families on the prefix topology, seen at finite sizes

On prefix_space(N) the closure of A is {min A, ..., N}. Starting from the
even points E, both iterations below strip the two smallest remaining
evens per step, so step j leaves E ∩ [2j+2, N]. Growth probes saturate the
same spaces at several sizes; increasing counts are evidence of an
unbounded family, never a proof.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Sequence

from ..algebra.terms import C, K, Meet, evaluate, g
from ..core.topology import PointSet, TopSpace, prefix_space
from ..exceptions import RangeError
from .family import saturate
from .opset import OpSet

logger = logging.getLogger(__name__)

GROWTH_CAP = 2000
GROWTH_SIZES = (6, 10, 14)
MIN_PREFIX_POINTS = 4

# A ∧ k(kA ∧ cA)
PHI = Meet(g(1), K(Meet(K(g(1)), C(g(1)))))
# E ∧ k(kE ∧ O), with O bound to g2
EJ_STEP = Meet(g(1), K(Meet(K(g(1)), g(2))))


def evens(point_count: int) -> PointSet:
    return PointSet.from_points(range(2, point_count + 1, 2), point_count)


def odds(point_count: int) -> PointSet:
    return PointSet.from_points(range(1, point_count + 1, 2), point_count)


def max_steps(point_count: int) -> int:
    return (point_count - 2) // 2


def _check_steps(point_count: int, steps: int) -> None:
    if point_count < MIN_PREFIX_POINTS:
        raise RangeError(
            f"The prefix constructions need N >= {MIN_PREFIX_POINTS}, got {point_count}", (MIN_PREFIX_POINTS, None)
        )
    limit = max_steps(point_count)
    if not 1 <= steps <= limit:
        raise RangeError(f"Steps must lie in 1..{limit} for N={point_count}, got {steps}", (1, limit))


def closed_form_tail(point_count: int, step: int) -> PointSet:
    """E ∩ [2j+2, N]"""
    return PointSet.from_points(range(2 * step + 2, point_count + 1, 2), point_count)


def phi_iterate(point_count: int, steps: int) -> List[PointSet]:
    """[φ(E), φ²(E), ...] on prefix_space(N), each step by term evaluation"""
    _check_steps(point_count, steps)
    space = prefix_space(point_count)
    current = evens(point_count)
    iterates = []
    for _ in range(steps):
        current = evaluate(PHI, space, [current])
        iterates.append(current)
    return iterates


def ej_sequence(point_count: int, steps: int) -> List[PointSet]:
    """[E1, E2, ...] with E_j = E_(j-1) ∧ k(kE_(j-1) ∧ O) and E_0 = E"""
    _check_steps(point_count, steps)
    space = prefix_space(point_count)
    current = evens(point_count)
    rest = odds(point_count)
    iterates = []
    for _ in range(steps):
        current = evaluate(EJ_STEP, space, [current, rest])
        iterates.append(current)
    return iterates


@dataclass
class GrowthReport:
    """Family sizes on prefix spaces of increasing size"""

    ops: OpSet
    n_generators: int
    sizes: List[int]
    counts: List[int] = field(default_factory=list)
    truncated: List[bool] = field(default_factory=list)
    construction_available: bool = False

    @property
    def strictly_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.counts, self.counts[1:]))

    @property
    def evidence(self) -> str:
        """One-line summary; growth is evidence of an infinite family, not proof"""
        cells = ", ".join(
            f"N={size}: {count}{'+' if cut else ''}" for size, count, cut in zip(self.sizes, self.counts, self.truncated)
        )
        verdict = "growing" if self.strictly_increasing else "bounded"
        return f"growth evidence ({verdict}) at {cells}"


def construction_available(ops: OpSet, n_generators: int) -> bool:
    """Whether the ops can express one of the prefix-space constructions"""
    single = ops.use_c and (ops.use_k or ops.use_i) and ops.has_binary
    if n_generators == 1:
        return single
    return single or (ops.use_k and ops.use_meet) or (ops.use_i and ops.use_join)


def _generators(point_count: int, n_generators: int) -> List[PointSet]:
    base = [evens(point_count), odds(point_count)]
    return (base + [evens(point_count)] * n_generators)[:n_generators]


def growth_probe(
    ops: OpSet,
    n_generators: int,
    sizes: Sequence[int] = GROWTH_SIZES,
    cap: int = GROWTH_CAP,
) -> GrowthReport:
    """
    Saturate E (and O for a second generator) on prefix spaces of each size

    Runs for any ops; construction_available says whether the ops reach one
    of the known unbounded constructions.
    """
    if n_generators < 1:
        raise RangeError(f"Need at least one generator, got {n_generators}", (1, None))
    report = GrowthReport(
        ops=ops,
        n_generators=n_generators,
        sizes=list(sizes),
        construction_available=construction_available(ops, n_generators),
    )
    for size in sizes:
        space: TopSpace = prefix_space(size)
        family = saturate(space, _generators(size, n_generators), ops, cap)
        report.counts.append(len(family))
        report.truncated.append(family.truncated)
        logger.debug("Growth probe %s n=%d at N=%d: %d sets", ops.label, n_generators, size, len(family))
    return report
