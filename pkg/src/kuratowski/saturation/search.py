"""
Searches for the largest family an OpSet can generate

Two strategies:

- sweep: saturate every (space, assignment) of the sweep separately and keep
  the best single space (max_over_spaces).
- sum: saturate once on the universal model, then keep just enough of its
  pieces to separate every set (sum_witness). The result is one finite
  space, a disjoint sum of small pieces, so counts that need more points
  than the enumeration cap are still reached.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..core.enumeration import ENUMERATION_CAP
from ..core.models import iter_pieces, universal_model
from ..core.topology import PointSet, TopSpace, concat_sets, disjoint_sum, iter_assignments
from ..exceptions import CapExceededError, RangeError
from .family import DEFAULT_CAP, Family, saturate, saturate_bits
from .opset import OpSet

logger = logging.getLogger(__name__)

_Task = Tuple[TopSpace, Tuple[PointSet, ...]]


@dataclass
class SearchResult:
    """Best count found, with the space and assignment that achieve it"""

    count: int
    space: TopSpace
    assignment: Tuple[PointSet, ...]
    family: Family
    max_points: int
    method: str
    pieces: List[int] = field(default_factory=list)

    @property
    def truncated(self) -> bool:
        return self.family.truncated


def _check_search(n_generators: int, max_points: int) -> None:
    if n_generators < 1:
        raise RangeError(f"Need at least one generator, got {n_generators}", (1, None))
    if not 1 <= max_points <= ENUMERATION_CAP:
        raise CapExceededError(f"Searches cover spaces of 1..{ENUMERATION_CAP} points, got {max_points}")


def _count(task: Tuple[_Task, OpSet, int]) -> int:
    (space, assignment), ops, cap = task
    found, _ = saturate_bits(space, [s.bits for s in assignment], ops, cap)
    return len(found)


def max_over_spaces(
    ops: OpSet,
    n_generators: int,
    max_points: int,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    spaces: Optional[Sequence[TopSpace]] = None,
) -> SearchResult:
    """
    Largest family over every space up to max_points and every assignment

    Ties go to the earliest (space, assignment) in sweep order. With
    spaces given, only those spaces are swept and max_points is ignored.
    """
    if spaces is None:
        _check_search(n_generators, max_points)
        tasks: List[_Task] = iter_pieces(n_generators, max_points)
    else:
        _check_search(n_generators, 1)
        tasks = [(space, assignment) for space in spaces for assignment in iter_assignments(space.point_count, n_generators)]

    payload = [(task, ops, cap) for task in tasks]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            counts = list(executor.map(_count, payload, chunksize=64))
    else:
        counts = [_count(item) for item in payload]

    best_index = min(range(len(counts)), key=lambda index: (-counts[index], index))
    space, assignment = tasks[best_index]
    logger.info("Swept %d (space, assignment) pairs for ops %s; best count %d", len(tasks), ops.label, counts[best_index])
    family = saturate(space, assignment, ops, cap)
    return SearchResult(
        count=len(family),
        space=space,
        assignment=assignment,
        family=family,
        max_points=max_points,
        method="sweep",
        pieces=[best_index],
    )


def sum_witness(ops: OpSet, n_generators: int, max_points: int, cap: int = DEFAULT_CAP) -> SearchResult:
    """
    Maximal family over all spaces up to max_points, realized on one space

    Pieces are kept in sweep order whenever they split two sets that no
    earlier kept piece tells apart.
    """
    _check_search(n_generators, max_points)
    model = universal_model(n_generators, max_points)
    found, truncated = saturate_bits(model.space, model.assignment, ops, cap)
    masks = [bits for bits, _ in found]

    kept = []
    classes = 1
    signatures: List[tuple] = [() for _ in masks]
    for piece in model.pieces:
        if classes == len(masks):
            break
        refined = [sig + ((bits >> piece.offset) & piece.space.full_bits,) for sig, bits in zip(signatures, masks)]
        distinct = len(set(refined))
        if distinct > classes:
            kept.append(piece)
            signatures = refined
            classes = distinct
    if not kept:
        kept.append(model.pieces[0])

    space, offsets = disjoint_sum([piece.space for piece in kept])
    assignment = tuple(
        concat_sets([piece.assignment[j] for piece in kept], offsets, space.point_count) for j in range(n_generators)
    )
    family = saturate(space, assignment, ops, cap)
    logger.info(
        "Sum witness for ops %s: %d of %d pieces, %d points, count %d",
        ops.label,
        len(kept),
        len(model.pieces),
        space.point_count,
        len(family),
    )
    if not truncated and len(family) != len(found):
        raise RuntimeError(f"Witness space lost sets: {len(family)} != {len(found)}")
    return SearchResult(
        count=len(family),
        space=space,
        assignment=assignment,
        family=family,
        max_points=max_points,
        method="sum",
        pieces=[piece.index for piece in kept],
    )
