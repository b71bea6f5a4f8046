"""
The universal test model: every small space with every assignment, side by side

Evaluating a term once on this disjoint sum is the same as evaluating it on
every (space, assignment) piece of the sweep, so two terms differ at the
bound exactly when their masks differ here.
"""

import bisect
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from .enumeration import ENUMERATION_CAP, spaces_up_to
from .topology import PointSet, TopSpace, disjoint_sum, iter_assignments

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Piece:
    """One (space, assignment) of the sweep and where it sits in the sum"""

    index: int
    space: TopSpace
    assignment: Tuple[PointSet, ...]
    offset: int

    def restrict(self, bits: int) -> PointSet:
        """The part of a sum-space mask that lies on this piece"""
        return PointSet((bits >> self.offset) & self.space.full_bits, self.space.point_count)


@dataclass(frozen=True)
class Model:
    """A disjoint sum of pieces together with the assignment it induces"""

    space: TopSpace
    assignment: Tuple[int, ...]
    pieces: Tuple[Piece, ...]
    max_points: int

    @property
    def n_generators(self) -> int:
        return len(self.assignment)

    def piece_at(self, point: int) -> Piece:
        """Piece containing a 0-indexed point of the sum"""
        offsets = [p.offset for p in self.pieces]
        return self.pieces[bisect.bisect_right(offsets, point) - 1]

    def first_difference(self, first: int, second: int) -> Optional[Piece]:
        """Earliest piece, in sweep order, on which two masks differ"""
        diff = first ^ second
        if not diff:
            return None
        return self.piece_at((diff & -diff).bit_length() - 1)


def iter_pieces(n_generators: int, max_points: int, cap: int = ENUMERATION_CAP) -> List[Tuple[TopSpace, Tuple[PointSet, ...]]]:
    """Sweep order: space size, then space, then assignment"""
    pieces = []
    for space in spaces_up_to(max_points, dedup=True, cap=cap):
        for assignment in iter_assignments(space.point_count, n_generators):
            pieces.append((space, assignment))
    return pieces


def build_model(sweep: List[Tuple[TopSpace, Tuple[PointSet, ...]]], n_generators: int, max_points: int) -> Model:
    """Disjoint sum of the given pieces"""
    space, offsets = disjoint_sum([s for s, _ in sweep])
    assignment = [0] * n_generators
    pieces = []
    for index, ((piece_space, sets), offset) in enumerate(zip(sweep, offsets)):
        pieces.append(Piece(index, piece_space, sets, offset))
        for j, s in enumerate(sets):
            assignment[j] |= s.bits << offset
    return Model(space=space, assignment=tuple(assignment), pieces=tuple(pieces), max_points=max_points)


@lru_cache(maxsize=8)
def universal_model(n_generators: int, max_points: int) -> Model:
    """Sum of every representative space up to max_points under every assignment"""
    sweep = iter_pieces(n_generators, max_points)
    model = build_model(sweep, n_generators, max_points)
    logger.info(
        "Universal model for %d generator(s) up to %d points: %d pieces, %d points",
        n_generators,
        max_points,
        len(model.pieces),
        model.space.point_count,
    )
    return model
