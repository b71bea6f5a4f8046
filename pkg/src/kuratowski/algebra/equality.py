"""
Bounded equality and inclusion of terms

Both checks evaluate once on the universal model. A difference is reported
with the first (space, assignment) of the sweep that shows it, so the
witness space is as small as possible. Agreement is only ever reported as
"equal up to" the bound.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..core.enumeration import ENUMERATION_CAP
from ..core.models import Model, Piece, universal_model
from ..core.topology import PointSet, TopSpace
from ..exceptions import CapExceededError
from .terms import Term, evaluate, evaluate_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a bounded comparison"""

    holds: bool
    max_points: int
    space: Optional[TopSpace] = None
    assignment: Optional[Tuple[PointSet, ...]] = None
    values: Optional[Tuple[PointSet, PointSet]] = None
    relation: str = "equal"

    @property
    def conclusive(self) -> bool:
        """Only a counterexample settles the question"""
        return not self.holds

    def __str__(self) -> str:
        if self.holds:
            verb = "equal" if self.relation == "equal" else "holds"
            return f"{verb}-up-to({self.max_points}) [non-conclusive]"
        assert self.space is not None and self.assignment is not None and self.values is not None
        n = self.space.point_count
        closures = " ".join(f"k{{{y + 1}}}={PointSet(col, n)}" for y, col in enumerate(self.space.columns))
        sets = ", ".join(f"g{j + 1}={s}" for j, s in enumerate(self.assignment))
        return (
            f"distinguished-by({n}-point space [{closures}]; "
            f"{sets}; values {self.values[0]} vs {self.values[1]})"
        )


def _witness(piece: Piece, s: Term, t: Term, max_points: int, relation: str = "equal") -> Verdict:
    values = (evaluate(s, piece.space, piece.assignment), evaluate(t, piece.space, piece.assignment))
    return Verdict(
        holds=False, max_points=max_points, space=piece.space, assignment=piece.assignment, values=values, relation=relation
    )


def _evaluate_both(s: Term, t: Term, max_points: int, cap: int) -> Tuple[int, int, Model]:
    if not 1 <= max_points <= cap:
        raise CapExceededError(f"Equality checks support 1..{cap} points, got {max_points}")
    n = max(s.generator_count, t.generator_count, 1)
    model = universal_model(n, max_points)
    first = evaluate_bits(s, model.space, model.assignment)
    second = evaluate_bits(t, model.space, model.assignment)
    return first, second, model


def term_equal(s: Term, t: Term, max_points: int, cap: int = ENUMERATION_CAP) -> Verdict:
    """Compare two terms on every space with at most max_points points"""
    first, second, model = _evaluate_both(s, t, max_points, cap)
    piece = model.first_difference(first, second)
    if piece is None:
        logger.debug("%s = %s on spaces up to %d points", s, t, max_points)
        return Verdict(holds=True, max_points=max_points)
    return _witness(piece, s, t, max_points)


def term_leq(s: Term, t: Term, max_points: int, cap: int = ENUMERATION_CAP) -> Verdict:
    """Check s <= t pointwise on every space with at most max_points points"""
    first, second, model = _evaluate_both(s, t, max_points, cap)
    excess = first & ~second
    piece = model.first_difference(excess, 0)
    if piece is None:
        return Verdict(holds=True, max_points=max_points, relation="leq")
    return _witness(piece, s, t, max_points, relation="leq")
