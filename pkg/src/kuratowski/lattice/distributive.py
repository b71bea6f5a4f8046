"""
The distributive lattice generated by a meet-closed family of operations

Every element is an irredundant join of base elements, that is a join over
an antichain of the base poset. Antichains are enumerated as the maximal
members of nonempty down-sets, joined in evaluation, and deduplicated by
their evaluation masks.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from ..algebra.terms import Term, join_all
from .downsets import hereditary_subsets
from .poset import DEFAULT_ORDER_POINTS, build_order, term_masks

logger = logging.getLogger(__name__)


@dataclass
class DistributiveClosure:
    """Lattice elements with canonical join-of-meets representatives"""

    elements: List[Term]
    masks: List[int]
    max_points: int
    collisions: List[Tuple[Term, Term]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.elements)


def distributive_closure(base_terms: Sequence[Term], max_points: int = DEFAULT_ORDER_POINTS) -> DistributiveClosure:
    """
    Close a meet-closed family of terms under joins

    A join that evaluates like an earlier one is not added; the pair is
    kept in collisions so callers can see which joins were merged at this
    bound. Elements come out ordered by antichain length, then term order.
    """
    base = build_order(base_terms, max_points)
    downsets = hereditary_subsets(base)
    base_masks = term_masks(base.elements, max_points)

    candidates = []
    for downset in downsets.nonempty:
        antichain = sorted(downsets.maximal_members(downset), key=lambda x: base.elements[x].sort_key)
        mask = 0
        for x in antichain:
            mask |= base_masks[x]
        term = join_all(base.elements[x] for x in antichain)
        candidates.append((len(antichain), term.sort_key, term, mask))
    candidates.sort(key=lambda item: (item[0], item[1]))

    closure = DistributiveClosure(elements=[], masks=[], max_points=max_points)
    seen = {}
    for _, _, term, mask in candidates:
        if mask in seen:
            closure.collisions.append((seen[mask], term))
            logger.debug("%s evaluates like %s at %d points", term, seen[mask], max_points)
            continue
        seen[mask] = term
        closure.elements.append(term)
        closure.masks.append(mask)

    if closure.collisions:
        logger.warning(
            "%d join(s) coincide with earlier elements at %d points and were merged", len(closure.collisions), max_points
        )
    logger.info("Distributive closure of %d terms: %d elements", len(base_terms), len(closure.elements))
    return closure
