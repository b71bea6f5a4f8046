"""
Hereditary subsets (down-sets) of a finite poset
"""

import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from ..algebra.terms import Term, dual, meet_all
from .poset import OperationPoset, hasse_from_leq

logger = logging.getLogger(__name__)


def _popcount(bits: int) -> int:
    return bin(bits).count("1")


@dataclass
class DownSetLattice:
    """
    Every down-set of a base poset as a bit mask over base indices

    Ordered by inclusion the down-sets form a distributive lattice with
    union as join and intersection as meet.
    """

    base: OperationPoset
    elements: List[int]

    @property
    def nonempty(self) -> List[int]:
        return [mask for mask in self.elements if mask]

    @property
    def total_count(self) -> int:
        return len(self.elements)

    @property
    def nonempty_count(self) -> int:
        return len(self.nonempty)

    def meet(self, a: int, b: int) -> int:
        return a & b

    def join(self, a: int, b: int) -> int:
        return a | b

    def members(self, mask: int) -> List[int]:
        return [x for x in range(len(self.base)) if mask >> x & 1]

    def maximal_members(self, mask: int) -> List[int]:
        members = self.members(mask)
        return [x for x in members if not any(self.base.leq[x, y] for y in members if y != x)]

    def representative(self, mask: int) -> Term:
        """
        Meet of the duals of the maximal members

        Larger down-sets give smaller meets, so this is order-reversing;
        for the (k, i) poset it lands on the (k, i, ^) element the
        down-set stands for.
        """
        duals = sorted(dual(self.base.elements[x]) for x in self.maximal_members(mask))
        return meet_all(duals)

    def to_poset(self) -> OperationPoset:
        """Nonempty down-sets ordered by reverse inclusion, with representatives"""
        masks = self.nonempty
        size = len(masks)
        leq = np.zeros((size, size), dtype=bool)
        for a, first in enumerate(masks):
            for b, second in enumerate(masks):
                leq[a, b] = second & ~first == 0
        return OperationPoset(
            elements=[self.representative(mask) for mask in masks],
            leq=leq,
            hasse=hasse_from_leq(leq),
        )


def hereditary_subsets(base: OperationPoset) -> DownSetLattice:
    """All down-sets of base, including the empty one, by increasing size"""
    size = len(base)
    below = [sum(1 << a for a in range(size) if a != b and base.leq[a, b]) for b in range(size)]
    # a linear extension: fewer elements below first
    order = sorted(range(size), key=lambda x: (_popcount(below[x]), x))

    found: List[int] = []

    def extend(position: int, mask: int) -> None:
        if position == size:
            found.append(mask)
            return
        x = order[position]
        extend(position + 1, mask)
        if below[x] & ~mask == 0:
            extend(position + 1, mask | 1 << x)

    extend(0, 0)
    found.sort(key=lambda mask: (_popcount(mask), mask))
    logger.debug("Poset of %d elements has %d down-sets", size, len(found))
    return DownSetLattice(base=base, elements=found)
