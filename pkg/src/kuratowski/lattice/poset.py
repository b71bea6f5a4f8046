"""
Posets of operations, ordered by evaluation

s <= t when s(A) is contained in t(A) for every space up to the bound and
every assignment. The covering relation comes from networkx's transitive
reduction.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import DiGraphMatcher

from ..algebra.parser import format_term
from ..algebra.terms import Term, evaluate_bits
from ..core.enumeration import ENUMERATION_CAP
from ..core.models import universal_model
from ..exceptions import CapExceededError, NotAntisymmetricError

logger = logging.getLogger(__name__)

DEFAULT_ORDER_POINTS = 5


@dataclass
class OperationPoset:
    """Elements, their order matrix and covering pairs (lower, upper)"""

    elements: List[Term]
    leq: np.ndarray
    hasse: List[Tuple[int, int]]
    labels: List[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.labels:
            self.labels = [format_term(term, compact=True) for term in self.elements]

    def __len__(self) -> int:
        return len(self.elements)

    def graph(self) -> nx.DiGraph:
        """Hasse diagram, edges pointing up"""
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.elements)))
        g.add_edges_from(self.hasse)
        return g

    def covers_by_label(self) -> Set[Tuple[str, str]]:
        return {(self.labels[a], self.labels[b]) for a, b in self.hasse}

    def upper_covers(self, index: int) -> List[int]:
        return sorted(b for a, b in self.hasse if a == index)

    def minimal(self) -> List[int]:
        return [b for b in range(len(self)) if not any(self.leq[a, b] for a in range(len(self)) if a != b)]

    def maximal(self) -> List[int]:
        return [a for a in range(len(self)) if not any(self.leq[a, b] for b in range(len(self)) if a != b)]


def hasse_from_leq(leq: np.ndarray) -> List[Tuple[int, int]]:
    """Covering pairs of an order matrix"""
    strict = leq & ~np.eye(len(leq), dtype=bool)
    g = nx.DiGraph()
    g.add_nodes_from(range(len(leq)))
    g.add_edges_from(zip(*(axis.tolist() for axis in np.nonzero(strict))))
    return sorted(nx.transitive_reduction(g).edges())


def term_masks(terms: Sequence[Term], max_points: int) -> List[int]:
    """Evaluations of each term on the universal model at this bound"""
    if not 1 <= max_points <= ENUMERATION_CAP:
        raise CapExceededError(f"Order checks support 1..{ENUMERATION_CAP} points, got {max_points}")
    n = max((term.generator_count for term in terms), default=1) or 1
    model = universal_model(n, max_points)
    return [evaluate_bits(term, model.space, model.assignment) for term in terms]


def build_order(
    terms: Sequence[Term], max_points: int = DEFAULT_ORDER_POINTS, labels: Optional[Sequence[str]] = None
) -> OperationPoset:
    """
    Order terms by evaluation on every space up to max_points

    Two terms that agree everywhere at the bound are an error: the order
    would not be antisymmetric.
    """
    terms = list(terms)
    names = list(labels) if labels is not None else [format_term(term, compact=True) for term in terms]
    masks = term_masks(terms, max_points)
    size = len(terms)

    leq = np.zeros((size, size), dtype=bool)
    for a in range(size):
        for b in range(size):
            leq[a, b] = masks[a] & ~masks[b] == 0

    for a in range(size):
        for b in range(a + 1, size):
            if leq[a, b] and leq[b, a]:
                raise NotAntisymmetricError(names[a], names[b], max_points)

    hasse = hasse_from_leq(leq)
    logger.debug("Order on %d terms at %d points: %d covers", size, max_points, len(hasse))
    return OperationPoset(elements=terms, leq=leq, hasse=hasse, labels=names)


def order_isomorphism(first: OperationPoset, second: OperationPoset) -> Optional[Dict[int, int]]:
    """An order-preserving bijection between two posets, if one exists"""
    if len(first) != len(second) or len(first.hasse) != len(second.hasse):
        return None
    matcher = DiGraphMatcher(first.graph(), second.graph())
    for mapping in matcher.isomorphisms_iter():
        return dict(sorted(mapping.items()))
    return None
