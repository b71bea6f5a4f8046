"""
Saturation: the family of sets reachable from initial sets under an OpSet

Sets are finalized in increasing order of their cheapest witness term, the
way a shortest-path search settles vertices, so every recorded witness is
minimal in the term order (size, node kind, children). A candidate is keyed
by the finalization ranks of its children, which agree with the term order
of their witnesses.
"""

import heapq
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from ..algebra.terms import C, Generator, Iop, Join, K, Kind, Meet, Term
from ..core.topology import PointSet, TopSpace
from ..exceptions import DimensionError, RangeError
from .opset import OpSet

logger = logging.getLogger(__name__)

DEFAULT_CAP = 10000

# (size, kind, child ranks, bits)
_Candidate = Tuple[int, int, Tuple[int, ...], int]

_UNARY = ((Kind.CLOSURE, "use_k"), (Kind.INTERIOR, "use_i"), (Kind.COMPLEMENT, "use_c"))


@dataclass(frozen=True)
class FamilyEntry:
    set: PointSet
    witness: Term


@dataclass
class Family:
    """Distinct sets with their minimal witness terms, in finalization order"""

    space: TopSpace
    ops: OpSet
    entries: List[FamilyEntry] = field(default_factory=list)
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[FamilyEntry]:
        return iter(self.entries)

    def sets(self) -> List[PointSet]:
        return [entry.set for entry in self.entries]

    def witness_for(self, point_set: PointSet) -> Optional[Term]:
        for entry in self.entries:
            if entry.set == point_set:
                return entry.witness
        return None

    def to_json(self, space_ref: Optional[Any] = None) -> Dict[str, Any]:
        """Family file format; the space is inlined unless a reference is given"""
        return {
            "metadata": {
                "space": space_ref if space_ref is not None else self.space.to_json(),
                "ops": self.ops.label,
                "count": len(self.entries),
                "truncated": self.truncated,
            },
            "family": [{"set": entry.set.points(), "witness": str(entry.witness)} for entry in self.entries],
        }


def saturate_bits(
    space: TopSpace, initial: Sequence[int], ops: OpSet, cap: int = DEFAULT_CAP
) -> Tuple[List[Tuple[int, Term]], bool]:
    """Core loop on raw masks; returns ((bits, witness) pairs, truncated)"""
    heap: List[_Candidate] = []
    best: Dict[int, Tuple[int, int, Tuple[int, ...]]] = {}

    def push(size: int, kind: int, ranks: Tuple[int, ...], bits: int) -> None:
        if bits in finalized:
            return
        key = (size, kind, ranks)
        current = best.get(bits)
        if current is not None and current <= key:
            return
        best[bits] = key
        heapq.heappush(heap, (size, kind, ranks, bits))

    finalized: Dict[int, int] = {}
    found: List[Tuple[int, Term]] = []
    sizes: List[int] = []
    unary = [kind for kind, flag in _UNARY if getattr(ops, flag)]

    for j, bits in enumerate(initial, start=1):
        push(1, Kind.GENERATOR, (j,), bits)

    truncated = False
    while heap:
        size, kind, ranks, bits = heapq.heappop(heap)
        if bits in finalized:
            continue
        if len(found) >= cap:
            truncated = True
            break

        term = _build(kind, ranks, found)
        rank = len(found)
        finalized[bits] = rank
        found.append((bits, term))
        sizes.append(size)

        for unary_kind in unary:
            if unary_kind == Kind.CLOSURE:
                image = space.close_bits(bits)
            elif unary_kind == Kind.INTERIOR:
                image = space.interior_bits(bits)
            else:
                image = space.full_bits ^ bits
            push(size + 1, unary_kind, (rank,), image)

        if ops.has_binary:
            for other_rank in range(rank):
                other_bits = found[other_rank][0]
                joint = sizes[other_rank] + size + 1
                if ops.use_meet:
                    push(joint, Kind.MEET, (other_rank, rank), other_bits & bits)
                if ops.use_join:
                    push(joint, Kind.JOIN, (other_rank, rank), other_bits | bits)

    if truncated:
        logger.info("Saturation stopped at the cap of %d sets (ops %s)", cap, ops.label)
    return found, truncated


def _build(kind: int, ranks: Tuple[int, ...], found: List[Tuple[int, Term]]) -> Term:
    if kind == Kind.GENERATOR:
        return Generator(ranks[0])
    children = [found[r][1] for r in ranks]
    if kind == Kind.CLOSURE:
        return K(children[0])
    if kind == Kind.INTERIOR:
        return Iop(children[0])
    if kind == Kind.COMPLEMENT:
        return C(children[0])
    if kind == Kind.MEET:
        return Meet(children[0], children[1])
    return Join(children[0], children[1])


def saturate(space: TopSpace, initial: Sequence[PointSet], ops: OpSet, cap: int = DEFAULT_CAP) -> Family:
    """
    Close the initial sets under the enabled operations

    Stops with the truncation flag set once cap sets are finalized and
    another new set is still pending.
    """
    if not initial:
        raise ValueError("Saturation needs at least one initial set")
    if cap < 1:
        raise RangeError(f"Saturation cap must be positive, got {cap}", (1, None))
    for s in initial:
        if s.size != space.point_count:
            raise DimensionError(f"Initial set of size {s.size} used with a {space.point_count}-point space")

    found, truncated = saturate_bits(space, [s.bits for s in initial], ops, cap)
    entries = [FamilyEntry(PointSet(bits, space.point_count), term) for bits, term in found]
    return Family(space=space, ops=ops, entries=entries, truncated=truncated)
