"""
Terms over the closure-algebra signature {k, i, c, ^, v, g1..gn}
"""

from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property, reduce
from typing import ClassVar, Dict, Iterable, Optional, Sequence, Tuple

from ..core.topology import PointSet, TopSpace
from ..exceptions import ArityError, DimensionError


class Kind(IntEnum):
    """Node kinds, in minimal-witness tie-break order"""

    GENERATOR = 0
    CLOSURE = 1
    INTERIOR = 2
    COMPLEMENT = 3
    MEET = 4
    JOIN = 5


class Term:
    """Base class for term nodes; nodes are immutable and compare structurally"""

    kind: ClassVar[Kind]

    @property
    def children(self) -> Tuple["Term", ...]:
        return ()

    @cached_property
    def size(self) -> int:
        """Node count"""
        return 1 + sum(child.size for child in self.children)

    @cached_property
    def sort_key(self) -> tuple:
        """Size first, then node kind, then children in order"""
        return (self.size, int(self.kind)) + tuple(child.sort_key for child in self.children)

    @cached_property
    def generator_count(self) -> int:
        """Highest generator index mentioned"""
        return max((child.generator_count for child in self.children), default=0)

    def __lt__(self, other: "Term") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        from .parser import format_term

        return format_term(self)


@dataclass(frozen=True, eq=True)
class Generator(Term):
    index: int
    kind: ClassVar[Kind] = Kind.GENERATOR

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ArityError(f"Generator indices start at 1, got {self.index}")

    @cached_property
    def sort_key(self) -> tuple:
        return (1, int(Kind.GENERATOR), self.index)

    @cached_property
    def generator_count(self) -> int:
        return self.index


@dataclass(frozen=True, eq=True)
class K(Term):
    """Closure"""

    child: Term
    kind: ClassVar[Kind] = Kind.CLOSURE

    @property
    def children(self) -> Tuple[Term, ...]:
        return (self.child,)


@dataclass(frozen=True, eq=True)
class Iop(Term):
    """Interior"""

    child: Term
    kind: ClassVar[Kind] = Kind.INTERIOR

    @property
    def children(self) -> Tuple[Term, ...]:
        return (self.child,)


@dataclass(frozen=True, eq=True)
class C(Term):
    """Complement"""

    child: Term
    kind: ClassVar[Kind] = Kind.COMPLEMENT

    @property
    def children(self) -> Tuple[Term, ...]:
        return (self.child,)


@dataclass(frozen=True, eq=True)
class Meet(Term):
    left: Term
    right: Term
    kind: ClassVar[Kind] = Kind.MEET

    @property
    def children(self) -> Tuple[Term, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, eq=True)
class Join(Term):
    left: Term
    right: Term
    kind: ClassVar[Kind] = Kind.JOIN

    @property
    def children(self) -> Tuple[Term, ...]:
        return (self.left, self.right)


UNARY_NODES = {"k": K, "i": Iop, "c": C}
UNARY_LETTERS = {K: "k", Iop: "i", C: "c"}


def g(index: int = 1) -> Generator:
    return Generator(index)


def meet_all(terms: Iterable[Term]) -> Term:
    """Left-associated meet of a nonempty sequence"""
    return reduce(Meet, terms)


def join_all(terms: Iterable[Term]) -> Term:
    """Left-associated join of a nonempty sequence"""
    return reduce(Join, terms)


def word_to_term(word: str, generator: int = 1) -> Term:
    """Apply a unary word (leftmost letter last) to a generator"""
    term: Term = Generator(generator)
    for letter in reversed(word):
        try:
            term = UNARY_NODES[letter](term)
        except KeyError:
            raise ValueError(f"Unary words use the letters k, i, c; got {letter!r}") from None
    return term


def term_to_word(term: Term) -> Optional[str]:
    """The unary word of a term built only from k, i, c over g1, else None"""
    letters = []
    while not isinstance(term, Generator):
        letter = UNARY_LETTERS.get(type(term))
        if letter is None:
            return None
        letters.append(letter)
        term = term.children[0]
    return "".join(letters) if term.index == 1 else None


def dual(term: Term) -> Term:
    """Swap k with i and meet with join; c and generators are fixed"""
    if isinstance(term, Generator):
        return term
    if isinstance(term, K):
        return Iop(dual(term.child))
    if isinstance(term, Iop):
        return K(dual(term.child))
    if isinstance(term, C):
        return C(dual(term.child))
    if isinstance(term, Meet):
        return Join(dual(term.left), dual(term.right))
    if isinstance(term, Join):
        return Meet(dual(term.left), dual(term.right))
    raise TypeError(f"Unknown term node {type(term).__name__}")


def evaluate_bits(term: Term, space: TopSpace, assignment: Sequence[int]) -> int:
    """Evaluate on raw bit masks; shared subterms are computed once"""
    memo: Dict[int, int] = {}

    def walk(node: Term) -> int:
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Generator):
            value = assignment[node.index - 1]
        elif isinstance(node, K):
            value = space.close_bits(walk(node.child))
        elif isinstance(node, Iop):
            value = space.interior_bits(walk(node.child))
        elif isinstance(node, C):
            value = space.full_bits ^ walk(node.child)
        elif isinstance(node, Meet):
            value = walk(node.left) & walk(node.right)
        elif isinstance(node, Join):
            value = walk(node.left) | walk(node.right)
        else:
            raise TypeError(f"Unknown term node {type(node).__name__}")
        memo[key] = value
        return value

    return walk(term)


def evaluate(term: Term, space: TopSpace, assignment: Sequence[PointSet]) -> PointSet:
    """Evaluate a term on a space with generator j bound to assignment[j - 1]"""
    if term.generator_count > len(assignment):
        raise ArityError(f"Term uses g{term.generator_count} but only {len(assignment)} set(s) were assigned")
    for s in assignment:
        if s.size != space.point_count:
            raise DimensionError(f"Point set of size {s.size} used with a {space.point_count}-point space")
    return PointSet(evaluate_bits(term, space, [s.bits for s in assignment]), space.point_count)
