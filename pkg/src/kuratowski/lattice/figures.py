"""
Named operation families and their expected order structure
Labels use the compact term syntax ("I ^ kik", "I ^ ki v ik")
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Set, Tuple

from ..algebra.parser import parse_term
from ..algebra.terms import Term
from ..algebra.words import KI_ORDER, KIC_ORDER, format_word
from .distributive import distributive_closure
from .poset import DEFAULT_ORDER_POINTS, OperationPoset, build_order

Cover = Tuple[str, str]


@dataclass
class FamilyTemplate:
    """A named list of operations with the covering pairs it should produce"""

    name: str
    labels: List[str]
    covers: Optional[Set[Cover]] = None

    @property
    def terms(self) -> List[Term]:
        return [parse_term(label) for label in self.labels]


class FigureTemplates:
    """Pre-defined operation families"""

    @staticmethod
    def ki7() -> FamilyTemplate:
        """The seven (k, i) words, from i at the bottom to k at the top"""
        return FamilyTemplate(
            name="ki7",
            labels=[format_word(word) for word in KI_ORDER],
            covers={
                ("i", "iki"),
                ("iki", "ki"),
                ("iki", "ik"),
                ("ki", "kik"),
                ("ik", "kik"),
                ("kik", "k"),
                ("i", "I"),
                ("I", "k"),
            },
        )

    @staticmethod
    def kic14() -> FamilyTemplate:
        """All fourteen words; complementation reverses order, giving two copies of ki7"""
        return FamilyTemplate(name="kic14", labels=[format_word(word) for word in KIC_ORDER])

    @staticmethod
    def kimeet13() -> FamilyTemplate:
        """Meets of (k, i) words: every element of the (k, i, ^) family"""
        return FamilyTemplate(
            name="kimeet13",
            labels=[
                "i",
                "I ^ iki",
                "iki",
                "I ^ ki ^ ik",
                "ki ^ ik",
                "I ^ ki",
                "I ^ ik",
                "ki",
                "ik",
                "I ^ kik",
                "kik",
                "I",
                "k",
            ],
            covers={
                ("I", "k"),
                ("kik", "k"),
                ("I ^ kik", "I"),
                ("I ^ kik", "kik"),
                ("ki", "kik"),
                ("ik", "kik"),
                ("I ^ ki", "I ^ kik"),
                ("I ^ ik", "I ^ kik"),
                ("ki ^ ik", "ki"),
                ("I ^ ki", "ki"),
                ("I ^ ik", "ik"),
                ("ki ^ ik", "ik"),
                ("I ^ ki ^ ik", "I ^ ki"),
                ("I ^ ki ^ ik", "I ^ ik"),
                ("I ^ ki ^ ik", "ki ^ ik"),
                ("iki", "ki ^ ik"),
                ("I ^ iki", "I ^ ki ^ ik"),
                ("I ^ iki", "iki"),
                ("i", "I ^ iki"),
            },
        )

    @staticmethod
    def extra_joins() -> List[str]:
        """Joins beyond ki v ik, (I ^ ki) v (I ^ ik) and the joins with I"""
        return [
            "(I ^ kik) v ki v ik",
            "(I ^ kik) v ki",
            "(I ^ kik) v ik",
            "(I ^ kik) v (ki ^ ik)",
            "(I ^ kik) v iki",
            "(I ^ ki) v (I ^ ik) v (ki ^ ik)",
            "(I ^ ki) v (I ^ ik) v iki",
            "(I ^ ki) v ik",
            "(I ^ ki) v (ki ^ ik)",
            "(I ^ ki) v iki",
            "(I ^ ik) v ki",
            "(I ^ ik) v (ki ^ ik)",
            "(I ^ ik) v iki",
            "(I ^ ki ^ ik) v iki",
        ]

    @staticmethod
    def join_classes() -> List[List[str]]:
        """
        Sublattices covering the meets plus ki v ik and (I ^ ki) v (I ^ ik)

        An irredundant join takes at most one element from each class; the
        first class never appears in one.
        """
        return [
            ["i", "k"],
            ["I"],
            ["iki", "ki ^ ik", "ik", "ki", "ki v ik", "kik"],
            ["I ^ iki", "I ^ ki ^ ik", "I ^ ik", "I ^ ki", "(I ^ ki) v (I ^ ik)", "I ^ kik"],
        ]

    @staticmethod
    def identities() -> List[Tuple[str, str]]:
        """Equalities that hold in every closure algebra"""
        return [
            ("k(ki ^ ik)", "ki"),
            ("k(I ^ iki)", "ki"),
            ("k(I ^ ki ^ ik)", "ki"),
            ("k(I ^ ki)", "ki"),
            ("k(I ^ ik)", "kik"),
            ("k(I ^ kik)", "kik"),
        ]


def lattice35(max_points: int = DEFAULT_ORDER_POINTS) -> OperationPoset:
    """Order of the distributive lattice generated by the (k, i, ^) family"""
    closure = distributive_closure(FigureTemplates.kimeet13().terms, max_points)
    return build_order(closure.elements, max_points)


def _template_poset(template: Callable[[], FamilyTemplate]) -> Callable[[int], OperationPoset]:
    def build(max_points: int = DEFAULT_ORDER_POINTS) -> OperationPoset:
        family = template()
        return build_order(family.terms, max_points, labels=family.labels)

    return build


HASSE_FAMILIES: Dict[str, Callable[[int], OperationPoset]] = {
    "ki7": _template_poset(FigureTemplates.ki7),
    "kimeet13": _template_poset(FigureTemplates.kimeet13),
    "lattice35": lattice35,
}


def hasse_family(name: str, max_points: int = DEFAULT_ORDER_POINTS) -> OperationPoset:
    try:
        builder = HASSE_FAMILIES[name]
    except KeyError:
        raise ValueError(f"Unknown family {name!r}; choose from {', '.join(HASSE_FAMILIES)}") from None
    return builder(max_points)
