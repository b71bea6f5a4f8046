"""
Unary words over {k, i, c} and their normal forms

A word is applied right to left: "ik" means i(k(A)). The empty word is the
identity and prints as "I".
"""

import logging
from typing import FrozenSet, Iterable, List

from ..exceptions import MonoidOverflowError

logger = logging.getLogger(__name__)

ALPHABET = frozenset("kic")
MONOID_LIMIT = 100

# Applied left to right until no rule matches; c is pushed to the front
REWRITE_RULES = (
    ("kk", "k"),
    ("ii", "i"),
    ("cc", ""),
    ("kc", "ci"),
    ("ic", "ck"),
    ("ikik", "ik"),
    ("kiki", "ki"),
)

# Listing orders used by the figures and by `normalize --all`
KI_ORDER = ("", "i", "ik", "iki", "k", "ki", "kik")
KIC_ORDER = KI_ORDER + ("c", "ci", "cik", "ciki", "ck", "cki", "ckik")


def _check_letters(word: str, alphabet: Iterable[str] = ALPHABET) -> None:
    allowed = set(alphabet)
    for position, letter in enumerate(word):
        if letter not in allowed:
            raise ValueError(f"Letter {letter!r} at position {position} is not one of {''.join(sorted(allowed))}")


def normalize_unary(word: str) -> str:
    """Canonical representative of a word modulo the Kuratowski identities"""
    _check_letters(word)
    changed = True
    while changed:
        changed = False
        for lhs, rhs in REWRITE_RULES:
            if lhs in word:
                word = word.replace(lhs, rhs, 1)
                changed = True
                break
    return word


def enumerate_unary_monoid(alphabet: Iterable[str]) -> FrozenSet[str]:
    """Every distinct normal form generated by the given letters"""
    letters = sorted(set(alphabet))
    _check_letters("".join(letters))
    seen = {""}
    frontier = [""]
    while frontier:
        grown: List[str] = []
        for word in frontier:
            for letter in letters:
                candidate = normalize_unary(letter + word)
                if candidate in seen:
                    continue
                seen.add(candidate)
                if len(seen) > MONOID_LIMIT:
                    raise MonoidOverflowError(f"More than {MONOID_LIMIT} normal forms from {''.join(letters)}")
                grown.append(candidate)
        frontier = grown
    logger.debug("Monoid on %s has %d elements", "".join(letters), len(seen))
    return frozenset(seen)


def word_key(word: str) -> tuple:
    """Position in the standard listing, then length, then text"""
    if word in KIC_ORDER:
        return (0, KIC_ORDER.index(word), word)
    return (1, len(word), word)


def sorted_words(words: Iterable[str]) -> List[str]:
    return sorted(words, key=word_key)


def format_word(word: str) -> str:
    return word or "I"


def parse_word(text: str) -> str:
    """Inverse of format_word; accepts 'I' or an empty string for the identity"""
    text = text.strip()
    if text in ("", "I"):
        return ""
    _check_letters(text)
    return text
