"""
Operation subsets of {closure, interior, complement, meet, join}
"""

from dataclasses import dataclass, fields
from typing import List, Tuple

from ..exceptions import UnknownOpSetError

# Flag letters in canonical order; "I" names the identity-only set
LETTERS = ("k", "i", "c", "^", "v")

TABLE_ROWS = ("I", "i", "k", "c", "ik", "ikc")
TABLE_COLUMNS = ("I", "^", "v", "^v")


@dataclass(frozen=True)
class OpSet:
    """Which operations may be applied; the identity is always available"""

    use_k: bool = False
    use_i: bool = False
    use_c: bool = False
    use_meet: bool = False
    use_join: bool = False

    @classmethod
    def parse(cls, text: str) -> "OpSet":
        """
        Parse a flag string such as "ki^" or "kc"

        Whitespace and commas are ignored; "I" on its own (or an empty
        string) is the identity-only set. Repeated letters are allowed.
        """
        flags = dict.fromkeys(LETTERS, False)
        stripped = text.replace(",", " ").strip()
        if stripped in ("", "I"):
            return cls()
        for position, letter in enumerate(text):
            if letter.isspace() or letter == ",":
                continue
            if letter not in flags:
                raise UnknownOpSetError(
                    f"Unknown operation {letter!r} at position {position} in {text!r}; use letters from {''.join(LETTERS)}"
                )
            flags[letter] = True
        return cls(*(flags[letter] for letter in LETTERS))

    @classmethod
    def from_cell(cls, row: str, column: str) -> "OpSet":
        """Operation set of a table cell, e.g. ("ik", "^")"""
        if row not in TABLE_ROWS:
            raise UnknownOpSetError(f"Unknown table row {row!r}; rows are {', '.join(TABLE_ROWS)}")
        if column not in TABLE_COLUMNS:
            raise UnknownOpSetError(f"Unknown table column {column!r}; columns are {', '.join(TABLE_COLUMNS)}")
        letters = (row if row != "I" else "") + (column if column != "I" else "")
        return cls.parse(letters)

    @property
    def flags(self) -> Tuple[bool, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    @property
    def label(self) -> str:
        text = "".join(letter for letter, on in zip(LETTERS, self.flags) if on)
        return text or "I"

    @property
    def unary_letters(self) -> List[str]:
        return [letter for letter, on in zip("kic", self.flags[:3]) if on]

    @property
    def has_binary(self) -> bool:
        return self.use_meet or self.use_join

    @property
    def row(self) -> str:
        """Table row; any two of k, i, c generate all three"""
        unary = self.unary_letters
        if len(unary) >= 2 and "c" in unary:
            return "ikc"
        if len(unary) == 2:
            return "ik"
        return unary[0] if unary else "I"

    @property
    def column(self) -> str:
        if self.use_meet and self.use_join:
            return "^v"
        if self.use_meet:
            return "^"
        if self.use_join:
            return "v"
        return "I"

    def issubset(self, other: "OpSet") -> bool:
        return all(mine <= theirs for mine, theirs in zip(self.flags, other.flags))

    def __or__(self, other: "OpSet") -> "OpSet":
        return OpSet(*(a or b for a, b in zip(self.flags, other.flags)))

    def __str__(self) -> str:
        return self.label
