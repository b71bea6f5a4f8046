"""
Text syntax for terms

    term  := meet ("v" meet)*
    meet  := unary ("^" unary)*
    unary := ("k" | "i" | "c") (unary | <nothing>) | atom
    atom  := "g" digits | "I" | "(" term ")"

"I" is shorthand for g1 and a bare word such as "kik" applies to g1, so
"k(I ^ ik)" reads as k(g1 ^ i k g1). Binary operators associate to the left
and format_term prints the fewest parentheses that parse back to the same
tree.
"""

import re
from typing import List, Tuple

from ..exceptions import TermSyntaxError
from .terms import C, Generator, Iop, Join, K, Meet, Term, term_to_word
from .words import format_word

_TOKEN = re.compile(r"\s*(?:(g)(\d+)|([kic^v()I]))")

_PRECEDENCE = {Join: 1, Meet: 2}
_UNARY = {"k": K, "i": Iop, "c": C}
_LETTER = {K: "k", Iop: "i", C: "c"}
_ATOM_START = ("g", "I", "(")


def _tokenize(text: str) -> List[Tuple[str, int, int]]:
    """(token, value, position) triples; generators carry their index"""
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None:
            start = position + len(text[position:]) - len(text[position:].lstrip())
            raise TermSyntaxError(f"Unexpected character {text[start]!r}", start)
        if match.group(1):
            tokens.append(("g", int(match.group(2)), match.start(1)))
        else:
            tokens.append((match.group(3), 0, match.start(3)))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> str:
        return self.tokens[self.index][0] if self.index < len(self.tokens) else ""

    def position(self) -> int:
        return self.tokens[self.index][2] if self.index < len(self.tokens) else len(self.text)

    def take(self) -> Tuple[str, int, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def term(self) -> Term:
        node = self.meet()
        while self.peek() == "v":
            self.take()
            node = Join(node, self.meet())
        return node

    def meet(self) -> Term:
        node = self.unary()
        while self.peek() == "^":
            self.take()
            node = Meet(node, self.unary())
        return node

    def unary(self) -> Term:
        token = self.peek()
        if token in _UNARY:
            self.take()
            if self.peek() not in _UNARY and self.peek() not in _ATOM_START:
                return _UNARY[token](Generator(1))
            return _UNARY[token](self.unary())
        return self.atom()

    def atom(self) -> Term:
        token = self.peek()
        where = self.position()
        if token == "g":
            _, index, _ = self.take()
            if index < 1:
                raise TermSyntaxError("Generator indices start at 1", where)
            return Generator(index)
        if token == "I":
            self.take()
            return Generator(1)
        if token == "(":
            self.take()
            node = self.term()
            if self.peek() != ")":
                raise TermSyntaxError("Expected ')'", self.position())
            self.take()
            return node
        if token == "":
            raise TermSyntaxError("Unexpected end of term", where)
        raise TermSyntaxError(f"Unexpected {token!r}", where)


def parse_term(text: str) -> Term:
    """Parse text such as 'k(g1 ^ i k g1)' into a term"""
    parser = _Parser(text)
    node = parser.term()
    if parser.index != len(parser.tokens):
        raise TermSyntaxError(f"Unexpected {parser.peek()!r} after complete term", parser.position())
    return node


def _precedence(term: Term) -> int:
    return _PRECEDENCE.get(type(term), 3)


def format_term(term: Term, compact: bool = False) -> str:
    """Print a term; compact writes unary chains over g1 as words ("I", "kik")"""
    if compact:
        word = term_to_word(term)
        if word is not None:
            return format_word(word)
    if isinstance(term, Generator):
        return f"g{term.index}"
    letter = _LETTER.get(type(term))
    if letter is not None:
        child = term.children[0]
        inner = format_term(child, compact)
        return f"{letter} {inner}" if _precedence(child) == 3 else f"{letter}({inner})"

    left, right = term.children
    level = _precedence(term)
    symbol = "v" if isinstance(term, Join) else "^"
    left_text = format_term(left, compact)
    right_text = format_term(right, compact)
    if _precedence(left) < level:
        left_text = f"({left_text})"
    if _precedence(right) <= level:
        right_text = f"({right_text})"
    return f"{left_text} {symbol} {right_text}"
