"""Finitely presented groups: words, presentations and a small input grammar.

A word over a generating set is a tuple of nonzero ints: letter ``+i``
denotes generator number ``i`` (1-based), letter ``-i`` its inverse.  The
empty tuple is the identity.

The textual grammar accepted by :func:`parse_presentation` is

    gens | rel, rel, ...

where ``gens`` is a comma-separated list of identifiers and relator words
are built from ``*`` (product), ``^n`` (integer power), ``^g``
(conjugation by an identifier or a parenthesised word), ``[x,y]``
(commutator, expanded to x^-1 y^-1 x y), ``1`` (identity) and
parentheses.  ``^`` binds tighter than ``*`` and chains left to right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]


class PresentationError(ValueError):
    """Raised on malformed presentation text; carries line/column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


def free_reduce(word: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs until no xx^-1 remains."""
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_reduce(word: Iterable[int]) -> Word:
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def word_inverse(word: Iterable[int]) -> Word:
    return tuple(-letter for letter in reversed(tuple(word)))


def word_power(word: Sequence[int], n: int) -> Word:
    if n < 0:
        return word_inverse(word) * (-n)
    return tuple(word) * n


def word_conjugate(word: Sequence[int], by: Sequence[int]) -> Word:
    """x^w = w^-1 x w, freely reduced."""
    return free_reduce(word_inverse(by) + tuple(word) + tuple(by))


def word_commutator(x: Sequence[int], y: Sequence[int]) -> Word:
    return free_reduce(word_inverse(x) + word_inverse(y) + tuple(x) + tuple(y))


@dataclass(frozen=True)
class Presentation:
    """Generators plus relator words; relators are stored freely reduced."""

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.generator_names)) != len(self.generator_names):
            raise ValueError("generator names must be unique")
        for rel in self.relators:
            for letter in rel:
                if letter == 0 or abs(letter) > len(self.generator_names):
                    raise ValueError(f"letter {letter} outside declared generators")

    @property
    def ngens(self) -> int:
        return len(self.generator_names)

    def with_relators(self, extra: Iterable[Word]) -> "Presentation":
        new = [free_reduce(w) for w in extra]
        return Presentation(self.generator_names, self.relators + tuple(w for w in new if w))

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        parts = []
        for letter in word:
            name = self.generator_names[abs(letter) - 1]
            parts.append(name if letter > 0 else name + "^-1")
        return "*".join(parts)

    def __str__(self) -> str:
        gens = ",".join(self.generator_names)
        rels = ", ".join(self.word_str(r) for r in self.relators)
        return f"{gens} | {rels}"


_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|\d+|[-|,*^()\[\]]|\S")


def _tokenize(text: str):
    tokens = []
    line, col_base = 1, 0
    for match in _TOKEN_RE.finditer(text):
        start = match.start()
        line += text.count("\n", col_base, start)
        nl = text.rfind("\n", 0, start)
        column = start - nl
        col_base = start
        tok = match.group()
        if tok.isspace():
            continue
        tokens.append((tok, line, column))
    return tokens


class _Parser:
    def __init__(self, text: str, gen_index: dict[str, int]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.gen_index = gen_index

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def next(self):
        if self.pos >= len(self.tokens):
            raise PresentationError("unexpected end of input", *self._last_loc())
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _last_loc(self):
        if self.tokens:
            _, line, col = self.tokens[-1]
            return line, col + 1
        return 1, 1

    def expect(self, symbol: str):
        tok, line, col = self.next()
        if tok != symbol:
            raise PresentationError(f"expected {symbol!r}, found {tok!r}", line, col)

    def error(self, message: str):
        if self.pos < len(self.tokens):
            _, line, col = self.tokens[self.pos]
        else:
            line, col = self._last_loc()
        raise PresentationError(message, line, col)

    def parse_word(self) -> Word:
        word = list(self.parse_factor())
        while self.peek() == "*":
            self.next()
            word.extend(self.parse_factor())
        return free_reduce(word)

    def parse_factor(self) -> Word:
        word = self.parse_atom()
        while self.peek() == "^":
            self.next()
            word = self.parse_trailer(word)
        return word

    def parse_trailer(self, base: Word) -> Word:
        tok = self.peek()
        if tok is None:
            self.error("dangling '^'")
        if tok == "-" or tok.isdigit():
            sign = 1
            if tok == "-":
                self.next()
                sign = -1
            tok2, line, col = self.next()
            if not tok2.isdigit():
                raise PresentationError(f"expected integer exponent, found {tok2!r}", line, col)
            return free_reduce(word_power(base, sign * int(tok2)))
        if tok == "(":
            self.next()
            by = self.parse_word()
            self.expect(")")
            return word_conjugate(base, by)
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            by = self.parse_atom()
            return word_conjugate(base, by)
        self.error(f"cannot use {tok!r} as an exponent")

    def parse_atom(self) -> Word:
        tok, line, col = self.next()
        if tok == "1":
            return ()
        if tok == "(":
            word = self.parse_word()
            self.expect(")")
            return word
        if tok == "[":
            x = self.parse_word()
            self.expect(",")
            y = self.parse_word()
            self.expect("]")
            return word_commutator(x, y)
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            if tok not in self.gen_index:
                raise PresentationError(f"undeclared generator {tok!r}", line, col)
            return (self.gen_index[tok] + 1,)
        raise PresentationError(f"unexpected token {tok!r}", line, col)


def parse_word(text: str, generator_names: Sequence[str]) -> Word:
    """Parse a single word in the relator grammar over the given generators."""
    gen_index = {name: i for i, name in enumerate(generator_names)}
    parser = _Parser(text, gen_index)
    word = parser.parse_word()
    if parser.pos != len(parser.tokens):
        parser.error("trailing input after word")
    return word


def parse_presentation(text: str) -> Presentation:
    """Parse ``gens | rel, rel, ...`` into a :class:`Presentation`."""
    bar = text.find("|")
    if bar < 0:
        raise PresentationError("missing '|' separator", 1, max(1, len(text)))
    head, tail = text[:bar], text[bar + 1:]

    names = []
    for part in head.split(","):
        name = part.strip()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name or ""):
            raise PresentationError(f"bad generator name {name!r}", 1, 1)
        names.append(name)
    if len(set(names)) != len(names):
        raise PresentationError("duplicate generator name", 1, 1)

    gen_index = {name: i for i, name in enumerate(names)}
    relators: list[Word] = []
    if tail.strip():
        parser = _Parser(tail, gen_index)
        while True:
            word = parser.parse_word()
            if word:
                relators.append(word)
            if parser.peek() == ",":
                parser.next()
                continue
            if parser.peek() is None:
                break
            parser.error("expected ',' between relators")
    return Presentation(tuple(names), tuple(relators))


def triangle_relators(k: int, l: int, m: int) -> list[Word]:
    """The six relators a^2, b^2, c^2, (ab)^k, (bc)^l, (ac)^m over a,b,c."""
    if not (1 <= k <= l <= m <= 6):
        raise ValueError(f"exponents must satisfy 1 <= k <= l <= m <= 6, got {(k, l, m)}")
    a, b, c = 1, 2, 3
    return [
        (a, a),
        (b, b),
        (c, c),
        word_power((a, b), k),
        word_power((b, c), l),
        word_power((a, c), m),
    ]


def triangle_presentation(k: int, l: int, m: int, extra: Iterable[Word] = ()) -> Presentation:
    """Presentation on a,b,c with the triangle relators plus extras."""
    pres = Presentation(("a", "b", "c"), tuple(triangle_relators(k, l, m)))
    extra = tuple(extra)
    return pres.with_relators(extra) if extra else pres
