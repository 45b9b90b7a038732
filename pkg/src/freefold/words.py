"""Exact arithmetic in finite-rank free groups.

Words are freely reduced sequences of signed generators.  A letter is stored
as one int: ``2*g`` for the generator with index ``g``, ``2*g + 1`` for its
inverse.  That encoding makes inversion a bit flip and gives the canonical
letter order used everywhere (generator index first, positive sign before
negative).

Conventions, fixed once for the whole package:

* exponent notation means ``x ** g == g^-1 * x * g``,
* commutator means ``[x, y] == x * y * x^-1 * y^-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


class AlphabetMismatch(ValueError):
    """Operands live over different alphabets (or index out of range)."""


class DegenerateInput(ValueError):
    """The operation is undefined on this input (usually the empty word)."""


class WordSyntaxError(ValueError):
    """Malformed word text; carries the offending token position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"token {position}: {message}")
        self.position = position


_NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
_TOKEN_RE = re.compile(r"([a-z][a-z0-9_]*)(?:\^(-?[0-9]+))?\Z")


class Alphabet:
    """An ordered list of distinct generator names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        seen = set()
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlphabetMismatch(f"unknown generator {name!r}") from None

    def gen(self, name: str) -> "Word":
        """The length-one word for a generator name."""
        return Word(self, (2 * self.index(name),))

    def generators(self) -> list["Word"]:
        return [Word(self, (2 * g,)) for g in range(self.rank)]

    def identity(self) -> "Word":
        return Word(self, ())

    def word(self, text: str) -> "Word":
        return parse_word(text, self)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({','.join(self.names)})"

    @staticmethod
    def parse(text: str) -> "Alphabet":
        """Parse an ordered comma-separated generator list, e.g. ``"a,b"``."""
        return Alphabet([part.strip() for part in text.split(",")])


class Letter(NamedTuple):
    """A signed generator: index into an alphabet plus sign +1 or -1."""

    gen: int
    sign: int


def _code(letter: Letter, alphabet: Alphabet) -> int:
    if not 0 <= letter.gen < alphabet.rank:
        raise AlphabetMismatch(f"generator index {letter.gen} out of range")
    if letter.sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {letter.sign}")
    return 2 * letter.gen + (0 if letter.sign == 1 else 1)


def _reduce_codes(codes: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for c in codes:
        if stack and stack[-1] == c ^ 1:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


class Word:
    """A freely reduced word.  Construction always reduces its input."""

    __slots__ = ("alphabet", "letters")

    def __init__(self, alphabet: Alphabet, codes: Iterable[int] = ()):
        self.alphabet = alphabet
        self.letters = _reduce_codes(codes)

    # -- basic protocol ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.alphabet == other.alphabet
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.alphabet.names, self.letters))

    def __iter__(self) -> Iterator[Letter]:
        for c in self.letters:
            yield Letter(c >> 1, -1 if c & 1 else 1)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return invert(self) ** (-k)
        out = self.alphabet.identity()
        for _ in range(k):
            out = multiply(out, self)
        return out

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)})"

    def is_cyclically_reduced(self) -> bool:
        ls = self.letters
        return len(ls) < 2 or ls[0] != ls[-1] ^ 1


def _check_same_alphabet(*words: Word) -> None:
    first = words[0].alphabet
    for w in words[1:]:
        if w.alphabet != first:
            raise AlphabetMismatch(
                f"mixed alphabets {first!r} and {w.alphabet!r}"
            )


# -- group operations -------------------------------------------------------


def reduce(raw: Iterable[Letter], alphabet: Alphabet) -> Word:
    """Freely reduce a raw letter sequence.  Idempotent on reduced input."""
    return Word(alphabet, (_code(l, alphabet) for l in raw))


def multiply(u: Word, v: Word) -> Word:
    _check_same_alphabet(u, v)
    return Word(u.alphabet, u.letters + v.letters)


def invert(w: Word) -> Word:
    return Word(w.alphabet, tuple(c ^ 1 for c in reversed(w.letters)))


def conjugate(x: Word, g: Word) -> Word:
    """x ** g, i.e. g^-1 * x * g."""
    _check_same_alphabet(x, g)
    gi = tuple(c ^ 1 for c in reversed(g.letters))
    return Word(x.alphabet, gi + x.letters + g.letters)


def commutator(x: Word, y: Word) -> Word:
    """[x, y] = x y x^-1 y^-1."""
    _check_same_alphabet(x, y)
    xi = tuple(c ^ 1 for c in reversed(x.letters))
    yi = tuple(c ^ 1 for c in reversed(y.letters))
    return Word(x.alphabet, x.letters + y.letters + xi + yi)


@dataclass(frozen=True)
class CyclicWord:
    """Canonical conjugacy representative plus one conjugator realising it.

    ``canonical`` is the lexicographically least rotation of the cyclic
    reduction of the original word, and ``invert(conjugator) * original *
    conjugator`` reduces to it.
    """

    canonical: Word
    conjugator: Word


def _cyclic_strip(codes: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split reduced ``codes`` as prefix + core + prefix^-1 with core cyclically reduced."""
    lo, hi = 0, len(codes)
    while hi - lo >= 2 and codes[lo] == codes[hi - 1] ^ 1:
        lo += 1
        hi -= 1
    return codes[:lo], codes[lo:hi]


def _least_rotation(codes: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Lexicographically least rotation and its offset.  O(L^2) is fine here."""
    if not codes:
        return codes, 0
    best, best_i = codes, 0
    for i in range(1, len(codes)):
        rot = codes[i:] + codes[:i]
        if rot < best:
            best, best_i = rot, i
    return best, best_i


def cyclic_normal_form(w: Word) -> CyclicWord:
    prefix, core = _cyclic_strip(w.letters)
    best, offset = _least_rotation(core)
    conj = Word(w.alphabet, prefix + core[:offset])
    return CyclicWord(Word(w.alphabet, best), conj)


def is_conjugate(u: Word, v: Word) -> bool:
    _check_same_alphabet(u, v)
    return cyclic_normal_form(u).canonical == cyclic_normal_form(v).canonical


def root(w: Word) -> tuple[Word, int]:
    """The maximal root: returns (r, k) with w = r^k, k maximal.

    Handles conjugated powers: g u^k g^-1 has root g u g^-1.
    """
    if not w:
        raise DegenerateInput("the empty word has no root")
    prefix, core = _cyclic_strip(w.letters)
    n = len(core)
    period = n
    for d in range(1, n):
        if n % d == 0 and all(core[i] == core[i % d] for i in range(n)):
            period = d
            break
    k = n // period
    r = Word(w.alphabet, prefix + core[:period] + tuple(c ^ 1 for c in reversed(prefix)))
    return r, k


def centralizer_equal(x: Word, y: Word) -> bool:
    """Whether <root(x)> == <root(y)>, the centralizer test for nontrivial words."""
    if not x or not y:
        raise DegenerateInput("centralizers are compared for nontrivial words only")
    _check_same_alphabet(x, y)
    rx, _ = root(x)
    ry, _ = root(y)
    return rx == ry or rx == invert(ry)


# -- text grammar ----------------------------------------------------------
#
# generators: [a-z][a-z0-9_]*
# word:       whitespace-separated tokens `gen` or `gen^k` (k nonzero),
#             or the single literal `1` for the empty word.


def parse_word(text: str, alphabet: Alphabet) -> Word:
    tokens = text.split()
    if tokens == ["1"]:
        return alphabet.identity()
    codes: list[int] = []
    for pos, tok in enumerate(tokens, start=1):
        if tok == "1":
            raise WordSyntaxError("'1' is only valid as the entire word", pos)
        m = _TOKEN_RE.match(tok)
        if not m:
            raise WordSyntaxError(f"malformed token {tok!r}", pos)
        name, exp = m.group(1), m.group(2)
        k = 1 if exp is None else int(exp)
        if k == 0:
            raise WordSyntaxError(f"zero exponent in {tok!r}", pos)
        try:
            g = alphabet.index(name)
        except AlphabetMismatch:
            raise WordSyntaxError(f"unknown generator {name!r}", pos) from None
        code = 2 * g + (0 if k > 0 else 1)
        codes.extend([code] * abs(k))
    return Word(alphabet, codes)


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    parts: list[str] = []
    i = 0
    codes = w.letters
    while i < len(codes):
        j = i
        while j < len(codes) and codes[j] == codes[i]:
            j += 1
        name = w.alphabet.names[codes[i] >> 1]
        k = (j - i) * (-1 if codes[i] & 1 else 1)
        parts.append(name if k == 1 else f"{name}^{k}")
        i = j
    return " ".join(parts)


def restrict_word(w: Word, sub: Alphabet) -> Word:
    """Re-express w over a sub-alphabet (by generator name)."""
    codes = []
    for c in w.letters:
        name = w.alphabet.names[c >> 1]
        codes.append(2 * sub.index(name) + (c & 1))
    return Word(sub, codes)
