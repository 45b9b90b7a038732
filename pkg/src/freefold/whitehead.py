"""Whitehead automorphisms, length minimization, primitivity, basis extension.

The classical facts this module leans on: a tuple of conjugacy classes of
total cyclic length above its automorphism-orbit minimum admits a single
type-II move that strictly shortens it (peak reduction), and two minimal
tuples in the same orbit are connected by type-II moves through tuples of
the same total length.  Greedy descent therefore finds the minimum, and a
breadth-first sweep of the bottom level decides whether the orbit contains
a tuple of distinct generators.

Signed basis permutations (type I) never change lengths and preserve the
"distinct generators" target, so the searches only ever apply type-II moves.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Sequence

from .words import (
    Alphabet,
    AlphabetMismatch,
    DegenerateInput,
    Word,
    cyclic_normal_form,
    multiply,
)


class BudgetExhausted(RuntimeError):
    """A bounded search ran out of its node budget before deciding."""


DEFAULT_BUDGET = 10**6


class Automorphism:
    """A basis-image map with a recorded inverse; invertible by construction."""

    __slots__ = ("alphabet", "images", "inverse_images", "_subst")

    def __init__(self, alphabet: Alphabet, images: Sequence[Word],
                 inverse_images: Sequence[Word], _trusted: bool = False):
        self.alphabet = alphabet
        self.images = tuple(images)
        self.inverse_images = tuple(inverse_images)
        if len(self.images) != alphabet.rank or len(self.inverse_images) != alphabet.rank:
            raise ValueError("one image per generator is required")
        # substitution table indexed by letter code
        subst: list[tuple[int, ...]] = []
        for img in self.images:
            subst.append(img.letters)
            subst.append(tuple(c ^ 1 for c in reversed(img.letters)))
        self._subst = tuple(subst)
        if not _trusted:
            self._verify()

    def _verify(self) -> None:
        inv = Automorphism.__new__(Automorphism)
        inv.alphabet = self.alphabet
        inv.images = self.inverse_images
        subst = []
        for img in inv.images:
            subst.append(img.letters)
            subst.append(tuple(c ^ 1 for c in reversed(img.letters)))
        inv._subst = tuple(subst)
        for g, x in enumerate(self.alphabet.generators()):
            if inv.apply(self.apply(x)) != x or self.apply(inv.apply(x)) != x:
                raise ValueError(f"recorded inverse fails on generator {self.alphabet.names[g]}")

    def apply(self, w: Word) -> Word:
        if w.alphabet != self.alphabet:
            raise AlphabetMismatch("word alphabet differs from automorphism alphabet")
        codes: list[int] = []
        for c in w.letters:
            codes.extend(self._subst[c])
        return Word(self.alphabet, codes)

    def inverse(self) -> "Automorphism":
        return Automorphism(self.alphabet, self.inverse_images, self.images, _trusted=True)

    @staticmethod
    def identity(alphabet: Alphabet) -> "Automorphism":
        gens = alphabet.generators()
        return Automorphism(alphabet, gens, gens, _trusted=True)

    @staticmethod
    def from_images(alphabet: Alphabet, images: Sequence[Word],
                    inverse_images: Sequence[Word]) -> "Automorphism":
        """Construct with full verification of the recorded inverse."""
        return Automorphism(alphabet, images, inverse_images)

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{n}->{img}" for n, img in zip(self.alphabet.names, self.images)
        )
        return f"Automorphism({pairs})"


def apply_automorphism(f: Automorphism, w: Word) -> Word:
    return f.apply(w)


def _letter_word(alphabet: Alphabet, code: int) -> Word:
    return Word(alphabet, (code,))


def _type_one(alphabet: Alphabet) -> list[Automorphism]:
    r = alphabet.rank
    out = []
    for perm in permutations(range(r)):
        for signs in product((0, 1), repeat=r):
            images = [
                _letter_word(alphabet, 2 * perm[g] + signs[g]) for g in range(r)
            ]
            inverse = [alphabet.identity()] * r
            for g in range(r):
                inverse[perm[g]] = _letter_word(alphabet, 2 * g + signs[g])
            out.append(Automorphism(alphabet, images, inverse, _trusted=True))
    return out


_KEEP, _LEFT, _RIGHT, _CONJ = range(4)


def _type_two(alphabet: Alphabet) -> list[Automorphism]:
    """Type-II Whitehead moves: a multiplier letter m fixes itself and every
    other generator x goes independently to x, m x, x m^-1 or m x m^-1."""
    r = alphabet.rank
    gens = [Word(alphabet, (2 * g,)) for g in range(r)]
    out = []
    for m_code in range(2 * r):
        m_gen = m_code >> 1
        m = _letter_word(alphabet, m_code)
        m_inv = _letter_word(alphabet, m_code ^ 1)
        others = [g for g in range(r) if g != m_gen]
        for choice in product((_KEEP, _LEFT, _RIGHT, _CONJ), repeat=len(others)):
            if all(ch == _KEEP for ch in choice):
                continue
            images = list(gens)
            inverse = list(gens)
            for g, ch in zip(others, choice):
                x = gens[g]
                if ch == _LEFT:
                    images[g] = multiply(m, x)
                    inverse[g] = multiply(m_inv, x)
                elif ch == _RIGHT:
                    images[g] = multiply(x, m_inv)
                    inverse[g] = multiply(x, m)
                elif ch == _CONJ:
                    images[g] = multiply(multiply(m, x), m_inv)
                    inverse[g] = multiply(multiply(m_inv, x), m)
            out.append(Automorphism(alphabet, images, inverse, _trusted=True))
    return out


def whitehead_generators(alphabet: Alphabet) -> list[Automorphism]:
    """All type-I (signed basis permutations) and type-II Whitehead moves."""
    if alphabet.rank < 1:
        raise ValueError("rank must be at least 1")
    return _type_one(alphabet) + _type_two(alphabet)


@lru_cache(maxsize=32)
def _type_two_cached(alphabet: Alphabet) -> tuple[Automorphism, ...]:
    return tuple(_type_two(alphabet))


def _canon(w: Word) -> Word:
    return cyclic_normal_form(w).canonical


def _total(tup: Sequence[Word]) -> int:
    return sum(len(w) for w in tup)


def minimize_tuple(
    t: Sequence[Word], budget: int = DEFAULT_BUDGET
) -> tuple[list[Word], list[Automorphism]]:
    """Greedy simultaneous Whitehead descent on a tuple of conjugacy classes.

    Entries are handled as cyclic words; the returned tuple consists of
    canonical conjugacy representatives.  The same move is applied to every
    entry, and moves are taken while the total cyclic length strictly drops.
    """
    if not t:
        raise DegenerateInput("cannot minimize an empty tuple")
    alphabet = t[0].alphabet
    for w in t:
        if w.alphabet != alphabet:
            raise AlphabetMismatch("tuple entries over mixed alphabets")
    moves = _type_two_cached(alphabet)
    current = [_canon(w) for w in t]
    seq: list[Automorphism] = []
    examined = 0
    improved = True
    while improved:
        improved = False
        for f in moves:
            candidate = [_canon(f.apply(w)) for w in current]
            examined += 1
            if examined > budget:
                raise BudgetExhausted(f"minimization exceeded {budget} examined tuples")
            if _total(candidate) < _total(current):
                current = candidate
                seq.append(f)
                improved = True
                break
    return current, seq


def is_primitive(w: Word, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether w belongs to some basis: minimal cyclic length 1."""
    if not w:
        raise DegenerateInput("primitivity is undefined for the empty word")
    minimal, _ = minimize_tuple([w], budget)
    return len(minimal[0]) == 1


def _is_generator_tuple(tup: Sequence[Word]) -> bool:
    gens = set()
    for w in tup:
        if len(w) != 1:
            return False
        gens.add(w.letters[0] >> 1)
    return len(gens) == len(tup)


def extends_to_basis(t: Sequence[Word], budget: int = DEFAULT_BUDGET) -> bool:
    """Whether the tuple of conjugacy classes minimizes to distinct generators.

    After greedy descent, sweeps the whole level set of minimal-total-length
    tuples reachable by single type-II moves; greedy alone can land on a
    minimal tuple other than a generator tuple.
    """
    if not t:
        raise DegenerateInput("cannot test an empty tuple")
    for w in t:
        if not w:
            raise DegenerateInput("tuple entries must be nontrivial")
    start, _ = minimize_tuple(t, budget)
    floor = _total(start)
    moves = _type_two_cached(start[0].alphabet)
    first = tuple(start)
    if _is_generator_tuple(first):
        return True
    visited = {first}
    frontier = [first]
    examined = 0
    while frontier:
        next_frontier = []
        for tup in frontier:
            for f in moves:
                candidate = tuple(_canon(f.apply(w)) for w in tup)
                examined += 1
                if examined > budget:
                    raise BudgetExhausted(
                        f"basis-extension search exceeded {budget} examined tuples"
                    )
                if _total(candidate) != floor or candidate in visited:
                    continue
                if _is_generator_tuple(candidate):
                    return True
                visited.add(candidate)
                next_frontier.append(candidate)
        frontier = next_frontier
    return False
