"""Shared test utilities: seeded random words and small enumerations."""

from __future__ import annotations

import random
from itertools import product

from freefold.words import Alphabet, Word


def random_word(rng: random.Random, alphabet: Alphabet, max_len: int,
                nonempty: bool = False) -> Word:
    while True:
        n = rng.randint(1 if nonempty else 0, max_len)
        w = Word(alphabet, (rng.randrange(2 * alphabet.rank) for _ in range(n)))
        if w or not nonempty:
            return w


def all_reduced_words(alphabet: Alphabet, length: int) -> list[Word]:
    """Every reduced word of exactly the given length."""
    out = []
    for codes in product(range(2 * alphabet.rank), repeat=length):
        ok = all(codes[i + 1] != codes[i] ^ 1 for i in range(length - 1))
        if ok:
            out.append(Word(alphabet, codes))
    return out
