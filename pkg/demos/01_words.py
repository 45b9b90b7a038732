#!/usr/bin/env python3
"""A tour of exact word arithmetic: reduction, conjugacy, roots, centralizers."""

from freefold import (
    Alphabet,
    centralizer_equal,
    commutator,
    conjugate,
    cyclic_normal_form,
    is_conjugate,
    root,
)

F = Alphabet.parse("a,b")
w = F.word

print("== free reduction ==")
print("a a^-1 b          ->", w("a a^-1 b"))
print("(a b) * (b^-1 a)  ->", w("a b") * w("b^-1 a"))
print("inverse of a b    ->", ~w("a b"))

print()
print("== conjugacy ==")
print("b conjugated by a:", conjugate(w("b"), w("a")))
cw = cyclic_normal_form(w("b a b^-1 a b a^-1 b^-1"))
print("canonical class representative:", cw.canonical, " via conjugator:", cw.conjugator)
print("a b ~ b a ?       ", is_conjugate(w("a b"), w("b a")))
print("[a,b] ~ [b,a] ?   ", is_conjugate(commutator(w("a"), w("b")),
                                         commutator(w("b"), w("a"))))
print("   (commutator classes are inverse to each other, not equal)")

print()
print("== roots and centralizers ==")
for text in ("a b a b a b", "a b b a^-1", "a"):
    r, k = root(w(text))
    print(f"root({text!r}) = ({r}, {k})")
print("C(a) == C(a^-3) ? ", centralizer_equal(w("a"), w("a^-3")))
print("C(ab) == C(ba) ?  ", centralizer_equal(w("a b"), w("b a")))
