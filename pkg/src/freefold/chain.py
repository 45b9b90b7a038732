"""The chained-surface witness construction and its certificate checks.

``build_chain(n)`` realizes, inside the free group on
``c0, a0, b0, t0, a1, b1, ..., t(n-1), an, bn``, the family of genus-one
two-boundary surface pieces H_i = <a_i, b_i, c_i, d_i | c_i d_i [a_i,b_i]>
glued along boundaries by stable letters:

    d_i = c_i^-1 [a_i, b_i]^-1          (the surface relation, solved for d_i)
    c_{i+1} = d_i ** t_i = t_i^-1 d_i t_i

The recursion direction is a real choice: conjugating by t_i^-1 instead
produces an isomorphic group (swap each t_i for its inverse), but only one
of the two closes the glued-surface relator that ``surface_rewrite``
computes.  ``build_chain`` defaults to the closing one and
``verify_surface_rewrite`` checks that exactly one of the two does close.

Every verifier returns a structured VerificationReport so callers can emit
witnesses on failure instead of a bare boolean.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .abelian import exponent_vector, is_basis_extendable_abelian
from .graphs import fold_subgroup, is_basis_of_ambient
from .whitehead import Automorphism
from .words import (
    Alphabet,
    DegenerateInput,
    Word,
    commutator,
    conjugate,
    cyclic_normal_form,
    invert,
    is_conjugate,
    multiply,
    restrict_word,
    centralizer_equal,
)

PASS = "pass"
FAIL = "fail"
BUDGET = "budget-exhausted"

DEFAULT_SCAN_CAP = 10**5


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one certificate check."""

    check: str
    params: dict
    status: str
    witnesses: list[str]
    elapsed_ms: int

    def __post_init__(self):
        if self.status not in (PASS, FAIL, BUDGET):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and not self.witnesses:
            raise ValueError("a failing report must carry a witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": dict(self.params),
            "status": self.status,
            "witnesses": list(self.witnesses),
            "elapsed_ms": self.elapsed_ms,
        }

    @staticmethod
    def from_dict(d: dict) -> "VerificationReport":
        return VerificationReport(
            d["check"], d["params"], d["status"], d["witnesses"], d["elapsed_ms"]
        )


def _finish(check: str, params: dict, witnesses: list[str], started: float,
            status: str | None = None) -> VerificationReport:
    elapsed = int((time.perf_counter() - started) * 1000)
    if status is None:
        status = FAIL if witnesses else PASS
    return VerificationReport(check, params, status, witnesses, elapsed)


@dataclass(frozen=True)
class SurfaceChain:
    """Derived-element table of the glued-surface group of depth n."""

    n: int
    alphabet: Alphabet
    c: tuple[Word, ...]
    d: tuple[Word, ...]
    s: tuple[Word, ...]
    h_tuples: tuple[tuple[Word, Word, Word], ...]
    inverted_stable_letters: bool = False
    rewrite: "SurfaceRewrite | None" = None

    def a(self, i: int) -> Word:
        return self.alphabet.gen(f"a{i}")

    def b(self, i: int) -> Word:
        return self.alphabet.gen(f"b{i}")

    def t(self, i: int) -> Word:
        return self.alphabet.gen(f"t{i}")


def chain_alphabet(n: int) -> Alphabet:
    names = ["c0", "a0", "b0"]
    for i in range(1, n + 1):
        names += [f"t{i - 1}", f"a{i}", f"b{i}"]
    return Alphabet(names)


def build_chain(n: int, inverted_stable_letters: bool = False) -> SurfaceChain:
    if n < 0:
        raise ValueError("n must be nonnegative")
    alphabet = chain_alphabet(n)
    c = [alphabet.gen("c0")]
    d: list[Word] = []
    for i in range(n + 1):
        a_i, b_i = alphabet.gen(f"a{i}"), alphabet.gen(f"b{i}")
        d.append(multiply(invert(c[i]), invert(commutator(a_i, b_i))))
        if i < n:
            t_i = alphabet.gen(f"t{i}")
            twist = invert(t_i) if inverted_stable_letters else t_i
            c.append(conjugate(d[i], twist))
    s: list[Word] = []
    acc = alphabet.identity()
    for i in range(n):
        acc = multiply(acc, alphabet.gen(f"t{i}"))
        s.append(invert(acc))
    h = tuple(
        (alphabet.gen(f"a{i}"), alphabet.gen(f"b{i}"), c[i]) for i in range(n + 1)
    )
    return SurfaceChain(n, alphabet, tuple(c), tuple(d), tuple(s), h,
                        inverted_stable_letters)


def verify_relation_chain(chain: SurfaceChain) -> VerificationReport:
    """Executable form of the surface relations and the gluing recursion."""
    started = time.perf_counter()
    witnesses = []
    for i in range(chain.n + 1):
        residue = multiply(
            multiply(chain.c[i], chain.d[i]), commutator(chain.a(i), chain.b(i))
        )
        if residue:
            witnesses.append(f"i={i}: c d [a,b] = {residue}")
    for i in range(chain.n):
        expected = conjugate(chain.d[i], chain.t(i))
        if chain.c[i + 1] != expected:
            witnesses.append(f"i={i + 1}: c differs from d^t = {expected}")
    return _finish("relation_chain", {"n": chain.n}, witnesses, started)


def complement_basis(chain: SurfaceChain, j: int) -> list[Word]:
    """Basis of the explicit complement N_j of <d_j>:
    N_0 = <a0, b0>, N_j = N_{j-1} * <t_{j-1}> * <a_j, b_j>."""
    words = [chain.a(0), chain.b(0)]
    for l in range(1, j + 1):
        words += [chain.t(l - 1), chain.a(l), chain.b(l)]
    return words


def _sub_alphabet(chain: SurfaceChain, k: int) -> Alphabet:
    # the alphabet is ordered so that the stage-k letters are a prefix
    return Alphabet(chain.alphabet.names[: 3 * (k + 1)])


def verify_free_factor_chain(chain: SurfaceChain) -> VerificationReport:
    """Each stage is a free factor of the next, with an explicit complement.

    For 0 <= k < n two bases of the stage-(k+1) group are certified with the
    folding oracle: the stage-k letters extended by {t_k, a_{k+1}, b_{k+1}},
    and the complement N_k * <t_k> extended by {a_{k+1}, b_{k+1}, c_{k+1}}.
    """
    if chain.n < 1:
        raise ValueError("the free-factor chain needs n >= 1")
    started = time.perf_counter()
    witnesses = []
    for k in range(chain.n):
        sub = _sub_alphabet(chain, k + 1)
        stage_k = [Word(sub, (2 * g,)) for g in range(3 * (k + 1))]
        extension = [
            restrict_word(w, sub)
            for w in (chain.t(k), chain.a(k + 1), chain.b(k + 1))
        ]
        if not is_basis_of_ambient(stage_k + extension, sub):
            witnesses.append(f"k={k}: stage-k letters plus (t, a, b) are not a basis")
        comp = [
            restrict_word(w, sub)
            for w in complement_basis(chain, k) + [chain.t(k)]
        ]
        h_next = [
            restrict_word(w, sub)
            for w in (chain.a(k + 1), chain.b(k + 1), chain.c[k + 1])
        ]
        if not is_basis_of_ambient(comp + h_next, sub):
            witnesses.append(f"k={k}: complement basis with (a, b, c) fails")
    expected_rank = 3 * (chain.n + 1)
    got = fold_subgroup(chain.alphabet.generators(), chain.alphabet).rank()
    if got != expected_rank:
        witnesses.append(f"alphabet fold has rank {got}, expected {expected_rank}")
    return _finish("free_factor_chain", {"n": chain.n}, witnesses, started)


@dataclass(frozen=True)
class SurfaceRewrite:
    """Change of basis exhibiting one glued surface plus free stable letters."""

    a_prime: dict[int, Word]
    b_prime: dict[int, Word]
    a_dblprime: dict[int, Word]
    b_dblprime: dict[int, Word]
    d_n_prime: Word
    new_basis: list[Word]
    identity_residue: Word


def surface_rewrite(chain: SurfaceChain) -> SurfaceRewrite:
    """Rewrite the depth-n chain (n even) as one surface relator.

    Conjugating the stage-i handles by s_{i-1}, with s_i the inverse of
    t_0 ... t_i, turns the nested gluing into the single relator

        c0 = [b0,a0] [b'_2,a'_2] ... [b'_n,a'_n] (d'_n)^-1
             [a'_{n-1},b'_{n-1}] ... [a'_1,b'_1]

    and conjugating the odd-index handles once more by d'_n pushes the
    boundary word to the far end.  identity_residue is the free reduction of
    c0^-1 times the right-hand side; it must come out empty.
    """
    n = chain.n
    if n < 2 or n % 2:
        raise ValueError("the surface rewrite needs even n >= 2")
    a_p: dict[int, Word] = {}
    b_p: dict[int, Word] = {}
    for i in range(1, n + 1):
        a_p[i] = conjugate(chain.a(i), chain.s[i - 1])
        b_p[i] = conjugate(chain.b(i), chain.s[i - 1])
    d_np = conjugate(chain.d[n], chain.s[n - 1])
    a_pp: dict[int, Word] = {}
    b_pp: dict[int, Word] = {}
    for j in range(1, n, 2):
        a_pp[j] = conjugate(a_p[j], d_np)
        b_pp[j] = conjugate(b_p[j], d_np)

    rhs = commutator(chain.b(0), chain.a(0))
    for j in range(2, n + 1, 2):
        rhs = multiply(rhs, commutator(b_p[j], a_p[j]))
    rhs = multiply(rhs, invert(d_np))
    for j in range(n - 1, 0, -2):
        rhs = multiply(rhs, commutator(a_p[j], b_p[j]))
    residue = multiply(invert(chain.c[0]), rhs)

    new_basis = [chain.a(0), chain.b(0)]
    for j in range(1, n + 1):
        new_basis.append(chain.t(j - 1))
        if j % 2:
            new_basis += [a_pp[j], b_pp[j]]
        else:
            new_basis += [a_p[j], b_p[j]]
    new_basis.append(d_np)
    return SurfaceRewrite(a_p, b_p, a_pp, b_pp, d_np, new_basis, residue)


def surface_residue_dblprime(chain: SurfaceChain, rw: SurfaceRewrite) -> Word:
    """The equivalent relator with double-primed handles, boundary word last."""
    rhs = commutator(chain.b(0), chain.a(0))
    for j in range(2, chain.n + 1, 2):
        rhs = multiply(rhs, commutator(rw.b_prime[j], rw.a_prime[j]))
    for j in range(chain.n - 1, 0, -2):
        rhs = multiply(rhs, commutator(rw.a_dblprime[j], rw.b_dblprime[j]))
    rhs = multiply(rhs, invert(rw.d_n_prime))
    return multiply(invert(chain.c[0]), rhs)


def verify_surface_rewrite(chain: SurfaceChain) -> VerificationReport:
    """Certify the rewrite: empty residues, a genuine new basis, and that
    exactly one of the two gluing conventions closes the relator."""
    started = time.perf_counter()
    n = chain.n
    witnesses = []
    rw = surface_rewrite(chain)
    if rw.identity_residue:
        witnesses.append(f"primed residue: {rw.identity_residue}")
    dbl = surface_residue_dblprime(chain, rw)
    if dbl:
        witnesses.append(f"double-primed residue: {dbl}")
    if not is_basis_of_ambient(rw.new_basis, chain.alphabet):
        witnesses.append("rewritten generating set is not a basis")
    flipped = build_chain(n, inverted_stable_letters=not chain.inverted_stable_letters)
    other = surface_rewrite(flipped)
    if bool(rw.identity_residue) == bool(other.identity_residue):
        witnesses.append(
            "conventions are not separated: flipped-residue "
            f"{'empty' if not other.identity_residue else str(other.identity_residue)}"
        )
    params = {
        "n": n,
        "basis_size": len(rw.new_basis),
        "inverted_stable_letters": int(chain.inverted_stable_letters),
    }
    return _finish("surface_rewrite", params, witnesses, started)


def flag_parts(chain: SurfaceChain, i: int) -> tuple[list[Word], list[Word], list[Word]]:
    """The three free factors K, H, L of the stage-2i flag decomposition."""
    n = chain.n
    if i < 1 or 2 * i + 2 > n:
        raise ValueError(f"flag index i={i} out of range for n={n}")
    k_part = complement_basis(chain, 2 * i - 1) + [chain.t(2 * i - 1)]
    h_part = [chain.a(2 * i), chain.b(2 * i), chain.c[2 * i]]
    l_part = [chain.t(2 * i)]
    for j in range(2 * i + 1, n + 1):
        l_part += [chain.a(j), chain.b(j)]
    l_part += [chain.t(j) for j in range(2 * i + 1, n)]
    return k_part, h_part, l_part


def explicit_flag_decomposition(chain: SurfaceChain, i: int) -> VerificationReport:
    """Certify the decomposition into K * H * L separating the witness tuples.

    (a) the concatenated part bases form a basis of the whole group,
    (b) the tuples below stage 2i lie in <K u H>,
    (c) the tuple at stage 2(i+1) lies in <H u L>.
    """
    started = time.perf_counter()
    k_part, h_part, l_part = flag_parts(chain, i)
    witnesses = []
    if not is_basis_of_ambient(k_part + h_part + l_part, chain.alphabet):
        witnesses.append("K u H u L is not a basis of the ambient group")
    kh = fold_subgroup(k_part + h_part, chain.alphabet)
    for j in range(0, 2 * (i - 1) + 1, 2):
        for w in chain.h_tuples[j]:
            if not kh.contains(w):
                witnesses.append(f"stage-{j} entry {w} escapes K u H")
    hl = fold_subgroup(h_part + l_part, chain.alphabet)
    for w in chain.h_tuples[2 * (i + 1)]:
        if not hl.contains(w):
            witnesses.append(f"stage-{2 * (i + 1)} entry {w} escapes H u L")
    return _finish(
        "flag_decomposition", {"n": chain.n, "i": i}, witnesses, started
    )


def verify_not_decomposable(chain: SurfaceChain) -> VerificationReport:
    """Abelian obstruction: the two boundary words cannot join a basis.

    In the abelianization c_i + d_i = 0 and d_i = c_{i+1}, so the exponent
    vector of d_n is (-1)^(n+1) times that of c_0 and the pair is never
    lattice-basis extendable.
    """
    if chain.n < 1:
        raise ValueError("the obstruction check needs n >= 1")
    started = time.perf_counter()
    witnesses = []
    vec_c0 = exponent_vector(chain.c[0])
    vec_dn = exponent_vector(chain.d[chain.n])
    sign = (-1) ** (chain.n + 1)
    if vec_dn != tuple(sign * x for x in vec_c0):
        witnesses.append(f"exponent vector of d_n is {vec_dn}, not {sign} * vec(c0)")
    if is_basis_extendable_abelian([vec_c0, vec_dn]):
        witnesses.append("the pair (c0, d_n) is abelian basis-extendable")
    return _finish("abelian_obstruction", {"n": chain.n}, witnesses, started)


def dehn_twist_family(
    alphabet: Alphabet,
    h_part: Iterable[str],
    k_part: Iterable[str],
    hnn_letters: Iterable[str],
    c: Word,
    n: int,
) -> Automorphism:
    """Identity on one side, conjugation by c^n on the other, t -> c^n t on
    stable letters.  c must be a word in the fixed side."""
    h_set, k_set, t_set = set(h_part), set(k_part), set(hnn_letters)
    names = set(alphabet.names)
    if (
        h_set | k_set | t_set != names
        or h_set & k_set
        or h_set & t_set
        or k_set & t_set
    ):
        raise ValueError("h_part, k_part and hnn_letters must partition the alphabet")
    if c.alphabet != alphabet:
        raise ValueError("twisting word over the wrong alphabet")
    h_indices = {alphabet.index(x) for x in h_set}
    if any((code >> 1) not in h_indices for code in c.letters):
        raise ValueError("the twisting word must lie in the fixed part")
    cn = c ** n
    cn_inv = invert(cn)
    images, inverse = [], []
    for name in alphabet.names:
        x = alphabet.gen(name)
        if name in h_set:
            images.append(x)
            inverse.append(x)
        elif name in k_set:
            images.append(multiply(multiply(cn, x), cn_inv))
            inverse.append(multiply(multiply(cn_inv, x), cn))
        else:
            images.append(multiply(cn, x))
            inverse.append(multiply(cn_inv, x))
    return Automorphism(alphabet, images, inverse)


def orbit_distinct_check(
    family: Callable[[int], Automorphism],
    g: Word,
    N: int,
    check_suffix: str = "",
) -> VerificationReport:
    """Images of g under family(0..N) must be pairwise non-conjugate with
    pairwise distinct centralizers."""
    if not g:
        raise DegenerateInput("orbit check needs a nontrivial element")
    started = time.perf_counter()
    images = [family(k).apply(g) for k in range(N + 1)]
    params = {"N": N}
    check = "orbit_distinct" + (f"[{check_suffix}]" if check_suffix else "")
    for p in range(N + 1):
        for q in range(p + 1, N + 1):
            if is_conjugate(images[p], images[q]) or centralizer_equal(
                images[p], images[q]
            ):
                params = {**params, "p": p, "q": q}
                return _finish(
                    check, params, [str(images[p]), str(images[q])], started
                )
    return _finish(check, params, [], started)


def _ball_of_products(part: Sequence[Word], max_len: int, cap: int):
    """All nontrivial reduced products of at most max_len part letters,
    or None once more than cap distinct elements appear."""
    if not part:
        return []
    alphabet = part[0].alphabet
    letters = []
    for w in part:
        letters += [w, invert(w)]
    seen = {alphabet.identity().letters: alphabet.identity()}
    frontier = [alphabet.identity()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for l in letters:
                prod = multiply(w, l)
                if prod.letters not in seen:
                    seen[prod.letters] = prod
                    nxt.append(prod)
                    if len(seen) - 1 > cap:
                        return None
        frontier = nxt
    return [w for key, w in seen.items() if key]


def cross_conjugacy_scan(
    part1: Sequence[Word],
    part2: Sequence[Word],
    max_len: int,
    element_cap: int = DEFAULT_SCAN_CAP,
) -> VerificationReport:
    """Desk-scale conjugacy separation of two subgroups.

    Enumerates every nontrivial element of each subgroup that is a product
    of at most max_len subgroup-basis letters, dedupes each side by
    canonical cyclic form, and passes iff no class appears on both sides.
    """
    started = time.perf_counter()
    params = {"max_len": max_len, "element_cap": element_cap}
    sides = []
    for part in (part1, part2):
        ball = _ball_of_products(part, max_len, element_cap)
        if ball is None:
            return _finish(
                "conjugacy_separation", params, [], started, status=BUDGET
            )
        classes: dict[tuple, Word] = {}
        for w in ball:
            key = cyclic_normal_form(w).canonical.letters
            classes.setdefault(key, w)
        sides.append(classes)
    common = sorted(set(sides[0]) & set(sides[1]))
    witnesses = []
    if common:
        key = common[0]
        witnesses = [str(sides[0][key]), str(sides[1][key])]
    params = {**params, "classes_1": len(sides[0]), "classes_2": len(sides[1])}
    return _finish("conjugacy_separation", params, witnesses, started)


def documented_orbit_instances() -> list[tuple[str, Callable[[int], Automorphism], Word, int]]:
    """The two fixed twist-orbit instances exercised by the test harness:
    an edge-group twist on an amalgam-shaped splitting and a stable-letter
    twist on an HNN-shaped one."""
    amalgam = Alphabet(["x", "y", "z"])
    c1 = amalgam.gen("x")
    fam1 = lambda k: dehn_twist_family(amalgam, ["x", "y"], ["z"], [], c1, k)
    hnn = Alphabet(["x", "y", "t"])
    c2 = hnn.gen("x")
    fam2 = lambda k: dehn_twist_family(hnn, ["x", "y"], [], ["t"], c2, k)
    return [
        ("amalgam", fam1, amalgam.word("y z"), 10),
        ("hnn", fam2, hnn.word("y t"), 10),
    ]


def separation_parts(chain: SurfaceChain) -> tuple[list[Word], list[Word]]:
    """The stage-0 and stage-2 surface-piece bases inside a chain with n >= 2."""
    if chain.n < 2:
        raise ValueError("separation needs n >= 2")
    return list(chain.h_tuples[0]), list(chain.h_tuples[2])
