"""Folded subgroup graphs (Stallings graphs) for f.g. subgroups of free groups.

A subgroup graph is a connected, labeled, folded graph with a base vertex:
closed paths at the base spell exactly the subgroup's elements.  Folding
merges equally-labeled parallel edges until each vertex has at most one
outgoing and one incoming edge per label; the result is independent of the
folding order, and we relabel vertices by a breadth-first traversal so equal
subgroups produce identical graphs.

Non-base dangling trees are trimmed.  A spur hanging from the base (as in
the graph of <a b a^-1>) is kept on purpose: membership then reads off
closed base paths with no special cases, and the rank formula E - V + 1 is
unaffected by trees.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .words import Alphabet, AlphabetMismatch, Word, invert, multiply


class SubgroupGraph:
    """Immutable folded core graph of a finitely generated subgroup."""

    __slots__ = ("alphabet", "n_vertices", "out", "inc", "generators_of")

    def __init__(self, alphabet, n_vertices, out, inc, generators_of):
        self.alphabet = alphabet
        self.n_vertices = n_vertices
        self.out = out  # out[v][g] = w  for an edge v --g--> w
        self.inc = inc  # inc[w][g] = v  for the same edge
        self.generators_of = generators_of

    base = 0

    @property
    def n_edges(self) -> int:
        return sum(len(d) for d in self.out)

    def rank(self) -> int:
        return self.n_edges - self.n_vertices + 1

    def walk(self, w: Word, start: int = 0) -> int | None:
        """Endpoint of the path spelling w from ``start``, or None if it dies."""
        v = start
        for c in w.letters:
            g = c >> 1
            v = self.inc[v].get(g) if c & 1 else self.out[v].get(g)
            if v is None:
                return None
        return v

    def contains(self, w: Word) -> bool:
        if w.alphabet != self.alphabet:
            raise AlphabetMismatch("word alphabet differs from graph alphabet")
        return self.walk(w) == self.base

    def _spanning_tree(self):
        """BFS tree from the base; returns (path codes per vertex, tree edge set)."""
        paths: list[tuple[int, ...] | None] = [None] * self.n_vertices
        paths[self.base] = ()
        tree: set[tuple[int, int, int]] = set()
        queue = [self.base]
        while queue:
            v = queue.pop(0)
            for g in sorted(self.out[v]):
                w = self.out[v][g]
                if paths[w] is None:
                    paths[w] = paths[v] + (2 * g,)
                    tree.add((v, g, w))
                    queue.append(w)
            for g in sorted(self.inc[v]):
                u = self.inc[v][g]
                if paths[u] is None:
                    paths[u] = paths[v] + (2 * g + 1,)
                    tree.add((u, g, v))
                    queue.append(u)
        return paths, tree

    def _nontree_edges(self):
        paths, tree = self._spanning_tree()
        edges = []
        for u in range(self.n_vertices):
            for g in sorted(self.out[u]):
                v = self.out[u][g]
                if (u, g, v) not in tree:
                    edges.append((u, g, v))
        return paths, edges

    def basis(self) -> list[Word]:
        """A free basis read off a spanning tree, one word per non-tree edge."""
        paths, edges = self._nontree_edges()
        out = []
        for u, g, v in edges:
            codes = paths[u] + (2 * g,) + tuple(c ^ 1 for c in reversed(paths[v]))
            out.append(Word(self.alphabet, codes))
        return out

    def express(self, w: Word) -> list[int] | None:
        """Certificate of membership: w as a product of basis words.

        Returns signed 1-based indices into ``basis()`` (negative for an
        inverse factor), or None when w is not in the subgroup.  Multiplying
        the factors back reproduces w exactly, which makes this an
        independent positive-membership check.
        """
        if w.alphabet != self.alphabet:
            raise AlphabetMismatch("word alphabet differs from graph alphabet")
        _, edges = self._nontree_edges()
        index = {e: i + 1 for i, e in enumerate(edges)}
        v = self.base
        factors: list[int] = []
        for c in w.letters:
            g = c >> 1
            if c & 1:
                u = self.inc[v].get(g)
                if u is None:
                    return None
                i = index.get((u, g, v))
                if i:
                    factors.append(-i)
                v = u
            else:
                t = self.out[v].get(g)
                if t is None:
                    return None
                i = index.get((v, g, t))
                if i:
                    factors.append(i)
                v = t
        return factors if v == self.base else None

    def serialize(self) -> str:
        """Debug text form (internal, not stability-guaranteed)."""
        lines = [f"vertices {self.n_vertices}", "base 0"]
        for u in range(self.n_vertices):
            for g in sorted(self.out[u]):
                lines.append(f"edge {u} {self.alphabet.names[g]} {self.out[u][g]}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"SubgroupGraph(V={self.n_vertices}, E={self.n_edges}, rank={self.rank()})"


def fold_subgroup(gens: Sequence[Word], alphabet: Alphabet | None = None) -> SubgroupGraph:
    """Fold the wedge of generator loops into the subgroup's core graph."""
    gens = list(gens)
    if alphabet is None:
        if not gens:
            raise ValueError("an alphabet is required to fold the trivial subgroup")
        alphabet = gens[0].alphabet
    for w in gens:
        if w.alphabet != alphabet:
            raise AlphabetMismatch("subgroup generators over mixed alphabets")

    # Wedge of loops at vertex 0.
    edges: set[tuple[int, int, int]] = set()
    nv = 1
    for w in gens:
        prev = 0
        for i, c in enumerate(w.letters):
            nxt = 0 if i == len(w.letters) - 1 else nv
            if nxt != 0:
                nv += 1
            g = c >> 1
            if c & 1:
                edges.add((nxt, g, prev))
            else:
                edges.add((prev, g, nxt))
            prev = nxt

    parent = list(range(nv))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            # keep the smaller id so the base vertex 0 survives every merge
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra

    # Fold to fixpoint.  Scanning in sorted order keeps the merge sequence
    # deterministic; confluence makes the result unique anyway.
    while True:
        edges = {(find(u), g, find(v)) for (u, g, v) in edges}
        merged = False
        seen_out: dict[tuple[int, int], int] = {}
        seen_in: dict[tuple[int, int], int] = {}
        for u, g, v in sorted(edges):
            key = (u, g)
            if key in seen_out and seen_out[key] != v:
                union(seen_out[key], v)
                merged = True
                break
            seen_out[key] = v
            key = (v, g)
            if key in seen_in and seen_in[key] != u:
                union(seen_in[key], u)
                merged = True
                break
            seen_in[key] = u
        if not merged:
            break

    # Trim non-base dangling trees.
    while True:
        degree: dict[int, int] = {}
        for u, g, v in edges:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        dead = {
            v
            for v in degree
            if v != 0 and degree[v] <= 1
        }
        if not dead:
            break
        edges = {e for e in edges if e[0] not in dead and e[2] not in dead}

    # Canonical BFS relabeling from the base.
    out_adj: dict[int, dict[int, int]] = {}
    in_adj: dict[int, dict[int, int]] = {}
    verts = {0}
    for u, g, v in edges:
        out_adj.setdefault(u, {})[g] = v
        in_adj.setdefault(v, {})[g] = u
        verts.add(u)
        verts.add(v)
    order: dict[int, int] = {0: 0}
    queue = [0]
    while queue:
        v = queue.pop(0)
        for g in sorted(out_adj.get(v, {})):
            w = out_adj[v][g]
            if w not in order:
                order[w] = len(order)
                queue.append(w)
        for g in sorted(in_adj.get(v, {})):
            u = in_adj[v][g]
            if u not in order:
                order[u] = len(order)
                queue.append(u)
    # every vertex is reachable from the base by construction
    assert len(order) == len(verts)

    n = len(order)
    out: list[dict[int, int]] = [dict() for _ in range(n)]
    inc: list[dict[int, int]] = [dict() for _ in range(n)]
    for u, g, v in edges:
        out[order[u]][g] = order[v]
        inc[order[v]][g] = order[u]
    return SubgroupGraph(alphabet, n, tuple(out), tuple(inc), tuple(gens))


def contains(graph: SubgroupGraph, w: Word) -> bool:
    return graph.contains(w)


def rank(graph: SubgroupGraph) -> int:
    return graph.rank()


def basis_of(graph: SubgroupGraph) -> list[Word]:
    return graph.basis()


def is_basis_of_ambient(gens: Sequence[Word], alphabet: Alphabet | None = None) -> bool:
    """Whether gens is a basis of the whole ambient free group.

    A generating set of size equal to the rank is a basis (free groups are
    Hopfian), so it suffices to count and to check that every alphabet
    generator lies in <gens>.
    """
    gens = list(gens)
    if alphabet is None:
        if not gens:
            raise ValueError("an alphabet is required for an empty candidate basis")
        alphabet = gens[0].alphabet
    if len(gens) != alphabet.rank:
        return False
    graph = fold_subgroup(gens, alphabet)
    return all(graph.contains(x) for x in alphabet.generators())


def membership_in_free_product_part(
    part_bases: Iterable[Sequence[Word]], w: Word
) -> bool:
    """Whether w lies in the subgroup generated by the listed parts together."""
    gens = [g for part in part_bases for g in part]
    return fold_subgroup(gens, w.alphabet).contains(w)


def verify_expression(graph: SubgroupGraph, w: Word) -> bool:
    """Positive-membership certificate: express w in the basis and multiply back."""
    factors = graph.express(w)
    if factors is None:
        return False
    basis = graph.basis()
    acc = graph.alphabet.identity()
    for f in factors:
        piece = basis[f - 1] if f > 0 else invert(basis[-f - 1])
        acc = multiply(acc, piece)
    return acc == w
