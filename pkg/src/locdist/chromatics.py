"""Colour codes, the three colouring predicates and exact solvers.

Colourings are canonical restricted-growth assignments: colours are
``1..k``, vertex 0 gets colour 1 and colour ``i + 1`` first appears after
colour ``i``.  Every predicate here is invariant under relabelling the
colours, so searching restricted-growth strings loses nothing, and the
first hit of a search in vertex order ``0..n-1`` is the lexicographically
least optimal assignment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .graph import Graph, check_cap, diameter
from .symmetry import _Matcher, aut_order, find_color_preserving_automorphism


@dataclass(frozen=True)
class ColorPartition:
    """Surjective colouring ``assignment[v] in 1..k``; classes ``V_1..V_k``."""

    assignment: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(c) for c in self.assignment)
        object.__setattr__(self, "assignment", a)
        if not a:
            raise ValueError("empty colouring")
        k = max(a)
        if min(a) < 1 or set(a) != set(range(1, k + 1)):
            raise ValueError(f"colouring must use every colour 1..{k} exactly: {list(a)}")

    @classmethod
    def from_classes(cls, classes: Sequence[Sequence[int]], n: int | None = None) -> "ColorPartition":
        """Build from ordered classes; class ``i`` (0-based) gets colour ``i + 1``."""
        size = n if n is not None else sum(len(c) for c in classes)
        assignment = [0] * size
        for i, cls_ in enumerate(classes, start=1):
            for v in cls_:
                if assignment[v]:
                    raise ValueError(f"vertex {v} appears in two classes")
                assignment[v] = i
        if 0 in assignment:
            raise ValueError(f"vertex {assignment.index(0)} is in no class")
        return cls(tuple(assignment))

    @property
    def k(self) -> int:
        return max(self.assignment)

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return tuple(tuple(c) for c in out)

    def canonical(self) -> "ColorPartition":
        """Same partition, colours renumbered by first appearance."""
        relabel: dict[int, int] = {}
        for c in self.assignment:
            relabel.setdefault(c, len(relabel) + 1)
        return ColorPartition(tuple(relabel[c] for c in self.assignment))

    def __iter__(self):
        return iter(self.assignment)

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]


def _colors(c) -> tuple[int, ...]:
    return c.assignment if isinstance(c, ColorPartition) else tuple(c)


def color_code(g: Graph, c, v: int) -> tuple[int, ...]:
    """``(d(v, V_1), ..., d(v, V_k))`` for the partition ``c``."""
    colors = _colors(c)
    k = max(colors)
    row = g.dist[v]
    code = [g.n] * k
    for u, cu in enumerate(colors):
        if row[u] < code[cu - 1]:
            code[cu - 1] = row[u]
    return tuple(code)


def color_codes(g: Graph, c) -> list[tuple[int, ...]]:
    return [color_code(g, c, v) for v in range(g.n)]


def is_proper(g: Graph, c) -> bool:
    colors = _colors(c)
    return all(colors[u] != colors[v] for u, v in g.edges)


def is_locating(g: Graph, c) -> bool:
    if not is_proper(g, c):
        return False
    codes = color_codes(g, c)
    return len(set(codes)) == g.n


def is_distinguishing(g: Graph, c) -> bool:
    return is_proper(g, c) and find_color_preserving_automorphism(g, _colors(c)) is None


# --- search engine ----------------------------------------------------------


def _twin_pairs(g: Graph) -> list[list[int]]:
    """``twins[v]``: earlier vertices ``u < v`` with ``N(u) - {v} == N(v) - {u}``."""
    out: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        for u in range(v):
            strip = ~((1 << u) | (1 << v))
            if g.masks[u] & strip == g.masks[v] & strip:
                out[v].append(u)
    return out


class _ProperSearch:
    """Depth-first enumeration of proper restricted-growth k-colourings.

    Subclasses layer extra pruning on top through ``push``/``pop``
    (incremental state), ``partial_ok`` (sound prune after assigning a
    vertex) and ``accept`` (final check on a complete colouring).
    """

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.colors = [0] * g.n

    def push(self, v: int, c: int) -> None:
        self.colors[v] = c

    def pop(self, v: int, c: int) -> None:
        self.colors[v] = 0

    def partial_ok(self, v: int) -> bool:
        return True

    def accept(self) -> bool:
        return True

    def run(self) -> Iterator[tuple[int, ...]]:
        g, k, colors = self.g, self.k, self.colors
        n = g.n
        if k < 1 or k > n:
            return

        def rec(v: int, used: int) -> Iterator[tuple[int, ...]]:
            if v == n:
                if used == k and self.accept():
                    yield tuple(colors)
                return
            if k - used > n - v:
                return
            blocked = {colors[u] for u in g.nbrs[v] if u < v}
            for c in range(1, min(used + 1, k) + 1):
                if c in blocked:
                    continue
                self.push(v, c)
                if self.partial_ok(v):
                    yield from rec(v + 1, max(used, c))
                self.pop(v, c)

        yield from rec(0, 0)


class _LocatingSearch(_ProperSearch):
    """Proper colourings with pairwise distinct colour codes.

    ``codes[v][i]`` is the distance from ``v`` to the nearest vertex already
    coloured ``i + 1``.  Two same-coloured assigned vertices with equal
    partial codes are dropped when no unassigned vertex ``w`` can ever
    separate them: that needs ``d(u, w) != d(v, w)`` and
    ``min(d(u, w), d(v, w))`` below the largest current code entry.
    """

    def __init__(self, g: Graph, k: int):
        super().__init__(g, k)
        n = g.n
        self.inf = n + 1
        self.codes = [[self.inf] * k for _ in range(n)]
        self.trail: list[list[tuple[int, int]]] = []
        dist = g.dist
        # separators[u][v]: vertices w != u, v with d(u,w) != d(v,w), as (w, min distance)
        self.separators = [[None] * n for _ in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                seps = tuple(
                    (w, min(dist[u][w], dist[v][w]))
                    for w in range(n)
                    if w != u and w != v and dist[u][w] != dist[v][w]
                )
                self.separators[u][v] = seps

    def push(self, v: int, c: int) -> None:
        self.colors[v] = c
        changed = []
        i = c - 1
        for u, d in enumerate(self.g.dist[v]):
            row = self.codes[u]
            if d < row[i]:
                changed.append((u, row[i]))
                row[i] = d
        self.trail.append(changed)

    def pop(self, v: int, c: int) -> None:
        self.colors[v] = 0
        i = c - 1
        for u, old in self.trail.pop():
            self.codes[u][i] = old

    def partial_ok(self, v: int) -> bool:
        groups: dict[tuple[int, ...], list[int]] = {}
        for u in range(v + 1):
            groups.setdefault(tuple(self.codes[u]), []).append(u)
        for code, members in groups.items():
            if len(members) < 2:
                continue
            if v == self.g.n - 1:
                return False
            top = max(code)
            for a, b in combinations(members, 2):
                if not any(w > v and dmin < top for w, dmin in self.separators[a][b]):
                    return False
        return True

    def accept(self) -> bool:
        return len({tuple(r) for r in self.codes}) == self.g.n


class _DistinguishingSearch(_ProperSearch):
    """Proper colourings fixed by no non-identity automorphism.

    A branch is cut once some non-identity automorphism preserves the
    colours assigned so far and fixes every uncoloured vertex: it then
    preserves every completion.  Such a map that did not move the newly
    coloured vertex ``v`` would have cut the parent already, so only maps
    sending ``v`` to an earlier same-coloured vertex ``w`` at equal distance
    from every uncoloured vertex are tried.
    """

    def partial_ok(self, v: int) -> bool:
        g, colors = self.g, self.colors
        c = colors[v]
        dv = g.dist[v]
        rest = range(v + 1, g.n)
        for w in range(v):
            if colors[w] != c:
                continue
            dw = g.dist[w]
            if any(dv[u] != dw[u] for u in rest):
                continue
            fixed = {u: u for u in rest}
            fixed[v] = w
            if _Matcher(g, colors).find(fixed) is not None:
                return False
        return True

    def accept(self) -> bool:
        return find_color_preserving_automorphism(self.g, self.colors) is None


def proper_colorings(g: Graph, k: int) -> Iterator[ColorPartition]:
    """All proper surjective k-colourings, one per partition, in lex order."""
    for a in _ProperSearch(g, k).run():
        yield ColorPartition(a)


def locating_colorings(g: Graph, k: int) -> Iterator[ColorPartition]:
    for a in _LocatingSearch(g, k).run():
        yield ColorPartition(a)


def distinguishing_colorings(g: Graph, k: int) -> Iterator[ColorPartition]:
    for a in _DistinguishingSearch(g, k).run():
        yield ColorPartition(a)


def all_partitions(n: int, kmax: int | None = None) -> Iterator[ColorPartition]:
    """Every set partition of ``0..n-1`` into at most ``kmax`` blocks."""
    kmax = n if kmax is None else kmax
    a = [0] * n

    def rec(v: int, used: int):
        if v == n:
            yield ColorPartition(tuple(a))
            return
        for c in range(1, min(used + 1, kmax) + 1):
            a[v] = c
            yield from rec(v + 1, max(used, c))

    yield from rec(0, 0)


def greedy_clique_size(g: Graph) -> int:
    """Size of a clique grown greedily from each vertex; a lower bound on chi."""
    best = 1
    for start in range(g.n):
        clique = [start]
        for v in sorted(g.nbrs[start], key=lambda u: -g.degree(u)):
            if all(g.adjacent(v, u) for u in clique):
                clique.append(v)
        best = max(best, len(clique))
    return best


def _minimum(g: Graph, search_cls, start: int, cap: int | None) -> tuple[int, ColorPartition]:
    check_cap(g.n, cap)
    for k in range(max(start, 1), g.n + 1):
        for a in search_cls(g, k).run():
            return k, ColorPartition(a)
    raise AssertionError("the all-singleton colouring always qualifies")


def chromatic_number(g: Graph, cap: int | None = None) -> tuple[int, ColorPartition]:
    return _minimum(g, _ProperSearch, greedy_clique_size(g), cap)


def locating_chromatic_number(g: Graph, cap: int | None = None, start: int | None = None
                              ) -> tuple[int, ColorPartition]:
    """Least k with a locating k-colouring, plus the lex-least witness.

    ``start`` is a known lower bound (defaults to the chromatic number).
    """
    if start is None:
        start = chromatic_number(g, cap)[0]
    return _minimum(g, _LocatingSearch, start, cap)


def distinguishing_chromatic_number(g: Graph, cap: int | None = None, start: int | None = None
                                    ) -> tuple[int, ColorPartition]:
    if start is None:
        start = chromatic_number(g, cap)[0]
    return _minimum(g, _DistinguishingSearch, start, cap)


# --- metric dimension -------------------------------------------------------


def metric_representation(g: Graph, W: Sequence[int], v: int) -> tuple[int, ...]:
    return tuple(g.dist[v][w] for w in W)


def is_resolving(g: Graph, W: Sequence[int]) -> bool:
    reps = {metric_representation(g, W, v) for v in range(g.n)}
    return len(reps) == g.n


def twin_classes(g: Graph) -> list[list[int]]:
    """Classes of the twin relation (equal open or equal closed neighbourhoods)."""
    twins = _twin_pairs(g)
    root = list(range(g.n))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for v in range(g.n):
        for u in twins[v]:
            root[find(v)] = find(u)
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(find(v), []).append(v)
    return sorted(classes.values())


def metric_dimension(g: Graph, cap: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Smallest resolving set (lex-least among smallest) and its size.

    Each twin class of size t needs at least t - 1 members in any resolving
    set, which gives the starting size.
    """
    check_cap(g.n, cap)
    if g.n == 1:
        return 0, ()
    lower = max(1, sum(len(c) - 1 for c in twin_classes(g)))
    for size in range(lower, g.n):
        for W in combinations(range(g.n), size):
            if is_resolving(g, W):
                return size, W
    raise AssertionError("n - 1 vertices always resolve a connected graph")


# --- reports ----------------------------------------------------------------


@dataclass
class InvariantReport:
    n: int
    edges: int
    chi: int
    chi_L: int
    chi_D: int
    dim: int
    diam: int
    aut_order: int
    witnesses: dict = field(default_factory=dict)
    graph6: str = ""

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "edges": self.edges,
            "chi": self.chi,
            "chi_L": self.chi_L,
            "chi_D": self.chi_D,
            "dim": self.dim,
            "diam": self.diam,
            "aut_order": self.aut_order,
            "witnesses": self.witnesses,
        }


def invariant_report(g: Graph, cap: int | None = None) -> InvariantReport:
    from .graph import write_graph6

    check_cap(g.n, cap)
    chi, chi_w = chromatic_number(g, cap)
    chi_D, d_w = distinguishing_chromatic_number(g, cap, start=chi)
    chi_L, l_w = locating_chromatic_number(g, cap, start=chi)
    dim, W = metric_dimension(g, cap)
    return InvariantReport(
        n=g.n,
        edges=g.m,
        chi=chi,
        chi_L=chi_L,
        chi_D=chi_D,
        dim=dim,
        diam=diameter(g),
        aut_order=aut_order(g, cap),
        witnesses={
            "chi": list(chi_w.assignment),
            "chi_L": list(l_w.assignment),
            "chi_D": list(d_w.assignment),
            "dim": list(W),
        },
        graph6=write_graph6(g),
    )
