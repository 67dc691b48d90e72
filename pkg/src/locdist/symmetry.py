"""Automorphisms, colour-preserving automorphism search and canonical forms.

Everything here is exact backtracking sized for small graphs.  Candidate
images are pruned by vertex signatures (colour plus the multiset of
``(distance, colour)`` pairs to every other vertex) and by requiring the
partial map to preserve all distances already fixed, which for connected
graphs is equivalent to preserving adjacency.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .graph import Graph, check_cap, encode_graph6

LISTING_CAP = 10**5


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``0..n-1``; ``image[v]`` is the image of ``v``."""

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(x) for x in self.image))
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation: {list(self.image)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __call__(self, v: int) -> int:
        return self.image[v]

    def __len__(self) -> int:
        return len(self.image)

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.image))

    def compose(self, other: "Permutation") -> "Permutation":
        """``self`` after ``other``: ``v -> self(other(v))``."""
        return Permutation(tuple(self.image[w] for w in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.image)) + "]"


@dataclass(frozen=True)
class AutGroup:
    """Automorphism group of a graph.

    ``elements`` lists every automorphism when the order is at most the
    listing cap and is ``None`` otherwise.  ``generators`` always holds the
    coset representatives of the pointwise stabiliser chain, which generate
    the group.
    """

    order: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...] | None = field(default=None)


def is_automorphism(g: Graph, perm: Permutation | Sequence[int]) -> bool:
    image = perm.image if isinstance(perm, Permutation) else tuple(perm)
    if len(image) != g.n or sorted(image) != list(range(g.n)):
        return False
    mapped = {(min(image[u], image[v]), max(image[u], image[v])) for u, v in g.edges}
    return mapped == set(g.edges)


def preserves_colors(perm: Permutation | Sequence[int], colors: Sequence[int]) -> bool:
    image = perm.image if isinstance(perm, Permutation) else perm
    return all(colors[image[v]] == colors[v] for v in range(len(colors)))


def _as_colors(g: Graph, coloring) -> tuple[int, ...]:
    if coloring is None:
        return (0,) * g.n
    colors = tuple(getattr(coloring, "assignment", coloring))
    if len(colors) != g.n:
        raise ValueError(f"coloring has {len(colors)} entries for a graph on {g.n} vertices")
    return colors


def _signatures(g: Graph, colors: Sequence[int]) -> list[tuple]:
    sigs = []
    for v in range(g.n):
        row = g.dist[v]
        profile = tuple(sorted((row[u], colors[u]) for u in range(g.n)))
        sigs.append((colors[v], profile))
    return sigs


def _search_order(g: Graph) -> list[int]:
    order, seen = [], [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        for u in queue:
            order.append(u)
            for w in g.nbrs[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


class _Matcher:
    """Backtracking search for distance-preserving bijections.

    ``candidates[v]`` is the ascending list of vertices sharing ``v``'s
    signature.  Partial maps are extended in BFS order.
    """

    def __init__(self, g: Graph, colors: Sequence[int]):
        self.g = g
        self.order = _search_order(g)
        sigs = _signatures(g, colors)
        self.candidates = [[w for w in range(g.n) if sigs[w] == sigs[v]] for v in range(g.n)]

    def extend(self, image: list[int], used: list[bool], pos: int) -> Iterator[list[int]]:
        g, order = self.g, self.order
        if pos == g.n:
            yield image
            return
        v = order[pos]
        if image[v] >= 0:
            yield from self.extend(image, used, pos + 1)
            return
        dv = g.dist[v]
        mapped = [u for u in order[:pos]] + [u for u in order[pos + 1:] if image[u] >= 0]
        for w in self.candidates[v]:
            if used[w]:
                continue
            dw = g.dist[w]
            if all(dv[u] == dw[image[u]] for u in mapped):
                image[v], used[w] = w, True
                yield from self.extend(image, used, pos + 1)
                image[v], used[w] = -1, False

    def find(self, fixed: dict[int, int]) -> list[int] | None:
        """First full map extending ``fixed``, or ``None``."""
        n = self.g.n
        image, used = [-1] * n, [False] * n
        for v, w in fixed.items():
            if w not in self.candidates[v] or used[w]:
                return None
            image[v], used[w] = w, True
        for v, w in fixed.items():
            if any(self.g.dist[v][u] != self.g.dist[w][x] for u, x in fixed.items()):
                return None
        for result in self.extend(image, used, 0):
            return list(result)
        return None

    def all(self) -> Iterator[tuple[int, ...]]:
        n = self.g.n
        for result in self.extend([-1] * n, [False] * n, 0):
            yield tuple(result)


def _stabilizer_chain(matcher: _Matcher) -> tuple[int, list[Permutation]]:
    order, generators = 1, []
    fixed: dict[int, int] = {}
    for v in matcher.order:
        orbit = 1
        for w in matcher.candidates[v]:
            if w == v:
                continue
            found = matcher.find({**fixed, v: w})
            if found is not None:
                orbit += 1
                generators.append(Permutation(tuple(found)))
        order *= orbit
        fixed[v] = v
    return order, generators


def automorphisms(g: Graph, cap: int | None = None, listing_cap: int = LISTING_CAP) -> AutGroup:
    """Automorphism group of ``g``.

    The order comes from the pointwise stabiliser chain along the BFS
    search order.  Elements are listed, in lexicographic order of their
    image arrays, only when the order does not exceed ``listing_cap``.
    """
    check_cap(g.n, cap)
    matcher = _Matcher(g, (0,) * g.n)
    order, generators = _stabilizer_chain(matcher)
    elements = None
    if order <= listing_cap:
        elements = tuple(Permutation(img) for img in sorted(matcher.all()))
    return AutGroup(order=order, generators=tuple(generators), elements=elements)


def aut_order(g: Graph, cap: int | None = None) -> int:
    check_cap(g.n, cap)
    return _stabilizer_chain(_Matcher(g, (0,) * g.n))[0]


def find_color_preserving_automorphism(g: Graph, coloring) -> Permutation | None:
    """Some non-identity automorphism preserving every vertex colour, else ``None``.

    ``coloring`` is a colour sequence indexed by vertex or any object with an
    ``assignment`` attribute.  Vertices with a unique signature are fixed by
    every colour-preserving automorphism and are never branched on.
    """
    colors = _as_colors(g, coloring)
    matcher = _Matcher(g, colors)
    fixed: dict[int, int] = {}
    for v in matcher.order:
        for w in matcher.candidates[v]:
            if w == v:
                continue
            found = matcher.find({**fixed, v: w})
            if found is not None:
                return Permutation(tuple(found))
        fixed[v] = v
    return None


# --- canonical form ---------------------------------------------------------


def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = [sum(1 << v for v in cell) for cell in cells]
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(bin(masks[v] & cm).count("1") for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            out.extend(groups[sig] for sig in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _mutual_twins(masks: Sequence[int], cell: list[int]) -> bool:
    first = cell[0]
    for v in cell[1:]:
        strip = ~((1 << first) | (1 << v))
        if masks[first] & strip != masks[v] & strip:
            return False
    return True


def canonical_labeling(n: int, masks: Sequence[int]) -> tuple[str, list[int]]:
    """Canonical graph6 key and the vertex order realising it.

    Works on neighbour masks so that disconnected intermediate graphs (used
    by the enumerators) can be keyed as well.  Individualisation-refinement:
    refine to an equitable ordered partition, branch on the first
    non-singleton cell, keep the lexicographically least graph6 string over
    all leaves.  Cells made of mutual twins are branched on once.
    """
    best: list = [None, None]

    def leaf_key(order: list[int]) -> str:
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        relabeled = [0] * n
        for v in range(n):
            m = masks[v]
            acc = 0
            while m:
                low = m & -m
                acc |= 1 << pos[low.bit_length() - 1]
                m ^= low
            relabeled[pos[v]] = acc
        return encode_graph6(n, relabeled)

    def search(cells: list[list[int]]) -> None:
        cells = _refine(masks, cells)
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            key = leaf_key(order)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, order
            return
        branch = cell[:1] if _mutual_twins(masks, cell) else cell
        for v in branch:
            rest = [u for u in cell if u != v]
            search(cells[:i] + [[v], rest] + cells[i + 1:])

    search([list(range(n))])
    return best[0], best[1]


def canonical_form(g: Graph, cap: int | None = None) -> bytes:
    """Label-invariant key: equal exactly when the graphs are isomorphic."""
    check_cap(g.n, cap)
    return canonical_labeling(g.n, g.masks)[0].encode("ascii")


def canonical_graph(g: Graph) -> Graph:
    """``g`` relabelled into its canonical numbering."""
    _, order = canonical_labeling(g.n, g.masks)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)
