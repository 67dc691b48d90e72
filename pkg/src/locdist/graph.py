"""Simple connected graphs, hop distances, text formats and family generators."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

GRAPH6_MAX_N = 62
DEFAULT_CAP = 16


class GraphError(ValueError):
    """Base class for invalid graph input."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


class DisconnectedGraphError(GraphError):
    """Raised when a graph would not be connected."""


class SizeCapError(ValueError):
    """An exact routine was asked to run above its configured vertex cap."""


def default_cap() -> int:
    """Solver vertex cap; ``LOCDIST_CAP`` overrides the built-in 16."""
    raw = os.environ.get("LOCDIST_CAP")
    return int(raw) if raw else DEFAULT_CAP


def check_cap(n: int, cap: int | None, what: str = "graph") -> None:
    limit = default_cap() if cap is None else cap
    if n > limit:
        raise SizeCapError(f"{what} has {n} vertices, above the cap of {limit}")


def _bfs_row(nbrs: Sequence[Sequence[int]], source: int) -> list[int]:
    n = len(nbrs)
    row = [-1] * n
    row[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if row[w] < 0:
                row[w] = row[u] + 1
                queue.append(w)
    return row


class Graph:
    """An immutable simple, undirected, connected graph on vertices ``0..n-1``.

    All-pairs hop distances are computed by BFS at construction and kept
    as a tuple of rows (``g.dist[u][v]``); :func:`distances` exposes the
    same data as a read-only numpy array.
    """

    __slots__ = ("n", "_edges", "nbrs", "masks", "dist")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.nbrs = tuple(tuple(sorted(a)) for a in adj)
        self.masks = tuple(sum(1 << w for w in a) for a in adj)
        self._edges = tuple((u, v) for u in range(n) for v in self.nbrs[u] if u < v)
        rows = [_bfs_row(self.nbrs, s) for s in range(n)]
        if any(d < 0 for d in rows[0]):
            raise DisconnectedGraphError(f"graph on {n} vertices is not connected")
        self.dist = tuple(tuple(r) for r in rows)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        return len(self.nbrs[v])

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self._edges))

    def is_tree(self) -> bool:
        return self.m == self.n - 1

    def is_bipartite(self) -> bool:
        return all(self.dist[0][u] % 2 != self.dist[0][v] % 2 for u, v in self._edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"


def distances(g: Graph) -> np.ndarray:
    """n x n matrix of shortest-path hop counts."""
    out = np.array(g.dist, dtype=np.int64)
    out.setflags(write=False)
    return out


def diameter(g: Graph) -> int:
    return max(max(row) for row in g.dist)


def complement_masks(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    return [full & ~m & ~(1 << v) for v, m in enumerate(g.masks)]


# --- graph6 -----------------------------------------------------------------


def encode_graph6(n: int, masks: Sequence[int]) -> str:
    """graph6 text for the (possibly disconnected) graph given by neighbour masks."""
    if not 1 <= n <= GRAPH6_MAX_N:
        raise Graph6Error(f"graph6 short form needs 1 <= n <= {GRAPH6_MAX_N}, got {n}")
    bits = [masks[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for pos in range(0, len(bits), 6):
        chunk = bits[pos:pos + 6]
        out.append(chr(63 + int("".join(map(str, chunk)), 2)))
    return "".join(out)


def decode_graph6(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Decode graph6 text into ``(n, edges)`` without a connectivity check."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(ch) - 63 for ch in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"byte out of range in graph6 string {s!r}")
    n = codes[0]
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if n == 0:
        raise Graph6Error("graph6 string encodes the empty graph")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(codes) != expected:
        raise Graph6Error(f"graph6 string {s!r} has length {len(codes)}, expected {expected} for n={n}")
    bits = [(c >> (5 - i)) & 1 for c in codes[1:] for i in range(6)]
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    if any(bits[nbits:]):
        raise Graph6Error(f"nonzero padding bits in graph6 string {s!r}")
    return n, edges


def parse_graph6(text: str) -> Graph:
    n, edges = decode_graph6(text)
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    return encode_graph6(g.n, g.masks)


# --- edge-list text ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored.  Errors name the offending
    1-based line number.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("edge list is empty")
    lineno, head = rows[0]
    if len(head) != 1 or not head[0].isdigit():
        raise GraphError(f"line {lineno}: expected vertex count, got {' '.join(head)!r}")
    n = int(head[0])
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphError(f"line {lineno}: expected 'u v', got {' '.join(parts)!r}")
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise GraphError(f"line {lineno}: vertex out of range for n={n}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# --- families ---------------------------------------------------------------

FAMILIES = ("path", "cycle", "complete", "complete_multipartite", "star", "spider")


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family plus its integer parameters.

    ``path``, ``cycle``, ``star`` and ``complete`` take the vertex count;
    ``complete_multipartite`` takes the part sizes; ``spider`` takes
    ``(n, m)`` with ``2 <= n <= m <= 2n - 1``.
    """

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        fam, p = self.family, self.params
        if fam not in FAMILIES:
            raise GraphError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")
        if fam in ("path", "cycle", "star", "complete"):
            if len(p) != 1:
                raise GraphError(f"{fam} takes one parameter, got {len(p)}")
            if p[0] < (3 if fam == "cycle" else 1):
                raise GraphError(f"{fam} size {p[0]} is too small")
        elif fam == "complete_multipartite":
            if not p or min(p) < 1:
                raise GraphError("complete_multipartite needs part sizes >= 1")
        elif fam == "spider":
            if len(p) != 2:
                raise GraphError("spider takes two parameters (n, m)")
            n, m = p
            if not 2 <= n <= m <= 2 * n - 1:
                raise GraphError(f"spider needs 2 <= n <= m <= 2n-1, got ({n}, {m})")

    @classmethod
    def parse(cls, family: str, params: str) -> "FamilySpec":
        try:
            values = tuple(int(tok) for tok in params.split(",") if tok.strip())
        except ValueError as exc:
            raise GraphError(f"bad family parameters {params!r}") from exc
        return cls(family, values)


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, ((i, j) for j in range(n) for i in range(j)))


def star(n: int) -> Graph:
    """Star on ``n`` vertices: centre 0 joined to ``1..n-1``."""
    return Graph(n, ((0, i) for i in range(1, n)))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return Graph(n, ((u, v) for v in range(n) for u in range(v) if part[u] != part[v]))


def spider(n: int, m: int) -> Graph:
    """Centre 0 with ``(n-1)**2`` legs of length two and ``m-n`` pendant leaves.

    Leg ``i`` is ``0 - (2i+1) - (2i+2)``; pendants are numbered after the legs.
    """
    legs = (n - 1) ** 2
    edges = []
    for i in range(legs):
        x, y = 2 * i + 1, 2 * i + 2
        edges += [(0, x), (x, y)]
    first = 2 * legs + 1
    edges += [(0, first + j) for j in range(m - n)]
    return Graph(first + (m - n), edges)


def generate(spec: FamilySpec) -> Graph:
    p = spec.params
    if spec.family == "path":
        return path(p[0])
    if spec.family == "cycle":
        return cycle(p[0])
    if spec.family == "complete":
        return complete(p[0])
    if spec.family == "star":
        return star(p[0])
    if spec.family == "complete_multipartite":
        return complete_multipartite(p)
    return spider(*p)
