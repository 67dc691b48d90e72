"""Isomorph-free enumeration of small connected graphs and trees.

Both enumerators grow graphs one vertex at a time and keep one
representative per canonical key, so every stream is emitted in ascending
canonical-key order with each graph in its canonical numbering.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, SizeCapError, decode_graph6
from .symmetry import canonical_labeling

MAX_GRAPH_N = 7
MAX_TREE_N = 10


def _is_connected(n: int, masks: tuple[int, ...]) -> bool:
    seen, frontier = 1, 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= masks[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


@lru_cache(maxsize=None)
def _all_graph_keys(n: int) -> tuple[str, ...]:
    """Canonical keys of every graph (connected or not) on ``n`` vertices."""
    if n == 1:
        return (canonical_labeling(1, (0,))[0],)
    keys = set()
    for key in _all_graph_keys(n - 1):
        k, edges = decode_graph6(key)
        base = [0] * n
        for u, v in edges:
            base[u] |= 1 << v
            base[v] |= 1 << u
        new = n - 1
        for subset in range(1 << new):
            masks = list(base)
            masks[new] = subset
            for u in range(new):
                if subset >> u & 1:
                    masks[u] |= 1 << new
            keys.add(canonical_labeling(n, masks)[0])
    return tuple(sorted(keys))


def _from_key(key: str) -> Graph:
    n, edges = decode_graph6(key)
    return Graph(n, edges)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per connected graph on ``n`` vertices."""
    if not 1 <= n <= MAX_GRAPH_N:
        raise SizeCapError(f"graph enumeration supports 1 <= n <= {MAX_GRAPH_N}, got {n}")
    for key in _all_graph_keys(n):
        _, edges = decode_graph6(key)
        masks = [0] * n
        for u, v in edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        if _is_connected(n, tuple(masks)):
            yield Graph(n, edges)


@lru_cache(maxsize=None)
def _tree_keys(n: int) -> tuple[str, ...]:
    if n == 1:
        return (canonical_labeling(1, (0,))[0],)
    keys = set()
    for key in _tree_keys(n - 1):
        _, edges = decode_graph6(key)
        base = [0] * n
        for u, v in edges:
            base[u] |= 1 << v
            base[v] |= 1 << u
        for parent in range(n - 1):
            masks = list(base)
            masks[parent] |= 1 << (n - 1)
            masks[n - 1] = 1 << parent
            keys.add(canonical_labeling(n, masks)[0])
    return tuple(sorted(keys))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One canonical representative per free tree on ``n`` vertices."""
    if not 1 <= n <= MAX_TREE_N:
        raise SizeCapError(f"tree enumeration supports 1 <= n <= {MAX_TREE_N}, got {n}")
    for key in _tree_keys(n):
        yield _from_key(key)
