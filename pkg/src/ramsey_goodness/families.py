"""Named constructors for the graph families the workbench is run on."""

from __future__ import annotations

from itertools import combinations
from typing import Callable

from .graphcore import Graph


def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path(n: int) -> Graph:
    """P_n: ``n`` vertices, ``n-1`` edges."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1}: hub 0 and ``n-1`` leaves."""
    if n < 1:
        raise ValueError("a star needs at least one vertex")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_multipartite(sizes: list[int] | tuple[int, ...]) -> Graph:
    part = []
    for p, size in enumerate(sizes):
        if size < 0:
            raise ValueError("part sizes must be non-negative")
        part.extend([p] * size)
    n = len(part)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def spider(legs: int, leg_length: int) -> Graph:
    """Hub 0 with ``legs`` pendant paths of ``leg_length`` vertices each."""
    if legs < 1 or leg_length < 1:
        raise ValueError("spider needs at least one leg of positive length")
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(leg_length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def broom(handle: int, bristles: int) -> Graph:
    """Path on ``handle`` vertices with ``bristles`` leaves on its last vertex."""
    if handle < 1:
        raise ValueError("broom handle needs at least one vertex")
    n = handle + bristles
    edges = [(i, i + 1) for i in range(handle - 1)]
    edges += [(handle - 1, handle + j) for j in range(bristles)]
    return Graph.from_edges(n, edges)


def theta(lengths: tuple[int, ...] = (3, 3, 3)) -> Graph:
    """Two branch vertices joined by internally disjoint paths.

    ``lengths`` counts the edges of each path, so (3, 3, 3) gives three paths
    with two internal vertices each.
    """
    edges = []
    nxt = 2
    for ln in lengths:
        prev = 0
        for _ in range(ln - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def _ints(arg: str, sep: str) -> list[int]:
    return [int(x) for x in arg.split(sep) if x]


FAMILIES: dict[str, Callable[[str], Graph]] = {
    "path": lambda a: path(int(a)),
    "cycle": lambda a: cycle(int(a)),
    "star": lambda a: star(int(a)),
    "complete": lambda a: complete(int(a)),
    "empty": lambda a: empty(int(a)),
    "multipartite": lambda a: complete_multipartite(_ints(a, ",")),
    "spider": lambda a: spider(*_ints(a, "x")),
    "broom": lambda a: broom(*_ints(a, "x")),
    "theta": lambda a: theta(tuple(_ints(a, ","))),
    "petersen": lambda a: petersen(),
}


def from_spec(text: str) -> Graph:
    """Build a graph from ``family:args``, e.g. ``spider:3x2`` or ``multipartite:3,3``."""
    name, _, arg = text.partition(":")
    try:
        builder = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}") from None
    try:
        return builder(arg)
    except TypeError as exc:
        raise ValueError(f"bad arguments for {name}: {arg!r}") from exc
