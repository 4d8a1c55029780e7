"""Structural analyses of sparse connected graphs.

Profiles (excess, leaves, supports, suspended paths), the residual
independence number alpha', the leaf-count reduction that contracts suspended
paths to edges and loops, end-edge matchings, suspended-path surgery and the
high-degree peeling loop.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Any, Iterable, Sequence, Union

from .graphcore import (
    Graph,
    MultiGraph,
    SuspendedPath,
    bits,
    independence_number,
    leaves,
    mask_of,
    max_suspended_path_size,
    support_vertices,
)


class PremiseViolation(ValueError):
    """Input outside the domain of the reduction; ``reason`` is a short tag."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


def is_star(g: Graph) -> bool:
    """K_{1,m} for some m >= 1 (so K_2 counts)."""
    n = g.n
    return n >= 2 and g.e == n - 1 and g.max_degree() == n - 1


@dataclass(frozen=True)
class SparsityProfile:
    n: int
    e: int
    excess: int
    connected: bool
    is_star: bool
    leaf_count: int
    p: int
    max_susp: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "e": self.e,
            "excess": self.excess,
            "connected": self.connected,
            "is_star": self.is_star,
            "leaf_count": self.leaf_count,
            "p": self.p,
            "max_susp": self.max_susp,
        }


def profile(g: Graph) -> SparsityProfile:
    return SparsityProfile(
        n=g.n,
        e=g.e,
        excess=g.e - g.n,
        connected=g.n > 0 and g.is_connected(),
        is_star=is_star(g),
        leaf_count=len(leaves(g)),
        p=len(support_vertices(g)),
        max_susp=max_suspended_path_size(g),
    )


def within_edge_budget(n: int, e: int, k: int, c: Union[int, Fraction, str]) -> bool:
    """e <= (1 + 1/(c k^2)) n, exactly; works for counts beyond the vertex cap."""
    c = Fraction(c)
    if k < 2 or c <= 0:
        raise ValueError("need k >= 2 and c > 0")
    return e <= (1 + 1 / (c * k * k)) * n


def sparsity_ok(g: Graph, k: int, c: Union[int, Fraction, str]) -> bool:
    return within_edge_budget(g.n, g.e, k, c)


def closed_neighbourhood_residue(g: Graph, v: int) -> Graph:
    """G_v: delete v and its neighbours."""
    return g.delete(bits(g.row(v) | 1 << v))


def alpha_prime(g: Graph) -> int:
    """Minimum independence number of G_v over all vertices v (0 on the null graph)."""
    if g.n == 0:
        return 0
    return min(independence_number(closed_neighbourhood_residue(g, v)) for v in range(g.n))


def gamma(n: int, k: int, alpha_p: int) -> int:
    if k < 2:
        raise ValueError("k must be at least 2")
    if not 0 <= alpha_p < n:
        raise ValueError("alpha' must satisfy 0 <= alpha' < n")
    return 0 if (n + k - 3 - alpha_p) % (k - 1) == 0 else 1


# ---------------------------------------------------------------------------
# leaf-count reduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PathContraction:
    """Internal vertices removed and replaced by one edge between the endpoints."""

    internal: tuple[int, ...]
    endpoints: tuple[int, int]

    def to_dict(self) -> dict[str, Any]:
        return {"op": "contract", "internal": list(self.internal), "endpoints": list(self.endpoints)}


@dataclass(frozen=True)
class CycleLoop:
    """Cycle through one anchor vertex collapsed to a loop at the anchor."""

    cycle: tuple[int, ...]
    anchor: int

    def to_dict(self) -> dict[str, Any]:
        return {"op": "loop", "cycle": list(self.cycle), "anchor": self.anchor}


Step = Union[PathContraction, CycleLoop]


@dataclass(frozen=True)
class ReductionTrace:
    """Record of the reduction. Vertex ids refer to the input graph throughout."""

    input: Graph
    g1: Graph
    g1_labels: tuple[int, ...]
    steps: tuple[Step, ...]
    g2: MultiGraph
    a: frozenset[int]
    b: frozenset[int]
    c: frozenset[int]

    @property
    def excess(self) -> int:
        return self.input.e - self.input.n

    def edge_identity_holds(self) -> bool:
        return self.g2.e == len(self.a) + len(self.b) + self.excess

    def branch_bound_holds(self) -> bool:
        return len(self.b) <= len(self.a) + 2 * self.excess

    def reconstruction_bound_holds(self, s: int) -> bool:
        return self.g1.n <= (s - 1) * self.g2.e + 1

    def to_dict(self) -> dict[str, Any]:
        g2 = self.g2
        lab = g2.labels
        return {
            "n": self.input.n,
            "e": self.input.e,
            "excess": self.excess,
            "A": sorted(self.a),
            "B": sorted(self.b),
            "C": sorted(self.c),
            "g1_vertices": list(self.g1_labels),
            "steps": [s.to_dict() for s in self.steps],
            "g2": {
                "vertices": list(lab),
                "edges": [[lab[u], lab[v], m] for (u, v), m in sorted(g2.mult.items()) if m],
                "loops": {str(lab[v]): c for v, c in enumerate(g2.loops) if c},
                "e": g2.e,
            },
        }


def _check_premise(g: Graph) -> None:
    if g.n < 3:
        raise PremiseViolation("too_small", "reduction needs at least 3 vertices")
    if not g.is_connected():
        raise PremiseViolation("disconnected", "reduction needs a connected graph")
    if is_star(g):
        raise PremiseViolation("star", "reduction is undefined for stars")
    if all(d == 2 for d in g.degrees()):
        raise PremiseViolation("cycle", "input is a cycle: every vertex has degree 2")


def _walk(rows: Sequence[int], c_mask: int, start: int, first: int) -> tuple[list[int], int]:
    """Follow degree-2 vertices from ``start`` through ``first``; return chain and exit vertex."""
    chain = [start]
    prev, cur = start, first
    while c_mask >> cur & 1:
        chain.append(cur)
        nxt = rows[cur] & ~(1 << prev)
        prev, cur = cur, (nxt & -nxt).bit_length() - 1
    return chain, cur


def dichotomy_reduce(g: Graph) -> ReductionTrace:
    """Strip leaves, then contract degree-2 chains to edges and closed chains to loops.

    Operations run lowest-index degree-2 vertex first, so traces are reproducible.
    """
    _check_premise(g)
    leaf = leaves(g)
    a = support_vertices(g)
    g1_labels = tuple(v for v in range(g.n) if v not in leaf)
    keep = mask_of(g1_labels)
    rows = [r & keep if keep >> v & 1 else 0 for v, r in enumerate(g.rows)]
    rest = [v for v in g1_labels if v not in a]
    b = frozenset(v for v in rest if rows[v].bit_count() >= 3)
    c = frozenset(v for v in rest if rows[v].bit_count() == 2)
    c_mask = mask_of(c)
    steps: list[Step] = []
    done = 0
    mult: dict[tuple[int, int], int] = {}
    loops: dict[int, int] = {}
    for v in sorted(c):
        if done >> v & 1:
            continue
        nbrs = list(bits(rows[v]))
        left, u = _walk(rows, c_mask, v, nbrs[0])
        right, w = _walk(rows, c_mask, v, nbrs[1])
        internal = tuple(reversed(left[1:])) + tuple(right)
        done |= mask_of(internal)
        if u == w:
            steps.append(CycleLoop((u, *internal), u))
            loops[u] = loops.get(u, 0) + 1
        else:
            if u > w:
                u, w = w, u
                internal = internal[::-1]
            steps.append(PathContraction(internal, (u, w)))
            mult[(u, w)] = mult.get((u, w), 0) + 1
    core = sorted(a | b)
    for u in core:
        for w in bits(rows[u] & mask_of(core)):
            if u < w:
                mult[(u, w)] = mult.get((u, w), 0) + 1
    g2 = _multigraph(core, mult, loops)
    return ReductionTrace(g, g.induced(g1_labels), g1_labels, tuple(steps), g2, a, b, c)


def _multigraph(core: list[int], mult: dict[tuple[int, int], int], loops: dict[int, int]) -> MultiGraph:
    pos = {v: i for i, v in enumerate(core)}
    return MultiGraph(
        len(core),
        {(pos[u], pos[w]): m for (u, w), m in sorted(mult.items())},
        tuple(loops.get(v, 0) for v in core),
        tuple(core),
    )


def replay(trace: ReductionTrace) -> MultiGraph:
    """Apply the recorded steps to G1 again and return the resulting multigraph."""
    labels = trace.g1_labels
    edges: dict[tuple[int, int], int] = {}
    for u, w in trace.g1.edges():
        key = tuple(sorted((labels[u], labels[w])))
        edges[key] = edges.get(key, 0) + 1
    alive = set(labels)
    loops: dict[int, int] = {}
    for step in trace.steps:
        if isinstance(step, PathContraction):
            chain = (step.endpoints[0], *step.internal, step.endpoints[1])
        else:
            chain = (*step.cycle, step.anchor)
        for x, y in zip(chain, chain[1:]):
            key = tuple(sorted((x, y)))
            if edges.get(key, 0) < 1:
                raise ValueError(f"step {step} uses a missing edge {key}")
            edges[key] -= 1
        alive.difference_update(chain[1:-1])
        if isinstance(step, PathContraction):
            key = tuple(sorted(step.endpoints))
            edges[key] = edges.get(key, 0) + 1
        else:
            loops[step.anchor] = loops.get(step.anchor, 0) + 1
    mult = {k: m for k, m in edges.items() if m}
    if any(x not in alive or y not in alive for x, y in mult):
        raise ValueError("replay left an edge on a removed vertex")
    return _multigraph(sorted(alive), mult, loops)


def leaf_bounds(prof: SparsityProfile, s: int) -> tuple[int, Fraction]:
    """The two lower bounds on the leaf count of a premise graph."""
    n, t, p = prof.n, prof.excess, prof.p
    if s < 2 or n < s + 1:
        raise ValueError("need s >= 2 and n >= s + 1")
    bound1 = n - (s - 1) * (2 * p + 3 * t) - 1
    bound2 = Fraction(n - 3 * (s - 1) * t - 1, 2 * s - 1)
    return bound1, bound2


# ---------------------------------------------------------------------------
# end-edges and suspended-path surgery
# ---------------------------------------------------------------------------


Edge = tuple[int, int]


def end_edge_matching(g: Graph, l: int) -> list[Edge] | None:
    """``l`` disjoint end-edges as (support, leaf) pairs, one per support vertex."""
    if l < 1:
        raise ValueError("l must be positive")
    leaf = leaves(g)
    out: list[Edge] = []
    used = 0
    for sup in sorted(support_vertices(g)):
        if used >> sup & 1:
            continue
        for x in bits(g.row(sup)):
            if x in leaf and not used >> x & 1:
                out.append((sup, x))
                used |= 1 << sup | 1 << x
                break
        if len(out) == l:
            return out
    return None


def remove_matched_leaves(g: Graph, matching: Iterable[Edge]) -> Graph:
    leaf = leaves(g)
    drop: list[int] = []
    used = 0
    for u, v in matching:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        if (used >> u | used >> v) & 1:
            raise ValueError("matching edges must be disjoint")
        used |= 1 << u | 1 << v
        if v in leaf:
            drop.append(v)
        elif u in leaf:
            drop.append(u)
        else:
            raise ValueError(f"({u}, {v}) is not an end-edge")
    return g.delete(drop)


PathRef = Union[SuspendedPath, Sequence[int]]


def _as_path(g: Graph, path: PathRef) -> tuple[int, ...]:
    verts = tuple(path.vertices if isinstance(path, SuspendedPath) else path)
    if len(verts) < 2:
        raise ValueError("a suspended path needs at least two vertices")
    if len(set(verts)) != len(verts):
        raise ValueError("suspended path repeats a vertex")
    for x, y in zip(verts, verts[1:]):
        if not 0 <= x < g.n or not 0 <= y < g.n or not g.has_edge(x, y):
            raise ValueError(f"({x}, {y}) is not an edge")
    for x in verts[1:-1]:
        if g.degree(x) != 2:
            raise ValueError(f"internal vertex {x} does not have degree 2")
    return verts


def shorten_suspended(g: Graph, path: PathRef, d: int) -> Graph:
    """Remove the last ``d`` internal vertices of a suspended path and close the gap."""
    verts = _as_path(g, path)
    internal = verts[1:-1]
    if not 0 <= d < len(internal):
        raise ValueError(f"can shorten by at most {len(internal) - 1} here")
    if d == 0:
        return g
    cut = internal[len(internal) - d :]
    joined = g.add_edges([(internal[len(internal) - d - 1], verts[-1])])
    return joined.delete(cut)


def lengthen_suspended(g: Graph, path: PathRef, d: int) -> Graph:
    """Insert ``d`` new vertices before the last vertex of a suspended path."""
    verts = _as_path(g, path)
    if d < 0:
        raise ValueError("d must be non-negative")
    if d == 0:
        return g
    if g.n + d > 128:
        raise ValueError("result would exceed the vertex cap")
    x, y = verts[-2], verts[-1]
    new = list(range(g.n, g.n + d))
    chain = [x, *new, y]
    edges = [e for e in g.edges() if set(e) != {x, y}]
    edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(g.n + d, edges)


# ---------------------------------------------------------------------------
# peeling
# ---------------------------------------------------------------------------


def peel_high_degree(f: Graph, threshold: Real) -> tuple[frozenset[int], int]:
    """Delete a maximum-degree vertex while some degree reaches ``threshold``.

    Ties go to the lowest index. Returns the surviving set and the step count.
    """
    if not threshold > 0:
        raise ValueError("threshold must be positive")
    rows = list(f.rows)
    alive = f.vertex_mask
    steps = 0
    while alive:
        best, best_deg = -1, -1
        for v in bits(alive):
            dv = (rows[v] & alive).bit_count()
            if dv > best_deg:
                best, best_deg = v, dv
        if best_deg < threshold:
            break
        alive &= ~(1 << best)
        steps += 1
    return frozenset(bits(alive)), steps


def to_json(obj: Union[SparsityProfile, ReductionTrace], **extra: Any) -> str:
    data = obj.to_dict()
    data.update(extra)
    return json.dumps(data, sort_keys=True)
