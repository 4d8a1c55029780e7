"""Bit-row graphs and the exact primitives everything else is built on.

A :class:`Graph` keeps one Python ``int`` per vertex as its adjacency row, so
neighbourhood algebra is word-parallel and the vertex cap (128) costs
nothing extra. Graphs are immutable; every operation returns a new value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 128

VertexSet = frozenset  # frozenset[int]; bit masks stay internal


class SearchBudgetExceeded(RuntimeError):
    """Raised when an exact search visits more nodes than its budget allows."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_rows", "_e")

    def __init__(self, n: int, rows: Sequence[int] | None = None):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = tuple(rows) if rows is not None else (0,) * n
        if len(rows) != n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << n) - 1
        degree_sum = 0
        for v, r in enumerate(rows):
            if r & ~full or r >> v & 1:
                raise ValueError(f"row {v} has out-of-range bits or a self-loop")
            for u in bits(r):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
            degree_sum += r.bit_count()
        self._n = n
        self._rows = rows
        self._e = degree_sum // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_code(cls, code: int, n: int) -> Graph:
        """Decode the integer form used by the oracle.

        Bit ``j*(j-1)/2 + i`` (for ``i < j``) holds edge ``ij``: the graph6
        column order, so a graph's code is a prefix of its one-vertex
        extensions.
        """
        rows = [0] * n
        idx = 0
        for j in range(1, n):
            for i in range(j):
                if code >> idx & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                idx += 1
        return cls(n, rows)

    def to_code(self) -> int:
        code = 0
        idx = 0
        rows = self._rows
        for j in range(1, self._n):
            r = rows[j]
            for i in range(j):
                if r >> i & 1:
                    code |= 1 << idx
                idx += 1
        return code

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def e(self) -> int:
        return self._e

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def row(self, v: int) -> int:
        return self._rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in bits(self._rows[u] >> (u + 1) << (u + 1))]

    def components(self) -> list[int]:
        """Connected components as vertex masks, ordered by lowest vertex."""
        rows = self._rows
        seen = 0
        comps = []
        for s in range(self._n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= rows[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self._n > 0 and len(self.components()) == 1

    def bipartition(self) -> tuple[int, int] | None:
        """Return colour classes ``(X, Y)`` as masks, or None if an odd cycle exists."""
        rows = self._rows
        side = [-1] * self._n
        for s in range(self._n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in bits(rows[u]):
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return None
        x = mask_of(v for v in range(self._n) if side[v] == 0)
        return x, self.vertex_mask & ~x

    # -- derived graphs ------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled by increasing original index."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(mask_of(pos[u] for u in bits(self._rows[v]) if u in pos))
        return Graph(len(keep), rows)

    def delete(self, vertices: Iterable[int]) -> Graph:
        drop = mask_of(vertices)
        return self.induced(v for v in range(self._n) if not drop >> v & 1)

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self._rows)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self._n, rows)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self._rows)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self._n, rows)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self._n
        for v, r in enumerate(self._rows):
            rows[perm[v]] = mask_of(perm[u] for u in bits(r))
        return Graph(self._n, rows)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, e={self._e})"


@dataclass(frozen=True)
class MultiGraph:
    """Multigraph with loops; ``labels[i]`` names vertex ``i`` in a source graph."""

    n: int
    mult: dict[tuple[int, int], int] = field(default_factory=dict)
    loops: tuple[int, ...] = ()
    labels: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.loops:
            object.__setattr__(self, "loops", (0,) * self.n)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        if len(self.loops) != self.n or len(self.labels) != self.n:
            raise ValueError("loops and labels need one entry per vertex")
        for (u, v), m in self.mult.items():
            if not 0 <= u < v < self.n or m < 0:
                raise ValueError(f"bad multiplicity entry ({u}, {v}) -> {m}")
        if any(c < 0 for c in self.loops):
            raise ValueError("negative loop count")

    @property
    def e(self) -> int:
        return sum(self.mult.values()) + sum(self.loops)

    def non_loop_edges(self) -> int:
        return sum(self.mult.values())

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        adj: dict[int, set[int]] = {v: set() for v in range(self.n)}
        for (u, v), m in self.mult.items():
            if m:
                adj[u].add(v)
                adj[v].add(u)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


# ---------------------------------------------------------------------------
# complement and containment
# ---------------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, [full & ~r & ~(1 << v) for v, r in enumerate(g.rows)])


def _reach(rows: Sequence[int], v: int, free: int) -> int:
    """Vertices reachable from ``v`` through ``free`` (excluding ``v``)."""
    reach = 0
    frontier = rows[v] & free
    while frontier:
        reach |= frontier
        nxt = 0
        for u in bits(frontier):
            nxt |= rows[u]
        frontier = nxt & free & ~reach
    return reach


def _extend_path(rows: Sequence[int], v: int, used: int, length: int, k: int, avail: int) -> bool:
    if length == k:
        return True
    free = avail & ~used
    if _reach(rows, v, free).bit_count() < k - length:
        return False
    for u in bits(rows[v] & free):
        if _extend_path(rows, u, used | 1 << u, length + 1, k, avail):
            return True
    return False


def contains_path(g: Graph, k: int) -> bool:
    """True iff ``g`` has a simple path on ``k`` vertices (exact DFS)."""
    if k < 1:
        raise ValueError("path order must be at least 1")
    if k > g.n:
        return False
    if k == 1:
        return True
    if k == 2:
        return g.e > 0
    rows = g.rows
    for comp in g.components():
        if comp.bit_count() < k:
            continue
        for s in bits(comp):
            if _extend_path(rows, s, 1 << s, 1, k, comp):
                return True
    return False


def _close_cycle(rows: Sequence[int], s: int, v: int, second: int, used: int, length: int, k: int, avail: int) -> bool:
    if length == k:
        # each cycle is seen in both directions; keep the one with second < last
        return bool(rows[v] >> s & 1) and second < v
    free = avail & ~used
    reach = _reach(rows, v, free)
    if reach.bit_count() < k - length or not reach & rows[s]:
        return False
    for u in bits(rows[v] & free):
        if _close_cycle(rows, s, u, second, used | 1 << u, length + 1, k, avail):
            return True
    return False


def contains_cycle(g: Graph, k: int) -> bool:
    """True iff ``g`` has a cycle on exactly ``k`` vertices (exact DFS)."""
    if k < 3:
        raise ValueError("cycle order must be at least 3")
    if k > g.n or g.e < k:
        return False
    if k % 2 and g.bipartition() is not None:
        return False
    rows = g.rows
    for comp in g.components():
        if comp.bit_count() < k:
            continue
        for s in bits(comp):
            # s is the smallest vertex on the cycle
            avail = comp & ~((1 << (s + 1)) - 1)
            for w in bits(rows[s] & avail):
                if _close_cycle(rows, s, w, w, (1 << s) | (1 << w), 2, k, avail):
                    return True
    return False


def contains_clique(g: Graph, k: int) -> bool:
    if k <= 1:
        return g.n >= k
    rows = g.rows

    def grow(cand: int, size: int) -> bool:
        if size == k:
            return True
        if size + cand.bit_count() < k:
            return False
        for v in bits(cand):
            cand &= ~(1 << v)
            if grow(cand & rows[v], size + 1):
                return True
        return False

    return grow(g.vertex_mask, 0)


def twin_classes(g: Graph) -> list[int]:
    """Class id per vertex; same id iff the two vertices are (true or false) twins.

    Swapping two twins is an automorphism fixing every other vertex.
    """
    rows = g.rows
    cls = list(range(g.n))
    for v in range(g.n):
        for u in range(v):
            if cls[u] == u and rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                cls[v] = u
                break
    return cls


def _search_order(pattern: Graph, core: list[int]) -> list[int]:
    rows = pattern.rows
    remaining = set(core)
    placed = 0
    order = []
    while remaining:
        best = max(remaining, key=lambda v: ((rows[v] & placed).bit_count(), pattern.degree(v), -v))
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)
    return order


def _match_slots(slots: list[int], free: int) -> dict[int, int] | None:
    """Assign each slot (a mask of allowed host vertices) a distinct vertex."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for h in bits(slots[i] & free):
            if h in seen:
                continue
            seen.add(h)
            if h not in owner or augment(owner[h], seen):
                owner[h] = i
                return True
        return False

    for i in range(len(slots)):
        if not augment(i, set()):
            return None
    return {i: h for h, i in owner.items()}


def find_embedding(host: Graph, pattern: Graph, *, budget: int | None = None) -> dict[int, int] | None:
    """Injective edge-preserving map ``V(pattern) -> V(host)``, or None.

    Non-induced embedding. Pendant leaves are attached at the end by bipartite
    matching and isolated pattern vertices by counting; the core search breaks
    host twin symmetry (only the lowest unused twin is tried) and pattern twin
    symmetry (twins receive increasing images).
    """
    if pattern.n > host.n or pattern.e > host.e:
        return None
    if pattern.n == 0:
        return {}
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    if any(p > h for p, h in zip(sorted(pdeg, reverse=True), sorted(hdeg, reverse=True))):
        return None
    if max(c.bit_count() for c in pattern.components()) > max(c.bit_count() for c in host.components()):
        return None

    prow = pattern.rows
    hrow = host.rows
    isolated = [v for v in range(pattern.n) if pdeg[v] == 0]
    leaf_of: dict[int, int] = {}
    for v in range(pattern.n):
        if pdeg[v] == 1:
            u = prow[v].bit_length() - 1
            if pdeg[u] >= 2 or u < v:
                leaf_of[v] = u
    core = [v for v in range(pattern.n) if pdeg[v] > 0 and v not in leaf_of]
    order = _search_order(pattern, core)
    pos = {v: i for i, v in enumerate(order)}
    earlier_nbrs = [[pos[u] for u in bits(prow[v]) if u in pos and pos[u] < i] for i, v in enumerate(order)]
    ptwin = twin_classes(pattern)
    earlier_twins = [[pos[u] for u in order[:i] if ptwin[u] == ptwin[v]] for i, v in enumerate(order)]
    need = [pdeg[v] for v in order]
    hcls = twin_classes(host)
    class_mask: dict[int, int] = {}
    for h, c in enumerate(hcls):
        class_mask[c] = class_mask.get(c, 0) | 1 << h
    leaves = sorted(leaf_of)
    nodes = 0
    image = [0] * len(order)

    def place(i: int, used: int) -> dict[int, int] | None:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchBudgetExceeded(f"embedding search exceeded {budget} nodes")
        if i == len(order):
            assign = dict(zip(order, image))
            slots = [hrow[assign[leaf_of[v]]] for v in leaves]
            matched = _match_slots(slots, host.vertex_mask & ~used)
            if matched is None:
                return None
            taken = used
            for j, h in matched.items():
                assign[leaves[j]] = h
                taken |= 1 << h
            free = host.vertex_mask & ~taken
            if free.bit_count() < len(isolated):
                return None
            for v, h in zip(isolated, bits(free)):
                assign[v] = h
            return assign
        cand = host.vertex_mask & ~used
        for j in earlier_nbrs[i]:
            cand &= hrow[image[j]]
        lo = max((image[j] for j in earlier_twins[i]), default=-1)
        cand &= ~((1 << (lo + 1)) - 1)
        p = order[i]
        for h in bits(cand):
            if hdeg[h] < need[i]:
                continue
            if class_mask[hcls[h]] & ~used & ((1 << h) - 1):
                continue
            now = used | 1 << h
            pending = sum(1 for u in bits(prow[p]) if u not in pos or pos[u] > i)
            if (hrow[h] & ~now).bit_count() < pending:
                continue
            image[i] = h
            found = place(i + 1, now)
            if found is not None:
                return found
        return None

    return place(0, 0)


def contains_subgraph(host: Graph, pattern: Graph, *, budget: int | None = None) -> bool:
    return find_embedding(host, pattern, budget=budget) is not None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.e != h.e or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return contains_subgraph(g, h)


# ---------------------------------------------------------------------------
# independence
# ---------------------------------------------------------------------------


def _clique_cover_size(rows: Sequence[int], cand: int) -> int:
    count = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        cand &= ~(1 << v)
        pool = cand & rows[v]
        while pool:
            u = (pool & -pool).bit_length() - 1
            cand &= ~(1 << u)
            pool &= rows[u] & ~(1 << u)
        count += 1
    return count


def maximum_independent_set(g: Graph) -> frozenset[int]:
    """Exact maximum independent set by branch and bound.

    Branches on the closed neighbourhood of a minimum-degree vertex (some
    maximum set meets it) and prunes with a greedy clique cover.
    """
    rows = g.rows
    best_size = 0
    best_mask = 0

    def expand(cand: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        while cand:
            # vertices of degree <= 1 inside cand can be taken greedily
            forced = 0
            for v in bits(cand):
                if (rows[v] & cand).bit_count() <= 1:
                    forced = 1 << v
                    break
            if not forced:
                break
            v = forced.bit_length() - 1
            chosen |= forced
            size += 1
            cand &= ~(rows[v] | forced)
        if not cand:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        if size + _clique_cover_size(rows, cand) <= best_size:
            return
        pivot = min(bits(cand), key=lambda v: (rows[v] & cand).bit_count())
        for u in bits((rows[pivot] | 1 << pivot) & cand):
            expand(cand & ~(rows[u] | 1 << u), chosen | 1 << u, size + 1)

    expand(g.vertex_mask, 0, 0)
    return frozenset(bits(best_mask))


def independence_number(g: Graph) -> int:
    return len(maximum_independent_set(g))


# ---------------------------------------------------------------------------
# matching
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HallResult:
    """Either a matching saturating X (``x -> y``) or a Hall violator ``S ⊆ X``."""

    matching: dict[int, int] | None
    violator: frozenset[int] | None

    @property
    def saturated(self) -> bool:
        return self.matching is not None


def hall_check(host: Graph, xs: Iterable[int], ys: Iterable[int]) -> HallResult:
    """Saturate ``xs`` into ``ys`` by augmenting paths or exhibit a violator.

    When augmentation from ``x`` fails, the X-vertices reached by alternating
    paths form ``S`` with ``|N(S) ∩ Y| = |S| - 1``.
    """
    xs = sorted(set(xs))
    ymask = mask_of(ys)
    if mask_of(xs) & ymask:
        raise ValueError("X and Y must be disjoint")
    rows = host.rows
    owner: dict[int, int] = {}

    def augment(x: int, seen: set[int]) -> bool:
        for y in bits(rows[x] & ymask):
            if y in seen:
                continue
            seen.add(y)
            if y not in owner or augment(owner[y], seen):
                owner[y] = x
                return True
        return False

    for x in xs:
        seen: set[int] = set()
        if not augment(x, seen):
            return HallResult(None, frozenset({x} | {owner[y] for y in seen}))
    return HallResult({x: y for y, x in owner.items()}, None)


def maximum_matching_size(host: Graph, xs: Iterable[int], ys: Iterable[int]) -> int:
    xs = sorted(set(xs))
    ymask = mask_of(ys)
    rows = host.rows
    owner: dict[int, int] = {}

    def augment(x: int, seen: set[int]) -> bool:
        for y in bits(rows[x] & ymask):
            if y not in seen:
                seen.add(y)
                if y not in owner or augment(owner[y], seen):
                    owner[y] = x
                    return True
        return False

    return sum(augment(x, set()) for x in xs)


# ---------------------------------------------------------------------------
# leaves and suspended paths
# ---------------------------------------------------------------------------


def leaves(g: Graph) -> frozenset[int]:
    return frozenset(v for v, r in enumerate(g.rows) if r.bit_count() == 1)


def support_vertices(g: Graph) -> frozenset[int]:
    leaf_mask = mask_of(leaves(g))
    return frozenset(v for v, r in enumerate(g.rows) if r & leaf_mask)


@dataclass(frozen=True)
class SuspendedPath:
    """Maximal path whose internal vertices all have degree 2.

    ``closed`` marks a chain that leaves and returns to the same vertex (the
    path stops before repeating it); ``degenerate`` marks a component that is
    itself a cycle, reported whole.
    """

    vertices: tuple[int, ...]
    closed: bool = False
    degenerate: bool = False

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]


def suspended_paths(g: Graph) -> list[SuspendedPath]:
    rows = g.rows
    deg = g.degrees()
    two = mask_of(v for v in range(g.n) if deg[v] == 2)
    paths: list[SuspendedPath] = []
    seen = 0
    for s in bits(two):
        if seen >> s & 1:
            continue
        chain = frontier = 1 << s
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= rows[u] & two
            frontier = nxt & ~chain
            chain |= frontier
        seen |= chain
        ends = [v for v in bits(chain) if rows[v] & ~chain]
        if not ends:
            # the whole component is a cycle
            walk = [s]
            prev, cur = -1, s
            while True:
                nxt_v = next(u for u in bits(rows[cur]) if u != prev)
                if nxt_v == s:
                    break
                walk.append(nxt_v)
                prev, cur = cur, nxt_v
            paths.append(SuspendedPath(tuple(walk), degenerate=True))
            continue
        start = ends[0]
        walk = [start]
        prev, cur = -1, start
        while True:
            step = [u for u in bits(rows[cur] & chain) if u != prev]
            if not step:
                break
            prev, cur = cur, step[0]
            walk.append(cur)
        head = [u for u in bits(rows[walk[0]] & ~chain)]
        tail = [u for u in bits(rows[walk[-1]] & ~chain)]
        if len(walk) == 1:
            u, v = head
        else:
            u, v = head[0], tail[0]
        if u == v:
            verts = (u, *walk)
            paths.append(SuspendedPath(verts, closed=True))
        else:
            verts = (u, *walk, v)
            if verts[0] > verts[-1]:
                verts = verts[::-1]
            paths.append(SuspendedPath(verts))
    for u in range(g.n):
        if deg[u] == 0:
            paths.append(SuspendedPath((u,)))
        elif deg[u] != 2:
            for v in bits(rows[u] & ~two):
                if v > u:
                    paths.append(SuspendedPath((u, v)))
    paths.sort(key=lambda p: (min(p.vertices), p.vertices))
    return paths


def max_suspended_path_size(g: Graph) -> int:
    return max((p.size for p in suspended_paths(g)), default=0)
