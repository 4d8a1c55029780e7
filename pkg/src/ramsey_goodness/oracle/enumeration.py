"""Isomorphism-free generation of all graphs on N vertices.

Canonical augmentation by vertex: every canonical graph on ``N-1`` vertices
is extended by a new vertex in all ``2**(N-1)`` ways, and a child is kept
only when its canonically chosen last vertex can be deleted to give back the
parent's isomorphism class. That makes every class on ``N`` vertices appear
under exactly one parent; siblings are deduplicated by canonical code.

Streams split deterministically by parent index, so ``(index, stride)``
shards partition the output and can run in any number of threads or
processes.
"""

from __future__ import annotations

import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

import numpy as np

from ..graph6 import code_to_graph6
from ..graphcore import Graph
from . import _kernels as K

# OEIS A000088
KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668, 10: 12005168}

DEFAULT_MAX_N = 9
METHOD = "canonical-augmentation(vertex, canonical deletion)"

_KINDS = {"path": K.PATH, "cycle": K.CYCLE, "clique": K.CLIQUE}
_CHUNK = 2048


class EnumerationRangeError(ValueError):
    pass


@dataclass(frozen=True)
class HereditaryFilter:
    """Keep only graphs whose complement (or the graph itself) avoids P_k, C_k or K_k.

    Avoiding a path, cycle or clique survives vertex deletion, so pruning the
    augmentation tree with it still reaches every surviving class.
    """

    kind: str
    k: int
    on_complement: bool = True

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown filter kind {self.kind!r}")

    @property
    def tag(self) -> str:
        side = "complement" if self.on_complement else "graph"
        return f"{side} {self.kind[0].upper()}_{self.k}-free"


def default_threads() -> int:
    env = os.environ.get("RAMSEY_GOODNESS_THREADS")
    if env:
        return max(1, int(env))
    return 1


_cache: dict[tuple[int, HereditaryFilter | None], np.ndarray] = {}
_lock = threading.Lock()


def _extend_chunk(parents: np.ndarray, m: int, filt: HereditaryFilter | None) -> tuple[np.ndarray, np.ndarray]:
    out = np.empty(parents.shape[0] << m, np.int64)
    counts = np.zeros(parents.shape[0], np.int64)
    if filt is None:
        total = K.extend_level(parents, m, K.NONE, 0, False, out, counts)
    else:
        total = K.extend_level(parents, m, _KINDS[filt.kind], filt.k, filt.on_complement, out, counts)
    return out[:total].copy(), counts


def _extend(parents: np.ndarray, m: int, filt: HereditaryFilter | None, threads: int) -> np.ndarray:
    chunks = [parents[i : i + _CHUNK] for i in range(0, parents.shape[0], _CHUNK)]
    if not chunks:
        return np.empty(0, np.int64)
    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda c: _extend_chunk(c, m, filt)[0], chunks))
    else:
        parts = [_extend_chunk(c, m, filt)[0] for c in chunks]
    return np.concatenate(parts)


def _root(filt: HereditaryFilter | None) -> np.ndarray:
    g = Graph(1)
    if filt is not None and not _survives(g, filt):
        return np.empty(0, np.int64)
    return np.zeros(1, np.int64)


def _survives(g: Graph, filt: HereditaryFilter) -> bool:
    from ..graphcore import complement, contains_clique, contains_cycle, contains_path

    h = complement(g) if filt.on_complement else g
    if filt.kind == "path":
        return not contains_path(h, filt.k)
    if filt.kind == "cycle":
        return filt.k > h.n or not contains_cycle(h, filt.k)
    return not contains_clique(h, filt.k)


def check_range(n: int, allow_large: bool = False) -> None:
    top = K.MAX_KERNEL_N - 1 if allow_large else DEFAULT_MAX_N
    if not 1 <= n <= top:
        hint = "" if allow_large else " (N=10 needs the explicit large-N override)"
        raise EnumerationRangeError(f"N={n} outside 1..{top}{hint}")


def level(n: int, filt: HereditaryFilter | None = None, *, threads: int | None = None, allow_large: bool = False) -> np.ndarray:
    """Canonical codes of every class on ``n`` vertices (surviving ``filt``), cached."""
    check_range(n, allow_large)
    key = (n, filt)
    with _lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    threads = threads or default_threads()
    if n == 1:
        codes = _root(filt)
    else:
        codes = _extend(level(n - 1, filt, threads=threads, allow_large=allow_large), n - 1, filt, threads)
    if filt is None and codes.shape[0] != KNOWN_COUNTS[n]:
        raise AssertionError(f"enumeration produced {codes.shape[0]} classes on {n} vertices, expected {KNOWN_COUNTS[n]}")
    codes.setflags(write=False)
    with _lock:
        _cache[key] = codes
    return codes


@dataclass(frozen=True)
class EnumerationStream:
    """One shard of the canonical representatives on ``n`` vertices."""

    n: int
    index: int = 0
    stride: int = 1
    filter: HereditaryFilter | None = None
    allow_large: bool = False

    def __post_init__(self):
        check_range(self.n, self.allow_large)
        if not 0 <= self.index < self.stride:
            raise ValueError("shard index must satisfy 0 <= index < stride")

    @property
    def method(self) -> str:
        return METHOD if self.filter is None else f"{METHOD} + hereditary prune ({self.filter.tag})"

    def codes(self) -> np.ndarray:
        if self.stride == 1:
            return level(self.n, self.filter, allow_large=self.allow_large)
        if self.n == 1:
            return level(1, self.filter) if self.index == 0 else np.empty(0, np.int64)
        parents = level(self.n - 1, self.filter, allow_large=self.allow_large)[self.index :: self.stride]
        return _extend(parents, self.n - 1, self.filter, 1)

    def __iter__(self) -> Iterator[Graph]:
        for c in self.codes():
            yield Graph.from_code(int(c), self.n)

    def __len__(self) -> int:
        return int(self.codes().shape[0])

    def graph6(self) -> Iterator[str]:
        for c in self.codes():
            yield code_to_graph6(int(c), self.n)


def enumerate_graphs(n: int, *, index: int = 0, stride: int = 1, filt: HereditaryFilter | None = None, allow_large: bool = False) -> EnumerationStream:
    return EnumerationStream(n, index, stride, filt, allow_large)


def shard_checksum(codes: np.ndarray) -> int:
    """Order-independent digest of a set of canonical codes."""
    s = np.sort(np.asarray(codes, np.int64))
    return hash(s.tobytes())


def canonical_code(g: Graph) -> int:
    check_range(max(g.n, 1), allow_large=True)
    return int(K.canonical_code(np.int64(g.to_code()), g.n))


# ---------------------------------------------------------------------------
# brute-force cross-check
# ---------------------------------------------------------------------------


def brute_force_classes(n: int) -> set[int]:
    """Minimum labelled code over all n! relabellings, for every labelled graph.

    Independent of the canonical-labelling kernel; feasible up to n = 6.
    """
    if n > 6:
        raise ValueError("brute force is limited to n <= 6")
    pairs = list(combinations(range(n), 2))
    bit_of = {(i, j): j * (j - 1) // 2 + i for i, j in pairs}
    codes = np.arange(1 << len(pairs), dtype=np.int64)
    best = codes.copy()
    for perm in permutations(range(n)):
        img = np.zeros_like(codes)
        for (i, j), b in bit_of.items():
            a, c = sorted((perm[i], perm[j]))
            img |= ((codes >> b) & 1) << bit_of[(a, c)]
        np.minimum(best, img, out=best)
    return set(int(x) for x in np.unique(best))


def brute_force_form(g: Graph) -> int:
    n = g.n
    best = None
    for perm in permutations(range(n)):
        c = g.relabel(perm).to_code()
        if best is None or c < best:
            best = c
    return best if best is not None else 0
