"""Exact small Ramsey numbers r(G, target) by exhaustive arrowing checks."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .. import families
from ..graph6 import encode
from ..graphcore import (
    Graph,
    bits,
    complement,
    contains_clique,
    contains_cycle,
    contains_path,
    contains_subgraph,
)
from . import _kernels as K
from .enumeration import EnumerationStream, HereditaryFilter, check_range, default_threads, level

_KIND_CODES = {"path": K.PATH, "cycle": K.CYCLE, "clique": K.CLIQUE}
_LETTERS = {"P": "path", "C": "cycle", "K": "clique"}


class RamseyBudgetExhausted(RuntimeError):
    """Every graph order up to ``n_max`` has a non-arrowing graph."""

    def __init__(self, n_max: int, witness: Graph):
        super().__init__(f"budget exhausted at {n_max}; lower bound >= {n_max + 1} witnessed")
        self.n_max = n_max
        self.lower_bound = n_max + 1
        self.witness = witness


@dataclass(frozen=True)
class Target:
    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in _KIND_CODES:
            raise ValueError(f"unknown target kind {self.kind!r}")
        if self.k < 1 or (self.kind == "cycle" and self.k < 3):
            raise ValueError(f"invalid target size {self.k} for {self.kind}")

    @classmethod
    def parse(cls, text: str) -> "Target":
        letter, sep, num = text.strip().partition(":")
        if not sep or letter.upper() not in _LETTERS:
            raise ValueError(f"target must look like P:k, C:k or K:k, got {text!r}")
        try:
            k = int(num)
        except ValueError:
            raise ValueError(f"target size must be an integer, got {num!r}") from None
        return cls(_LETTERS[letter.upper()], k)

    @property
    def label(self) -> str:
        return f"{self.kind[0].upper()}_{self.k}"

    def graph(self) -> Graph:
        return {"path": families.path, "cycle": families.cycle, "clique": families.complete}[self.kind](self.k)

    def found_in(self, g: Graph) -> bool:
        if self.kind == "path":
            return contains_path(g, self.k)
        if self.kind == "cycle":
            return contains_cycle(g, self.k)
        return contains_clique(g, self.k)


def arrows(f: Graph, g: Graph, target: Target) -> bool:
    """True when f contains g or the complement of f contains the target."""
    return target.found_in(complement(f)) or contains_subgraph(f, g)


# ---------------------------------------------------------------------------
# red pattern compilation for the kernels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Pattern:
    kind: int
    k: int
    pnbr: np.ndarray
    pdeg: np.ndarray


def _recognise(g: Graph) -> tuple[str, int] | None:
    n, e = g.n, g.e
    if n == 0:
        return None
    if e == n * (n - 1) // 2:
        return "clique", n
    if not g.is_connected():
        return None
    degs = g.degrees()
    if n >= 3 and e == n and all(d == 2 for d in degs):
        return "cycle", n
    if e == n - 1 and max(degs) <= 2:
        return "path", n
    return None


def _search_order(g: Graph) -> list[int]:
    """Greedy order that keeps each new vertex adjacent to as many placed ones as possible."""
    order: list[int] = []
    placed = 0
    remaining = set(range(g.n))
    while remaining:
        v = max(remaining, key=lambda u: ((g.row(u) & placed).bit_count(), g.degree(u), -u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def compile_pattern(g: Graph) -> _Pattern:
    known = _recognise(g)
    empty = np.zeros(1, np.int64)
    if known is not None:
        return _Pattern(_KIND_CODES[known[0]], known[1], empty, empty)
    order = _search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    pnbr = np.zeros(max(g.n, 1), np.int64)
    pdeg = np.zeros(max(g.n, 1), np.int64)
    for i, v in enumerate(order):
        pdeg[i] = g.degree(v)
        pnbr[i] = sum(1 << pos[u] for u in bits(g.row(v)) if pos[u] < i)
    return _Pattern(K.SUBGRAPH, g.n, pnbr, pdeg)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RamseyCertificate:
    pattern: Graph
    target: Target
    value: int
    lower_witness: Graph
    graphs_examined: int
    method: str
    per_order: dict[int, int] = field(default_factory=dict)

    def verify_witness(self) -> bool:
        """Re-check the witness with the pure-Python containment code."""
        w = self.lower_witness
        return w.n == self.value - 1 and not arrows(w, self.pattern, self.target)

    def to_dict(self) -> dict[str, Any]:
        return {
            "pattern": encode(self.pattern),
            "target": self.target.label,
            "value": self.value,
            "lower_witness": encode(self.lower_witness),
            "upper_attestation": {
                "vertex_count": self.value,
                "graphs_examined": self.graphs_examined,
                "method": self.method,
            },
        }


def _scan(codes: np.ndarray, n: int, pat: _Pattern, target: Target, threads: int) -> int:
    """Index of the first non-arrowing graph, or -1."""
    bk = _KIND_CODES[target.kind]
    total = codes.shape[0]
    if total == 0:
        return -1

    def run(bounds):
        lo, hi = bounds
        return K.scan_arrows(codes, n, pat.kind, pat.k, pat.pnbr, pat.pdeg, bk, target.k, lo, hi)

    if threads <= 1 or total < 4096:
        return int(run((0, total)))
    step = -(-total // (threads * 8))
    pieces = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        found = [int(x) for x in pool.map(run, pieces)]
    hits = [x for x in found if x >= 0]
    return min(hits) if hits else -1


def ramsey_number(
    g: Graph,
    target: Target,
    n_max: int = 9,
    *,
    threads: int | None = None,
    prune: bool = False,
    allow_large: bool = False,
) -> RamseyCertificate:
    """Smallest N <= n_max such that every graph on N vertices arrows (g, target).

    With ``prune`` only graphs whose complement avoids the target are generated;
    any non-arrowing graph has that property, so the answer is unchanged.
    """
    check_range(n_max, allow_large)
    threads = threads or default_threads()
    pat = compile_pattern(g)
    filt = HereditaryFilter(target.kind, target.k, True) if prune else None
    witness = Graph(0)
    examined = 0
    per_order: dict[int, int] = {}
    for n in range(1, n_max + 1):
        codes = level(n, filt, threads=threads, allow_large=allow_large)
        per_order[n] = int(codes.shape[0])
        idx = _scan(codes, n, pat, target, threads)
        if idx < 0:
            examined = int(codes.shape[0])
            method = EnumerationStream(n, filter=filt, allow_large=allow_large).method
            return RamseyCertificate(g, target, n, witness, examined, method, per_order)
        witness = Graph.from_code(int(codes[idx]), n)
    raise RamseyBudgetExhausted(n_max, witness)


def turan_number(n: int, k: int) -> tuple[int, Graph]:
    """ex(n, P_k) with an extremal graph, by scanning every class on n vertices."""
    check_range(n)
    if k < 1:
        raise ValueError("k must be positive")
    codes = level(n)
    _, best, where = K.scan_path_free(codes, n, k, 0, codes.shape[0])
    if where < 0:
        raise ValueError(f"every graph on {n} vertices contains P_{k}")
    return int(best), Graph.from_code(int(codes[where]), n)
