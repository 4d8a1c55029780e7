"""Exhaustive property sweeps over small graphs.

Each sweep returns a ``SweepReport``; violations are findings carrying the
graph6 string of the offending graph and the inequality that failed.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from ..graph6 import code_to_graph6, encode
from ..graphcore import Graph
from ..structure import PremiseViolation, dichotomy_reduce, leaf_bounds, peel_high_degree, profile, replay
from . import _kernels as K
from .enumeration import check_range, enumerate_graphs, level
from .ramsey import Target, ramsey_number, turan_number


@dataclass(frozen=True)
class Violation:
    graph6: str
    detail: str

    def to_dict(self) -> dict[str, str]:
        return {"graph6": self.graph6, "detail": self.detail}


@dataclass
class SweepReport:
    name: str
    params: dict[str, Any]
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    notes: dict[str, Any] = field(default_factory=dict)
    rows: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "SweepReport") -> None:
        self.checked += other.checked
        self.violations.extend(other.violations)
        self.rows.extend(other.rows)
        for key, val in other.notes.items():
            if isinstance(val, list):
                self.notes.setdefault(key, []).extend(val)
            else:
                self.notes[key] = val

    def to_dict(self) -> dict[str, Any]:
        return {
            "sweep": self.name,
            "params": self.params,
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
            "notes": self.notes,
        }


# ---------------------------------------------------------------------------
# leaf-count dichotomy
# ---------------------------------------------------------------------------


def dichotomy_check(g: Graph, s_values: Iterable[int]) -> tuple[int, list[str], list[dict[str, Any]]]:
    """Check the leaf bounds and reduction identities on one graph.

    Returns (number of (graph, s) premise cases, violated inequalities, rows).
    """
    try:
        trace = dichotomy_reduce(g)
    except PremiseViolation:
        return 0, [], []
    prof = profile(g)
    bad: list[str] = []
    if not trace.edge_identity_holds():
        bad.append(f"e(G2)={trace.g2.e} != |A|+|B|+t={len(trace.a) + len(trace.b) + prof.excess}")
    if not trace.branch_bound_holds():
        bad.append(f"|B|={len(trace.b)} > |A|+2t={len(trace.a) + 2 * prof.excess}")
    if replay(trace) != trace.g2:
        bad.append("replaying the steps does not reproduce G2")
    cases = 0
    rows = []
    for s in s_values:
        if prof.n < s + 1 or prof.max_susp > s:
            continue
        cases += 1
        b1, b2 = leaf_bounds(prof, s)
        need = max(b1, math.ceil(b2), prof.p)
        leaves_ok = prof.leaf_count >= need
        if not leaves_ok:
            bad.append(f"s={s}: leaves {prof.leaf_count} < max({b1}, ceil({b2}), p={prof.p})")
        if not trace.reconstruction_bound_holds(s):
            bad.append(f"s={s}: |G1|={trace.g1.n} > (s-1)e(G2)+1={(s - 1) * trace.g2.e + 1}")
        rows.append(
            {"s": s, "n": prof.n, "e": prof.e, "leaf_count": prof.leaf_count, "p": prof.p,
             "bound1": b1, "bound2": str(b2), "ok": leaves_ok}
        )
    return cases, (bad if cases else []), rows


def _dichotomy_shard(args: tuple[int, int, int, tuple[int, ...], bool]) -> SweepReport:
    n, index, stride, s_values, per_instance = args
    rep = SweepReport("dichotomy", {})
    for g in enumerate_graphs(n, index=index, stride=stride):
        cases, bad, rows = dichotomy_check(g, s_values)
        if not cases:
            continue
        rep.checked += cases
        g6 = encode(g)
        rep.violations.extend(Violation(g6, b) for b in bad)
        if per_instance:
            rep.rows.extend({"graph6": g6, **r} for r in rows)
    return rep


def _fan_out(fn: Callable[[Any], SweepReport], jobs: list[Any], workers: int, into: SweepReport) -> SweepReport:
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, jobs))
    else:
        parts = [fn(j) for j in jobs]
    for part in parts:
        into.merge(part)
    return into


def dichotomy_sweep(
    max_n: int = 9, s_values: Iterable[int] = (2, 3, 4), *, workers: int = 1, per_instance: bool = False
) -> SweepReport:
    """Leaf bounds over all connected non-star graphs whose suspended paths have at most s vertices."""
    check_range(max_n)
    s_values = tuple(s_values)
    rep = SweepReport("dichotomy", {"max_n": max_n, "s": list(s_values)})
    jobs = []
    for n in range(3, max_n + 1):
        stride = workers if n >= 8 else 1
        jobs.extend((n, i, stride, s_values, per_instance) for i in range(stride))
    return _fan_out(_dichotomy_shard, jobs, workers, rep)


# ---------------------------------------------------------------------------
# kernel-backed sweeps
# ---------------------------------------------------------------------------


def strucf_sweep(max_n: int = 9, ks: Iterable[int] = range(2, 7)) -> SweepReport:
    """P_k-free graphs: all components have < k vertices, or some degree is at most k/2 - 1."""
    check_range(max_n)
    ks = tuple(ks)
    rep = SweepReport("strucf", {"max_n": max_n, "k": list(ks)})
    for n in range(1, max_n + 1):
        codes = level(n)
        for k in ks:
            checked, idx = K.scan_strucf(codes, n, k, 0, codes.shape[0])
            rep.checked += int(checked)
            if idx >= 0:
                rep.violations.append(
                    Violation(code_to_graph6(int(codes[idx]), n), f"k={k}: P_k-free, a component has >= k vertices and min degree > k/2-1")
                )
    return rep


def findpath_sweep(s: int = 2, ts: Iterable[int] = (4, 5, 6)) -> SweepReport:
    """Graphs on s+t vertices with a t-vertex u-v path but no (t+1)-vertex one:
    the complement contains P_{2 ceil(s/2) + 1}."""
    ts = tuple(ts)
    conclusion = 2 * -(-s // 2) + 1
    rep = SweepReport("findpath", {"s": s, "t": list(ts), "conclusion": f"P_{conclusion}"})
    for t in ts:
        if t < 2 * s:
            raise ValueError(f"t={t} is below the 2s threshold")
        n = s + t
        codes = level(n)
        pairs, bad, first = K.scan_findpath(codes, n, t, conclusion, 0, codes.shape[0])
        rep.checked += int(pairs)
        rep.notes.setdefault("premise_pairs", []).append({"t": t, "pairs": int(pairs)})
        if bad:
            rep.violations.append(
                Violation(code_to_graph6(int(codes[first]), n), f"t={t}: {int(bad)} premise pairs without P_{conclusion} in the complement")
            )
    return rep


def addedge_sweep(max_n: int = 4, ks: Iterable[int] = (3, 4)) -> SweepReport:
    """r(g + e, P_k) <= r(g, P_k) + k - 1 for connected g and every non-edge e.

    Values come from the pruned oracle, which may need 10 vertices here.
    """
    ks = tuple(ks)
    rep = SweepReport("addedge", {"max_n": max_n, "k": list(ks)})
    cache: dict[tuple[int, int, int], int] = {}

    def r(g: Graph, k: int) -> int:
        key = (g.n, int(K.canonical_code(g.to_code(), g.n)), k)
        if key not in cache:
            cache[key] = ramsey_number(g, Target("path", k), 10, prune=True, allow_large=True).value
        return cache[key]

    values = []
    for n in range(2, max_n + 1):
        for g in enumerate_graphs(n):
            if not g.is_connected():
                continue
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v):
                        continue
                    h = g.add_edges([(u, v)])
                    for k in ks:
                        rg, rh = r(g, k), r(h, k)
                        rep.checked += 1
                        values.append({"g": encode(g), "e": [u, v], "k": k, "r_g": rg, "r_g_plus_e": rh})
                        if rh > rg + k - 1:
                            rep.violations.append(Violation(encode(g), f"k={k}, e=({u},{v}): {rh} > {rg}+{k - 1}"))
    rep.rows.extend(values)
    return rep


def erdos_gallai_sweep(max_n: int = 9, max_k: int = 7) -> SweepReport:
    """ex(n, P_k) <= (k-2)n/2, recording where equality holds."""
    check_range(max_n)
    rep = SweepReport("erdos_gallai", {"max_n": max_n, "max_k": max_k})
    equal = []
    for n in range(1, max_n + 1):
        for k in range(2, max_k + 1):
            ex, extremal = turan_number(n, k)
            rep.checked += 1
            rep.rows.append({"n": n, "k": k, "ex": ex, "bound": str((k - 2) * n / 2), "graph6": encode(extremal)})
            if 2 * ex > (k - 2) * n:
                rep.violations.append(Violation(encode(extremal), f"ex({n}, P_{k}) = {ex} > {(k - 2) * n}/2"))
            elif 2 * ex == (k - 2) * n:
                equal.append([n, k])
    rep.notes["equality"] = equal
    return rep


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def peel_sweep(ns: Iterable[int] = (10, 20, 40), per_n: int = 1000, seed: int = 0) -> SweepReport:
    """Peeling postconditions on random graphs with random densities and thresholds."""
    ns = tuple(ns)
    rng = random.Random(seed)
    rep = SweepReport("peel", {"n": list(ns), "per_n": per_n, "seed": seed})
    for n in ns:
        for _ in range(per_n):
            f = random_graph(n, rng.random(), rng)
            threshold = Fraction(rng.randint(1, 4 * n), 4)
            kept, steps = peel_high_degree(f, threshold)
            rep.checked += 1
            rest = f.induced(kept)
            bad = []
            if rest.n and rest.max_degree() >= threshold:
                bad.append(f"max degree {rest.max_degree()} >= D={threshold}")
            if steps * threshold > f.e:
                bad.append(f"{steps} steps > e/D = {f.e}/{threshold}")
            if steps != n - len(kept):
                bad.append(f"steps {steps} != removed {n - len(kept)}")
            rep.violations.extend(Violation(encode(f), f"D={threshold}: {b}") for b in bad)
    return rep


SWEEPS: dict[str, Callable[..., SweepReport]] = {
    "dichotomy": dichotomy_sweep,
    "strucf": strucf_sweep,
    "findpath": findpath_sweep,
    "addedge": addedge_sweep,
    "erdos_gallai": erdos_gallai_sweep,
    "peel": peel_sweep,
}


def lemma_sweeps(workers: int = 1) -> dict[str, SweepReport]:
    return {
        "dichotomy": dichotomy_sweep(workers=workers),
        "strucf": strucf_sweep(),
        "findpath": findpath_sweep(),
        "addedge": addedge_sweep(),
        "erdos_gallai": erdos_gallai_sweep(),
    }
