"""Extremal lower-bound colourings and their validation.

A witness is a red graph F on N-1 vertices (blue is its complement) such that
F avoids G and the complement avoids the target; that proves r(G, target) >= N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from . import families
from .graph6 import encode
from .graphcore import (
    Graph,
    SearchBudgetExceeded,
    complement,
    contains_cycle,
    contains_path,
    find_embedding,
)

DEFAULT_BUDGET = 2_000_000


class InfeasibleDecomposition(ValueError):
    pass


@dataclass(frozen=True)
class GammaParams:
    n: int
    k: int
    alpha_prime: int
    gamma: int
    q: int
    rho: int

    @property
    def total(self) -> int:
        return self.n + self.k - 3 - self.alpha_prime - self.gamma

    @property
    def big_parts(self) -> int:
        return self.q - self.k + 2 + self.rho

    @property
    def small_parts(self) -> int:
        return self.k - 1 - self.rho

    def part_sizes(self) -> list[int]:
        return [self.k - 1] * self.big_parts + [self.k - 2] * self.small_parts

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "alpha_prime": self.alpha_prime,
            "gamma": self.gamma,
            "q": self.q,
            "rho": self.rho,
            "parts": self.part_sizes(),
        }


def gamma_params(n: int, k: int, alpha_p: int, gamma: int) -> GammaParams:
    """Write n+k-3-alpha'-gamma = q(k-1) + rho with 0 < rho <= k-1."""
    if k < 2:
        raise ValueError("k must be at least 2")
    total = n + k - 3 - alpha_p - gamma
    rho = total % (k - 1) or k - 1
    q = (total - rho) // (k - 1)
    return GammaParams(n, k, alpha_p, gamma, q, rho)


@dataclass(frozen=True)
class CheckResult:
    status: str  # "pass", "fail" or "budget"
    reason: str

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict[str, str]:
        return {"status": self.status, "reason": self.reason}


@dataclass(frozen=True)
class ValidationReport:
    pattern: str
    target: str
    red: CheckResult
    blue: CheckResult

    @property
    def passed(self) -> bool:
        return self.red.ok and self.blue.ok

    @property
    def exhausted(self) -> bool:
        return "budget" in (self.red.status, self.blue.status)

    def to_dict(self) -> dict[str, Any]:
        return {
            "pattern": self.pattern,
            "target": self.target,
            "red_check": self.red.to_dict(),
            "blue_check": self.blue.to_dict(),
            "passed": self.passed,
        }


@dataclass(frozen=True)
class WitnessColoring:
    host: Graph
    construction: str
    params: dict[str, Any]
    validation: Optional[ValidationReport] = field(default=None, compare=False)

    @property
    def claimed_bound(self) -> int:
        return self.host.n + 1

    def with_validation(self, report: ValidationReport) -> "WitnessColoring":
        return WitnessColoring(self.host, self.construction, self.params, report)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "construction": self.construction,
            "params": self.params,
            "claimed_bound": self.claimed_bound,
            "host_graph6": encode(self.host),
            "host_vertices": self.host.n,
        }
        if self.validation is not None:
            out["validation"] = self.validation.to_dict()
        return out


def build_gamma(n: int, k: int, alpha_p: int, gamma: int) -> WitnessColoring:
    """Complete multipartite host whose parts have k-1 or k-2 vertices."""
    p = gamma_params(n, k, alpha_p, gamma)
    if p.total < 1:
        raise InfeasibleDecomposition(f"n+k-3-alpha'-gamma = {p.total} leaves no vertices for the host")
    if p.big_parts < 0:
        raise InfeasibleDecomposition(
            f"{p.total} = {p.q}*(k-1) + {p.rho} needs q-k+2+rho = {p.big_parts} parts of size {k - 1}"
        )
    host = families.complete_multipartite(p.part_sizes())
    return WitnessColoring(host, "GammaMultipartite", p.to_dict())


def build_burr_cliques(chi: int, s_min: int, n: int) -> WitnessColoring:
    """(chi-1) disjoint copies of K_{n-1} plus one K_{s_min-1}."""
    if chi < 2 or s_min < 1 or n < 2:
        raise ValueError("need chi >= 2, s_min >= 1 and n >= 2")
    parts = [families.complete(n - 1)] * (chi - 1) + [families.complete(s_min - 1)]
    host = families.disjoint_union(*parts)
    return WitnessColoring(host, "BurrCliques", {"chi": chi, "s_min": s_min, "n": n})


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _component_sizes(g: Graph) -> list[int]:
    return [c.bit_count() for c in g.components()]


def red_check(host: Graph, g: Graph, budget: Optional[int] = DEFAULT_BUDGET) -> CheckResult:
    if g.n > host.n:
        return CheckResult("pass", f"pattern has {g.n} > {host.n} vertices")
    if g.e > host.e:
        return CheckResult("pass", f"pattern has {g.e} > {host.e} edges")
    if g.n and g.max_degree() > host.max_degree():
        return CheckResult("pass", f"max degree {host.max_degree()} < {g.max_degree()}")
    if g.n and g.is_connected():
        largest = max(_component_sizes(host), default=0)
        if largest < g.n:
            return CheckResult("pass", f"largest component has {largest} < {g.n} vertices")
    try:
        emb = find_embedding(host, g, budget=budget)
    except SearchBudgetExceeded:
        return CheckResult("budget", f"embedding search exceeded {budget} nodes")
    if emb is None:
        return CheckResult("pass", "exhaustive embedding search found none")
    return CheckResult("fail", f"pattern embeds: {sorted(emb.items())}")


def blue_check(host: Graph, kind: str, k: int) -> CheckResult:
    blue = complement(host)
    largest = max(_component_sizes(blue), default=0)
    if largest < k:
        return CheckResult("pass", f"complement components have at most {largest} < {k} vertices")
    parts = blue.bipartition()
    if parts is not None:
        if kind == "cycle" and k % 2 == 1:
            return CheckResult("pass", "complement is bipartite and the cycle is odd")
        longest = 2 * min(p.bit_count() for p in parts) + 1
        if kind == "path" and longest < k:
            return CheckResult("pass", f"bipartite complement has paths of at most {longest} < {k} vertices")
    found = contains_path(blue, k) if kind == "path" else contains_cycle(blue, k)
    if found:
        return CheckResult("fail", f"complement contains {kind[0].upper()}_{k}")
    return CheckResult("pass", f"exhaustive search finds no {kind[0].upper()}_{k} in the complement")


def validate_witness(
    w: WitnessColoring, g: Graph, kind: str, k: int, *, budget: Optional[int] = DEFAULT_BUDGET
) -> ValidationReport:
    if kind not in ("path", "cycle"):
        raise ValueError("target kind must be 'path' or 'cycle'")
    report = ValidationReport(encode(g), f"{kind[0].upper()}_{k}", red_check(w.host, g, budget), blue_check(w.host, kind, k))
    return report


def corrupt(w: WitnessColoring) -> WitnessColoring:
    """Recolour the first red edge blue.

    In a multipartite host this merges two blue cliques; in a clique host it
    puts a blue edge inside a blue part. Used as a mutation test.
    """
    edges = w.host.edges()
    if not edges:
        raise ValueError("host has no red edge to recolour")
    return WitnessColoring(w.host.remove_edges(edges[:1]), w.construction + "+corrupted", dict(w.params))
