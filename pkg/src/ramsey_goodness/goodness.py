"""Closed-form Ramsey values and upper bounds for sparse graphs versus paths and cycles.

Everything is integer or ``Fraction`` arithmetic, so divisibility tests and
threshold comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Optional, Union

from .graphcore import Graph, bits
from .structure import alpha_prime, gamma, sparsity_ok

Number = Union[int, Fraction]

PATH_REGIME = 3424
PATH_EDGE_CONSTANT = 144
CYCLE_REGIME = 1833
CYCLE_EDGE_CONSTANT = 117
CHROMATIC_CAP = 16


def chvatal(n: int, k: int) -> int:
    """r(T_n, K_k) for any tree on n vertices."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return (k - 1) * (n - 1) + 1


def burr_lower(chi: int, s_min: int, n: int) -> int:
    if chi < 1 or s_min < 1 or n < s_min:
        raise ValueError("need chi >= 1, s_min >= 1 and n >= s_min")
    return (chi - 1) * (n - 1) + s_min


def _colourable(rows: tuple[int, ...], alive: int, colours: int) -> bool:
    order = sorted(bits(alive), key=lambda v: -(rows[v] & alive).bit_count())
    classes = [0] * colours

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        tried_empty = False
        for c in range(colours):
            if classes[c] == 0:
                # empty classes are interchangeable
                if tried_empty:
                    continue
                tried_empty = True
            if rows[v] & classes[c]:
                continue
            classes[c] |= 1 << v
            if place(i + 1):
                return True
            classes[c] &= ~(1 << v)
        return False

    return place(0)


def chromatic_number(h: Graph) -> int:
    if h.n > CHROMATIC_CAP:
        raise ValueError(f"exact colouring is limited to {CHROMATIC_CAP} vertices")
    for k in range(h.n + 1):
        if _colourable(h.rows, h.vertex_mask, k):
            return k
    return h.n


def chromatic_data(h: Graph) -> tuple[int, int]:
    """(chi, smallest colour class over all proper chi-colourings)."""
    chi = chromatic_number(h)
    if chi == 0:
        return 0, 0
    rows = h.rows
    full = h.vertex_mask
    for size in range(1, h.n + 1):
        for subset in combinations(range(h.n), size):
            mask = sum(1 << v for v in subset)
            if any(rows[v] & mask for v in subset):
                continue
            if _colourable(rows, full & ~mask, chi - 1):
                return chi, size
    raise AssertionError("a chi-colouring always has a colour class")


# ---------------------------------------------------------------------------
# predictions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GoodnessPrediction:
    target: str
    n: int
    k: int
    value: int
    term_path_half: Optional[int]
    term_alpha: Optional[int]
    alpha_prime: Optional[int]
    gamma: Optional[int]
    regime_met: bool
    sparsity_met: bool
    parity_met: bool
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        terms = {}
        if self.term_path_half is not None:
            terms = {"path_half": self.term_path_half, "alpha": self.term_alpha}
        else:
            terms = {"two_n_minus_one": self.value}
        flags = {"regime_met": self.regime_met, "sparsity_met": self.sparsity_met, "parity_met": self.parity_met}
        return {
            "target": self.target,
            "n": self.n,
            "k": self.k,
            "value": self.value,
            "terms": terms,
            "alpha_prime": self.alpha_prime,
            "gamma": self.gamma,
            "flags": flags,
            "warnings": list(self.warnings),
        }


def path_regime_met(n: int, k: int) -> bool:
    return n >= PATH_REGIME * k**4


def cycle_regime_met(n: int, k: int) -> bool:
    return n >= CYCLE_REGIME * k**4


def _require_connected(g: Graph) -> None:
    if g.n == 0 or not g.is_connected():
        raise ValueError("prediction needs a connected graph")


def predict_path(g: Graph, k: int) -> GoodnessPrediction:
    _require_connected(g)
    if k < 2:
        raise ValueError("path target needs k >= 2")
    n = g.n
    ap = alpha_prime(g)
    gm = gamma(n, k, ap)
    half = n + k // 2 - 1
    alpha_term = n + k - 2 - ap - gm
    regime = path_regime_met(n, k)
    sparse = sparsity_ok(g, k, PATH_EDGE_CONSTANT)
    return GoodnessPrediction(
        f"P_{k}", n, k, max(half, alpha_term), half, alpha_term, ap, gm, regime, sparse, True,
    )


def predict_cycle(g: Graph, k: int) -> GoodnessPrediction:
    _require_connected(g)
    if k < 3:
        raise ValueError("cycle target needs k >= 3")
    n = g.n
    odd = k % 2 == 1
    warnings = () if odd else (f"k={k} is even; the value 2n-1 is only claimed for odd k",)
    return GoodnessPrediction(
        f"C_{k}",
        n,
        k,
        2 * n - 1,
        None,
        None,
        None,
        None,
        cycle_regime_met(n, k),
        sparsity_ok(g, k, CYCLE_EDGE_CONSTANT),
        odd,
        warnings,
    )


# ---------------------------------------------------------------------------
# upper-bound evaluators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Hypothesis:
    description: str
    met: bool

    def to_dict(self) -> dict[str, Any]:
        return {"description": self.description, "met": self.met}


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: Fraction
    hypotheses: tuple[Hypothesis, ...] = field(default_factory=tuple)

    @property
    def hypotheses_met(self) -> bool:
        return all(h.met for h in self.hypotheses)

    def to_dict(self) -> dict[str, Any]:
        v = self.value
        return {
            "name": self.name,
            "value": str(v) if v.denominator != 1 else v.numerator,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "hypotheses_met": self.hypotheses_met,
        }


def _edge_hypothesis(n: int, k: int, c: int, e: Optional[int]) -> Hypothesis:
    desc = f"e <= (1 + 1/({c}k^2)) n"
    if e is None:
        return Hypothesis(desc + " (edge count not supplied)", False)
    return Hypothesis(desc, e <= (1 + Fraction(1, c * k * k)) * n)


def tree_path(n: int, k: int, C: Number) -> BoundReport:
    C = Fraction(C)
    hyps = [Hypothesis("k >= 3", k >= 3), Hypothesis("C > 1", C > 1)]
    if C > 1:
        need = 2 * C * k / (C - 1) ** 2
        hyps.append(Hypothesis(f"n >= 2Ck/(C-1)^2 = {need}", n >= need))
    return BoundReport("tree_path", C * n, tuple(hyps))


def base(n: int, k: int) -> BoundReport:
    return BoundReport(
        "base", Fraction(3 * n, 2), (Hypothesis("k >= 3", k >= 3), Hypothesis("n >= 12k", n >= 12 * k))
    )


def sparse_path(n: int, k: int, e: Optional[int] = None) -> BoundReport:
    hyps = (Hypothesis("k >= 3", k >= 3), Hypothesis("n >= 12k", n >= 12 * k), _edge_hypothesis(n, k, 9, e))
    return BoundReport("sparse_path", Fraction(n + 23 * k * k), hyps)


def sparse_cycle(n: int, k: int, e: Optional[int] = None) -> BoundReport:
    hyps = (Hypothesis("k >= 3", k >= 3), Hypothesis("n >= 12k", n >= 12 * k), _edge_hypothesis(n, k, 12, e))
    return BoundReport("sparse_cycle", Fraction(2 * n + 23 * k * k), hyps)


def general_cycle(n: int, l: int, k: int) -> BoundReport:
    """Any graph with n vertices and l edges versus C_k."""
    if n < 1:
        raise ValueError("n must be positive")
    return BoundReport("general_cycle", n + 2 * l * k - Fraction(2 * l, n), (Hypothesis("k >= 3", k >= 3),))


def add_edge(r_base: int, k: int) -> BoundReport:
    return BoundReport("add_edge", Fraction(r_base + k - 1), (Hypothesis("k >= 2", k >= 2),))


def findmatch(m: int, k: int, *, n: int, l: int, r_reduced: int) -> BoundReport:
    """Bound after stripping ``l`` matched leaves; ``r_reduced`` is r(H, P_k) of the stripped graph."""
    hyps = (
        Hypothesis("m >= n >= 2l >= 1", m >= n >= 2 * l >= 1),
        Hypothesis("k >= 3", k >= 3),
        Hypothesis(f"r(H, P_k) = {r_reduced} <= m - 2k + 2 = {m - 2 * k + 2}", r_reduced <= m - 2 * k + 2),
    )
    return BoundReport("findmatch", Fraction(m + k // 2 - 1), hyps)


BOUNDS: dict[str, Callable[..., BoundReport]] = {
    "tree_path": tree_path,
    "base": base,
    "sparse_path": sparse_path,
    "sparse_cycle": sparse_cycle,
    "general_cycle": general_cycle,
    "add_edge": add_edge,
    "findmatch": findmatch,
}


def bound_evaluators(name: str, *args: Any, **kwargs: Any) -> BoundReport:
    try:
        fn = BOUNDS[name]
    except KeyError:
        raise ValueError(f"unknown bound {name!r}; known: {', '.join(sorted(BOUNDS))}") from None
    return fn(*args, **kwargs)
