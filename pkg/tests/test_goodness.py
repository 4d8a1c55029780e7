from fractions import Fraction
from itertools import product

import pytest

from ramsey_goodness import families as F
from ramsey_goodness.goodness import (
    bound_evaluators,
    burr_lower,
    chromatic_data,
    chromatic_number,
    chvatal,
    cycle_regime_met,
    path_regime_met,
    predict_cycle,
    predict_path,
)
from ramsey_goodness.graphcore import Graph


def brute_chromatic(g):
    for k in range(1, g.n + 1):
        best = None
        for colouring in product(range(k), repeat=g.n):
            if len(set(colouring)) != k:
                continue
            if any(colouring[u] == colouring[v] for u, v in g.edges()):
                continue
            smallest = min(colouring.count(c) for c in range(k))
            best = smallest if best is None else min(best, smallest)
        if best is not None:
            return k, best
    return 0, 0


def test_closed_forms():
    assert chvatal(4, 3) == 7
    assert chvatal(9, 1) == 1
    assert chvatal(5, 3) == 9
    assert burr_lower(3, 1, 5) == 9
    assert burr_lower(1, 1, 7) == 1
    for n, k in product(range(2, 10), range(2, 10)):
        assert burr_lower(2, k // 2, n) == n + k // 2 - 1 if k >= 2 and n >= k // 2 >= 1 else True
    with pytest.raises(ValueError):
        burr_lower(2, 3, 2)


def test_chromatic_examples():
    assert chromatic_data(F.cycle(5)) == (3, 1)
    assert chromatic_data(F.path(6)) == (2, 3)
    assert chromatic_data(F.complete(4)) == (4, 1)
    assert chromatic_data(Graph(0)) == (0, 0)
    for k in range(2, 13):
        assert chromatic_data(F.path(k)) == (2, k // 2)
    for k in range(3, 12, 2):
        assert chromatic_data(F.cycle(k)) == (3, 1)
    with pytest.raises(ValueError):
        chromatic_number(F.empty(17))


@pytest.mark.parametrize(
    "g",
    [F.petersen().induced(range(7)), F.spider(3, 2), F.theta((2, 3, 3)), F.complete_multipartite([1, 2, 3]),
     F.disjoint_union(F.cycle(5), F.complete(3))],
)
def test_chromatic_matches_brute_force(g):
    assert chromatic_data(g) == brute_chromatic(g)


def test_predict_path_examples():
    p = predict_path(F.path(5), 4)
    assert (p.alpha_prime, p.gamma, p.term_path_half, p.term_alpha, p.value) == (1, 1, 6, 5, 6)
    assert not p.regime_met and p.sparsity_met
    s = predict_path(F.star(5), 4)
    assert (s.alpha_prime, s.gamma, s.value) == (0, 0, 7)
    assert predict_path(F.path(5), 2).value == 5
    with pytest.raises(ValueError):
        predict_path(F.empty(3), 3)


def test_predict_path_dominates_burr():
    for g in (F.path(7), F.spider(3, 2), F.broom(4, 3), F.cycle(8), F.star(9)):
        for k in range(2, 9):
            assert predict_path(g, k).value >= burr_lower(2, max(1, k // 2), g.n)


def test_predict_cycle_examples():
    p = predict_cycle(F.cycle(7), 5)
    assert p.value == 13 == burr_lower(3, 1, 7) and p.parity_met
    assert predict_cycle(F.cycle(5), 5).value == 9
    even = predict_cycle(F.cycle(7), 4)
    assert even.value == 13 and not even.parity_met and even.warnings
    assert set(even.to_dict()["flags"]) == {"regime_met", "sparsity_met", "parity_met"}


def test_regime_flags_exact():
    assert cycle_regime_met(1833 * 81, 3) and not cycle_regime_met(1833 * 81 - 1, 3)
    assert path_regime_met(3424 * 256, 4) and not path_regime_met(3424 * 256 - 1, 4)
    assert not predict_path(F.path(5), 4).regime_met


def test_bound_examples():
    assert bound_evaluators("general_cycle", 10, 10, 3).value == 68
    r = bound_evaluators("tree_path", 48, 4, Fraction(3, 2))
    assert r.hypotheses_met and r.value == 72
    assert not bound_evaluators("tree_path", 47, 4, Fraction(3, 2)).hypotheses_met
    assert bound_evaluators("sparse_path", 100, 3).value == 307
    assert bound_evaluators("sparse_path", 100, 3, e=100).hypotheses_met
    assert not bound_evaluators("sparse_path", 100, 3).hypotheses_met  # edge count missing
    assert bound_evaluators("sparse_cycle", 40, 3, e=40).value == 287
    assert bound_evaluators("base", 36, 3).value == 54 and bound_evaluators("base", 36, 3).hypotheses_met
    assert bound_evaluators("general_cycle", 3, 2, 3).value == Fraction(3 + 12) - Fraction(4, 3)
    assert bound_evaluators("add_edge", 6, 4).value == 9
    fm = bound_evaluators("findmatch", 12, 4, n=8, l=2, r_reduced=6)
    assert fm.value == 13 and fm.hypotheses_met
    assert not bound_evaluators("findmatch", 12, 4, n=8, l=2, r_reduced=7).hypotheses_met
    with pytest.raises(ValueError):
        bound_evaluators("nope")
    assert bound_evaluators("general_cycle", 3, 2, 3).to_dict()["value"] == "41/3"
