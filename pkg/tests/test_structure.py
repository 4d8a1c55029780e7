import json
import math
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramsey_goodness import families as F
from ramsey_goodness.graphcore import Graph, independence_number, is_isomorphic, suspended_paths
from ramsey_goodness.structure import (
    CycleLoop,
    PathContraction,
    PremiseViolation,
    alpha_prime,
    closed_neighbourhood_residue,
    dichotomy_reduce,
    end_edge_matching,
    gamma,
    leaf_bounds,
    lengthen_suspended,
    peel_high_degree,
    profile,
    remove_matched_leaves,
    replay,
    shorten_suspended,
    sparsity_ok,
    to_json,
    within_edge_budget,
)


@st.composite
def connected_graphs(draw, max_n=9, min_n=3):
    n = draw(st.integers(min_n, max_n))
    # random spanning tree plus random extra edges
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    return Graph.from_edges(n, edges)


def test_profile_examples():
    p = profile(F.path(5))
    assert (p.n, p.e, p.excess, p.leaf_count, p.p, p.max_susp) == (5, 4, -1, 2, 2, 5)
    p = profile(F.spider(3, 2))
    assert (p.n, p.e, p.excess, p.leaf_count, p.p, p.max_susp) == (7, 6, -1, 3, 3, 3)
    p = profile(F.complete(4))
    assert (p.excess, p.leaf_count, p.p) == (2, 0, 0)
    assert profile(F.star(5)).is_star and profile(F.complete(2)).is_star
    assert not profile(F.disjoint_union(F.path(2), F.path(2))).connected


def test_profile_json_field_names():
    data = json.loads(to_json(profile(F.broom(4, 3))))
    assert {"n", "e", "excess", "p", "leaf_count", "max_susp"} <= set(data)


def test_sparsity_ok():
    assert sparsity_ok(F.path(30), 3, 117)
    assert not sparsity_ok(F.complete(4), 3, 117)
    # 1053 = 117 * 9 vertices and one edge of excess sits exactly on the budget
    n = 117 * 9
    assert within_edge_budget(n, n + 1, 3, 117)
    assert not within_edge_budget(n, n + 2, 3, 117)
    assert not within_edge_budget(n - 1, n, 3, 117)
    g = F.theta((3, 3, 3))
    assert not sparsity_ok(g, 3, 117)
    assert sparsity_ok(g, 2, Fraction(1, 2))


def test_alpha_prime_examples():
    for m in range(2, 9):
        assert alpha_prime(F.star(m)) == 0
    assert alpha_prime(F.path(5)) == 1
    assert alpha_prime(F.cycle(6)) == 2
    assert alpha_prime(Graph(0)) == 0


@settings(max_examples=80)
@given(connected_graphs(max_n=10, min_n=1))
def test_alpha_prime_definition(g):
    ap = alpha_prime(g)
    assert ap <= independence_number(g)
    assert ap == min(independence_number(closed_neighbourhood_residue(g, v)) for v in range(g.n))


def test_gamma_examples():
    assert gamma(9, 4, 1) == 0
    assert gamma(10, 4, 1) == 1
    assert gamma(11, 3, 0) == 1
    assert gamma(5, 2, 0) == 0
    with pytest.raises(ValueError):
        gamma(5, 4, 5)


def test_reduce_spider():
    t = dichotomy_reduce(F.spider(3, 2))
    assert is_isomorphic(t.g1, F.star(4))
    assert not t.c and not t.steps
    assert t.g2.e == 3 and t.g2.n == 4
    assert t.edge_identity_holds() and t.branch_bound_holds()


def test_reduce_theta():
    t = dichotomy_reduce(F.theta((3, 3, 3)))
    assert not t.a and t.b == {0, 1}
    assert t.g2.n == 2 and t.g2.mult == {(0, 1): 3}
    assert t.g2.e == 3 == len(t.a) + len(t.b) + t.excess
    assert all(isinstance(s, PathContraction) for s in t.steps)
    assert replay(t) == t.g2


def test_reduce_loop():
    # a pendant-free triangle and a square glued at vertex 0, plus a leaf on 0
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 0), (0, 6)])
    t = dichotomy_reduce(g)
    loops = [s for s in t.steps if isinstance(s, CycleLoop)]
    assert [s.anchor for s in loops] == [0, 0]
    assert t.g2.n == 1 and t.g2.loops == (2,) and t.g2.e == 2
    assert t.edge_identity_holds() and replay(t) == t.g2


@pytest.mark.parametrize(
    "g, reason",
    [(F.cycle(6), "cycle"), (F.star(6), "star"), (F.path(2), "too_small"),
     (F.disjoint_union(F.path(3), F.path(3)), "disconnected")],
)
def test_reduce_rejects(g, reason):
    with pytest.raises(PremiseViolation) as info:
        dichotomy_reduce(g)
    assert info.value.reason == reason


def test_trace_json():
    data = json.loads(to_json(dichotomy_reduce(F.theta())))
    assert data["steps"][0] == {"op": "contract", "internal": [2, 3], "endpoints": [0, 1]}
    assert data["g2"]["edges"] == [[0, 1, 3]]


@settings(max_examples=150)
@given(connected_graphs())
def test_trace_identities(g):
    try:
        t = dichotomy_reduce(g)
    except PremiseViolation:
        return
    assert t.a | t.b | t.c == set(t.g1_labels)
    assert not (t.a & t.b or t.a & t.c or t.b & t.c)
    assert t.edge_identity_holds()
    assert t.branch_bound_holds()
    assert replay(t) == t.g2
    assert t.g2.is_connected()
    s = max(2, profile(g).max_susp)
    assert t.reconstruction_bound_holds(s)


def test_leaf_bounds_examples():
    b1, b2 = leaf_bounds(profile(F.spider(3, 2)), 3)
    assert b1 == 0 and b2 == Fraction(12, 5)
    assert max(b1, math.ceil(b2)) <= 3
    prof = profile(F.broom(4, 3))
    b1, b2 = leaf_bounds(prof, 4)
    assert max(b1, math.ceil(b2)) <= prof.leaf_count
    assert isinstance(b2, Fraction)
    with pytest.raises(ValueError):
        leaf_bounds(profile(F.path(3)), 3)


def test_leaf_bounds_no_leaves():
    # premise graph without leaves: both bounds must be at most zero
    g = F.theta((3, 3, 3))
    b1, b2 = leaf_bounds(profile(g), 4)
    assert b1 <= 0 and b2 <= 0


def test_end_edge_matching_examples():
    sp = F.spider(3, 2)
    m = end_edge_matching(sp, 3)
    assert sorted(m) == [(1, 2), (3, 4), (5, 6)]
    assert end_edge_matching(F.star(6), 2) is None
    assert end_edge_matching(F.path(4), 2) == [(1, 0), (2, 3)]
    assert end_edge_matching(F.complete(2), 1) == [(0, 1)]
    assert end_edge_matching(F.complete(2), 2) is None


def test_remove_matched_leaves():
    sp = F.spider(3, 2)
    assert is_isomorphic(remove_matched_leaves(sp, end_edge_matching(sp, 3)), F.star(4))
    with pytest.raises(ValueError):
        remove_matched_leaves(sp, [(0, 1)])
    with pytest.raises(ValueError):
        remove_matched_leaves(F.path(3), [(0, 1), (1, 2)])


def test_shorten_and_lengthen():
    p10 = F.path(10)
    (p,) = suspended_paths(p10)
    assert shorten_suspended(p10, p, 3) == F.path(7)
    th = F.theta()
    p = suspended_paths(th)[0]
    h = shorten_suspended(th, p, 1)
    assert h.n == th.n - 1 and h.is_connected()
    q = min(suspended_paths(h), key=lambda x: x.size)
    assert is_isomorphic(lengthen_suspended(h, q, 1), th)
    assert is_isomorphic(lengthen_suspended(F.path(4), (0, 1, 2, 3), 2), F.path(6))
    with pytest.raises(ValueError):
        shorten_suspended(p10, p10_path := suspended_paths(p10)[0], 8)
    with pytest.raises(ValueError):
        shorten_suspended(F.complete(4), (0, 1, 2), 0)
    assert p10_path.size == 10


@settings(max_examples=60)
@given(connected_graphs(max_n=10), st.integers(0, 3), st.data())
def test_surgery_roundtrip(g, d, data):
    candidates = [p for p in suspended_paths(g) if len(p.internal) > d and not p.closed and not p.degenerate]
    if not candidates:
        return
    p = data.draw(st.sampled_from(candidates))
    h = shorten_suspended(g, p, d)
    assert h.n == g.n - d and h.is_connected()
    longer = lengthen_suspended(g, p, d)
    assert longer.n == g.n + d and longer.is_connected()
    assert is_isomorphic(shorten_suspended(longer, _image(longer, p, d), d), g)


def _image(g, p, d):
    # the lengthened path keeps its vertices and gains n..n+d-1 before the last one
    new = tuple(range(g.n - d, g.n))
    return (*p.vertices[:-1], *new, p.vertices[-1])


def test_peel_examples():
    kept, steps = peel_high_degree(F.complete(5), 3)
    assert len(kept) == 3 and steps == 2
    kept, steps = peel_high_degree(F.empty(6), Fraction(1, 2))
    assert kept == set(range(6)) and steps == 0
    kept, steps = peel_high_degree(F.star(10), 2)
    assert steps == 1 and 0 not in kept
    with pytest.raises(ValueError):
        peel_high_degree(F.empty(2), 0)


def test_peel_random():
    rng = random.Random(7)
    for n in (10, 20, 40):
        for _ in range(100):
            p = rng.random()
            f = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])
            D = Fraction(rng.randint(1, 4 * n), 4)
            kept, steps = peel_high_degree(f, D)
            rest = f.induced(kept)
            assert rest.n == 0 or rest.max_degree() < D
            assert steps * D <= f.e
            assert steps == n - len(kept)
