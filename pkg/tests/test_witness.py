import pytest

from ramsey_goodness import families as F
from ramsey_goodness.graph6 import decode
from ramsey_goodness.graphcore import complement, contains_path, is_isomorphic
from ramsey_goodness.structure import alpha_prime, gamma
from ramsey_goodness.witness import (
    InfeasibleDecomposition,
    blue_check,
    build_burr_cliques,
    build_gamma,
    corrupt,
    gamma_params,
    red_check,
    validate_witness,
)


def test_gamma_decomposition_example():
    p = gamma_params(12, 4, 0, 1)
    assert (p.q, p.rho, p.part_sizes()) == (3, 3, [3, 3, 3, 3])
    w = build_gamma(12, 4, 0, 1)
    assert is_isomorphic(w.host, F.complete_multipartite([3, 3, 3, 3]))
    assert is_isomorphic(complement(w.host), F.disjoint_union(*[F.complete(3)] * 4))
    assert w.claimed_bound == 13


def test_remainder_convention():
    # divisible totals use rho = k-1, never 0
    p = gamma_params(9, 4, 1, 0)
    assert p.total == 9 and p.rho == 3 and p.q == 2
    for n in range(1, 30):
        for k in range(2, 8):
            for ap in range(0, n):
                p = gamma_params(n, k, ap, gamma(n, k, ap))
                assert 0 < p.rho <= k - 1
                assert p.q * (k - 1) + p.rho == p.total


def test_gamma_witness_sizes():
    for n in range(2, 25):
        for k in range(2, 8):
            for ap in range(n):
                gm = gamma(n, k, ap)
                try:
                    w = build_gamma(n, k, ap, gm)
                except InfeasibleDecomposition:
                    continue
                assert w.host.n == n + k - 2 - ap - gm - 1
                assert all(c.bit_count() < k for c in complement(w.host).components())


def test_infeasible_is_reported():
    with pytest.raises(InfeasibleDecomposition):
        build_gamma(3, 6, 0, 0)
    with pytest.raises(InfeasibleDecomposition):
        build_gamma(2, 5, 1, 1)


def test_star_witness_validates():
    w = build_gamma(12, 4, 0, 1)
    rep = validate_witness(w, F.star(12), "path", 4)
    assert rep.passed and "degree" in rep.red.reason


def test_burr_examples():
    w = build_burr_cliques(3, 1, 5)
    assert is_isomorphic(w.host, F.disjoint_union(F.complete(4), F.complete(4)))
    assert w.claimed_bound == 9
    rep = validate_witness(w, F.cycle(5), "cycle", 5)
    assert rep.passed and "bipartite" in rep.blue.reason
    w = build_burr_cliques(2, 2, 6)
    assert not contains_path(complement(w.host), 4)
    assert validate_witness(w, F.path(6), "path", 4).passed
    assert build_burr_cliques(2, 1, 7).claimed_bound == 7


def test_corrupted_witness_fails():
    w = corrupt(build_gamma(12, 4, 0, 1))
    rep = validate_witness(w, F.star(12), "path", 4)
    assert not rep.passed and rep.blue.status == "fail"
    w = corrupt(build_burr_cliques(3, 1, 5))
    assert validate_witness(w, F.cycle(5), "cycle", 5).blue.status == "fail"


def test_red_check_exact_search():
    host = F.complete_multipartite([2, 2, 2])
    assert red_check(host, F.cycle(6)).status == "fail"
    assert red_check(host, F.complete(4)).ok
    assert "exhaustive" in red_check(host, F.complete(4)).reason
    assert red_check(F.complete_multipartite([5, 5, 5]), F.disjoint_union(F.complete(4), F.path(9)), budget=1).status == "budget"


def test_blue_check_falls_back_to_search():
    # complement is a 7-cycle: connected, not bipartite
    host = complement(F.cycle(7))
    assert blue_check(host, "path", 7).status == "fail"
    assert blue_check(host, "cycle", 5).ok
    assert "exhaustive" in blue_check(host, "cycle", 5).reason


def test_witness_host_roundtrips_through_graph6():
    w = build_gamma(12, 4, 0, 1)
    assert decode(w.to_dict()["host_graph6"]) == w.host


FAMILY = (
    [F.path(n) for n in range(2, 21)]
    + [F.star(n) for n in range(3, 21)]
    + [F.spider(l, m) for l in range(3, 8) for m in range(1, 7) if l * m + 1 <= 20]
    + [F.broom(h, b) for h in range(2, 12) for b in range(2, 12) if h + b <= 20]
)


@pytest.mark.parametrize("g", FAMILY[::4], ids=lambda g: repr(g))
def test_gamma_certifies_lower_bound(g):
    ap = alpha_prime(g)
    for k in range(2, 7):
        gm = gamma(g.n, k, ap)
        try:
            w = build_gamma(g.n, k, ap, gm)
        except InfeasibleDecomposition:
            continue
        assert validate_witness(w, g, "path", k).passed
