import pytest

from ramsey_goodness import families as F
from ramsey_goodness.oracle.sweeps import (
    addedge_sweep,
    dichotomy_check,
    dichotomy_sweep,
    erdos_gallai_sweep,
    findpath_sweep,
    peel_sweep,
    SweepReport,
    Violation,
    strucf_sweep,
)


def test_dichotomy_check_spider():
    cases, bad, rows = dichotomy_check(F.spider(3, 2), [3])
    assert cases == 1 and not bad
    assert rows[0]["leaf_count"] == 3 and rows[0]["bound2"] == "12/5"


def test_dichotomy_check_skips_premise_failures():
    assert dichotomy_check(F.star(5), [2, 3])[0] == 0
    assert dichotomy_check(F.cycle(5), [2, 3])[0] == 0
    # suspended path of 5 vertices exceeds s = 4
    assert dichotomy_check(F.broom(5, 2), [4])[0] == 0


def test_dichotomy_small():
    rep = dichotomy_sweep(7)
    assert rep.ok and rep.checked > 0


def test_dichotomy_sharded_matches():
    a = dichotomy_sweep(8, (3,))
    b = dichotomy_sweep(8, (3,), workers=2)
    assert a.checked == b.checked and a.ok and b.ok


def test_strucf_small():
    rep = strucf_sweep(7)
    assert rep.ok and rep.checked > 0


def test_strucf_star_example():
    # K_{1,3} is P_4-free; its component is too big but leaves have degree 1 <= 1
    g = F.star(4)
    assert any(2 * d <= 4 - 2 for d in g.degrees())


def test_findpath_small():
    rep = findpath_sweep(2, (4, 5))
    assert rep.ok
    assert [x["t"] for x in rep.notes["premise_pairs"]] == [4, 5]
    with pytest.raises(ValueError):
        findpath_sweep(2, (3,))


def test_addedge():
    rep = addedge_sweep(4, (3, 4))
    assert rep.ok and rep.checked > 0


def test_erdos_gallai_small():
    rep = erdos_gallai_sweep(7, 7)
    assert rep.ok
    assert [6, 4] in rep.notes["equality"]


def test_peel():
    rep = peel_sweep((10, 20), 50, seed=3)
    assert rep.ok and rep.checked == 100
    assert peel_sweep((10,), 20, seed=3).to_dict() == peel_sweep((10,), 20, seed=3).to_dict()


def test_violation_marks_report_failed():
    a = SweepReport("x", {}, checked=2)
    b = SweepReport("x", {}, checked=1, violations=[Violation("A_", "made up")])
    a.merge(b)
    assert a.checked == 3 and not a.ok
    assert a.to_dict()["violations"] == [{"graph6": "A_", "detail": "made up"}]
