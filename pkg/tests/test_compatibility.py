import pytest

from cyclicshuffle.bijections import split
from cyclicshuffle.compatibility import (
    LIFTING_PAIRS,
    check_compat,
    check_cyclic_compat,
    check_lifting,
    check_lifting_a,
    check_lifting_b,
    check_linear_compat,
    replay,
    replay_lifting,
    splitting_profile,
)
from cyclicshuffle.perm_core import all_cycles, interval
from cyclicshuffle.stats import evaluator

from .oracles import exists_matching_bijection


@pytest.mark.parametrize("name", ["Des", "des", "Pk", "pk"])
def test_linear_compatible_at_6(name):
    report = check_linear_compat(name, 6)
    assert report.verdict == "compatible"
    assert report.counterexample is None


def test_linear_tiny_bound():
    assert check_linear_compat("Des", 3).compatible
    assert check_linear_compat("des", 2).pairs_checked == 1


def test_bru_counterexample_replays():
    report = check_linear_compat("bru", 6)
    assert report.verdict == "counterexample"
    cx = report.counterexample
    assert cx.left != cx.right
    assert replay(report)
    d = report.to_dict()["counterexample"]
    assert d["left_distribution"] != d["right_distribution"]


def test_maj_is_compatible_at_small_bound():
    assert check_linear_compat("maj", 5).compatible


@pytest.mark.parametrize("name", ["cDes", "cbru", "cpk"])
def test_cyclic_compatible_at_6(name):
    assert check_cyclic_compat(name, 6).compatible


def test_cyclic_tiny_bound():
    assert check_cyclic_compat("cpk", 4).compatible


def test_kind_checks():
    with pytest.raises(ValueError):
        check_linear_compat("cdes", 4)
    with pytest.raises(ValueError):
        check_cyclic_compat("des", 4)
    with pytest.raises(ValueError):
        check_cyclic_compat("cdes", 4, method="z")
    with pytest.raises(ValueError):
        check_linear_compat("des", 1)


@pytest.mark.parametrize("name", ["cDes", "cdes", "cPk", "cpk", "cbru"])
def test_corollary_reductions_agree(name):
    verdicts = {m: check_cyclic_compat(name, 5, method=m).verdict for m in ("full", "b", "c")}
    assert len(set(verdicts.values())) == 1


def _cyclic_double_descents(c):
    # a cyclic descent statistic that is not cyclic shuffle compatible
    w, n = c.word, len(c)
    return sum(1 for i in range(n) if w[i - 1] > w[i] > w[(i + 1) % n])


def _cyclic_successions(c):
    # not a cyclic descent statistic
    w, n = c.word, len(c)
    return sum(1 for i in range(n) if w[(i + 1) % n] == w[i] + 1)


def test_reductions_catch_incompatible_descent_statistic(monkeypatch):
    from cyclicshuffle import stats

    monkeypatch.setitem(stats.CYCLIC_STATS, "cdd", _cyclic_double_descents)
    for method in ("full", "b", "c", "bc"):
        report = check_cyclic_compat("cdd", 5, method=method)
        assert report.verdict == "counterexample"
        assert replay(report)


def test_reductions_need_a_descent_statistic(monkeypatch):
    from cyclicshuffle import stats

    monkeypatch.setitem(stats.CYCLIC_STATS, "csucc", _cyclic_successions)
    assert check_cyclic_compat("csucc", 5, method="full").verdict == "counterexample"
    assert check_cyclic_compat("csucc", 5, method="bc").verdict == "compatible"


def test_parallel_matches_sequential():
    seq = check_linear_compat("bru", 6, jobs=1)
    par = check_linear_compat("bru", 6, jobs=2)
    assert seq.to_dict() == par.to_dict()
    assert check_cyclic_compat("cdes", 5, jobs=2).to_dict() == check_cyclic_compat("cdes", 5).to_dict()


def test_check_compat_dispatch():
    assert check_compat("des", 3).mode == "linear"
    assert check_compat("cdes", 3).mode == "cyclic"


@pytest.mark.parametrize("cid, lid", LIFTING_PAIRS)
def test_lifting_holds(cid, lid):
    assert check_lifting_a(cid, lid, 6).holds
    assert check_lifting_b(cid, lid, 6).holds


def test_lifting_a_violation_for_coarse_statistic():
    report = check_lifting_a("cDes", "des", 5)
    assert report.verdict == "violation"
    assert replay_lifting(report)
    v = report.violation
    assert len(v.tau) == len(v.tau_prime)


def test_lifting_b_violation_replays():
    # cdes does not determine the Des multiset over splittings
    report = check_lifting_b("cdes", "Des", 5)
    assert report.verdict == "violation"
    assert replay_lifting(report)


def test_lifting_argument_checks():
    with pytest.raises(ValueError):
        check_lifting_a("des", "des", 3)
    with pytest.raises(ValueError):
        check_lifting_b("cdes", "cdes", 3)
    with pytest.raises(ValueError):
        check_lifting("cdes", "des", "z")


@pytest.mark.parametrize("cid, lid", LIFTING_PAIRS + (("cdes", "Des"), ("cDes", "pk")))
def test_multiset_criterion_matches_matching_oracle(cid, lid):
    fc, fl = evaluator(cid), evaluator(lid)
    for m in range(1, 6):
        cycles = list(all_cycles(interval(m)))
        for a in cycles:
            for b in cycles:
                if fc(a) != fc(b):
                    continue
                left = [fl(split(a, i)) for i in range(1, m + 1)]
                right = [fl(split(b, j)) for j in range(1, m + 1)]
                multiset_equal = splitting_profile(a, lid) == splitting_profile(b, lid)
                assert multiset_equal == exists_matching_bijection(left, right)


def test_report_serialization_is_plain_json():
    import json

    for report in (check_linear_compat("bru", 5), check_lifting_a("cDes", "des", 5)):
        text = json.dumps(report.to_dict(), sort_keys=True)
        assert json.dumps(json.loads(text), sort_keys=True) == text
