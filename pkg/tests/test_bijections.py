from collections import Counter
from itertools import combinations, permutations

import pytest

from cyclicshuffle.bijections import (
    BijectionWitness,
    DistributionMismatch,
    build_theta,
    lifting_bijection,
    max_removal,
    max_removal_inv,
    split,
    swap_map,
    theta_prime,
)
from cyclicshuffle.compatibility import LIFTING_PAIRS
from cyclicshuffle.perm_core import Cycle, all_cycles, interval, standardize_cycle
from cyclicshuffle.shuffles import cyclic_shuffles, cyclic_shuffles_at, linear_shuffles
from cyclicshuffle.stats import cyclic_stat, distribution, evaluator


def C(*w):
    return Cycle(w)


def test_split_examples():
    assert split(C(4, 5, 1, 3, 2), 3) == (3, 2, 4, 5, 1)
    assert split(C(4, 5, 1, 3, 2), 1) == (1, 3, 2, 4, 5)
    assert split(C(5), 5) == (5,)
    with pytest.raises(ValueError):
        split(C(1, 2), 3)


def test_max_removal_examples():
    assert max_removal(C(4, 5, 1, 3, 2)) == (1, 3, 2, 4)
    assert max_removal(C(6, 7, 3, 5, 4)) == (3, 5, 4, 6)
    assert max_removal(C(5)) == ()


def test_max_removal_inverse_examples():
    assert max_removal_inv((1, 3, 2, 4), 5) == C(4, 5, 1, 3, 2)
    assert max_removal_inv((3, 5, 4, 6), 7) == C(6, 7, 3, 5, 4)
    assert max_removal_inv((), 9) == C(9)
    with pytest.raises(ValueError):
        max_removal_inv((1, 5), 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_max_removal_is_bijection(n):
    cycles = list(all_cycles(interval(n)))
    images = [max_removal(c) for c in cycles]
    assert len(set(images)) == len(cycles)
    assert set(images) == set(permutations(interval(n - 1)))
    for c, w in zip(cycles, images):
        assert max_removal_inv(w, n) == c
        assert max_removal(max_removal_inv(w, n)) == w


def test_swap_map_examples():
    assert swap_map(C(1, 3, 2, 4), 3) == C(1, 3, 2, 4)
    assert swap_map(C(1, 3, 4, 2), 3) == C(1, 2, 4, 3)
    assert swap_map(C(1, 2), 2) == C(1, 2)
    with pytest.raises(ValueError):
        swap_map(C(1, 3), 3)


@pytest.mark.parametrize("n", range(2, 8))
def test_swap_map_preserves_cdes(n):
    for t in all_cycles(interval(n)):
        for i in range(2, n + 1):
            assert cyclic_stat("cDes", swap_map(t, i)) == cyclic_stat("cDes", t)


def _split_operands(total):
    letters = interval(total)
    for m in range(1, total):
        for a in combinations(letters, m):
            b = tuple(x for x in letters if x not in a)
            for p in all_cycles(a):
                for s in all_cycles(b):
                    yield p, s


def test_swap_map_well_defined_on_shuffles():
    for total in range(2, 7):
        for p, s in _split_operands(total):
            for i in range(2, total + 1):
                if not ((i in p and i - 1 in s) or (i - 1 in p and i in s)):
                    continue
                sw = {i - 1: i, i: i - 1}
                p2 = Cycle(sw.get(x, x) for x in p.word)
                s2 = Cycle(sw.get(x, x) for x in s.word)
                src = cyclic_shuffles(p, s)
                image = [swap_map(t, i) for t in src]
                assert len(set(image)) == len(src)
                assert set(image) == cyclic_shuffles(p2, s2)


def test_lemma_standardization_invariance():
    # equal standardizations of the operands give equal distributions
    for total in range(2, 7):
        for m in range(1, total):
            n = total - m
            for p, s in _split_operands(total):
                if len(p) != m:
                    continue
                p_std = standardize_cycle(p, interval(m))
                s_std = standardize_cycle(s, interval(n, m))
                for name in ("cDes", "cdes", "cPk", "cpk"):
                    assert distribution(name, cyclic_shuffles(p, s)) == distribution(
                        name, cyclic_shuffles(p_std, s_std)
                    )


def test_build_theta_example():
    src = linear_shuffles((2, 5), (7, 3))
    dst = linear_shuffles((1, 4), (5, 3))
    assert distribution("des", dst) == Counter({1: 3, 2: 3})
    w = build_theta(src, dst, "des")
    assert len(w) == 6
    assert w.sources == src and w.targets == dst
    assert w.preserves("des")
    values = Counter(evaluator("des")(a) for a, _ in w.pairs)
    assert values == Counter({1: 3, 2: 3})


def test_build_theta_identity_and_mismatch():
    s = linear_shuffles((1, 2), (3,))
    w = build_theta(s, s, "Des")
    assert all(a == b for a, b in w.pairs)
    with pytest.raises(DistributionMismatch):
        build_theta(linear_shuffles((1, 2), (3, 4)), linear_shuffles((2, 1), (3, 4)), "bru")


def test_witness_rejects_non_bijection():
    with pytest.raises(ValueError):
        BijectionWitness((((1,), (2,)), ((3,), (2,))), "word", "word")


def test_theta_prime_identity():
    w = theta_prime(C(1, 2), 1, C(2, 1), 1, C(3, 4), "Des")
    assert w.sources == {C(1, 2, 3, 4), C(1, 2, 4, 3), C(1, 3, 2, 4)}
    assert all(a == b for a, b in w.pairs)


def test_theta_prime_on_equal_cdes_pair():
    p, p2 = C(1, 3, 4, 2), C(1, 2, 4, 3)
    assert cyclic_stat("cDes", p) == cyclic_stat("cDes", p2)
    f = lifting_bijection(p, p2, "Des")
    assert f is not None and sorted(f.values()) == [1, 2, 3, 4]
    s = C(5, 6)
    for i in range(1, 5):
        w = theta_prime(p, i, p2, f[i], s, "Des")
        assert w.sources == cyclic_shuffles_at(p, i, s)
        assert w.targets == cyclic_shuffles_at(p2, f[i], s)
        assert w.preserves("cDes")


def test_theta_prime_mismatch():
    # Des of S_1[123] is empty, Des of S_1[132] is not: no theta exists
    with pytest.raises(DistributionMismatch):
        theta_prime(C(1, 2, 3), 1, C(1, 3, 2), 1, C(4, 5), "Des")


@pytest.mark.parametrize("cid, lid", LIFTING_PAIRS)
def test_theta_prime_preserves_cyclic_stat(cid, lid):
    fc = evaluator(cid)
    for total in range(2, 7):
        for m in range(1, total):
            n = total - m
            lefts = list(all_cycles(interval(m)))
            for p, p2 in combinations(lefts, 2):
                if fc(p) != fc(p2):
                    continue
                f = lifting_bijection(p, p2, lid)
                assert f is not None
                for s in all_cycles(interval(n, m)):
                    for i in range(1, m + 1):
                        w = theta_prime(p, i, p2, f[i], s, lid)
                        assert all(fc(a) == fc(b) for a, b in w.pairs)
