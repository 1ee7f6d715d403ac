import math
import random
from collections import Counter

import pytest

from oddmaps import (
    BinaryFacts,
    Hook,
    Partition,
    beta_set,
    binary_digits,
    binary_relation,
    hook_lengths,
    hooks_of_length,
    is_hook_partition,
    nu2,
    nu2_degree,
    partition_from_beta,
    partitions_of,
    remove_hook,
)

P = Partition


def test_constructor_validates():
    assert P(()).parts == ()
    assert P([3, 1, 1]).size == 5
    with pytest.raises(ValueError):
        P((2, 3))
    with pytest.raises(ValueError):
        P((2, 0))
    with pytest.raises(ValueError):
        P((1, -1))


def test_ordering_and_rendering():
    assert P((3, 3)) > P((3, 2, 1))
    assert P((2, 2, 1, 1)) > P((2, 1, 1, 1, 1))
    assert str(P((5, 4, 2, 2, 1, 1))) == "[5,4,2,2,1,1]"
    assert str(P(())) == "[]"
    assert repr(P((2, 1))) == "Partition((2, 1))"


def test_conjugate():
    assert P((3, 1)).conjugate == P((2, 1, 1))
    assert P(()).conjugate == P(())
    for n in range(11):
        for lam in partitions_of(n):
            assert lam.conjugate.conjugate == lam


def test_hook_lengths_examples():
    assert hook_lengths(P((2, 1))) == [[3, 1], [1]]
    assert hook_lengths(P((2, 2))) == [[3, 2], [2, 1]]
    assert hook_lengths(P((1,))) == [[1]]


def test_hook_length_multiset_conjugation_invariant():
    for n in range(1, 11):
        for lam in partitions_of(n):
            mine = Counter(h for row in hook_lengths(lam) for h in row)
            conj = Counter(h for row in hook_lengths(lam.conjugate) for h in row)
            assert mine == conj


def test_hooks_of_length_examples():
    assert hook_lengths(P((3, 1))) == [[4, 2, 1], [1]]
    hooks = hooks_of_length(P((3, 1)), 2)
    assert len(hooks) == 1 and (hooks[0].row, hooks[0].col) == (1, 2)
    cells = [(h.row, h.col) for h in hooks_of_length(P((2, 2)), 2)]
    assert cells == [(1, 2), (2, 1)]
    assert hooks_of_length(P((1,)), 2) == []


def test_remove_hook_examples():
    h = hooks_of_length(P((2, 2)), 2)[1]
    assert (h.row, h.col) == (2, 1)
    assert remove_hook(P((2, 2)), h) == P((2,))
    h = hooks_of_length(P((3, 1)), 2)[0]
    assert remove_hook(P((3, 1)), h) == P((1, 1))
    h = hooks_of_length(P((1,)), 1)[0]
    assert remove_hook(P((1,)), h) == P(())


def test_remove_hook_rejects_non_hooks():
    with pytest.raises(ValueError, match="not a hook"):
        remove_hook(P((2, 2)), Hook(row=1, col=1, arm=2, leg=0))
    with pytest.raises(ValueError, match="not a hook"):
        remove_hook(P((2, 2)), Hook(row=3, col=1, arm=0, leg=0))


def test_remove_hook_size_law():
    for n in range(1, 11):
        for lam in partitions_of(n):
            for length in range(1, n + 1):
                for h in hooks_of_length(lam, length):
                    mu = remove_hook(lam, h)
                    assert mu.size == lam.size - h.length
                    assert all(a >= b for a, b in zip(mu.parts, mu.parts[1:]))


def test_beta_set_roundtrip():
    lam = P((5, 4, 2, 2, 1, 1))
    assert beta_set(lam) == (10, 8, 5, 4, 2, 1)
    assert partition_from_beta(beta_set(lam, 9)) == lam
    with pytest.raises(ValueError):
        partition_from_beta((3, 3))


def test_nu2_degree_examples():
    assert nu2_degree(P((3, 1))) == 0
    assert nu2_degree(P((2, 1))) == 1
    for n in (1, 2, 5, 9, 16):
        assert nu2_degree(P((n,))) == 0
    with pytest.raises(ValueError):
        nu2_degree(P(()))


def test_nu2():
    assert nu2(12) == 2
    assert nu2(8) == 3
    assert nu2(7) == 0
    with pytest.raises(ValueError):
        nu2(0)


def test_factorial_valuation_identity():
    for n in range(1, 21):
        direct = 0
        f = math.factorial(n)
        while f % 2 == 0:
            f //= 2
            direct += 1
        assert n - bin(n).count("1") == direct


def test_binary_relation_examples():
    r = binary_relation(5, 7)
    assert r.subsum and not r.disjoint
    r = binary_relation(2, 5)
    assert not r.subsum and r.disjoint
    for n in (0, 1, 13):
        r = binary_relation(0, n)
        assert r.subsum and r.disjoint


def test_binary_digit_sets_compose():
    for n in range(257):
        dn = set(binary_digits(n))
        for m in range(n + 1):
            dm = set(binary_digits(m))
            r = binary_relation(m, n)
            assert r.subsum == (dm <= dn)
            assert r.disjoint == (not (dm & dn))
            if r.subsum:
                rest = set(binary_digits(n - m))
                assert rest | dm == dn
                assert not (rest & dm)


def test_binary_facts():
    facts = BinaryFacts.of(12)
    assert facts.digits == frozenset({8, 4})
    assert sum(facts.digits) == facts.value
    assert BinaryFacts.of(0).digits == frozenset()


def test_is_hook_partition():
    assert is_hook_partition(P((3, 1, 1)))
    assert not is_hook_partition(P((3, 2, 2)))
    assert is_hook_partition(P(()))
    assert is_hook_partition(P((4,)))


def test_partitions_of_enumeration():
    known = {0: 1, 1: 1, 5: 7, 10: 42, 15: 176, 20: 627}
    for n, count in known.items():
        assert len(list(partitions_of(n))) == count
    listing = list(partitions_of(4))
    assert listing == [P((4,)), P((3, 1)), P((2, 2)), P((2, 1, 1)), P((1, 1, 1, 1))]
    for n in range(13):
        ps = list(partitions_of(n))
        assert ps == sorted(ps, reverse=True)
        assert len(set(ps)) == len(ps)
        assert all(p.size == n for p in ps)
    with pytest.raises(ValueError):
        list(partitions_of(-1))
