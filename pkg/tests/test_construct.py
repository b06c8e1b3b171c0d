import pytest

from gpea.axioms import check_gpea
from gpea.construct import (
    Morphism,
    canonical_form,
    chain,
    cone_interval,
    diamond,
    direct_sum,
    enumerate_gpeas,
    interval_pea,
    is_isomorphic,
    product,
    relabel,
    sub_gpea,
    trivial,
)
from gpea.core import UsageError
from gpea.oracles import brute_force_classes

A, B, ONE = 1, 2, 3


def test_intervals(D4, E1):
    assert interval_pea(D4, 0) == E1
    assert is_isomorphic(interval_pea(D4, A), chain(2))
    assert interval_pea(D4, ONE) == D4


def test_direct_sum(E2, V3):
    S, i1, i2 = direct_sum(E2, E2)
    assert is_isomorphic(S, diamond())
    assert i1.is_morphism() and i2.is_morphism()
    S, i1, i2 = direct_sum(E2, V3)
    assert S.n == 6
    for a in E2.elements():
        for b in V3.elements():
            assert S.table[i1(a)][i2(b)] is not None


def test_product_three_factors():
    P = product([chain(2), chain(3), chain(2)])
    assert P.n == 12
    assert is_isomorphic(P, cone_interval(3, (1, 2, 1)))


def test_cone_interval_is_chain_product():
    assert is_isomorphic(cone_interval(1, (5,)), chain(6))
    assert cone_interval(3, (1, 2, 3)).n == 24
    with pytest.raises(UsageError):
        cone_interval(2, (20, 20))


def test_enumeration_counts_match_brute_force():
    for n in (1, 2, 3):
        assert len(enumerate_gpeas(n)) == len(brute_force_classes(n))


def test_enumeration_counts():
    # frozen from the pruned search; n <= 3 is cross-checked above
    assert [len(enumerate_gpeas(n)) for n in range(1, 6)] == [1, 1, 2, 5, 13]


def test_enumeration_sound_and_distinct():
    models = enumerate_gpeas(4)
    for E in models:
        assert check_gpea(E.table).ok
    for i, E in enumerate(models):
        for F in models[i + 1:]:
            assert is_isomorphic(E, F) is None


def test_enumeration_cap():
    with pytest.raises(UsageError):
        enumerate_gpeas(6)


def test_isomorphism(E2, E3):
    m = is_isomorphic(E3, E3)
    assert m is not None and m.map == (0, 1, 2)
    assert is_isomorphic(E2, E3) is None
    m = is_isomorphic(direct_sum(E2, E2)[0], diamond())
    assert m is not None and m.is_isomorphism()


def test_canonical_form_is_relabel_invariant():
    E = direct_sum(chain(3), chain(2))[0]
    F = relabel(E, (0, 3, 1, 5, 2, 4))
    assert canonical_form(E)[0] == canonical_form(F)[0]


def test_sub_gpea(D4):
    F, emb = sub_gpea(D4, {0, A})
    assert F.n == 2 and emb == (0, A)
    assert Morphism(F, D4, emb).is_morphism()


def test_trivial():
    assert trivial().n == 1
