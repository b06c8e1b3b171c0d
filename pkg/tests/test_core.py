import pytest

from gpea.core import (
    FiniteGpea,
    InvalidModelError,
    UsageError,
    fill_zero_sums,
    left_diff,
    leq,
    ominus,
    oplus,
    orthosum_family,
    perp,
    right_diff,
    sequence_sum,
    sup,
    inf,
)
from gpea.construct import chain, cone_interval, diamond
from gpea.corpus import corpus, cyclic_pea

A, B, ONE = 1, 2, 3


def test_oplus_examples(E2, D4):
    assert oplus(E2, 1, 1) is None
    for E in (E2, D4):
        for a in E.elements():
            assert oplus(E, a, 0) == a == oplus(E, 0, a)
    assert oplus(D4, A, B) == ONE


def test_oplus_rejects_bad_ids(D4):
    with pytest.raises(UsageError):
        oplus(D4, 0, 4)
    with pytest.raises(UsageError):
        oplus(D4, True, 0)


def test_differences(D4):
    for b in D4.elements():
        assert right_diff(D4, 0, b) == b
        assert right_diff(D4, b, b) == 0
        assert ominus(D4, b, 0) == b
        assert ominus(D4, b, b) == 0
    assert right_diff(D4, A, ONE) == B
    assert left_diff(D4, A, ONE) == B
    assert right_diff(D4, A, B) is None


def test_differences_noncommutative():
    E = cyclic_pea()
    # 1 + 3 = 4 but 3 + 1 is undefined, so 1/4 = 3 while 4\1 = 2
    assert right_diff(E, 1, 4) == 3
    assert left_diff(E, 1, 4) == 2
    assert ominus(E, 4, 1) is None
    assert not perp(E, 1, 3)


def test_perp(E2, D4):
    assert perp(D4, A, 0)
    assert not perp(E2, 1, 1)
    assert perp(D4, A, B)


def test_sup_inf(D4, V3):
    for x in D4.elements():
        assert sup(D4, {x}) == x == inf(D4, {x})
    assert sup(D4, {A, B}) == ONE
    assert inf(D4, {A, B}) == 0
    assert sup(V3, {1, 2}) is None
    assert sup(D4, set()) == 0


def test_orthosum_family(D4, E3):
    assert orthosum_family(D4, []) == 0
    assert orthosum_family(D4, [A]) == A
    assert orthosum_family(D4, [A, B]) == ONE
    assert orthosum_family(E3, [1, 1]) == 2
    assert orthosum_family(E3, [1, 1, 1]) is None


def test_sequence_sum(E3):
    assert sequence_sum(E3, []) == 0
    assert sequence_sum(E3, [1, 1]) == 2
    assert sequence_sum(E3, [2, 1]) is None


def test_order_is_partial(E3):
    for E, _ in [(E3, None)] + [(m, None) for _, m in corpus(3, constructed_models=False)]:
        for a in E.elements():
            assert leq(E, 0, a) and leq(E, a, a)
            for b in E.elements():
                if leq(E, a, b) and leq(E, b, a):
                    assert a == b


def test_zero_sums_are_filled():
    t = fill_zero_sums([[None, None], [None, None]])
    assert t == ((0, 1), (1, None))
    with pytest.raises(UsageError):
        fill_zero_sums([[0, 0], [1, None]])


def test_construction_validates():
    with pytest.raises(InvalidModelError) as info:
        FiniteGpea([[0, 1], [1, 0]])
    assert "GPEA4" in info.value.report.tags


def test_value_semantics():
    assert diamond() == diamond()
    assert hash(chain(3)) == hash(chain(3))
    assert diamond() != chain(4)
    assert len(cone_interval(2, (2, 2))) == 9


def test_labels_must_be_distinct():
    with pytest.raises(UsageError):
        FiniteGpea.from_sums(2, {}, ["x", "x"])
