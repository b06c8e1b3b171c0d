import pytest

from gpea.axioms import top_of
from gpea.center import (
    center_unit,
    central_elements,
    centerless_split,
    is_central,
    is_central_by_splitting,
    pi_c,
)
from gpea.construct import chain, direct_sum, is_isomorphic, trivial
from gpea.core import DomainError
from gpea.corpus import corpus

A, B, ONE = 1, 2, 3


def test_examples(D4, E3, V3):
    assert central_elements(D4) == frozenset({0, A, B, ONE})
    # the top of the 3-chain is central, the middle element is not
    assert central_elements(E3) == frozenset({0, 2})
    assert not is_central(E3, 1)
    assert central_elements(V3) == frozenset({0})


def test_two_definitions_agree():
    for _, E in corpus(4):
        for c in E.elements():
            assert is_central(E, c) == is_central_by_splitting(E, c)


def test_pi_c(D4, E3):
    p = pi_c(D4, A)
    assert p.values == (0, A, 0, A)
    with pytest.raises(DomainError):
        pi_c(E3, 1)


def test_unit(D4, V3):
    assert center_unit(V3) == 0
    assert center_unit(D4) == ONE
    for _, E in corpus(4):
        t = top_of(E)
        if t is not None:
            assert center_unit(E) == t


def test_centerless_split(D4, V3, E2):
    F1, F2 = centerless_split(D4)
    assert F1 == D4 and F2 == trivial()
    F1, F2 = centerless_split(V3)
    assert F1 == trivial() and is_isomorphic(F2, V3)
    F1, F2 = centerless_split(direct_sum(E2, V3)[0])
    assert is_isomorphic(F1, E2) and is_isomorphic(F2, V3)


def test_second_factor_is_centerless():
    for _, E in corpus(4):
        _, F2 = centerless_split(E)
        assert central_elements(F2) == frozenset({0})


def test_noncommutative_pea_has_only_trivial_summands():
    from gpea.corpus import cyclic_pea
    from gpea.exocenter import exocenter
    E = cyclic_pea()
    assert len(exocenter(E)) == 2
    assert central_elements(E) == frozenset({0, 4})
