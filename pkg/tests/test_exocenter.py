import itertools

from gpea.axioms import central_ideal_complement
from gpea.construct import chain, is_isomorphic, trivial
from gpea.corpus import corpus
from gpea.exocenter import (
    central_ideals,
    exc_violation,
    exo_complement,
    exo_compose,
    exo_join,
    exo_leq,
    exo_meet,
    exocenter,
    factor,
    identity_map,
    is_exomap,
    zero_map,
)
from gpea.oracles import all_exomaps

A, B, ONE = 1, 2, 3


def images(E):
    return [sorted(p.image) for p in exocenter(E)]


def test_validator(D4):
    assert is_exomap(D4, (0, 1, 2, 3))
    assert is_exomap(D4, (0, 0, 0, 0))
    assert not is_exomap(D4, (0, A, A, A))
    assert exc_violation(D4, (0, A, A, A)) is not None


def test_examples(E3, D4, V3):
    assert images(E3) == [[0], [0, 1, 2]]
    assert len(exocenter(D4)) == 4
    assert images(V3) == [[0], [0, 1, 2]]


def test_exhaustive_tables_agree():
    for _, E in corpus(4):
        if E.n <= 6:
            brute = sorted(tuple(v) for v in all_exomaps(E))
            assert brute == sorted(p.values for p in exocenter(E))


def test_images_are_central_ideals():
    for _, E in corpus(4):
        for S in central_ideals(E):
            assert central_ideal_complement(E, S) is not None


def test_boolean_operations(D4):
    zero, one = zero_map(D4), identity_map(D4)
    pa, pb = [p for p in exocenter(D4) if not (p.is_zero or p.is_identity)]
    assert exo_meet(pa, pb) == zero
    assert exo_join(pa, pb) == one
    assert exo_complement(pa) == pb
    assert exo_compose(pa, pa) == pa
    assert exo_leq(zero, pa) and exo_leq(pa, one) and not exo_leq(pa, pb)


def test_factor(D4, E2):
    E = chain(3)
    F1, F2, iso = factor(E, identity_map(E))
    assert F1 == E and F2 == trivial()
    assert iso.is_isomorphism()
    pa = next(p for p in exocenter(D4) if sorted(p.image) == [0, A])
    F1, F2, iso = factor(D4, pa)
    assert is_isomorphic(F1, E2) and is_isomorphic(F2, E2)
    assert iso.is_isomorphism()


def test_exocenter_is_boolean_algebra_size():
    for _, E in corpus(4):
        k = len(exocenter(E))
        assert k & (k - 1) == 0
        X = exocenter(E)
        for p, q in itertools.product(X, repeat=2):
            assert exo_compose(p, q) == exo_compose(q, p)
