from gpea.construct import trivial
from gpea.corpus import corpus
from gpea.cover import (
    cover_by_images,
    cover_system,
    exocentral_cover,
    faithful,
    gex_orthogonal,
    is_cogpea,
    is_hull_system,
)
from gpea.oracles import gex_orthogonal_by_definition

A, B, ONE = 1, 2, 3


def test_gex_orthogonal(D4, V3):
    assert gex_orthogonal(D4, [A])
    assert gex_orthogonal(D4, [A, B])
    assert not gex_orthogonal(V3, [1, 2])


def test_gex_orthogonal_matches_definition():
    for _, E in corpus(4, constructed_models=False):
        for a in E.elements():
            for b in E.elements():
                if a != b:
                    assert gex_orthogonal(E, [a, b]) == gex_orthogonal_by_definition(E, [a, b])


def test_cogpea(E1, D4):
    assert is_cogpea(E1)[0]
    ok, cert = is_cogpea(D4)
    assert ok
    assert {frozenset(f) for f, _ in cert.families} == {
        frozenset({A}), frozenset({B}), frozenset({ONE}), frozenset({A, B})}
    assert {frozenset(f) for f in cert.maximal} == {frozenset({A, B}), frozenset({ONE})}


def test_every_small_model_is_cogpea():
    for _, E in corpus(5):
        ok, cert = is_cogpea(E)
        assert ok, cert.failures


def test_covers(D4, V3):
    assert sorted(exocentral_cover(D4, A).image) == [0, A]
    assert exocentral_cover(V3, 1).is_identity
    assert exocentral_cover(D4, 0).is_zero
    for _, E in corpus(4):
        for e in E.elements():
            assert cover_system(E).gamma[e] == cover_by_images(E, e)


def test_hull_system(D4):
    for _, E in corpus(4):
        assert is_hull_system(E, cover_system(E).gamma)
    ident = tuple(range(D4.n))
    assert not is_hull_system(D4, [ident] * D4.n)
    assert is_hull_system(trivial(), [(0,)])


def test_faithful(D4, V3):
    assert faithful(V3, 1)
    assert not faithful(D4, A)
    assert faithful(D4, ONE)
