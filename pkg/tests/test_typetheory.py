import pytest

from gpea.axioms import is_commutative
from gpea.center import central_elements
from gpea.core import DomainError
from gpea.corpus import corpus, cyclic_pea
from gpea.exocenter import ExoMap, exo_complement, identity_map, zero_map
from gpea.oracles import closure_by_families
from gpea.typetheory import (
    classify,
    closure_gamma,
    disjoint_complement,
    double_complement,
    fundamental_decomposition,
    gamma_image,
    is_boolean_pea,
    is_std,
    is_td,
    k_sharp,
    td_context,
    td_generated,
    tdset_from_pea_class,
    type_I_II_III,
)

A, B, ONE = 1, 2, 3
ALL4 = frozenset({0, A, B, ONE})


def triple(ctx):
    return tuple("1" if p.is_identity else "0" if p.is_zero else "p" for p in fundamental_decomposition(ctx))


def test_closures(D4, V3):
    for E in (D4, V3):
        assert closure_gamma(E, set()) == frozenset({0})
        assert gamma_image(E, {0}) == frozenset({0})
        assert disjoint_complement(E, set()) == frozenset(E.elements())
    assert closure_gamma(D4, {A, B}) == ALL4
    assert closure_gamma(V3, {1, 2}) == frozenset({0, 1, 2})
    assert disjoint_complement(D4, {A}) == frozenset({0, B})
    assert double_complement(D4, {A}) == frozenset({0, A})


def test_closure_oracle_small():
    import itertools
    for _, E in corpus(4, constructed_models=False):
        for r in range(E.n + 1):
            for Q in itertools.combinations(range(E.n), r):
                assert closure_gamma(E, Q) == closure_by_families(E, Q)


def test_td_sets(D4):
    for _, E in corpus(4):
        assert is_td(E, {0})
        assert is_td(E, central_elements(E))
        assert is_td(E, E.elements())
    assert td_generated(D4, {ONE}) == ALL4
    assert not is_td(D4, {0, A, B})


def test_pea_classes(D4):
    for _, E in corpus(4):
        K = tdset_from_pea_class(E, is_commutative)
        assert is_td(E, K) and is_std(E, K)
        assert tdset_from_pea_class(E, lambda P: True) == frozenset(E.elements())
    assert tdset_from_pea_class(D4, is_boolean_pea) == ALL4
    E = cyclic_pea()
    assert tdset_from_pea_class(E, is_commutative) == frozenset({0, 1, 2, 3})


def test_contexts(D4, V3):
    ctx = td_context(D4, {0})
    assert ctx.gamma_K.is_zero and ctx.k_star == 0
    ctx = td_context(D4, D4.elements())
    assert ctx.gamma_K.is_identity and ctx.K_tilde == ALL4 and ctx.gamma_K_tilde.is_identity
    ctx = td_context(V3, V3.elements())
    assert ctx.gamma_K.is_identity and ctx.K_tilde == frozenset({0}) and ctx.gamma_K_tilde.is_zero
    with pytest.raises(DomainError):
        td_context(D4, {0, A, B})


def test_classify(V3):
    for _, E in corpus(4):
        for K in ({0}, central_elements(E), set(E.elements())):
            ctx = td_context(E, K)
            f = classify(ctx, zero_map(E))
            assert f.type_K and f.locally_type_K and f.purely_non_K and f.properly_non_K
            assert classify(ctx, exo_complement(ctx.gamma_K)).purely_non_K
    ctx = td_context(V3, V3.elements())
    f = classify(ctx, identity_map(V3))
    assert f.locally_type_K and not f.type_K


def test_k_sharp(D4):
    for _, E in corpus(4):
        ctx = td_context(E, E.elements())
        assert k_sharp(ctx, ctx.gamma_K) == ctx.k_star
    ctx = td_context(D4, {0})
    with pytest.raises(DomainError):
        k_sharp(ctx, ExoMap(D4, (0, 0, 0, 1)))


def test_fundamental_triples(D4, V3):
    assert triple(td_context(D4, {0})) == ("0", "0", "1")
    assert triple(td_context(D4, D4.elements())) == ("1", "0", "0")
    assert triple(td_context(V3, V3.elements())) == ("0", "1", "0")


def test_type_I_II_III(D4, V3):
    rep = type_I_II_III(V3, {0}, V3.elements())
    assert rep.piI.is_zero and rep.piII.is_identity and rep.piIII.is_zero
    rep = type_I_II_III(D4, {0}, {0})
    assert rep.piIII.is_identity
    rep = type_I_II_III(D4, D4.elements(), D4.elements())
    assert rep.piII.is_zero and rep.piIF == rep.ctx_K.gamma_K_tilde
    with pytest.raises(DomainError):
        type_I_II_III(D4, D4.elements(), {0})
