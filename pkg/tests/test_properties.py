from hypothesis import given, settings, strategies as st

from gpea.center import central_elements
from gpea.cli import parse_model, serialize_model
from gpea.construct import direct_sum, is_isomorphic, relabel
from gpea.core import orthosum_family
from gpea.corpus import corpus
from gpea.cover import cover_system
from gpea.exocenter import exo_complement, exo_join, exo_meet, exocenter
from gpea.typetheory import closure_gamma, disjoint_complement, double_complement, downset, gamma_image, is_td

SMALL = [E for _, E in corpus(4) if E.n <= 12]
models = st.sampled_from(SMALL)
tiny = st.sampled_from([E for E in SMALL if E.n <= 5])
FAST = settings(max_examples=60, deadline=None)


@st.composite
def model_and_subset(draw):
    E = draw(models)
    Q = draw(st.sets(st.integers(0, E.n - 1)))
    return E, frozenset(Q)


@st.composite
def relabelled(draw):
    E = draw(models)
    rest = draw(st.permutations(range(1, E.n)))
    return E, relabel(E, (0,) + tuple(rest))


@FAST
@given(relabelled())
def test_invariants_survive_relabelling(pair):
    E, F = pair
    assert is_isomorphic(E, F) is not None
    assert len(exocenter(E)) == len(exocenter(F))
    assert len(central_elements(E)) == len(central_elements(F))
    assert len(cover_system(E).theta) == len(cover_system(F).theta)


@FAST
@given(relabelled())
def test_serialization_round_trip(pair):
    _, F = pair
    assert parse_model(serialize_model(F)) == F


@FAST
@given(tiny, tiny)
def test_direct_sums_multiply(E, F):
    S, _, _ = direct_sum(E, F)
    assert len(exocenter(S)) == len(exocenter(E)) * len(exocenter(F))
    assert len(central_elements(S)) == len(central_elements(E)) * len(central_elements(F))


@FAST
@given(model_and_subset())
def test_closure_operators(pair):
    E, Q = pair
    C = closure_gamma(E, Q)
    assert Q | {0} <= C and closure_gamma(E, C) == C
    assert downset(E, downset(E, Q)) == downset(E, Q)
    assert gamma_image(E, gamma_image(E, Q)) >= gamma_image(E, Q)
    P = disjoint_complement(E, Q)
    assert Q <= double_complement(E, Q)
    assert disjoint_complement(E, double_complement(E, Q)) == P
    assert is_td(E, P)


@FAST
@given(model_and_subset())
def test_gamma_orthogonal_sums_are_sups(pair):
    E, Q = pair
    g = cover_system(E).gamma
    fam = []
    for q in sorted(Q - {0}):
        if all(exo_meet(g[q], g[f]).is_zero for f in fam):
            fam.append(q)
    s = orthosum_family(E, fam)
    assert s is not None and s == E.sup_mask(sum(1 << f for f in fam))


@FAST
@given(models, st.data())
def test_exocenter_de_morgan(E, data):
    X = exocenter(E)
    p = data.draw(st.sampled_from(X))
    q = data.draw(st.sampled_from(X))
    assert exo_complement(exo_meet(p, q)) == exo_join(exo_complement(p), exo_complement(q))
    assert exo_complement(exo_complement(p)) == p
