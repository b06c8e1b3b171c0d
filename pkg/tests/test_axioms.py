from gpea.axioms import (
    central_ideal_complement,
    check_gpea,
    check_pea,
    is_commutative,
    is_ideal,
    is_normal_ideal,
    summand_conditions,
    top_of,
)
from gpea.construct import enumerate_gpeas
from gpea.corpus import cyclic_pea

A, B, ONE = 1, 2, 3


def test_check_gpea_examples(E2):
    assert check_gpea(E2.table).ok
    bad = check_gpea([[0, 1], [1, 0]])
    assert ("GPEA4", (1, 1)) in bad.violations
    idem = check_gpea([[0, 1], [1, 1]])
    assert "GPEA3" in idem.tags


def test_first_only_stops_early():
    rep = check_gpea([[0, 1, 2], [1, 0, 0], [2, 0, 0]], first_only=True)
    assert len(rep.violations) == 1


def test_check_pea(D4):
    assert check_pea(D4.table, ONE).ok
    assert "PEA2" in check_pea(D4.table, A).tags


def test_top(D4, V3, E1):
    assert top_of(D4) == ONE
    assert top_of(V3) is None
    assert top_of(E1) == 0


def test_commutativity(D4):
    assert is_commutative(D4)
    for n in (1, 2, 3):
        assert all(is_commutative(E) for E in enumerate_gpeas(n))
    assert not is_commutative(cyclic_pea())


def test_smallest_noncommutative_order():
    orders = [n for n in range(1, 6) if not all(is_commutative(E) for E in enumerate_gpeas(n))]
    assert orders[0] == 5


def test_ideals(D4, V3):
    for E in (D4, V3):
        assert is_ideal(E, {0}) and is_normal_ideal(E, {0})
    assert is_ideal(D4, {0, A}) and is_normal_ideal(D4, {0, A})
    assert not is_ideal(D4, {0, ONE})


def test_noncommutative_ideal_not_normal():
    E = cyclic_pea()
    normal = [S for S in ({0, 1}, {0, 2}, {0, 3}) if is_normal_ideal(E, S)]
    assert all(is_ideal(E, S) for S in ({0, 1}, {0, 2}, {0, 3}))
    assert normal == []


def test_central_complement(D4, V3):
    pair = central_ideal_complement(D4, {0})
    assert pair is not None and pair.complement == frozenset(range(4))
    assert central_ideal_complement(D4, {0, A}).complement == frozenset({0, B})
    assert central_ideal_complement(V3, {0, 1}) is None


def test_v3_fails_orthogonality_only(V3):
    orth, dec, _ = summand_conditions(V3, {0, 1}, {0, 2})
    assert not orth and dec
