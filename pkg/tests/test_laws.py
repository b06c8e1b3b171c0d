import pathlib

import pytest

import gpea.center
import gpea.cover
from gpea.construct import chain, diamond, trivial
from gpea.core import UsageError
from gpea.corpus import corpus
from gpea.exocenter import identity_map
from gpea.laws import REGISTRY, groups, law_ids, verify_laws

MANIFEST = pathlib.Path(__file__).resolve().parents[1] / "docs" / "laws.txt"


def failures(E, ids=None):
    return [r for r in verify_laws(E, ids) if r.status == "fail"]


def test_manifest_matches_registry():
    rows = [line.split() for line in MANIFEST.read_text().splitlines() if line and not line.startswith("#")]
    assert [lid for _, lid in rows] == law_ids()
    assert all(REGISTRY[lid].group == g for g, lid in rows)


def test_groups():
    assert groups() == ["kernel", "exocenter", "center", "covers", "types"]
    assert sum(len(law_ids(g)) for g in groups()) == len(law_ids())


def test_trivial_model_passes_everything():
    results = verify_laws(trivial())
    assert len(results) == len(law_ids())
    assert all(r.passed for r in results)


def test_small_corpus_passes():
    for mid, E in corpus(3):
        bad = failures(E)
        assert not bad, (mid, bad[:3])


def test_corrupted_table_reported():
    res = verify_laws([[0, 1], [1, 0]], model_id="bad")
    assert len(res) == 1 and res[0].status == "fail"
    assert ("GPEA4", (1, 1)) in res[0].witness


def test_selection():
    res = verify_laws(diamond(), ["boolalg.laws", "centr"])
    assert [r.law for r in res] == ["boolalg.laws", "centr"]
    with pytest.raises(UsageError):
        verify_laws(diamond(), ["no.such.law"])


def test_wrong_center_is_caught(monkeypatch):
    monkeypatch.setattr(gpea.center, "central_elements", lambda E: frozenset(E.elements()))
    bad = {r.law for r in failures(chain(3), law_ids("center"))}
    assert "centr" in bad


def test_wrong_covers_are_caught(monkeypatch):
    real = gpea.cover.cover_system

    def broken(E):
        cs = real(E)
        return gpea.cover.CoverSystem(tuple(identity_map(E) for _ in cs.gamma), cs.theta)

    monkeypatch.setattr(gpea.cover, "cover_system", broken)
    bad = {r.law for r in failures(diamond(), law_ids("covers"))}
    assert {"ExoCenCover.meet", "ExCovProp.i", "gammahullsys.hull"} <= bad
