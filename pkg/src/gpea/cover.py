"""Exocentral covers, GEX-orthogonality, central orthocompleteness and hulls."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from gpea.core import FiniteGpea, bits
from gpea.exocenter import ExoMap, exo_meet, exo_meet_all, exocenter, identity_map


@dataclass(frozen=True)
class CoverSystem:
    gamma: tuple          # gamma[e] is the cover of e
    theta: tuple          # distinct covers, sorted by image bitmask

    def __getitem__(self, e: int) -> ExoMap:
        return self.gamma[e]


def exocentral_cover(E: FiniteGpea, e: int) -> ExoMap:
    """Meet of every exocenter map that fixes ``e``."""
    E.check(e)
    return cover_system(E).gamma[e]


def _cover_by_meet(E: FiniteGpea, e: int) -> ExoMap:
    return exo_meet_all(E, (p for p in exocenter(E) if p.fixes(e)))


def cover_by_images(E: FiniteGpea, e: int) -> ExoMap:
    """Exocenter map with the smallest image containing ``e``.

    Independent of the meet computation: it compares images by inclusion.
    """
    fixing = [p for p in exocenter(E) if e in p.image]
    least = [p for p in fixing if all(p.image <= q.image for q in fixing)]
    if len(least) != 1:
        raise AssertionError(f"no least summand contains {e}")
    return least[0]


def cover_system(E: FiniteGpea) -> CoverSystem:
    def compute():
        gamma = tuple(_cover_by_meet(E, e) for e in range(E.n))
        theta = tuple(sorted(set(gamma), key=lambda p: p.image_mask))
        return CoverSystem(gamma, theta)
    return E.memo("covers", compute)


def covers_disjoint(p: ExoMap, q: ExoMap) -> bool:
    return exo_meet(p, q).is_zero


def gex_orthogonal(E: FiniteGpea, family: Sequence[int]) -> bool:
    """Whether the covers of distinct positions in ``family`` are pairwise disjoint."""
    family = list(family)
    E.check(*family)
    g = cover_system(E).gamma
    return all(
        covers_disjoint(g[family[i]], g[family[j]])
        for i in range(len(family))
        for j in range(i + 1, len(family))
    )


def gamma_orthogonal_sets(E: FiniteGpea, pool=None) -> list[tuple]:
    """All nonempty sets of distinct nonzero elements with pairwise disjoint covers.

    Restricted to ``pool`` when given.  Repeats are never needed: a nonzero
    element's cover meets itself in a nonzero map.
    """
    g = cover_system(E).gamma
    cands = sorted(e for e in (range(E.n) if pool is None else pool) if e != 0)
    disjoint = {(a, b): covers_disjoint(g[a], g[b]) for a in cands for b in cands}
    out = []

    def grow(chosen, rest):
        for i, b in enumerate(rest):
            fam = chosen + (b,)
            out.append(fam)
            grow(fam, [c for c in rest[i + 1:] if disjoint[b, c]])

    grow((), cands)
    return out


@dataclass(frozen=True)
class CogpeaCertificate:
    families: tuple   # (family, orthosum) for every checked family
    maximal: tuple    # families not contained in a larger one
    failures: tuple   # (tag, family, element) for any failed check


def is_cogpea(E: FiniteGpea) -> tuple[bool, CogpeaCertificate]:
    """Check both central-orthocompleteness conditions over every GEX-orthogonal family."""
    from gpea.core import orthosum_family

    t = E.table
    fams = gamma_orthogonal_sets(E)
    records = []
    failures = []
    for fam in fams:
        s = orthosum_family(E, fam)
        sup = E.sup_mask(bits(fam))
        if s is None or s != sup:
            failures.append(("CO1", fam, s))
            continue
        records.append((fam, s))
        for e in range(E.n):
            if all(t[e][x] is not None for x in fam) and t[e][s] is None:
                failures.append(("CO2", fam, e))
            if all(t[x][e] is not None for x in fam) and t[s][e] is None:
                failures.append(("CO2", fam, e))
    fam_sets = [frozenset(f) for f, _ in records]
    maximal = tuple(f for f, _ in records if not any(frozenset(f) < o for o in fam_sets))
    cert = CogpeaCertificate(tuple(records), maximal, tuple(failures))
    return not failures, cert


def is_hull_system(E: FiniteGpea, eta: Mapping[int, Sequence[int]] | Sequence) -> bool:
    """Check ``eta_0 = 0``, ``eta_e e = e`` and ``eta_{eta_e f} = eta_e o eta_f``."""
    n = E.n
    maps = [tuple(eta[e].values if isinstance(eta[e], ExoMap) else eta[e]) for e in range(n)]
    if any(maps[0]):
        return False
    if any(maps[e][e] != e for e in range(n)):
        return False
    for e in range(n):
        for f in range(n):
            lhs = maps[maps[e][f]]
            rhs = tuple(maps[e][maps[f][x]] for x in range(n))
            if lhs != rhs:
                return False
    return True


def is_gamma_invariant(E: FiniteGpea, e: int) -> bool:
    g = cover_system(E).gamma[e]
    return all(g(f) == E.meet(e, f) for f in range(E.n))


def faithful(E: FiniteGpea, f: int) -> bool:
    return cover_system(E).gamma[f] == identity_map(E)
