"""Central elements, the maps they induce, the center unit and the PEA split."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from gpea.axioms import central_ideal_complement, summand_conditions, _is_ideal_mask
from gpea.construct import sub_gpea
from gpea.core import DomainError, FiniteGpea, bits, members
from gpea.exocenter import ExoMap, exo_complement


def central_violation(E: FiniteGpea, c: int) -> Optional[tuple]:
    """First failing centrality condition for ``c`` as ``(tag, witness)``."""
    n = E.n
    t = E.table
    below_c = members(E.down[c])
    adds_c = [a for a in range(n) if t[a][c] is not None]  # a + c defined
    adds_c_mask = bits(adds_c)
    for a in range(n):
        # some a1 <= c, a2 with a2 + c defined and a1 + a2 == a
        if not any(
            E.leq[a1][a] and adds_c_mask >> E._rdiff[a1][a] & 1 for a1 in below_c
        ):
            return ("C1", (a,))
    for a in below_c:
        for b in adds_c:
            if t[a][b] is None or t[a][b] != t[b][a]:
                return ("C2", (a, b))
    for a in below_c:
        for b in below_c:
            s = t[a][b]
            if s is not None and not E.leq[s][c]:
                return ("C3", (a, b))
    for a in adds_c:
        for b in adds_c:
            s = t[a][b]
            if s is not None and t[s][c] is None:
                return ("C4", (a, b))
    return None


def is_central(E: FiniteGpea, c: int) -> bool:
    E.check(c)
    return central_violation(E, c) is None


def central_elements(E: FiniteGpea) -> frozenset:
    return E.memo("center", lambda: frozenset(c for c in range(E.n) if central_violation(E, c) is None))


def is_central_by_splitting(E: FiniteGpea, c: int) -> bool:
    """Centrality read as ``E = E[0,c] (+) {f : f orthogonal to c}``."""
    E.check(c)
    t = E.table
    S = members(E.down[c])
    Sp = [f for f in range(E.n) if t[f][c] is not None and t[f][c] == t[c][f]]
    if not (_is_ideal_mask(E, bits(S)) and _is_ideal_mask(E, bits(Sp))):
        return False
    orthogonal, decomposes, _ = summand_conditions(E, S, Sp)
    return orthogonal and decomposes


def pi_c(E: FiniteGpea, c: int) -> ExoMap:
    """The exocenter map whose image is ``E[0,c]``."""
    if c not in central_elements(E):
        raise DomainError(f"{E.name(c)} is not central")

    def compute():
        pair = central_ideal_complement(E, members(E.down[c]))
        if pair is None:
            raise AssertionError(f"E[0,{c}] is not a summand although {c} is central")
        return ExoMap(E, tuple(a1 for a1, _ in pair.coords))

    return E.memo(("pi_c", c), compute)


def center_unit(E: FiniteGpea) -> int:
    """Largest central element.

    Built as the orthosum of a greedy maximal family of pairwise disjoint
    nonzero central elements, then checked to be the order maximum.
    """
    def compute():
        gamma = sorted(central_elements(E))
        chosen = []
        for c in gamma:
            if c != 0 and all(E.meet(c, d) == 0 for d in chosen):
                chosen.append(c)
        u = 0
        for c in chosen:
            u = E.table[u][c]
            if u is None:
                raise AssertionError("disjoint central elements failed to sum")
        if not all(E.leq[c][u] for c in gamma):
            raise AssertionError(f"greedy unit {u} is not the largest central element")
        return u
    return E.memo("center_unit", compute)


@dataclass(frozen=True)
class CenterData:
    gamma_set: frozenset
    pi_of: dict
    unit: Optional[int]


def center_data(E: FiniteGpea) -> CenterData:
    gamma = central_elements(E)
    return CenterData(gamma, {c: pi_c(E, c) for c in sorted(gamma)}, center_unit(E))


def centerless_split(E: FiniteGpea) -> tuple[FiniteGpea, FiniteGpea]:
    """``(E[0,u], {f : f orthogonal to u})`` for the center unit ``u``."""
    F1, _, F2, _ = centerless_split_embedded(E)
    return F1, F2


def centerless_split_embedded(E: FiniteGpea):
    u = center_unit(E)
    p = pi_c(E, u)
    F1, emb1 = sub_gpea(E, p.image)
    F2, emb2 = sub_gpea(E, exo_complement(p).image)
    return F1, emb1, F2, emb2
