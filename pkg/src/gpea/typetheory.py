"""Closure operators, type-determining sets, type flags and decompositions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from gpea.center import central_elements
from gpea.construct import interval_pea
from gpea.core import DomainError, FiniteGpea, members
from gpea.cover import CoverSystem, cover_system, covers_disjoint, faithful  # noqa: F401
from gpea.exocenter import (
    ExoMap,
    exo_complement,
    exo_join_all,
    exo_leq,
    exo_meet,
)


def _set(E: FiniteGpea, Q: Iterable[int]) -> frozenset:
    Q = frozenset(Q)
    E.check(*Q)
    return Q


def closure_gamma(E: FiniteGpea, Q: Iterable[int]) -> frozenset:
    """Orthosums of gamma-orthogonal families drawn from ``Q``.

    Least fixpoint of adding ``x + y`` for members with disjoint covers,
    starting from ``Q`` and 0; covers of sums are joins of covers, so
    pairwise steps reach every family sum.
    """
    Q = _set(E, Q)
    g = cover_system(E).gamma
    t = E.table
    P = set(Q) | {0}
    frontier = list(P)
    while frontier:
        new = []
        current = sorted(P)
        for x in frontier:
            for y in current:
                if covers_disjoint(g[x], g[y]):
                    for s in (t[x][y], t[y][x]):
                        if s is not None and s not in P:
                            P.add(s)
                            new.append(s)
        frontier = new
    return frozenset(P)


def gamma_image(E: FiniteGpea, Q: Iterable[int]) -> frozenset:
    Q = _set(E, Q)
    g = cover_system(E).gamma
    return frozenset(g[e](q) for e in range(E.n) for q in Q)


def downset(E: FiniteGpea, Q: Iterable[int]) -> frozenset:
    Q = _set(E, Q)
    m = 0
    for q in Q:
        m |= E.down[q]
    return frozenset(members(m))


def disjoint_complement(E: FiniteGpea, Q: Iterable[int]) -> frozenset:
    Q = _set(E, Q)
    return frozenset(e for e in range(E.n) if all(E.meet(q, e) == 0 for q in Q))


def double_complement(E: FiniteGpea, Q: Iterable[int]) -> frozenset:
    return disjoint_complement(E, disjoint_complement(E, Q))


def is_td(E: FiniteGpea, K: Iterable[int]) -> bool:
    K = _set(E, K)
    return closure_gamma(E, K) == K and gamma_image(E, K) == K


def is_std(E: FiniteGpea, K: Iterable[int]) -> bool:
    K = _set(E, K)
    return closure_gamma(E, K) == K and downset(E, K) == K


def td_generated(E: FiniteGpea, K: Iterable[int]) -> frozenset:
    return closure_gamma(E, gamma_image(E, K))


def std_generated(E: FiniteGpea, K: Iterable[int]) -> frozenset:
    return closure_gamma(E, downset(E, K))


def tdset_from_pea_class(E: FiniteGpea, predicate: Callable[[FiniteGpea], bool]) -> frozenset:
    """``{k : predicate(E[0,k])}``; the predicate must be isomorphism invariant."""
    return frozenset(k for k in range(E.n) if predicate(interval_pea(E, k)))


def is_boolean_pea(P: FiniteGpea) -> bool:
    """Whether the order of the PEA ``P`` is a Boolean lattice."""
    n = P.n
    top = P.inf_mask(0)
    if top is None:
        return False
    for a in range(n):
        for b in range(n):
            if P.meet(a, b) is None or P.join(a, b) is None:
                return False
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if P.meet(a, P.join(b, c)) != P.join(P.meet(a, b), P.meet(a, c)):
                    return False
    return all(any(P.meet(a, b) == 0 and P.join(a, b) == top for b in range(n)) for a in range(n))


def atoms(E: FiniteGpea) -> frozenset:
    return frozenset(a for a in range(1, E.n) if E.down[a] == (1 | 1 << a))


@dataclass(frozen=True)
class TdContext:
    E: FiniteGpea
    K: frozenset
    K_tilde: frozenset
    k_star: int
    k_tilde: int
    gamma_K: ExoMap
    gamma_K_tilde: ExoMap
    covers: CoverSystem


@dataclass(frozen=True)
class TypeFlags:
    type_K: bool
    locally_type_K: bool
    purely_non_K: bool
    properly_non_K: bool


def _greedy_top(E: FiniteGpea, K: frozenset) -> int:
    """Orthosum of a greedy maximal gamma-orthogonal family in ``K``."""
    g = cover_system(E).gamma
    chosen = []
    for k in sorted(K):
        if k != 0 and all(covers_disjoint(g[k], g[c]) for c in chosen):
            chosen.append(k)
    total = 0
    for k in chosen:
        total = E.table[total][k]
        if total is None:
            raise AssertionError("gamma-orthogonal elements failed to sum")
    return total


def td_context(E: FiniteGpea, K: Iterable[int]) -> TdContext:
    K = _set(E, K)
    if not is_td(E, K):
        raise DomainError(f"{sorted(K)} is not a type-determining set")
    covers = cover_system(E)
    g = covers.gamma
    Kt = K & central_elements(E)
    k_star = _greedy_top(E, K)
    k_tilde = _greedy_top(E, Kt)
    gK = exo_join_all(E, (g[k] for k in sorted(K)))
    gKt = exo_join_all(E, (g[k] for k in sorted(Kt)))
    if g[k_star] != gK or g[k_tilde] != gKt:
        raise AssertionError("greedy element does not carry the largest cover")
    return TdContext(E, K, Kt, k_star, k_tilde, gK, gKt, covers)


def in_theta(ctx: TdContext, p: ExoMap) -> bool:
    return p in ctx.covers.theta


def classify(ctx: TdContext, p: ExoMap) -> TypeFlags:
    theta = in_theta(ctx, p)
    return TypeFlags(
        type_K=theta and exo_leq(p, ctx.gamma_K_tilde),
        locally_type_K=theta and exo_leq(p, ctx.gamma_K),
        purely_non_K=exo_meet(p, ctx.gamma_K).is_zero,
        properly_non_K=exo_meet(p, ctx.gamma_K_tilde).is_zero,
    )


def classify_by_definition(ctx: TdContext, p: ExoMap) -> TypeFlags:
    """Flags read directly from the definitions (cover of some member)."""
    g = ctx.covers.gamma
    return TypeFlags(
        type_K=any(g[k] == p for k in ctx.K_tilde),
        locally_type_K=any(g[k] == p for k in ctx.K),
        purely_non_K=exo_meet(p, ctx.gamma_K).is_zero,
        properly_non_K=exo_meet(p, ctx.gamma_K_tilde).is_zero,
    )


def k_sharp(ctx: TdContext, p: ExoMap) -> int:
    if not in_theta(ctx, p):
        raise DomainError("map is not an exocentral cover")
    return p(ctx.k_star)


def fundamental_decomposition(ctx: TdContext) -> tuple[ExoMap, ExoMap, ExoMap]:
    gK, gKt = ctx.gamma_K, ctx.gamma_K_tilde
    return gKt, exo_meet(gK, exo_complement(gKt)), exo_complement(gK)


@dataclass(frozen=True)
class DecompositionReport:
    pi1: ExoMap
    pi2: ExoMap
    pi3: ExoMap
    piI: ExoMap
    piII: ExoMap
    piIII: ExoMap
    piIF: ExoMap
    piInotF: ExoMap
    piIIF: ExoMap
    piIInotF: ExoMap
    tau: tuple
    ctx_K: TdContext
    ctx_F: TdContext


def type_I_II_III(E: FiniteGpea, K: Iterable[int], F: Iterable[int]) -> DecompositionReport:
    K, F = _set(E, K), _set(E, F)
    if not K <= F:
        raise DomainError("K must be a subset of F")
    cK, cF = td_context(E, K), td_context(E, F)
    pis = fundamental_decomposition(cK)
    xis = fundamental_decomposition(cF)
    tau = tuple(tuple(exo_meet(p, x) for x in xis) for p in pis)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if not tau[i][j].is_zero:
            raise AssertionError(f"tau_{i + 1}{j + 1} is not zero")
    gK, gF, gFt = cK.gamma_K, cF.gamma_K, cF.gamma_K_tilde
    gKc, gFtc = exo_complement(gK), exo_complement(gFt)
    return DecompositionReport(
        pi1=pis[0], pi2=pis[1], pi3=pis[2],
        piI=gK,
        piII=exo_meet(gF, gKc),
        piIII=exo_complement(gF),
        piIF=exo_meet(gK, gFt),
        piInotF=exo_meet(gK, gFtc),
        piIIF=exo_meet(gFt, gKc),
        piIInotF=exo_meet(exo_meet(gF, gFtc), gKc),
        tau=tau,
        ctx_K=cK,
        ctx_F=cF,
    )


def type_I_flags(rep: DecompositionReport, p: ExoMap) -> dict:
    """Membership of ``p`` in each class of the I/II/III scheme."""
    cK, cF = rep.ctx_K, rep.ctx_F
    theta = in_theta(cK, p)
    gK, gF, gFt = cK.gamma_K, cF.gamma_K, cF.gamma_K_tilde
    gKc, gFtc = exo_complement(gK), exo_complement(gFt)
    return {
        "I": theta and exo_leq(p, gK),
        "II": theta and exo_leq(p, exo_meet(gF, gKc)),
        "III": exo_leq(p, exo_complement(gF)),
        "I_F": theta and exo_leq(p, exo_meet(gK, gFt)),
        "I_notF": theta and exo_leq(p, exo_meet(gK, gFtc)),
        "II_F": theta and exo_leq(p, exo_meet(exo_meet(gF, gKc), gFt)),
        "II_notF": theta and exo_leq(p, exo_meet(exo_meet(gF, gKc), gFtc)),
    }

