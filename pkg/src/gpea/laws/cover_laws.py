"""Exocentral covers and the hull system they form."""
from __future__ import annotations

from gpea.cover import cover_by_images, gex_orthogonal, is_gamma_invariant, is_hull_system
from gpea.laws import first, law
from gpea.oracles import gex_orthogonal_by_definition

G = "covers"


@law("ExoCenCover.meet", G)
def cover_meet(m):
    for e in m.N:
        fixing = [p for p in m.X if p(e) == e]
        g = m.g[e]
        if g != m.meet_all(fixing) or g != cover_by_images(m.E, e):
            return (e,)
        if g(e) != e or not all(m.xle(g, p) for p in fixing):
            return (e,)
    return None


@law("ExCovProp.i", G)
def excov_i(m):
    return None if m.g[0].is_zero else (m.g[0],)


@law("ExCovProp.ii", G)
def excov_ii(m):
    return first((e,) for e in m.N if m.g[e](e) != e)


@law("ExCovProp.iii", G)
def excov_iii(m):
    return first((e, f) for e in m.N for f in m.N if m.le(e, f) and not m.xle(m.g[e], m.g[f]))


@law("ExCovProp.iv", G)
def excov_iv(m):
    g = m.g
    return first(
        (e, f) for e in m.N for f in m.N
        if m.t[e][f] is not None and g[m.t[e][f]] != m.j(g[e], g[f])
    )


@law("ExCovProp.v", G)
def excov_v(m):
    g = m.g
    return first((e, f) for e in m.N for f in m.N if g[g[e](f)] != m.m(g[e], g[f]))


@law("ExCovProp.vi", G)
def excov_vi(m):
    g = m.g
    return first((e, f) for e in m.N for f in m.N if g[m.c(g[e])(f)] != m.m(m.c(g[e]), g[f]))


@law("ExCovProp.vii", G)
def excov_vii(m):
    theta = set(m.theta)
    return first((e, f) for e in m.N for f in m.N if m.m(m.g[e], m.g[f]) not in theta)


@law("ExCovProp.viii", G)
def excov_viii(m):
    theta = set(m.theta)
    return first((e, f) for e in m.N for f in m.N if m.m(m.c(m.g[e]), m.g[f]) not in theta)


@law("ThetasbgammaGBA", G)
def theta_gba(m):
    T = list(m.theta)
    S = set(T)
    if m.zero not in S:
        return "no zero"
    for a in T:
        for b in T:
            if m.m(a, b) not in S or m.j(a, b) not in S:
                return ("lattice", a, b)
            if m.xle(a, b) and m.m(b, m.c(a)) not in S:
                return ("relative complement", a, b)
            for c in T:
                if m.m(a, m.j(b, c)) != m.j(m.m(a, b), m.m(a, c)):
                    return ("distributive", a, b, c)
    return None


@law("gammahullsys.hull", G)
def hull(m):
    return None if is_hull_system(m.E, m.g) else "not a hull system"


@law("gammahullsys.invariants", G)
def hull_invariants(m):
    inv = [e for e in m.N if is_gamma_invariant(m.E, e)]
    return None if inv == m.Gamma else (inv, m.Gamma)


@law("gammahullsys.central", G)
def hull_central(m):
    return first((c,) for c in m.Gamma if m.g[c] != m.pic(c))


@law("disjointgammasbei", G)
def disjoint_covers(m):
    """Sets of distinct elements: all of them on carriers of at most 10, else size <= 3."""
    from gpea.laws.co_laws import _element_families
    for fam in _element_families(m):
        if gex_orthogonal(m.E, fam) != gex_orthogonal_by_definition(m.E, fam):
            return (fam,)
    return None
