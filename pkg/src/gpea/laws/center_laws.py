"""Central elements, the maps they induce, restriction to summands, the center unit."""
from __future__ import annotations

import itertools

from gpea.axioms import check_gpea, top_of
from gpea.center import (
    central_elements,
    centerless_split_embedded,
    is_central_by_splitting,
)
from gpea.construct import interval_embedding, interval_pea, sub_gpea
from gpea.core import members
from gpea.exocenter import exo_complement, exo_compose, exocenter, is_exomap, restrict
from gpea.laws import first, law, subsets

G = "center"


def _largest(m, S):
    S = list(S)
    tops = [c for c in S if all(m.le(x, c) for x in S)]
    return tops[0] if tops else None


@law("CentProp.i", G)
def centprop_i(m):
    t = m.t
    for c in m.Gamma:
        for a in m.N:
            found = [
                (a1, a2) for a1 in members(m.E.down[c]) for a2 in m.N
                if t[a2][c] is not None and t[a1][a2] == a
            ]
            if len(found) != 1 or not m.perp(*found[0]):
                return (c, a, found)
    return None


@law("CentProp.ii", G)
def centprop_ii(m):
    t = m.t
    return first(
        (c, a) for c in m.Gamma for a in m.N
        if not ((t[a][c] is not None) == m.perp(a, c) == (t[c][a] is not None))
    )


@law("CentProp.iii", G)
def centprop_iii(m):
    G_ = set(m.Gamma)
    return first(
        (x, y) for x in m.N for y in m.N
        if m.t[x][y] is not None and (x in G_ or y in G_) and not m.perp(x, y)
    )


@law("centr", G)
def centr(m):
    """Three characterizations: conditions C1-C4, E[0,c] has a partner summand, E = E[0,c] + {f : f perp c}."""
    for c in m.N:
        one = c in m.Gamma
        two = bool(m.summand_partners.get(m.E.down[c]))
        three = is_central_by_splitting(m.E, c)
        if not one == two == three:
            return (c, one, two, three)
    return None


@law("pisbc", G)
def pisbc(m):
    for c in m.Gamma:
        found = [p for p in m.X if p.image_mask == m.E.down[c]]
        if found != [m.pic(c)]:
            return (c,)
    return None


@law("pic", G)
def pic(m):
    for p in m.X:
        c = _largest(m, p.image)
        two = [d for d in m.N if p.image_mask == m.E.down[d]]
        three = [
            d for d in m.Gamma if m.pic(d) == p
            and m.c(p).image == frozenset(f for f in m.N if m.perp(f, d))
        ]
        if c is None:
            if two or three:
                return (p, two, three)
        elif two != [c] or three != [c]:
            return (p, c)
    return None


@law("ceprop.i", G)
def ceprop_i(m):
    return first((c, e) for c in m.Gamma for e in m.N if m.pic(c)(e) != m.meet(e, c))


@law("ceprop.ii", G)
def ceprop_ii(m):
    return first(
        (c, d) for c in m.Gamma for d in m.Gamma
        if not (m.pic(c)(d) == m.pic(d)(c) == m.meet(c, d))
    )


@law("ceprop.iii", G)
def ceprop_iii(m):
    for c in m.Gamma:
        comp = m.c(m.pic(c)).image
        for e in m.N:
            if not ((m.meet(e, c) == 0) == (e in comp) == m.perp(e, c)):
                return (c, e)
    return None


@law("ceprop.iv", G)
def ceprop_iv(m):
    for c in m.Gamma:
        for d in m.Gamma:
            w = m.meet(c, d)
            if w not in m.Gamma or m.pic(w) != m.m(m.pic(c), m.pic(d)):
                return (c, d)
    return None


@law("ceprop.v", G)
def ceprop_v(m):
    return first(
        (c, d) for c in m.Gamma for d in m.Gamma
        if not ((m.meet(c, d) == 0) == m.m(m.pic(c), m.pic(d)).is_zero == m.perp(c, d))
    )


@law("ceprop.vi", G)
def ceprop_vi(m):
    for c in m.Gamma:
        for d in m.Gamma:
            if not m.perp(c, d):
                continue
            s = m.t[c][d]
            if s != m.join(c, d) or s not in m.Gamma or m.pic(s) != m.j(m.pic(c), m.pic(d)):
                return (c, d)
    return None


@law("ceprop.vii", G)
def ceprop_vii(m):
    for c in m.Gamma:
        fixing = [p for p in m.X if p(c) == c]
        pc = m.pic(c)
        if pc not in fixing or not all(m.xle(pc, p) for p in fixing):
            return (c,)
    return None


@law("ceprop.viii", G)
def ceprop_viii(m):
    """Read with the map existentially quantified: h is central iff some exocenter map is e -> e meet h."""
    for h in m.N:
        matches = [p for p in m.X if all(p(e) == m.meet(e, h) for e in m.N)]
        if (h in m.Gamma) != bool(matches):
            return (h, matches)
        if matches and matches != [m.pic(h)]:
            return (h, matches)
    return None


@law("ceprop.ix", G)
def ceprop_ix(m):
    return first(
        (c, d) for c in m.Gamma for d in m.Gamma if m.le(c, d) != m.xle(m.pic(c), m.pic(d))
    )


@law("ceprop.x", G)
def ceprop_x(m):
    for c in m.Gamma:
        for d in m.Gamma:
            if not m.le(c, d):
                continue
            x = m.rd(c, d)
            if x != m.ld(d, c) or x not in m.Gamma or m.pic(x) != m.m(m.pic(d), m.c(m.pic(c))):
                return (c, d)
    return None


@law("ceprop.xi", G)
def ceprop_xi(m):
    for c in m.Gamma:
        for d in m.Gamma:
            j = m.join(c, d)
            if j is None or j not in m.Gamma or m.pic(j) != m.j(m.pic(c), m.pic(d)):
                return (c, d)
    return None


@law("centgea.i", G)
def centgea_i(m):
    P = {m.pic(c) for c in m.Gamma}
    for p in P:
        for q in P:
            if m.m(p, q) not in P or m.j(p, q) not in P:
                return ("not a sublattice", p, q)
            if m.xle(p, q) and m.m(q, m.c(p)) not in P:
                return ("relative complement", p, q)
    return None


@law("centgea.ii", G)
def centgea_ii(m):
    G_ = m.Gamma
    for c in G_:
        for d in G_:
            s = m.t[c][d]
            if s is not None and (s not in G_ or s != m.t[d][c]):
                return ("sum", c, d)
            if m.meet(c, d) not in G_ or m.join(c, d) not in G_:
                return ("lattice", c, d)
    F, emb = sub_gpea(m.E, G_)
    if not check_gpea(F.table).ok:
        return "not a sub-GPEA"
    for i, c in enumerate(emb):
        for j, d in enumerate(emb):
            if F.leq[i][j] != m.le(c, d):
                return ("order", c, d)
    return None


@law("centgea.iii", G)
def centgea_iii(m):
    pics = [m.pic(c) for c in m.Gamma]
    if len(set(pics)) != len(pics):
        return "not injective"
    for c in m.Gamma:
        for d in m.Gamma:
            if m.pic(m.meet(c, d)) != m.m(m.pic(c), m.pic(d)) or m.pic(m.join(c, d)) != m.j(m.pic(c), m.pic(d)):
                return (c, d)
    return None


@law("centgea.iv", G)
def centgea_iv(m):
    G_ = m.Gamma
    for a, b, c in itertools.product(G_, G_, G_):
        if m.meet(a, m.join(b, c)) != m.join(m.meet(a, b), m.meet(a, c)):
            return ("distributive", a, b, c)
    for a in G_:
        for b in G_:
            if m.le(a, b) and not any(m.meet(x, a) == 0 and m.join(x, a) == b for x in G_):
                return ("relative complement", a, b)
    return None


@law("centgea.v", G)
def centgea_v(m):
    pea = top_of(m.E) is not None
    every = {m.pic(c) for c in m.Gamma} == set(m.X)
    return None if pea == every else (pea, every)


@law("mis.i", G)
def mis_i(m):
    for p in m.X:
        for q in m.X:
            r, F, _ = restrict(q, p)
            if not is_exomap(F, r.values):
                return (q, p)
    return None


@law("mis.ii", G)
def mis_ii(m):
    for p in m.X:
        F, emb = sub_gpea(m.E, p.image)
        index = {e: i for i, e in enumerate(emb)}
        for tau in exocenter(F):
            lifted = tuple(emb[tau(index[p(e)])] for e in m.N)
            if not is_exomap(m.E, lifted):
                return (p, tau)
    return None


@law("mis.iii", G)
def mis_iii(m):
    for p in m.X:
        rs = {q: restrict(q, p)[0] for q in m.X}
        F = next(iter(rs.values())).E
        if set(rs.values()) != set(exocenter(F)):
            return ("not onto", p)
        for q in m.X:
            if rs[m.c(q)] != exo_complement(rs[q]):
                return ("complement", p, q)
            for s in m.X:
                if rs[m.m(q, s)] != exo_compose(rs[q], rs[s]):
                    return ("meet", p, q, s)
    return None


@law("mis.iv", G)
def mis_iv(m):
    for p in m.X:
        F, emb = sub_gpea(m.E, p.image)
        for i, e in enumerate(emb):
            A, a_emb = interval_embedding(F, i)
            B, b_emb = interval_embedding(m.E, e)
            if [emb[x] for x in a_emb] != list(b_emb) or A.table != B.table:
                return (p, e)
    return None


@law("mis.v", G)
def mis_v(m):
    for p in m.X:
        F, emb = sub_gpea(m.E, p.image)
        index = {e: i for i, e in enumerate(emb)}
        for x in m.N:
            a = frozenset(p(y) for y in members(m.E.down[x]))
            b = frozenset(members(m.E.down[p(x)]))
            c = frozenset(emb[i] for i in members(F.down[index[p(x)]]))
            if not a == b == c:
                return (p, x)
    return None


@law("mis.vi", G)
def mis_vi(m):
    for p in m.X:
        F, emb = sub_gpea(m.E, p.image)
        if {emb[c] for c in central_elements(F)} != set(m.Gamma) & p.image:
            return (p,)
    return None


@law("nova", G)
def nova(m):
    for k in m.N:
        I, emb = interval_embedding(m.E, k)
        index = {e: i for i, e in enumerate(emb)}
        for p in m.X:
            vals = [index.get(p(e)) for e in emb]
            if None in vals or not is_exomap(I, vals):
                return (p, k)
    return None


def _center_families(m, nonempty=True):
    return subsets(m.Gamma, nonempty=nonempty)


@law("COGPEAcenter.i", G)
def cogpea_center_i(m):
    """Nonempty families of central elements; all of them for centers of at most 10."""
    for fam in _center_families(m):
        c = m.inf(fam)
        if c is None or c not in m.Gamma or m.pic(c) != m.meet_all(m.pic(x) for x in fam):
            return (fam,)
    return None


@law("COGPEAcenter.ii", G)
def cogpea_center_ii(m):
    for fam in _center_families(m, nonempty=False):
        bounds = m.E.up[0]
        for x in fam:
            bounds &= m.E.up[x]
        if not bounds:
            continue
        d = m.sup(fam)
        if d is None or d not in m.Gamma or m.pic(d) != m.join_all(m.pic(x) for x in fam):
            return (fam,)
    return None


@law("largestandboo.i", G)
def largest_i(m):
    u = m.u
    if u not in m.Gamma or not all(m.le(c, u) for c in m.Gamma):
        return ("unit", u)
    if m.pic(u).image_mask != m.E.down[u]:
        return ("image", u)
    return None


@law("largestandboo.ii", G)
def largest_ii(m):
    G_, u = m.Gamma, m.u
    for c in G_:
        comps = [x for x in G_ if m.meet(x, c) == 0 and m.join(x, c) == u]
        if len(comps) != 1:
            return ("complement", c, comps)
    for fam in subsets(G_, nonempty=False):
        s = m.sup(fam)
        i = m.inf(fam) if fam else u
        if s not in G_ or i not in G_:
            return ("completeness", fam)
    return None


@law("centerless.i", G)
def centerless_i(m):
    u = m.u
    p = m.pic(u)
    perp = frozenset(f for f in m.N if m.perp(f, u))
    diffs = set()
    for e in m.N:
        w = m.meet(u, e)
        x = m.rd(w, e)
        if x != m.ld(e, w):
            return ("ominus undefined", e)
        diffs.add(x)
    if not (m.c(p).image == perp == frozenset(diffs)):
        return ("complement", u)
    if top_of(interval_pea(m.E, u)) is None:
        return "not a PEA"
    return None


@law("centerless.ii", G)
def centerless_ii(m):
    F1, emb1, F2, emb2 = centerless_split_embedded(m.E)
    if {emb1[c] for c in central_elements(F1)} != set(m.Gamma):
        return "center of the PEA part"
    if central_elements(F2) != frozenset({0}):
        return ("second factor has center", sorted(central_elements(F2)))
    for tau in exocenter(F2):
        if not tau.is_zero and top_of(sub_gpea(F2, tau.image)[0]) is not None:
            return ("PEA summand", tau)
    return None


@law("centerless.iii", G)
def centerless_iii(m):
    """Every split E = H + K with H a PEA and K centerless is the one along the unit."""
    found = []
    for p in m.X:
        H = sub_gpea(m.E, p.image)[0]
        K = sub_gpea(m.E, m.c(p).image)[0]
        if top_of(H) is not None and central_elements(K) == frozenset({0}):
            found.append(p)
    if found != [m.pic(m.u)]:
        return (found,)
    return None

