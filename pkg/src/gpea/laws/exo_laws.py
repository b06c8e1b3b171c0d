"""The exocenter as a Boolean algebra of decompositions."""
from __future__ import annotations

import itertools

from gpea.axioms import is_normal_ideal, _is_ideal_mask
from gpea.construct import Morphism, product, sub_gpea
from gpea.core import members, orthosum_family
from gpea.exocenter import exc_violation, factor, is_exomap
from gpea.laws import Skip, first, law, subsets
from gpea.oracles import all_exomaps

G = "exocenter"
ORACLE_MAX_N = 6


@law("ExoCen.valid", G)
def exo_valid(m):
    X = m.X
    if len(set(X)) != len(X) or [p.image_mask for p in X] != sorted(p.image_mask for p in X):
        return "listing not sorted or has repeats"
    if m.zero not in X or m.one not in X:
        return "0 or 1 missing"
    return first((p, exc_violation(m.E, p.values)) for p in X if not is_exomap(m.E, p.values))


@law("ExoCen.oracle", G)
def exo_oracle(m):
    """All self-maps with 0 fixed are tried, so only small carriers."""
    if m.n > ORACLE_MAX_N:
        raise Skip(f"n > {ORACLE_MAX_N}")
    brute = set(all_exomaps(m.E))
    fast = {p.values for p in m.X}
    if brute != fast:
        return ("missing", sorted(brute - fast), "extra", sorted(fast - brute))
    return None


@law("piprime", G)
def piprime(m):
    t = m.t
    for p in m.X:
        pc = m.c(p)
        for e in m.N:
            a, b = p(e), pc(e)
            if b != m.rd(a, e) or b != m.ld(e, a) or not m.perp(a, b) or t[a][b] != e:
                return (p, e)
    return None


@law("EXCprop.i", G)
def excprop_i(m):
    return first((p, e) for p in m.X for e in m.N if p(m.c(p)(e)) != 0 or m.c(p)(p(e)) != 0)


@law("EXCprop.ii", G)
def excprop_ii(m):
    for p in m.X:
        pc = m.c(p)
        if not is_exomap(m.E, pc.values) or pc not in m.alg.idx or m.c(pc) != p:
            return (p,)
    return None


@law("EXCprop.iii", G)
def excprop_iii(m):
    return first(
        (p, e, f) for p in m.X for f in m.N for e in members(m.E.down[p(f)]) if p(e) != e
    )


@law("EXCprop.iv", G)
def excprop_iv(m):
    return first(
        (p, e, f) for p in m.X for f in m.N for e in members(m.E.down[f]) if p(e) != m.meet(e, p(f))
    )


@law("EXCprop.v", G)
def excprop_v(m):
    for p in m.X:
        fixed = frozenset(e for e in m.N if p(e) == e)
        if p.image != fixed or not _is_ideal_mask(m.E, p.image_mask):
            return (p,)
    return None


@law("EXCprop.vi", G)
def excprop_vi(m):
    """Nonempty subfamilies of the image; all of them for images of at most 10 elements."""
    for p in m.X:
        img = sorted(p.image)
        for fam in subsets(img):
            s, i = m.sup(fam), m.inf(fam)
            if (s is not None and s not in p.image) or (i is not None and i not in p.image):
                return (p, fam)
    return None


@law("EXCprop.vii", G)
def excprop_vii(m):
    for p in m.X:
        for e in p.image:
            for f in m.c(p).image:
                if not m.perp(e, f) or m.t[e][f] != m.join(e, f) or m.meet(e, f) != 0:
                    return (p, e, f)
    return None


@law("EXCprop.viii", G)
def excprop_viii(m):
    for p in m.X:
        pc = m.c(p)
        for e in m.N:
            found = [(a, b) for a in p.image for b in pc.image if m.t[a][b] == e]
            if found != [(p(e), pc(e))]:
                return (p, e, found)
    return None


@law("EXCprop.ix", G)
def excprop_ix(m):
    t = m.t
    for p in m.X:
        pc = m.c(p)
        for e in m.N:
            for f in m.N:
                lhs = t[e][f] is not None
                rhs = t[p(e)][p(f)] is not None and t[pc(e)][pc(f)] is not None
                if lhs != rhs:
                    return (p, e, f)
    return None


@law("EXCprop.x", G)
def excprop_x(m):
    for p in m.X:
        disjoint = frozenset(f for f in m.N if all(m.meet(f, e) == 0 for e in p.image))
        if m.c(p).image != disjoint:
            return (p,)
    return None


@law("circ.i", G)
def circ_i(m):
    for p in m.X:
        for q in m.X:
            pq, qp = m.m(p, q), m.m(q, p)
            if pq != qp or pq not in m.alg.idx:
                return (p, q)
    return None


@law("circ.ii", G)
def circ_ii(m):
    for p in m.X:
        for q in m.X:
            one = m.m(q, p) == q
            two = all(m.le(q(e), p(e)) for e in m.N)
            three = q.image <= p.image
            if not one == two == three:
                return (q, p)
    return None


@law("boolalg.order", G)
def boolalg_order(m):
    A = m.alg
    k = len(m.X)
    for i in range(k):
        if not (A.le[i][i] and A.le[A.zero][i] and A.le[i][A.one]):
            return (m.X[i],)
        for j in range(k):
            if i != j and A.le[i][j] and A.le[j][i]:
                return (m.X[i], m.X[j])
            for h in range(k):
                if A.le[i][j] and A.le[j][h] and not A.le[i][h]:
                    return (m.X[i], m.X[j], m.X[h])
    return None


@law("boolalg.laws", G)
def boolalg_laws(m):
    A = m.alg
    k = len(m.X)
    M, J, C, L = A.meet, A.join, A.comp, A.le
    R = range(k)
    for a in R:
        if C[C[a]] != a or M[a][C[a]] != A.zero or J[a][C[a]] != A.one:
            return ("complement", m.X[a])
        if M[a][a] != a or J[a][a] != a:
            return ("idempotent", m.X[a])
        for b in R:
            if M[a][b] != M[b][a] or J[a][b] != J[b][a]:
                return ("commutative", m.X[a], m.X[b])
            if M[a][J[a][b]] != a or J[a][M[a][b]] != a:
                return ("absorption", m.X[a], m.X[b])
            if C[M[a][b]] != J[C[a]][C[b]]:
                return ("de morgan", m.X[a], m.X[b])
            lower = [c for c in R if L[c][a] and L[c][b]]
            upper = [c for c in R if L[a][c] and L[b][c]]
            if not all(L[c][M[a][b]] for c in lower) or M[a][b] not in lower:
                return ("meet is not the infimum", m.X[a], m.X[b])
            if not all(L[J[a][b]][c] for c in upper) or J[a][b] not in upper:
                return ("join is not the supremum", m.X[a], m.X[b])
            for c in R:
                if M[a][M[b][c]] != M[M[a][b]][c] or J[a][J[b][c]] != J[J[a][b]][c]:
                    return ("associative", m.X[a], m.X[b], m.X[c])
                if M[a][J[b][c]] != J[M[a][b]][M[a][c]]:
                    return ("distributive", m.X[a], m.X[b], m.X[c])
    return None


@law("DisjointPiXi.i", G)
def disjoint_pixi_i(m):
    for p in m.X:
        for q in m.X:
            if not m.m(p, q).is_zero:
                continue
            pq = m.j(p, q)
            for e in p.image:
                for f in q.image:
                    s = m.t[e][f]
                    if not m.perp(e, f) or s not in pq.image or s != m.join(e, f) or m.meet(e, f) != 0:
                        return (p, q, e, f)
    return None


@law("DisjointPiXi.ii", G)
def disjoint_pixi_ii(m):
    for p in m.X:
        for q in m.X:
            if not m.m(p, q).is_zero:
                continue
            pq = m.j(p, q)
            for e in m.N:
                a, b = p(e), q(e)
                if not m.perp(a, b) or not (pq(e) == m.join(a, b) == m.t[a][b]) or m.meet(a, b) != 0:
                    return (p, q, e)
    return None


@law("FinitePwiseDisjointPi.i", G)
def finite_pwise_i(m):
    """Every family of pairwise disjoint nonzero maps; members chosen in all ways."""
    for fam in m.disjoint_families:
        for picks in itertools.product(*(sorted(p.image) for p in fam)):
            s = orthosum_family(m.E, picks)
            if s is None or s != m.sup(picks):
                return (fam, picks)
    return None


@law("FinitePwiseDisjointPi.ii", G)
def finite_pwise_ii(m):
    for fam in m.disjoint_families:
        J = m.join_all(fam)
        for e in m.N:
            vals = [p(e) for p in fam]
            s = orthosum_family(m.E, vals)
            if s is None or not (J(e) == s == m.sup(vals)):
                return (fam, e)
    return None


def _map_families(m, nonempty=True):
    return subsets(m.X, nonempty=nonempty, limit=8)


@law("finitepointwisesup/inf.i", G)
def finite_pointwise_inf(m):
    """All subfamilies when there are at most 8 maps, otherwise those of size <= 3."""
    for fam in _map_families(m):
        M = m.meet_all(fam)
        for e in m.N:
            if M(e) != m.inf([p(e) for p in fam]):
                return (fam, e)
    return None


@law("finitepointwisesup/inf.ii", G)
def finite_pointwise_sup(m):
    for fam in _map_families(m):
        J = m.join_all(fam)
        for e in m.N:
            if J(e) != m.sup([p(e) for p in fam]):
                return (fam, e)
    return None


def _cartesian(m, fam):
    """Witness unless summing coordinates maps the product of images isomorphically onto the join."""
    parts = [sub_gpea(m.E, p.image) for p in fam]
    P = product([F for F, _ in parts])
    J = m.join_all(fam)
    T, emb = sub_gpea(m.E, J.image)
    index = {e: i for i, e in enumerate(emb)}
    phi = []
    for coords in itertools.product(*(range(F.n) for F, _ in parts)):
        elems = [e_emb[c] for (_, e_emb), c in zip(parts, coords)]
        s = orthosum_family(m.E, elems)
        if s is None or s != m.sup(elems) or s not in index:
            return ("coordinates", fam, elems)
        phi.append(index[s])
    f = Morphism(P, T, tuple(phi))
    if not f.is_isomorphism():
        return ("not an isomorphism", fam)
    inv = f.inverse()
    pos = [{e: i for i, e in enumerate(e_emb)} for _, e_emb in parts]
    radix = [F.n for F, _ in parts]
    for e in J.image:
        want = 0
        for p, r, ps in zip(fam, radix, pos):
            want = want * r + ps[p(e)]
        if inv(index[e]) != want:
            return ("inverse", fam, e)
    return None


@law("finitecartesianprod", G)
def finite_cartesian(m):
    one = m.one
    return first(_cartesian(m, fam) for fam in m.disjoint_families if m.join_all(fam) == one)


@law("factor.roundtrip", G)
def factor_roundtrip(m):
    for p in m.X:
        _, _, phi = factor(m.E, p)
        if not phi.is_isomorphism():
            return (p,)
    return None


@law("CentId=piE", G)
def centid_pie(m):
    """Centrality is decided by searching all ideals for a complementary partner."""
    images = {p.image_mask for p in m.X}
    central = {S for S, partners in m.summand_partners.items() if partners}
    if images != central:
        return ("images", sorted(map(members, images)), "central", sorted(map(members, central)))
    return None


@law("piEnormal", G)
def pie_normal(m):
    return first((p,) for p in m.X if not is_normal_ideal(m.E, p.image))


@law("CIposet", G)
def ciposet(m):
    for p in m.X:
        partners = m.summand_partners.get(p.image_mask, [])
        if partners != [m.c(p).image_mask]:
            return ("complement", p)
        for q in m.X:
            if m.xle(p, q) != (p.image <= q.image):
                return ("order", p, q)
    return None


@law("PtwisePi.i", G)
def ptwise_i(m):
    """Families as in oplusdist, plus the empty family."""
    fams = [()] + list(m.families())
    for p in m.X:
        for fam in fams:
            s = m.sup(fam)
            if s is not None and m.sup([p(e) for e in fam]) != p(s):
                return (p, fam)
    return None


@law("PtwisePi.ii", G)
def ptwise_ii(m):
    """Nonempty subsets on small carriers, otherwise antichains (an infimum only sees minimal members)."""
    for p in m.X:
        for fam in m.families():
            i = m.inf(fam)
            if i is not None and m.inf([p(e) for e in fam]) != p(i):
                return (p, fam)
    return None


@law("PtwisePi.iii", G)
def ptwise_iii(m):
    """Finite families with repetition up to size 3, all subsets on carriers of at most 10."""
    fams = list(subsets(m.N)) if m.n <= 10 else []
    fams += [f for f in itertools.combinations_with_replacement(m.N, 3) if len(set(f)) < 3]
    fams += list(itertools.combinations_with_replacement(m.N, 2))
    if m.n > 10:
        fams += list(itertools.combinations(m.N, 3))
    for fam in fams:
        s = orthosum_family(m.E, fam)
        if s is None:
            continue
        for p in m.X:
            if orthosum_family(m.E, [p(e) for e in fam]) != p(s):
                return (p, fam)
    return None
