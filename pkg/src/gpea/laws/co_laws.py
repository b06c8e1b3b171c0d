"""GEX-orthogonal families and central orthocompleteness.

Every family here is finite, so orthosummable means orthogonal with the
orthosum as the supremum of the partial sums.
"""
from __future__ import annotations

import itertools

from gpea.construct import Morphism, interval_embedding, product
from gpea.core import orthosum_family
from gpea.cover import gex_orthogonal, is_cogpea
from gpea.laws import first, law, subsets
from gpea.oracles import gex_orthogonal_by_definition

G = "covers"


def _gex_pair(m):
    cache = m.E.memo("laws:gex_pairs", lambda: {})
    def f(a, b):
        key = (min(a, b), max(a, b))
        if key not in cache:
            cache[key] = gex_orthogonal_by_definition(m.E, key)
        return cache[key]
    return f


def _element_families(m):
    """Sets of distinct elements: all of them on carriers of at most 10, else size <= 3."""
    return subsets(m.N, limit=10, small=3)


@law("GammaexOrghogonal.summand", G)
def gex_summand(m):
    pair = _gex_pair(m)
    for e in m.N:
        for f in m.N:
            split = any(p(e) == e and m.c(p)(f) == f for p in m.X)
            if pair(e, f) != split:
                return (e, f)
    return None


@law("co.i", G)
def co_i(m):
    pair = _gex_pair(m)
    for fam in _element_families(m):
        pairwise = all(pair(a, b) for a, b in itertools.combinations(fam, 2))
        if pairwise != gex_orthogonal_by_definition(m.E, fam):
            return ("pairwise", fam)
        if pairwise:
            s = orthosum_family(m.E, fam)
            if s is None or s != m.sup(fam):
                return ("sum", fam)
    return None


@law("co.ii", G)
def co_ii(m):
    for fam in m.gamma_families:
        s = orthosum_family(m.E, fam)
        if s is None or m.sup(fam) != s:
            return (fam,)
    return None


@law("coce.i", G)
def coce_i(m):
    pair = _gex_pair(m)
    for c in m.Gamma:
        for d in m.Gamma:
            vals = (
                pair(c, d),
                m.m(m.pic(c), m.pic(d)).is_zero,
                m.perp(c, d),
                m.meet(c, d) == 0,
            )
            if len(set(vals)) != 1:
                return (c, d, vals)
    return None


@law("coce.ii", G)
def coce_ii(m):
    """Families of distinct central elements up to size 4 (all of them for centers of at most 10)."""
    for fam in subsets(m.Gamma, limit=10, small=4):
        vals = (
            gex_orthogonal_by_definition(m.E, fam),
            orthosum_family(m.E, fam) is not None,
            all(m.perp(a, b) for a, b in itertools.combinations(fam, 2)),
            all(m.meet(a, b) == 0 for a, b in itertools.combinations(fam, 2)),
        )
        if len(set(vals)) != 1:
            return (fam, vals)
    return None


@law("COGPEA", G)
def cogpea(m):
    ok, cert = is_cogpea(m.E)
    return None if ok else cert.failures[:3]


def _pointed_families(m):
    """Disjoint map families with two members e_i, f_i in each image such that e_i + f_i exists."""
    t = m.t
    for fam in m.disjoint_families:
        options = [
            [(e, f) for e in sorted(p.image) for f in sorted(p.image) if t[e][f] is not None]
            for p in fam
        ]
        for picks in itertools.product(*options):
            yield fam, [a for a, _ in picks], [b for _, b in picks]


def _pwisedisj(m, part):
    t = m.t
    for fam, es, fs in _pointed_families(m):
        efs = [t[e][f] for e, f in zip(es, fs)]
        se, sf, sef = (orthosum_family(m.E, x) for x in (es, fs, efs))
        if part == "i":
            if not all(gex_orthogonal(m.E, x) for x in (es, fs, efs) if len(set(x)) == len(x)):
                return (fam, es, fs)
            if None in (se, sf, sef):
                return (fam, es, fs)
        elif part == "ii":
            if se != m.sup(es) or sf != m.sup(fs) or sef != m.sup(efs):
                return (fam, es, fs)
        elif part == "iii":
            if t[se][sf] is None:
                return (fam, es, fs)
        elif not (t[se][sf] == sef == m.sup(efs)):
            return (fam, es, fs)
    return None


@law("COGPEAp'wisedisj.i", G)
def pwisedisj_i(m):
    """Covers are compared for families of distinct members; repeats there are zeros."""
    return _pwisedisj(m, "i")


@law("COGPEAp'wisedisj.ii", G)
def pwisedisj_ii(m):
    return _pwisedisj(m, "ii")


@law("COGPEAp'wisedisj.iii", G)
def pwisedisj_iii(m):
    return _pwisedisj(m, "iii")


@law("COGPEAp'wisedisj.iv", G)
def pwisedisj_iv(m):
    return _pwisedisj(m, "iv")


@law("DisjSup", G)
def disj_sup(m):
    A = m.alg
    for fam in m.disjoint_families:
        J = m.join_all(fam)
        j = A.idx[J]
        ids = [A.idx[p] for p in fam]
        for q in range(len(m.X)):
            if all(A.le[i][q] for i in ids) != A.le[j][q]:
                return ("not the supremum", fam)
        for e in m.N:
            vals = [p(e) for p in fam]
            if not (J(e) == m.sup(vals) == orthosum_family(m.E, vals)):
                return (fam, e)
    return None


@law("completeboo", G)
def complete_boolean(m):
    """Every subset for at most 16 maps, otherwise 4096 seeded random subsets."""
    import random

    A = m.alg
    k = len(m.X)
    below = [sum(1 << j for j in range(k) if A.le[j][i]) for i in range(k)]
    above = [sum(1 << j for j in range(k) if A.le[i][j]) for i in range(k)]
    full = (1 << k) - 1
    if k <= 16:
        masks = range(1 << k)
    else:
        rng = random.Random(k)
        masks = [rng.getrandbits(k) for _ in range(4096)]

    def has_extreme(bounds, rel):
        b = bounds
        while b:
            low = b & -b
            g = low.bit_length() - 1
            if bounds & ~rel[g] == 0:
                return True
            b ^= low
        return False

    for mask in masks:
        lower, upper = full, full
        b = mask
        while b:
            low = b & -b
            i = low.bit_length() - 1
            lower &= below[i]
            upper &= above[i]
            b ^= low
        if not has_extreme(lower, above) or not has_extreme(upper, below):
            return ([m.X[i] for i in range(k) if mask >> i & 1],)
    return None


@law("arbp'wisesup.i", G)
def arb_sup(m):
    """All subfamilies for at most 8 maps (including the empty one), otherwise size <= 3."""
    for fam in subsets(m.X, nonempty=False, limit=8):
        J = m.join_all(fam)
        for e in m.N:
            if J(e) != m.sup([p(e) for p in fam]):
                return (fam, e)
    return None


@law("arbp'wisesup.ii", G)
def arb_inf(m):
    for fam in subsets(m.X, limit=8):
        M = m.meet_all(fam)
        for e in m.N:
            if M(e) != m.inf([p(e) for p in fam]):
                return (fam, e)
    return None


@law("arbCartProd", G)
def arb_cart_prod(m):
    from gpea.laws.exo_laws import _cartesian
    return first(_cartesian(m, fam) for fam in m.disjoint_families)


def _corresponding(m, fam):
    """Every family of pairwise disjoint maps with the i-th map fixing the i-th element."""
    out = []

    def grow(i, chosen):
        if i == len(fam):
            out.append(tuple(chosen))
            return
        for p in m.X:
            if p(fam[i]) == fam[i] and all(m.m(p, q).is_zero for q in chosen):
                grow(i + 1, chosen + [p])

    grow(0, [])
    return out


def _cop(m, part):
    for fam in m.gamma_families:
        p = m.sup(fam)
        parts = [interval_embedding(m.E, x) for x in fam]
        boxes = list(itertools.product(*(emb for _, emb in parts)))
        for maps in _corresponding(m, fam):
            if part == "i":
                for box in boxes:
                    if any(q(e) != e for q, e in zip(maps, box)) or not gex_orthogonal_by_definition(m.E, box):
                        return (fam, maps, box)
            elif part == "ii":
                for box in boxes:
                    e = orthosum_family(m.E, box)
                    if e is None or any(q(e) != x for q, x in zip(maps, box)):
                        return (fam, maps, box)
            elif part == "iii":
                for e in range(m.n):
                    if not m.le(e, p):
                        continue
                    vals = [q(e) for q in maps]
                    if vals != [m.meet(e, x) for x in fam] or m.sup(vals) != e:
                        return (fam, maps, e)
                    if any(not m.le(v, x) for v, x in zip(vals, fam)):
                        return (fam, maps, e)
            else:
                P = product([F for F, _ in parts])
                T, t_emb = interval_embedding(m.E, p)
                index = {e: i for i, e in enumerate(t_emb)}
                phi = []
                for box in boxes:
                    s = orthosum_family(m.E, box)
                    if s is None or s != m.sup(box) or s not in index:
                        return (fam, maps, box)
                    phi.append(index[s])
                f = Morphism(P, T, tuple(phi))
                if not f.is_isomorphism():
                    return (fam, maps, "not an isomorphism")
                inv = f.inverse()
                for e in t_emb:
                    if boxes[inv(index[e])] != tuple(q(e) for q in maps):
                        return (fam, maps, e)
    return None


@law("cop.i", G)
def cop_i(m):
    """Nonempty GEX-orthogonal sets of distinct nonzero elements, every corresponding map family."""
    return _cop(m, "i")


@law("cop.ii", G)
def cop_ii(m):
    return _cop(m, "ii")


@law("cop.iii", G)
def cop_iii(m):
    return _cop(m, "iii")


@law("cop.iv", G)
def cop_iv(m):
    return _cop(m, "iv")
