"""Axioms, order, differences, intervals and central ideals."""
from __future__ import annotations

import itertools

from gpea.axioms import (
    central_ideal_complement,
    check_gpea,
    check_pea,
    is_normal_ideal,
    summand_conditions,
    top_of,
)
from gpea.construct import Morphism, interval_embedding
from gpea.core import members, orthosum_family, sequence_sum
from gpea.laws import first, law
from gpea.oracles import naive_is_gpea

G = "kernel"


@law("gpea.axioms", G)
def gpea_axioms(m):
    report = check_gpea(m.t)
    if not report.ok:
        return report.violations
    if not naive_is_gpea(m.t):
        return "literal axiom check disagrees"
    return None


@law("leqetc.order", G)
def leq_order(m):
    N = m.N
    return first(
        ("reflexive", a) for a in N if not m.le(a, a)
    ) or first(
        ("least", a) for a in N if not m.le(0, a)
    ) or first(
        ("antisymmetric", a, b) for a in N for b in N
        if a != b and m.le(a, b) and m.le(b, a)
    ) or first(
        ("transitive", a, b, c) for a in N for b in N if m.le(a, b)
        for c in N if m.le(b, c) and not m.le(a, c)
    )


@law("leqetc.differences", G)
def differences(m):
    t, N = m.t, m.N
    for a in N:
        for b in N:
            right = [x for x in N if t[a][x] == b]
            left = [y for y in N if t[y][a] == b]
            if bool(right) != bool(left):
                return ("left and right order disagree", a, b)
            if m.le(a, b) != bool(right):
                return ("order", a, b)
            if right and (len(right) != 1 or len(left) != 1):
                return ("differences not unique", a, b)
            if right and (m.rd(a, b) != right[0] or m.ld(b, a) != left[0]):
                return ("difference tables", a, b)
    return None


@law("leqetc.ominus", G)
def ominus(m):
    t, N = m.t, m.N
    commutative = all(t[a][b] == t[b][a] for a in N for b in N)
    for a in N:
        for b in N:
            if not m.le(a, b):
                continue
            x = m.rd(a, b)
            if x != m.ld(b, a):
                if commutative:
                    return ("commutative without ominus", a, b)
                continue
            if not (m.le(x, b) and m.perp(a, x) and t[a][x] == b == t[x][a]):
                return (a, b, x)
    return None


@law("leqetc.cancellation", G)
def cancellation_leq(m):
    t, N = m.t, m.N
    for a, b, c in itertools.product(N, N, N):
        if t[a][b] is not None and t[a][c] is not None and m.le(t[a][b], t[a][c]) and not m.le(b, c):
            return ("left", a, b, c)
        if t[b][a] is not None and t[c][a] is not None and m.le(t[b][a], t[c][a]) and not m.le(b, c):
            return ("right", a, b, c)
    return None


def _preserves(f, m, src):
    """Morphism ``f`` from ``src`` into ``m.E`` preserves order and both differences."""
    for a in src.elements():
        for b in src.elements():
            if not src.leq[a][b]:
                continue
            if not m.le(f(a), f(b)):
                return ("order", a, b)
            if f(src._rdiff[a][b]) != m.rd(f(a), f(b)) or f(src._ldiff[b][a]) != m.ld(f(b), f(a)):
                return ("difference", a, b)
    return None


@law("leqetc.morphism", G)
def morphism_preserves(m):
    """Checked on interval embeddings and on every exocenter map."""
    for u in m.N:
        F, emb = interval_embedding(m.E, u)
        f = Morphism(F, m.E, emb)
        if not f.is_morphism():
            return ("embedding", u)
        w = _preserves(f, m, F)
        if w:
            return ("embedding", u) + w
    for p in m.X:
        w = _preserves(p, m, m.E)
        if w:
            return (p,) + w
    return None


@law("SlashProps.i", G)
def slash_i(m):
    for a in m.N:
        for b in m.N:
            if not m.le(a, b):
                continue
            x, y = m.rd(a, b), m.ld(b, a)
            if not (m.le(y, b) and m.le(x, b) and m.rd(y, b) == a and m.ld(b, x) == a):
                return (a, b)
    return None


@law("SlashProps.ii", G)
def slash_ii(m):
    t, N = m.t, m.N
    for a in N:
        for b in N:
            if not m.le(a, b):
                continue
            for d in N:
                one = m.le(d, m.rd(a, b))
                two = t[a][d] is not None and m.le(t[a][d], b)
                three = m.le(d, b) and m.le(a, m.ld(b, d))
                if not one == two == three:
                    return (a, b, d)
    return None


@law("SlashProps.iii", G)
def slash_iii(m):
    """The last inequality is read as ``d + a <= d + b``."""
    t, N = m.t, m.N
    for a in N:
        for b in N:
            if not m.le(a, b):
                continue
            for d in N:
                bd = t[b][d]
                if bd is not None:
                    ad = t[a][d]
                    if ad is None or m.rd(a, bd) != t[m.rd(a, b)][d] or not m.le(ad, bd):
                        return ("right", a, b, d)
                db = t[d][b]
                if db is not None:
                    da = t[d][a]
                    if da is None or m.ld(db, a) != t[d][m.ld(b, a)] or not m.le(da, db):
                        return ("left", a, b, d)
    return None


@law("SlashProps.iv", G)
def slash_iv(m):
    t, N = m.t, m.N
    for b in N:
        for a in members(m.E.down[b]):
            for c in members(m.E.up[b]):
                if m.rd(a, c) != t[m.rd(a, b)][m.rd(b, c)]:
                    return ("right", a, b, c)
                if m.ld(c, a) != t[m.ld(c, b)][m.ld(b, a)]:
                    return ("left", a, b, c)
    return None


@law("oplusdist", G)
def oplusdist(m):
    """Nonempty families only: for the empty family the left side is e and the right side 0.

    All subsets on small carriers, antichains otherwise (a supremum, and
    the supremum of the shifted family, only depend on maximal members once
    the shifts are known to be monotone, which SlashProps.iii checks).
    """
    t = m.t
    for fam in m.families():
        f = m.sup(fam)
        if f is None:
            continue
        for e in m.N:
            if t[e][f] is not None:
                shifted = [t[e][x] for x in fam]
                if None in shifted or m.sup(shifted) != t[e][f]:
                    return ("left", e, fam)
            if t[f][e] is not None:
                shifted = [t[x][e] for x in fam]
                if None in shifted or m.sup(shifted) != t[f][e]:
                    return ("right", e, fam)
    return None


def _recursively_orthogonal(m, seq):
    acc = seq[0]
    for x in seq[1:]:
        if not m.perp(acc, x):
            return None
        acc = m.t[acc][x]
    return acc


@law("orthosum.order_free", G)
def order_free(m):
    """Sequences of length <= 3 (length 4 on carriers of at most 8 elements)."""
    top = 4 if m.n <= 8 else 3
    for r in range(2, top + 1):
        for seq in itertools.combinations_with_replacement(m.N, r):
            perms = set(itertools.permutations(seq))
            sums = {p: _recursively_orthogonal(m, p) for p in perms}
            if all(s is None for s in sums.values()):
                if orthosum_family(m.E, seq) is not None:
                    return ("family sum without orthogonal arrangement", seq)
                continue
            if None in sums.values() or len(set(sums.values())) != 1:
                return ("arrangement dependent", seq)
            s = next(iter(sums.values()))
            if orthosum_family(m.E, seq) != s or sequence_sum(m.E, seq) != s:
                return ("family sum", seq)
    return None


@law("veeopluswedge", G)
def vee_oplus_wedge(m):
    for e in m.N:
        for f in m.N:
            if not m.perp(e, f):
                continue
            j = m.join(e, f)
            if j is None:
                continue
            w = m.meet(e, f)
            if w is None or not m.perp(j, w) or m.t[e][f] != m.t[j][w]:
                return (e, f)
    return None


@law("pea.top", G)
def pea_top(m):
    top = top_of(m.E)
    for w in m.N:
        if check_pea(m.t, w).ok != (w == top):
            return (w, top)
    return None


@law("interval", G)
def interval(m):
    for u in m.N:
        F, emb = interval_embedding(m.E, u)
        k = emb.index(u)
        if not check_gpea(F.table).ok or not check_pea(F.table, k).ok or top_of(F) != k:
            return (u,)
    return None


@law("CentralIdeal.complement", G)
def central_complement(m):
    """A summand's complement is the unique partner ideal, and is itself a summand."""
    for S, partners in m.summand_partners.items():
        pair = central_ideal_complement(m.E, members(S))
        if pair is None:
            if partners:
                return ("partner for non-central ideal", members(S), members(partners[0]))
            continue
        Sp = sum(1 << x for x in pair.complement)
        if partners != [Sp]:
            return ("complement not unique", members(S))
        back = central_ideal_complement(m.E, pair.complement)
        if back is None or back.complement != frozenset(members(S)):
            return ("complement not central", members(S))
    return None


@law("DirSumNormal", G)
def dirsum_normal(m):
    for S, partners in m.summand_partners.items():
        if partners and not is_normal_ideal(m.E, members(S)):
            return (members(S),)
    return None


def summand_partners(m):
    """For each ideal S, every ideal T with E = S + T, by search over all ideals.

    Only ideals meeting S in {0} are tried: a common element has the two
    decompositions a + 0 and 0 + a.
    """
    from gpea.exocenter import ideals

    masks = ideals(m.E)
    out = {}
    for S in masks:
        Sm = members(S)
        found = []
        for T in masks:
            if S & T != 1:
                continue
            orth, dec, _ = summand_conditions(m.E, Sm, members(T))
            if orth and dec:
                found.append(T)
        out[S] = found
    return out
