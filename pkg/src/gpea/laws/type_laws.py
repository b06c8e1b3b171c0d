"""Closures, type-determining sets, type predicates and the decompositions.

Every law over TD sets runs on each named set of the model ({0}, the
center, E, the set generated by each singleton, and the commutative
intervals); the decomposition laws run on every nested pair of them.
"""
from __future__ import annotations

import itertools

from gpea.axioms import is_commutative
from gpea.construct import interval_pea, sub_gpea
from gpea.core import orthosum_family
from gpea.cover import faithful, gamma_orthogonal_sets
from gpea.laws import first, law
from gpea.oracles import closure_by_families
from gpea.typetheory import (
    atoms,
    classify,
    classify_by_definition,
    closure_gamma,
    disjoint_complement,
    double_complement,
    downset,
    fundamental_decomposition,
    gamma_image,
    in_theta,
    is_boolean_pea,
    is_std,
    is_td,
    k_sharp,
    std_generated,
    td_generated,
    tdset_from_pea_class,
    type_I_II_III,
)

G = "types"

CLOSURES = {
    "gamma": closure_gamma,
    "image": gamma_image,
    "down": downset,
    "doubleprime": double_complement,
}


def _flags(m, K):
    """Context for K and the definitional flags of every exocenter map (by index)."""
    def compute():
        ctx = m.ctx(K)
        return ctx, [classify_by_definition(ctx, p) for p in m.X]
    return m.E.memo(("laws:flags", K), compute)


def _td(m):
    return [K for _, K in m.td_sets]


def _nested(m):
    T = _td(m)
    return [(K, F) for K in T for F in T if K <= F]


@law("fourclosures.remarks", G)
def four_remarks(m):
    """All subsets on carriers of at most 5, a fixed sample otherwise."""
    Qs = m.subsets_of_carrier()
    for Q in Qs:
        Qp = disjoint_complement(m.E, Q)
        if not Q <= double_complement(m.E, Q) or Qp != disjoint_complement(m.E, double_complement(m.E, Q)):
            return ("complement", sorted(Q))
        for name, cl in CLOSURES.items():
            c = cl(m.E, Q)
            if cl(m.E, c) != c or not (Q <= c or (name == "gamma" and Q <= c | {0})):
                return (name, sorted(Q))
    for P, Q in itertools.product(Qs, Qs):
        if not P <= Q:
            continue
        if not disjoint_complement(m.E, Q) <= disjoint_complement(m.E, P):
            return ("antitone", sorted(P), sorted(Q))
        for name, cl in CLOSURES.items():
            if not cl(m.E, P) <= cl(m.E, Q):
                return (name, "monotone", sorted(P), sorted(Q))
    return None


@law("fourclosures.oracle", G)
def four_oracle(m):
    """Fixpoint closure against the suprema of all gamma-orthogonal subsets."""
    for Q in m.subsets_of_carrier():
        if closure_gamma(m.E, Q) != closure_by_families(m.E, Q):
            return (sorted(Q),)
    return None


@law("QK.i", G)
def qk_i(m):
    for Q in m.subsets_of_carrier():
        down_Q = downset(m.E, Q)
        fams = [()] + gamma_orthogonal_sets(m.E, pool=Q)
        by_sum = {}
        for fam in fams:
            s = m.sup(fam) if fam else 0
            by_sum.setdefault(s, []).append(fam)
        for q in closure_gamma(m.E, Q):
            if q not in by_sum:
                return ("no family", sorted(Q), q)
            for fam in by_sum[q][:4]:
                if (orthosum_family(m.E, fam) if fam else 0) != q:
                    return ("sum", sorted(Q), fam)
                for e in m.N:
                    if not m.le(e, q):
                        continue
                    parts = [m.meet(e, x) for x in fam]
                    if any(x not in down_Q for x in parts):
                        return ("parts", sorted(Q), fam, e)
                    g = m.g
                    if any(not m.m(g[a], g[b]).is_zero for a, b in itertools.combinations(parts, 2)):
                        return ("parts not gamma-orthogonal", sorted(Q), fam, e)
                    s = orthosum_family(m.E, parts) if parts else 0
                    if s != e or (parts and m.sup(parts) != e):
                        return ("parts sum", sorted(Q), fam, e)
    return None


def _smallest(m, K, generated, pred):
    """``generated`` has the property, contains K and lies in every set with the property containing K."""
    if not (pred(m.E, generated) and K <= generated):
        return ("generated set", sorted(K))
    if m.n <= 5:
        rest = [e for e in m.N if e not in K]
        for r in range(len(rest) + 1):
            for extra in itertools.combinations(rest, r):
                S = K | frozenset(extra)
                if pred(m.E, S) and not generated <= S:
                    return ("not smallest", sorted(K), sorted(S))
    else:
        for S in _td(m):
            if K <= S and pred(m.E, S) and not generated <= S:
                return ("not smallest", sorted(K), sorted(S))
    return None


@law("QK.ii", G)
def qk_ii(m):
    return first(_smallest(m, K, td_generated(m.E, K), is_td) for K in m.subsets_of_carrier())


@law("QK.iii", G)
def qk_iii(m):
    return first(_smallest(m, K, std_generated(m.E, K), is_std) for K in m.subsets_of_carrier())


@law("QK.iv", G)
def qk_iv(m):
    for K in m.subsets_of_carrier():
        Kp = disjoint_complement(m.E, K)
        if not (Kp == downset(m.E, Kp) == disjoint_complement(m.E, downset(m.E, K))) or not is_std(m.E, Kp):
            return (sorted(K),)
    return None


@law("QK.v", G)
def qk_v(m):
    for K in m.subsets_of_carrier():
        a = disjoint_complement(m.E, K)
        b = disjoint_complement(m.E, td_generated(m.E, K))
        c = disjoint_complement(m.E, std_generated(m.E, K))
        if not a == b == c:
            return (sorted(K),)
    return None


@law("QK.atoms", G)
def qk_atoms(m):
    A = atoms(m.E)
    Ap = disjoint_complement(m.E, A)
    App = double_complement(m.E, A)
    if Ap != frozenset(e for e in m.N if not any(m.le(a, e) for a in A)):
        return "A'"
    atomic = set()
    for p in m.N:
        P = interval_pea(m.E, p)
        pa = atoms(P)
        if p == 0 or all(any(P.leq[a][x] for a in pa) for x in range(1, P.n)):
            atomic.add(p)
    if App != frozenset(atomic):
        return ("A''", sorted(App), sorted(atomic))
    if not (is_std(m.E, Ap) and is_std(m.E, App)):
        return "not STD"
    return None


@law("centrTD", G)
def centr_td(m):
    return None if is_td(m.E, m.Gamma) else (m.Gamma,)


@law("TypeClass", G)
def type_class(m):
    """Strong type classes: all PEAs, and PEAs ordered as a Boolean lattice."""
    for name, pred in (("all", lambda P: True), ("boolean", is_boolean_pea)):
        K = tdset_from_pea_class(m.E, pred)
        if not (is_td(m.E, K) and is_std(m.E, K)):
            return (name, sorted(K))
    return None


@law("TypeClass.example", G)
def type_class_example(m):
    K = tdset_from_pea_class(m.E, is_commutative)
    return None if is_std(m.E, K) and is_td(m.E, K) else (sorted(K),)


def _kstar_block(m, K, k):
    g = m.g
    covers = {g[x] for x in K}
    below = {g[e] for e in m.N if m.le(e, k)}
    interval = {p for p in m.theta if m.xle(p, g[k])}
    if k not in K or not covers == below == interval:
        return ("sets", sorted(K), k)
    if not all(m.xle(p, g[k]) for p in covers):
        return ("largest", sorted(K), k)
    for p in covers:
        if m.m(g[k], m.c(p)) not in covers:
            return ("complement", sorted(K), p)
        for q in covers:
            if m.m(p, q) not in covers or m.j(p, q) not in covers:
                return ("sublattice", sorted(K), p, q)
    return None


@law("kstar", G)
def kstar(m):
    for K in _td(m):
        ctx = m.ctx(K)
        if not is_td(m.E, ctx.K_tilde):
            return ("K tilde not TD", sorted(K))
        w = _kstar_block(m, K, ctx.k_star) or _kstar_block(m, ctx.K_tilde, ctx.k_tilde)
        if w:
            return w
    return None


@law("gammasbK.i", G)
def gammasbk_i(m):
    for K in _td(m):
        ctx = m.ctx(K)
        if not m.xle(ctx.gamma_K_tilde, ctx.gamma_K) or ctx.gamma_K not in m.theta:
            return (sorted(K),)
    return None


@law("gammasbK.ii", G)
def gammasbk_ii(m):
    return first(
        (sorted(K),) for K in _td(m)
        if m.g[m.ctx(K).k_star] != m.join_all(m.g[k] for k in sorted(K))
    )


@law("gammasbK.iii", G)
def gammasbk_iii(m):
    for K in _td(m):
        gK = m.ctx(K).gamma_K
        holders = [p for p in m.X if K <= p.image]
        if gK not in holders or not all(m.xle(gK, p) for p in holders):
            return (sorted(K),)
    return None


@law("gammasbK.iv", G)
def gammasbk_iv(m):
    for K in _td(m):
        ctx = m.ctx(K)
        if m.g[ctx.k_tilde] != m.join_all(m.g[k] for k in sorted(ctx.K_tilde)):
            return (sorted(K),)
    return None


@law("gammasbK.v", G)
def gammasbk_v(m):
    for K in _td(m):
        ctx = m.ctx(K)
        holders = [p for p in m.theta if ctx.K_tilde <= p.image]
        g = ctx.gamma_K_tilde
        if g not in holders or not all(m.xle(g, p) for p in holders):
            return (sorted(K),)
    return None


def _remark(m, K, which):
    _, flags = _flags(m, K)
    A = m.alg
    theta = set(m.theta)
    X = m.X
    for i, p in enumerate(X):
        f = flags[i]
        if which == 1 and f.type_K and not f.locally_type_K:
            return (p,)
        if which == 2 and f.purely_non_K and not f.properly_non_K:
            return (p,)
        if which == 3 and f.type_K and f.properly_non_K and not p.is_zero:
            return (p,)
        if which == 4 and f.locally_type_K and f.purely_non_K and not p.is_zero:
            return (p,)
        for j, q in enumerate(X):
            meet = flags[A.meet[i][j]]
            join = flags[A.join[i][j]]
            g = flags[j]
            if which == 5 and q in theta:
                if (f.type_K and not meet.type_K) or (f.locally_type_K and not meet.locally_type_K):
                    return (p, q)
            if which == 6:
                if (f.purely_non_K and not meet.purely_non_K) or (f.properly_non_K and not meet.properly_non_K):
                    return (p, q)
            if which == 7:
                for name in ("type_K", "locally_type_K", "purely_non_K", "properly_non_K"):
                    if getattr(f, name) and getattr(g, name) and not getattr(join, name):
                        return (name, p, q)
    return None


def _remark_law(which):
    def check(m):
        return first((sorted(K),) + w for K in _td(m) for w in [_remark(m, K, which)] if w)
    check.__name__ = f"remark_type_{which}"
    return check


for _i in range(1, 8):
    law(f"Type.remark.{_i}", G)(_remark_law(_i))


@law("Type.i", G)
def type_i(m):
    for K in _td(m):
        ctx, flags = _flags(m, K)
        for p, f in zip(m.X, flags):
            if f.type_K != (in_theta(ctx, p) and m.xle(p, ctx.gamma_K_tilde)):
                return (sorted(K), p)
    return None


@law("Type.ii", G)
def type_ii(m):
    for K in _td(m):
        if not is_std(m.E, K):
            continue
        _, flags = _flags(m, K)
        for p, f in zip(m.X, flags):
            if f.type_K and not p.image <= K:
                return (sorted(K), p)
    return None


@law("Type.iii", G)
def type_iii(m):
    for K in _td(m):
        ctx, flags = _flags(m, K)
        for p, f in zip(m.X, flags):
            if f.locally_type_K != (in_theta(ctx, p) and m.xle(p, ctx.gamma_K)):
                return (sorted(K), p)
            if classify(ctx, p) != f:
                return (sorted(K), p, "flag shortcut")
    return None


@law("Type.iv", G)
def type_iv(m):
    for K in _td(m):
        _, flags = _flags(m, K)
        for p, f in zip(m.X, flags):
            if f.purely_non_K and K & p.image != {0}:
                return (sorted(K), p)
    return None


@law("Type.v", G)
def type_v(m):
    for K in _td(m):
        ctx, flags = _flags(m, K)
        for p, f in zip(m.X, flags):
            if f.properly_non_K and ctx.K_tilde & p.image != {0}:
                return (sorted(K), p)
    return None


@law("faithful.summand", G)
def faithful_summand(m):
    for p in m.X:
        F, emb = sub_gpea(m.E, p.image)
        for i, f in enumerate(emb):
            if faithful(F, i) != (m.g[f] == p):
                return (p, f)
    return None


@law("ksharp", G)
def ksharp(m):
    for K in _td(m):
        ctx, flags = _flags(m, K)
        A = m.alg
        for p in m.theta:
            ks = k_sharp(ctx, p)
            if ks not in K or ks not in p.image:
                return (sorted(K), p, "k sharp")
            one = flags[A.idx[p]].locally_type_K
            two = m.g[ks] == p
            three = all(
                q(ks) != 0 and q(ks) in K
                for q in m.theta if not m.m(q, p).is_zero
            )
            if not one == two == three:
                return (sorted(K), p, (one, two, three))
    return None


@law("ksharp.corollary", G)
def ksharp_corollary(m):
    for K in _td(m):
        _, flags = _flags(m, K)
        for p, f in zip(m.X, flags):
            if not f.locally_type_K:
                continue
            for q in m.theta:
                qp = m.m(q, p)
                if not qp.is_zero and not (K & qp.image) - {0}:
                    return (sorted(K), p, q)
    return None


@law("type.i", G)
def lemma_type_i(m):
    for K in _td(m):
        ctx, flags = _flags(m, K)
        A = m.alg
        found = [
            p for p in m.theta
            if flags[A.idx[p]].locally_type_K and flags[A.comp[A.idx[p]]].purely_non_K
        ]
        if found != [ctx.gamma_K]:
            return (sorted(K), found)
    return None


@law("type.ii", G)
def lemma_type_ii(m):
    for K in _td(m):
        ctx, flags = _flags(m, K)
        A = m.alg
        found = [
            p for p in m.theta
            if flags[A.idx[p]].type_K and flags[A.comp[A.idx[p]]].properly_non_K
        ]
        if found != [ctx.gamma_K_tilde]:
            return (sorted(K), found)
    return None


def _partitions(m, n_parts, ok):
    """Index tuples of pairwise disjoint maps with join 1, the i-th satisfying ``ok[i]``."""
    A = m.alg
    k = len(m.X)
    cands = [[i for i in range(k) if ok[j](i)] for j in range(n_parts)]
    out = []
    for combo in itertools.product(*cands):
        if any(A.meet[a][b] != A.zero for a, b in itertools.combinations(combo, 2)):
            continue
        acc = A.zero
        for a in combo:
            acc = A.join[acc][a]
        if acc == A.one:
            out.append(combo)
    return out


def _decompos_flags(m, K):
    _, flags = _flags(m, K)
    return (
        lambda i: flags[i].type_K,
        lambda i: flags[i].locally_type_K and flags[i].properly_non_K,
        lambda i: flags[i].purely_non_K,
    )


@law("decompos.existence", G)
def decompos_existence(m):
    for K in _td(m):
        ctx = m.ctx(K)
        A = m.alg
        triple = tuple(A.idx[p] for p in fundamental_decomposition(ctx))
        expected = (
            ctx.gamma_K_tilde,
            m.m(ctx.gamma_K, m.c(ctx.gamma_K_tilde)),
            m.c(ctx.gamma_K),
        )
        if tuple(m.X[i] for i in triple) != expected:
            return ("formula", sorted(K))
        oks = _decompos_flags(m, K)
        if triple not in _partitions(m, 3, [lambda i, j=j: i == triple[j] and oks[j](i) for j in range(3)]):
            return ("conditions", sorted(K))
    return None


@law("decompos.uniqueness", G)
def decompos_uniqueness(m):
    """Exhaustive search over all triples of exocenter maps."""
    for K in _td(m):
        ctx = m.ctx(K)
        found = _partitions(m, 3, _decompos_flags(m, K))
        want = tuple(m.alg.idx[p] for p in fundamental_decomposition(ctx))
        if found != [want]:
            return (sorted(K), [[m.X[i] for i in c] for c in found])
    return None


@law("tau", G)
def tau(m):
    for K, F in _nested(m):
        rep = type_I_II_III(m.E, K, F)
        T = rep.tau
        cK, cF = rep.ctx_K, rep.ctx_F
        if not (m.xle(cK.gamma_K, cF.gamma_K) and m.xle(cK.gamma_K_tilde, cF.gamma_K_tilde)):
            return ("covers not nested", sorted(K), sorted(F))
        if not (T[0][1].is_zero and T[0][2].is_zero and T[1][2].is_zero):
            return ("zero blocks", sorted(K), sorted(F))
        xis = fundamental_decomposition(cF)
        if T[0][0] != rep.pi1 or T[2][2] != xis[2]:
            return ("diagonal", sorted(K), sorted(F))
        six = [T[0][0], T[1][0], T[1][1], T[2][0], T[2][1], T[2][2]]
        if any(not m.m(a, b).is_zero for a, b in itertools.combinations(six, 2)) or m.join_all(six) != m.one:
            return ("six-part split", sorted(K), sorted(F))
    return None


def _iii_flags(m, K, F):
    _, fk = _flags(m, K)
    _, ff = _flags(m, F)
    return {
        "I": lambda i: fk[i].locally_type_K,
        "II": lambda i: ff[i].locally_type_K and fk[i].purely_non_K,
        "III": lambda i: ff[i].purely_non_K,
        "I_F": lambda i: fk[i].locally_type_K and ff[i].type_K,
        "I_notF": lambda i: fk[i].locally_type_K and ff[i].properly_non_K,
        "II_F": lambda i: ff[i].locally_type_K and fk[i].purely_non_K and ff[i].type_K,
        "II_notF": lambda i: ff[i].locally_type_K and fk[i].purely_non_K and ff[i].properly_non_K,
    }


def _iii_expected(m, rep):
    cK, cF = rep.ctx_K, rep.ctx_F
    gK, gF, gFt = cK.gamma_K, cF.gamma_K, cF.gamma_K_tilde
    c = m.c
    return {
        "I": gK,
        "II": m.m(gF, c(gK)),
        "III": c(gF),
        "I_F": m.m(gK, gFt),
        "I_notF": m.m(gK, c(gFt)),
        "II_F": m.m(gFt, c(gK)),
        "II_notF": m.m(m.m(gF, c(gFt)), c(gK)),
    }


@law("I-II-III.existence", G)
def iii_existence(m):
    A = m.alg
    for K, F in _nested(m):
        rep = type_I_II_III(m.E, K, F)
        want = _iii_expected(m, rep)
        got = {
            "I": rep.piI, "II": rep.piII, "III": rep.piIII,
            "I_F": rep.piIF, "I_notF": rep.piInotF, "II_F": rep.piIIF, "II_notF": rep.piIInotF,
        }
        if got != want:
            return ("formula", sorted(K), sorted(F))
        flags = _iii_flags(m, K, F)
        for name, p in want.items():
            if not flags[name](A.idx[p]):
                return ("type", name, sorted(K), sorted(F))
        main = [want["I"], want["II"], want["III"]]
        if any(not m.m(a, b).is_zero for a, b in itertools.combinations(main, 2)) or m.join_all(main) != m.one:
            return ("split", sorted(K), sorted(F))
        for whole, a, b in (("I", "I_F", "I_notF"), ("II", "II_F", "II_notF")):
            if not m.m(want[a], want[b]).is_zero or m.j(want[a], want[b]) != want[whole]:
                return ("refinement", whole, sorted(K), sorted(F))
    return None


@law("I-II-III.uniqueness", G)
def iii_uniqueness(m):
    """Exhaustive search over triples, and over pairs for each refinement."""
    A = m.alg
    for K, F in _nested(m):
        rep = type_I_II_III(m.E, K, F)
        want = {k: A.idx[v] for k, v in _iii_expected(m, rep).items()}
        flags = _iii_flags(m, K, F)
        found = _partitions(m, 3, [flags["I"], flags["II"], flags["III"]])
        if found != [(want["I"], want["II"], want["III"])]:
            return ("main", sorted(K), sorted(F), found)
        for whole, a, b in (("I", "I_F", "I_notF"), ("II", "II_F", "II_notF")):
            pairs = [
                (x, y)
                for x in range(len(m.X)) if flags[a](x)
                for y in range(len(m.X)) if flags[b](y)
                if A.meet[x][y] == A.zero and A.join[x][y] == want[whole]
            ]
            if pairs != [(want[a], want[b])]:
                return ("refinement", whole, sorted(K), sorted(F), pairs)
    return None
