"""Slow, independent re-implementations used to cross-check the fast paths.

Nothing here reads the caches of :class:`FiniteGpea`; every function works
from the raw sum table with direct quantifier loops.
"""
from __future__ import annotations

import itertools

from gpea.core import FiniteGpea


def naive_is_gpea(t) -> bool:
    """The five GPEA axioms, each written as a literal quantifier."""
    n = len(t)
    E = range(n)

    def s(a, b):
        return t[a][b]

    for a in E:
        if s(a, 0) != a or s(0, a) != a:
            return False
    for a, b in itertools.product(E, E):
        if s(a, b) == 0 and not (a == 0 and b == 0):
            return False
    for a, b, c in itertools.product(E, E, E):
        if b != c and s(a, b) is not None and s(a, b) == s(a, c):
            return False
        if b != c and s(b, a) is not None and s(b, a) == s(c, a):
            return False
    for a, b in itertools.product(E, E):
        if s(a, b) is not None:
            if not [d for d in E if s(d, a) == s(a, b)]:
                return False
            if not [e for e in E if s(b, e) == s(a, b)]:
                return False
    for a, b, c in itertools.product(E, E, E):
        lhs = s(a, b) is not None and s(s(a, b), c) is not None
        rhs = s(b, c) is not None and s(a, s(b, c)) is not None
        if lhs != rhs:
            return False
        if lhs and s(s(a, b), c) != s(a, s(b, c)):
            return False
    return True


def _isomorphic_by_permutation(t1, t2) -> bool:
    n = len(t1)
    for rest in itertools.permutations(range(1, n)):
        p = (0,) + rest
        if all(
            (t1[a][b] is None and t2[p[a]][p[b]] is None)
            or (t1[a][b] is not None and t2[p[a]][p[b]] == p[t1[a][b]])
            for a in range(n)
            for b in range(n)
        ):
            return True
    return False


def brute_force_classes(n: int) -> list:
    """Isomorphism classes of GPEA tables on n elements, by full search.

    Every entry of the n x n table ranges over all elements and
    "undefined"; no labelling assumptions are made.  Only for n <= 3.
    """
    if n > 3:
        raise ValueError("brute force is limited to n <= 3")
    values = [None] + list(range(n))
    classes = []
    for flat in itertools.product(values, repeat=n * n):
        t = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if not naive_is_gpea(t):
            continue
        if not any(_isomorphic_by_permutation(t, c) for c in classes):
            classes.append(t)
    return classes


def all_exomaps(E: FiniteGpea) -> list[tuple]:
    """Every self-map of E satisfying the four exocenter conditions, by trying all tables.

    The value at 0 is pinned to 0: any endomorphism has ``v0 = v0 + v0``.
    """
    n = E.n
    t = E.table

    def leq(a, b):
        return any(t[a][x] == b for x in range(n))

    out = []
    for rest in itertools.product(range(n), repeat=n - 1):
        v = (0,) + rest
        ok = all(
            t[v[e]][v[f]] == v[t[e][f]]
            for e in range(n) for f in range(n) if t[e][f] is not None
        )
        ok = ok and all(v[v[e]] == v[e] for e in range(n))
        ok = ok and all(leq(v[e], e) for e in range(n))
        ok = ok and all(
            t[e][f] is not None and t[e][f] == t[f][e]
            for e in range(n) if v[e] == e
            for f in range(n) if v[f] == 0
        )
        if ok:
            out.append(v)
    return out


def closure_by_families(E: FiniteGpea, Q) -> frozenset:
    """Suprema of all gamma-orthogonal subfamilies of ``Q`` (and 0)."""
    from gpea.cover import cover_system, covers_disjoint

    g = cover_system(E).gamma
    cands = sorted(q for q in set(Q) if q != 0)
    out = {0}

    def grow(start, fam):
        for i in range(start, len(cands)):
            a = cands[i]
            if all(covers_disjoint(g[a], g[b]) for b in fam):
                fam.append(a)
                s = E.sup_mask(sum(1 << x for x in fam))
                if s is None:
                    raise AssertionError(f"gamma-orthogonal family {fam} has no supremum")
                out.add(s)
                grow(i + 1, fam)
                fam.pop()

    grow(0, [])
    return frozenset(out)


def gex_orthogonal_by_definition(E: FiniteGpea, family) -> bool:
    """Search for pairwise disjoint exocenter maps fixing the family members."""
    from gpea.exocenter import exo_meet, exocenter

    fam = list(family)
    X = exocenter(E)
    choices = [[p for p in X if p.fixes(e)] for e in fam]

    def search(i, picked):
        if i == len(fam):
            return True
        for p in choices[i]:
            if all(exo_meet(p, q).is_zero for q in picked) and search(i + 1, picked + [p]):
                return True
        return False

    return search(0, [])
