"""Builders for finite GPEAs, morphisms, isomorphism search and enumeration."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from gpea.axioms import check_gpea
from gpea.core import DomainError, FiniteGpea, UsageError, members

DEFAULT_ORDER_CAP = 5
DEFAULT_SIZE_CAP = 256


@dataclass(frozen=True, eq=False)
class Morphism:
    source: FiniteGpea
    target: FiniteGpea
    map: tuple

    def __call__(self, a: int) -> int:
        return self.map[a]

    def is_morphism(self) -> bool:
        s, t, f = self.source.table, self.target.table, self.map
        for a in range(self.source.n):
            for b in range(self.source.n):
                c = s[a][b]
                if c is not None and t[f[a]][f[b]] != f[c]:
                    return False
        return True

    def is_isomorphism(self) -> bool:
        if len(set(self.map)) != self.target.n or self.source.n != self.target.n:
            return False
        inv = [0] * self.target.n
        for a, b in enumerate(self.map):
            inv[b] = a
        return self.is_morphism() and Morphism(self.target, self.source, tuple(inv)).is_morphism()

    def inverse(self) -> "Morphism":
        inv = [0] * self.target.n
        for a, b in enumerate(self.map):
            inv[b] = a
        return Morphism(self.target, self.source, tuple(inv))


# basic models ---------------------------------------------------------------

def chain(n: int) -> FiniteGpea:
    """The n-element chain ``0 < 1 < ... < n-1`` with ``i + j`` defined below n."""
    if n < 1:
        raise UsageError("chain needs at least one element")
    t = [[i + j if i + j < n else None for j in range(n)] for i in range(n)]
    return FiniteGpea(t)


def antichain_gpea(k: int) -> FiniteGpea:
    """Zero plus ``k`` atoms with no nonzero sums (V3 for k=2)."""
    n = k + 1
    t = [[None] * n for _ in range(n)]
    for a in range(n):
        t[a][0] = t[0][a] = a
    names = ["0"] + [chr(ord("a") + i) for i in range(k)]
    return FiniteGpea(t, names)


def trivial() -> FiniteGpea:
    return FiniteGpea([[0]])


def diamond() -> FiniteGpea:
    """Four-element Boolean algebra ``{0, a, b, 1}`` with ``a + b = 1``."""
    return FiniteGpea.from_sums(4, {(1, 2): 3, (2, 1): 3}, ["0", "a", "b", "1"])


def named_models() -> dict[str, FiniteGpea]:
    return {
        "E1": trivial(),
        "E2": chain(2),
        "E3": chain(3),
        "D4": diamond(),
        "V3": antichain_gpea(2),
    }


# sub-structures and products ------------------------------------------------

def sub_gpea(E: FiniteGpea, elems, bound: Optional[int] = None) -> tuple[FiniteGpea, tuple]:
    """Restrict E to ``elems`` (must contain 0).

    A sum is kept when it is defined in E, lands in ``elems`` and, if a
    ``bound`` is given, lies below it.  Returns the new GPEA and the tuple
    mapping its element ids back to E.
    """
    emb = tuple(sorted(set(elems)))
    if not emb or emb[0] != 0:
        raise DomainError("a sub-GPEA must contain 0")
    index = {e: i for i, e in enumerate(emb)}
    m = len(emb)
    t = [[None] * m for _ in range(m)]
    for i, a in enumerate(emb):
        for j, b in enumerate(emb):
            c = E.table[a][b]
            if c is None or c not in index:
                continue
            if bound is not None and not E.leq[c][bound]:
                continue
            t[i][j] = index[c]
    labels = tuple(E.name(e) for e in emb) if E.labels else None
    return FiniteGpea(t, labels), emb


def downset(E: FiniteGpea, u: int) -> list[int]:
    E.check(u)
    return members(E.down[u])


def interval_pea(E: FiniteGpea, u: int) -> FiniteGpea:
    return sub_gpea(E, downset(E, u), bound=u)[0]


def interval_embedding(E: FiniteGpea, u: int) -> tuple[FiniteGpea, tuple]:
    return sub_gpea(E, downset(E, u), bound=u)


def product(factors: Sequence[FiniteGpea]) -> FiniteGpea:
    """Cartesian product with componentwise partial sum.

    Coordinates are mixed-radix with the first factor most significant, so
    the zero tuple is element 0.
    """
    factors = list(factors)
    if not factors:
        return trivial()
    sizes = [F.n for F in factors]
    coords = list(itertools.product(*(range(s) for s in sizes)))
    index = {c: i for i, c in enumerate(coords)}
    N = len(coords)
    t = [[None] * N for _ in range(N)]
    for i, x in enumerate(coords):
        for j, y in enumerate(coords):
            z = []
            for F, a, b in zip(factors, x, y):
                c = F.table[a][b]
                if c is None:
                    break
                z.append(c)
            else:
                t[i][j] = index[tuple(z)]
    labels = ["(" + ",".join(F.name(a) for F, a in zip(factors, c)) + ")" for c in coords]
    return FiniteGpea(t, labels)


def product_coords(factors: Sequence[FiniteGpea], i: int) -> tuple:
    out = []
    for F in reversed(factors):
        i, r = divmod(i, F.n)
        out.append(r)
    return tuple(reversed(out))


def direct_sum(E1: FiniteGpea, E2: FiniteGpea) -> tuple[FiniteGpea, Morphism, Morphism]:
    """Direct sum with its two injections ``a -> (a, 0)`` and ``b -> (0, b)``."""
    S = product([E1, E2])
    inj1 = Morphism(E1, S, tuple(a * E2.n for a in range(E1.n)))
    inj2 = Morphism(E2, S, tuple(range(E2.n)))
    return S, inj1, inj2


def cone_interval(d: int, bound: Sequence[int], *, max_size: int = DEFAULT_SIZE_CAP) -> FiniteGpea:
    """Integer vectors ``0 <= x <= bound`` in Z^d with addition kept below ``bound``."""
    bound = tuple(int(b) for b in bound)
    if len(bound) != d or any(b < 0 for b in bound):
        raise UsageError("bound must be d nonnegative integers")
    size = math.prod(b + 1 for b in bound)
    if size > max_size:
        raise UsageError(f"cone interval has {size} elements, cap is {max_size}")
    vecs = list(itertools.product(*(range(b + 1) for b in bound)))
    index = {v: i for i, v in enumerate(vecs)}
    t = [[index.get(tuple(x + y for x, y in zip(u, v))) for v in vecs] for u in vecs]
    labels = ["(" + ",".join(map(str, v)) + ")" for v in vecs] if d > 1 else None
    return FiniteGpea(t, labels)


# isomorphism ----------------------------------------------------------------

def element_invariants(E: FiniteGpea) -> tuple:
    """Per-element data preserved by every isomorphism."""
    t = E.table
    out = []
    for a in range(E.n):
        out.append((
            bin(E.down[a]).count("1"),
            bin(E.up[a]).count("1"),
            sum(1 for b in range(E.n) if t[a][b] is not None),
            sum(1 for b in range(E.n) if t[b][a] is not None),
            sum(1 for b in range(E.n) if t[a][b] is not None and t[a][b] == t[b][a]),
        ))
    return tuple(out)


def is_isomorphic(E: FiniteGpea, F: FiniteGpea) -> Optional[Morphism]:
    """An isomorphism E -> F found by backtracking, or None."""
    if E.n != F.n or E.sum_count() != F.sum_count():
        return None
    inv_e, inv_f = element_invariants(E), element_invariants(F)
    if sorted(inv_e) != sorted(inv_f):
        return None
    n = E.n
    te, tf = E.table, F.table
    fwd = [-1] * n
    back = [-1] * n
    order = sorted(range(n), key=lambda a: (inv_e[a], a))

    def consistent(a):
        for x in range(n):
            if fwd[x] < 0:
                continue
            for p, q in ((a, x), (x, a)):
                s, r = te[p][q], tf[fwd[p]][fwd[q]]
                if (s is None) != (r is None):
                    return False
                if s is None:
                    continue
                if fwd[s] >= 0 and fwd[s] != r:
                    return False
                if back[r] >= 0 and back[r] != s:
                    return False
        return True

    def search(k):
        if k == n:
            return True
        a = order[k]
        for b in range(n):
            if back[b] >= 0 or inv_f[b] != inv_e[a]:
                continue
            fwd[a], back[b] = b, a
            if consistent(a) and search(k + 1):
                return True
            fwd[a], back[b] = -1, -1
        return False

    if not search(0):
        return None
    return Morphism(E, F, tuple(fwd))


def relabel(E: FiniteGpea, perm: Sequence[int]) -> FiniteGpea:
    """Copy of E with element ``a`` renamed ``perm[a]`` (``perm[0]`` must be 0)."""
    n = E.n
    t = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            c = E.table[a][b]
            t[perm[a]][perm[b]] = None if c is None else perm[c]
    labels = None
    if E.labels:
        labels = [None] * n
        for a in range(n):
            labels[perm[a]] = E.labels[a]
    return FiniteGpea(t, labels, validate=False)


def _table_key(table, perm, inv):
    n = len(table)
    key = []
    for i in range(n):
        row = table[inv[i]]
        for j in range(n):
            c = row[inv[j]]
            key.append(-1 if c is None else perm[c])
    return tuple(key)


def canonical_form(E: FiniteGpea, *, limit: int = 200_000) -> tuple[tuple, tuple]:
    """Minimal encoded table over relabelings that sort elements by invariants.

    Returns ``(key, perm)``; two GPEAs are isomorphic iff their keys agree.
    """
    inv = element_invariants(E)
    classes: dict = {}
    for a in range(E.n):
        classes.setdefault(inv[a], []).append(a)
    blocks = [classes[k] for k in sorted(classes)]
    count = math.prod(math.factorial(len(b)) for b in blocks)
    if count > limit:
        raise DomainError(f"canonical form needs {count} relabelings, limit is {limit}")
    best = None
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        order = [a for block in choice for a in block]
        perm = [0] * E.n
        for new, old in enumerate(order):
            perm[old] = new
        key = _table_key(E.table, perm, order)
        if best is None or key < best[0]:
            best = (key, tuple(perm))
    return best


def enumerate_gpeas(n: int, *, cap: int = DEFAULT_ORDER_CAP) -> list[FiniteGpea]:
    """All GPEAs on ``n`` elements, one per isomorphism class.

    Every finite GPEA can be labelled along a linear extension of its order,
    and then ``a + b`` (for nonzero a, b) is larger than both labels.  Only
    such tables are generated; the survivors are deduplicated by canonical
    form and returned in canonical order.
    """
    if n < 1:
        raise UsageError("order must be positive")
    if n > cap:
        raise UsageError(f"order {n} exceeds enumeration cap {cap}")
    pairs = [(a, b) for a in range(1, n) for b in range(1, n)]
    options = [[None] + list(range(max(a, b) + 1, n)) for a, b in pairs]
    seen = {}
    base = [[None] * n for _ in range(n)]
    for a in range(n):
        base[a][0] = base[0][a] = a
    for values in itertools.product(*options):
        t = [row[:] for row in base]
        for (a, b), v in zip(pairs, values):
            t[a][b] = v
        if check_gpea(t, first_only=True).violations:
            continue
        E = FiniteGpea(t, validate=False)
        key, perm = canonical_form(E)
        if key not in seen:
            seen[key] = relabel(E, perm)
    return [seen[k] for k in sorted(seen)]
