"""The exocenter: idempotent, decreasing endomorphisms that split E in two.

Maps are found through their images.  Each candidate is a sum-closed
down-set ``S``; its only possible complement is the set of elements
disjoint from ``S``, and when the pair is a direct-sum decomposition the
map reads off the first coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Optional, Sequence

from gpea.axioms import _is_ideal_mask, central_ideal_complement
from gpea.construct import Morphism, direct_sum, sub_gpea
from gpea.core import DomainError, FiniteGpea, bits, members


@dataclass(frozen=True)
class ExoMap:
    """A self-map of E stored as its value table; equality is table equality."""

    E: FiniteGpea = field(compare=False, repr=False)
    values: tuple

    def __call__(self, e: int) -> int:
        return self.values[e]

    @property
    def image(self) -> frozenset:
        return frozenset(self.values)

    @property
    def image_mask(self) -> int:
        return bits(self.values)

    def fixes(self, e: int) -> bool:
        return self.values[e] == e

    @property
    def is_zero(self) -> bool:
        return not any(self.values)

    @property
    def is_identity(self) -> bool:
        return self.values == tuple(range(len(self.values)))

    def __repr__(self):
        return f"ExoMap{list(self.values)}"


def zero_map(E: FiniteGpea) -> ExoMap:
    return ExoMap(E, (0,) * E.n)


def identity_map(E: FiniteGpea) -> ExoMap:
    return ExoMap(E, tuple(range(E.n)))


def exc_violation(E: FiniteGpea, values: Sequence[int]) -> Optional[tuple]:
    """First failing exocenter condition as ``(tag, elements)``, else None."""
    n = E.n
    t = E.table
    v = tuple(values)
    if len(v) != n or any(not 0 <= x < n for x in v):
        return ("shape", ())
    for e in range(n):
        for f in range(n):
            s = t[e][f]
            if s is not None and t[v[e]][v[f]] != v[s]:
                return ("EXC1", (e, f))
    for e in range(n):
        if v[v[e]] != v[e]:
            return ("EXC2", (e,))
    for e in range(n):
        if not E.leq[v[e]][e]:
            return ("EXC3", (e,))
    fixed = [e for e in range(n) if v[e] == e]
    killed = [f for f in range(n) if v[f] == 0]
    for e in fixed:
        for f in killed:
            if t[e][f] is None or t[e][f] != t[f][e]:
                return ("EXC4", (e, f))
    return None


def is_exomap(E: FiniteGpea, values: Sequence[int]) -> bool:
    return exc_violation(E, values) is None


def antichains(E: FiniteGpea):
    """Yield every antichain of E as a sorted tuple, the empty one first."""
    n = E.n
    comparable = [[E.leq[a][b] or E.leq[b][a] for b in range(n)] for a in range(n)]

    def grow(chosen, cands):
        yield chosen
        for i, b in enumerate(cands):
            rest = [c for c in cands[i + 1:] if not comparable[b][c]]
            yield from grow(chosen + (b,), rest)

    yield from grow((), list(range(n)))


def downsets(E: FiniteGpea):
    """Yield the bitmask of every nonempty down-set of E exactly once."""
    for ac in antichains(E):
        if ac:
            m = 0
            for a in ac:
                m |= E.down[a]
            yield m


def ideals(E: FiniteGpea) -> list[int]:
    """Bitmasks of all ideals of E, sorted."""
    def compute():
        return sorted(m for m in downsets(E) if _is_ideal_mask(E, m))
    return E.memo("ideals", compute)


def exocenter(E: FiniteGpea) -> list[ExoMap]:
    """All exocenter maps of E, sorted by image bitmask."""
    def compute():
        maps = {}
        for m in ideals(E):
            pair = central_ideal_complement(E, members(m))
            if pair is None:
                continue
            values = tuple(a1 for a1, _ in pair.coords)
            maps[m] = ExoMap(E, values)
        return [maps[k] for k in sorted(maps)]
    return E.memo("exocenter", compute)


def exo_by_image(E: FiniteGpea) -> dict:
    return E.memo("exo_by_image", lambda: {p.image_mask: p for p in exocenter(E)})


def central_ideals(E: FiniteGpea) -> list[frozenset]:
    return [p.image for p in exocenter(E)]


def _same(p: ExoMap, q: ExoMap):
    if p.E is not q.E and p.E != q.E:
        raise DomainError("maps belong to different GPEAs")


def exo_complement(p: ExoMap) -> ExoMap:
    """``e -> (pe)/e``."""
    E = p.E
    return ExoMap(E, tuple(E._rdiff[p.values[e]][e] for e in range(E.n)))


def exo_compose(p: ExoMap, q: ExoMap) -> ExoMap:
    """``p o q``."""
    _same(p, q)
    return ExoMap(p.E, tuple(p.values[x] for x in q.values))


def exo_meet(p: ExoMap, q: ExoMap) -> ExoMap:
    return exo_compose(p, q)


def exo_join(p: ExoMap, q: ExoMap) -> ExoMap:
    return exo_complement(exo_compose(exo_complement(p), exo_complement(q)))


def exo_leq(p: ExoMap, q: ExoMap) -> bool:
    """``p <= q`` in the exocenter, read as ``p == p o q``."""
    return exo_compose(p, q) == p


def exo_meet_all(E: FiniteGpea, maps: Iterable[ExoMap]) -> ExoMap:
    return reduce(exo_meet, maps, identity_map(E))


def exo_join_all(E: FiniteGpea, maps: Iterable[ExoMap]) -> ExoMap:
    return reduce(exo_join, maps, zero_map(E))


def summand(E: FiniteGpea, p: ExoMap) -> tuple[FiniteGpea, tuple]:
    """The image ``p(E)`` as a sub-GPEA with its embedding."""
    return sub_gpea(E, p.image)


def factor(E: FiniteGpea, p: ExoMap) -> tuple[FiniteGpea, FiniteGpea, Morphism]:
    """Split E along ``p``.

    Returns the summands ``p(E)`` and ``p'(E)`` and the isomorphism from E
    onto their direct sum, ``e -> (pe, p'e)``.
    """
    F1, emb1 = summand(E, p)
    F2, emb2 = summand(E, exo_complement(p))
    S, _, _ = direct_sum(F1, F2)
    idx1 = {e: i for i, e in enumerate(emb1)}
    idx2 = {e: i for i, e in enumerate(emb2)}
    pc = exo_complement(p)
    phi = tuple(idx1[p(e)] * F2.n + idx2[pc(e)] for e in range(E.n))
    return F1, F2, Morphism(E, S, phi)


def restrict(xi: ExoMap, p: ExoMap) -> tuple[ExoMap, FiniteGpea, tuple]:
    """``xi`` restricted to the summand ``p(E)``, as a map on that sub-GPEA."""
    _same(xi, p)
    F, emb = summand(p.E, p)
    index = {e: i for i, e in enumerate(emb)}
    vals = []
    for e in emb:
        x = xi(e)
        if x not in index:
            raise DomainError("restriction leaves the summand")
        vals.append(index[x])
    return ExoMap(F, tuple(vals)), F, emb
