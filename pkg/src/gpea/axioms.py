"""Axiom validators: GPEA and PEA tables, commutativity, ideals, summands."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from gpea.core import DomainError, FiniteGpea, Table, bits, members, normalize_table


@dataclass(frozen=True)
class ViolationReport:
    """Violated axiom instances as ``(tag, witness)`` pairs, sorted."""

    violations: tuple[tuple[str, tuple[int, ...]], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def tags(self) -> set[str]:
        return {tag for tag, _ in self.violations}

    def first(self, tag: str) -> Optional[tuple[int, ...]]:
        for t, w in self.violations:
            if t == tag:
                return w
        return None

    def __str__(self):
        if not self.violations:
            return "valid"
        shown = ", ".join(f"{t}{w}" for t, w in self.violations[:8])
        more = len(self.violations) - 8
        return shown + (f" (+{more} more)" if more > 0 else "")


class _Stop(Exception):
    pass


class _Collector:
    def __init__(self, first_only):
        self.first_only = first_only
        self.found = set()

    def add(self, tag, witness):
        self.found.add((tag, tuple(witness)))
        if self.first_only:
            raise _Stop

    def report(self):
        return ViolationReport(tuple(sorted(self.found)))


def check_gpea(table, *, first_only: bool = False) -> ViolationReport:
    """Check GPEA1-GPEA5 on a raw square table (entries are ids or None).

    Every violated instance is reported, in lexicographic witness order.
    With ``first_only`` the search stops at the first violation found.
    """
    t = normalize_table(table)
    n = len(t)
    out = _Collector(first_only)
    try:
        for a in range(n):
            if t[a][0] != a or t[0][a] != a:
                out.add("GPEA5", (a,))
        for a in range(n):
            for b in range(n):
                if t[a][b] == 0 and (a, b) != (0, 0):
                    out.add("GPEA4", (a, b))
        for a in range(n):
            row = t[a]
            for b in range(n):
                for c in range(b + 1, n):
                    if row[b] is not None and row[b] == row[c]:
                        out.add("GPEA3", (a, b, c))
                    if t[b][a] is not None and t[b][a] == t[c][a]:
                        out.add("GPEA3", (a, b, c))
        for a in range(n):
            for b in range(n):
                s = t[a][b]
                if s is None:
                    continue
                if not any(t[d][a] == s for d in range(n)) or not any(t[b][e] == s for e in range(n)):
                    out.add("GPEA2", (a, b))
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    bc = t[b][c]
                    left = None if ab is None else t[ab][c]
                    right = None if bc is None else t[a][bc]
                    if left != right:
                        out.add("GPEA1", (a, b, c))
    except _Stop:
        pass
    return out.report()


def check_pea(table, top: int) -> ViolationReport:
    """Check PEA1-PEA4 for a table whose unit is ``top``."""
    t = normalize_table(table)
    n = len(t)
    out = _Collector(False)
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            for c in range(n):
                bc = t[b][c]
                left = None if ab is None else t[ab][c]
                right = None if bc is None else t[a][bc]
                if left != right:
                    out.add("PEA1", (a, b, c))
    for a in range(n):
        ds = [d for d in range(n) if t[a][d] == top]
        es = [e for e in range(n) if t[e][a] == top]
        if len(ds) != 1 or len(es) != 1:
            out.add("PEA2", (a,))
    for a in range(n):
        for b in range(n):
            s = t[a][b]
            if s is None:
                continue
            if not any(t[d][a] == s for d in range(n)) or not any(t[b][e] == s for e in range(n)):
                out.add("PEA3", (a, b))
    for a in range(n):
        if a != 0 and (t[top][a] is not None or t[a][top] is not None):
            out.add("PEA4", (a,))
    return out.report()


def top_of(E: FiniteGpea) -> Optional[int]:
    return E.inf_mask(0)


def is_pea(E: FiniteGpea) -> bool:
    return top_of(E) is not None


def is_commutative(E: FiniteGpea) -> bool:
    t = E.table
    return all(t[a][b] == t[b][a] for a in range(E.n) for b in range(a + 1, E.n) if t[a][b] is not None or t[b][a] is not None)


def _mask(E: FiniteGpea, S: Iterable[int]) -> int:
    S = list(S)
    E.check(*S)
    return bits(S)


def is_ideal(E: FiniteGpea, S: Iterable[int]) -> bool:
    m = _mask(E, S)
    return _is_ideal_mask(E, m)


def _is_ideal_mask(E: FiniteGpea, m: int) -> bool:
    if m == 0:
        return False
    ms = members(m)
    for a in ms:
        if E.down[a] & ~m:
            return False
    t = E.table
    for a in ms:
        for b in ms:
            s = t[a][b]
            if s is not None and not m >> s & 1:
                return False
    return True


def is_normal_ideal(E: FiniteGpea, S: Iterable[int]) -> bool:
    m = _mask(E, S)
    if not _is_ideal_mask(E, m):
        return False
    t = E.table
    n = E.n
    for a in range(n):
        for x in range(n):
            s = t[a][x]
            if s is None:
                continue
            y = E._ldiff[s][a]
            # y + a = a + x
            if y is not None and (m >> x & 1) != (m >> y & 1):
                return False
    return True


@dataclass(frozen=True)
class SummandPair:
    """A central ideal, its complementary summand, and element coordinates."""

    summand: frozenset
    complement: frozenset
    coords: tuple = field(repr=False)  # coords[a] == (a1, a2) with a == a1 + a2


def disjoint_set(E: FiniteGpea, S: Iterable[int]) -> frozenset:
    """``{f : f meet s == 0 for all s in S}`` (the meet must exist)."""
    S = list(S)
    E.check(*S)
    return frozenset(f for f in range(E.n) if all(E.meet(f, s) == 0 for s in S))


def summand_conditions(E: FiniteGpea, S, Sp):
    """Evaluate the two direct-summand conditions separately.

    Returns ``(orthogonal, decomposes, coords)``: whether every element of
    ``S`` is orthogonal to every element of ``Sp``; whether every element has
    exactly one decomposition ``a1 + a2`` with ``a1`` in ``S`` and ``a2`` in
    ``Sp``; and the coordinates when it does.
    """
    S = sorted(S)
    Sp = sorted(Sp)
    t = E.table
    orthogonal = all(t[a][b] is not None and t[a][b] == t[b][a] for a in S for b in Sp)
    found = [[] for _ in range(E.n)]
    for a1 in S:
        for a2 in Sp:
            s = t[a1][a2]
            if s is not None:
                found[s].append((a1, a2))
    decomposes = all(len(f) == 1 for f in found)
    coords = tuple(f[0] for f in found) if decomposes else None
    return orthogonal, decomposes, coords


def central_ideal_complement(E: FiniteGpea, S: Iterable[int]) -> Optional[SummandPair]:
    """Complementary summand of the ideal ``S``, or None if ``S`` is not central.

    The only candidate complement is the set of elements disjoint from all of
    ``S``; it must be an ideal and satisfy both summand conditions.
    """
    S = frozenset(S)
    if not is_ideal(E, S):
        raise DomainError(f"{sorted(S)} is not an ideal")
    Sp = disjoint_set(E, S)
    if not _is_ideal_mask(E, bits(Sp)):
        return None
    orthogonal, decomposes, coords = summand_conditions(E, S, Sp)
    if not (orthogonal and decomposes):
        return None
    return SummandPair(S, Sp, coords)
