"""Finite generalized pseudoeffect algebras stored as partial-addition tables.

Elements are the integers ``0..n-1``; ``0`` is always the zero element.
Everything derived from the table (order, differences, pairwise meets and
joins) is computed once at construction and then only read.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

Table = tuple[tuple[Optional[int], ...], ...]


class GpeaError(Exception):
    """Base class for errors raised by this package."""


class UsageError(GpeaError, ValueError):
    """Malformed input: bad table shape, identifier out of range, bad set spec."""


class DomainError(GpeaError, ValueError):
    """An operation was called outside its precondition."""


class InvalidModelError(GpeaError, ValueError):
    """A table failed axiom validation; ``report`` carries the witnesses."""

    def __init__(self, report, message: str = "table is not a GPEA"):
        self.report = report
        super().__init__(f"{message}: {report}")


def bits(members: Iterable[int]) -> int:
    mask = 0
    for m in members:
        mask |= 1 << m
    return mask


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def normalize_table(table: Sequence[Sequence[Optional[int]]]) -> Table:
    """Return ``table`` as a tuple of tuples after shape and range checks."""
    n = len(table)
    if n == 0:
        raise UsageError("table must have at least one element")
    rows = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise UsageError(f"row {i} has length {len(row)}, expected {n}")
        out = []
        for j, v in enumerate(row):
            if v is not None:
                if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                    raise UsageError(f"entry ({i},{j})={v!r} is not an element of 0..{n - 1}")
            out.append(v)
        rows.append(tuple(out))
    return tuple(rows)


def fill_zero_sums(table: Sequence[Sequence[Optional[int]]]) -> Table:
    """Fill the implicit sums ``a+0`` and ``0+a``; explicit entries must agree."""
    t = [list(row) for row in normalize_table(table)]
    for a in range(len(t)):
        for i, j in ((a, 0), (0, a)):
            if t[i][j] is None:
                t[i][j] = a
            elif t[i][j] != a:
                raise UsageError(f"explicit sum ({i},{j})={t[i][j]} contradicts zero element")
    return tuple(tuple(r) for r in t)


class FiniteGpea:
    """Immutable finite GPEA.

    Construct from a full square table with ``FiniteGpea(table)``, or from a
    sparse ``{(a, b): c}`` mapping with :meth:`from_sums`.  Construction
    validates GPEA1-GPEA5 and raises :class:`InvalidModelError` on failure.
    """

    __slots__ = (
        "n", "table", "labels", "leq", "down", "up", "_rdiff", "_ldiff",
        "_meet", "_join", "_memo", "_hash",
    )

    def __init__(self, table, labels: Optional[Sequence[str]] = None, *, validate: bool = True):
        from gpea.axioms import check_gpea

        t = normalize_table(table)
        if validate:
            report = check_gpea(t)
            if report.violations:
                raise InvalidModelError(report)
        n = len(t)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n or len(set(labels)) != n:
                raise UsageError("labels must be n distinct names")
        self.n = n
        self.table = t
        self.labels = labels
        self._memo = {}
        self._hash = None

        rdiff = [[None] * n for _ in range(n)]
        ldiff = [[None] * n for _ in range(n)]
        for a in range(n):
            for x in range(n):
                b = t[a][x]
                if b is not None:
                    rdiff[a][b] = x  # a / b
                    ldiff[b][x] = a  # b \ x, i.e. y with y + x = b
        self._rdiff = tuple(tuple(r) for r in rdiff)
        self._ldiff = tuple(tuple(r) for r in ldiff)

        self.leq = tuple(tuple(rdiff[a][b] is not None for b in range(n)) for a in range(n))
        self.down = tuple(bits(a for a in range(n) if self.leq[a][b]) for b in range(n))
        self.up = tuple(bits(b for b in range(n) if self.leq[a][b]) for a in range(n))

        meet = [[None] * n for _ in range(n)]
        join = [[None] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                m = self._greatest(self.down[a] & self.down[b])
                j = self._least(self.up[a] & self.up[b])
                meet[a][b] = meet[b][a] = m
                join[a][b] = join[b][a] = j
        self._meet = tuple(tuple(r) for r in meet)
        self._join = tuple(tuple(r) for r in join)

    @classmethod
    def from_sums(cls, n: int, sums, labels=None) -> "FiniteGpea":
        """Build from ``{(a, b): c}``; sums with 0 are filled in."""
        t = [[None] * n for _ in range(n)]
        for (a, b), c in dict(sums).items():
            for v in (a, b, c):
                if not 0 <= v < n:
                    raise UsageError(f"element {v} out of range 0..{n - 1}")
            t[a][b] = c
        return cls(fill_zero_sums(t), labels)

    # value semantics -----------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, FiniteGpea) and self.table == other.table

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.table)
        return self._hash

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"FiniteGpea(n={self.n}, sums={self.sum_count()})"

    def memo(self, key, compute):
        """Per-instance cache for derived structure computed by other modules."""
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = compute()
            return value

    def name(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def elements(self) -> range:
        return range(self.n)

    def sum_count(self) -> int:
        """Number of defined sums among nonzero elements."""
        return sum(1 for a in range(1, self.n) for b in range(1, self.n) if self.table[a][b] is not None)

    def check(self, *elems: int) -> None:
        for e in elems:
            if isinstance(e, bool) or not isinstance(e, int) or not 0 <= e < self.n:
                raise UsageError(f"{e!r} is not an element of 0..{self.n - 1}")

    # order helpers on bitmasks -----------------------------------------
    def _least(self, mask: int) -> Optional[int]:
        for u in members(mask):
            if mask & ~self.up[u] == 0:
                return u
        return None

    def _greatest(self, mask: int) -> Optional[int]:
        for u in members(mask):
            if mask & ~self.down[u] == 0:
                return u
        return None

    def sup_mask(self, mask: int) -> Optional[int]:
        ub = (1 << self.n) - 1
        for m in members(mask):
            ub &= self.up[m]
        return self._least(ub)

    def inf_mask(self, mask: int) -> Optional[int]:
        lb = (1 << self.n) - 1
        for m in members(mask):
            lb &= self.down[m]
        return self._greatest(lb)

    def meet(self, a: int, b: int) -> Optional[int]:
        return self._meet[a][b]

    def join(self, a: int, b: int) -> Optional[int]:
        return self._join[a][b]


# operations ---------------------------------------------------------------

def oplus(E: FiniteGpea, a: int, b: int) -> Optional[int]:
    E.check(a, b)
    return E.table[a][b]


def right_diff(E: FiniteGpea, a: int, b: int) -> Optional[int]:
    """``a/b``: the x with ``a + x = b``, or None unless ``a <= b``."""
    E.check(a, b)
    return E._rdiff[a][b]


def left_diff(E: FiniteGpea, a: int, b: int) -> Optional[int]:
    """``b\\a``: the y with ``y + a = b``, or None unless ``a <= b``."""
    E.check(a, b)
    return E._ldiff[b][a]


def ominus(E: FiniteGpea, b: int, a: int) -> Optional[int]:
    """``b - a`` when both differences exist and coincide."""
    x = right_diff(E, a, b)
    if x is not None and x == left_diff(E, a, b):
        return x
    return None


def leq(E: FiniteGpea, a: int, b: int) -> bool:
    E.check(a, b)
    return E.leq[a][b]


def perp(E: FiniteGpea, a: int, b: int) -> bool:
    E.check(a, b)
    s = E.table[a][b]
    return s is not None and s == E.table[b][a]


def sup(E: FiniteGpea, S: Iterable[int]) -> Optional[int]:
    S = list(S)
    E.check(*S)
    return E.sup_mask(bits(S))


def inf(E: FiniteGpea, S: Iterable[int]) -> Optional[int]:
    """Greatest lower bound; the empty set has one only when E has a top."""
    S = list(S)
    E.check(*S)
    return E.inf_mask(bits(S))


def sequence_sum(E: FiniteGpea, seq: Sequence[int]) -> Optional[int]:
    """Left-to-right orthosum ``e1 + ... + en`` (order sensitive)."""
    acc = 0
    for e in seq:
        acc = E.table[acc][e]
        if acc is None:
            return None
    return acc


def orthosum_family(E: FiniteGpea, family: Iterable[int]) -> Optional[int]:
    """Orthosum of a finite family, or None if it is not orthogonal.

    The family is orthogonal when every arrangement of it can be summed
    left to right and all arrangements agree.  This is evaluated over the
    subfamily lattice: the sum of a subfamily is defined iff removing any
    one member leaves a defined sum that can be extended by that member,
    with all such extensions equal.
    """
    fam = list(family)
    E.check(*fam)
    k = len(fam)
    sums: list[Optional[int]] = [None] * (1 << k)
    sums[0] = 0
    for sub in range(1, 1 << k):
        value = None
        ok = True
        for i in range(k):
            if not sub >> i & 1:
                continue
            rest = sums[sub & ~(1 << i)]
            s = None if rest is None else E.table[rest][fam[i]]
            if s is None or (value is not None and s != value):
                ok = False
                break
            value = s
        sums[sub] = value if ok else None
    return sums[(1 << k) - 1]
