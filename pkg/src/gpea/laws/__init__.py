"""Executable theorem suite.

Each law is a function of a :class:`Model` that returns ``None`` when the
statement holds and a concrete counterexample otherwise.  Laws about
arbitrary index families are instantiated over finite families of the
carrier; where the number of subfamilies explodes, the reduction used is
stated on the law (suprema only depend on maximal members, infima on
minimal ones, and every family in a finite GPEA is finite).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Optional

from gpea.core import FiniteGpea, UsageError, members

# exhaustive subset enumeration up to this many items, pairs/triples beyond
SUBSET_LIMIT = 10


@dataclass(frozen=True)
class Law:
    id: str
    group: str
    func: Callable


@dataclass(frozen=True)
class LawResult:
    law: str
    model: str
    status: str          # "pass", "fail" or "skip"
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.status != "fail"


class Skip(Exception):
    """Raised by a law whose check does not apply at this model's scale."""


REGISTRY: dict[str, Law] = {}


def law(law_id: str, group: str):
    def register(func):
        if law_id in REGISTRY:
            raise ValueError(f"duplicate law id {law_id}")
        REGISTRY[law_id] = Law(law_id, group, func)
        return func
    return register


def first(items: Iterable) -> Optional[object]:
    """First truthy item, used as ``first(w for ... if bad)``."""
    for w in items:
        if w is not None and w is not False:
            return w
    return None


def subsets(items, *, nonempty=True, limit=SUBSET_LIMIT, small=3):
    """All subsets when there are at most ``limit`` items, else those of size <= ``small``."""
    items = list(items)
    top = len(items) if len(items) <= limit else min(small, len(items))
    for r in range(0 if not nonempty else 1, top + 1):
        yield from itertools.combinations(items, r)


@dataclass(frozen=True)
class _Alg:
    idx: dict
    meet: list
    join: list
    comp: list
    le: list
    zero: int
    one: int


class Model:
    """A GPEA with lazily computed structure shared by all laws."""

    def __init__(self, E: FiniteGpea, model_id: str = ""):
        self.E = E
        self.id = model_id
        self.n = E.n
        self.t = E.table
        self.N = range(E.n)

    # order ---------------------------------------------------------------
    def le(self, a, b):
        return self.E.leq[a][b]

    def rd(self, a, b):
        """a/b"""
        return self.E._rdiff[a][b]

    def ld(self, b, a):
        """b\\a"""
        return self.E._ldiff[b][a]

    def perp(self, a, b):
        s = self.t[a][b]
        return s is not None and s == self.t[b][a]

    def meet(self, a, b):
        return self.E.meet(a, b)

    def join(self, a, b):
        return self.E.join(a, b)

    def sup(self, S):
        return self.E.sup_mask(sum(1 << s for s in set(S)))

    def inf(self, S):
        return self.E.inf_mask(sum(1 << s for s in set(S)))

    @cached_property
    def antichains(self):
        from gpea.exocenter import antichains
        return [a for a in antichains(self.E) if a]

    def families(self):
        """Nonempty families whose suprema/infima cover all cases.

        All subsets for small carriers, otherwise all antichains.
        """
        if self.n <= SUBSET_LIMIT:
            return list(subsets(self.N))
        return self.antichains

    # exocenter -------------------------------------------------------------
    @cached_property
    def X(self):
        from gpea.exocenter import exocenter
        return exocenter(self.E)

    @cached_property
    def _comp(self):
        from gpea.exocenter import exo_complement
        return {p: exo_complement(p) for p in self.X}

    def c(self, p):
        from gpea.exocenter import exo_complement
        return self._comp.get(p) or exo_complement(p)

    def m(self, p, q):
        from gpea.exocenter import exo_compose
        return exo_compose(p, q)

    def j(self, p, q):
        return self.c(self.m(self.c(p), self.c(q)))

    def xle(self, p, q):
        return self.m(p, q) == p

    def meet_all(self, maps):
        from gpea.exocenter import exo_meet_all
        return exo_meet_all(self.E, maps)

    def join_all(self, maps):
        from gpea.exocenter import exo_join_all
        return exo_join_all(self.E, maps)

    @cached_property
    def one(self):
        from gpea.exocenter import identity_map
        return identity_map(self.E)

    @cached_property
    def zero(self):
        from gpea.exocenter import zero_map
        return zero_map(self.E)

    @cached_property
    def alg(self):
        """Index tables for the exocenter: meet, join, complement and order."""
        X = self.X
        idx = {p: i for i, p in enumerate(X)}
        k = len(X)
        meet = [[idx[self.m(X[i], X[j])] for j in range(k)] for i in range(k)]
        comp = [idx[self.c(p)] for p in X]
        join = [[comp[meet[comp[i]][comp[j]]] for j in range(k)] for i in range(k)]
        le = [[meet[i][j] == i for j in range(k)] for i in range(k)]
        return _Alg(idx, meet, join, comp, le, idx[self.zero], idx[self.one])

    @cached_property
    def disjoint_families(self):
        """Families of pairwise disjoint nonzero exocenter maps (nonempty)."""
        nz = [p for p in self.X if not p.is_zero]
        out = []

        def grow(chosen, rest):
            for i, p in enumerate(rest):
                fam = chosen + (p,)
                out.append(fam)
                grow(fam, [q for q in rest[i + 1:] if self.m(p, q).is_zero])

        grow((), nz)
        return out

    @cached_property
    def summand_partners(self):
        from gpea.laws.gpea_laws import summand_partners
        return summand_partners(self)

    # center and covers ---------------------------------------------------
    @cached_property
    def Gamma(self):
        from gpea.center import central_elements
        return sorted(central_elements(self.E))

    @cached_property
    def u(self):
        from gpea.center import center_unit
        return center_unit(self.E)

    def pic(self, c):
        from gpea.center import pi_c
        return pi_c(self.E, c)

    @cached_property
    def g(self):
        from gpea.cover import cover_system
        return cover_system(self.E).gamma

    @cached_property
    def theta(self):
        from gpea.cover import cover_system
        return cover_system(self.E).theta

    @cached_property
    def gamma_families(self):
        from gpea.cover import gamma_orthogonal_sets
        return gamma_orthogonal_sets(self.E)

    # type theory ---------------------------------------------------------
    @cached_property
    def td_sets(self):
        """Named TD sets: {0}, the center, E, generated by each singleton, commutative intervals."""
        from gpea.axioms import is_commutative
        from gpea.typetheory import td_generated, tdset_from_pea_class

        named = [
            ("zero", frozenset({0})),
            ("center", frozenset(self.Gamma)),
            ("all", frozenset(self.N)),
        ]
        named += [(f"td({e})", td_generated(self.E, {e})) for e in self.N]
        named.append(("pea-class:commutative", tdset_from_pea_class(self.E, is_commutative)))
        seen, out = set(), []
        for name, K in named:
            if K not in seen:
                seen.add(K)
                out.append((name, K))
        return out

    def ctx(self, K):
        from gpea.typetheory import td_context
        return self.E.memo(("td_context", K), lambda: td_context(self.E, K))

    def subsets_of_carrier(self):
        """All subsets for n <= 5, else a fixed pseudo-random sample plus singletons."""
        import random

        if self.n <= 5:
            return [frozenset(s) for s in subsets(self.N, nonempty=False, limit=5)]
        rng = random.Random(self.n * 7919 + len(self.X))
        out = [frozenset(), frozenset(self.N)] + [frozenset({e}) for e in self.N]
        for _ in range(48):
            out.append(frozenset(e for e in self.N if rng.random() < 0.3))
        return out


def _load():
    from gpea.laws import gpea_laws, exo_laws, center_laws, co_laws, cover_laws, type_laws  # noqa: F401


def law_ids(group: Optional[str] = None) -> list[str]:
    _load()
    return [k for k, v in REGISTRY.items() if group is None or v.group == group]


def groups() -> list[str]:
    _load()
    return list(dict.fromkeys(v.group for v in REGISTRY.values()))


def verify_laws(E, selection=None, model_id: str = "") -> list[LawResult]:
    """Run the selected laws (all by default) on ``E``.

    ``E`` may also be a raw table; a table that fails the axioms yields a
    single failing ``GPEA.axioms`` result carrying the violation report.
    """
    from gpea.axioms import check_gpea

    _load()
    if selection is None:
        ids = list(REGISTRY)
    else:
        ids = list(selection)
        unknown = [i for i in ids if i not in REGISTRY]
        if unknown:
            raise UsageError(f"unknown law id(s): {', '.join(unknown)}")
        ids = [i for i in REGISTRY if i in set(ids)]
    if not isinstance(E, FiniteGpea):
        report = check_gpea(E)
        if report.violations:
            return [LawResult("GPEA.axioms", model_id, "fail", report.violations)]
        E = FiniteGpea(E)
    model = Model(E, model_id)
    out = []
    for i in ids:
        try:
            w = REGISTRY[i].func(model)
        except Skip as s:
            out.append(LawResult(i, model_id, "skip", str(s)))
            continue
        except (AssertionError, ArithmeticError, LookupError, TypeError, ValueError) as exc:
            # a law that crashes has not been verified
            w = ("raised", f"{type(exc).__name__}: {exc}")
        out.append(LawResult(i, model_id, "pass" if w is None else "fail", w))
    return out


__all__ = ["Law", "LawResult", "Model", "REGISTRY", "law_ids", "groups", "verify_laws", "members"]
