"""The model corpus used by the law suite and the acceptance run."""
from __future__ import annotations

from gpea.construct import (
    antichain_gpea,
    chain,
    cone_interval,
    diamond,
    direct_sum,
    enumerate_gpeas,
)
from gpea.core import FiniteGpea

CONES = ((3, (1, 1, 1)), (2, (2, 2)), (4, (1, 1, 1, 1)), (3, (1, 2, 3)))


def cyclic_pea() -> FiniteGpea:
    """Three atoms summing cyclically to a top; the smallest non-commutative GPEA."""
    return FiniteGpea.from_sums(5, {(1, 3): 4, (2, 1): 4, (3, 2): 4})


def constructed() -> list[tuple[str, FiniteGpea]]:
    out = [(f"chain{n}", chain(n)) for n in range(1, 7)]
    V3, D4, E2 = antichain_gpea(2), diamond(), chain(2)
    out += [("D4", D4), ("V3", V3), ("cyclic5", cyclic_pea())]
    for d, bound in CONES:
        out.append((f"cone{''.join(map(str, bound))}", cone_interval(d, bound)))
    out += [
        ("E2+V3", direct_sum(E2, V3)[0]),
        ("D4+V3", direct_sum(D4, V3)[0]),
        ("V3+V3", direct_sum(V3, V3)[0]),
        ("cyclic5+E2", direct_sum(cyclic_pea(), E2)[0]),
    ]
    return out


def enumerated(max_order: int) -> list[tuple[str, FiniteGpea]]:
    out = []
    for n in range(1, max_order + 1):
        for i, E in enumerate(enumerate_gpeas(n)):
            out.append((f"enum{n}.{i}", E))
    return out


def corpus(max_order: int = 4, *, constructed_models: bool = True) -> list[tuple[str, FiniteGpea]]:
    """Enumerated classes up to ``max_order`` followed by the constructed models."""
    return enumerated(max_order) + (constructed() if constructed_models else [])
