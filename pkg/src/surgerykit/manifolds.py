"""Connected-sum bookkeeping for 3-manifolds under 0- and 2-surgery.

Expressions are formal sums of named prime pieces per connected
component.  Joining two points by a thick tube (0-surgery) either
merges two components into their connected sum or, within one
component, adjoins an S1xS2 handle; the dual 2-surgery deletes an
S1xS2 summand.  S^3 is the empty sum and is absorbed on normalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import SiteError
from .homology import AbelianGroupDecomp, cokernel_decomposition
from .dehn import FramedLink, h1_of_surgery
from .diagrams import serialize_pd


@dataclass(frozen=True)
class Summand:
    kind: str  # "S1xS2" | "lens" | "poincare" | "surgered"
    p: int = 0
    q: int = 0
    framed: FramedLink | None = None

    def __post_init__(self):
        if self.kind == "lens":
            if self.p < 2 or gcd(self.p, self.q) != 1:
                raise SiteError(f"L({self.p},{self.q}) needs p >= 2 and gcd(p, q) = 1")
        elif self.kind == "surgered":
            if self.framed is None:
                raise SiteError("surgered summand needs its framed link")
        elif self.kind not in ("S1xS2", "poincare"):
            raise SiteError(f"unknown prime piece {self.kind!r}")

    def sort_key(self):
        extra = ""
        if self.kind == "surgered":
            extra = serialize_pd(self.framed.diagram) + repr(self.framed.framings)
        return (self.kind, self.p, self.q, extra)

    def h1(self) -> AbelianGroupDecomp:
        if self.kind == "S1xS2":
            return AbelianGroupDecomp(1)
        if self.kind == "lens":
            return AbelianGroupDecomp(0, (self.p,))
        if self.kind == "poincare":
            return AbelianGroupDecomp(0)
        return h1_of_surgery(self.framed)

    def __str__(self) -> str:
        if self.kind == "lens":
            return f"L({self.p},{self.q})"
        if self.kind == "S1xS2":
            return "S1xS2"
        if self.kind == "poincare":
            return "Poincare"
        return f"Surgered({serialize_pd(self.framed.diagram)}; {list(self.framed.framings)})"


S1XS2 = Summand("S1xS2")
POINCARE = Summand("poincare")


def lens(p: int, q: int) -> Summand:
    return Summand("lens", p=p, q=q)


def surgered(framed: FramedLink) -> Summand:
    return Summand("surgered", framed=framed)


@dataclass(frozen=True)
class ManifoldExpr:
    """Each component is a sorted tuple of prime summands; () is S^3."""

    components: tuple[tuple[Summand, ...], ...] = ((),)

    def __post_init__(self):
        normalized = tuple(
            tuple(sorted(comp, key=Summand.sort_key)) for comp in self.components
        )
        object.__setattr__(self, "components", tuple(sorted(normalized, key=_component_key)))

    def __str__(self) -> str:
        parts = []
        for comp in self.components:
            parts.append(" # ".join(str(s) for s in comp) if comp else "S3")
        return " | ".join(parts)


def _component_key(comp: tuple[Summand, ...]):
    return tuple(s.sort_key() for s in comp)


def sphere() -> ManifoldExpr:
    return ManifoldExpr(((),))


def from_summands(*summands: Summand) -> ManifoldExpr:
    return ManifoldExpr((tuple(summands),))


def _check_component(expr: ManifoldExpr, index: int):
    if not 0 <= index < len(expr.components):
        raise SiteError(f"manifold component {index} out of range")


def zero_surgery_expr(expr: ManifoldExpr, c1: int, c2: int) -> ManifoldExpr:
    """Join spherical neighborhoods of two points by a thick tube."""
    _check_component(expr, c1)
    _check_component(expr, c2)
    comps = list(expr.components)
    if c1 == c2:
        comps[c1] = comps[c1] + (S1XS2,)
    else:
        i, j = sorted((c1, c2))
        comps[i] = comps[i] + comps[j]
        del comps[j]
    return ManifoldExpr(tuple(comps))


def two_surgery_expr(expr: ManifoldExpr, component: int) -> ManifoldExpr:
    """Delete one S1xS2 summand: the dual of a same-component 0-surgery."""
    _check_component(expr, component)
    comp = list(expr.components[component])
    try:
        comp.remove(S1XS2)
    except ValueError:
        raise SiteError("2-surgery needs an S1xS2 summand to remove") from None
    comps = list(expr.components)
    comps[component] = tuple(comp)
    return ManifoldExpr(tuple(comps))


def join_expressions(a: ManifoldExpr, b: ManifoldExpr) -> ManifoldExpr:
    """Disjoint union followed by a 0-surgery joining the first components."""
    combined = ManifoldExpr(a.components + b.components)
    # after canonicalization the original first components may have moved;
    # join the images of a.components[0] and b.components[0]
    comps = list(a.components + b.components)
    merged = comps[0] + comps[len(a.components)]
    rest = comps[1 : len(a.components)] + comps[len(a.components) + 1 :]
    del combined
    return ManifoldExpr(tuple([merged] + rest))


def h1_expr(expr: ManifoldExpr) -> tuple[AbelianGroupDecomp, ...]:
    """Per-component first homology, canonicalized invariant factors."""
    out = []
    for comp in expr.components:
        rank = 0
        torsion: list[int] = []
        for s in comp:
            h = s.h1()
            rank += h.free_rank
            torsion.extend(h.torsion)
        if torsion:
            rows = tuple(
                tuple(t if i == j else 0 for j in range(len(torsion)))
                for i, t in enumerate(torsion)
            )
            canon = cokernel_decomposition(rows, len(torsion))
            out.append(AbelianGroupDecomp(rank, canon.torsion))
        else:
            out.append(AbelianGroupDecomp(rank))
    return tuple(out)
