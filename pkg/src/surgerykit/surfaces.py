"""Surgery on closed orientable surfaces, tracked by genus per component.

Closed orientable surfaces are classified by genus, so a descriptor is
just a sequence of genus values and every surgery is exact arithmetic
on it.  Attaching a tube (0-surgery) lowers the Euler characteristic by
two; cutting along a circle and capping (1-surgery) raises it by two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SiteError

CUT_KINDS = ("trivial", "nonsep", "split")


@dataclass(frozen=True)
class SurfaceDescriptor:
    genera: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "genera", tuple(int(g) for g in self.genera))
        if any(g < 0 for g in self.genera):
            raise SiteError("genus values must be non-negative")

    def component_chi(self, comp: int) -> int:
        return 2 - 2 * self.genera[comp]


def euler_characteristic(surface: SurfaceDescriptor) -> int:
    return sum(2 - 2 * g for g in surface.genera)


@dataclass(frozen=True)
class JoinPoints:
    """0-surgery site: disk neighborhoods of two marked points."""

    c1: int
    c2: int


@dataclass(frozen=True)
class CutCurve:
    """1-surgery site: an embedded circle of one of three kinds."""

    component: int
    kind: str
    split: tuple[int, int] | None = None

    def __post_init__(self):
        if self.kind not in CUT_KINDS:
            raise SiteError(f"unknown cut kind {self.kind!r}")
        if (self.kind == "split") != (self.split is not None):
            raise SiteError("split genus pair required exactly for kind 'split'")


def _check_component(surface: SurfaceDescriptor, comp: int):
    if not 0 <= comp < len(surface.genera):
        raise SiteError(f"surface component {comp} out of range")


def two_dim_zero_surgery(surface: SurfaceDescriptor, site: JoinPoints) -> SurfaceDescriptor:
    """Join the two marked points with a tube."""
    _check_component(surface, site.c1)
    _check_component(surface, site.c2)
    genera = list(surface.genera)
    if site.c1 == site.c2:
        genera[site.c1] += 1
    else:
        i, j = sorted((site.c1, site.c2))
        genera[i] = genera[i] + genera[j]
        del genera[j]
    return SurfaceDescriptor(tuple(genera))


def two_dim_one_surgery(surface: SurfaceDescriptor, site: CutCurve) -> SurfaceDescriptor:
    """Cut along the marked circle and cap both sides with disks."""
    _check_component(surface, site.component)
    genera = list(surface.genera)
    g = genera[site.component]
    if site.kind == "trivial":
        genera[site.component] = g
        genera.insert(site.component + 1, 0)
    elif site.kind == "nonsep":
        if g == 0:
            raise SiteError("a sphere has no non-separating circle")
        genera[site.component] = g - 1
    else:
        g1, g2 = site.split
        if g1 < 0 or g2 < 0 or g1 + g2 != g:
            raise SiteError(f"split ({g1},{g2}) does not partition genus {g}")
        genera[site.component] = g1
        genera.insert(site.component + 1, g2)
    return SurfaceDescriptor(tuple(genera))
