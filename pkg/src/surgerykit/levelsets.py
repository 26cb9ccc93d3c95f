"""Level sets of the standard Morse saddle forms, meshed on a grid.

The form of index k on R^d is f(x) = -x_1^2 - ... - x_k^2 + x_{k+1}^2
+ ... + x_d^2; its level sets inside the sampling window realize the
in-handle picture of a surgery as t sweeps through 0.  Contours are
extracted by marching squares (d = 2) or marching tetrahedra over the
Kuhn cube decomposition (d = 3).

Mesh vertices are keyed exactly: a crossing on a grid edge is keyed by
the lattice endpoints of that edge, and a crossing that lands on a
lattice point (value exactly t) is keyed by that point.  Connectivity
and component counts use the keys, never floating-point coordinates,
so the count at the degenerate t = 0 level is exact: the cone sheets
share the apex key.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import MeshError

# Kuhn decomposition of the unit cube: six tetrahedra around the main
# diagonal, one per coordinate order.  Corner i has bits (x, y, z).
_KUHN_TETS = (
    (0, 1, 3, 7),
    (0, 1, 5, 7),
    (0, 2, 3, 7),
    (0, 2, 6, 7),
    (0, 4, 5, 7),
    (0, 4, 6, 7),
)

_QUADRANTS_2D = {(False, False): "SW", (False, True): "NW", (True, False): "SE", (True, True): "NE"}


@dataclass(frozen=True)
class MorseForm:
    ambient_dim: int
    index: int
    window: float = 1.0

    def __post_init__(self):
        if self.ambient_dim not in (2, 3):
            raise MeshError("ambient dimension must be 2 or 3")
        if not 1 <= self.index <= self.ambient_dim:
            raise MeshError(f"index {self.index} out of range for dimension {self.ambient_dim}")
        if self.window <= 0:
            raise MeshError("window half-width must be positive")


@dataclass(frozen=True)
class LevelSetMesh:
    t: float
    ambient_dim: int
    vertices: tuple[tuple[float, ...], ...]
    cells: tuple[tuple[int, ...], ...]
    component_count: int
    boundary_pairing: tuple[tuple[str, ...], ...] | None


class _MeshBuilder:
    def __init__(self):
        self.positions: dict[tuple, tuple[float, ...]] = {}
        self.cells: list[tuple] = []
        self.parent: dict[tuple, tuple] = {}

    def find(self, key):
        parent = self.parent
        while parent[key] != key:
            parent[key] = parent[parent[key]]
            key = parent[key]
        return key

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def vertex(self, key, pos):
        if key not in self.positions:
            self.positions[key] = pos
            self.parent[key] = key
        return key

    def cell(self, keyed_vertices):
        keys = [k for k, _ in keyed_vertices]
        for k, pos in keyed_vertices:
            self.vertex(k, pos)
        for a, b in zip(keys, keys[1:]):
            self.union(a, b)
        if len(set(keys)) == len(keys):
            self.cells.append(tuple(keys))
        # degenerate cells still contributed their key unions

    def component_count(self) -> int:
        return len({self.find(k) for k in self.parent})

    def finish(self):
        order = sorted(self.positions)
        index = {k: i for i, k in enumerate(order)}
        vertices = tuple(self.positions[k] for k in order)
        cells = []
        for cell in self.cells:
            idx = tuple(index[k] for k in cell)
            if len(idx) == 2:
                idx = tuple(sorted(idx))
            else:
                shift = idx.index(min(idx))
                idx = idx[shift:] + idx[:shift]
            cells.append(idx)
        return vertices, tuple(sorted(cells))


def _signs(form: MorseForm) -> tuple[int, ...]:
    return tuple(-1 if i < form.index else 1 for i in range(form.ambient_dim))


def _edge_vertex(builder, p_idx, q_idx, sp, sq, coords):
    """Keyed crossing on the grid edge p-q; sp, sq of opposite class."""
    if sp == 0.0:
        key = ("v",) + (tuple(p_idx),) * 2
        pos = tuple(coords[k][p_idx[k]] for k in range(len(p_idx)))
    elif sq == 0.0:
        key = ("v",) + (tuple(q_idx),) * 2
        pos = tuple(coords[k][q_idx[k]] for k in range(len(q_idx)))
    else:
        lo, hi = sorted((tuple(p_idx), tuple(q_idx)))
        key = ("e", lo, hi)
        s = sp / (sp - sq)
        pos = tuple(
            coords[k][p_idx[k]] + s * (coords[k][q_idx[k]] - coords[k][p_idx[k]])
            for k in range(len(p_idx))
        )
    return builder.vertex(key, pos), pos


def sample_level_set(form: MorseForm, t: float, resolution: int) -> LevelSetMesh:
    """Mesh {f = t} inside the window cube on a uniform grid."""
    w = form.window
    if not abs(t) < w * w:
        raise MeshError(f"level {t} outside the window range (-{w * w}, {w * w})")
    if resolution < 8:
        raise MeshError("resolution below 8 is degenerate")

    axes = [np.linspace(-w, w, resolution + 1) for _ in range(form.ambient_dim)]
    signs = _signs(form)
    if form.ambient_dim == 2:
        x, y = np.meshgrid(axes[0], axes[1], indexing="ij")
        values = signs[0] * x * x + signs[1] * y * y - t
        builder = _march_squares(values, axes, resolution)
        pairing = _boundary_pairing_2d(builder, resolution)
    else:
        x, y, z = np.meshgrid(axes[0], axes[1], axes[2], indexing="ij")
        values = signs[0] * x * x + signs[1] * y * y + signs[2] * z * z - t
        builder = _march_tets(values, axes, resolution)
        pairing = None

    count = builder.component_count()
    vertices, cells = builder.finish()
    if pairing is not None:
        pairing = tuple(sorted(tuple(sorted(group)) for group in pairing))
    return LevelSetMesh(
        t=float(t),
        ambient_dim=form.ambient_dim,
        vertices=vertices,
        cells=cells,
        component_count=count,
        boundary_pairing=pairing,
    )


def _march_squares(values, axes, res) -> _MeshBuilder:
    builder = _MeshBuilder()
    positive = values >= 0.0  # exact zeros count as positive
    vals = values

    def crossing(p, q):
        return _edge_vertex(builder, p, q, float(vals[p]), float(vals[q]), axes)

    for i in range(res):
        for j in range(res):
            corners = ((i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1))
            cls = [bool(positive[c]) for c in corners]
            if all(cls) or not any(cls):
                continue
            edges = ((0, 1), (1, 2), (2, 3), (3, 0))
            cross = {}
            for k, (a, b) in enumerate(edges):
                if cls[a] != cls[b]:
                    cross[k] = crossing(corners[a], corners[b])
            if len(cross) == 2:
                (_, v1), (_, v2) = sorted(cross.items())
                builder.cell([v1, v2])
            else:  # saddle cell: the center value decides the pairing
                cx = 0.25 * sum(float(vals[c]) for c in corners)
                hug_positive = cx < 0.0
                # pair each cut-off corner's two adjacent edge crossings
                hugged = [k for k in range(4) if cls[k] != (not hug_positive)]
                for corner in hugged:
                    e_prev = (corner - 1) % 4
                    e_next = corner
                    builder.cell([cross[e_prev], cross[e_next]])
    return builder


def _march_tets(values, axes, res) -> _MeshBuilder:
    builder = _MeshBuilder()
    positive = values >= 0.0
    vals = values

    # only cubes whose corners disagree can contain the level set
    agree_pos = positive[:-1, :-1, :-1].copy()
    agree_neg = ~positive[:-1, :-1, :-1]
    for dx, dy, dz in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)):
        shifted = positive[dx : res + dx, dy : res + dy, dz : res + dz]
        agree_pos &= shifted
        agree_neg &= ~shifted
    active = np.argwhere(~(agree_pos | agree_neg))

    def crossing(p, q):
        return _edge_vertex(builder, p, q, float(vals[p]), float(vals[q]), axes)

    for i, j, k in active:
        base = (int(i), int(j), int(k))
        corner_idx = []
        for bits in range(8):
            corner_idx.append(
                (base[0] + (bits & 1), base[1] + ((bits >> 1) & 1), base[2] + ((bits >> 2) & 1))
            )
        for tet in _KUHN_TETS:
            pts = [corner_idx[v] for v in tet]
            cls = [bool(positive[p]) for p in pts]
            pos_v = [p for p, c in zip(pts, cls) if c]
            neg_v = [p for p, c in zip(pts, cls) if not c]
            if not pos_v or not neg_v:
                continue
            if len(pos_v) == 1 or len(neg_v) == 1:
                lone, others = (
                    (pos_v[0], neg_v) if len(pos_v) == 1 else (neg_v[0], pos_v)
                )
                tri = [crossing(lone, o) for o in others]
                builder.cell(tri)
            else:
                p1, p2 = pos_v
                m1, m2 = neg_v
                quad = [crossing(p1, m1), crossing(p1, m2), crossing(p2, m2), crossing(p2, m1)]
                builder.cell([quad[0], quad[1], quad[2]])
                builder.cell([quad[0], quad[2], quad[3]])
    return builder


def _boundary_pairing_2d(builder: _MeshBuilder, res: int):
    """Group window-boundary hit points by curve component.

    Each hit is tagged with its quadrant; the pairing partition is the
    figure the reconnection flips when t crosses 0.
    """
    half = res / 2.0
    groups: dict[tuple, list[str]] = {}
    for key in builder.positions:
        _, p, q = key
        on_boundary = False
        for axis in range(2):
            if p[axis] == q[axis] and p[axis] in (0, res):
                on_boundary = True
        if not on_boundary:
            continue
        mid_x = (p[0] + q[0]) / 2.0
        mid_y = (p[1] + q[1]) / 2.0
        tag = _QUADRANTS_2D[(mid_x > half, mid_y > half)]
        groups.setdefault(builder.find(key), []).append(tag)
    return tuple(tuple(tags) for tags in groups.values())


def handle_slices(form: MorseForm, steps: int, resolution: int) -> tuple[LevelSetMesh, ...]:
    """Uniformly spaced level sets through the handle, t = 0 included."""
    if steps < 3 or steps % 2 == 0:
        raise MeshError("steps must be an odd count of at least 3")
    w2 = form.window * form.window
    levels = [w2 * (2 * j - (steps - 1)) / (steps + 1) for j in range(steps)]
    return tuple(sample_level_set(form, t, resolution) for t in levels)


def emit_mesh(mesh: LevelSetMesh, fmt: str) -> bytes:
    """Serialize a mesh deterministically: OBJ or JSON."""
    if fmt == "OBJ":
        lines = []
        for v in mesh.vertices:
            coords = v + (0.0,) * (3 - len(v))
            lines.append("v " + " ".join(f"{c:.6f}" for c in coords))
        for cell in mesh.cells:
            tag = "l" if len(cell) == 2 else "f"
            lines.append(tag + " " + " ".join(str(i + 1) for i in cell))
        return ("\n".join(lines) + "\n").encode() if lines else b""
    if fmt == "JSON":
        payload = {
            "t": float(mesh.t),
            "vertices": [list(v) for v in mesh.vertices],
            "cells": [list(c) for c in mesh.cells],
        }
        return json.dumps(payload, separators=(",", ":")).encode()
    raise MeshError(f"unsupported mesh format {fmt!r}")
