"""Exact integer matrices, Smith normal form, and abelian invariants.

All arithmetic is arbitrary-precision.  smith_normal_form verifies its
own postconditions on every call (transforms unimodular, product equal,
divisor chain), since entry growth during elimination is the classic
failure mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

IntMatrix = tuple[tuple[int, ...], ...]


class SnfError(AssertionError):
    """Internal postcondition failure in the normal-form computation."""


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix shapes do not match")
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]) if b else 0))
        for i in range(len(a))
    )


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U*m*V = D diagonal, d_i | d_{i+1}, U, V unimodular."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(r) for r in m]
    u = [list(r) for r in identity_matrix(rows)]
    v = [list(r) for r in identity_matrix(cols)]

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for r in a:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):  # row_dst += c * row_src
        if c:
            for j in range(cols):
                a[dst][j] += c * a[src][j]
            for j in range(rows):
                u[dst][j] += c * u[src][j]

    def add_col(dst, src, c):
        if c:
            for r in a:
                r[dst] += c * r[src]
            for r in v:
                r[dst] += c * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for k in range(min(rows, cols)):
        while True:
            pivot = None
            best = None
            for i in range(k, rows):
                for j in range(k, cols):
                    x = a[i][j]
                    if x != 0 and (best is None or (abs(x), i, j) < best):
                        best = (abs(x), i, j)
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(k, pivot[0])
            swap_cols(k, pivot[1])
            dirty = False
            for i in range(rows):
                if i != k and a[i][k]:
                    q = a[i][k] // a[k][k]
                    add_row(i, k, -q)
                    if a[i][k]:
                        dirty = True
            for j in range(cols):
                if j != k and a[k][j]:
                    q = a[k][j] // a[k][k]
                    add_col(j, k, -q)
                    if a[k][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide everything that is left
            offender = None
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if a[i][j] % a[k][k]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(k, offender, 1)
        if k < rows and a[k][k] < 0:
            negate_row(k)

    U = tuple(tuple(r) for r in u)
    D = tuple(tuple(r) for r in a)
    V = tuple(tuple(r) for r in v)
    _verify_snf(m, U, D, V)
    return U, D, V


def _verify_snf(m: IntMatrix, u: IntMatrix, d: IntMatrix, v: IntMatrix):
    if mat_mul(mat_mul(u, m), v) != d:
        raise SnfError("U*M*V != D")
    if abs(determinant(u)) != 1 or abs(determinant(v)) != 1:
        raise SnfError("transform is not unimodular")
    diag = [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            if i != j and x != 0:
                raise SnfError("D is not diagonal")
    for x, y in zip(diag, diag[1:]):
        if x < 0 or (x == 0 and y != 0) or (x != 0 and y % x != 0):
            raise SnfError("diagonal is not a divisor chain")


@dataclass(frozen=True)
class AbelianGroupDecomp:
    """Invariant-factor form: Z^free_rank + Z/d_1 + ... with d_i | d_{i+1}."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for t in self.torsion:
            if t < 2:
                raise ValueError("torsion coefficients must be at least 2")
        for x, y in zip(self.torsion, self.torsion[1:]):
            if y % x:
                raise ValueError("torsion coefficients must form a divisor chain")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        return prod(self.torsion) if self.torsion else 1

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def cokernel_decomposition(relations: IntMatrix, generators: int) -> AbelianGroupDecomp:
    """Z^generators modulo the row space of the relation matrix."""
    if not relations:
        return AbelianGroupDecomp(generators)
    if any(len(row) != generators for row in relations):
        raise ValueError("relation rows must have one entry per generator")
    _, d, _ = smith_normal_form(relations)
    diag = [d[i][i] for i in range(min(len(d), generators))]
    nonzero = [x for x in diag if x != 0]
    return AbelianGroupDecomp(
        free_rank=generators - len(nonzero),
        torsion=tuple(x for x in nonzero if x >= 2),
    )
