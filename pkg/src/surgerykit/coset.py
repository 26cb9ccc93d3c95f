"""Todd-Coxeter coset enumeration over the trivial subgroup.

Relator-driven (HLT) strategy with row filling: every live coset is
scanned against every relator in order, gaps are filled by defining
new cosets, and rows are completed before moving on.  Coincidences are
merged in place through a union-find table.  The scan order is fixed,
so identical inputs enumerate identical tables.

The enumeration decides the group order when it is finite: the table
closes with one row per element.  A table that wants to grow past
max_cosets stops with ExceededBound, which is a result, not an error;
the count reported is the number of cosets ever defined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentations import GroupPresentation


@dataclass(frozen=True)
class EnumerationResult:
    outcome: str  # "finite" | "exceeded"
    order: int | None = None
    cosets_used: int | None = None

    @classmethod
    def finite(cls, order: int) -> "EnumerationResult":
        return cls(outcome="finite", order=order)

    @classmethod
    def exceeded(cls, cosets_used: int) -> "EnumerationResult":
        return cls(outcome="exceeded", cosets_used=cosets_used)

    @property
    def is_finite(self) -> bool:
        return self.outcome == "finite"

    def __str__(self) -> str:
        if self.is_finite:
            return f"Finite({self.order})"
        return f"ExceededBound({self.cosets_used})"


class _Bound(Exception):
    pass


def _column(g: int) -> int:
    # generator g -> even column, inverse -> odd column
    return 2 * (g - 1) if g > 0 else 2 * (-g - 1) + 1


def todd_coxeter(p: GroupPresentation, max_cosets: int = 100_000) -> EnumerationResult:
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    width = 2 * p.generator_count
    relator_cols = [tuple(_column(g) for g in rel) for rel in p.relators if rel]

    table: list[list[int | None]] = [[None] * width]
    parent = [0]
    nalloc = 1

    def rep(k: int) -> int:
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    def define(a: int, c: int) -> int:
        nonlocal nalloc
        if nalloc >= max_cosets:
            raise _Bound
        b = nalloc
        nalloc += 1
        table.append([None] * width)
        parent.append(b)
        table[a][c] = b
        table[b][c ^ 1] = a
        return b

    def coincidence(a: int, b: int):
        queue: list[int] = []

        def merge(x: int, y: int):
            x, y = rep(x), rep(y)
            if x != y:
                if x > y:
                    x, y = y, x
                parent[y] = x
                queue.append(y)

        merge(a, b)
        while queue:
            dead = queue.pop()
            row = table[dead]
            for c in range(width):
                delta = row[c]
                if delta is None:
                    continue
                table[delta][c ^ 1] = None
                mu, nu = rep(dead), rep(delta)
                entry = table[mu][c]
                if entry is not None:
                    merge(nu, entry)
                else:
                    back = table[nu][c ^ 1]
                    if back is not None:
                        merge(mu, back)
                    else:
                        table[mu][c] = nu
                        table[nu][c ^ 1] = mu

    def scan_and_fill(alpha: int, word: tuple[int, ...]):
        f = alpha
        i = 0
        b = alpha
        j = len(word) - 1
        while True:
            while i <= j:
                nxt = table[f][word[i]]
                if nxt is None:
                    break
                f = rep(nxt)
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i:
                prev = table[b][word[j] ^ 1]
                if prev is None:
                    break
                b = rep(prev)
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:  # deduction closes the scan
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            define(f, word[i])

    try:
        alpha = 0
        while alpha < nalloc:
            if rep(alpha) == alpha:
                for word in relator_cols:
                    scan_and_fill(alpha, word)
                    if rep(alpha) != alpha:
                        break
                if rep(alpha) == alpha:
                    for c in range(width):
                        if table[alpha][c] is None:
                            define(alpha, c)
            alpha += 1
    except _Bound:
        return EnumerationResult.exceeded(nalloc)

    live = sum(1 for k in range(nalloc) if rep(k) == k)
    return EnumerationResult.finite(live)
