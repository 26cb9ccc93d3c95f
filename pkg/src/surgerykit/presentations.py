"""Finite group presentations and mild Tietze simplification.

Words are tuples of nonzero signed generator indices (1-based); -g is
the inverse of g.  Relators are stored freely reduced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PresentationError
from .homology import AbelianGroupDecomp, cokernel_decomposition

Word = tuple[int, ...]


def free_reduce(word) -> Word:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def cyclic_reduce(word) -> Word:
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def inverse_word(word) -> Word:
    return tuple(-g for g in reversed(word))


def _letter_rank(g: int) -> tuple[int, int]:
    return (0, g) if g > 0 else (1, -g)


def _cyclic_key(word: Word) -> Word:
    """Canonical representative among rotations of the word and its inverse.

    Positive letters rank before inverses, so a bare relator keeps its
    positive spelling.
    """
    if not word:
        return ()
    best = None
    for w in (word, inverse_word(word)):
        for k in range(len(w)):
            cand = w[k:] + w[:k]
            if best is None or tuple(map(_letter_rank, cand)) < tuple(map(_letter_rank, best)):
                best = cand
    return best


@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relators: tuple[Word, ...]

    def __post_init__(self):
        if self.generator_count < 0:
            raise PresentationError("generator count must be non-negative")
        reduced = []
        for rel in self.relators:
            word = free_reduce(rel)
            for g in word:
                if g == 0 or abs(g) > self.generator_count:
                    raise PresentationError(f"generator index {g} out of range")
            reduced.append(word)
        object.__setattr__(self, "relators", tuple(reduced))

    def total_relator_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def __str__(self) -> str:
        gens = ", ".join(f"g{i}" for i in range(1, self.generator_count + 1))
        rels = ", ".join(
            " ".join(f"g{g}" if g > 0 else f"g{-g}^-1" for g in rel) or "1"
            for rel in self.relators
        )
        return f"< {gens} | {rels} >"


def abelianization(p: GroupPresentation) -> AbelianGroupDecomp:
    """Exponent-sum cokernel of the relator matrix."""
    rows = []
    for rel in p.relators:
        row = [0] * p.generator_count
        for g in rel:
            row[abs(g) - 1] += 1 if g > 0 else -1
        rows.append(tuple(row))
    return cokernel_decomposition(tuple(rows), p.generator_count)


def _substitute(word: Word, gen: int, replacement: Word) -> Word:
    out: list[int] = []
    for g in word:
        if g == gen:
            out.extend(replacement)
        elif g == -gen:
            out.extend(inverse_word(replacement))
        else:
            out.append(g)
    return free_reduce(out)


def _drop_generator(relators: list[Word], gen: int) -> list[Word]:
    """Renumber generators above `gen` down by one."""
    out = []
    for rel in relators:
        out.append(tuple(g - 1 if g > gen else g + 1 if g < -gen else g for g in rel))
    return out


def tietze_simplify(p: GroupPresentation, budget: int = 10_000) -> GroupPresentation:
    """Shrink a presentation without changing the group.

    Applies free and cyclic reduction, removes empty and duplicate
    relators, and eliminates generators forced by relators of length
    one (g = 1) or two (g = h^+-1).  Deterministic; never increases
    the generator count or the total relator length.  A spent budget
    returns the current state.
    """
    gens = p.generator_count
    relators = [cyclic_reduce(r) for r in p.relators]
    steps = 0
    while steps < budget:
        relators = sorted(
            {key: None for key in map(_cyclic_key, relators) if key}.keys(),
            key=lambda w: (len(w), w),
        )
        action = None
        for rel in relators:
            if len(rel) == 1:
                action = ("kill", abs(rel[0]), ())
                break
            if len(rel) == 2 and abs(rel[0]) != abs(rel[1]):
                # rel = (x, y) means y = x^-1; eliminate the higher index
                x, y = rel
                if abs(y) < abs(x):
                    x, y = y, x
                target = abs(y)
                repl = (-x,) if y > 0 else (x,)
                action = ("substitute", target, repl)
                break
        if action is None:
            break
        kind, gen, repl = action
        new_relators = []
        for rel in relators:
            word = _substitute(rel, gen, repl if kind == "substitute" else ())
            new_relators.append(cyclic_reduce(word))
        relators = _drop_generator(new_relators, gen)
        gens -= 1
        steps += 1
    relators = sorted(
        {key: None for key in map(_cyclic_key, relators) if key}.keys(),
        key=lambda w: (len(w), w),
    )
    return GroupPresentation(gens, tuple(relators))
