"""Walker families as tableaux, and the contact-removing jeu de taquin bijection.

A watermelon family is read as a tableau column by column: column j lists
the x-coordinates where walk j starts a down-step. Row i of such a tableau
has entries >= 2i-1, and a first-column entry equal to 2i-1 is exactly a
return of the lowest walk to the wall.

The forward map removes those returns one at a time by a modified jeu de
taquin (:func:`jt_slide`), deleting the special entry once it reaches the
bottom of the last column. The inverse (:func:`jt_star_slide`) grows the
last column back.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import DomainError, WatermelonSpec
from .oracle import DOWN, UP, PathFamily, check_family, validate_family

INF = float("inf")


@dataclass(frozen=True)
class SemistandardTableau:
    """Column-major tableau; the last column may be shorter than the others."""

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(tuple(c) for c in self.columns))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SemistandardTableau":
        width = max((len(r) for r in rows), default=0)
        cols = [[r[j] for r in rows if j < len(r)] for j in range(width)]
        return cls(tuple(tuple(c) for c in cols))

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        height = max((len(c) for c in self.columns), default=0)
        return tuple(tuple(c[i] for c in self.columns if i < len(c)) for i in range(height))

    @property
    def shape(self) -> tuple[int, ...]:
        """Column lengths."""
        return tuple(len(c) for c in self.columns)

    def is_semistandard(self) -> bool:
        return _monotone([list(c) for c in self.columns], None)

    def add(self, d: int) -> "SemistandardTableau":
        return SemistandardTableau(tuple(tuple(v + d for v in c) for c in self.columns))

    def pretty(self) -> str:
        rows = self.rows
        if not rows:
            return "(empty)"
        w = max(len(str(v)) for r in rows for v in r)
        return "\n".join(" ".join(str(v).rjust(w) for v in r) for r in rows)


def _monotone(cols: list[list[int]], special: tuple[int, int] | None) -> bool:
    """Rows weakly increasing, columns strictly increasing.

    Only adjacent pairs are compared; pairs involving ``special`` are skipped.
    """
    def val(i, j):
        if (i, j) == special or j >= len(cols) or i >= len(cols[j]):
            return None
        return cols[j][i]

    for j, col in enumerate(cols):
        for i in range(len(col)):
            v = val(i, j)
            if v is None:
                continue
            for di, dj, strict in ((1, 0, True), (0, 1, False)):
                w = val(i + di, j + dj)
                if w is not None and (w <= v if strict else w < v):
                    return False
    return True


# -- walkers <-> tableaux ----------------------------------------------------

def _down_positions(path: Sequence[int]) -> tuple[int, ...]:
    return tuple(x for x, s in enumerate(path) if s == DOWN)


def walkers_to_tableau(spec: WatermelonSpec, fam: PathFamily) -> SemistandardTableau:
    """Column j holds the start abscissae of walk j's down-steps."""
    validate_family(spec.walker_spec(), fam)
    return SemistandardTableau(tuple(_down_positions(p) for p in fam.paths))


def tableau_to_walkers(tab: SemistandardTableau, lengths: Sequence[int]) -> PathFamily:
    """Inverse reading: walk j has length ``lengths[j]`` and steps down exactly at column j."""
    if len(lengths) != len(tab.columns):
        raise DomainError("need one length per column")
    paths = []
    for col, length in zip(tab.columns, lengths):
        downs = set(col)
        if len(downs) != len(col) or any(not 0 <= x < length for x in col):
            raise DomainError(f"column {col} is not a set of positions in [0, {length})")
        paths.append(tuple(DOWN if x in downs else UP for x in range(length)))
    return PathFamily(tuple(paths))


# -- the two slides ----------------------------------------------------------

def _get(cols, i, j, default):
    if 0 <= j < len(cols) and 0 <= i < len(cols[j]):
        return cols[j][i]
    return default


def jt_slide(tab: SemistandardTableau, special: tuple[int, int],
             check: bool = True) -> tuple[SemistandardTableau, tuple[int, int]]:
    """Slide the special entry at (row, col), 0-based, to a cell with no right or bottom neighbour.

    With x its right and y its bottom neighbour: if x >= y - 1 the special
    entry moves down and y - 1 moves up, otherwise it moves right and x + 1
    moves left. Returns the new tableau and the final position.
    """
    cols = [list(c) for c in tab.columns]
    i, j = special
    if _get(cols, i, j, None) is None:
        raise DomainError(f"no cell at {special}")
    s = cols[j][i]
    while True:
        x = _get(cols, i, j + 1, INF)
        y = _get(cols, i + 1, j, INF)
        if x == INF and y == INF:
            break
        if x >= y - 1:
            cols[j][i] = y - 1
            i += 1
        else:
            cols[j][i] = x + 1
            j += 1
        cols[j][i] = s
        if check:
            assert _monotone(cols, (i, j)), "JT move broke monotonicity"
    return SemistandardTableau(tuple(tuple(c) for c in cols)), (i, j)


def jt_star_slide(tab: SemistandardTableau, special: tuple[int, int],
                  check: bool = True) -> tuple[SemistandardTableau, tuple[int, int]]:
    """Reverse slide. x is the left and y the top neighbour of the special entry.

    Stops at the top-left cell, or in the first column once y + 1 <= 2i - 1
    (1-based row i); otherwise moves up (y + 1 moves down) when x <= y + 1,
    else left (x - 1 moves right). The landed entry is set to 2i - 1.
    """
    cols = [list(c) for c in tab.columns]
    i, j = special
    if _get(cols, i, j, None) is None:
        raise DomainError(f"no cell at {special}")
    while True:
        if i == 0 and j == 0:
            break
        x = _get(cols, i, j - 1, None)
        y = _get(cols, i - 1, j, -INF)
        if x is None and y + 1 <= 2 * (i + 1) - 1:
            break
        if x is None or x <= y + 1:
            cols[j][i] = y + 1
            i -= 1
        else:
            cols[j][i] = x - 1
            j -= 1
        if check:
            assert _monotone(cols, (i, j)), "JT* move broke monotonicity"
    cols[j][i] = 2 * i + 1
    return SemistandardTableau(tuple(tuple(c) for c in cols)), (i, j)


# -- the bijection -----------------------------------------------------------

def second_set_ends(spec: WatermelonSpec, ell: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Starts, ends and lengths of the image families for a given ell."""
    n, t, y = spec.n, spec.t, spec.y
    starts = tuple(2 * i for i in range(n))
    ends = tuple(y + 2 * i for i in range(n - 1)) + (y + 2 * n + ell - 3,)
    lengths = (t,) * (n - 1) + (t - ell - 1,)
    return starts, ends, lengths


def wall_returns(tab: SemistandardTableau) -> list[int]:
    """0-based rows where the first column sits on its lower bound."""
    if not tab.columns:
        return []
    return [i for i, v in enumerate(tab.columns[0]) if v == 2 * i + 1]


def prop6_trace(spec: WatermelonSpec, fam: PathFamily) -> tuple[int, list[SemistandardTableau]]:
    """Tableaux of the forward map: start, after each slide, after each deletion, final.

    Returns (ell, tableaux). The walk-1 contact count is ell + 1.
    """
    if spec.t < 1:
        raise DomainError("the bijection needs t >= 1")
    tab = walkers_to_tableau(spec, fam)
    ell = len(wall_returns(tab))
    trace = [tab]
    for _ in range(ell):
        i = wall_returns(tab)[-1]
        tab, (fi, fj) = jt_slide(tab, (i, 0))
        trace.append(tab)
        last = len(tab.columns) - 1
        assert (fj, fi) == (last, len(tab.columns[last]) - 1), "slide must end at the bottom of the last column"
        cols = list(tab.columns)
        cols[last] = cols[last][:-1]
        tab = SemistandardTableau(tuple(cols))
        trace.append(tab)
    trace.append(tab.add(-1))
    return ell, trace


def prop6_forward(spec: WatermelonSpec, fam: PathFamily) -> PathFamily:
    """Map a watermelon whose lowest walk has ell + 1 contacts to the second set.

    The image keeps walks 1..n-1 of length t ending at y + 2i - 2; walk n has
    length t - ell - 1 and ends at height y + 2n + ell - 3.
    """
    ell, trace = prop6_trace(spec, fam)
    starts, ends, lengths = second_set_ends(spec, ell)
    out = tableau_to_walkers(trace[-1], lengths)
    check_family(starts, ends, out)
    return out


def prop6_inverse(spec: WatermelonSpec, fam: PathFamily) -> PathFamily:
    """Inverse of :func:`prop6_forward`; ell is read off the length of the last walk."""
    n, t = spec.n, spec.t
    if len(fam.paths) != n:
        raise DomainError(f"expected {n} walks")
    ell = t - 1 - len(fam.paths[-1])
    if not 0 <= ell <= spec.downs:
        raise DomainError(f"last walk length {len(fam.paths[-1])} does not fit t={t}")
    starts, ends, lengths = second_set_ends(spec, ell)
    if tuple(len(p) for p in fam.paths) != lengths:
        raise DomainError(f"walk lengths must be {lengths}")
    check_family(starts, ends, fam)
    tab = SemistandardTableau(tuple(_down_positions(p) for p in fam.paths)).add(1)
    for _ in range(ell):
        cols = [list(c) for c in tab.columns]
        cols[-1].append(0)  # placeholder value for the special entry
        tab = SemistandardTableau(tuple(tuple(c) for c in cols))
        tab, _ = jt_star_slide(tab, (len(cols[-1]) - 1, n - 1))
    if tab.shape != (spec.downs,) * n:
        raise DomainError(f"inverse did not refill the rectangle: shape {tab.shape}")
    out = tableau_to_walkers(tab, (t,) * n)
    validate_family(spec.walker_spec(), out)
    return out
