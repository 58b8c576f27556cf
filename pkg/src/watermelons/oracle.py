"""Brute-force ground truth.

The contact polynomial is computed by a dynamic programme over the sorted
tuple of walker heights; families are listed explicitly by depth-first
search. Both are meant for small instances (n <= 4, t up to ~18).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .core import ContactPolynomial, DomainError, WalkerSpec, WatermelonSpec

UP, DOWN = 1, -1


@dataclass(frozen=True)
class PathFamily:
    """Step sequences (+1/-1), one per walker. Start heights live in the WalkerSpec."""

    paths: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(tuple(p) for p in self.paths))

    @classmethod
    def from_strings(cls, *walks: str) -> "PathFamily":
        """Build from 'U'/'D' strings, e.g. ``PathFamily.from_strings("UUDD")``."""
        return cls(tuple(tuple(UP if ch == "U" else DOWN for ch in w) for w in walks))

    def to_strings(self) -> tuple[str, ...]:
        return tuple("".join("U" if s == UP else "D" for s in p) for p in self.paths)

    def heights(self, starts: Sequence[int]) -> list[list[int]]:
        out = []
        for h, path in zip(starts, self.paths):
            row = [h]
            for s in path:
                h += s
                row.append(h)
            out.append(row)
        return out


def check_family(starts: Sequence[int], ends: Sequence[int], fam: PathFamily) -> list[list[int]]:
    """Validate a family with possibly unequal walk lengths; return heights.

    Walkers are compared over the time range they share.
    """
    if len(fam.paths) != len(starts):
        raise DomainError(f"expected {len(starts)} walks, got {len(fam.paths)}")
    for p in fam.paths:
        if any(s not in (UP, DOWN) for s in p):
            raise DomainError(f"steps must be +1 or -1: {p}")
    hs = fam.heights(starts)
    for i, row in enumerate(hs):
        if min(row) < 0:
            raise DomainError(f"walk {i + 1} runs below the wall")
        if row[-1] != ends[i]:
            raise DomainError(f"walk {i + 1} ends at {row[-1]}, expected {ends[i]}")
    for i in range(len(hs) - 1):
        lo, hi = hs[i], hs[i + 1]
        if any(lo[x] >= hi[x] for x in range(min(len(lo), len(hi)))):
            raise DomainError(f"walks {i + 1} and {i + 2} meet")
    return hs


def validate_family(spec: WalkerSpec, fam: PathFamily) -> list[list[int]]:
    if any(len(p) != spec.t for p in fam.paths):
        raise DomainError(f"every walk must have length {spec.t}")
    return check_family(spec.a, spec.e, fam)


def _as_walker_spec(spec) -> WalkerSpec:
    return spec.walker_spec() if isinstance(spec, WatermelonSpec) else spec


def contacts(spec, fam: PathFamily) -> int:
    """Number of lattice points on the wall visited by the family, endpoints included."""
    spec = _as_walker_spec(spec)
    hs = validate_family(spec, fam)
    return sum(row.count(0) for row in hs)


def enumerate_contact_polynomial(spec) -> ContactPolynomial:
    """Exact partition function by DP over sorted height tuples."""
    spec = _as_walker_spec(spec)
    n, t, target = spec.n, spec.t, spec.e
    start = spec.a
    layer: dict[tuple[int, ...], dict[int, int]] = {start: {start.count(0): 1}}
    moves = list(product((UP, DOWN), repeat=n))
    for step in range(t):
        left = t - step - 1
        nxt: dict[tuple[int, ...], dict[int, int]] = defaultdict(lambda: defaultdict(int))
        for hs, poly in layer.items():
            for mv in moves:
                new = tuple(h + d for h, d in zip(hs, mv))
                if new[0] < 0:
                    continue
                if any(new[i] >= new[i + 1] for i in range(n - 1)):
                    continue
                if any(abs(h - e) > left for h, e in zip(new, target)):
                    continue
                c = 1 if new[0] == 0 else 0
                assert all(h > 0 for h in new[1:]), "only the lowest walker may touch"
                bucket = nxt[new]
                for k, v in poly.items():
                    bucket[k + c] += v
        layer = nxt
    return ContactPolynomial(layer.get(tuple(target), {}))


def _single_walks(start: int, end: int, t: int, below: Sequence[int] | None) -> Iterator[tuple[int, ...]]:
    """Walks start->end of length t staying >= 0 and strictly above ``below``.

    Yielded in lexicographic order of the step tuple (-1 before +1).
    """
    steps: list[int] = []

    def rec(x: int, h: int):
        if x == t:
            if h == end:
                yield tuple(steps)
            return
        for s in (DOWN, UP):
            nh = h + s
            if nh < 0 or abs(nh - end) > t - x - 1:
                continue
            if below is not None and nh <= below[x + 1]:
                continue
            steps.append(s)
            yield from rec(x + 1, nh)
            steps.pop()

    if below is not None and start <= below[0]:
        return
    yield from rec(0, start)


def enumerate_families(spec) -> Iterator[PathFamily]:
    """Every valid family exactly once, lexicographic in (walk 1, walk 2, ...)."""
    spec = _as_walker_spec(spec)

    def rec(i: int, prev_heights, acc):
        if i == spec.n:
            yield PathFamily(tuple(acc))
            return
        for walk in _single_walks(spec.a[i], spec.e[i], spec.t, prev_heights):
            hs = [spec.a[i]]
            for s in walk:
                hs.append(hs[-1] + s)
            acc.append(walk)
            yield from rec(i + 1, hs, acc)
            acc.pop()

    yield from rec(0, None, [])
