"""Permutations of {0, ..., n-1} with left-to-right composition.

Conventions used throughout the package:

- A permutation is stored as its image table: position ``i`` holds the
  image of ``i``.
- Composition is left to right: ``compose(p, q)`` applies ``p`` first and
  then ``q``, so ``compose(p, q)(i) == q(p(i))``.  Every caller relies on
  this; do not flip it.
- Labels are 0-based internally.  The cycle-notation text format
  (``"(4 3 2 1)(5 7 8 6)"``) is 1-based and is the only place where the
  off-by-one conversion happens.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

Cycles = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0..n-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        n = len(self.images)
        if n < 1:
            raise ValueError("permutation degree must be at least 1")
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"images {self.images!r} are not a bijection on 0..{n - 1}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Permutation.parse({format_cycles(self)!r}, {self.degree})"

    @staticmethod
    def parse(text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)


def identity(n: int) -> Permutation:
    """The identity permutation on {0..n-1}."""
    return Permutation(tuple(range(n)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: apply ``p`` first, then ``q``.

    >>> p = Permutation((1, 2, 0))
    >>> q = Permutation((0, 2, 1))
    >>> compose(p, q).images     # i -> q(p(i))
    (2, 1, 0)
    """
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    return Permutation(tuple(q.images[x] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    """The inverse permutation: ``compose(p, inverse(p))`` is the identity."""
    inv = [0] * p.degree
    for i, pi in enumerate(p.images):
        inv[pi] = i
    return Permutation(tuple(inv))


def cycle_decomposition(p: Permutation) -> Cycles:
    """Disjoint cycles of ``p`` in canonical form.

    Each cycle starts at its minimum label and cycles are sorted by that
    minimum; fixed points appear as length-1 cycles, so the cycles
    partition {0..n-1}.

    >>> cycle_decomposition(Permutation((1, 0, 2)))
    ((0, 1), (2,))
    """
    seen = [False] * p.degree
    cycles = []
    for start in range(p.degree):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        pos = p.images[start]
        while pos != start:
            cycle.append(pos)
            seen[pos] = True
            pos = p.images[pos]
        cycles.append(tuple(cycle))
    return tuple(cycles)


def as_partition(cycles: Cycles) -> frozenset[frozenset[int]]:
    """Forget cyclic order: the orbits as an unordered set partition."""
    return frozenset(frozenset(c) for c in cycles)


def connected_components(p: Permutation, q: Permutation) -> Cycles:
    """Orbits of the group generated by ``p`` and ``q``, sorted by minimum.

    Two labels are in the same component when some word in p, q (and
    their inverses) maps one to the other.
    """
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    parent = list(range(p.degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(p.degree):
        for j in (p.images[i], q.images[i]):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(p.degree):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(groups[r]) for r in sorted(groups))


def is_transitive(p: Permutation, q: Permutation) -> bool:
    """True when the group generated by ``p`` and ``q`` has a single orbit."""
    return len(connected_components(p, q)) == 1


def random_permutation(n: int, rng: random.Random) -> Permutation:
    """Uniformly random permutation drawn from ``rng``."""
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(tuple(images))


class CycleParseError(ValueError):
    """Malformed cycle-notation text; ``col`` is the 1-based offending column."""

    def __init__(self, message: str, col: int):
        super().__init__(message)
        self.col = col


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation like ``"(4 3 2 1)(5 7 8 6)"``.

    Labels omitted from every cycle are fixed points; the degree cannot be
    recovered from the cycles alone, so it is passed in.  A label that
    appears twice (in one cycle or across cycles) is an error.
    """
    if degree < 1:
        raise CycleParseError("degree must be at least 1", 1)
    images = list(range(degree))
    used = [False] * degree
    pos = 0
    n_chars = len(text)
    while pos < n_chars:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise CycleParseError(f"expected '(' but found {ch!r}", pos + 1)
        pos += 1
        entries: list[int] = []
        while True:
            while pos < n_chars and text[pos].isspace():
                pos += 1
            if pos >= n_chars:
                raise CycleParseError("unclosed cycle: missing ')'", n_chars + 1)
            if text[pos] == ")":
                pos += 1
                break
            start = pos
            while pos < n_chars and not text[pos].isspace() and text[pos] != ")":
                pos += 1
            token = text[start:pos]
            if not token.isdigit():
                raise CycleParseError(f"expected a dart label, found {token!r}", start + 1)
            label = int(token)
            if not 1 <= label <= degree:
                raise CycleParseError(f"dart label {label} outside 1..{degree}", start + 1)
            if used[label - 1]:
                raise CycleParseError(f"dart label {label} appears twice", start + 1)
            used[label - 1] = True
            entries.append(label - 1)
        for i, a in enumerate(entries):
            images[a] = entries[(i + 1) % len(entries)]
    return Permutation(tuple(images))


def format_cycles(p: Permutation) -> str:
    """Render in 1-based cycle notation, omitting fixed points.

    The identity renders as ``"()"``.  Inverse of :func:`parse_cycles` up
    to the canonical choice of starting each cycle at its minimum label.
    """
    parts = [
        "(" + " ".join(str(x + 1) for x in cycle) + ")"
        for cycle in cycle_decomposition(p)
        if len(cycle) > 1
    ]
    return "".join(parts) if parts else "()"
