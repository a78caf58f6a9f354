"""Combinatorial hypermaps and their dual constructions.

A combinatorial hypermap is a pair of permutations (alpha, sigma) of the
dart set {0..n-1} that together act transitively.  Orbits of sigma are
the vertices, orbits of alpha the edges, and orbits of alpha^-1 * sigma
(left-to-right) the faces.  The counts satisfy

    chi = (|vertices| + |edges|) - n + |faces|,

the Euler characteristic of the closed orientable surface on which the
hypermap embeds, so chi is even and the genus is (2 - chi) / 2.

Three derived hypermaps share the surface:

- dual:           (alpha^-1, alpha^-1 sigma)   -- same edges, vertices and
                                                  faces swapped;
- triangle dual:  (sigma^-1 alpha, sigma^-1)   -- same vertices, edges and
                                                  faces swapped;
- contrary:       (sigma, alpha)               -- vertices and edges swapped.

The contrary of the triangle dual equals the triangle dual of the dual;
:func:`check_nabla_identity` verifies this orbit by orbit.

Orientation reversal has no carrier in this purely combinatorial model:
the dual constructions above flip the underlying surface orientation, but
every orbit-level statement is insensitive to that, so it is recorded
here in prose only.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .perm import (
    Cycles,
    Permutation,
    as_partition,
    compose,
    connected_components,
    cycle_decomposition,
    format_cycles,
    inverse,
    is_transitive,
    parse_cycles,
    random_permutation,
)

PER_EDGE = "per-edge"
PER_FACE = "per-face"


class DisconnectedError(ValueError):
    """The pair (alpha, sigma) is not transitive; carries the components."""

    def __init__(self, components: Cycles):
        pretty = ", ".join("{" + " ".join(str(i + 1) for i in c) + "}" for c in components)
        super().__init__(f"hypermap is not connected; dart components: {pretty}")
        self.components = components


class SpecialDartError(ValueError):
    """A special-dart set that does not pick exactly one dart per orbit."""


class Hypermap:
    """A validated hypermap with cached orbit decompositions.

    Immutable after construction; the vertex/edge/face decompositions and
    the dart -> orbit index maps are computed eagerly.
    """

    __slots__ = ("alpha", "sigma", "vertices", "edges", "faces",
                 "_vertex_of", "_edge_of", "_face_of")

    def __init__(self, alpha: Permutation, sigma: Permutation):
        if alpha.degree != sigma.degree:
            raise ValueError(f"degree mismatch: alpha {alpha.degree}, sigma {sigma.degree}")
        components = connected_components(alpha, sigma)
        if len(components) > 1:
            raise DisconnectedError(components)
        self.alpha = alpha
        self.sigma = sigma
        self.vertices: Cycles = cycle_decomposition(sigma)
        self.edges: Cycles = cycle_decomposition(alpha)
        self.faces: Cycles = cycle_decomposition(compose(inverse(alpha), sigma))
        self._vertex_of = _orbit_index(self.vertices, alpha.degree)
        self._edge_of = _orbit_index(self.edges, alpha.degree)
        self._face_of = _orbit_index(self.faces, alpha.degree)

    @property
    def n(self) -> int:
        """Number of darts."""
        return self.alpha.degree

    def vertex_of(self, dart: int) -> int:
        """Index (into ``vertices``) of the orbit containing ``dart``."""
        return self._vertex_of[dart]

    def edge_of(self, dart: int) -> int:
        return self._edge_of[dart]

    def face_of(self, dart: int) -> int:
        return self._face_of[dart]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypermap):
            return NotImplemented
        return self.alpha == other.alpha and self.sigma == other.sigma

    def __hash__(self) -> int:
        return hash((self.alpha, self.sigma))

    def __repr__(self) -> str:
        return (f"Hypermap(alpha={format_cycles(self.alpha)!r}, "
                f"sigma={format_cycles(self.sigma)!r}, n={self.n})")


def _orbit_index(orbits: Cycles, n: int) -> tuple[int, ...]:
    index = [0] * n
    for k, orbit in enumerate(orbits):
        for dart in orbit:
            index[dart] = k
    return tuple(index)


def euler_characteristic(h: Hypermap) -> int:
    """chi of the carrier surface: sites minus darts plus faces.

    Sites are the vertices and edges together (the 0-cells of the
    bipartite incidence embedding), darts are the 1-cells, faces the
    2-cells.  Always even; at most 2.
    """
    return (len(h.vertices) + len(h.edges)) - h.n + len(h.faces)


def genus(h: Hypermap) -> int:
    return (2 - euler_characteristic(h)) // 2


def dual(h: Hypermap) -> Hypermap:
    """The dual hypermap (alpha^-1, alpha^-1 sigma).

    Shares its edges with ``h``; its vertices are the faces of ``h`` and
    its faces the vertices of ``h``.  An involution: dual(dual(h)) == h.
    """
    alpha_inv = inverse(h.alpha)
    return Hypermap(alpha_inv, compose(alpha_inv, h.sigma))


def triangle_dual(h: Hypermap) -> Hypermap:
    """The triangle dual (sigma^-1 alpha, sigma^-1).

    Shares its vertices with ``h``; its faces are the edges of ``h`` and
    its edges the faces of ``h``.  Also an involution.
    """
    sigma_inv = inverse(h.sigma)
    return Hypermap(compose(sigma_inv, h.alpha), sigma_inv)


def contrary(h: Hypermap) -> Hypermap:
    """Interchange vertices and edges: the hypermap (sigma, alpha)."""
    return Hypermap(h.sigma, h.alpha)


def nabla(h: Hypermap) -> Hypermap:
    """Contrary of the triangle dual: the pair (sigma^-1, sigma^-1 alpha).

    Its edges are the faces of dual(h) and its faces the edges of
    dual(h).
    """
    return contrary(triangle_dual(h))


def check_nabla_identity(h: Hypermap) -> bool:
    """Verify nabla(h) == triangle_dual(dual(h)) orbit family by orbit family."""
    a = nabla(h)
    b = triangle_dual(dual(h))
    return (as_partition(a.vertices) == as_partition(b.vertices)
            and as_partition(a.edges) == as_partition(b.edges)
            and as_partition(a.faces) == as_partition(b.faces))


def _random_transitive_pair(n: int, rng: random.Random) -> Hypermap:
    while True:
        alpha = random_permutation(n, rng)
        sigma = random_permutation(n, rng)
        if is_transitive(alpha, sigma):
            return Hypermap(alpha, sigma)


def random_hypermap(n: int, seed: int) -> Hypermap:
    """Uniform random hypermap on n darts (rejection until transitive).

    Deterministic for a fixed seed.  Random pairs are transitive with
    high probability, so rejection terminates quickly even at small n.
    """
    if n < 1:
        raise ValueError("need at least one dart")
    return _random_transitive_pair(n, random.Random(seed))


def random_corpus(count: int, max_darts: int, seed: int) -> list[Hypermap]:
    """A reproducible sample of hypermaps with 1 <= n <= max_darts."""
    if max_darts < 1:
        raise ValueError("need at least one dart")
    rng = random.Random(seed)
    return [_random_transitive_pair(rng.randint(1, max_darts), rng) for _ in range(count)]


@dataclass(frozen=True)
class SpecialDarts:
    """One chosen dart per edge orbit (per-edge) or per face orbit (per-face)."""

    darts: frozenset[int]
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "darts", frozenset(self.darts))
        if self.kind not in (PER_EDGE, PER_FACE):
            raise ValueError(f"kind must be {PER_EDGE!r} or {PER_FACE!r}, got {self.kind!r}")


def special_darts(h: Hypermap, darts, kind: str) -> SpecialDarts:
    """Validate a special-dart choice against the orbits of ``h``.

    Raises :class:`SpecialDartError` unless ``darts`` picks exactly one
    dart from every edge orbit (per-edge) or face orbit (per-face).
    """
    chosen = frozenset(darts)
    for dart in chosen:
        if not 0 <= dart < h.n:
            raise SpecialDartError(f"dart {dart + 1} outside 1..{h.n}")
    orbits = h.edges if kind == PER_EDGE else h.faces
    name = "edge" if kind == PER_EDGE else "face"
    bad = []
    for orbit in orbits:
        hits = chosen.intersection(orbit)
        if len(hits) != 1:
            bad.append((orbit, len(hits)))
    if bad:
        pretty = "; ".join(
            f"{name} orbit {{{' '.join(str(i + 1) for i in orbit)}}} has {hits} special darts"
            for orbit, hits in bad
        )
        raise SpecialDartError(f"not a valid {kind} special set: {pretty}")
    return SpecialDarts(chosen, kind)


def default_special_darts(h: Hypermap, kind: str) -> SpecialDarts:
    """The canonical choice: the minimum dart label of each orbit."""
    if kind not in (PER_EDGE, PER_FACE):
        raise ValueError(f"kind must be {PER_EDGE!r} or {PER_FACE!r}, got {kind!r}")
    orbits = h.edges if kind == PER_EDGE else h.faces
    return SpecialDarts(frozenset(min(orbit) for orbit in orbits), kind)


class ParseError(ValueError):
    """Hypermap file syntax error with 1-based line and column."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


def parse_hypermap(text: str) -> tuple[Hypermap, frozenset[int] | None]:
    """Parse the hypermap text format.

    ::

        # comments start with '#'
        darts: 8
        alpha: (4 3 2 1)(5 7 8 6)
        sigma: (7 1 6 3)(5 2 8 4)
        special: 2 5        # optional

    Labels in the file are 1-based; the returned special darts (if any)
    are 0-based like everything else in memory.
    """
    fields: list[tuple[int, int, str, str]] = []  # (line, value col, key, value)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if ":" not in raw:
            raise ParseError(lineno, 1, "expected 'key: value'")
        key, _, value = raw.partition(":")
        # 1-based column where the stripped value begins
        value_col = len(key) + 2 + (len(value) - len(value.lstrip()))
        fields.append((lineno, value_col, key.strip(), value.strip()))

    expected = ["darts", "alpha", "sigma"]
    for (lineno, col, key, _), want in zip(fields, expected):
        if key != want:
            raise ParseError(lineno, 1, f"expected {want!r} line, found {key!r}")
    if len(fields) < 3:
        raise ParseError(len(text.splitlines()) + 1, 1,
                         "expected 'darts:', 'alpha:' and 'sigma:' lines")
    if len(fields) > 4:
        lineno, _, key, _ = fields[4]
        raise ParseError(lineno, 1, f"unexpected extra line {key!r}")
    if len(fields) == 4 and fields[3][2] != "special":
        raise ParseError(fields[3][0], 1, f"expected 'special' line, found {fields[3][2]!r}")

    lineno, col, _, value = fields[0]
    if not value.isdigit() or int(value) < 1:
        raise ParseError(lineno, col, f"dart count must be a positive integer, found {value!r}")
    n = int(value)

    perms = []
    for lineno, col, key, value in fields[1:3]:
        try:
            perms.append(parse_cycles(value, n))
        except ValueError as exc:
            offset = getattr(exc, "col", 1)
            raise ParseError(lineno, col + offset - 1, f"bad {key} cycles: {exc}") from exc

    special: frozenset[int] | None = None
    if len(fields) == 4:
        lineno, col, _, value = fields[3]
        labels = []
        offset = 0
        for token in value.split():
            offset = value.index(token, offset)
            if not token.isdigit() or not 1 <= int(token) <= n:
                raise ParseError(lineno, col + offset,
                                 f"special dart {token!r} outside 1..{n}")
            label = int(token) - 1
            if label in labels:
                raise ParseError(lineno, col + offset, f"special dart {token} appears twice")
            labels.append(label)
            offset += len(token)
        special = frozenset(labels)

    return Hypermap(perms[0], perms[1]), special


def format_hypermap(h: Hypermap, special=None) -> str:
    """Render in the hypermap text format (1-based labels)."""
    lines = [f"darts: {h.n}",
             f"alpha: {format_cycles(h.alpha)}",
             f"sigma: {format_cycles(h.sigma)}"]
    if special:
        lines.append("special: " + " ".join(str(i + 1) for i in sorted(special)))
    return "\n".join(lines) + "\n"
