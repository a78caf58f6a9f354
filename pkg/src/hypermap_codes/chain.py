"""Chain complexes of a hypermap and their quotient codes.

The raw complex has one basis element per face, dart, and vertex:

- ``d2`` sends a face to the sum of its darts            (darts x faces),
- ``iota`` sends an edge to the sum of its darts         (darts x edges),
- ``d1`` sends dart i to the two endpoints v(i) and
  v(alpha^-1(i)), which cancel when they coincide        (vertices x darts).

Both d1*d2 = 0 and d1*iota = 0 hold, so quotienting the dart space by the
image of ``iota`` (face codes) or of ``d2`` (edge codes) leaves a
two-step complex.  Choosing one special dart per edge (resp. per face)
turns the non-special darts into a basis of the quotient: a special dart
equals the sum of the other darts of its orbit, so each boundary column
is expanded by that substitution.  The expansion counts are kept as
natural numbers because the surface reduction needs them; the code
matrices are their mod-2 projection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitMatrix
from .hypermap import (
    PER_EDGE,
    PER_FACE,
    Hypermap,
    SpecialDartError,
    SpecialDarts,
    special_darts,
)
from .perm import inverse

FACE = "face"
EDGE = "edge"
FULL = "full"


@dataclass(frozen=True)
class RawComplex:
    """Unquotiented boundary and inclusion matrices with axis labels.

    Axis labels are the minimum dart of each orbit (0-based); the dart
    axis is simply 0..n-1.  Orbits are ordered by minimum label.
    """

    d2: BitMatrix        # darts x faces
    d1: BitMatrix        # vertices x darts
    iota: BitMatrix      # darts x edges
    dart_labels: tuple[int, ...]
    vertex_labels: tuple[int, ...]
    edge_labels: tuple[int, ...]
    face_labels: tuple[int, ...]


@dataclass(frozen=True)
class QuotientCode:
    """A two-step quotient complex ready for CSS assembly.

    ``boundary2`` is qubits x Z-generators, ``boundary1`` is
    X-generators x qubits.  For face codes the Z axis is the faces and a
    qubit is a non-special dart (one special dart per edge); for edge
    codes the Z axis is the edges (one special dart per face); the full
    kind keeps every dart and needs no special set.
    """

    kind: str
    special: SpecialDarts | None
    qubit_labels: tuple[int, ...]
    boundary2: BitMatrix
    boundary1: BitMatrix
    z_labels: tuple[int, ...]
    x_labels: tuple[int, ...]


def raw_complex(h: Hypermap) -> RawComplex:
    """The unquotiented complex of ``h``; satisfies d1*d2 = 0 = d1*iota."""
    d2_bits = [0] * h.n
    for j, face in enumerate(h.faces):
        for dart in face:
            d2_bits[dart] |= 1 << j
    iota_bits = [0] * h.n
    for j, edge in enumerate(h.edges):
        for dart in edge:
            iota_bits[dart] |= 1 << j
    d1_bits = [0] * len(h.vertices)
    alpha_inv = inverse(h.alpha)
    for dart in range(h.n):
        head = h.vertex_of(dart)
        tail = h.vertex_of(alpha_inv(dart))
        if head != tail:
            d1_bits[head] |= 1 << dart
            d1_bits[tail] |= 1 << dart
    return RawComplex(
        d2=BitMatrix(h.n, len(h.faces), tuple(d2_bits)),
        d1=BitMatrix(len(h.vertices), h.n, tuple(d1_bits)),
        iota=BitMatrix(h.n, len(h.edges), tuple(iota_bits)),
        dart_labels=tuple(range(h.n)),
        vertex_labels=tuple(min(o) for o in h.vertices),
        edge_labels=tuple(min(o) for o in h.edges),
        face_labels=tuple(min(o) for o in h.faces),
    )


def _quotient_qubits(h: Hypermap, s: SpecialDarts) -> tuple[int, ...]:
    return tuple(i for i in range(h.n) if i not in s.darts)


def expansion_counts(h: Hypermap, s: SpecialDarts) -> tuple[tuple[int, ...], ...]:
    """Natural-number boundary counts over the non-special-dart basis.

    Rows are the non-special darts in increasing order; columns are the
    Z-axis orbits (faces for a per-edge set, edges for a per-face set).
    A column starts from the orbit's darts and each special dart is
    replaced by the other darts of its own eliminating orbit (its edge
    for per-edge, its face for per-face).  Counts are not reduced mod 2:
    a dart hit twice in one column records 2.  Every row sums to exactly
    2 across all columns: once from the dart's own Z-orbit, once from the
    expansion of the unique special dart it shares an eliminating orbit
    with.
    """
    if s.kind == PER_EDGE:
        z_orbits, eliminating, orbit_of = h.faces, h.edges, h.edge_of
    else:
        z_orbits, eliminating, orbit_of = h.edges, h.faces, h.face_of
    qubits = _quotient_qubits(h, s)
    row_of = {dart: r for r, dart in enumerate(qubits)}
    counts = [[0] * len(z_orbits) for _ in qubits]
    for j, orbit in enumerate(z_orbits):
        for dart in orbit:
            if dart not in s.darts:
                counts[row_of[dart]][j] += 1
            else:
                for other in eliminating[orbit_of(dart)]:
                    if other != dart:
                        counts[row_of[other]][j] += 1
    return tuple(tuple(row) for row in counts)


def _endpoint_matrix(h: Hypermap, qubits: tuple[int, ...]) -> BitMatrix:
    """Vertex boundary restricted to the given darts (vertices x qubits)."""
    alpha_inv = inverse(h.alpha)
    bits = [0] * len(h.vertices)
    for col, dart in enumerate(qubits):
        head = h.vertex_of(dart)
        tail = h.vertex_of(alpha_inv(dart))
        if head != tail:
            bits[head] |= 1 << col
            bits[tail] |= 1 << col
    return BitMatrix(len(h.vertices), len(qubits), tuple(bits))


def _quotient_code(h: Hypermap, s: SpecialDarts, kind: str) -> QuotientCode:
    counts = expansion_counts(h, s)
    qubits = _quotient_qubits(h, s)
    z_orbits = h.faces if kind == FACE else h.edges
    b2_bits = tuple(
        sum(1 << j for j, c in enumerate(row) if c & 1) for row in counts
    )
    return QuotientCode(
        kind=kind,
        special=s,
        qubit_labels=qubits,
        boundary2=BitMatrix(len(qubits), len(z_orbits), b2_bits),
        boundary1=_endpoint_matrix(h, qubits),
        z_labels=tuple(min(o) for o in z_orbits),
        x_labels=tuple(min(o) for o in h.vertices),
    )


def face_code(h: Hypermap, s: SpecialDarts) -> QuotientCode:
    """Quotient complex faces -> darts/edges -> vertices.

    ``s`` must pick one dart per edge orbit of ``h``; the qubits are the
    remaining n - |edges| darts.
    """
    if s.kind != PER_EDGE:
        raise SpecialDartError(f"face codes need a {PER_EDGE} special set, got {s.kind}")
    special_darts(h, s.darts, PER_EDGE)
    return _quotient_code(h, s, FACE)


def edge_code(h: Hypermap, s: SpecialDarts) -> QuotientCode:
    """Quotient complex edges -> darts/faces -> vertices.

    The mirror of :func:`face_code` with edges and faces interchanged:
    ``s`` picks one dart per face orbit and the qubits are the remaining
    n - |faces| darts.
    """
    if s.kind != PER_FACE:
        raise SpecialDartError(f"edge codes need a {PER_FACE} special set, got {s.kind}")
    special_darts(h, s.darts, PER_FACE)
    return _quotient_code(h, s, EDGE)


def full_code(h: Hypermap) -> QuotientCode:
    """The unquotiented complex as a code: every dart is a qubit.

    No special darts are needed, and the logical count exceeds the face
    code's by |edges| - 1.
    """
    raw = raw_complex(h)
    return QuotientCode(
        kind=FULL,
        special=None,
        qubit_labels=raw.dart_labels,
        boundary2=raw.d2,
        boundary1=raw.d1,
        z_labels=raw.face_labels,
        x_labels=raw.vertex_labels,
    )
