"""Reduction of a face code to a surface-code cell complex.

The cell complex keeps the hypermap's vertices as 0-cells, one 1-cell per
non-special dart, and one 2-cell per face.  The 2-cell/1-cell incidence
is counted over the natural numbers: a face meets a 1-cell once for the
dart itself and once more through the expansion of any special dart whose
edge contains it, and a 1-cell hit twice by the same face records 2.
Those counts cancel mod 2 down to the face code's boundary matrix, while
their row totals witness the closed-surface condition: every 1-cell must
be traversed exactly twice overall.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import chain, gf2
from .chain import _endpoint_matrix, expansion_counts
from .gf2 import BitMatrix
from .hypermap import (
    PER_EDGE,
    Hypermap,
    SpecialDartError,
    SpecialDarts,
    euler_characteristic,
    special_darts,
)


@dataclass(frozen=True)
class CellComplex:
    """A 2-dimensional cell complex with natural-number 2->1 incidence.

    ``zero_cells`` are vertex orbit minima, ``one_cells`` non-special
    dart labels, ``two_cells`` face orbit minima (all 0-based).
    ``incidence21`` has one row per 1-cell and one column per 2-cell;
    ``incidence10`` is 0-cells x 1-cells over GF(2).
    """

    zero_cells: tuple[int, ...]
    one_cells: tuple[int, ...]
    two_cells: tuple[int, ...]
    incidence21: tuple[tuple[int, ...], ...]
    incidence10: BitMatrix

    @property
    def euler_characteristic(self) -> int:
        return len(self.zero_cells) - len(self.one_cells) + len(self.two_cells)

    def incidence21_mod2(self) -> BitMatrix:
        bits = tuple(
            sum(1 << j for j, c in enumerate(row) if c & 1) for row in self.incidence21
        )
        return BitMatrix(len(self.one_cells), len(self.two_cells), bits)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class SurfaceReport:
    """Per-invariant validation outcome for a cell complex."""

    checks: tuple[CheckResult, ...]
    euler_characteristic: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [f"euler-characteristic: {self.euler_characteristic}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            suffix = f" ({c.detail})" if c.detail else ""
            lines.append(f"{c.name}: {status}{suffix}")
        lines.append("surface-validation: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def reduce_to_surface(h: Hypermap, s: SpecialDarts) -> CellComplex:
    """Build the surface-code cell complex of the face code of (h, s).

    The mod-2 projection of the result is exactly the face code: same
    boundary matrices, hence the same stabilizer code and homology.
    """
    if s.kind != PER_EDGE:
        raise SpecialDartError(f"surface reduction needs a {PER_EDGE} special set, got {s.kind}")
    special_darts(h, s.darts, PER_EDGE)
    qubits = tuple(i for i in range(h.n) if i not in s.darts)
    return CellComplex(
        zero_cells=tuple(min(o) for o in h.vertices),
        one_cells=qubits,
        two_cells=tuple(min(o) for o in h.faces),
        incidence21=expansion_counts(h, s),
        incidence10=_endpoint_matrix(h, qubits),
    )


def validate_surface(c: CellComplex, h: Hypermap | None = None,
                     s: SpecialDarts | None = None) -> SurfaceReport:
    """Check the cell-complex invariants; failures become report entries.

    Standalone checks: every 1-cell is traversed exactly twice in total,
    the two incidence maps compose to zero mod 2, and the Euler
    characteristic is even.  Given the source hypermap and special set,
    additionally check that the mod-2 complex reproduces the face code
    and that the Euler characteristic matches the hypermap's.
    """
    checks = []

    bad_closure = [
        (c.one_cells[i], total)
        for i, row in enumerate(c.incidence21)
        if (total := sum(row)) != 2
    ]
    checks.append(CheckResult(
        "one-cell-closure",
        not bad_closure,
        "" if not bad_closure else "1-cells with incidence != 2: " + ", ".join(
            f"{dart + 1} (total {total})" for dart, total in bad_closure),
    ))

    product = gf2.multiply(c.incidence10, c.incidence21_mod2())
    checks.append(CheckResult(
        "chain-condition",
        gf2.is_zero(product),
        "" if gf2.is_zero(product) else "incidence10 * incidence21 != 0 mod 2",
    ))

    chi = c.euler_characteristic
    checks.append(CheckResult(
        "euler-even", chi % 2 == 0, "" if chi % 2 == 0 else f"chi = {chi} is odd"))

    if h is not None and s is not None:
        code = chain.face_code(h, s)
        z_ok = c.incidence21_mod2() == code.boundary2
        checks.append(CheckResult(
            "face-code-z-match", z_ok,
            "" if z_ok else "incidence21 mod 2 differs from the face-code boundary"))
        x_ok = c.incidence10 == code.boundary1
        checks.append(CheckResult(
            "face-code-x-match", x_ok,
            "" if x_ok else "incidence10 differs from the face-code vertex boundary"))
        chi_ok = chi == euler_characteristic(h)
        checks.append(CheckResult(
            "euler-match", chi_ok,
            "" if chi_ok else f"complex chi {chi} != hypermap chi {euler_characteristic(h)}"))

    return SurfaceReport(checks=tuple(checks), euler_characteristic=chi)
