from dataclasses import replace

import pytest

from hypermap_codes import (
    PER_EDGE,
    PER_FACE,
    Hypermap,
    SpecialDartError,
    assemble,
    default_special_darts,
    dual,
    euler_characteristic,
    face_code,
    from_strings,
    identity,
    rank,
    reduce_to_surface,
    special_darts,
    transpose,
    validate_surface,
)

HZ_ROWS = ["100001", "111010", "010111", "001100"]


def test_reduce_torus(torus8):
    s = special_darts(torus8, {1, 4}, PER_EDGE)
    c = reduce_to_surface(torus8, s)
    assert len(c.zero_cells) == 2
    assert len(c.one_cells) == 6
    assert len(c.two_cells) == 4
    assert c.euler_characteristic == 0
    assert c.incidence21_mod2() == transpose(from_strings(HZ_ROWS))
    assert validate_surface(c, torus8, s).passed


def test_reduce_single_dart():
    h = Hypermap(identity(1), identity(1))
    c = reduce_to_surface(h, default_special_darts(h, PER_EDGE))
    assert (len(c.zero_cells), len(c.one_cells), len(c.two_cells)) == (1, 0, 1)
    assert c.euler_characteristic == 2
    assert validate_surface(c, h, default_special_darts(h, PER_EDGE)).passed


def test_reduce_rejects_per_face_set(torus8):
    with pytest.raises(SpecialDartError):
        reduce_to_surface(torus8, default_special_darts(torus8, PER_FACE))


def test_every_one_cell_has_incidence_two(corpus):
    for h in corpus:
        c = reduce_to_surface(h, default_special_darts(h, PER_EDGE))
        assert all(sum(row) == 2 for row in c.incidence21)


def test_reduction_matches_face_code(corpus):
    for h in corpus[:150]:
        s = default_special_darts(h, PER_EDGE)
        c = reduce_to_surface(h, s)
        q = face_code(h, s)
        assert c.incidence21_mod2() == q.boundary2
        assert c.incidence10 == q.boundary1


def test_homology_dimension_equals_logical_count(corpus):
    for h in corpus[:150]:
        s = default_special_darts(h, PER_EDGE)
        c = reduce_to_surface(h, s)
        hom = len(c.one_cells) - rank(c.incidence10) - rank(c.incidence21_mod2())
        assert hom == assemble(face_code(h, s)).k


def test_euler_characteristic_matches_hypermap(corpus):
    for h in corpus:
        c = reduce_to_surface(h, default_special_darts(h, PER_EDGE))
        assert c.euler_characteristic == euler_characteristic(h)


def test_validation_passes_on_corpus(corpus):
    for h in corpus:
        s = default_special_darts(h, PER_EDGE)
        report = validate_surface(reduce_to_surface(h, s), h, s)
        assert report.passed, report.render()


def test_validation_catches_missing_incidence(torus8):
    s = special_darts(torus8, {1, 4}, PER_EDGE)
    c = reduce_to_surface(torus8, s)
    rows = [list(r) for r in c.incidence21]
    target = next(
        (i, j) for i, row in enumerate(rows) for j, v in enumerate(row) if v)
    rows[target[0]][target[1]] -= 1
    broken = replace(c, incidence21=tuple(tuple(r) for r in rows))
    report = validate_surface(broken)
    closure = next(ch for ch in report.checks if ch.name == "one-cell-closure")
    assert not closure.passed
    assert str(c.one_cells[target[0]] + 1) in closure.detail


def test_validation_report_renders(torus8):
    s = special_darts(torus8, {1, 4}, PER_EDGE)
    report = validate_surface(reduce_to_surface(torus8, s), torus8, s)
    text = report.render()
    assert "euler-characteristic: 0" in text
    assert "surface-validation: PASS" in text


def test_reduction_of_dual_with_shared_special_set(corpus):
    # edges of the dual are the edges of the original, so the same
    # per-edge set works for both reductions
    for h in corpus[:100]:
        s = default_special_darts(h, PER_EDGE)
        d = dual(h)
        sd = special_darts(d, s.darts, PER_EDGE)
        report = validate_surface(reduce_to_surface(d, sd), d, sd)
        assert report.passed
