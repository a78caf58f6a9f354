import json
import re

import pytest

from hypermap_codes import (
    PER_EDGE,
    CellComplex,
    CssCode,
    Hypermap,
    as_partition,
    assemble,
    default_special_darts,
    export_json,
    export_walsh_dot,
    face_code,
    full_code,
    identity,
    parse_hypermap,
    parse_json,
    random_corpus,
    reduce_to_surface,
    run_verification,
    special_darts,
)
from hypermap_codes.cli import main

from conftest import TORUS8

TORUS_TEXT = TORUS8.read_text()


@pytest.fixture
def torus_file(tmp_path):
    path = tmp_path / "torus.hm"
    path.write_text(TORUS_TEXT)
    return str(path)


@pytest.fixture
def single_dart_file(tmp_path):
    path = tmp_path / "one.hm"
    path.write_text("darts: 1\nalpha: ()\nsigma: ()\n")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_torus(torus_file, capsys):
    code, out, _ = run_cli(capsys, "info", torus_file)
    assert code == 0
    assert "darts: 8" in out
    assert "f1: (1 8)" in out
    assert "euler-characteristic: 0" in out
    assert "genus: 1" in out


def test_info_single_dart(single_dart_file, capsys):
    code, out, _ = run_cli(capsys, "info", single_dart_file)
    assert code == 0
    assert "vertices: 1" in out
    assert "edges: 1" in out
    assert "faces: 1" in out
    assert "genus: 0" in out


def test_code_face_matches_reference(torus_file, capsys):
    code, out, _ = run_cli(capsys, "code", torus_file, "--kind", "face")
    assert code == 0
    assert "n: 6" in out
    assert "k: 2" in out
    assert "111111\n111111" in out
    assert "100001\n111010\n010111\n001100" in out
    assert "Z_f1 = Z1 Z8" in out
    assert "X_v1 = X1 X3 X4 X6 X7 X8" in out


def test_code_special_override(torus_file, capsys):
    code, out, _ = run_cli(capsys, "code", torus_file, "--kind", "face",
                           "--special", "1", "5")
    assert code == 0
    assert "special: 1 5" in out
    assert "qubits: 2 3 4 6 7 8" in out


def test_code_edge_kind_rejects_bad_file_special(torus_file, capsys):
    # the file's special darts {2, 5} are per-edge, not per-face
    code, _, err = run_cli(capsys, "code", torus_file, "--kind", "edge")
    assert code == 3
    assert "special" in err


def test_dual_round_trips(torus_file, capsys):
    code, out, _ = run_cli(capsys, "dual", torus_file)
    assert code == 0
    assert "alpha: (1 2 3 4)(5 6 8 7)" in out
    assert "sigma: (1 8)(2 7)(3 5)(4 6)" in out
    h, _ = parse_hypermap(out)
    assert h.n == 8


def test_tri_dual_and_contrary_run(torus_file, capsys):
    for cmd in ("tri-dual", "contrary"):
        code, out, _ = run_cli(capsys, cmd, torus_file)
        assert code == 0
        parse_hypermap(out)


def test_reduce_command(torus_file, capsys):
    code, out, _ = run_cli(capsys, "reduce", torus_file)
    assert code == 0
    assert "zero-cells: 2" in out
    assert "surface-validation: PASS" in out


def test_distance_command(torus_file, capsys):
    code, out, _ = run_cli(capsys, "distance", torus_file, "--kind", "face")
    assert code == 0
    assert "d_X: 2" in out
    assert "d_Z: 2" in out
    assert "d: 2" in out
    assert "status: exact" in out


def test_distance_budget_exhausted_still_succeeds(torus_file, capsys):
    code, out, _ = run_cli(capsys, "distance", torus_file, "--kind", "face",
                           "--budget", "1")
    assert code == 0
    assert "d: >1" in out
    assert "lower-bound" in out


def test_distance_no_logicals(single_dart_file, capsys):
    code, out, _ = run_cli(capsys, "distance", single_dart_file, "--kind", "face")
    assert code == 0
    assert "status: no-logical-operators" in out


def test_verify_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "verify", "--trials", "40",
                             "--max-darts", "8", "--seed", "7")
    code2, out2, _ = run_cli(capsys, "verify", "--trials", "40",
                             "--max-darts", "8", "--seed", "7")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "verification: PASS" in out1


def test_random_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "random", "--darts", "6", "--seed", "11")
    code2, out2, _ = run_cli(capsys, "random", "--darts", "6", "--seed", "11")
    assert code1 == code2 == 0
    assert out1 == out2
    h, _ = parse_hypermap(out1)
    assert h.n == 6


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.hm"
    bad.write_text("darts: 4\nalpha: (1 9)\nsigma: ()\n")
    code, _, err = run_cli(capsys, "info", str(bad))
    assert code == 2
    assert re.search(r"bad\.hm:2:\d+", err)


def test_missing_file_exit_code(capsys):
    code, _, err = run_cli(capsys, "info", "/nonexistent/x.hm")
    assert code == 2
    assert "cannot read" in err


def test_disconnected_exit_code(tmp_path, capsys):
    bad = tmp_path / "disc.hm"
    bad.write_text("darts: 2\nalpha: ()\nsigma: ()\n")
    code, _, err = run_cli(capsys, "info", str(bad))
    assert code == 3
    assert "not connected" in err


def test_invalid_special_exit_code(torus_file, capsys):
    code, _, err = run_cli(capsys, "code", torus_file, "--kind", "face",
                           "--special", "1", "2")
    assert code == 3
    assert "special" in err


# ---------------------------------------------------------------------------
# DOT export

def dot_adjacency(text):
    vertex_groups: dict[str, set[int]] = {}
    edge_groups: dict[str, set[int]] = {}
    for m in re.finditer(r"(v\d+) -- (e\d+) \[label=\"(\d+)\"\];", text):
        v, e, dart = m.group(1), m.group(2), int(m.group(3)) - 1
        vertex_groups.setdefault(v, set()).add(dart)
        edge_groups.setdefault(e, set()).add(dart)
    return vertex_groups, edge_groups


def test_walsh_dot_of_torus(torus8):
    text = export_walsh_dot(torus8)
    assert text.count("shape=circle") == 2
    assert text.count("shape=square") == 2
    assert len(re.findall(r"--", text)) == 8


def test_walsh_dot_single_dart():
    h = Hypermap(identity(1), identity(1))
    text = export_walsh_dot(h)
    assert text.count("shape=circle") == 1
    assert text.count("shape=square") == 1
    assert 'v1 -- e1 [label="1"];' in text


def test_walsh_dot_recovers_orbits(corpus):
    for h in corpus[:50]:
        vg, eg = dot_adjacency(export_walsh_dot(h))
        assert frozenset(map(frozenset, vg.values())) == as_partition(h.vertices)
        assert frozenset(map(frozenset, eg.values())) == as_partition(h.edges)


def test_export_dot_cli(torus_file, capsys):
    code, out, _ = run_cli(capsys, "export", torus_file, "--format", "dot")
    assert code == 0
    assert out.startswith("graph walsh {")


# ---------------------------------------------------------------------------
# JSON export

def test_export_json_code_embeds_matrices(torus8):
    code = assemble(face_code(torus8, special_darts(torus8, {1, 4}, PER_EDGE)))
    doc = json.loads(export_json(code))
    assert doc["indexing"] == "1-based"
    assert doc["hx"]["rows"] == ["111111", "111111"]
    assert doc["hz"]["rows"] == ["100001", "111010", "010111", "001100"]
    assert doc["qubits"] == [1, 3, 4, 6, 7, 8]


def test_export_json_empty_code():
    h = Hypermap(identity(1), identity(1))
    doc = json.loads(export_json(assemble(face_code(h, default_special_darts(h, PER_EDGE)))))
    assert doc["n"] == 0
    assert doc["k"] == 0
    assert doc["qubits"] == []


def test_json_round_trip_random_artifacts():
    for i, h in enumerate(random_corpus(30, 8, seed=13)):
        assert parse_json(export_json(h)) == h
        s = default_special_darts(h, PER_EDGE)
        code = assemble(face_code(h, s)) if i % 2 else assemble(full_code(h))
        assert parse_json(export_json(code)) == code
        complex_ = reduce_to_surface(h, s)
        assert parse_json(export_json(complex_)) == complex_


def test_parse_json_rejects_tampered_k(torus8):
    code = assemble(face_code(torus8, default_special_darts(torus8, PER_EDGE)))
    doc = json.loads(export_json(code))
    doc["k"] += 1
    with pytest.raises(ValueError):
        parse_json(json.dumps(doc))


def test_export_json_cli_round_trip(torus_file, capsys):
    code, out, _ = run_cli(capsys, "export", torus_file, "--format", "json",
                           "--what", "code", "--kind", "face")
    assert code == 0
    artifact = parse_json(out)
    assert isinstance(artifact, CssCode)
    assert artifact.n == 6 and artifact.k == 2

    code, out, _ = run_cli(capsys, "export", torus_file, "--format", "json",
                           "--what", "complex")
    assert code == 0
    assert isinstance(parse_json(out), CellComplex)

    code, out, _ = run_cli(capsys, "export", torus_file, "--format", "json")
    assert code == 0
    assert isinstance(parse_json(out), Hypermap)


def test_run_verification_report(corpus):
    report = run_verification(trials=30, max_darts=8, seed=7)
    assert report.passed
    text = report.render()
    assert text == run_verification(trials=30, max_darts=8, seed=7).render()
    assert "face-edge-code-transfer: PASS" in text
