import json
import subprocess
import sys
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

X_FAN = {
    "ambient_dim": 3,
    "rays": [
        {"direction": [1, 0, 1], "weight": 1},
        {"direction": [-1, 0, 1], "weight": 1},
        {"direction": [0, 1, 1], "weight": 1},
        {"direction": [0, -1, 1], "weight": 1},
        {"direction": [0, 0, -1], "weight": 4},
    ],
}
Y_FAN = {
    "ambient_dim": 2,
    "rays": [
        {"direction": [1, 1], "weight": 1},
        {"direction": [-1, 1], "weight": 2},
        {"direction": [1, -3], "weight": 1},
    ],
}


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "tropfan.cli", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture
def fan_files(tmp_path):
    x = tmp_path / "x.json"
    y = tmp_path / "y.json"
    x.write_text(json.dumps(X_FAN))
    y.write_text(json.dumps(Y_FAN))
    return str(x), str(y)


class TestCheck:
    def test_balanced_fan(self, fan_files):
        x, _ = fan_files
        code, out, _ = run("check", x)
        assert code == 0
        assert "balanced: true" in out
        assert "ray 5: direction [0, 0, -1] weight 4" in out

    def test_unbalanced_single_ray(self, tmp_path):
        p = tmp_path / "one.json"
        p.write_text(json.dumps({"ambient_dim": 2,
                                 "rays": [{"direction": [1, 0], "weight": 1}]}))
        code, out, _ = run("check", str(p))
        assert code == 0
        assert "balanced: false" in out

    def test_duplicate_direction_rejected(self, tmp_path):
        p = tmp_path / "dup.json"
        p.write_text(json.dumps({"ambient_dim": 2,
                                 "rays": [{"direction": [1, 0], "weight": 1},
                                          {"direction": [2, 0], "weight": 1}]}))
        code, _, err = run("check", str(p))
        assert code == 2
        assert "duplicate" in err

    def test_malformed_json(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{not json")
        code, _, err = run("check", str(p))
        assert code == 2 and err


class TestEvalmap:
    def test_reference_matrices(self, fan_files):
        x, y = fan_files
        code, out, _ = run("evalmap", x)
        assert code == 0
        assert json.loads(out) == [[1, -1, 0, 0, 0], [0, 0, 1, -1, 0],
                                   [1, 1, 1, 1, -4]]
        code, out, _ = run("evalmap", y)
        assert code == 0
        assert json.loads(out) == [[1, -2, 1], [1, 2, -3]]

    def test_line_fan(self, tmp_path):
        p = tmp_path / "line.json"
        p.write_text(json.dumps({"ambient_dim": 1,
                                 "rays": [{"direction": [1], "weight": 1},
                                          {"direction": [-1], "weight": 1}]}))
        code, out, _ = run("evalmap", str(p))
        assert code == 0 and json.loads(out) == [[1, -1]]


class TestHoms:
    def test_full_target_golden(self, fan_files):
        x, _ = fan_files
        code, out, _ = run("homs", x, "full:3")
        assert code == 0
        assert out == (DATA / "golden_homs_full.jsonl").read_text()

    def test_lattice_target_golden(self, fan_files, tmp_path):
        x, _ = fan_files
        gens = tmp_path / "gens.json"
        gens.write_text("[[1,-2,1],[1,2,-3]]")
        code, out, _ = run("homs", x, str(gens))
        assert code == 0
        assert out == (DATA / "golden_homs_lattice.jsonl").read_text()

    def test_fan_as_target(self, fan_files):
        x, y = fan_files
        code, out, _ = run("homs", x, y)
        assert code == 0
        assert out == (DATA / "golden_homs_lattice.jsonl").read_text()

    def test_matrix_as_source(self, tmp_path):
        src = tmp_path / "mf.json"
        src.write_text(json.dumps([[1, -1, 0, 0, 0], [0, 0, 1, -1, 0],
                                   [1, 1, 1, 1, -4]]))
        code, out, _ = run("homs", str(src), "full:3")
        assert code == 0
        assert out == (DATA / "golden_homs_full.jsonl").read_text()

    def test_expand(self, fan_files, tmp_path):
        x, _ = fan_files
        gens = tmp_path / "gens.json"
        gens.write_text("[[1,-2,1],[1,2,-3]]")
        code, out, _ = run("homs", x, str(gens), "--expand", "8")
        assert code == 0
        lines = [json.loads(l) for l in out.splitlines()]
        assert lines[0] == {"kind": "zero"}
        mats = [tuple(tuple(r) for r in l["matrix"]) for l in lines[1:]]
        assert len(mats) == len(set(mats))
        # families with modulus 4 contribute s in {4, 8}; modulus 2 adds
        # s in {2, 4, 6, 8}; 8 bases * 2 + 4 bases * 4 = 32 matrices
        assert len(mats) == 32

    def test_trivial_source_zero_only(self, tmp_path):
        src = tmp_path / "mf.json"
        src.write_text("[[0],[0]]")
        code, out, _ = run("homs", str(src), "full:1")
        assert code == 0
        assert out.strip() == '{"kind": "zero"}'

    def test_inexhaustive_exit_code(self, tmp_path):
        src = tmp_path / "mf.json"
        src.write_text("[[1,-1]]")
        code, out, _ = run("homs", str(src), "full:3")
        assert code == 3
        kinds = [json.loads(l)["kind"] for l in out.splitlines()]
        assert "cone" in kinds

    def test_jobs_byte_identical(self, fan_files):
        x, y = fan_files
        _, serial, _ = run("homs", x, y)
        _, parallel, _ = run("homs", x, y, "--jobs", "2")
        assert serial == parallel

    def test_bad_target_spec(self, fan_files):
        x, _ = fan_files
        code, _, err = run("homs", x, "full:three")
        assert code == 2 and err


class TestMorphisms:
    def test_reference_golden(self, fan_files):
        x, y = fan_files
        code, out, _ = run("morphisms", y, x)
        assert code == 0
        assert out == (DATA / "golden_morphisms.jsonl").read_text()

    def test_identity_family_present(self, tmp_path):
        p = tmp_path / "line.json"
        p.write_text(json.dumps({"ambient_dim": 1,
                                 "rays": [{"direction": [1], "weight": 1},
                                          {"direction": [-1], "weight": 1}]}))
        code, out, _ = run("morphisms", str(p), str(p))
        assert code == 0
        bases = [l["base_T"] for l in map(json.loads, out.splitlines())
                 if l["kind"] == "family"]
        assert [[1]] in bases and [[-1]] in bases

    def test_expand(self, fan_files):
        x, y = fan_files
        code, out, _ = run("morphisms", y, x, "--expand", "2")
        assert code == 0
        lines = [json.loads(l) for l in out.splitlines()]
        assert lines[0] == {"kind": "zero"}
        assert len(lines) == 1 + 24  # 12 families, parameters 1 and 2

    def test_expand_completes_cone_records(self, fan_files, tmp_path):
        _, y = fan_files
        line = tmp_path / "line.json"
        line.write_text(json.dumps({"ambient_dim": 1,
                                    "rays": [{"direction": [1], "weight": 1},
                                             {"direction": [-1], "weight": 1}]}))
        code, out, _ = run("morphisms", y, str(line))
        assert code == 3  # three target slots over opposite columns
        code, out, _ = run("morphisms", y, str(line), "--expand", "8")
        assert code == 0
        mats = [l["matrix"] for l in map(json.loads, out.splitlines())
                if l["kind"] == "matrix"]
        assert mats
        # soundness: each induced image matrix T * MG must have zero row sums
        MG = [[1, -2, 1], [1, 2, -3]]
        for T in mats:
            M = [sum(T[0][j] * MG[j][b] for j in range(2)) for b in range(3)]
            assert sum(M) == 0


class TestWitness:
    def test_off_support_point(self, fan_files):
        x, _ = fan_files
        code, out, _ = run("witness", x, "1,1,0")
        assert code == 0
        data = json.loads(out)
        assert set(data) == {"f", "g", "point", "K"}
        assert data["point"] == ["1", "1", "0"]

    def test_rational_point(self, fan_files):
        x, _ = fan_files
        code, out, _ = run("witness", x, "1/2,1/3,-5")
        assert code == 0
        assert json.loads(out)["point"] == ["1/2", "1/3", "-5"]

    def test_point_on_ray(self, fan_files):
        x, _ = fan_files
        code, out, _ = run("witness", x, "2,0,2")
        assert code == 1
        assert out.strip() == "in-support"

    def test_origin(self, fan_files):
        x, _ = fan_files
        code, out, _ = run("witness", x, "0,0,0")
        assert code == 1
        assert out.strip() == "in-support"

    def test_wrong_dimension(self, fan_files):
        x, _ = fan_files
        code, _, err = run("witness", x, "1,2")
        assert code == 2 and err


class TestPolyeq:
    def test_equal_on_fan(self, tmp_path):
        p = tmp_path / "f.json"
        p.write_text(json.dumps({"ambient_dim": 2,
                                 "rays": [{"direction": [1, 0], "weight": 1},
                                          {"direction": [1, 1], "weight": 1}]}))
        code, out, _ = run("polyeq", "--on-fan", str(p), "x1 + x2", "x1")
        assert code == 0 and out.strip() == "equal"

    def test_unequal_on_space_with_certificate(self):
        code, out, _ = run("polyeq", "--on-space", "2", "x1 + x2", "x1")
        assert code == 1
        lines = out.splitlines()
        assert lines[0] == "unequal"
        from fractions import Fraction
        point = [Fraction(c) for c in json.loads(lines[1])]
        left = max(point[0], point[1])
        assert left != point[0]

    def test_reflexive(self):
        code, out, _ = run("polyeq", "--on-space", "3", "x1*x3^-2 + 0",
                           "x1*x3^-2 + 0")
        assert code == 0 and out.strip() == "equal"

    def test_syntax_error(self):
        code, _, err = run("polyeq", "--on-space", "2", "x1 +", "x1")
        assert code == 2 and err

    def test_exactly_one_mode(self, fan_files):
        x, _ = fan_files
        code, _, err = run("polyeq", "--on-fan", x, "--on-space", "2", "x1", "x1")
        assert code == 2 and err


def test_byte_determinism_across_runs(fan_files):
    x, y = fan_files
    outs = {run("morphisms", y, x)[1] for _ in range(3)}
    assert len(outs) == 1
