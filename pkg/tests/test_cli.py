import json

from repwalk.cli import main


def run(tmp_path, *argv):
    out = tmp_path / "out.txt"
    code = main([*argv, "--out", str(out)])
    return code, out.read_text() if out.exists() else ""


def test_unknown_flag_usage_error(capsys):
    assert main(["sn-walk", "--n", "3", "--bogus"]) == 2


def test_missing_subcommand_usage_error():
    assert main([]) == 2


def test_capacity_exit_code(tmp_path):
    code, _ = run(tmp_path, "characters", "--n", "20")
    assert code == 3


def test_precondition_exit_code(tmp_path):
    code, _ = run(tmp_path, "sn-walk", "--n", "3", "--r", "-1")
    assert code == 2


def test_determinism_byte_identical(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    for path in (a, b):
        assert main(["sn-sample", "--n", "6", "--r", "3", "--count", "50",
                     "--seed", "9", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_characters_csv(tmp_path):
    code, text = run(tmp_path, "characters", "--n", "3")
    assert code == 0
    lines = text.splitlines()
    assert lines[0].startswith("# repwalk")
    assert "partition,3,2+1,1+1+1" in lines
    assert "2+1,-1,0,2" in lines


def test_characters_json(tmp_path):
    code, text = run(tmp_path, "characters", "--n", "4", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert doc["n"] == 4
    assert len(doc["rows"]) == 5


def test_sn_walk_masses(tmp_path):
    code, text = run(tmp_path, "sn-walk", "--n", "3", "--r", "1")
    assert code == 0
    assert "3,1/3" in text and "2+1,2/3" in text and "1+1+1,0" in text


def test_sn_walk_float_has_error_bound(tmp_path):
    code, text = run(tmp_path, "sn-walk", "--n", "6", "--r", "3", "--float")
    assert code == 0
    assert "float error bound" in text


def test_sn_tv_curve_monotone(tmp_path):
    code, text = run(tmp_path, "sn-tv-curve", "--n", "8", "--rmax", "30")
    assert code == 0
    rows = [line.split(",") for line in text.splitlines()
            if line and not line.startswith("#") and not line.startswith("r,")]
    assert len(rows) == 30
    tvs = [eval_fraction(r[1]) for r in rows]
    assert all(a >= b for a, b in zip(tvs, tvs[1:]))
    bounds = [float(r[2]) for r in rows]
    assert all(float(t) <= b + 1e-15 for t, b in zip(tvs, bounds))


def eval_fraction(text):
    from fractions import Fraction

    return Fraction(text)


def test_sn_cutoff(tmp_path):
    code, text = run(tmp_path, "sn-cutoff", "--n", "8", "--c", "1")
    assert code == 0
    row = [l for l in text.splitlines() if not l.startswith("#")][1].split(",")
    r, bound, tv = int(row[0]), float(row[1]), float(row[2])
    assert r == 17
    assert tv <= bound


def test_sn_rsk(tmp_path):
    code, text = run(tmp_path, "sn-rsk", "--n", "6", "--r", "2", "--count", "5",
                     "--seed", "4")
    assert code == 0
    assert len([l for l in text.splitlines() if not l.startswith("#")]) == 6


def test_sn_moments_agreement(tmp_path):
    code, text = run(tmp_path, "sn-moments", "--n", "6", "--r", "3")
    assert code == 0
    rows = [l.split(",") for l in text.splitlines()
            if l and not l.startswith("#") and not l.startswith("s,")]
    by_s = {}
    for s, method, value, reduced in rows:
        by_s.setdefault(s, set()).add(reduced)
    assert all(len(vals) == 1 for vals in by_s.values())


def test_gl_irreps_output(tmp_path):
    code, text = run(tmp_path, "gl-irreps", "--n", "2", "--q", "2")
    assert code == 0
    assert "1.0:1+1,2,2/3" in text
    assert "2.0:1,1,1/6" in text


def test_gl_counts(tmp_path):
    code, text = run(tmp_path, "gl-counts", "--n", "2", "--q", "2")
    assert code == 0
    assert "0,2" in text and "1,3" in text and "2,1" in text


def test_gl_bound_value(tmp_path):
    code, text = run(tmp_path, "gl-bound", "--n", "4", "--q", "2", "--r", "5")
    assert code == 0
    row = [l for l in text.splitlines() if not l.startswith("#")][1].split(",")
    assert float(row[1]) <= 0.25


def test_gl_lower(tmp_path):
    code, text = run(tmp_path, "gl-lower", "--n", "2", "--q", "2", "--c", "1")
    assert code == 0
    assert "1/6" in text


def test_gl_sample_deterministic(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    for path in (a, b):
        assert main(["gl-sample", "--n", "2", "--q", "2", "--count", "10",
                     "--seed", "5", "--u", "1/2", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert "attempts" in a.read_text()


def test_gl_cycle_index_check(tmp_path):
    code, text = run(tmp_path, "gl-cycle-index", "--q", "2", "--order", "4",
                     "--check")
    assert code == 0
    assert "MISMATCH" not in text
    assert "euler" in text


def test_hsp_json(tmp_path):
    code, text = run(tmp_path, "hsp", "--n", "3", "--gens", "(1 2)")
    assert code == 0
    doc = json.loads(text)
    assert doc["tv"] == "1/6"
    assert doc["subgroup_order"] == 2
    assert {p["class"]: p["intersection"] for p in doc["per_class"]} == {
        "3": 0, "2+1": 1, "1+1+1": 1,
    }


def test_threads_flag_accepted(tmp_path):
    code, text = run(tmp_path, "sn-sample", "--n", "5", "--r", "2",
                     "--count", "8", "--seed", "1", "--threads", "2")
    assert code == 0
    assert len([l for l in text.splitlines() if not l.startswith("#")]) == 9
