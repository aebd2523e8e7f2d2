import json
import subprocess
import sys
from fractions import Fraction

from g2kit import jsonio
from g2kit.cli import main
from g2kit.forms import ExteriorForm
from g2kit.threeforms import elliptic_normal_form, split_normal_form


def run_cli(args):
    proc = subprocess.run(
        [sys.executable, "-m", "g2kit.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc


def test_verify_structure_passes(tmp_path):
    out = tmp_path / "report.json"
    proc = run_cli(["verify-structure", "--report", str(out)])
    assert proc.returncode == 0
    report = json.loads(out.read_text())
    assert report["pass"]
    assert all(set(c) >= {"check", "pass"} for c in report["checks"])


def test_verify_structure_mutation_fails():
    proc = run_cli(["verify-structure", "--mutate", "dkappa-coeff"])
    assert proc.returncode == 1
    report = json.loads(proc.stdout)
    assert not report["pass"]


def test_classify_commands(tmp_path):
    for form, tag in ((split_normal_form(), "split"), (elliptic_normal_form(), "elliptic"),
                      (ExteriorForm.zero(6, 3), "degenerate")):
        path = tmp_path / f"{tag}.json"
        path.write_text(json.dumps(jsonio.form_to_obj(form)))
        proc = run_cli(["classify-3form", "--input", str(path)])
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["tag"] == tag
        if tag == "elliptic":
            assert "J" in report


def test_classify_with_supplied_volume(tmp_path):
    """Reversing the supplied volume form reverses the recovered structure."""
    from g2kit.threeforms import standard_volume_form

    rho = tmp_path / "rho.json"
    rho.write_text(json.dumps(jsonio.form_to_obj(elliptic_normal_form())))
    vol = tmp_path / "vol.json"
    vol.write_text(json.dumps(jsonio.form_to_obj((-1) * standard_volume_form())))
    plus = json.loads(run_cli(["classify-3form", "--input", str(rho)]).stdout)
    minus = json.loads(
        run_cli(["classify-3form", "--input", str(rho), "--vol", str(vol)]).stdout
    )
    flip = [[str(-Fraction(x)) for x in row] for row in minus["J"]]
    assert plus["J"] == flip


def test_sphere_suite_sampled():
    proc = run_cli(["sphere-suite", "--samples", "4", "--seed", "3"])
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["pass"]
    sampled = [c for c in report["checks"] if c["check"] == "sampled_points"][0]
    assert sampled["max_defect"] < 1e-10


def test_sphere_suite_exact_only():
    proc = run_cli(["sphere-suite", "--samples", "0"])
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["mode"] == "exact"
    assert report["pass"]


def test_sphere_suite_mutation_detected():
    proc = run_cli(["sphere-suite", "--samples", "2", "--seed", "3", "--mutate", "upsilon-scale"])
    assert proc.returncode == 1


def test_sphere_suite_requires_seed():
    proc = run_cli(["sphere-suite", "--samples", "2"])
    assert proc.returncode == 2


def test_tol_requires_float_mode():
    proc = run_cli(["verify-structure", "--tol", "1e-8"])
    assert proc.returncode == 2


def test_chern_families():
    proc = run_cli(["chern", "--family", "standard"])
    report = json.loads(proc.stdout)
    assert report["residual"] == {"re": "-1", "im": "0"}
    assert report["H_signature"] == [3, 0]
    assert report["orientation"] == "+1"
    assert "obstruction" in report["verdict"]

    proc = run_cli(["chern", "--family", "flip23"])
    report = json.loads(proc.stdout)
    assert report["residual"] == {"re": "0", "im": "0"}
    assert report["H_signature"] == [1, 2]
    assert "index (1,2)" in report["verdict"]


def test_chern_rejects_bad_j(tmp_path):
    bad = {
        "mode": "exact",
        "point": ["1", "0", "0", "0", "0", "0", "0"],
        "J": [["1" if i == j else "0" for j in range(7)] for i in range(7)],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    proc = run_cli(["chern", "--input", str(path)])
    assert proc.returncode == 2


def test_chern_accepts_valid_j(tmp_path):
    from g2kit.chern import CandidateJ
    from g2kit.sphere import basis_point

    j = CandidateJ.standard(basis_point(1))
    doc = {
        "mode": "exact",
        "point": ["1", "0", "0", "0", "0", "0", "0"],
        "J": [[str(Fraction(x)) for x in row] for row in j.matrix],
    }
    path = tmp_path / "ok.json"
    path.write_text(json.dumps(doc))
    proc = run_cli(["chern", "--input", str(path)])
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["family"] == "from-input"
    assert report["H_signature"] == [3, 0]
    # gauge-dependent residual is nonzero; the normalized magnitude agrees
    assert report["residual"] != {"re": "0", "im": "0"}
    assert report["residual_normalized_abs"] > 0.01


def test_chern_rejects_off_sphere_point(tmp_path):
    doc = {"mode": "float", "point": [2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]}
    path = tmp_path / "off.json"
    path.write_text(json.dumps(doc))
    proc = run_cli(["chern", "--input", str(path)])
    assert proc.returncode == 2
    assert "input error" in proc.stderr


def test_chern_rejects_bad_frame(tmp_path):
    doc = {
        "mode": "exact",
        "point": ["1", "0", "0", "0", "0", "0", "0"],
        "frame": [["2" if i == j else "0" for j in range(7)] for i in range(7)],
    }
    path = tmp_path / "badframe.json"
    path.write_text(json.dumps(doc))
    proc = run_cli(["chern", "--input", str(path)])
    assert proc.returncode == 2


def test_chern_float_point(tmp_path):
    """Family structures at a float sphere point: verdicts survive rounding."""
    import math

    u = [1.0, 2.0, -1.0, 0.5, 3.0, -2.0, 1.5]
    n = math.sqrt(sum(x * x for x in u))
    doc = {"mode": "float", "point": [x / n for x in u], "frame_seed": 9}
    path = tmp_path / "floatpt.json"
    path.write_text(json.dumps(doc))
    proc = run_cli(["chern", "--input", str(path), "--family", "flip23"])
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["mode"] == "float"
    assert report["H_signature"] == [1, 2]
    assert report["residual_normalized_abs"] < 1e-9
    assert "residual zero" in report["verdict"]


def test_reports_byte_reproducible():
    a = run_cli(["sphere-suite", "--samples", "3", "--seed", "5"]).stdout
    b = run_cli(["sphere-suite", "--samples", "3", "--seed", "5"]).stdout
    assert a == b
    c = run_cli(["sphere-suite", "--samples", "3", "--seed", "5", "--threads", "2"]).stdout
    assert a == c


def test_exit_zero_iff_all_pass():
    report = json.loads(run_cli(["verify-structure"]).stdout)
    assert report["pass"] and all(c["pass"] for c in report["checks"])


def test_main_callable_directly(capsys):
    code = main(["verify-structure"])
    assert code == 0
    out = capsys.readouterr().out
    assert json.loads(out)["pass"]
