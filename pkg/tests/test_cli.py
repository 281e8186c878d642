import json
from pathlib import Path

import qhopf
from qhopf.cli import main
from qhopf.structfile import load_entry

DATA = Path(qhopf.__file__).parent / "data"


def path(name):
    return str(DATA / f"{name}.qh")


def corrupt(tmp_path, name, mutate):
    doc = json.loads((DATA / f"{name}.qh").read_text())
    mutate(doc)
    out = tmp_path / f"{name}-corrupt.qh"
    out.write_text(json.dumps(doc))
    return str(out)


def flip_sign(rows, idx):
    text = rows[idx][-1]
    rows[idx][-1] = text[1:] if text.startswith("-") else "-" + text


# -- verify -----------------------------------------------------------------


def test_verify_all_passes(capsys):
    assert main(["verify", path("z2-cocycle"), "--checks", "all"]) == 0
    out = capsys.readouterr().out
    assert "RESULT: PASS" in out


def test_verify_quasitriangular_entry():
    assert main(["verify", path("sweedler-twisted"), "--checks",
                 "axioms,qtri,qybe,identities"]) == 0


def test_verify_corrupted_pentagon(tmp_path, capsys):
    bad = corrupt(tmp_path, "z2-cocycle",
                  lambda doc: flip_sign(doc["phi"], 3))
    assert main(["verify", bad, "--checks", "axioms", "--json"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert not report["passed"]
    failing = [c["id"] for r in report["reports"] for c in r["checks"]
               if not c["passed"]]
    assert any(c in ("pentagon", "coassociator-invertible") for c in failing)


def test_verify_names_the_pentagon(tmp_path, capsys):
    """A coassociator of the form 1 + c p- (x) p- (x) p- is invertible and
    counital for c != -1, but satisfies the pentagon only for c in {0, -2};
    at c = 1 the pentagon is the one check that fails."""
    from qhopf.catalog import CatalogEntry
    from qhopf.graded import TensorElement
    from qhopf.scalars import QQ
    from qhopf.structfile import save_entry

    entry = load_entry(path("z2-cocycle"))
    H = entry.structure
    A = H.algebra
    pm = A.element({"1": A.field.from_rational(QQ(1, 2)),
                    "g": A.field.from_rational(QQ(-1, 2))})
    cube = TensorElement.of(pm, pm, pm)
    phi = H.unit_tensor(3) + cube
    phi_inv = H.unit_tensor(3) - cube.scale(A.field.from_rational(QQ(1, 2)))
    bad = CatalogEntry("pentagon-breaker",
                       H.with_data(phi=phi, phi_inv=phi_inv), {}, {})
    target = tmp_path / "pentagon-breaker.qh"
    save_entry(bad, str(target))
    assert main(["verify", str(target), "--checks", "axioms", "--json"]) == 1
    report = json.loads(capsys.readouterr().out)
    failing = [c["id"] for r in report["reports"] for c in r["checks"]
               if not c["passed"]]
    assert "pentagon" in failing
    assert "coassociator-invertible" not in failing
    assert "counit-coassociator" not in failing


def test_verify_bad_scalar_token(tmp_path, capsys):
    def mutate(doc):
        doc["beta"]["1"] = "1/"
    bad = corrupt(tmp_path, "z2-group", mutate)
    assert main(["verify", bad]) == 2
    assert "position" in capsys.readouterr().err


def test_verify_unknown_check(capsys):
    assert main(["verify", path("z2-group"), "--checks", "nonsense"]) == 2


def test_verify_missing_file(capsys):
    assert main(["verify", "does-not-exist.qh"]) == 2


def test_verify_json_deterministic(capsys):
    assert main(["verify", path("grassmann-theta"), "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", path("grassmann-theta"), "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second


# -- casimir -----------------------------------------------------------------


def test_casimir_u_prints_g(capsys):
    assert main(["casimir", path("z2-group"), "--kind", "u", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["element"] == {"g": "1"}
    assert doc["inverse"] == {"g": "1"}
    assert doc["checks"]["conjugates-antipode-squared"]


def test_casimir_c1_from_beta(capsys):
    assert main(["casimir", path("z2-cocycle"), "--kind", "c1",
                 "--source", "beta", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["element"] == {"1": "1"}


def test_casimir_c2_from_alpha(capsys):
    assert main(["casimir", path("sweedler-twisted"), "--kind", "c2",
                 "--source", "alpha", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["element"] == {"1": "1"}


def test_casimir_cm(capsys):
    assert main(["casimir", path("sweedler-h4"), "--kind", "cm", "--power", "0",
                 "--rep", "regular", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["checks"]["central"]


def test_casimir_quadratic(capsys):
    assert main(["casimir", path("z2-group"), "--kind", "quadratic",
                 "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["c1"] == {"1": "1"}  # beta, since R^T R = 1 (x) 1


def test_casimir_source_required(capsys):
    assert main(["casimir", path("z2-group"), "--kind", "c1"]) == 2


def test_casimir_needs_r(capsys):
    assert main(["casimir", path("z2-cocycle"), "--kind", "u"]) == 2


def test_verify_qtri_needs_r(capsys):
    assert main(["verify", path("z2-cocycle"), "--checks", "qtri"]) == 2
    assert "R-matrix" in capsys.readouterr().err


# -- twist -------------------------------------------------------------------


def test_twist_writes_verified_file(tmp_path, capsys):
    out = tmp_path / "twisted.qh"
    assert main(["twist", path("sweedler-h4"), "--twistor", "Ft",
                 "--out", str(out), "--verify-invariance", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["invariance"]["passed"]
    entry = load_entry(str(out))
    expected = load_entry(path("sweedler-twisted"))
    assert entry.structure == expected.structure
    assert main(["verify", str(out)]) == 0


def test_twist_by_identity_is_identity(tmp_path):
    out = tmp_path / "same.qh"
    assert main(["twist", path("grassmann-theta"), "--twistor", "identity",
                 "--out", str(out)]) == 0
    twisted = load_entry(str(out))
    original = load_entry(path("grassmann-theta"))
    assert twisted.structure == original.structure


def test_twist_z2_reports_u_invariance(capsys):
    assert main(["twist", path("z2-group"), "--twistor", "pminus",
                 "--verify-invariance", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    u_checks = [c for c in doc["invariance"]["checks"] if c["name"] == "u"]
    assert u_checks and u_checks[0]["twist_invariant"]
    assert u_checks[0]["element"] == {"g": "1"}


def test_twist_unknown_twistor(capsys):
    assert main(["twist", path("z2-group"), "--twistor", "nope"]) == 2


# -- center ------------------------------------------------------------------


def test_center_command(capsys):
    assert main(["center", path("sweedler-h4"), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["even"] == [{"1": "1"}]
    assert doc["odd"] == []


def test_center_super_entry(capsys):
    assert main(["center", path("grassmann-theta"), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["even"] == [{"1": "1"}] and doc["odd"] == [{"th": "1"}]
