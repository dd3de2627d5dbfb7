"""End-to-end tests for the command line interface.

Every test drives ``main(argv)`` directly and inspects the JSON run
report on stdout, the diagnostics on stderr, and the exit code.
"""

import json
from fractions import Fraction as F

import pytest

from polycert.cli import main
from polycert.polyalg import Polynomial
from polycert.systems import LE0, PolySystem, point_from_json, point_to_json
from polycert.ratcore import AlgebraicElement

TWO_CLAUSE = "p cnf 3 2\n1 -2 3 0\n-1 2 3 0\n"
UNSAT_8 = "p cnf 3 8\n" + "\n".join(
    f"{s1}1 {s2}2 {s3}3 0" for s1 in ("", "-") for s2 in ("", "-") for s3 in ("", "-")
) + "\n"


def run(capsys, argv):
    """Invoke the CLI and return (exit code, parsed report or None, stderr)."""
    code = main(argv)
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out.strip() else None
    return code, report, captured.err


def write_json(path, payload):
    path.write_text(json.dumps(payload, indent=2) + "\n")
    return str(path)


def unit_box_with_disc(tmp_path):
    """A [0,1]^2 box plus one nonlinear row 2x^2 + 2y^2 - 1 <= 0."""
    rows = []
    for i in range(2):
        rows.append((-Polynomial.variable(2, i), LE0))
        rows.append((Polynomial.variable(2, i) - 1, LE0))
    disc = Polynomial(2, {(2, 0): F(2), (0, 2): F(2), (0, 0): F(-1)})
    rows.append((disc, LE0))
    sys_ = PolySystem(2, rows)
    return write_json(tmp_path / "system.json", sys_.to_json())


class TestReportShape:
    def test_report_envelope(self, capsys, tmp_path):
        path = unit_box_with_disc(tmp_path)
        pt = write_json(tmp_path / "pt.json", point_to_json([F(1, 3), F(1, 3)]))
        code, report, _ = run(capsys, ["verify", "--system", path, "--point", pt])
        assert code == 0
        assert set(report) == {"subcommand", "inputs", "outputs", "timing_ms", "exact"}
        assert report["subcommand"] == "verify"
        assert report["exact"] is True
        assert isinstance(report["timing_ms"], int)
        digest = report["inputs"]["system"]
        assert digest["path"] == path
        assert len(digest["sha256"]) == 64

    def test_deterministic_apart_from_timing(self, capsys):
        code1, rep1, _ = run(capsys, ["gadget", "--name", "h"])
        code2, rep2, _ = run(capsys, ["gadget", "--name", "h"])
        assert code1 == code2 == 0
        rep1.pop("timing_ms")
        rep2.pop("timing_ms")
        assert rep1 == rep2


class TestVerify:
    def test_feasible_point_exits_zero(self, capsys, tmp_path):
        path = unit_box_with_disc(tmp_path)
        pt = write_json(tmp_path / "pt.json", point_to_json([F(1, 3), F(1, 3)]))
        code, report, err = run(capsys, ["verify", "--system", path, "--point", pt])
        assert code == 0
        assert report["outputs"]["verdict"]["feasible"] is True
        assert err == ""

    def test_violating_point_exits_one_and_names_rows(self, capsys, tmp_path):
        path = unit_box_with_disc(tmp_path)
        pt = write_json(tmp_path / "pt.json", point_to_json([F(2), F(0)]))
        code, report, err = run(capsys, ["verify", "--system", path, "--point", pt])
        assert code == 1
        assert report["outputs"]["verdict"]["feasible"] is False
        assert "point violates rows" in err

    def test_landmark_file_is_accepted_as_point(self, capsys, tmp_path):
        path = unit_box_with_disc(tmp_path)
        wrapped = {"name": "seed", "point": point_to_json([F(0), F(2)])}
        pt = write_json(tmp_path / "lm.json", wrapped)
        code, report, err = run(capsys, ["verify", "--system", path, "--point", pt])
        assert code == 1  # upper box row for x2 is violated
        assert 3 in report["outputs"]["verdict"]["violated"]

    def test_algebraic_point_verifies_in_extension_field(self, capsys, tmp_path):
        rows = [(Polynomial(1, {(2,): F(1), (0,): F(-2)}), LE0)]
        path = write_json(tmp_path / "s.json", PolySystem(1, rows).to_json())
        pt = write_json(
            tmp_path / "p.json", point_to_json([AlgebraicElement.root(2, 2)])
        )
        code, report, _ = run(capsys, ["verify", "--system", path, "--point", pt])
        assert code == 0
        assert report["outputs"]["verdict"]["feasible"] is True


class TestUsageErrors:
    def test_unknown_subcommand(self, capsys):
        code, report, _ = run(capsys, ["frobnicate"])
        assert code == 2
        assert report is None

    def test_no_arguments(self, capsys):
        code, report, _ = run(capsys, [])
        assert code == 2
        assert report is None

    def test_missing_file_prints_error_without_report(self, capsys, tmp_path):
        pt = write_json(tmp_path / "pt.json", point_to_json([F(0)]))
        code, report, err = run(
            capsys, ["verify", "--system", str(tmp_path / "nope.json"), "--point", pt]
        )
        assert code == 2
        assert report is None
        assert err.startswith("error:")

    def test_malformed_json_is_a_usage_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        pt = write_json(tmp_path / "pt.json", point_to_json([F(0)]))
        code, report, err = run(capsys, ["verify", "--system", str(bad), "--point", pt])
        assert code == 2
        assert report is None
        assert "not valid JSON" in err

    def test_point_file_without_values_is_rejected(self, capsys, tmp_path):
        path = unit_box_with_disc(tmp_path)
        pt = write_json(tmp_path / "pt.json", {"coords": ["1/2"]})
        code, report, err = run(capsys, ["verify", "--system", path, "--point", pt])
        assert code == 2
        assert report is None
        assert "point object" in err


class TestGadget:
    def test_system_and_landmarks_inline_by_default(self, capsys):
        code, report, _ = run(capsys, ["gadget", "--name", "socp"])
        assert code == 0
        out = report["outputs"]
        sys_ = PolySystem.from_json(out["system"])
        assert sys_.num_vars == 4
        assert len(sys_.constraints) == 6
        names = [lm["name"] for lm in out["landmarks"]]
        assert "corner" in names
        assert report["inputs"]["name"] == "socp"

    def test_out_files_round_trip_canonically(self, capsys, tmp_path):
        sys_path = tmp_path / "sys.json"
        lm_path = tmp_path / "lms.json"
        code, report, _ = run(
            capsys,
            [
                "gadget", "--name", "badboy", "--param", "N=3",
                "--out", str(sys_path), "--landmarks", str(lm_path),
            ],
        )
        assert code == 0
        out = report["outputs"]
        assert out["system_path"] == str(sys_path)
        on_disk = json.loads(sys_path.read_text())
        reparsed = PolySystem.from_json(on_disk)
        assert reparsed.to_json() == on_disk
        assert "system" not in out
        lms = json.loads(lm_path.read_text())
        assert any(lm["name"] == "near_feasible" for lm in lms)

    def test_param_changes_shape(self, capsys):
        code, report, _ = run(capsys, ["gadget", "--name", "tiny", "--param", "n=5"])
        assert code == 0
        sys_ = PolySystem.from_json(report["outputs"]["system"])
        assert sys_.num_vars == 6
        assert len(sys_.constraints) == 12
        assert report["inputs"]["params"] == {"n": "5"}

    def test_unknown_param_is_usage_error(self, capsys):
        code, report, err = run(capsys, ["gadget", "--name", "tiny", "--param", "m=5"])
        assert code == 2
        assert report is None
        assert "error:" in err

    def test_bad_param_value_is_usage_error(self, capsys):
        code, report, _ = run(capsys, ["gadget", "--name", "tiny", "--param", "n=two"])
        assert code == 2
        assert report is None

    def test_unknown_gadget_name_rejected_by_parser(self, capsys):
        code, report, _ = run(capsys, ["gadget", "--name", "mystery"])
        assert code == 2
        assert report is None

    def test_sigma_param_takes_a_fraction(self, capsys):
        code, report, _ = run(
            capsys, ["gadget", "--name", "unlucky", "--param", "sigma=1/2"]
        )
        assert code == 0
        lms = report["outputs"]["landmarks"]
        star = next(lm for lm in lms if lm["name"] == "z_star")
        assert star["expect_feasible"] is False
        assert star["expect_worst"] == "1/2"


class TestReduce:
    def test_quad_variant_with_sat_witness(self, capsys, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text(TWO_CLAUSE)
        sys_path = tmp_path / "sys.json"
        code, report, err = run(
            capsys,
            [
                "reduce", "--cnf", str(cnf), "--variant", "quad",
                "--witness", "sat", "--out", str(sys_path),
            ],
        )
        assert code == 0
        out = report["outputs"]
        assert out["num_vars"] == 16
        assert out["num_rows"] == 36
        assert out["assignment"] == "000"
        assert out["witness_verdict"]["feasible"] is True

        # the emitted artifacts feed straight back into verify
        pt_path = write_json(tmp_path / "w.json", out["witness"])
        code2, report2, _ = run(
            capsys, ["verify", "--system", str(sys_path), "--point", str(pt_path)]
        )
        assert code2 == 0
        assert report2["outputs"]["verdict"]["feasible"] is True

    def test_unsat_formula_fails_sat_witness_with_verdict(self, capsys, tmp_path):
        cnf = tmp_path / "u.cnf"
        cnf.write_text(UNSAT_8)
        code, report, err = run(
            capsys, ["reduce", "--cnf", str(cnf), "--variant", "quad", "--witness", "sat"]
        )
        assert code == 1
        assert "unsatisfiable" in err
        assert "unsatisfiable" in report["outputs"]["error"]

    def test_always_witness_ignores_satisfiability(self, capsys, tmp_path):
        cnf = tmp_path / "u.cnf"
        cnf.write_text(UNSAT_8)
        code, report, _ = run(
            capsys,
            ["reduce", "--cnf", str(cnf), "--variant", "quad", "--witness", "always"],
        )
        assert code == 0
        assert report["outputs"]["witness_verdict"]["feasible"] is True

    def test_cubic_variant_always_witness_is_algebraic(self, capsys, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text(TWO_CLAUSE)
        code, report, _ = run(
            capsys,
            ["reduce", "--cnf", str(cnf), "--variant", "cubic", "--witness", "always"],
        )
        assert code == 0
        out = report["outputs"]
        assert out["num_vars"] == 10
        assert out["witness"]["e"] == 3
        assert out["witness"]["k"] == 2
        assert out["witness_verdict"]["feasible"] is True
        point = point_from_json(out["witness"])
        assert isinstance(point[-1], AlgebraicElement)

    def test_superopt_eps_witness_reports_violation(self, capsys, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text(TWO_CLAUSE)
        code, report, _ = run(
            capsys,
            [
                "reduce", "--cnf", str(cnf), "--variant", "superopt",
                "--witness", "eps:1/100",
            ],
        )
        assert code == 0
        out = report["outputs"]
        assert out["num_vars"] == 16
        assert "objective" in out
        verdict = out["witness_verdict"]
        assert verdict["feasible"] is False
        assert verdict["violated"] == [33]
        assert F(verdict["worst_violation"]) == F(211695, 2**48)

    def test_unbounded_variant_emits_objective(self, capsys, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text(TWO_CLAUSE)
        code, report, _ = run(
            capsys, ["reduce", "--cnf", str(cnf), "--variant", "unbounded"]
        )
        assert code == 0
        out = report["outputs"]
        assert out["num_rows"] == 26
        obj = Polynomial.from_json(out["objective"])
        assert obj.degree() == 3

    def test_eps_witness_outside_superopt_is_usage_error(self, capsys, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text(TWO_CLAUSE)
        code, report, _ = run(
            capsys,
            ["reduce", "--cnf", str(cnf), "--variant", "quad", "--witness", "eps:1/100"],
        )
        assert code == 2
        assert report is None

    def test_always_witness_outside_quad_cubic_is_usage_error(self, capsys, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text(TWO_CLAUSE)
        code, report, err = run(
            capsys,
            ["reduce", "--cnf", str(cnf), "--variant", "superopt", "--witness", "always"],
        )
        assert code == 2
        assert report is None
        assert "always" in err

    def test_unknown_witness_kind_is_usage_error(self, capsys, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text(TWO_CLAUSE)
        code, report, _ = run(
            capsys,
            ["reduce", "--cnf", str(cnf), "--variant", "quad", "--witness", "maybe"],
        )
        assert code == 2
        assert report is None

    def test_bad_dimacs_is_usage_error(self, capsys, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text("p cnf 3 1\n1 2 0\n")
        code, report, err = run(
            capsys, ["reduce", "--cnf", str(cnf), "--variant", "quad"]
        )
        assert code == 2
        assert report is None
        assert str(cnf) in err


class TestCertifyAndCheck:
    def test_pipeline_certify_then_check(self, capsys, tmp_path):
        path = unit_box_with_disc(tmp_path)
        pt = write_json(tmp_path / "pt.json", point_to_json([F(1, 3), F(1, 3)]))
        code, report, _ = run(
            capsys,
            [
                "certify", "--system", path, "--point", pt,
                "--delta", "10", "--big-m", "1", "--lipschitz", "4",
            ],
        )
        assert code == 0
        cert = report["outputs"]["certificate"]
        assert cert["phi"] == "40"
        assert cert["point"]["values"] == ["13/40", "13/40"]
        assert cert["box_index"] == [13, 13]
        assert report["outputs"]["check"]["feasible"] is True

        xbar = write_json(tmp_path / "xbar.json", cert["point"])
        code2, report2, _ = run(
            capsys, ["check", "--system", path, "--delta", "10", "--point", xbar]
        )
        assert code2 == 0
        assert report2["outputs"]["verdict"]["feasible"] is True

    def test_default_bounds_pick_the_worked_values(self, capsys, tmp_path):
        path = unit_box_with_disc(tmp_path)
        pt = write_json(tmp_path / "pt.json", point_to_json([F(1, 3), F(1, 3)]))
        code, report, _ = run(
            capsys, ["certify", "--system", path, "--point", pt, "--delta", "10"]
        )
        assert code == 0
        cert = report["outputs"]["certificate"]
        assert cert["phi"] == "320"
        assert cert["point"]["values"] == ["53/160", "53/160"]

    def test_delta_paper_uses_instance_shape_bound(self, capsys, tmp_path):
        path = unit_box_with_disc(tmp_path)
        pt = write_json(tmp_path / "pt.json", point_to_json([F(1, 3), F(1, 3)]))
        code, report, _ = run(
            capsys, ["certify", "--system", path, "--point", pt, "--delta", "paper"]
        )
        assert code == 0
        cert = report["outputs"]["certificate"]
        assert int(cert["delta_used"]) > 10**9
        assert report["outputs"]["check"]["feasible"] is True

    def test_non_integer_delta_is_usage_error(self, capsys, tmp_path):
        path = unit_box_with_disc(tmp_path)
        pt = write_json(tmp_path / "pt.json", point_to_json([F(1, 3), F(1, 3)]))
        code, report, err = run(
            capsys, ["certify", "--system", path, "--point", pt, "--delta", "soon"]
        )
        assert code == 2
        assert report is None
        assert "--delta" in err

    def test_infeasible_seed_is_a_hard_failure(self, capsys, tmp_path):
        path = unit_box_with_disc(tmp_path)
        pt = write_json(tmp_path / "pt.json", point_to_json([F(2), F(2)]))
        code, report, err = run(
            capsys, ["certify", "--system", path, "--point", pt, "--delta", "10"]
        )
        assert code == 1
        assert "x_tilde" in report["outputs"]["error"]

    def test_check_rejects_point_outside_relaxation(self, capsys, tmp_path):
        path = unit_box_with_disc(tmp_path)
        pt = write_json(tmp_path / "pt.json", point_to_json([F(1), F(1)]))
        code, report, err = run(
            capsys, ["check", "--system", path, "--delta", "10", "--point", pt]
        )
        assert code == 1
        assert report["outputs"]["verdict"]["feasible"] is False
        assert "relaxed system violated at rows" in err


class TestSeparable:
    def cubic_json(self, tmp_path, coeffs):
        return write_json(
            tmp_path / "cubic.json",
            {"coeffs": [[str(c) for c in row] for row in coeffs]},
        )

    def box_json(self, tmp_path, bounds):
        n = len(bounds)
        rows = []
        for i, (lo, hi) in enumerate(bounds):
            rows.append((lo - Polynomial.variable(n, i), LE0))
            rows.append((Polynomial.variable(n, i) - hi, LE0))
        return write_json(tmp_path / "box.json", PolySystem(n, rows).to_json())

    def test_two_variable_minimum_exits_zero(self, capsys, tmp_path):
        cubic = self.cubic_json(tmp_path, [(1, 0, -6, 5), (1, 0, -6, 5)])
        box = self.box_json(tmp_path, [(F(0), F(3)), (F(0), F(3))])
        code, report, err = run(
            capsys, ["separable", "--system", box, "--cubic", cubic]
        )
        assert code == 0
        out = report["outputs"]
        assert out["status"] == "point"
        assert out["point"]["values"] == ["181/128", "181/128"]
        assert out["size_bits"] == 34
        assert err == ""

    def test_empty_polytope_exits_one_with_hyphen_status(self, capsys, tmp_path):
        cubic = self.cubic_json(tmp_path, [(1, 0, -2, 0)])
        box = self.box_json(tmp_path, [(F(3), F(1))])
        code, report, err = run(
            capsys, ["separable", "--system", box, "--cubic", cubic]
        )
        assert code == 1
        assert report["outputs"]["status"] == "infeasible"
        assert "verdict: infeasible" in err

    def test_unbounded_polytope_is_reported_not_crashed(self, capsys, tmp_path):
        cubic = self.cubic_json(tmp_path, [(1, 0, -3, 0)])
        rows = [(-Polynomial.variable(1, 0), LE0)]
        box = write_json(tmp_path / "ray.json", PolySystem(1, rows).to_json())
        code, report, err = run(
            capsys, ["separable", "--system", box, "--cubic", cubic]
        )
        assert code == 1
        assert "unbounded" in report["outputs"]["error"]

    def test_bad_cubic_payload_is_usage_error(self, capsys, tmp_path):
        bad = write_json(tmp_path / "cubic.json", {"rows": []})
        box = self.box_json(tmp_path, [(F(0), F(1))])
        code, report, err = run(capsys, ["separable", "--system", box, "--cubic", bad])
        assert code == 2
        assert report is None
        assert "bad separable cubic" in err


class TestRay:
    def poly_json(self, tmp_path):
        f = Polynomial(
            3,
            {
                (3, 0, 0): F(-2),
                (0, 3, 0): F(-1),
                (1, 1, 1): F(6),
                (0, 0, 3): F(-4),
                (1, 0, 1): F(1),
            },
        )
        return write_json(tmp_path / "f.json", f.to_json())

    def test_classify_rational_ray(self, capsys, tmp_path):
        poly = self.poly_json(tmp_path)
        frm = write_json(tmp_path / "x.json", point_to_json([F(0)] * 3))
        dr = write_json(
            tmp_path / "v.json", point_to_json([F(5, 4), F(8, 5), F(1)])
        )
        code, report, _ = run(
            capsys, ["ray", "--poly", poly, "--from", frm, "--dir", dr]
        )
        assert code == 0
        cls = report["outputs"]["classification"]
        assert cls["growth_order"] == 3
        assert cls["direction"] == "to_minus_infinity"
        assert cls["leading"] == "-9/4000"
        assert "point" not in report["outputs"]

    def test_classify_algebraic_ray_leading_in_extension(self, capsys, tmp_path):
        poly = self.poly_json(tmp_path)
        t = AlgebraicElement.root(3, 2)
        frm = write_json(tmp_path / "x.json", point_to_json([F(0)] * 3))
        dr = write_json(tmp_path / "v.json", point_to_json([t, t * t, F(1)]))
        code, report, _ = run(
            capsys, ["ray", "--poly", poly, "--from", frm, "--dir", dr]
        )
        assert code == 0
        cls = report["outputs"]["classification"]
        assert cls["growth_order"] == 2
        assert cls["direction"] == "to_plus_infinity"
        assert cls["leading"]["coeffs"] == ["0/1", "1/1", "0/1"]

    def test_rationalize_replaces_algebraic_direction(self, capsys, tmp_path):
        f = Polynomial(2, {(3, 0): F(1)})
        poly = write_json(tmp_path / "f.json", f.to_json())
        frm = write_json(tmp_path / "x.json", point_to_json([F(0), F(0)]))
        dr = write_json(
            tmp_path / "v.json",
            point_to_json([AlgebraicElement.root(2, 2), F(0)]),
        )
        code, report, _ = run(
            capsys,
            ["ray", "--poly", poly, "--from", frm, "--dir", dr, "--rationalize", "1/10"],
        )
        assert code == 0
        out = report["outputs"]
        assert out["direction"]["values"] == ["181/128", "0/1"]
        assert out["classification"]["direction"] == "to_plus_infinity"
        assert out["classification"]["growth_order"] == 3

    def test_rationalize_rejects_bounded_ray(self, capsys, tmp_path):
        f = Polynomial(1, {(3,): F(1)})
        poly = write_json(tmp_path / "f.json", f.to_json())
        frm = write_json(tmp_path / "x.json", point_to_json([F(0)]))
        dr = write_json(tmp_path / "v.json", point_to_json([F(-1)]))
        code, report, err = run(
            capsys,
            ["ray", "--poly", poly, "--from", frm, "--dir", dr, "--rationalize", "1/10"],
        )
        assert code == 1
        assert "cubically" in report["outputs"]["error"]

    def test_rationalize_respects_polytope_membership(self, capsys, tmp_path):
        f = Polynomial(2, {(3, 0): F(1)})
        poly = write_json(tmp_path / "f.json", f.to_json())
        frm = write_json(tmp_path / "x.json", point_to_json([F(-5), F(0)]))
        dr = write_json(
            tmp_path / "v.json",
            point_to_json([AlgebraicElement.root(2, 2), F(0)]),
        )
        rows = [(-Polynomial.variable(2, 0), LE0), (-Polynomial.variable(2, 1), LE0)]
        pol = write_json(tmp_path / "P.json", PolySystem(2, rows).to_json())
        code, report, err = run(
            capsys,
            [
                "ray", "--poly", poly, "--from", frm, "--dir", dr,
                "--polytope", pol, "--rationalize", "1/10",
            ],
        )
        assert code == 1
        assert "base point" in report["outputs"]["error"]

    def test_bad_rationalize_value_is_usage_error(self, capsys, tmp_path):
        f = Polynomial(1, {(3,): F(1)})
        poly = write_json(tmp_path / "f.json", f.to_json())
        frm = write_json(tmp_path / "x.json", point_to_json([F(0)]))
        dr = write_json(tmp_path / "v.json", point_to_json([F(1)]))
        code, report, _ = run(
            capsys,
            ["ray", "--poly", poly, "--from", frm, "--dir", dr, "--rationalize", "0/0"],
        )
        assert code == 2
        assert report is None

    def test_precision_cap_env_var_bounds_the_search(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("POLYCERT_PRECISION_CAP", "16")
        f = Polynomial(2, {(3, 0): F(1)})
        poly = write_json(tmp_path / "f.json", f.to_json())
        frm = write_json(tmp_path / "x.json", point_to_json([F(0), F(0)]))
        dr = write_json(
            tmp_path / "v.json",
            point_to_json([AlgebraicElement.root(2, 2), F(0)]),
        )
        code, report, err = run(
            capsys,
            [
                "ray", "--poly", poly, "--from", frm, "--dir", dr,
                "--rationalize", "1/1073741824",
            ],
        )
        assert code == 1
        assert "bits" in report["outputs"]["error"]


class TestBounds:
    def test_report_for_small_shape(self, capsys):
        code, report, _ = run(
            capsys,
            ["bounds", "--n", "2", "--m", "1", "--ell", "1", "--d", "2", "--H", "2"],
        )
        assert code == 0
        b = report["outputs"]["bounds"]
        assert b["M"] == "16"
        assert b["L"] == "512"
        assert b["delta_bits"] == 244
        assert b["phi_bits"] == 257
        assert b["mode"] == "exact"
        assert report["inputs"]["n"] == 2

    def test_loose_mode_weakens_but_still_reports(self, capsys):
        code, exact, _ = run(
            capsys,
            ["bounds", "--n", "2", "--m", "1", "--ell", "1", "--d", "2", "--H", "2"],
        )
        code2, loose, _ = run(
            capsys,
            [
                "bounds", "--n", "2", "--m", "1", "--ell", "1", "--d", "2",
                "--H", "2", "--loose",
            ],
        )
        assert code == code2 == 0
        assert loose["outputs"]["bounds"]["mode"] == "loose"
        assert int(loose["outputs"]["bounds"]["delta"]) >= int(
            exact["outputs"]["bounds"]["delta"]
        )
