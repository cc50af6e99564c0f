import io
import json
from fractions import Fraction

import pytest

from gaudin_hopf import cli
from gaudin_hopf.emit import dumps, figure_csv, figure_record, figure_svg, fmt, render
from gaudin_hopf.linear import thresholds
from gaudin_hopf.model import FixedPoint, ModelParams
from gaudin_hopf.momentum import FigureData, figure_data, rank0_markers, sample_image


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_classify_fig1b():
    code, out, _ = run("classify", "--scenario", "fig1b", "--point", "m0")
    assert code == cli.EXIT_OK
    assert json.loads(out)["class"] == "focus-focus"


def test_thresholds_fig6():
    code, out, _ = run("thresholds", "--scenario", "fig6", "--point", "m0")
    rec = json.loads(out)
    assert code == 0
    assert rec["t4_minus"] == pytest.approx(-0.4714045207910317, abs=1e-15)
    assert rec["t4_plus"] == pytest.approx(0.4714045207910317, abs=1e-15)


def test_fixture_fig5():
    sc = cli.load_scenario("fig5")
    assert sc.params == ModelParams(R1=1, R2=1, w=1, t0=0, t1=Fraction(-1, 2), t2=0, t3=Fraction(-1, 2))
    assert sc.params.is_exact


def test_fixture_fig7():
    p = cli.load_scenario("fig7").params
    assert (p.R1, p.R2, p.t0, p.w) == (1, 2, Fraction(1, 2), 0)
    assert p.t3 == pytest.approx(-2.1213203435596424, abs=1e-15)


def test_all_fixtures_listed():
    assert set(cli.scenario_names()) >= {"fig1a", "fig1b", "fig1c", "fig1d", "fig4", "fig5", "fig6", "fig7"}


def test_empty_file_is_schema_error(tmp_path):
    f = tmp_path / "empty.json"
    f.write_text("")
    code, _, err = run("thresholds", "--scenario", str(f))
    assert code == cli.EXIT_SCHEMA
    assert "schema error" in err


def test_schema_errors_carry_field_paths(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"name": "bad", "params": {"R1": "one"}, "t4_values": [0]}))
    code, _, err = run("thresholds", "--scenario", str(f))
    assert code == cli.EXIT_SCHEMA
    assert "params" in err and "R1" in err


def test_missing_fixture_is_schema_error():
    assert run("thresholds", "--scenario", "no-such-fixture")[0] == cli.EXIT_SCHEMA


def test_unknown_flag_is_usage_error():
    code, _, err = run("classify", "--bogus")
    assert code == cli.EXIT_USAGE
    assert err
    assert run("frobnicate")[0] == cli.EXIT_USAGE
    assert run()[0] == cli.EXIT_USAGE


def test_domain_error_exit_code():
    # t3 = 0 has no thresholds to unfold
    assert run("unfold", "--scenario", "fig1a")[0] == cli.EXIT_DOMAIN
    assert run("image", "--scenario", "fig6", "--resolution", "2")[0] == cli.EXIT_DOMAIN


def test_verification_failure_exit_code():
    code, out, err = run("verify", "--suite", "linear", "--draws", "2", "--tolerance", "1e-30")
    assert code == cli.EXIT_VERIFY
    assert json.loads(out)["passed"] is False
    assert "verification failed" in err


def test_verify_linear_passes():
    code, out, _ = run("verify", "--suite", "linear", "--draws", "3")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_appendix_reports_known_mismatch():
    # a6..a8 and the generating coefficients disagree with the printed tables (ledger D05, D06)
    code, out, _ = run("verify", "--suite", "appendix", "--draws", "3")
    rec = json.loads(out)
    assert code == cli.EXIT_VERIFY
    failed = set(rec["failed"])
    assert {"max relative error a6", "max relative error e1", "max relative error f1"} <= failed
    for k in ("a1", "a3", "a4", "a5", "b"):
        assert f"max relative error {k}" not in failed
    assert "max |a2|" not in failed and "max |a9|" not in failed


def test_scenario_dir_override(tmp_path, monkeypatch):
    (tmp_path / "mine.json").write_text(json.dumps({"name": "mine", "params": {"t3": "1/2", "t1": "1/2"},
                                                    "t4_values": [0]}))
    monkeypatch.setenv("GAUDIN_SCENARIO_DIR", str(tmp_path))
    assert cli.scenario_names() == ["mine"]
    code, out, _ = run("thresholds", "--scenario", "mine", "--point", "m0")
    assert code == 0
    expected = thresholds(ModelParams(t1=Fraction(1, 2), t3=Fraction(1, 2)), FixedPoint.m0).t4_plus
    assert json.loads(out)["t4_plus"] == float(expected)


def test_defaults_fill_params():
    sc = cli.parse_scenario({"name": "x", "params": {}, "t4_values": [0]})
    assert sc.params == ModelParams(R1=1, R2=1, w=1, t0=0, t1=0, t2=0, t3=0, t4=0)


def test_normal_form_command_fig5():
    code, out, _ = run("normal-form", "--scenario", "fig5", "--point", "m0", "--side", "plus", "--rational")
    rec = json.loads(out)
    assert code == 0
    assert rec["criticality"]["verdict"] == "subcritical"
    assert rec["lie_series"]["exact"] is True
    assert rec["lie_series"]["scaled"]["a2"] == 0


def test_unfold_command_fig5():
    code, out, _ = run("unfold", "--scenario", "fig5", "--point", "m0", "--side", "plus")
    rec = json.loads(out)
    assert rec["dnu2_dt4_at_threshold"] == pytest.approx(1, abs=1e-8)
    assert rec["dnu2_dt4_printed"] == 1


@pytest.mark.parametrize("fmt_name", ["json", "csv", "svg"])
def test_image_outputs(tmp_path, fmt_name):
    code, out, _ = run("image", "--scenario", "fig1d", "--resolution", "64", "--format", fmt_name,
                       "--out", str(tmp_path))
    rec = json.loads(out)
    assert code == 0
    assert rec["hyperbolic_segments"] == 1 and rec["cusps"] == 2
    text = open(rec["path"]).read()
    if fmt_name == "json":
        doc = json.loads(text)
        assert [c["label"] for c in doc["curves"] if c["type"] == "hyperbolic-regular"] == ["flap"]
    elif fmt_name == "csv":
        assert text.splitlines()[0] == "record,id,type,branch,index,J,H"
    else:
        assert text.startswith("<svg") and text.rstrip().endswith("</svg>")
        assert 'stroke-dasharray="6 4"' in text


def test_sweep_and_events(tmp_path):
    code, out, _ = run("sweep", "--scenario", "fig5", "--resolution", "32", "--format", "json", "--out", str(tmp_path))
    recs = json.loads(out)
    assert code == 0
    assert [r["hyperbolic_segments"] for r in recs] == [0, 0, 0, 1]
    code, out, _ = run("events", "--scenario", "fig6", "--t4-range=-2:0")
    kinds = [e["kind"] for e in json.loads(out)]
    assert code == 0
    assert kinds.count("cusp-birth-death") == 1 and kinds.count("hopf-super") == 2


def test_t3_zero_figure_has_occupancy_only(tmp_path):
    p = ModelParams(t1=1, t3=0)
    fig = FigureData(p, 0.0, sample_image(p, None, 32), [], [], rank0_markers(p))
    for name in ("svg", "csv", "json"):
        text = render(fig, name)
        assert text
    assert json.loads(render(fig, "json"))["curves"] == []
    assert "<path fill=" in render(fig, "svg")
    code, out, _ = run("image", "--scenario", "fig4", "--resolution", "32", "--format", "svg", "--out", str(tmp_path))
    assert code == 0


def test_number_format():
    assert fmt(0.1) == "0.10000000000000001"
    assert fmt(-0.0) == "0"
    assert fmt(float("nan")) == "null"
    assert dumps({"b": [1, 2.5], "a": Fraction(1, 4)}) == '{\n  "a": 0.25,\n  "b": [1, 2.5]\n}'


def test_determinism(tmp_path):
    fig = figure_data(cli.load_scenario("fig6").params, 0.495, resolution=64)
    fig2 = figure_data(cli.load_scenario("fig6").params, 0.495, resolution=64)
    assert render(fig, "json") == render(fig2, "json")
    assert render(fig, "csv") == render(fig2, "csv")
    assert figure_svg(fig, "x") == figure_svg(fig2, "x")
    assert figure_record(fig)["counts"]["cusps"] == 6
    assert figure_csv(fig).count("\ncusp,") == 6
