import io
import json
from contextlib import redirect_stdout

from swcohom import CrossCheckError
from swcohom.cli import main


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def run_json(*argv):
    code, out = run_cli(*argv)
    return code, json.loads(out) if out.strip() else None


def test_series_row():
    code, doc = run_json("series", "12")
    assert code == 0
    assert doc["schema"] == "swcohom/1"
    assert doc["report"]["series"] == [1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3]
    code, doc = run_json("series", "0")
    assert code == 0 and doc["report"]["series"] == [1]


def test_series_check_reduced():
    code, doc = run_json("series", "8", "--check-reduced", "6")
    assert code == 0
    assert doc["report"]["agree"] is True


def test_cohomology_symmetric():
    code, doc = run_json("cohomology", "--sequence", "symmetric", "--weight-max", "6")
    assert code == 0
    assert doc["report"]["H"] == {"1": 1, "2": 0, "3": 1, "4": 1, "5": 1, "6": 1}


def test_cohomology_hecke_d2():
    code, doc = run_json("cohomology", "--sequence", "hecke",
                         "--trunc-degree", "2", "--weight-max", "2")
    assert code == 0
    assert doc["report"]["H"] == {"1": 3, "2": 3}


def test_cohomology_skew_honest_values():
    # the tensor square of the default quadratic algebra has zero divisors;
    # the honest weight-3 value is 2 (see the cross-route homology tests)
    code, doc = run_json("cohomology", "--sequence", "skew", "--weight-max", "3")
    assert code == 0
    assert doc["report"]["H"] == {"1": 2, "2": 1, "3": 2}


def test_cohomology_both_modes_consistent():
    code, doc = run_json("cohomology", "--sequence", "symmetric",
                         "--weight-max", "4", "--mode", "both")
    assert code == 0
    assert doc["report"]["consistent"] is True
    assert doc["report"]["full"]["boundary_degree"] == 4


def test_representatives_emitted():
    code, doc = run_json("cohomology", "--sequence", "symmetric",
                         "--weight-max", "3", "--representatives")
    assert code == 0
    reps = doc["report"]["representatives"]
    assert reps["1"] == [{"s(1,)": "1"}]
    assert len(reps["3"]) == 1


def test_representatives_other_label_kinds():
    code, doc = run_json("cohomology", "--sequence", "hecke",
                         "--trunc-degree", "1", "--weight-max", "1",
                         "--representatives")
    assert code == 0
    assert len(doc["report"]["representatives"]["1"]) == 2
    code, doc = run_json("cohomology", "--sequence", "skew",
                         "--weight-max", "1", "--representatives")
    assert code == 0
    assert len(doc["report"]["representatives"]["1"]) == 2


def test_gl_report():
    code, doc = run_json("gl", "--dim", "2")
    assert code == 0
    r = doc["report"]
    assert r["invariant_dims"] == [1, 1, 0, 1, 1]
    assert r["wheel_action"]["m=3"] == {"pass": True, "ratio": "1/2"}
    assert r["e5_acts_as_zero"] is True
    assert r["vanishing_pattern_ok"] is True


def test_hecke_check():
    code, doc = run_json("hecke-check", "--trunc-degree", "3", "--level-max", "3")
    assert code == 0
    r = doc["report"]
    assert r["reduced"]["T"] == {"1": 4, "2": 6, "3": 4}
    assert r["reduced"]["match"] and r["reduced"]["differential_zero"]
    assert all(v["match"] for v in r["centralizers"].values())


def test_cubic_command():
    code, doc = run_json("cubic", "--n", "4")
    assert code == 0
    r = doc["report"]
    assert r["agree"] is True
    assert r["regular_rep"]["acyclic_below_top"] is True


def test_horizontal_command():
    code, doc = run_json("horizontal", "--sequence", "symmetric", "--weight", "3")
    assert code == 0
    assert doc["report"]["H"] == {"1": 0, "2": 0, "3": 1}
    assert doc["report"]["concentrated_in_top"] is True


def test_selftest():
    code, doc = run_json("selftest")
    assert code == 0
    assert doc["report"]["all_passed"] is True


def test_deterministic_output():
    _, out1 = run_cli("cohomology", "--sequence", "symmetric", "--weight-max", "4",
                      "--seed", "7")
    _, out2 = run_cli("cohomology", "--sequence", "symmetric", "--weight-max", "4",
                      "--seed", "7")
    assert out1 == out2
    _, out3 = run_cli("--format", "csv", "gl", "--dim", "2")
    _, out4 = run_cli("--format", "csv", "gl", "--dim", "2")
    assert out3 == out4


def test_resource_guard_exit_code():
    code, out = run_cli("cohomology", "--sequence", "symmetric", "--weight-max", "12")
    assert code == 3


def test_cross_check_exit_code(monkeypatch):
    import swcohom.cli as cli

    def boom(args):
        raise CrossCheckError("forced")

    # build_parser looks the handler up at build time, so patching the module
    # attribute reroutes the subcommand
    monkeypatch.setattr(cli, "cmd_selftest", boom)
    code, _ = run_cli("selftest")
    assert code == 2


def test_seed_and_backend_embedded():
    code, doc = run_json("--seed", "42", "--backend", "exact", "selftest")
    assert code == 0
    assert doc["seed"] == 42 and doc["backend"] == "exact"


def test_algebra_loaded_from_json(tmp_path):
    from swcohom.sequences import CommutativeAlgebraSpec

    path = tmp_path / "alg.json"
    path.write_text(json.dumps(CommutativeAlgebraSpec.quadratic(3).to_json()))
    code, doc = run_json("cohomology", "--sequence", "skew",
                         "--algebra", str(path), "--weight-max", "2")
    assert code == 0
    assert doc["report"]["H"]["1"] == 2


def test_lie_algebra_loaded_from_json(tmp_path):
    from swcohom.lierep import LieAlgebraSpec

    path = tmp_path / "sl2.json"
    path.write_text(json.dumps(LieAlgebraSpec.sl2().to_json()))
    code, doc = run_json("gl", "--lie", str(path), "--degree-max", "3")
    assert code == 0
    assert doc["report"]["invariant_dims"] == [1, 0, 0, 1]


def test_pretty_format_smoke():
    code, out = run_cli("--format", "pretty", "cohomology", "--sequence",
                        "symmetric", "--weight-max", "3", "--representatives")
    assert code == 0
    assert "schema: swcohom/1" in out
