"""Ejecución de subcomandos de punta a punta: códigos de salida, esquemas JSON y determinismo."""

import io
import json

import pytest
from jsonschema import Draft202012Validator

from cli.config import RunConfig, build_parser, config_from_args
from cli.runner import run
from tests.fixtures.fans import SCHEMAS, fan_path


def execute(argv):
    """Ejecuta argv como la CLI y devuelve (código, stdout, stderr)."""
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(config_from_args(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def schema_for(command: str) -> Draft202012Validator:
    schema = json.loads((SCHEMAS / f"{command}.schema.json").read_text(encoding="utf-8"))
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


@pytest.fixture
def relations_file(tmp_path):
    path = tmp_path / "base.txt"
    path.write_text("# curva nodal\nu1^2 - u2^3\nu1*u2 - 1\n", encoding="utf-8")
    return path


def _json_cases(relations_path):
    return [
        ("validate", ["validate", str(fan_path("f2"))]),
        ("cohomology", ["cohomology", str(fan_path("p1xp1"))]),
        ("quantum", ["quantum", str(fan_path("p2")), "--trials", "2"]),
        ("quantum", ["quantum", str(fan_path("f1")), "--q-spec", "2,-1/3", "--trials", "1"]),
        ("series", ["series", str(fan_path("f1")), "--cutoff", "6"]),
        ("verify-main", ["verify-main", str(fan_path("p1xp1")), "--trials", "2"]),
        ("codim", ["codim", str(fan_path("f1")), "--a=0,1", "--b=1,2"]),
        ("strata", ["strata", str(fan_path("p2")), "--a=1"]),
        ("floer", ["floer", str(fan_path("p2")), "--cutoff", "3"]),
        ("locus", ["locus", str(fan_path("f1")), "--order", "2"]),
        ("jets", ["jets", str(relations_path), "--order", "2"]),
    ]


class TestSchemas:
    def test_every_command_matches_its_schema(self, relations_file):
        for command, argv in _json_cases(relations_file):
            code, out, _ = execute(argv + ["--format", "json"])
            assert code == 0, argv
            data = json.loads(out)
            schema_for(command).validate(data)
            assert data["command"] == command
            assert data["schema_version"] == 1

    def test_text_format_renders(self, relations_file):
        for _, argv in _json_cases(relations_file):
            code, out, _ = execute(argv)
            assert code == 0, argv
            assert out.strip()
            assert not out.lstrip().startswith("{")


class TestExitCodes:
    def test_validate_non_fano_is_not_an_error(self):
        code, out, _ = execute(["validate", str(fan_path("f2")), "--format", "json"])
        assert code == 0
        assert json.loads(out)["validation"]["fano"] is False

    def test_quantum_non_fano_needs_flag(self):
        code, out, err = execute(["quantum", str(fan_path("f2")), "--trials", "1"])
        assert code == 2
        assert out == ""
        assert "NotFano" in err
        assert len(err.strip().splitlines()) == 1

    def test_quantum_non_fano_with_flag(self):
        code, out, _ = execute([
            "quantum", str(fan_path("f2")), "--trials", "1", "--allow-non-fano", "--format", "json",
        ])
        assert code == 0
        assert json.loads(out)["warnings"]

    def test_missing_file(self, tmp_path):
        code, out, err = execute(["validate", str(tmp_path / "nada.fan")])
        assert code == 2
        assert out == ""
        assert err.startswith("toricarc: error:")

    def test_malformed_fan(self, tmp_path):
        path = tmp_path / "roto.fan"
        path.write_text('{"name": "x", "dim": 2}', encoding="utf-8")
        code, _, err = execute(["validate", str(path)])
        assert code == 2
        assert "ParseError" in err

    def test_zero_q_spec(self):
        code, _, _ = execute(["quantum", str(fan_path("p2")), "--q-spec", "0"])
        assert code == 2

    @pytest.mark.parametrize("q_spec", ["1/0", "2,-1/0"])
    def test_zero_denominator_q_spec(self, q_spec):
        code, out, err = execute(["quantum", str(fan_path("f1")), f"--q-spec={q_spec}"])
        assert code == 2
        assert out == ""
        assert err.startswith("toricarc: error:")
        assert len(err.strip().splitlines()) == 1

    def test_symbolic_excludes_q_spec(self):
        config = RunConfig("quantum", fan_path=str(fan_path("p2")), q_spec="2", symbolic=True)
        stderr = io.StringIO()
        assert run(config, io.StringIO(), stderr) == 2
        assert "--symbolic" in stderr.getvalue()

    def test_symbolic_flag_and_q_spec_rejected_by_parser(self):
        with pytest.raises(SystemExit) as info:
            build_parser().parse_args(["quantum", str(fan_path("p2")), "--symbolic", "--q-spec", "2"])
        assert info.value.code == 2

    def test_not_nested(self):
        code, _, err = execute(["codim", str(fan_path("p2")), "--a=1", "--b=0"])
        assert code == 2
        assert "NotNested" in err

    def test_budget_exceeded(self):
        code, _, err = execute(["cohomology", str(fan_path("p3")), "--budget", "1"])
        assert code == 1
        assert "BudgetExceeded" in err

    def test_verify_main_f1(self):
        code, out, _ = execute(["verify-main", str(fan_path("f1")), "--trials", "2", "--format", "json"])
        assert code == 0
        data = json.loads(out)
        assert data["passed"] is True
        assert data["cousin_series_holds"] is False

    def test_series_finding_exits_zero(self):
        code, out, _ = execute(["series", str(fan_path("f2")), "--cutoff", "4", "--format", "json"])
        assert code == 0
        data = json.loads(out)
        assert data["holds"] is False
        assert data["first_mismatch"] == 2

    def test_invalid_config_without_parser(self):
        stderr = io.StringIO()
        assert run(RunConfig("locus", fan_path=str(fan_path("p2"))), io.StringIO(), stderr) == 2
        assert "--order" in stderr.getvalue()

    def test_unknown_subcommand_exits_two(self):
        with pytest.raises(SystemExit) as info:
            build_parser().parse_args(["desconocido"])
        assert info.value.code == 2


class TestOutput:
    def test_json_is_deterministic(self):
        argv = ["verify-main", str(fan_path("f1")), "--trials", "2", "--seed", "5", "--format", "json"]
        assert execute(argv)[1] == execute(argv)[1]

    def test_seed_changes_trials(self):
        base = ["quantum", str(fan_path("p2")), "--trials", "2", "--format", "json"]
        first = json.loads(execute(base + ["--seed", "1"])[1])
        second = json.loads(execute(base + ["--seed", "2"])[1])
        assert first["rank_check"]["trials"] != second["rank_check"]["trials"]

    def test_jets_payload(self, relations_file):
        code, out, _ = execute(["jets", str(relations_file), "--order", "1", "--format", "json"])
        assert code == 0
        data = json.loads(out)
        assert data["base_vars"] == ["u1", "u2"]
        assert len(data["relations"]) == 4
        assert data["relations"][2] == {"k": 1, "n": 0, "text": "u1_0*u2_0 - 1"}

    def test_codim_value(self):
        code, out, _ = execute(["codim", str(fan_path("f1")), "--a=0,1", "--b=1,2", "--format", "json"])
        assert code == 0
        assert json.loads(out)["codim"] == 3

    def test_quantum_table_p2(self):
        _, out, _ = execute(["quantum", str(fan_path("p2")), "--trials", "1", "--format", "json"])
        table = {tuple(e["factors"]): e["value"] for e in json.loads(out)["product_table"]}
        assert table[(1, 1, 1)] == "q1"
        assert table[(1, 2)] == "x3^2"

    def test_symbolic_flag(self):
        code, out, _ = execute(["quantum", str(fan_path("f1")), "--symbolic", "--trials", "1", "--format", "json"])
        assert code == 0
        data = json.loads(out)
        assert data["kind"] == "quantum-symbolic"
        assert data["q_spec"] is None
        assert data["dimension"] == 4
        assert "q1*q2*qinv - 1" in data["groebner_basis"]

    def test_specialized_dimension(self):
        _, out, _ = execute(["quantum", str(fan_path("f1")), "--q-spec", "2,3", "--trials", "1", "--format", "json"])
        data = json.loads(out)
        assert data["kind"] == "quantum-specialized"
        assert data["dimension"] == 4
