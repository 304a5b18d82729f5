"""Tests for the command-line interface"""
import json
from fractions import Fraction
from pathlib import Path

import pytest

import crslab.cli
from crslab.cli.schemas import SCHEMAS, ErrorResponse
from crslab.utils.helpers import parse_rational


class TestRankdist:
    """Test the rankdist command"""

    def test_exact_json(self, invoke):
        """Test the 2 x 2 law over F_2"""
        result = invoke("--format", "json", "rankdist", "--q", "2", "--kappa", "2", "--n", "2", "--exact")
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document["mode"] == "exact"
        assert [row["probability"] for row in document["rows"]] == ["3/8", "9/16", "1/16"]
        assert [row["enumerated"] for row in document["rows"]] == ["3/8", "9/16", "1/16"]

    def test_monte_carlo_csv(self, invoke):
        """Test sampled marginals are written as k, exact, empirical, abs_err"""
        result = invoke("--format", "csv", "--seed", "3", "rankdist", "--q", "3", "--kappa", "2", "--n", "2",
                        "--samples", "5000")
        assert result.exit_code == 0, result.output
        lines = result.output.splitlines()
        assert lines[0] == "k,exact,empirical,abs_err"
        assert len(lines) == 4
        for line in lines[1:]:
            _, exact, empirical, abs_err = line.split(",")
            error = parse_rational(abs_err)
            assert error == abs(parse_rational(exact) - parse_rational(empirical))
            assert error < Fraction(1, 20)

    def test_exact_csv(self, invoke):
        """Test the enumerated marginal has zero absolute error"""
        result = invoke("--format", "csv", "rankdist", "--q", "2", "--kappa", "2", "--n", "2")
        assert result.exit_code == 0, result.output
        assert result.output.splitlines() == [
            "k,exact,empirical,abs_err",
            "0,3/8,3/8,0/1",
            "1,9/16,9/16,0/1",
            "2,1/16,1/16,0/1",
        ]

    @pytest.mark.parametrize("dims", [("--kappa", "2", "--n", "-1"), ("--kappa", "-1", "--n", "2")])
    def test_negative_dimension(self, invoke, dims):
        """Test negative dimensions exit with code 2"""
        result = invoke("rankdist", "--q", "2", *dims)
        assert result.exit_code == 2
        assert not isinstance(result.exception, ValueError)

    def test_exact_and_samples_conflict(self, invoke):
        """Test the two modes are exclusive"""
        result = invoke("rankdist", "--q", "2", "--kappa", "1", "--n", "1", "--exact", "--samples", "10")
        assert result.exit_code == 2

    def test_bad_field_order(self, invoke):
        """Test q = 6 exits with code 2"""
        result = invoke("rankdist", "--q", "6", "--kappa", "2", "--n", "2")
        assert result.exit_code == 2
        assert "prime power" in result.output

    def test_cap_exit_code(self, invoke):
        """Test an enumeration over the cap exits with code 3"""
        result = invoke("--enum-cap", "10", "rankdist", "--q", "2", "--kappa", "2", "--n", "2")
        assert result.exit_code == 3
        assert "cap 10" in result.output


class TestCrsCommands:
    """Test the crs command group"""

    def test_exact(self, invoke):
        """Test (1, Z/2) on (Z/2)^3"""
        result = invoke("--format", "json", "crs", "exact", "--n", "2", "--m", "1", "--group", "[2]",
                        "--coords", "3")
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document["modulus"] == 2
        assert len(document["entries"]) == 8
        assert {entry["prob"] for entry in document["entries"]} == {"1/8"}

    def test_exact_annihilator_plain(self, invoke):
        """Test the plain summary line"""
        result = invoke("crs", "exact", "--n", "2", "--m", "1", "--group", "Z/2", "--coords", "2",
                        "--side", "ann")
        assert result.exit_code == 0, result.output
        assert "(1, Z/2) (ann side) in (Z/2)^2: 4 subgroups" in result.output

    def test_enum(self, invoke):
        """Test the four parameters for n = 2"""
        result = invoke("--format", "json", "crs", "enum", "--n", "2", "--max-order", "4")
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document["count"] == 4
        assert [p["text"] for p in document["params"]] == [
            "(1, trivial)", "(1, Z/2)", "(1, Z/2 + Z/2)", "(2, trivial)",
        ]

    def test_limit(self, invoke):
        """Test the bounded regime"""
        descriptor = json.dumps({"n_trend": "constant", "n": 2, "growing_blocks": [2]})
        result = invoke("crs", "limit", "--descriptor", descriptor)
        assert result.exit_code == 0, result.output
        assert "(2, trivial)" in result.output

    def test_limit_diverging(self, invoke):
        """Test diverging n gives (0, trivial)"""
        result = invoke("--format", "json", "crs", "limit", "--descriptor", '{"n_trend": "diverges"}')
        assert result.exit_code == 0, result.output
        assert json.loads(result.output)["text"] == "(0, trivial)"

    @pytest.mark.parametrize("descriptor", ["{not json", '{"n_trend": "sideways"}', '{"n_trend": "constant", "n": -1}'])
    def test_limit_bad_descriptor(self, invoke, descriptor):
        """Test malformed descriptors exit with code 2"""
        assert invoke("crs", "limit", "--descriptor", descriptor).exit_code == 2

    def test_invalid_parameter(self, invoke):
        """Test m must divide n"""
        result = invoke("crs", "exact", "--n", "4", "--m", "3", "--coords", "1")
        assert result.exit_code == 2
        assert "m must divide n" in result.output

    def test_bad_group_text(self, invoke):
        """Test an unparsable group"""
        result = invoke("crs", "exact", "--n", "2", "--m", "1", "--group", "Z/2 + Q", "--coords", "1")
        assert result.exit_code == 2

    def test_untwisted_sampling(self, invoke):
        """Test ambient n = 0 cannot be sampled"""
        result = invoke("crs", "sample", "--n", "0", "--m", "1", "--coords", "2", "--samples", "3")
        assert result.exit_code == 2

    def test_sample_reproducible(self, invoke):
        """Test the same seed gives byte-identical output"""
        args = ("--format", "json", "crs", "sample", "--n", "4", "--m", "1", "--group", "[2,4]",
                "--coords", "2", "--samples", "30", "--seed", "5")
        first, second = invoke(*args), invoke(*args)
        assert first.exit_code == 0, first.output
        assert first.output == second.output
        lines = first.output.splitlines()
        assert len(lines) == 30
        assert [json.loads(line)["index"] for line in lines] == list(range(30))
        other = invoke(*args[:-1], "6")
        assert other.output != first.output

    def test_tv_witness(self, invoke):
        """Test the TV sequence is reported decreasing"""
        result = invoke("--format", "json", "crs", "tv", "--k-max", "4")
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document["strictly_decreasing"] is True
        assert [row["tv"] for row in document["rows"]] == ["1/1", "5/8", "11/32", "23/128"]


class TestTorusCommands:
    """Test the torus command group"""

    def test_decompose(self, invoke):
        """Test the plain report"""
        result = invoke("torus", "decompose", "--r", "6")
        assert result.exit_code == 0, result.output
        assert "residual 0/1" in result.output
        assert "points checked 36" in result.output

    def test_decompose_haar(self, invoke):
        """Test the reverse identity"""
        result = invoke("--format", "json", "torus", "decompose", "--r", "4", "--haar")
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document["residual"] == "0/1"
        assert [c["coefficient"] for c in document["coefficients"]] == ["1/1", "3/1", "12/1"]

    def test_beta_csv(self, invoke):
        """Test the CSV table"""
        result = invoke("--format", "csv", "torus", "beta", "--r-max", "3")
        assert result.exit_code == 0, result.output
        assert result.output.splitlines() == [
            "r,beta,brute,ratio,alphas",
            "1,1,1,1/1,1:1/1",
            "2,3,3,3/4,1:-1/3;2:4/3",
            "3,8,8,8/9,1:-1/8;3:9/8",
        ]

    def test_beta_without_brute(self, invoke):
        """Test the brute column is empty"""
        result = invoke("--format", "csv", "torus", "beta", "--r-max", "2", "--no-brute")
        assert result.output.splitlines()[2] == "2,3,,3/4,1:-1/3;2:4/3"


class TestFreeCommands:
    """Test the free command group"""

    def test_schreier(self, invoke):
        """Test index and basis size"""
        result = invoke("free", "schreier", "--rank", "2", "--images", "(1 2 3);(1 2 3)")
        assert result.exit_code == 0, result.output
        assert "index 3" in result.output
        assert "basis size 4" in result.output

    def test_schreier_points_json(self, invoke):
        """Test the points mode document"""
        result = invoke("--format", "json", "free", "schreier", "--rank", "2", "--images", "(1 2);(1 2 3)",
                        "--mode", "points")
        document = json.loads(result.output)
        assert (document["index"], document["basis_size"]) == (3, 4)
        assert len(document["basis"]) == 4

    def test_schreier_intransitive(self, invoke):
        """Test an intransitive points action exits with code 2"""
        result = invoke("free", "schreier", "--rank", "2", "--images", "(1 2);(3 4)", "--mode", "points")
        assert result.exit_code == 2

    def test_schreier_group_cap(self, invoke):
        """Test the group-order cap applies to coset graphs"""
        result = invoke("--group-cap", "5", "free", "schreier", "--rank", "2", "--images", "(1 2);(1 2 3)")
        assert result.exit_code == 3

    def test_adyan(self, invoke):
        """Test the first word"""
        result = invoke("free", "adyan", "--n", "1", "--p", "2")
        assert result.exit_code == 0, result.output
        assert "x1^2 x2^2 x1^-2 x2^-2" in result.output
        assert "length 8" in result.output

    def test_verbal(self, invoke):
        """Test the squares of Sym(3)"""
        result = invoke("--format", "json", "free", "verbal", "--group", "(1 2);(1 2 3)", "--words", "x1^2")
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document["group_order"] == 6
        assert document["order"] == 3
        assert document["normal"] is True

    def test_verbal_bad_word(self, invoke):
        """Test a malformed word list"""
        result = invoke("free", "verbal", "--group", "(1 2)", "--words", "x1;;x2")
        assert result.exit_code == 2


class TestGlobalOptions:
    """Test options shared by every command"""

    def test_output_file(self, invoke, tmp_path):
        """Test --output writes the result and nothing to stdout"""
        target = tmp_path / "adyan.json"
        result = invoke("--format", "json", "--output", str(target), "free", "adyan", "--n", "2", "--p", "3")
        assert result.exit_code == 0, result.output
        assert result.output == ""
        assert json.loads(target.read_text())["length"] == 48

    def test_json_error_document(self, invoke):
        """Test errors are written as ErrorResponse with --format json"""
        result = invoke("--format", "json", "rankdist", "--q", "6", "--kappa", "1", "--n", "1")
        assert result.exit_code == 2
        error = ErrorResponse.model_validate_json(result.output)
        assert error.error == "DomainError"
        assert error.exit_code == 2

    def test_bad_seed(self, invoke):
        """Test a negative seed fails validation"""
        result = invoke("--seed", "-1", "free", "adyan", "--n", "1", "--p", "2")
        assert result.exit_code == 2

    def test_format_from_config(self, invoke, mock_config):
        """Test the configured default format"""
        mock_config.set('output.format', 'json')
        result = invoke("free", "adyan", "--n", "1", "--p", "2")
        assert json.loads(result.output)["length"] == 8

    def test_logging_options(self, invoke, mocker):
        """Test --log-level and --json-logs reach setup_logging"""
        setup = mocker.patch('crslab.app.setup_logging')
        result = invoke("--log-level", "debug", "--json-logs", "free", "adyan", "--n", "1", "--p", "2")
        assert result.exit_code == 0, result.output
        setup.assert_called_once_with(log_level='DEBUG', json_output=True)

    def test_version(self, invoke):
        """Test the version option"""
        result = invoke("--version")
        assert result.exit_code == 0
        assert "crslab" in result.output


class TestSchemas:
    """Test the schema command and the shipped schema files"""

    def test_schema_command(self, invoke):
        """Test a schema is printed as JSON"""
        result = invoke("schema", "rankdist")
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document["title"] == "RankDistResponse"
        assert set(document["properties"]) == {"q", "kappa", "n", "mode", "samples", "seed", "rows"}

    def test_unknown_schema(self, invoke):
        """Test names outside the registry"""
        assert invoke("schema", "nothing").exit_code == 2

    @pytest.mark.parametrize("name", sorted(SCHEMAS))
    def test_shipped_schema_matches_model(self, name):
        """Test each shipped file lists the model's fields and required fields"""
        path = Path(crslab.cli.__file__).parent / "json_schemas" / f"{name.replace('-', '_')}.json"
        shipped = json.loads(path.read_text())
        model = SCHEMAS[name]
        assert shipped["title"] == model.__name__
        assert set(shipped["properties"]) == set(model.model_fields)
        required = {field for field, info in model.model_fields.items() if info.is_required()}
        assert set(shipped.get("required", [])) == required
