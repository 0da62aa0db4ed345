"""Integration tests for the command-line interface."""

import json

from typer.testing import CliRunner

from tropos import __version__
from tropos.cli import app

runner = CliRunner()

STRICT_MONGE = "- [2, 1]\n- [1, 2]\n"
HEAVY_ANTIDIAGONAL = "- [0, 3]\n- [3, 0]\n"


def write(tmp_path, text, name="a.yaml"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestCommands:
    """Tests for exit codes and outputs of the commands."""

    def test_version(self):
        """version prints the package version."""
        result = runner.invoke(app, ["version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_help_lists_commands(self):
        """--help names the commands."""
        result = runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        for name in ("classify", "factor", "stiefel-invert", "network-weight"):
            assert name in result.output

    def test_classify_success(self, tmp_path):
        """TN^trop input exits 0 and writes the report."""
        out = tmp_path / "report.json"
        result = runner.invoke(app, ["classify", write(tmp_path, STRICT_MONGE), "-o", str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text())["tn_trop"] is True

    def test_classify_negative(self, tmp_path):
        """A failing class exits 1."""
        result = runner.invoke(app, ["classify", write(tmp_path, HEAVY_ANTIDIAGONAL), "--json"])
        assert result.exit_code == 1

    def test_strict_classify(self, tmp_path):
        """--strict tests TP^trop."""
        path = write(tmp_path, "- [1, 1]\n- [1, 1]\n")
        assert runner.invoke(app, ["classify", path]).exit_code == 0
        assert runner.invoke(app, ["classify", path, "--strict"]).exit_code == 1

    def test_factor_rich_output(self, tmp_path):
        """The factor table lists each factor kind."""
        result = runner.invoke(app, ["factor", write(tmp_path, STRICT_MONGE)])
        assert result.exit_code == 0
        assert "Lower" in result.output
        assert "Upper" in result.output

    def test_spectrum_with_lift(self, tmp_path):
        """--lift compares against a seeded lift."""
        out = tmp_path / "spectrum.json"
        args = ["spectrum", write(tmp_path, STRICT_MONGE), "-l", "random", "--seed", "7"]
        result = runner.invoke(app, [*args, "-o", str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text())["cc_ee"]["passed"] is True

    def test_network_weight_lift(self, tmp_path):
        """factor-to-network output feeds network-weight."""
        network = tmp_path / "network.json"
        out = tmp_path / "weights.json"
        built = runner.invoke(
            app, ["factor-to-network", write(tmp_path, STRICT_MONGE), "-o", str(network)]
        )
        assert built.exit_code == 0
        args = ["network-weight", str(network), "--lift", "canonical", "-o", str(out)]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        payload = json.loads(out.read_text())
        assert payload["entries"] == [["2", "1"], ["1", "2"]]
        assert "series" in payload

    def test_verify(self, tmp_path):
        """The worked examples pass."""
        out = tmp_path / "verify.json"
        result = runner.invoke(app, ["verify", "-o", str(out)])
        assert result.exit_code == 0
        assert all(r["passed"] for r in json.loads(out.read_text())["results"])

    def test_verify_with_seed(self, tmp_path):
        """--seed names the randomized sweep."""
        out = tmp_path / "verify.json"
        result = runner.invoke(app, ["verify", "--seed", "11", "-o", str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text())["results"][-1]["name"] == "seeded-sweep-11"

    def test_verify_cap_too_small(self):
        """A minor cap below the sweep sizes is a usage error."""
        result = runner.invoke(app, ["verify", "--seed", "11", "--cap", "1"])
        assert result.exit_code == 2


class TestUsageErrors:
    """Tests for exit code 2."""

    def test_missing_file(self, tmp_path):
        """Nonexistent inputs are rejected by the argument parser."""
        result = runner.invoke(app, ["classify", str(tmp_path / "absent.yaml")])
        assert result.exit_code == 2

    def test_invalid_cap(self, tmp_path):
        """A cap below 1 fails configuration validation."""
        result = runner.invoke(app, ["classify", write(tmp_path, STRICT_MONGE), "--cap", "0"])
        assert result.exit_code == 2

    def test_parse_error(self, tmp_path):
        """Malformed scalars exit 2."""
        result = runner.invoke(app, ["factor", write(tmp_path, "- [one]\n")])
        assert result.exit_code == 2

    def test_unknown_lift_strategy(self, tmp_path):
        """Lift strategies are validated by the option parser."""
        result = runner.invoke(app, ["spectrum", write(tmp_path, STRICT_MONGE), "-l", "magic"])
        assert result.exit_code == 2
