import pytest
from typer.testing import CliRunner

from app.main import cli

runner = CliRunner()


def _invoke(*args):
    return runner.invoke(cli, list(args))


class TestSweepCommand:
    def test_writes_dataset(self, tmp_path):
        out = tmp_path / "kondo.csv"
        result = _invoke(
            "sweep",
            "--scenario", "kondo",
            "--set", "g1=pi/2",
            "--set", "g4=pi/2",
            "--sweep", "theta=0:pi:11",
            "--out", str(out),
            "--workers", "2",
        )  # fmt: skip
        assert result.exit_code == 0
        assert str(out) in result.stdout
        assert out.read_text().startswith("# quantity: kondo sweep over theta")

    @pytest.mark.parametrize(
        "args",
        [
            ("--scenario", "ising", "--sweep", "theta=0:1:3"),
            ("--scenario", "kondo", "--sweep", "theta=0:1"),
            ("--scenario", "kondo", "--sweep", "theta=0:1:3", "--set", "g9=1"),
            ("--scenario", "kondo"),
        ],
    )
    def test_configuration_errors_exit_2(self, tmp_path, args):
        result = _invoke("sweep", *args, "--out", str(tmp_path / "x.csv"))
        assert result.exit_code == 2

    def test_unwritable_output_exits_3(self, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("")
        result = _invoke(
            "sweep",
            "--scenario", "kondo",
            "--sweep", "theta=0:1:2",
            "--out", str(blocker / "x.csv"),
        )  # fmt: skip
        assert result.exit_code == 3

    def test_config_file(self, tmp_path):
        conf = tmp_path / "run.conf"
        out = tmp_path / "mm.csv"
        conf.write_text(f"scenario = micro_macro\nsweep = lambda0=0.6:0.9:4\nout = {out}\n")
        result = _invoke("sweep", "--config", str(conf), "--set", "g1=pi/2", "--set", "g2=pi/2")
        assert result.exit_code == 0
        assert out.exists()


class TestEvaluateCommand:
    def test_defined_point(self):
        result = _invoke("evaluate", "--scenario", "kondo", "--set", "theta=0")
        assert result.exit_code == 0
        assert '"scenario": "kondo"' in result.stdout

    def test_undefined_phase_exits_4(self):
        result = _invoke(
            "evaluate",
            "--scenario", "micro_macro",
            "--set", "lambda0=0.5",
            "--set", "g1=pi/2",
            "--set", "g2=pi/2",
        )  # fmt: skip
        assert result.exit_code == 4

    def test_truncation_too_small_exits_2(self):
        result = _invoke(
            "evaluate",
            "--scenario", "cat",
            "--set", "n_minus=2",
            "--set", "n_plus=1",
            "--set", "n_max=2",
        )  # fmt: skip
        assert result.exit_code == 2

    def test_invalid_parameter_exits_2(self):
        result = _invoke("evaluate", "--scenario", "micro_macro", "--set", "lambda0=2")
        assert result.exit_code == 2


class TestAuditCommand:
    def test_single_formula_with_report(self, tmp_path):
        out = tmp_path / "audit.txt"
        result = _invoke(
            "audit", "--formula", "kondo_concurrence", "--out", str(out), "--workers", "1"
        )
        assert result.exit_code == 0
        assert "CONFIRMED" in result.stdout
        assert "[kondo_concurrence]" in out.read_text()

    def test_unknown_formula_exits_2(self):
        result = _invoke("audit", "--formula", "nope")
        assert result.exit_code == 2


class TestSelftestCommand:
    def test_passes(self):
        result = _invoke("selftest", "--seed", "1", "--count", "10")
        assert result.exit_code == 0
        assert "FAILED" not in result.stdout
