from pathlib import Path

import pytest
from click.testing import CliRunner

from fibsums.cli import main
from fibsums.render import parse_grid, render_bfile, render_grid

from paper_tables import TABLE1, TABLE2

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def runner():
    return CliRunner()


class TestTableCommand:
    def test_default_invocation_prints_table1(self, runner):
        result = runner.invoke(main, ["table"])
        assert result.exit_code == 0
        assert result.stdout == (GOLDEN / "table1.tsv").read_text()

    def test_s_family_prints_table2(self, runner):
        result = runner.invoke(main, ["table", "--family", "s"])
        assert result.exit_code == 0
        assert result.stdout == (GOLDEN / "table2.tsv").read_text()

    def test_csv_single_cell(self, runner):
        result = runner.invoke(
            main, ["table", "--family", "a", "--kmax", "0", "--nmax", "1", "--format", "csv"]
        )
        assert result.exit_code == 0
        assert result.stdout == "k\\n,1\n0,1\n"

    @pytest.mark.parametrize("fmt", ["tsv", "csv", "md"])
    def test_round_trip(self, runner, fmt):
        result = runner.invoke(main, ["table", "--family", "s", "--format", fmt])
        assert result.exit_code == 0
        assert parse_grid(result.stdout, fmt) == TABLE2

    def test_guard_rejection_exits_nonzero(self, runner):
        result = runner.invoke(main, ["table", "--kmax", "10000", "--nmax", "10000"])
        assert result.exit_code != 0
        assert "table too large" in result.stderr
        assert result.stdout == ""


class TestVerifyCommand:
    def test_theorem1_default(self, runner):
        result = runner.invoke(main, ["verify", "theorem1"])
        assert result.exit_code == 0
        assert result.stdout == "PASS 60/60 checks (theorem1)\n"

    def test_oracle(self, runner):
        result = runner.invoke(main, ["verify", "oracle", "--kmax", "6", "--nmax", "15"])
        assert result.exit_code == 0
        assert result.stdout.startswith("PASS")

    def test_lemma_a3_ignores_nmax(self, runner):
        result = runner.invoke(main, ["verify", "lemma_a3", "--kmax", "0"])
        assert result.exit_code == 0
        assert result.stdout == "PASS 1/1 checks (lemma_a3)\n"

    def test_unknown_identity_rejected(self, runner):
        result = runner.invoke(main, ["verify", "nonsense"])
        assert result.exit_code != 0

    def test_guard_rejection_exits_nonzero(self, runner):
        result = runner.invoke(main, ["verify", "oracle", "--nmax", "30"])
        assert result.exit_code != 0
        assert "ground set too large" in result.stderr


class TestBFileCommand:
    def test_a_row_one(self, runner):
        result = runner.invoke(main, ["bfile", "--family", "a", "--k", "1", "--nmax", "4"])
        assert result.exit_code == 0
        assert result.stdout == "1 1\n2 2\n3 4\n4 7\n"

    def test_s_row_five(self, runner):
        result = runner.invoke(main, ["bfile", "--family", "s", "--k", "5", "--nmax", "9"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[-1] == "9 1"
        assert all(line == line.rstrip() for line in lines)

    def test_single_line(self, runner):
        result = runner.invoke(main, ["bfile", "--family", "a", "--k", "0", "--nmax", "1"])
        assert result.stdout == "1 1\n"


class TestRenderHelpers:
    def test_bfile_lines_are_index_space_value(self):
        assert render_bfile([5, 8, 13]) == "1 5\n2 8\n3 13\n"

    @pytest.mark.parametrize("fmt", ["tsv", "csv", "md"])
    def test_grid_round_trip(self, fmt):
        assert parse_grid(render_grid(TABLE1, fmt), fmt) == TABLE1
