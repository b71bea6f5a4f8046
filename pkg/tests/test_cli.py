"""
Test CLI commands
"""

import json

import pytest
from click.testing import CliRunner

from kuratowski.cli.main import main


@pytest.fixture
def runner():
    return CliRunner()


class TestCLI:
    """Test CLI commands"""

    def test_cli_group(self, runner):
        """Test CLI group exists"""
        result = runner.invoke(main, ["--help"])
        assert result.exit_code == 0
        assert "Kuratowski Workbench" in result.output

    def test_normalize(self, runner):
        """Test normalize prints the normal form"""
        result = runner.invoke(main, ["normalize", "kcik"])
        assert result.exit_code == 0
        assert "kcik -> cik" in result.output

    def test_normalize_identity(self, runner):
        """Test cc reduces to the identity"""
        result = runner.invoke(main, ["normalize", "cc"])
        assert "cc -> I" in result.output

    def test_normalize_monoid(self, runner):
        """Test listing a monoid"""
        result = runner.invoke(main, ["normalize", "--monoid", "ki"])
        assert result.exit_code == 0
        assert result.output.startswith("7 forms: I i ik iki k ki kik")

    def test_normalize_bad_letter(self, runner):
        """Test an unknown letter is a usage error"""
        result = runner.invoke(main, ["normalize", "kx"])
        assert result.exit_code == 2

    def test_equal_holds(self, runner):
        """Test equality is reported up to the default bound"""
        result = runner.invoke(main, ["equal", "k k g1", "k g1"])
        assert result.exit_code == 0
        assert "equal-up-to(4) [non-conclusive]" in result.output

    def test_equal_distinguished(self, runner):
        """Test a separating space is printed"""
        result = runner.invoke(main, ["equal", "k g1", "i g1", "--max-points", "3"])
        assert result.exit_code == 0
        assert "distinguished-by(2-point space" in result.output

    def test_equal_syntax_error(self, runner):
        """Test a malformed term fails with its position"""
        result = runner.invoke(main, ["equal", "g1 ^", "g1"])
        assert result.exit_code == 1
        assert "position 4" in result.output

    def test_demo_phi(self, runner):
        """Test the phi demonstration passes every step"""
        result = runner.invoke(main, ["demo", "phi", "--size", "10", "--steps", "4"])
        assert result.exit_code == 0
        assert result.output.count("PASS") == 4
        assert "{10}" in result.output

    def test_demo_ej_all_steps(self, runner):
        """Test the default step count"""
        result = runner.invoke(main, ["demo", "ej", "--size", "12"])
        assert result.exit_code == 0
        assert result.output.count("PASS") == 5

    def test_demo_out_of_range(self, runner):
        """Test too many steps is refused with the valid range"""
        result = runner.invoke(main, ["demo", "phi", "--size", "10", "--steps", "5"])
        assert result.exit_code == 2
        assert "1..4" in result.output

    def test_enumerate(self, runner):
        """Test counting topologies"""
        result = runner.invoke(main, ["enumerate", "--points", "3"])
        assert result.exit_code == 0
        assert "9 topologies on 3 point(s)" in result.output

        result = runner.invoke(main, ["enumerate", "--points", "3", "--labeled"])
        assert "29 topologies" in result.output

    def test_enumerate_cap(self, runner):
        """Test eight points, or seven labeled, is refused"""
        result = runner.invoke(main, ["enumerate", "--points", "8"])
        assert result.exit_code == 2

        result = runner.invoke(main, ["enumerate", "--points", "7", "--labeled"])
        assert result.exit_code == 2
        assert "1..6" in result.output

    def test_validate(self, runner, sierpinski_file):
        """Test a valid space file"""
        result = runner.invoke(main, ["validate", "--space", str(sierpinski_file)])
        assert result.exit_code == 0
        assert "valid (2 points" in result.output

    def test_validate_invalid(self, runner, non_transitive_file):
        """Test an invalid space names the failed axiom"""
        result = runner.invoke(main, ["validate", "--space", str(non_transitive_file)])
        assert result.exit_code == 1
        assert "transitivity" in result.output

    def test_validate_malformed(self, runner, temp_output_dir):
        """Test a closure that is not a matrix is reported without a traceback"""
        path = temp_output_dir / "scalar.json"
        path.write_text(json.dumps({"points": 2, "closure": 5}))
        result = runner.invoke(main, ["validate", "--space", str(path)])
        assert result.exit_code == 1
        assert "list of rows" in result.output
        assert "Traceback" not in result.output
        assert not isinstance(result.exception, TypeError)

    def test_count_ki(self, runner):
        """Test closure and interior give seven"""
        result = runner.invoke(main, ["count", "--ops", "ki"])
        assert result.exit_code == 0
        assert "Maximum count: 7" in result.output
        assert "Search: sum" in result.output

    def test_count_kc(self, runner):
        """Test closure and complement give fourteen"""
        result = runner.invoke(main, ["count", "--ops", "kc"])
        assert "Maximum count: 14" in result.output

    def test_count_sweep(self, runner):
        """Test the single-space search"""
        result = runner.invoke(main, ["count", "--ops", "k", "--search", "sweep", "--max-points", "2"])
        assert result.exit_code == 0
        assert "Maximum count: 2" in result.output
        assert "Search: sweep" in result.output

    def test_count_on_space_file(self, runner, sierpinski_file, temp_output_dir):
        """Test counting on a given space and saving the family"""
        out = temp_output_dir / "family.json"
        result = runner.invoke(main, ["count", "--ops", "kc", "--space", str(sierpinski_file), "--out", str(out)])
        assert result.exit_code == 0
        assert "Maximum count: 4" in result.output
        data = json.loads(out.read_text())
        assert data["metadata"]["count"] == 4
        assert data["metadata"]["assignment"] == [[1]]
        assert len(data["family"]) == 4

    def test_count_invalid_space(self, runner, non_transitive_file):
        """Test counting refuses a non-topology"""
        result = runner.invoke(main, ["count", "--ops", "k", "--space", str(non_transitive_file)])
        assert result.exit_code == 1
        assert "not a topology" in result.output

    def test_count_unknown_ops(self, runner):
        """Test an unknown operation letter"""
        result = runner.invoke(main, ["count", "--ops", "kx"])
        assert result.exit_code == 2
        assert "Unknown operation" in result.output

    @pytest.mark.parametrize(
        "args",
        [
            ["--max-points", "0"],
            ["--cap", "0"],
            ["--max-points", "0", "--cap", "0"],
            ["--max-points", "-3"],
            ["--max-points", "8"],
            ["--gens", "0"],
        ],
    )
    def test_count_bad_bounds(self, runner, args):
        """Test out-of-range numbers are usage errors caught before searching"""
        result = runner.invoke(main, ["count", "--ops", "k", *args])
        assert result.exit_code == 2
        assert "Searching" not in result.output

    @pytest.mark.parametrize("extra", [["--max-points", "2"], ["--search", "sweep"], ["--search", "sum"]])
    def test_count_space_conflicts(self, runner, sierpinski_file, extra):
        """Test flags that --space would ignore are rejected"""
        result = runner.invoke(main, ["count", "--ops", "kc", "--space", str(sierpinski_file), *extra])
        assert result.exit_code == 2
        assert "--space" in result.output
        assert "Searching" not in result.output

    def test_count_explicit_sum(self, runner):
        """Test naming the default search still works"""
        result = runner.invoke(main, ["count", "--ops", "k", "--search", "sum", "--max-points", "2"])
        assert result.exit_code == 0
        assert "Search: sum" in result.output

    @pytest.mark.parametrize(
        "args",
        [
            ["hasse", "ki7", "--max-points", "0"],
            ["equal", "k", "kk", "--max-points", "0"],
            ["equal", "k", "kk", "--max-points", "8"],
            ["demo", "phi", "--size", "0"],
        ],
    )
    def test_other_bounds(self, runner, args):
        """Test bounds on the remaining commands"""
        result = runner.invoke(main, args)
        assert result.exit_code == 2

    def test_hasse_dot(self, runner):
        """Test the (k, i) diagram at a small bound"""
        result = runner.invoke(main, ["hasse", "ki7", "--max-points", "3"])
        assert result.exit_code == 0
        assert result.output.startswith("digraph hasse {")
        assert result.output.count("->") == 8

    def test_hasse_saved(self, runner, temp_output_dir):
        """Test writing the diagram to a file"""
        out = temp_output_dir / "ki7.md"
        result = runner.invoke(main, ["hasse", "ki7", "--format", "md", "--max-points", "3", "--out", str(out)])
        assert result.exit_code == 0
        assert "7 elements, 8 covers" in result.output
        assert out.read_text().startswith("| # | element | covered by |")

    def test_hasse_saved_without_suffix(self, runner, temp_output_dir):
        """Test a bare output name gets the format's suffix"""
        out = temp_output_dir / "ki7"
        result = runner.invoke(main, ["hasse", "ki7", "--format", "md", "--max-points", "3", "--out", str(out)])
        assert result.exit_code == 0
        assert "ki7.md" in result.output
        assert (temp_output_dir / "ki7.md").read_text().startswith("| # | element | covered by |")

    def test_table2_large_n(self, runner):
        """Test the closed forms for three generators"""
        result = runner.invoke(main, ["table2", "--n", "3"])
        assert result.exit_code == 0
        assert "18" in result.output
        assert "42" in result.output
        assert "All cells match" in result.output

    def test_table2_cross_check(self, runner):
        """Test the two-generator table agrees with search"""
        result = runner.invoke(main, ["table2", "--n", "2"])
        assert result.exit_code == 0
        assert "All cells match" in result.output

    def test_table2_out_of_range(self, runner):
        """Test five generators is refused"""
        result = runner.invoke(main, ["table2", "--n", "5"])
        assert result.exit_code == 2

    def test_show_defaults(self, runner):
        """Test listing the defaults"""
        result = runner.invoke(main, ["show-defaults"])
        assert result.exit_code == 0
        assert "saturation" in result.output
        assert "ik|^=5" in result.output
