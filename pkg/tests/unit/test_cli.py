"""Unit tests for the unified CLI: log-level overrides, parsing and exit codes."""

from __future__ import annotations

import io
import json
from argparse import Namespace

import pytest

from condlint.cli import main
from condlint.common.types import PatternKind
from condlint.runner.runner_cli import arguments_parse, logLevelOverride_get
from tests.tools.exemplars import CLEAN_SOURCE, EXEMPLARS


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    """Run every CLI test away from any condlint.yml in the working tree"""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("NO_COLOR", raising=False)


def _write(tmp_path, name: str, text: str) -> str:
    target = tmp_path / name
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    return str(target)


class TestLogLevelOverride:
    """Tests for CLI log-level precedence."""

    def test_info_overrides_debug_when_both_set(self) -> None:
        """
        `--info` should suppress debug noise when both flags are present.

        Returns:
            None.
        """
        args = Namespace(debug=True, info=True, warning=False, error=False, critical=False)
        assert logLevelOverride_get(args) == "INFO"

    def test_warning_overrides_info(self) -> None:
        """
        More restrictive levels should take precedence.

        Returns:
            None.
        """
        args = Namespace(debug=True, info=True, warning=True, error=False, critical=False)
        assert logLevelOverride_get(args) == "WARNING"

    def test_no_flags(self) -> None:
        """
        Without flags the config level is kept.

        Returns:
            None.
        """
        args = Namespace(debug=False, info=False, warning=False, error=False, critical=False)
        assert logLevelOverride_get(args) is None


class TestArgumentParsing:
    """Tests for the command parsers."""

    def test_check_defaults(self) -> None:
        """Test unset flags stay None so config values apply"""
        args = arguments_parse(["check", "a.py", "b.py"])
        assert args.command == "check"
        assert args.paths == ["a.py", "b.py"]
        assert args.suggestions is None
        assert args.skip_invalid is None
        assert args.format is None

    def test_check_flags(self) -> None:
        """Test boolean flags and their negations"""
        args = arguments_parse(["check", "-", "--no-suggestions", "--skip-invalid", "--workers", "3"])
        assert args.suggestions is False
        assert args.skip_invalid is True
        assert args.workers == 3

    def test_corpus(self) -> None:
        """Test corpus options"""
        args = arguments_parse(
            ["corpus", "root", "--layout", "{group}/{student}.py", "--prevalence-basis", "submission"]
        )
        assert args.root == "root"
        assert args.layout == "{group}/{student}.py"
        assert args.prevalence_basis == "submission"

    def test_patterns_identifiers(self) -> None:
        """Test patterns takes optional identifiers"""
        assert arguments_parse(["patterns"]).identifiers == []
        assert arguments_parse(["patterns", "nested_if"]).identifiers == ["nested_if"]


class TestCheckCommand:
    """Exit codes and output of `condlint check`"""

    def test_clean_file(self, tmp_path, capsys) -> None:
        """Test a clean file exits 0 with an empty JSON list"""
        path = _write(tmp_path, "clean.py", CLEAN_SOURCE)
        assert main(["check", path]) == 0
        assert json.loads(capsys.readouterr().out) == []

    def test_diagnostics_found(self, tmp_path, capsys) -> None:
        """Test a confusing else exits 1 and is reported"""
        path = _write(tmp_path, "bad.py", EXEMPLARS[PatternKind.CONFUSING_ELSE])
        assert main(["check", path, "--format", "json"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert [item["pattern"] for item in data] == ["confusing_else"]
        assert data[0]["suggestion"]["replacement_text"].startswith("if(cond):")

    def test_text_with_patch(self, tmp_path, capsys) -> None:
        """Test text output appends a unified diff"""
        path = _write(tmp_path, "bad.py", EXEMPLARS[PatternKind.IF_ELSE_RETURN_BOOL])
        assert main(["check", path, "--format", "text"]) == 1
        out = capsys.readouterr().out
        assert f"{path}:2:5: if_else_return_bool" in out
        assert f"--- a/{path}" in out
        assert "+    return cond" in out

    def test_no_suggestions(self, tmp_path, capsys) -> None:
        """Test --no-suggestions drops suggestions and patches"""
        path = _write(tmp_path, "bad.py", EXEMPLARS[PatternKind.IF_ELSE_RETURN_BOOL])
        assert main(["check", path, "--format", "json", "--no-suggestions"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert "suggestion" not in data[0]

    def test_pattern_filter(self, tmp_path, capsys) -> None:
        """Test --patterns hides other kinds"""
        path = _write(tmp_path, "bad.py", EXEMPLARS[PatternKind.CONFUSING_ELSE])
        assert main(["check", path, "--format", "json", "--patterns", "nested_if"]) == 0
        assert json.loads(capsys.readouterr().out) == []

    def test_unknown_pattern(self, tmp_path, capsys) -> None:
        """Test an unknown identifier is a usage error"""
        path = _write(tmp_path, "clean.py", CLEAN_SOURCE)
        assert main(["check", path, "--patterns", "bogus"]) == 2
        err = capsys.readouterr().err
        assert "unknown pattern 'bogus'" in err
        assert "nested_if" in err

    def test_missing_path(self, tmp_path, capsys) -> None:
        """Test a missing file is a usage error"""
        assert main(["check", str(tmp_path / "absent.py")]) == 2
        assert "no such file" in capsys.readouterr().err

    def test_parse_error(self, tmp_path, capsys) -> None:
        """Test an unparseable file exits 3 with a located notice"""
        path = _write(tmp_path, "broken.py", "def f(:\n    pass\n")
        assert main(["check", path, "--format", "json"]) == 3
        assert f"{path}:1:" in capsys.readouterr().err

    def test_parse_error_skipped(self, tmp_path, capsys) -> None:
        """Test --skip-invalid ignores unparseable files for the exit code"""
        path = _write(tmp_path, "broken.py", "def f(:\n    pass\n")
        assert main(["check", path, "--format", "json", "--skip-invalid"]) == 0

    def test_parse_error_outranks_diagnostics(self, tmp_path) -> None:
        """Test exit 3 wins over exit 1"""
        broken = _write(tmp_path, "broken.py", "def f(:\n    pass\n")
        bad = _write(tmp_path, "bad.py", EXEMPLARS[PatternKind.NESTED_IF])
        assert main(["check", broken, bad, "--format", "json"]) == 3

    def test_directory(self, tmp_path, capsys) -> None:
        """Test directories are expanded to their Python files"""
        _write(tmp_path, "pkg/a.py", EXEMPLARS[PatternKind.NESTED_IF])
        _write(tmp_path, "pkg/sub/b.py", EXEMPLARS[PatternKind.ELSE_IF])
        _write(tmp_path, "pkg/notes.txt", "if x:\n")
        assert main(["check", str(tmp_path / "pkg"), "--format", "json"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert sorted(item["pattern"] for item in data) == ["else_if", "nested_if"]

    def test_stdin(self, monkeypatch, capsys) -> None:
        """Test '-' reads standard input"""
        monkeypatch.setattr("sys.stdin", io.StringIO(EXEMPLARS[PatternKind.NESTED_IF]))
        assert main(["check", "-", "--format", "json"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert data[0]["file"] == "<stdin>"

    def test_config_file(self, tmp_path, capsys) -> None:
        """Test config values apply and flags override them"""
        path = _write(tmp_path, "bad.py", EXEMPLARS[PatternKind.NESTED_IF])
        config = _write(tmp_path, "custom.yml", "check:\n  format: csv\n  patterns: [else_if]\n")
        assert main(["check", path, "--config", config]) == 0
        assert capsys.readouterr().out.startswith("file,pattern,")
        assert main(["check", path, "--config", config, "--patterns", "nested_if"]) == 1

    def test_missing_config(self, tmp_path, capsys) -> None:
        """Test an explicit missing config is a usage error"""
        path = _write(tmp_path, "clean.py", CLEAN_SOURCE)
        assert main(["check", path, "--config", str(tmp_path / "absent.yml")]) == 2

    def test_bad_config(self, tmp_path, capsys) -> None:
        """Test invalid config values are usage errors"""
        path = _write(tmp_path, "clean.py", CLEAN_SOURCE)
        listing = _write(tmp_path, "list.yml", "- a\n- b\n")
        assert main(["check", path, "--config", listing]) == 2
        assert "config:" in capsys.readouterr().err
        workers = _write(tmp_path, "workers.yml", "check:\n  workers: 0\n")
        assert main(["check", path, "--config", workers]) == 2


class TestCorpusCommand:
    """Exit codes and output of `condlint corpus`"""

    def test_reports_to_stdout(self, corpus_tree, capsys) -> None:
        """Test the combined JSON report"""
        root = corpus_tree(
            {
                "lab1/alice/main.py": EXEMPLARS[PatternKind.NESTED_IF],
                "lab1/bob/main.py": CLEAN_SOURCE,
            }
        )
        assert main(["corpus", str(root), "--format", "json"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert set(data) == {"prevalence", "students", "totals", "summary", "invalid"}
        assert data["summary"]["total_diagnostics"] == 1
        assert data["summary"]["valid_submissions"] == 2

    def test_out_directory(self, corpus_tree, tmp_path) -> None:
        """Test --out writes one file per report"""
        root = corpus_tree({"lab1/alice/main.py": EXEMPLARS[PatternKind.NESTED_IF]})
        out = tmp_path / "reports"
        assert main(["corpus", str(root), "--format", "csv", "--out", str(out)]) == 1
        assert sorted(p.name for p in out.iterdir()) == [
            "invalid.csv",
            "prevalence.csv",
            "students.csv",
            "summary.csv",
            "totals.csv",
        ]
        assert (out / "prevalence.csv").read_text().startswith("pattern,group,count,")

    def test_clean_corpus(self, corpus_tree, capsys) -> None:
        """Test a corpus without anti-patterns exits 0"""
        root = corpus_tree({"lab1/alice/main.py": CLEAN_SOURCE})
        assert main(["corpus", str(root), "--format", "json"]) == 0

    def test_invalid_submissions(self, corpus_tree, capsys) -> None:
        """Test invalid submissions are tallied, and fail only without --skip-invalid"""
        root = corpus_tree(
            {"lab1/alice/main.py": CLEAN_SOURCE, "lab1/bob/main.py": "def f(:\n    pass\n"}
        )
        assert main(["corpus", str(root), "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["invalid"]["invalid_submissions"] == 1
        assert main(["corpus", str(root), "--format", "json", "--no-skip-invalid"]) == 3

    def test_missing_root(self, tmp_path, capsys) -> None:
        """Test a missing root is a usage error"""
        assert main(["corpus", str(tmp_path / "absent")]) == 2
        assert "does not exist" in capsys.readouterr().err

    def test_no_matching_files(self, corpus_tree, capsys) -> None:
        """Test a root without submissions is a usage error"""
        root = corpus_tree({"notes.txt": "x\n"})
        assert main(["corpus", str(root)]) == 2
        assert "match layout" in capsys.readouterr().err

    def test_bad_layout(self, corpus_tree, capsys) -> None:
        """Test a malformed layout is a usage error"""
        root = corpus_tree({"lab1/alice/main.py": CLEAN_SOURCE})
        assert main(["corpus", str(root), "--layout", "{student}/*.py"]) == 2


class TestPatternsCommand:
    """`condlint patterns`"""

    def test_list(self, capsys) -> None:
        """Test the whole catalogue is listed"""
        assert main(["patterns", "--format", "json"]) == 0
        assert len(json.loads(capsys.readouterr().out)) == 15

    def test_describe(self, capsys) -> None:
        """Test selected identifiers are described"""
        assert main(["patterns", "Nested-If", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert [item["identifier"] for item in data] == ["nested_if"]

    def test_unknown(self, capsys) -> None:
        """Test an unknown identifier is a usage error"""
        assert main(["patterns", "bogus"]) == 2


class TestUsage:
    """Argument errors"""

    def test_no_command(self, capsys) -> None:
        """Test a missing command exits 2"""
        assert main([]) == 2

    def test_bad_format(self, capsys) -> None:
        """Test an unknown --format exits 2"""
        assert main(["patterns", "--format", "xml"]) == 2

    def test_version(self, capsys) -> None:
        """Test --version exits 0"""
        assert main(["--version"]) == 0
        assert capsys.readouterr().out.startswith("condlint ")
