"""Command-line front end: documented invocations, output shapes, exit
codes, and byte-level determinism. Runs in-process via main(argv)."""

import json

import pytest

from picboundary.cli import main, parse_semigroup


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_three_seven_eight(self, capsys):
        code, out, _ = run(capsys, "analyze", "3,7,8")
        record = json.loads(out)
        assert code == 0
        assert record["conductor"] == 6
        assert record["generators"] == [3, 7, 8]

    def test_two_three(self, capsys):
        code, out, _ = run(capsys, "analyze", "2,3")
        assert code == 0
        assert json.loads(out)["delta"] == 1

    def test_quartic_ambient(self, capsys):
        code, out, _ = run(capsys, "analyze", "4,13,18,19")
        record = json.loads(out)
        assert code == 0
        assert record["conductor"] == 16
        assert record["delta"] == 11

    def test_parse_error_exits_2(self, capsys):
        code, out, err = run(capsys, "analyze", "3,x,8")
        assert code == 2
        assert out == ""
        assert "parse error" in err

    def test_not_coprime_is_engine_rejection(self, capsys):
        code, _, err = run(capsys, "analyze", "4,6")
        assert code == 1
        assert "NotCoprime" in err


class TestEnumerate:
    def test_colength_two_has_three_rows(self, capsys):
        code, out, _ = run(capsys, "enumerate", "3,4,5", "--d", "2")
        payload = json.loads(out)
        assert code == 0
        assert len(payload["rows"]) == 3
        assert all(r["in_filtration"] is True for r in payload["rows"])

    def test_colength_zero_single_row(self, capsys):
        code, out, _ = run(capsys, "enumerate", "3,4,5", "--d", "0")
        payload = json.loads(out)
        assert code == 0
        assert len(payload["rows"]) == 1
        # off the colength-delta stratum the filtration column is null
        assert payload["rows"][0]["in_filtration"] is None

    def test_filt_only(self, capsys):
        code, out, _ = run(capsys, "enumerate", "3,4,5", "--d", "2", "--filt-only")
        assert code == 0
        assert len(json.loads(out)["rows"]) == 3

    def test_out_of_range_colength(self, capsys):
        code, _, err = run(capsys, "enumerate", "3,4,5", "--d", "99")
        assert code == 1
        assert "DOutOfRange" in err


class TestLimit:
    def test_normalization_family(self, capsys):
        code, out, _ = run(capsys, "limit", "3,4,5", "--family", "t + b")
        payload = json.loads(out)
        assert code == 0
        assert payload["limit"]["value_set"] == "{1}+[3,)"
        assert payload["leads"] == [1]

    def test_two_step_family(self, capsys):
        code, out, _ = run(capsys, "limit", "3,4,5", "--family", "t^2 + b*t + b^2")
        assert code == 0
        assert json.loads(out)["limit"]["value_set"] == "{}+[2,)"

    def test_constant_family_returns_the_ring(self, capsys):
        code, out, _ = run(capsys, "limit", "3,4,5", "--family", "1")
        assert code == 0
        assert json.loads(out)["limit"]["value_set"] == "{0}+[3,)"

    def test_basis_rows_are_exact_strings(self, capsys):
        _, out, _ = run(capsys, "limit", "3,4,5", "--family", "t + b")
        payload = json.loads(out)
        assert all(
            isinstance(x, str) for row in payload["basis"] for x in row
        )

    def test_family_parse_error_exits_2(self, capsys):
        code, _, err = run(capsys, "limit", "3,4,5", "--family", "t + + b")
        assert code == 2
        assert "parse error" in err

    def test_zero_family_rejected(self, capsys):
        code, _, err = run(capsys, "limit", "3,4,5", "--family", "0")
        assert code == 1
        assert "NotAUnit" in err

    def test_scaled_family_is_normalized(self, capsys):
        # t*(1 + b) spans the same module as 1 + b after the t-shift
        code, out, _ = run(capsys, "limit", "3,4,5", "--family", "t + b*t")
        assert code == 0
        assert json.loads(out)["limit"]["value_set"] == "{0}+[3,)"


class TestClassify:
    def test_staircase_report(self, capsys):
        code, out, _ = run(capsys, "classify", "3,4,5")
        report = json.loads(out)
        assert code == 0
        assert report["component_surrogate"] == 2
        assert report["filtration_closure_status"] == "Proved"

    def test_full_semigroup(self, capsys):
        code, out, _ = run(capsys, "classify", "1")
        assert code == 0
        assert json.loads(out)["semigroup"]["conductor"] == 0

    def test_example7_ring(self, capsys):
        code, out, _ = run(capsys, "classify", "3,5,7")
        report = json.loads(out)
        assert code == 0
        assert report["boundary_necessary_ok"] is True


class TestReplicateExamples:
    def test_only_one(self, capsys):
        code, out, _ = run(capsys, "replicate-examples", "--only", "1")
        records = json.loads(out)
        assert code == 0
        assert len(records) == 1
        assert records[0]["example"] == 1
        assert records[0]["status"] == "replicated"

    def test_only_five_documents_the_inconsistency(self, capsys):
        code, out, _ = run(capsys, "replicate-examples", "--only", "5")
        record = json.loads(out)[0]
        assert code == 0
        assert record["kind"] == "documented-inconsistency"
        assert record["status"] == "replicated"

    def test_bad_example_number_rejected_by_argparse(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["replicate-examples", "--only", "9"])
        assert err.value.code == 2


class TestSurvey:
    def test_v0_max_two_csv(self, capsys):
        code, out, _ = run(capsys, "survey", "--v0-max", "2", "--csv")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 3
        assert lines[0].startswith("generators,conductor,delta")
        assert lines[1].startswith("1,0,0,0,1,true")
        assert lines[2].startswith("2 3,2,1,1,2,true")

    def test_v0_max_two_json(self, capsys):
        code, out, _ = run(capsys, "survey", "--v0-max", "2")
        rows = json.loads(out)
        assert code == 0
        assert [r["generators"] for r in rows] == ["1", "2 3"]

    def test_reruns_are_byte_identical(self, capsys):
        _, first, _ = run(capsys, "survey", "--v0-max", "8", "--csv")
        _, second, _ = run(capsys, "survey", "--v0-max", "8", "--csv")
        assert first == second

    def test_worker_count_does_not_change_output(self, capsys):
        _, one, _ = run(capsys, "survey", "--v0-max", "8", "--csv", "--workers", "1")
        _, eight, _ = run(capsys, "survey", "--v0-max", "8", "--csv", "--workers", "8")
        assert one == eight


class TestParsing:
    def test_parse_semigroup_strips_spaces(self):
        assert parse_semigroup("3, 4, 5").conductor == 3

    def test_unknown_flag_rejected(self):
        with pytest.raises(SystemExit) as err:
            main(["analyze", "3,4,5", "--bogus"])
        assert err.value.code == 2

    def test_missing_subcommand_rejected(self):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2
