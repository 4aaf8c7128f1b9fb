import json
import os
import re
import subprocess
import sys

import pytest
from click.testing import CliRunner

from outrank import ThresholdConfig, build_report
from outrank.cli import main
from outrank.formats import read_matrix_csv, report_to_dict

from test_survey import TABLE_1_TARGETS, synthetic_dataset


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args))


class TestRank:
    def test_text_report_lists_edges_and_kernel(self, runner, table1_path):
        result = invoke(runner, "rank", "--matrix", str(table1_path), "--c-star", "0.75")
        assert result.exit_code == 0, result.output
        for edge in ["R_1 -> R_2", "R_1 -> R_3", "R_3 -> R_2", "R_4 -> R_2", "R_4 -> R_3"]:
            assert edge in result.output
        assert "Kernel (best in class): R_1, R_4" in result.output

    def test_dot_output(self, runner, table1_path):
        result = invoke(runner, "rank", "--matrix", str(table1_path), "--format", "dot")
        assert result.exit_code == 0
        assert len(re.findall(r'^  "\w+" \[label=', result.output, re.MULTILINE)) == 4
        assert len(re.findall(r"->", result.output)) == 5

    def test_missing_input_is_usage_error(self, runner):
        result = invoke(runner, "rank", "--matrix", "missing.csv")
        assert result.exit_code == 2

    def test_invalid_c_star_is_usage_error(self, runner, table1_path):
        result = invoke(runner, "rank", "--matrix", str(table1_path), "--c-star", "1.5")
        assert result.exit_code == 2

    def test_invalid_d_star_is_usage_error(self, runner, table1_path):
        result = invoke(runner, "rank", "--matrix", str(table1_path), "--d-star", "-3")
        assert result.exit_code == 2
        result = invoke(runner, "rank", "--matrix", str(table1_path), "--d-star", "much")
        assert result.exit_code == 2

    def test_data_validation_failure_exit_1(self, runner, tmp_path):
        bad = tmp_path / "one.csv"
        bad.write_text("alternative,x\nonly,1\n")
        result = invoke(runner, "rank", "--matrix", str(bad))
        assert result.exit_code == 1

    def test_malformed_csv_exit_1(self, runner, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("wrong,header\n1,2\n")
        result = invoke(runner, "rank", "--matrix", str(bad))
        assert result.exit_code == 1

    @pytest.mark.parametrize("name", ["table1.csv", "suppliers.csv"])
    def test_json_round_trip_equals_library_report(self, runner, table1_path, name):
        path = table1_path.parent / name
        criteria_path = path.with_suffix(".criteria.json")
        args = ["rank", "--matrix", str(path), "--format", "json"]
        matrix = read_matrix_csv(path.read_text())
        if criteria_path.exists():
            args += ["--criteria", str(criteria_path)]
            from outrank.formats import apply_criteria_config, parse_criteria_config

            matrix = apply_criteria_config(matrix, parse_criteria_config(criteria_path.read_text()))
        result = invoke(runner, *args)
        assert result.exit_code == 0
        emitted = json.loads(result.output)
        expected = report_to_dict(build_report(matrix, thresholds=ThresholdConfig(c_star=0.75)))
        assert emitted == expected

    def test_out_file(self, runner, table1_path, tmp_path):
        out = tmp_path / "report.json"
        result = invoke(
            runner, "rank", "--matrix", str(table1_path), "--format", "json", "--out", str(out)
        )
        assert result.exit_code == 0
        assert json.loads(out.read_text())["kernel"] == ["R_1", "R_4"]

    def test_d_star_inf_accepted(self, runner, table1_path):
        result = invoke(runner, "rank", "--matrix", str(table1_path), "--d-star", "inf")
        assert result.exit_code == 0

    def test_numeric_d_star_prunes(self, runner, table1_path):
        result = invoke(runner, "rank", "--matrix", str(table1_path), "--d-star", "0.1")
        assert result.exit_code == 0
        assert "R_3 -> R_2" not in result.output
        assert "R_1 -> R_2" in result.output

    def test_criteria_config_overrides_weights(self, runner, table1_path, tmp_path):
        config = tmp_path / "criteria.json"
        config.write_text(
            json.dumps(
                [
                    {"id": "ATT_1", "weight": 1.0},
                    {"id": "ATT_2", "weight": 0.0},
                    {"id": "ATT_3", "weight": 0.0},
                    {"id": "ATT_4", "weight": 0.0},
                ]
            )
        )
        result = invoke(
            runner,
            "rank",
            "--matrix",
            str(table1_path),
            "--criteria",
            str(config),
            "--format",
            "json",
        )
        assert result.exit_code == 0
        doc = json.loads(result.output)
        # product column alone makes Tesco (best product) outrank everyone
        assert doc["kernel"] == ["R_1"]


class TestDeterminism:
    def test_same_invocation_same_bytes(self, runner, table1_path):
        results = [
            invoke(runner, "rank", "--matrix", str(table1_path), "--format", "json").output
            for _ in range(2)
        ]
        assert results[0] == results[1]

    @pytest.mark.parametrize("fmt", ["text", "json", "dot"])
    def test_cross_process_bytes_stable_under_hash_seed(self, table1_path, fmt):
        outputs = []
        for seed in ("0", "1"):
            env = dict(os.environ, PYTHONHASHSEED=seed)
            proc = subprocess.run(
                [sys.executable, "-m", "outrank", "rank", "--matrix", str(table1_path),
                 "--format", fmt],
                capture_output=True,
                env=env,
                check=True,
            )
            outputs.append(proc.stdout)
        assert outputs[0] == outputs[1]


class TestExportDot:
    def test_matches_rank_dot(self, runner, table1_path):
        via_rank = invoke(runner, "rank", "--matrix", str(table1_path), "--format", "dot")
        via_export = invoke(runner, "export-dot", "--matrix", str(table1_path))
        assert via_export.exit_code == 0
        assert via_export.output == via_rank.output

    def test_kernel_attribute_present(self, runner, table1_path):
        result = invoke(runner, "export-dot", "--matrix", str(table1_path))
        assert 'kernel=true' in result.output


class TestSweep:
    def test_text_mode(self, runner, table1_path):
        result = invoke(runner, "sweep", "--matrix", str(table1_path))
        assert result.exit_code == 0
        assert "critical thresholds: 0.25, 0.5, 0.75, 1.0" in result.output

    def test_json_mode(self, runner, table1_path):
        result = invoke(runner, "sweep", "--matrix", str(table1_path), "--format", "json")
        doc = json.loads(result.output)
        assert doc["critical_thresholds"] == [0.25, 0.5, 0.75, 1.0]

    def test_grid_mode(self, runner, table1_path):
        result = invoke(
            runner, "sweep", "--matrix", str(table1_path), "--grid", "0.2,0.8", "--format", "json"
        )
        doc = json.loads(result.output)
        assert [p["c_star"] for p in doc["points"]] == [0.2, 0.8]

    def test_bad_grid_usage_error(self, runner, table1_path):
        result = invoke(runner, "sweep", "--matrix", str(table1_path), "--grid", "a,b")
        assert result.exit_code == 2

    def test_perturbation_summary(self, runner, table1_path):
        result = invoke(
            runner,
            "sweep",
            "--matrix",
            str(table1_path),
            "--perturb-delta",
            "0.01",
            "--perturb-samples",
            "50",
            "--seed",
            "3",
            "--format",
            "json",
        )
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["perturbation"]["kernel_preserved_fraction"] == 1.0
        assert doc["perturbation"]["baseline_kernel"] == ["R_1", "R_4"]


class TestIngest:
    def test_survey_to_matrix_to_rank(self, runner, tmp_path):
        survey = tmp_path / "survey.csv"
        survey.write_text(synthetic_dataset(TABLE_1_TARGETS, respondents=214))
        matrix_csv = tmp_path / "matrix.csv"
        result = invoke(runner, "ingest", "--survey", str(survey), "--out", str(matrix_csv))
        assert result.exit_code == 0, result.output

        matrix = read_matrix_csv(matrix_csv.read_text())
        assert matrix.alternative_ids == ("R_1", "R_2", "R_3", "R_4")
        row = matrix.alternative_ids.index("R_2")
        for j, expected in enumerate((3.91, 3.73, 3.42, 2.95)):
            assert abs(matrix.scores[row, j] - expected) < 0.005

        ranked = invoke(runner, "rank", "--matrix", str(matrix_csv), "--format", "json")
        assert ranked.exit_code == 0
        assert json.loads(ranked.output)["kernel"] == ["R_1", "R_4"]

    def test_strict_mode_aborts(self, runner, tmp_path):
        from test_survey import HEADER, row as survey_row
        from outrank.survey import N_ITEMS

        survey = tmp_path / "survey.csv"
        bad_items = [4] * N_ITEMS
        bad_items[3] = 7
        survey.write_text(
            "\n".join([HEADER, survey_row("s1", "r1", bad_items)]) + "\n"
        )
        result = invoke(runner, "ingest", "--survey", str(survey), "--strict")
        assert result.exit_code == 1

    def test_non_strict_warns_and_continues(self, runner, tmp_path):
        from test_survey import HEADER, row as survey_row
        from outrank.survey import N_ITEMS

        bad_items = [4] * N_ITEMS
        bad_items[3] = 7
        survey = tmp_path / "survey.csv"
        survey.write_text(
            "\n".join(
                [
                    HEADER,
                    survey_row("s1", "r1", bad_items),
                    survey_row("s1", "r2", [4] * N_ITEMS),
                    survey_row("s2", "r1", [3] * N_ITEMS),
                ]
            )
            + "\n"
        )
        result = invoke(runner, "ingest", "--survey", str(survey))
        assert result.exit_code == 0
        assert "out of range" in result.stderr

    def test_single_store_fails_validation(self, runner, tmp_path):
        from test_survey import HEADER, row as survey_row
        from outrank.survey import N_ITEMS

        survey = tmp_path / "survey.csv"
        survey.write_text("\n".join([HEADER, survey_row("s1", "r1", [4] * N_ITEMS)]) + "\n")
        result = invoke(runner, "ingest", "--survey", str(survey))
        assert result.exit_code == 1


class TestServeWiring:
    def test_help_shows_static_and_port(self, runner):
        result = invoke(runner, "serve", "--help")
        assert result.exit_code == 0
        assert "--port" in result.output
        assert "--static" in result.output
