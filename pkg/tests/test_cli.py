import json
import warnings
from pathlib import Path

import pytest

import franklin_forge as ff
from franklin_forge.cli import (
    EXIT_EXHAUSTED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VERIFY_FAIL,
    SquareDocument,
    SquareFormatError,
    emit_square,
    main,
    parse_square,
)

GOLDEN_DIR = Path(__file__).parent / "golden"


def write_fixture(tmp_path, name):
    path = tmp_path / f"{name}.json"
    assert main(["fixtures", "--export", name, "--out", str(path)]) == EXIT_OK
    return path


class TestFormats:
    def test_json_round_trip(self, mp8):
        square, params = mp8
        doc = SquareDocument.from_square(square, p=params.p, metadata={"name": "x"})
        text = emit_square(doc)
        again = parse_square(text)
        assert again.entries == doc.entries
        assert emit_square(again) == text  # canonical form is a fixed point

    def test_csv_round_trip(self, fig1):
        square, _ = fig1
        doc = SquareDocument.from_square(square)
        text = emit_square(doc, "csv")
        again = parse_square(text, "csv")
        assert again.entries == square.to_lists()
        assert emit_square(again, "csv") == text

    def test_minimal_json_document(self):
        doc = parse_square('{"order":2,"entries":[[0,1],[2,3]]}')
        assert doc.order == 2 and doc.entries == [[0, 1], [2, 3]]

    def test_dimension_error(self):
        rows = [",".join(str(8 * i + j) for j in range(7)) for i in range(8)]
        with pytest.raises(SquareFormatError):
            parse_square("\n".join(rows), "csv")

    def test_non_integer_token(self):
        with pytest.raises(SquareFormatError):
            parse_square("0,1\nx,3", "csv")
        with pytest.raises(SquareFormatError):
            parse_square('{"order":2,"entries":[[0,1],[2,3.5]]}')

    def test_duplicate_symbols_warn(self):
        with pytest.warns(UserWarning, match="duplicate"):
            parse_square('{"order":2,"entries":[[0,0],[1,2]]}')

    def test_unknown_schema_rejected(self):
        with pytest.raises(SquareFormatError):
            parse_square('{"schema":"other/9","order":2,"entries":[[0,1],[2,3]]}')

    @pytest.mark.parametrize(
        "name", ["figure1_franklin8", "figure2_mp8", "figure2_mp9", "sec14_franklin27"]
    )
    def test_golden_serialization(self, name, fixture_map):
        square, params = fixture_map[name]
        doc = SquareDocument.from_square(square, p=params.p, metadata={"name": name})
        assert emit_square(doc) == (GOLDEN_DIR / f"{name}.json").read_text()


class TestCommands:
    def test_verify_order27(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "sec14_franklin27")
        capsys.readouterr()
        code = main(["verify", "--p", "3", "--in", str(path), "--json"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert json.loads(out)["classification"] == "pandiagonal_franklin_type_p"

    def test_verify_output_is_byte_identical(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "figure1_franklin8")
        capsys.readouterr()
        main(["verify", "--p", "2", "--in", str(path), "--json"])
        first = capsys.readouterr().out
        main(["verify", "--p", "2", "--in", str(path), "--json"])
        assert capsys.readouterr().out == first

    def test_verify_failure_exit_code(self, tmp_path, capsys):
        doc = SquareDocument.from_square(
            ff.NaturalSquare.from_rows([[8 * i + j for j in range(8)] for i in range(8)])
        )
        path = tmp_path / "reading.json"
        path.write_text(emit_square(doc))
        assert main(["verify", "--p", "2", "--in", str(path)]) == EXIT_VERIFY_FAIL

    def test_verify_expect_classification(self, tmp_path):
        path = write_fixture(tmp_path, "figure2_mp8")
        args = ["verify", "--p", "2", "--in", str(path)]
        assert main(args + ["--expect", "most_perfect_type_p"]) == EXIT_OK
        assert main(args + ["--expect", "franklin_type_p"]) == EXIT_VERIFY_FAIL

    def test_verify_weakened_mode(self, tmp_path):
        path = write_fixture(tmp_path, "sec14_franklin27")
        assert main(["verify", "--p", "3", "--in", str(path), "--weakened", "--alpha", "2"]) == EXIT_OK

    def test_theta_then_verify_pipeline(self, tmp_path):
        src = write_fixture(tmp_path, "figure2_mp8")
        out = tmp_path / "franklin8.json"
        assert main(["theta", "--p", "2", "--in", str(src), "--out", str(out)]) == EXIT_OK
        assert (
            main(["verify", "--p", "2", "--in", str(out), "--expect", "pandiagonal_franklin_type_p"])
            == EXIT_OK
        )

    def test_theta_is_involution_through_files(self, tmp_path):
        src = write_fixture(tmp_path, "figure2_mp9")
        once = tmp_path / "once.json"
        twice = tmp_path / "twice.json"
        main(["theta", "--p", "3", "--in", str(src), "--out", str(once)])
        main(["theta", "--p", "3", "--in", str(once), "--out", str(twice)])
        assert parse_square(twice.read_text()).entries == parse_square(src.read_text()).entries

    def test_pattern_sum_figure1(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "figure1_franklin8")
        capsys.readouterr()
        code = main(
            ["pattern", "--p", "2", "--k", "1", "--direction", "up", "--alpha", "1",
             "--offset", "1", "--sum", "--in", str(path)]
        )
        assert code == EXIT_OK
        assert capsys.readouterr().out.strip() == "252"

    def test_pattern_cells_output(self, capsys):
        code = main(
            ["pattern", "--p", "2", "--k", "1", "--direction", "up", "--alpha", "1",
             "--offset", "1", "--cells"]
        )
        assert code == EXIT_OK
        cells = {tuple(c) for c in json.loads(capsys.readouterr().out)}
        assert cells == {(1, 0), (2, 1), (3, 2), (4, 3), (4, 4), (3, 5), (2, 6), (1, 7)}

    def test_construct_then_verify(self, tmp_path):
        out = tmp_path / "mp.json"
        assert main(["construct", "--p", "2", "--r", "3", "--out", str(out)]) == EXIT_OK
        assert (
            main(["verify", "--p", "2", "--in", str(out), "--expect", "most_perfect_type_p"])
            == EXIT_OK
        )

    def test_construct_exhaustion_exit_code(self, tmp_path, capsys):
        code = main(
            ["construct", "--p", "5", "--r", "2", "--family", "fixtures_only",
             "--out", str(tmp_path / "x.json")]
        )
        assert code == EXIT_EXHAUSTED

    def test_fixtures_list(self, capsys):
        assert main(["fixtures", "--list"]) == EXIT_OK
        out = capsys.readouterr().out
        for name in ("figure1_franklin8", "figure2_mp8", "figure2_mp9", "sec14_franklin27"):
            assert name in out

    def test_fixtures_unknown_name(self, capsys):
        assert main(["fixtures", "--export", "nonesuch"]) == EXIT_INPUT_ERROR

    def test_report_contains_band_sums(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "sec14_franklin27")
        capsys.readouterr()
        assert main(["report", "--p", "3", "--in", str(path)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "s_0=6552" in out and "s_1=3276" in out
        assert "classification: pandiagonal_franklin_type_p" in out

    def test_input_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["verify", "--p", "2", "--in", str(bad)]) == EXIT_INPUT_ERROR
        assert main(["verify", "--p", "2", "--in", str(tmp_path / "missing.json")]) == EXIT_INPUT_ERROR

    def test_verify_rejects_invalid_params(self, tmp_path, capsys):
        path = write_fixture(tmp_path, "figure2_mp9")
        assert main(["verify", "--p", "2", "--in", str(path)]) == EXIT_INPUT_ERROR  # 2 does not divide 9

    def test_stdin_pipeline(self, tmp_path, capsys, monkeypatch):
        import io

        src = write_fixture(tmp_path, "figure2_mp8")
        capsys.readouterr()
        monkeypatch.setattr("sys.stdin", io.StringIO(src.read_text()))
        assert main(["theta", "--p", "2"]) == EXIT_OK
        transformed = capsys.readouterr().out
        monkeypatch.setattr("sys.stdin", io.StringIO(transformed))
        assert main(["verify", "--p", "2", "--expect", "pandiagonal_franklin_type_p"]) == EXIT_OK
