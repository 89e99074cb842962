"""Renderer tests, including the acceptance checks for the three presets.

Preset CSVs are produced by invoking the sweep CLI as a subprocess, i.e.
through its public command-line interface only.
"""

import subprocess
import sys

import pytest

from plotviz import EXPECTED_COLUMNS, RenderError, load_csv, main, render

HEADER = ",".join(EXPECTED_COLUMNS)

SMALL_CSV = HEADER + "\n" + "\n".join(
    f"{eps},0.05,0.008,{eps * 0.13},0.0,0.0,0.0,1e-5,1e-5,1e-5,0.01,0.0,"
    for eps in (0.0, 0.1, 0.2)
) + "\n"


@pytest.fixture(scope="session")
def preset_csvs(tmp_path_factory):
    base = tmp_path_factory.mktemp("csv")
    paths = {}
    for kind in ("fig1", "fig2", "fig3"):
        path = base / f"{kind}.csv"
        subprocess.run(
            [sys.executable, "-m", "dceqi", "figure", kind, "--out", str(path)],
            check=True,
        )
        paths[kind] = path
    return paths


class TestAcceptance:
    def test_renders_all_presets_to_svg(self, preset_csvs, tmp_path):
        for kind, csv_path in preset_csvs.items():
            out = tmp_path / f"{kind}.svg"
            assert main([kind, str(csv_path), str(out)]) == 0
            assert out.exists() and out.stat().st_size > 0
            print(f"PASS  {kind} rendered to SVG ({out.stat().st_size} bytes)")

    def test_rerender_is_byte_identical(self, preset_csvs, tmp_path):
        for kind, csv_path in preset_csvs.items():
            first = tmp_path / f"{kind}_a.svg"
            second = tmp_path / f"{kind}_b.svg"
            assert main([kind, str(csv_path), str(first)]) == 0
            assert main([kind, str(csv_path), str(second)]) == 0
            assert first.read_bytes() == second.read_bytes(), kind
        print("PASS  re-rendered SVGs byte-identical")

    def test_fig1_contains_exactly_two_curves(self, preset_csvs, tmp_path):
        out = tmp_path / "fig1.svg"
        assert main(["fig1", str(preset_csvs["fig1"]), str(out)]) == 0
        text = out.read_text(encoding="utf-8")
        assert text.count('id="curve-') == 2
        assert 'id="curve-power"' in text
        assert 'id="curve-steering"' in text
        print("PASS  fig1 SVG contains exactly two curves")


class TestValidation:
    def test_header_only_csv_errors_without_output(self, tmp_path, capsys):
        csv_path = tmp_path / "empty.csv"
        csv_path.write_text(HEADER + "\n")
        out = tmp_path / "empty.svg"
        assert main(["fig1", str(csv_path), str(out)]) == 1
        assert "no data rows" in capsys.readouterr().err
        assert not out.exists()

    def test_missing_column_is_named(self, tmp_path, capsys):
        csv_path = tmp_path / "short.csv"
        csv_path.write_text("epsilon,n_th\n0.1,0.01\n")
        assert main(["fig1", str(csv_path), str(tmp_path / "x.svg")]) == 1
        err = capsys.readouterr().err
        assert "missing column" in err and "steering_ab" in err

    def test_malformed_row_is_numbered(self, tmp_path, capsys):
        csv_path = tmp_path / "bad.csv"
        csv_path.write_text(
            SMALL_CSV.replace("0.1,0.05", "oops,0.05")
        )
        assert main(["fig1", str(csv_path), str(tmp_path / "x.svg")]) == 1
        assert "line 3" in capsys.readouterr().err

    def test_ragged_row_is_numbered(self, tmp_path, capsys):
        csv_path = tmp_path / "ragged.csv"
        csv_path.write_text(HEADER + "\n0.1,0.05\n")
        assert main(["fig1", str(csv_path), str(tmp_path / "x.svg")]) == 1
        assert "line 2" in capsys.readouterr().err

    def test_incomplete_grid_rejected_for_heatmap(self, tmp_path, capsys):
        rows = [
            "0.1,0.05,0.001,0.01,0.0,0.0,0.0,0.0,0.0,0.0,0.0,0.0,",
            "0.1,0.05,0.001,0.02,0.0,0.0,0.0,0.0,0.0,0.0,0.0,0.0,",
            "0.1,0.05,0.002,0.01,0.0,0.0,0.0,0.0,0.0,0.0,0.0,0.0,",
        ]
        csv_path = tmp_path / "grid.csv"
        csv_path.write_text(HEADER + "\n" + "\n".join(rows) + "\n")
        assert main(["fig3", str(csv_path), str(tmp_path / "x.svg")]) == 1
        assert "grid" in capsys.readouterr().err

    def test_unsupported_extension(self, tmp_path, capsys):
        csv_path = tmp_path / "ok.csv"
        csv_path.write_text(SMALL_CSV)
        assert main(["fig1", str(csv_path), str(tmp_path / "x.pdf")]) == 1
        assert ".svg or .png" in capsys.readouterr().err

    def test_load_csv_rejects_wrong_header(self, tmp_path):
        csv_path = tmp_path / "weird.csv"
        csv_path.write_text(HEADER.replace("epsilon", "amplitude") + "\n1\n")
        with pytest.raises(RenderError, match="missing column"):
            load_csv(str(csv_path))


class TestOtherFormats:
    def test_png_output(self, tmp_path):
        csv_path = tmp_path / "ok.csv"
        csv_path.write_text(SMALL_CSV)
        out = tmp_path / "fig1.png"
        render("fig1", str(csv_path), str(out))
        assert out.exists() and out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_fig2_smoke(self, tmp_path):
        csv_path = tmp_path / "ok.csv"
        csv_path.write_text(SMALL_CSV)
        out = tmp_path / "fig2.svg"
        assert main(["fig2", str(csv_path), str(out)]) == 0
        assert out.exists()
