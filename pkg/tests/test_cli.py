"""End-to-end command line checks, run in process through main().

Exit code contract: 0 success, 2 malformed input, 3 precondition
violation, 4 inconclusive numeric verdict, 1 numeric failure.
"""

import json

import pytest

from horopoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def l1_file(tmp_path):
    path = tmp_path / "l1.json"
    path.write_text(json.dumps(
        [["1", "0"], ["0", "1"], ["-1", "0"], ["0", "-1"]]))
    return str(path)


@pytest.fixture()
def square_file(tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps(
        {"vertices": [["1", "1"], ["-1", "1"], ["-1", "-1"], ["1", "-1"]]}))
    return str(path)


@pytest.fixture()
def hexagon_file(tmp_path):
    verts = [[1, 0], [0, 1], [1, 1], [-1, 0], [0, -1], [-1, -1]]
    path = tmp_path / "hexagon.json"
    path.write_text(json.dumps(verts))
    return str(path)


def hull_out(tmp_path, capsys, src):
    out = tmp_path / "hull.json"
    code, _, _ = run(capsys, "hull", src, "--out", str(out))
    assert code == 0
    return str(out)


class TestHullDual:
    def test_hull_json_on_stdout(self, capsys, l1_file):
        code, out, _ = run(capsys, "hull", l1_file)
        assert code == 0
        doc = json.loads(out)
        assert sorted(doc["vertices"]) == [["-1", "0"], ["0", "-1"],
                                           ["0", "1"], ["1", "0"]]

    def test_hull_out_file_and_table(self, tmp_path, capsys, l1_file):
        out = tmp_path / "ball.json"
        code, table, _ = run(capsys, "hull", l1_file, "--out", str(out))
        assert code == 0
        assert "vertices: 4" in table
        assert json.loads(out.read_text())["dim"] == 2

    def test_dual_of_cross_is_square(self, tmp_path, capsys, l1_file):
        src = hull_out(tmp_path, capsys, l1_file)
        code, out, _ = run(capsys, "dual", src)
        assert code == 0
        doc = json.loads(out)
        assert sorted(doc["vertices"]) == [["-1", "-1"], ["-1", "1"],
                                           ["1", "-1"], ["1", "1"]]

    def test_byte_identical_reruns(self, capsys, l1_file):
        _, out1, _ = run(capsys, "hull", l1_file)
        _, out2, _ = run(capsys, "hull", l1_file)
        assert out1 == out2
        assert out1.endswith("\n")

    def test_hull_rejects_scalar_json(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("42")
        code, _, err = run(capsys, "hull", str(bad))
        assert code == 2
        assert "error:" in err

    def test_hull_rejects_malformed_json(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("[[1, 0], ")
        code, _, _ = run(capsys, "hull", str(bad))
        assert code == 2


class TestSatakeVerbs:
    def test_combined_document_without_file_flags(self, capsys):
        code, out, _ = run(capsys, "satake", "--type", "A", "--rank", "2",
                           "--weights", "adjoint")
        assert code == 0
        doc = json.loads(out)
        assert sorted(doc) == ["ball", "hull", "report"]
        assert len(doc["hull"]["vertices"]) == 6
        assert doc["report"]["shape"] == "hexagon"

    def test_file_flags_write_files_and_print_table(self, tmp_path, capsys):
        hull = tmp_path / "hull.json"
        ball = tmp_path / "ball.json"
        rep = tmp_path / "report.json"
        code, table, _ = run(capsys, "satake", "--type", "A", "--rank", "2",
                             "--weights", "adjoint", "--out", str(hull),
                             "--ball", str(ball), "--report", str(rep))
        assert code == 0
        assert "shape: hexagon" in table
        assert len(json.loads(ball.read_text())["vertices"]) == 6
        assert json.loads(rep.read_text())["regular"] is True

    def test_classify_stdout(self, capsys):
        code, out, _ = run(capsys, "classify", "--type", "A", "--rank", "2",
                           "--weights", "standard")
        assert code == 0
        doc = json.loads(out)
        assert doc["hull_f_vector"] == [3, 3, 1]
        assert doc["regular"] is False
        assert doc["singular_supports"] == [[1]]

    def test_scale_flag_accepts_rationals(self, capsys):
        code, out, _ = run(capsys, "classify", "--type", "A", "--rank", "2",
                           "--weights", "adjoint", "--scale", "3/2")
        assert code == 0
        assert json.loads(out)["shape"] == "hexagon"

    def test_bad_scale_is_input_error(self, capsys):
        code, _, err = run(capsys, "classify", "--type", "A", "--rank", "2",
                           "--weights", "adjoint", "--scale", "fast")
        assert code == 2
        assert "scale" in err

    def test_unknown_weight_name(self, capsys):
        code, _, _ = run(capsys, "satake", "--type", "A", "--rank", "2",
                         "--weights", "nonsense")
        assert code == 2

    def test_empty_weight_list(self, capsys):
        code, _, _ = run(capsys, "satake", "--type", "A", "--rank", "2",
                         "--weights", ",")
        assert code == 2

    def test_compare_scale_invariance(self, capsys):
        code, out, _ = run(capsys, "compare", "--type", "A", "--rank", "2",
                           "--weights", "adjoint", "--weights2", "adjoint",
                           "--scale2", "2")
        assert code == 0
        assert json.loads(out)["same"] is True

    def test_compare_distinguishes(self, capsys):
        code, out, _ = run(capsys, "compare", "--type", "A", "--rank", "2",
                           "--weights", "adjoint", "--weights2", "standard")
        assert code == 0
        assert json.loads(out)["same"] is False


class TestBoundaryVerbs:
    def test_strata_square(self, capsys, square_file):
        code, out, _ = run(capsys, "strata", "--ball", square_file)
        assert code == 0
        doc = json.loads(out)
        assert doc["stratum_count"] == 8
        assert doc["finite_boundary"] is True
        dims = sorted(s["dim"] for s in doc["strata"])
        assert dims == [0, 0, 0, 0, 1, 1, 1, 1]

    def test_limit_ray_frozen(self, capsys, square_file):
        code, out, _ = run(capsys, "limit-ray", "--ball", square_file,
                           "--q", "0,3", "--u", "1,0")
        assert code == 0
        doc = json.loads(out)
        assert doc == {"face": [0], "p": ["0", "0"]}

    def test_limit_ray_zero_direction(self, capsys, square_file):
        code, _, err = run(capsys, "limit-ray", "--ball", square_file,
                           "--q", "0,3", "--u", "0,0")
        assert code == 3
        assert "error:" in err

    def test_bad_vector_text(self, capsys, square_file):
        code, _, err = run(capsys, "limit-ray", "--ball", square_file,
                           "--q", "0;3", "--u", "1,0")
        assert code == 2
        assert "vector" in err


class TestRenderVerb:
    def test_svg_with_walls(self, tmp_path, capsys, hexagon_file):
        src = hull_out(tmp_path, capsys, hexagon_file)
        code, out, _ = run(capsys, "render", src, "--format", "svg", "--walls")
        assert code == 0
        assert out.count("<line") == 6
        assert out.count("<path") == 1

    def test_svg_deterministic(self, tmp_path, capsys, hexagon_file):
        src = hull_out(tmp_path, capsys, hexagon_file)
        _, out1, _ = run(capsys, "render", src, "--format", "svg", "--walls",
                         "--labels")
        _, out2, _ = run(capsys, "render", src, "--format", "svg", "--walls",
                         "--labels")
        assert out1 == out2

    def test_off_output_file(self, tmp_path, capsys):
        cube = tmp_path / "cube.json"
        cube.write_text(json.dumps(
            [[x, y, z] for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]))
        src = hull_out(tmp_path, capsys, str(cube))
        out = tmp_path / "cube.off"
        code, table, _ = run(capsys, "render", src, "--format", "off",
                             "--out", str(out))
        assert code == 0
        assert "format: off" in table
        assert out.read_text().splitlines()[1] == "8 6 12"

    def test_off_rejects_flat_input(self, tmp_path, capsys, hexagon_file):
        src = hull_out(tmp_path, capsys, hexagon_file)
        code, _, _ = run(capsys, "render", src, "--format", "off")
        assert code == 2

    def test_overlays_rejected_for_off(self, tmp_path, capsys, hexagon_file):
        src = hull_out(tmp_path, capsys, hexagon_file)
        code, _, _ = run(capsys, "render", src, "--format", "off", "--walls")
        assert code == 2

    def test_walls_need_rank_two(self, tmp_path, capsys, hexagon_file):
        src = hull_out(tmp_path, capsys, hexagon_file)
        code, _, _ = run(capsys, "render", src, "--format", "svg", "--walls",
                         "--rank", "3")
        assert code == 2

    def test_point_overlay_from_file(self, tmp_path, capsys, hexagon_file):
        src = hull_out(tmp_path, capsys, hexagon_file)
        marks = tmp_path / "marks.json"
        marks.write_text(json.dumps([["1/2", "0"], ["0", "1/2"]]))
        code, out, _ = run(capsys, "render", src, "--format", "svg",
                           "--points", str(marks))
        assert code == 0
        assert out.count("<circle") == 2


class TestArgumentHandling:
    def test_unknown_verb(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_unknown_flag(self, capsys):
        code, _, _ = run(capsys, "satake", "--type", "A", "--rank", "2",
                         "--weights", "adjoint", "--bogus")
        assert code == 2

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "dual", "no-such-file.json")
        assert code == 2
        assert "error:" in err

    def test_out_dir_env_override(self, tmp_path, capsys, monkeypatch,
                                  l1_file):
        monkeypatch.setenv("HOROPOLY_OUT_DIR", str(tmp_path / "sink"))
        code, _, _ = run(capsys, "hull", l1_file, "--out", "nested/ball.json")
        assert code == 0
        assert (tmp_path / "sink" / "nested" / "ball.json").exists()

    def test_absolute_out_ignores_env(self, tmp_path, capsys, monkeypatch,
                                      l1_file):
        monkeypatch.setenv("HOROPOLY_OUT_DIR", str(tmp_path / "sink"))
        target = tmp_path / "direct.json"
        code, _, _ = run(capsys, "hull", l1_file, "--out", str(target))
        assert code == 0
        assert target.exists()
        assert not (tmp_path / "sink").exists()


class TestFlatTest:
    def test_hexagon_ball_passes(self, tmp_path, capsys, hexagon_file):
        ball = hull_out(tmp_path, capsys, hexagon_file)
        code, out, _ = run(capsys, "flat-test", "--n", "3", "--ball", ball)
        assert code == 0
        doc = json.loads(out)
        assert doc["consistency"]["regular"]["status"] == "converged"
        assert doc["consistency"]["wall"]["status"] == "converged"
        assert doc["consistency"]["wall"]["ray_type"]["indices"] == [0]
        assert doc["invariance"]["limit_monotone"] is True

    def test_short_horizon_is_inconclusive(self, tmp_path, capsys,
                                           hexagon_file):
        ball = hull_out(tmp_path, capsys, hexagon_file)
        code, out, _ = run(capsys, "flat-test", "--n", "3", "--ball", ball,
                           "--tmax", "10")
        assert code == 4
        doc = json.loads(out)
        assert doc["consistency"]["regular"]["status"] == "inconclusive"

    def test_ball_without_symmetry_rejected(self, tmp_path, capsys,
                                            square_file):
        ball = hull_out(tmp_path, capsys, square_file)
        code, _, err = run(capsys, "flat-test", "--n", "3", "--ball", ball)
        assert code == 3
        assert "error:" in err
