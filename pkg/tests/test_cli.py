from pathlib import Path

from gridcontour.cli import main

DATA = Path(__file__).parent / "data"


def test_trace_writes_mesh_and_svg(tmp_path, capsys):
    code = main(["trace", "--input", str(DATA / "circle.csv"), "--nx", "30", "--ny", "20",
                 "--out-mesh", str(tmp_path / "m.csv"), "--out-svg", str(tmp_path / "m.svg")])
    assert code == 0
    out = capsys.readouterr()
    assert out.out == ""
    assert (tmp_path / "m.csv").read_text().count("\n") == 4 + 31 * 21
    assert (tmp_path / "m.svg").exists()


def test_trace_to_stdout(capsys):
    assert main(["trace", "--input", str(DATA / "rectangle.csv"), "--nx", "2", "--ny", "2"]) == 0
    assert capsys.readouterr().out.startswith("# gridcontour mesh v1\n")


def test_nx_below_two_is_input_error(capsys):
    code = main(["trace", "--input", str(DATA / "circle.csv"), "--nx", "1", "--ny", "10"])
    assert code == 1
    err = capsys.readouterr().err
    assert "--nx must be >= 2" in err


def test_unknown_flag_is_usage_error(capsys):
    assert main(["trace", "--input", "x.csv", "--nx", "5", "--ny", "5", "--bogus"]) == 1
    err = capsys.readouterr().err
    assert "usage:" in err and "--bogus" in err


def test_missing_subcommand(capsys):
    assert main([]) == 1


def test_bad_levels(capsys):
    assert main(["study", "--input", str(DATA / "circle.csv"), "--levels", "50,abc"]) == 1


def test_missing_input_file(tmp_path, capsys):
    assert main(["study", "--input", str(tmp_path / "none.csv"), "--levels", "10"]) == 1
    assert "cannot read" in capsys.readouterr().err


def test_trace_failure_exit_code(tmp_path, capsys):
    p = tmp_path / "sliver.csv"
    p.write_text("0.05,0.05\n0.95,0.05\n0.5,0.06\n")
    code = main(["trace", "--input", str(p), "--nx", "10", "--ny", "10", "--padding", "0.05"])
    assert code == 2
    assert "trace failed" in capsys.readouterr().err


def test_study_rectangle(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["study", "--input", str(DATA / "rectangle.csv"), "--levels", "50,100", "--out", str(out)]) == 0
    assert out.read_text() == "n,area_diff_pct,boundary_nodes,interior_nodes\n50,0.0,200,2401\n100,0.0,400,9801\n"


def test_study_circle_matches_golden(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["study", "--input", str(DATA / "circle.csv"), "--levels", "50,100,200,300", "--out", str(out)]) == 0
    assert out.read_bytes() == (DATA / "circle_study.golden.csv").read_bytes()


def test_study_with_failed_level_exits_two(tmp_path, capsys):
    p = tmp_path / "thin.csv"
    p.write_text("0,0\n1,0\n0.5,0.004\n0.5,0.9\n0.49,0.9\n0.49,0.004\n")
    out = tmp_path / "s.csv"
    assert main(["study", "--input", str(p), "--levels", "3,40", "--out", str(out)]) == 2
    assert out.read_text().splitlines()[1] == "3,,,"


def test_distances(tmp_path):
    out = tmp_path / "d.csv"
    assert main(["distances", "--input", str(DATA / "l_shape.csv"), "--nx", "20", "--ny", "20", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "chain_position,i,j,distance"
    assert len(lines) == 1 + 80


def test_verbose_logs_to_stderr(tmp_path, capsys):
    main(["-v", "trace", "--input", str(DATA / "circle.csv"), "--nx", "10", "--ny", "10",
          "--out-mesh", str(tmp_path / "m.csv")])
    err = capsys.readouterr().err
    assert "64 points" in err and "counterclockwise" in err
