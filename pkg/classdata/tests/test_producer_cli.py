from unittest import mock

from classdata.cli import run
from classdata.gen import BatchSummary


def fake_summary(total=2, partial=0):
    return BatchSummary(total=total, complete=total - partial,
                        partial=partial,
                        failed=[{"params": {"m": 7, "d": 1},
                                 "backend": "x"}] * partial)


def test_happy_path(tmp_path, capsys):
    out = str(tmp_path / "r.json")
    with mock.patch("classdata.cli.gp_available", return_value=True), \
         mock.patch("classdata.cli.gen_batch",
                    return_value=fake_summary()) as gb:
        rc = run(["--family", "biquadratic", "--m", "7", "--d", "26,431",
                  "--p", "3", "--out", out])
    assert rc == 0
    job = gb.call_args.args[0]
    assert job.family == "BIQUADRATIC"
    assert job.param_range == [{"m": 7, "d": 26}, {"m": 7, "d": 431}]
    assert job.grh is True
    assert "wrote 2 records" in capsys.readouterr().out


def test_no_grh_flag(tmp_path):
    with mock.patch("classdata.cli.gp_available", return_value=True), \
         mock.patch("classdata.cli.gen_batch",
                    return_value=fake_summary(1)) as gb:
        rc = run(["--family", "non_galois", "--m", "13", "--d", "250",
                  "--p", "3", "--no-grh", "--out", str(tmp_path / "r.json")])
    assert rc == 0
    assert gb.call_args.args[0].grh is False


def test_cyclic_params(tmp_path):
    with mock.patch("classdata.cli.gp_available", return_value=True), \
         mock.patch("classdata.cli.gen_batch",
                    return_value=fake_summary(2)) as gb:
        rc = run(["--family", "cyclic", "--s", "43,103", "--t", "3",
                  "--p", "3", "--out", str(tmp_path / "r.json")])
    assert rc == 0
    assert gb.call_args.args[0].param_range == [{"s": 43, "t": "3"},
                                                {"s": 103, "t": "3"}]


def test_partial_exit_code(tmp_path, capsys):
    with mock.patch("classdata.cli.gp_available", return_value=True), \
         mock.patch("classdata.cli.gen_batch",
                    return_value=fake_summary(2, partial=1)):
        rc = run(["--family", "biquadratic", "--m", "7", "--d", "26,1",
                  "--p", "3", "--out", str(tmp_path / "r.json")])
    assert rc == 1
    assert "partial" in capsys.readouterr().out


def test_missing_params_usage_error(tmp_path, capsys):
    rc = run(["--family", "biquadratic", "--p", "3",
              "--out", str(tmp_path / "r.json")])
    assert rc == 2


def test_gp_missing(tmp_path, capsys):
    with mock.patch("classdata.cli.gp_available", return_value=False):
        rc = run(["--family", "biquadratic", "--m", "7", "--d", "26",
                  "--p", "3", "--out", str(tmp_path / "r.json")])
    assert rc == 1
    assert "gp binary" in capsys.readouterr().err
