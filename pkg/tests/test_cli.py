import io
import json
import subprocess
import sys

import pytest

from foxchi import cli
from foxchi.alexander import diagram_delta, symmetrize_knot_delta
from foxchi.laurent import LaurentPoly, parse_poly
from foxchi.linkdiag import parse_braid


@pytest.fixture
def cache_file(tmp_path, monkeypatch):
    path = tmp_path / "cache.jsonl"
    monkeypatch.setenv(cli.CACHE_ENV, str(path))
    return path


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["alex", "--braid", "1 1 1", "--strands", "2", "--symmetrize"], {"delta": "t - 1 + t^-1"}),
        (["unknot-chi", "--slope", "-5/7"], {"chi": -7, "trace": [[3, -2], [4, -3]]}),
        (["degree", "--euler", "0", "--sigma", "0", "--b1", "0", "0", "--b0", "1", "1"], {"parity": 0}),
        (["alex", "--pd", "X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]", "--symmetrize"], {"delta": "-t + 3 - t^-1"}),
        (["chi-link", "--braid", "1 1", "--strands", "2"], {"chi": "t1*t2 - t1 - t2 + 1"}),
        (["chi-link", "--braid", "", "--strands", "2"], {"chi": "0"}),
        (["chi-knot", "--delta", "1", "--meridian", "2"], {"chi": "t + 1"}),
        (["ncf", "--y", "7", "--z", "5"], {"entries": [-2, -2, -3]}),
        (["parity", "--dots", "1", "-2", "1"], {"odd": 3}),
        (["solve-triangle", "--chis", "?", "-3", "-4", "--odd", "2"], {"chi": -7, "position": 1}),
        (["slope-chi", "--chi-mu", "1", "--y", "5"], {"chi": "t^4 + t^3 + t^2 + t + 1", "total": 5}),
        (["bypass", "--slope", "-5/7"], {"slopes": [[3, -2], [4, -3]], "mediant_signs": [1, 1], "determinant": 1}),
        (["alex", "--presentation", "gens: a b\\nrel: a b a B A B"], {"delta": "t^2 - t + 1"}),
    ],
)
def test_examples(cache_file, argv, expected):
    code, text = run(*argv)
    assert code == 0
    assert json.loads(text) == expected


def test_khi_minus_output(cache_file):
    code, text = run("khi-minus", "--braid", "1 1 1", "--strands", "2", "--depth", "6")
    data = json.loads(text)
    assert code == 0
    assert data["stable_floor"] == -5
    assert data["stable"][:3] == [[1, -1], [0, 0], [-1, -1]]


def test_sharp_output(cache_file):
    code, text = run("sharp-decompose", "--chi", "2", "--q", "2", "--h1-order", "2")
    assert json.loads(text)["verdict"] == "not an instanton L-space"


def test_domain_error_exit_one(cache_file):
    code, text = run("parity", "--dots", "0", "0", "1")
    assert code == 1
    assert json.loads(text)["error"] == "AmbiguousInput"
    code, text = run("alex", "--pd", "X(1,2,3)")
    assert code == 1 and json.loads(text)["error"] == "MalformedTuple"
    code, text = run("alex", "--braid", "1 5", "--strands", "2")
    assert code == 1 and json.loads(text)["error"] == "StrandOutOfRange"


def test_usage_error_exit_two(cache_file, capsys):
    assert run("ncf", "--y", "7")[0] == 2
    assert run("no-such-command")[0] == 2
    assert run()[0] == 2
    code, text = run("alex")
    assert code == 2


def test_raw_json_round_trip(cache_file):
    code, text = run("alex", "--braid", "1 -2 1 -2", "--strands", "3", "--raw-json")
    raw = json.loads(text)["delta"]
    assert LaurentPoly.from_json(raw) == diagram_delta(parse_braid("1 -2 1 -2", 3))
    code, text = run("alex", "--braid", "1 -2 1 -2", "--strands", "3", "--symmetrize")
    assert parse_poly(json.loads(text)["delta"], 1) == symmetrize_knot_delta(diagram_delta(parse_braid("1 -2 1 -2", 3)))


def test_cache_hit_is_byte_identical(cache_file, monkeypatch):
    argv = ("alex", "--braid", "1 1 1", "--strands", "2")
    first = run(*argv)
    calls = []
    real = cli.diagram_delta
    monkeypatch.setattr(cli, "diagram_delta", lambda d: calls.append(d) or real(d))
    second = run(*argv)
    assert first == second
    assert calls == []
    uncached = run("--no-cache", *argv)
    assert uncached == first and len(calls) == 1
    lines = cache_file.read_text().splitlines()
    assert len(lines) == 1


def test_version_bump_invalidates(cache_file, monkeypatch):
    run("ncf", "--y", "7", "--z", "5")
    monkeypatch.setattr(cli, "CACHE_VERSION", "foxchi-next")
    calls = []
    real = cli.ncf
    monkeypatch.setattr(cli, "ncf", lambda y, z: calls.append(1) or real(y, z))
    code, text = run("ncf", "--y", "7", "--z", "5")
    assert code == 0 and calls == [1]


def test_corrupt_cache_recomputes(cache_file, capsys):
    cache_file.write_text("not json\n{\"key\": 1}\n")
    code, text = run("ncf", "--y", "4", "--z", "3")
    assert code == 0
    assert json.loads(text) == {"entries": [-2, -2, -2]}
    assert "corrupt" in capsys.readouterr().err


def test_unwritable_cache_reported(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, text = run("--cache", str(blocker / "sub" / "cache.jsonl"), "ncf", "--y", "2", "--z", "1")
    assert code == 0
    assert json.loads(text) == {"entries": [-2]}
    assert "cache" in capsys.readouterr().err


@pytest.mark.parametrize("jobs", ["1", "3"])
def test_batch(cache_file, tmp_path, jobs):
    batch = tmp_path / "in.jsonl"
    lines = [
        {"command": "ncf", "y": 7, "z": 5},
        {"command": "unknot-chi", "slope": "-5/7"},
        {"command": "alex", "braid": "1 1 1", "strands": 2, "symmetrize": True},
        {"command": "parity", "dots": [0, 0, 1]},
    ]
    batch.write_text("\n".join(json.dumps(x) for x in lines) + "\n")
    code, text = run("--batch", str(batch), "--jobs", jobs)
    out = [json.loads(x) for x in text.splitlines()]
    assert code == 1
    assert out[0] == {"entries": [-2, -2, -3]}
    assert out[1]["chi"] == -7
    assert out[2] == {"delta": "t - 1 + t^-1"}
    assert out[3]["error"] == "AmbiguousInput"


def test_module_entry_point(tmp_path):
    env_cache = tmp_path / "c.jsonl"
    proc = subprocess.run(
        [sys.executable, "-m", "foxchi", "--cache", str(env_cache), "unknot-chi", "--slope", "-5/7"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"chi": -7, "trace": [[3, -2], [4, -3]]}\n'
