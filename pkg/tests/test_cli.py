import json
import subprocess
import sys

import pytest

from grassembed.cache import ENV_VAR, Cache, cache_key
from grassembed.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decompose_table(capsys):
    code, out, _ = run(capsys, "decompose", "--m", "2", "--k", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["i", "j", "lambda", "parity", "center_weight", "dim"]
    assert len(lines) == 1 + 3
    assert lines[1].split() == ["0", "0", "(2,2,0,0)", "sym", "-2", "20"]


def test_decompose_six_rows(capsys):
    code, out, _ = run(capsys, "decompose", "--m", "3", "--k", "2")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert [tuple(map(int, r.split()[:2])) for r in rows] == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]


@pytest.mark.parametrize(
    "argv",
    [
        ["decompose", "--m", "1", "--k", "1"],
        ["decompose", "--m", "2", "--k", "0"],
        ["decompose", "--m", "2"],
        ["report", "--m", "2", "--k", "1", "--format", "xml"],
        ["verify", "--scope", "everything"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1
    assert "usage" in capsys.readouterr().err


def test_report_json(capsys):
    code, out, _ = run(capsys, "report", "--m", "2", "--k", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema_version"] == 1
    assert data["vk_complex_dim"] == "1"
    assert data["gs"]["module"] == [2, 2, 0, 0]
    assert data["threshold"] == {"num": -1, "den": 1}
    assert data["paper"]["corollary_list"] == []


def test_report_text_has_flags(capsys):
    code, out, _ = run(capsys, "report", "--m", "2", "--k", "2", "--format", "text")
    assert code == 0
    assert "match_flags:" in out
    assert "remark_formula_vs_vk_real_dim" in out
    assert "dim_R V_k                210" in out


def test_report_deterministic(capsys):
    outs = [run(capsys, "report", "--m", "3", "--k", "2", "--format", "json")[1] for _ in range(2)]
    assert outs[0] == outs[1]


@pytest.mark.parametrize("cmd", ["square-split", "center-weights", "gs"])
@pytest.mark.parametrize("fmt", ["json", "text"])
def test_other_subcommands(capsys, cmd, fmt):
    code, out, _ = run(capsys, cmd, "--m", "2", "--k", "2", "--format", fmt)
    assert code == 0
    if fmt == "json":
        data = json.loads(out)
        assert data["schema_version"] == 1


def test_square_split_json(capsys):
    _, out, _ = run(capsys, "square-split", "--m", "2", "--k", "1", "--format", "json")
    data = json.loads(out)
    assert data["sym"] == [{"lambda": [2, 2], "mult": 1}, {"lambda": [1, 1, 1, 1], "mult": 1}]
    assert data["alt"] == [{"lambda": [2, 1, 1], "mult": 1}]


def test_gs_text(capsys):
    _, out, _ = run(capsys, "gs", "--m", "3", "--k", "2")
    assert "V(4,4,0,0,0)" in out


def test_cache_transparency(capsys, tmp_path):
    path = tmp_path / "c.bin"
    plain = run(capsys, "report", "--m", "2", "--k", "2", "--format", "json")[1]
    first = run(capsys, "report", "--m", "2", "--k", "2", "--format", "json", "--cache", str(path))[1]
    assert path.stat().st_size > 0
    second = run(capsys, "report", "--m", "2", "--k", "2", "--format", "json", "--cache", str(path))[1]
    assert plain == first == second
    cache = Cache(path)
    assert cache.get("square_split", {"lambda": [2, 2], "n": 4}) is not None


def test_cache_from_environment(capsys, tmp_path, monkeypatch):
    path = tmp_path / "env.bin"
    monkeypatch.setenv(ENV_VAR, str(path))
    run(capsys, "gs", "--m", "2", "--k", "1")
    assert path.exists()
    other = tmp_path / "flag.bin"
    run(capsys, "gs", "--m", "2", "--k", "1", "--cache", str(other))
    assert other.exists()
    path.unlink()
    run(capsys, "gs", "--m", "2", "--k", "1", "--no-cache")
    assert not path.exists()


def test_corrupted_cache_is_ignored(capsys, tmp_path, caplog):
    path = tmp_path / "bad.bin"
    path.write_bytes(b"\x00\x00\x10\x00{not json")
    plain = run(capsys, "report", "--m", "2", "--k", "1", "--format", "json", "--no-cache")[1]
    code, out, _ = run(capsys, "report", "--m", "2", "--k", "1", "--format", "json", "--cache", str(path))
    assert code == 0
    assert out == plain
    assert "corrupted" in caplog.text
    # rewritten cleanly on the next store
    assert not Cache(path).corrupt


def test_cache_entry_with_bad_value_recomputes(capsys, tmp_path):
    path = tmp_path / "c.bin"
    Cache(path).put("square_split", {"lambda": [1, 1], "n": 4}, {"nonsense": True})
    plain = run(capsys, "square-split", "--m", "2", "--k", "1", "--no-cache")[1]
    assert run(capsys, "square-split", "--m", "2", "--k", "1", "--cache", str(path))[1] == plain


def test_cache_ignores_other_engine_versions(tmp_path):
    path = tmp_path / "c.bin"
    Cache(path, engine_version="old").put("op", [1], "stale")
    assert Cache(path).get("op", [1]) is None
    assert Cache(path, engine_version="old").get("op", [1]) == "stale"


def test_cache_key_is_canonical():
    assert cache_key("op", {"a": 1, "b": 2}) == cache_key("op", {"b": 2, "a": 1})
    assert cache_key("op", [1]) != cache_key("op2", [1])


def test_verify_quick(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "quick")
    assert code == 0
    assert out.count("[PASS]") == 9


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "grassembed", "decompose", "--m", "2", "--k", "1", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert len(json.loads(proc.stdout)["components"]) == 3
