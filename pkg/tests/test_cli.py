import json
import subprocess
import sys

import pytest

from conftest import EX_NINE, EX_SIX, EX_SIX_MATRIX, EX_NINE_NECKLACE
from positroid_lab.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestConvert:
    def test_interval(self, capsys):
        code, out, _ = run(capsys, "convert", "--from", "perm", "--to", "interval", EX_SIX)
        assert code == 0
        assert out.strip() == '{"u":"2,4,1,3,6,5","v":"5,6,1,2,3,4","k":2}'

    def test_necklace(self, capsys):
        code, out, _ = run(capsys, "convert", "--from", "perm", "--to", "necklace", EX_NINE)
        data = json.loads(out)
        assert code == 0 and data["n"] == 9
        assert [tuple(e) for e in data["entries"]] == list(EX_NINE_NECKLACE)

    @pytest.mark.parametrize("target", ["necklace", "interval", "bases"])
    @pytest.mark.parametrize("source", [EX_NINE, EX_SIX, "3,4,1,2", "1+,2-"])
    def test_round_trip(self, capsys, source, target):
        _, out, _ = run(capsys, "convert", "--from", "perm", "--to", target, source)
        code, back, _ = run(capsys, "convert", "--from", target, "--to", "perm", out.strip())
        assert code == 0 and back.strip() == source

    def test_matrix(self, capsys):
        code, out, _ = run(capsys, "convert", "--from", "matrix", "--to", "perm",
                           json.dumps(EX_SIX_MATRIX))
        assert code == 0 and out.strip() == EX_SIX

    def test_rational_matrix_strings(self, capsys):
        code, out, _ = run(capsys, "convert", "--from", "matrix", "--to", "bases",
                           '[["1/2", 0, 1], [0, "3/4", 1]]')
        assert code == 0 and json.loads(out)["bases"] == [[1, 2], [1, 3], [2, 3]]

    def test_stdin_and_file(self, capsys, monkeypatch, tmp_path):
        code, out, _ = run(capsys, "convert", "--from", "perm", "--to", "interval", "-",
                           stdin=EX_SIX + "\n", monkeypatch=monkeypatch)
        assert code == 0 and '"k":2' in out
        f = tmp_path / "w.txt"
        f.write_text(EX_SIX)
        code, out2, _ = run(capsys, "convert", "--from", "perm", "--to", "interval", f"@{f}")
        assert out2 == out

    def test_errors(self, capsys):
        assert run(capsys, "convert", "--from", "perm", "--to", "bases", "1,x")[0] == 2
        assert run(capsys, "convert", "--from", "interval", "--to", "perm", "{bad")[0] == 2
        assert run(capsys, "convert", "--from", "matrix", "--to", "perm", "[[0.5, 1]]")[0] == 2
        assert run(capsys, "convert", "--from", "perm", "--to", "bases", "@/nonexistent")[0] == 2
        bad_interval = '{"u":"1,2,3","v":"2,1,3","k":2}'
        assert run(capsys, "convert", "--from", "interval", "--to", "perm", bad_interval)[0] == 3
        not_positroid = '{"n":4,"bases":[[1,3],[2,4]]}'
        assert run(capsys, "convert", "--from", "bases", "--to", "perm", not_positroid)[0] == 3

    def test_from_is_required(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["convert", "--to", "perm", EX_SIX])
        assert exc.value.code == 2


class TestSmooth:
    def test_nine_vertex(self, capsys):
        code, out, _ = run(capsys, "smooth", "--from", "perm", EX_NINE)
        data = json.loads(out)
        assert code == 1 and not data["smooth"]
        assert data["witness"]["alignment"] == ["2->7", "4->6"]
        assert data["witness"]["crossing"] == "1->5"

    def test_six_vertex_certified(self, capsys):
        code, out, _ = run(capsys, "smooth", "--from", "perm", "--certify", EX_SIX)
        data = json.loads(out)
        assert code == 1
        assert [2, 6] in data["singular_points"]
        assert data["jacobian_ranks"]["2,6"] == 3
        assert data["jacobian_ranks"] == data["tangent_codims"]

    def test_smooth_exit_zero(self, capsys):
        for crit in ("all", "degree", "regular", "crossed", "spirograph"):
            assert run(capsys, "smooth", "--from", "perm", "--criterion", crit, "3,4,1,2")[0] == 0

    def test_certify_guard(self, capsys):
        assert run(capsys, "smooth", "--from", "perm", "--certify", EX_NINE)[0] == 4


class TestCensus:
    def test_small(self, capsys):
        code, out, _ = run(capsys, "census", "--n", "2")
        rows = [line.split("\t") for line in out.splitlines()[1:]]
        assert code == 0
        assert sum(int(r[2]) for r in rows) == 5 and sum(int(r[3]) for r in rows) == 5
        _, out, _ = run(capsys, "census", "--n", "1")
        rows = [line.split("\t") for line in out.splitlines()[1:]]
        assert sum(int(r[2]) for r in rows) == 2 and sum(int(r[3]) for r in rows) == 2

    def test_byte_identical_across_criteria_and_jobs(self, capsys):
        _, a, _ = run(capsys, "census", "--n", "6", "--criterion", "crossed")
        _, b, _ = run(capsys, "census", "--n", "6", "--criterion", "spirograph", "--jobs", "2")
        assert a == b

    def test_guard(self, capsys, monkeypatch):
        assert run(capsys, "census", "--n", "9")[0] == 4
        monkeypatch.setenv("POSITROID_GUARD_N", "3")
        assert run(capsys, "census", "--n", "4")[0] == 4


class TestEmitAndOracle:
    def test_dot(self, capsys):
        code, out, _ = run(capsys, "emit", "--johnson-dot", "--from", "perm", EX_SIX)
        assert code == 0 and out.count(" -- ") == 18

    def test_svg(self, capsys):
        code, out, _ = run(capsys, "emit", "--chord-svg", "--from", "perm", EX_NINE)
        assert code == 0 and out.count('class="arc"') == 7
        assert out.count('class="loop cw"') == 1 and out.count('class="loop ccw"') == 1

    def test_oracle(self, capsys):
        code, out, _ = run(capsys, "oracle", "--from", "perm", EX_SIX, "--basis", "2,6")
        assert code == 0
        assert json.loads(out) == [{"basis": [2, 6], "jacobian_rank": 3, "tangent_codim": 3}]
        code, out, _ = run(capsys, "oracle", "--from", "perm", EX_SIX)
        assert len(json.loads(out)) == 8

    def test_oracle_non_basis(self, capsys):
        assert run(capsys, "oracle", "--from", "perm", EX_SIX, "--basis", "1,2")[0] == 3


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "positroid_lab.cli", "smooth", "--from", "perm",
                           "3,4,1,2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["smooth"] is True
