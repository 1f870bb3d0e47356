import json

import pytest

from markov_farey import closedform as cf
from markov_farey import farey as fy
from markov_farey.cli import OutputRecord, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_json(capsys):
    code, out, _ = run(capsys, "matrix", "0/1,1/1,inf", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["complementary"] == [["1", "0", "0"], ["2", "-1", "0"], ["0", "0", "1"]]
    assert obj["g"] == [["1", "2", "0"], ["0", "-1", "0"], ["0", "0", "1"]]
    assert obj["columns"] == ["0", "-1", "inf"]


def test_matrix_initial_pretty(capsys):
    code, out, _ = run(capsys, "matrix", "0/1,-1/1,inf")
    assert code == 0
    assert "0 -2  2" in out and "triple: 0/1,-1/1,1/0" in out


def test_matrix_oracle(capsys):
    code, _, err = run(capsys, "matrix", "7/3,2/1,5/2", "--oracle")
    assert code == 0 and "oracle: ok" in err


def test_matrix_by_word_and_negative_triple(capsys):
    code, out, _ = run(capsys, "matrix", "--word", "0", "--format", "json")
    by_word = json.loads(out)
    code2, out2, _ = run(capsys, "matrix", "-2/1,-1/1,inf", "--format", "json")
    assert code == code2 == 0
    assert by_word == json.loads(out2)


def test_gmatrix_csv(capsys):
    code, out, _ = run(capsys, "gmatrix", "0/1,1/1,inf", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["part,row,0,-1,inf", "g,1,1,2,0", "g,2,0,-1,0", "g,3,0,0,1"]


@pytest.mark.parametrize(
    "argv, needle",
    [
        (["matrix", "0/1,1/1,3/2"], "delta"),
        (["matrix", "0/1,2/1,inf"], "parity"),
        (["matrix", "a,b,c"], "cannot parse"),
        (["mutate", "0/1,-1/1,inf", "2"], "unknown direction"),
        (["enumerate", "21"], "depth"),
        (["matrix"], "required"),
    ],
)
def test_parse_errors_exit_2(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert needle in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "x"])
    assert exc.value.code == 2


def test_mutate_and_path(capsys):
    assert run(capsys, "mutate", "0/1,-1/1,inf", "-1")[1].strip() == "0/1,1/1,1/0"
    assert run(capsys, "mutate", "0/1,-1/1,inf", "-1,0")[1].strip() == "2/1,1/1,1/0"
    assert run(capsys, "path", "2/1,1/1,inf")[1].strip() == "0,-1"
    assert run(capsys, "path", "0/1,-1/1,inf")[1] == "\n"


@pytest.mark.parametrize("depth, count", [(0, 1), (2, 10), (12, 12286)])
def test_enumerate_count_only(capsys, depth, count):
    code, out, _ = run(capsys, "enumerate", str(depth), "--count-only")
    assert code == 0 and int(out) == count


def test_enumerate_records(capsys):
    code, out, _ = run(capsys, "enumerate", "0")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 1
    rec = json.loads(lines[0])
    assert rec["triple"] == ["0/1", "-1/1", "1/0"] and rec["word"] == [] and rec["depth"] == 0


def test_records_round_trip(capsys):
    run(capsys, "enumerate", "8")
    code, out, _ = run(capsys, "enumerate", "8")
    lines = out.splitlines()
    assert len(lines) == fy.tree_size(8)
    for line in lines:
        rec = OutputRecord.from_json(json.loads(line))
        T = rec.farey_triple
        assert fy.parse_triple(str(T)) == T
        assert OutputRecord.build(T) == rec
        assert json.dumps(rec.to_json()) == line


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "enumerate", "4")[1] for _ in range(2)}
    assert len(outs) == 1


def test_verify_smoke(capsys):
    code, out, _ = run(capsys, "verify", "--depth", "3", "--symbolic-depth", "2")
    assert code == 0 and "all checks passed" in out
    code, out, _ = run(capsys, "verify", "--depth", "2", "--symbolic-depth", "1", "--format", "json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_fails_on_corrupted_closed_form(capsys, monkeypatch):
    original = cf._complementary

    def corrupted(case, k):
        C = original(case, k)
        if case is cf.CaseLabel.CaseII:
            return ((C[0][0] + 1,) + C[0][1:],) + C[1:]
        return C

    monkeypatch.setattr(cf, "_complementary", corrupted)
    code, out, _ = run(capsys, "verify", "--depth", "3", "--symbolic-depth", "0")
    assert code == 1
    assert "FAIL  closed form = path oracle" in out
    assert "first counterexample: " in out
    assert "first counterexample: -2/1,-5/3,-3/2:" in out  # first case (ii) triple in BFS order
    code, out, _ = run(capsys, "matrix", "-2/1,-5/3,-3/2", "--oracle")
    assert code == 1


def test_plot_csv_and_svg(tmp_path, capsys):
    out = tmp_path / "g.csv"
    assert main(["plot-gvectors", "--depth", "0", "--format", "csv", "--out", str(out)]) == 0
    rows = out.read_text().splitlines()
    assert rows[0] == "gx,gy,gz,px,py"
    assert [r.split(",")[:3] for r in rows[1:]] == [["0", "0", "1"], ["0", "1", "0"], ["1", "0", "0"]]
    assert main(["plot-gvectors", "--depth", "1", "--format", "csv", "--out", str(out)]) == 0
    assert "-1,0,2," in out.read_text()
    svg = tmp_path / "g.svg"
    assert main(["plot-gvectors", "--depth", "3", "--out", str(svg)]) == 0
    text = svg.read_text()
    assert text.startswith("<svg") and text.count("<circle") > 3


def test_plot_unwritable_path(capsys):
    code, _, err = run(capsys, "plot-gvectors", "--depth", "1", "--out", "/nonexistent-dir/x.svg")
    assert code == 2 and "cannot write" in err


def test_plot_depth_cap(capsys):
    code, _, _ = run(capsys, "plot-gvectors", "--depth", "15")
    assert code == 2
