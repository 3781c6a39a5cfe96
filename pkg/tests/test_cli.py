import json
from pathlib import Path

import pytest

from scrollcalc.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_golden_cohomology_json(capsys):
    code, out, _ = run(capsys, "cohomology", "--scroll", "1,2", "--divisor", "1,0", "--json")
    assert code == 0
    assert out == (GOLDEN / "cohomology_s12_h.json").read_text()


def test_golden_ulrich_plain(capsys):
    code, out, _ = run(capsys, "ulrich", "--scroll", "1,2", "--bundle", "ext(O(1,-1); O(0,2))")
    assert code == 0
    assert out == (GOLDEN / "ulrich_ext_s12.txt").read_text()


def test_golden_invalid_scroll(capsys):
    code, out, err = run(capsys, "cohomology", "--scroll", "0,1", "--divisor", "0,0")
    assert code == 3
    assert out == ""
    assert err == (GOLDEN / "invalid_scroll.txt").read_text()


def test_usage_error_exits_2(capsys):
    code, _, _ = run(capsys, "cohomology", "--scroll", "1,2")
    assert code == 2
    code, _, _ = run(capsys, "cohomology", "--scroll", "1,2", "--divisor", "x,y")
    assert code == 2
    code, _, _ = run(capsys, "no-such-command")
    assert code == 2


def test_bundle_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "split-h", "--scroll", "1,2", "--bundle", "O(1;2)")
    assert code == 2
    assert "offset 3" in err


def test_domain_errors_exit_3(capsys):
    code, _, err = run(capsys, "log", "--scroll", "1,2", "--lines", "2", "--curves", "2")
    assert code == 3 and "cannot contain" in err
    code, _, err = run(capsys, "log", "--scroll", "1,2", "--lines", "1", "--curves", "0")
    assert code == 3
    code, _, err = run(capsys, "summand", "--scroll", "1,2", "--bundle", "O(0,-1)")
    assert code == 3
    code, _, err = run(capsys, "classify-log", "--scroll", "1,3", "--max-lines", "8", "--max-curves", "4")
    assert code == 3


def test_negative_verdicts_exit_0(capsys):
    code, out, _ = run(capsys, "split-h", "--scroll", "1,2", "--bundle", "O(0,1)")
    assert code == 0
    assert "verdict: fails" in out
    assert "t = -2" in out


@pytest.mark.parametrize(
    "argv,key",
    [
        (("split-h", "--scroll", "1,2", "--bundle", "O(0,0) + O(3,0)"), "verdict"),
        (("split-acm", "--scroll", "2,3", "--bundle", "O(0,1) + O(1,-1)"), "verdict"),
        (("acm", "--scroll", "2,2", "--bundle", "O(0,4)"), "verdict"),
        (("ulrich", "--scroll", "1,2", "--bundle", "O(1,-1)"), "verdict"),
        (("regularity", "--scroll", "1,2", "--bundle", "O(0,-1)"), "verdict"),
        (("summand", "--scroll", "1,2", "--bundle", "O(0,1)"), "verdict"),
    ],
)
def test_plain_and_json_verdicts_agree(capsys, argv, key):
    code, plain, _ = run(capsys, *argv)
    assert code == 0
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    obj = json.loads(out)
    assert f"verdict: {obj[key]}" in plain


def test_table_csv_shape(capsys):
    code, out, _ = run(
        capsys, "table", "--scroll", "1,2", "--bundle", "O(0,0)", "--twists=-1:1,-1:1"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "tH,tf,h0,h1,h2,chi"
    assert len(lines) == 1 + 9
    # row-major order and chi = h0 - h1 + h2 on every exact row
    assert lines[1].startswith("-1,-1,")
    assert lines[2].startswith("-1,0,")
    for row in lines[1:]:
        th, tf, h0, h1, h2, chi = row.split(",")
        assert int(h0) - int(h1) + int(h2) == int(chi)


def test_table_interval_cells(capsys):
    code, out, _ = run(
        capsys,
        "table",
        "--scroll",
        "1,2",
        "--bundle",
        "ext(O(-2,3); O(0,0))",
        "--twists",
        "0:0,0:0",
    )
    assert code == 0
    assert out.splitlines()[1] == "0,0,0..1,0..1,0,0"


def test_regularity_reports_reg(capsys):
    code, out, _ = run(capsys, "regularity", "--scroll", "2,2", "--bundle", "O(-3,0)", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["verdict"] == "false"
    assert obj["reg"] == 3


def test_ext1_output(capsys):
    code, out, _ = run(capsys, "ext1", "--scroll", "1,2", "--from", "0,2", "--to", "1,-1")
    assert code == 0
    assert out.strip() == "ext1 = 1"


def test_ulrich_make_output(capsys):
    code, out, _ = run(capsys, "ulrich-make", "--scroll", "2,2", "--a", "1", "--b", "2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["bundle"] == "ext(O(1,-1); 2*O(0,3))"
    assert obj["verdict"] == "true"


def test_log_and_check(capsys):
    code, out, _ = run(capsys, "log", "--scroll", "2,2", "--lines", "3", "--curves", "2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["splitting"] == "O(0,0) + O(0,1)"
    assert obj["flags"] == {"supported": True, "formula_only": False}

    code, out, _ = run(
        capsys, "log-check", "--scroll", "2,2", "--lines", "3", "--curves", "2", "--json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["verdict"] == "true" and obj["c1_ok"] is True and obj["chi_failed"] == 0

    code, out, _ = run(
        capsys,
        "log-check",
        "--scroll",
        "2,2",
        "--lines",
        "3",
        "--curves",
        "2",
        "--claimed",
        "O(0,2) + O(0,0)",
    )
    assert code == 0
    assert "verdict: false" in out


def test_log_check_rejects_non_sum_claims(capsys):
    code, _, err = run(
        capsys,
        "log-check",
        "--scroll",
        "2,2",
        "--lines",
        "3",
        "--curves",
        "2",
        "--claimed",
        "ext(O(0,0); O(0,1))",
    )
    assert code == 3
    assert "direct sum" in err


def test_classify_log_output(capsys):
    code, out, _ = run(
        capsys, "classify-log", "--scroll", "2,2", "--max-lines", "7", "--max-curves", "4", "--json"
    )
    assert code == 0
    obj = json.loads(out)
    assert [(r["lines"], r["curves"]) for r in obj["classification"]] == [
        (2, 2),
        (3, 2),
        (4, 2),
        (5, 2),
    ]


def test_indeterminate_is_a_result(capsys):
    code, out, _ = run(
        capsys, "split-acm", "--scroll", "1,1", "--bundle", "ext(O(-1,1); O(1,-1))"
    )
    assert code == 0
    assert "verdict: indeterminate" in out
