import io
import json

import pytest

from newtonstrata.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue().strip(), err.getvalue()


def test_minimal_newton():
    code, out, _ = call("minimal-newton", "--group", "GL:2", "t[2,0]")
    assert code == 0 and json.loads(out) == {"nu": ["2", "0"], "kappa": [2]}


def test_bgx_two_classes():
    code, out, _ = call("bgx", "--group", "GL:2", "t[1,0]*s1")
    got = json.loads(out)["classes"]
    assert code == 0 and [c["nu"] for c in got] == [["1/2", "1/2"], ["1", "0"]]


def test_len_of_omega_element():
    assert call("len", "--group", "GL:2", "t[0,1]*s1")[:2] == (0, "0")


@pytest.mark.parametrize("argv,expected", [
    (("eta", "--group", "SL:2", "t[-2,2]*s1"), "s1"),
    (("shrunken", "--group", "SL:2", "t[-2,2]*s1"), "regular_shrunken"),
    (("defect", "--group", "GL:2", "t[1,0]*s1"), "1"),
    (("kappa", "--group", "GL:4", "t[0,0,1,1]*s2*s1*s3*s2"), "[2]"),
    (("newton", "--group", "GL:2", "t[1,0]*s1"), '["1/2", "1/2"]'),
    (("vdim", "--group", "SL:2", "t[-2,2]*s1", '{"nu":["0","0"],"kappa":[]}'), "2"),
    (("newton", "--group", "GL:4", "--level", "1,3", "t[1,0,1,0]*s1"), '["1/2", "1/2", "1", "0"]'),
])
def test_simple_outputs(argv, expected):
    code, out, _ = call(*argv)
    assert code == 0 and out == expected


def test_class_and_certificate_json():
    code, out, _ = call("class", "--group", "GL:2", "t[1,0]*s1")
    assert json.loads(out) == {"nu": ["1/2", "1/2"], "kappa": [1], "level": "G"}
    code, out, _ = call("alcove-find", "--group", "GL:4", "t[0,0,1,1]*s2*s1*s3*s2")
    assert json.loads(out)["J"] == [1, 3]
    code, out, _ = call("alcove-find", "--all", "--group", "GL:4", "t[0,0,1,1]*s2*s1*s3*s2")
    assert sorted(c["w"] for c in json.loads(out)) == ["s1*s3*s2", "s2"]


def test_table_formats():
    code, out, _ = call("table", "--group", "SL:2", "--format", "csv", "s0*s1*s0")
    assert code == 0 and out.splitlines()[0] == "class_nu,class_kappa,dim,vdim,delta,codim"
    code, out, _ = call("table", "--group", "SL:2", "s0*s1*s0")
    assert json.loads(out)["flags"]["saturated"] is True
    code, out, _ = call("bgx", "--group", "SL:2", "--format", "csv", "s0*s1*s0")
    assert out.splitlines() == ["class_nu,class_kappa,dim", "0 0,,2", "1 -1,,1"]


def test_gap_search():
    code, out, _ = call("gap-search", "--group", "SL:3", "--max-len", "5")
    assert code == 0 and "t[0,1,-1]*s2" in json.loads(out)


def test_lang_solve():
    code, out, _ = call("lang-solve", "--M", '[["t"]]', "--v", '["1"]', "--N", "3")
    assert json.loads(out) == {"w": ["1 + t + t^2"], "residual_zero": True}
    code, out, _ = call("lang-solve", "--random", "3", "--p", "3", "--q", "9", "--k", "2",
                        "--N", "6", "--seed", "4")
    assert code == 0 and json.loads(out)["residual_zero"]


def test_plot():
    code, out, _ = call("plot", "--group", "SL:3", "--radius", "1", "--highlight", "s1")
    assert code == 0 and out.startswith("<svg") and out.count("<polygon") == 4


@pytest.mark.parametrize("argv,code", [
    (("len", "--group", "GL:2", "t[1,0"), 2),
    (("len", "--group", "GL:2", "t[1,0,0]"), 2),
    (("len", "--group", "GL:2"), 2),
    (("len", "--group", "XY:3", "1"), 3),
    (("len", "--group", "file:/nonexistent.json", "1"), 3),
    (("vdim", "--group", "GL:2", "t[1,0]*s1", '{"nu":["1","0"],"kappa":[2]}'), 4),
    (("vdim", "--group", "GL:2", "t[1,0]*s1", '{"nu":'), 2),
    (("plot", "--group", "SL:4"), 4),
    (("lang-solve", "--M", '[["1"]]', "--v", '["1"]', "--N", "2", "--mode", "frobenius"), 4),
    (("table", "--group", "SL:3", "--budget", "1", "t[-2,0,2]*s1*s2*s1"), 5),
])
def test_exit_codes(argv, code):
    got, _, err = call(*argv)
    assert got == code and (code == 0 or err)
