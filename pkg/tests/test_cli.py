import json
import subprocess
import sys

import pytest

from pseudobraid.cli import run
from pseudobraid.closure import LinkingProfile
from pseudobraid.ring import RingElement, eta
from pseudobraid.words import parse


def cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "pseudobraid", *argv], capture_output=True, text=True
    )


def test_eq_equal():
    r = run(["eq", "-n", "3", "s1 s2 p1", "p2 s1 s2"])
    assert (r.status, r.exit_code, r.payload) == ("ok", 0, "equal")


def test_eq_unequal():
    r = run(["eq", "-n", "3", "p1 p2", "p2 p1"])
    assert (r.status, r.exit_code, r.payload) == ("unequal", 2, "unequal")


def test_eq_json():
    r = run(["eq", "-n", "2", "p1 s1", "s1 p1", "--json"])
    data = json.loads(r.payload)
    assert data["verdict"] == "equal"
    assert RingElement.from_json(json.dumps(data["lhs"])) == eta(parse("p1 s1", 2))


def test_nf_braid_relation():
    a = run(["nf", "-n", "3", "s1 s2 s1"])
    b = run(["nf", "-n", "3", "s2 s1 s2"])
    assert a.payload == b.payload == "1|"
    data = json.loads(run(["nf", "-n", "3", "S1 s2", "--json"]).payload)
    assert data["key"] == run(["nf", "-n", "3", data["word"]]).payload


def test_closure_inv():
    r = run(["closure", "inv", "-n", "2", "p1 p1"])
    data = json.loads(r.payload)
    assert [e["weight"] for e in data["profile"]] == ["1/4", "1/2", "1/4"]
    assert [e["doubled_linkings"] for e in data["profile"]] == [[-2], [0], [2]]
    assert data["component_count"] == 2
    profile = LinkingProfile.from_json_obj(data["profile"])
    assert LinkingProfile.from_json_obj(profile.as_json_obj()) == profile


def test_eta_render_and_json():
    r = run(["eta", "-n", "2", "p1"])
    assert r.payload.splitlines() == ["-1*-1|", "1*1|"]
    data = json.loads(run(["eta", "-n", "2", "p1", "--json"]).payload)
    assert data == {"strands": 2, "terms": {"-1|": -1, "1|": 1}}


def test_oracle_eq():
    r = run(["oracle-eq", "-n", "2", "p1 s1", "s1 p1", "--depth", "1"])
    assert (r.exit_code, r.payload) == (0, "equal")
    r = run(["oracle-eq", "-n", "3", "p1", "p2", "--depth", "4", "--maxlen", "6"])
    assert (r.status, r.exit_code, r.payload) == ("unknown", 3, "unknown")
    r = run(["oracle-eq", "-n", "2", "s1 p1 S1", "p1", "--show"])
    assert r.payload.splitlines()[0] == "equal"
    assert r.payload.splitlines()[-1] == "p1"


def test_pm2():
    assert run(["pm2", "s1 p1 S1"]).payload == "0 1"
    assert run(["pm2", "-n", "3", "p1"]).exit_code == 1


def test_parse_command():
    assert run(["parse", "-n", "3", "t1  s2"]).payload == "p1 s2"
    assert run(["parse", "-n", "3", "t1 s2", "--singular"]).payload == "t1 s2"
    data = json.loads(run(["parse", "-n", "3", "p1 S2 S2", "--json"]).payload)
    assert data == {"strands": 3, "word": "p1 S2 S2", "length": 3, "exponent_sum": -2, "pre_count": 1}


def test_markov_apply():
    r = run(["markov", "apply", "-n", "2", "s1", "M3:+", "M1:s2", "M2:1"])
    assert r.payload == "3: s1 s2 s2 S2"
    r = run(["markov", "apply", "-n", "3", "s1 p2", "M4:d", "--json"])
    assert json.loads(r.payload) == {"strands": 2, "word": "s1"}
    assert run(["markov", "apply", "-n", "3", "s1 s2", "M4:d"]).exit_code == 1


def test_markov_search():
    r = run(["markov", "search", "-n", "2", "p1", "-m", "2", "S1 p1 s1"])
    assert r.payload == "M1:s1"
    r = run(["markov", "search", "-n", "2", "s1", "-m", "3", "s1 s2", "--json"])
    assert json.loads(r.payload) == {"moves": ["M3:+"]}
    r = run(["markov", "search", "-n", "2", "s1", "-m", "2", "", "--budget", "2"])
    assert (r.status, r.exit_code) == ("unknown", 3)


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["frobnicate"], "invalid choice"),
        (["eq", "-n", "3", "s3", "s1"], "index out of range"),
        (["eq", "-n", "3", "x1", "s1"], "malformed token"),
        (["nf", "-n", "2", "p1"], "classical braid word expected"),
        (["eta", "-n", "2", "p1 p1 p1", "--cap", "4"], "ExpansionCapError"),
        (["eq", "-n", "1", "", ""], "strand count"),
    ],
)
def test_errors_are_one_line(argv, fragment):
    r = run(argv)
    assert r.status == "error" and r.exit_code == 1
    assert len(r.diagnostics) == 1 and fragment in r.diagnostics[0]


def test_distinct_diagnostics():
    msgs = {run(a).diagnostics[0] for a in (
        ["frobnicate"],
        ["eq", "-n", "3", "s3", "s1"],
        ["eq", "-n", "3", "x1", "s1"],
        ["eta", "-n", "2", "p1 p1 p1", "--cap", "4"],
    )}
    assert len(msgs) == 4


def test_selftest_reports_seed():
    r = run(["selftest", "--max-n", "4", "--trials", "20", "--seed", "0xdeadbeefcafef00d"])
    assert r.exit_code == 0
    assert r.payload.splitlines()[0] == f"seed {0xdeadbeefcafef00d}"
    assert "0 failures" in r.payload


def test_process_exit_codes_and_determinism():
    a = cli("eq", "-n", "3", "p1 p2", "p2 p1")
    assert a.returncode == 2 and a.stdout == "unequal\n"
    assert cli("eq", "-n", "3", "s9", "s1").returncode == 1
    first = cli("closure", "inv", "-n", "3", "p1 s2 p2 p1")
    second = cli("closure", "inv", "-n", "3", "p1 s2 p2 p1")
    assert first.returncode == 0 and first.stdout == second.stdout
    s1 = cli("selftest", "--max-n", "3", "--trials", "30", "--seed", "42")
    s2 = cli("selftest", "--max-n", "3", "--trials", "30", "--seed", "42")
    assert s1.returncode == 0
    strip = lambda out: [l for l in out.splitlines() if not l.startswith("relations:")]
    assert strip(s1.stdout) == strip(s2.stdout)
