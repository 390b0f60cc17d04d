import json
import subprocess
import sys

import pytest

from ellsigma import cli
from ellsigma.cli import EXIT_ERROR, EXIT_FAIL, EXIT_PASS, main, run
from ellsigma.formulas.report import IdentityReport
from ellsigma.truncseries import TruncSeries


def test_expand_sigma_text():
    out, status = run(["expand", "sigma", "--order", "5"])
    assert status == EXIT_PASS
    assert out.startswith("(1)*u + (1/24*mu1^2 + 1/6*mu2)*u^3")


def test_expand_sigma_hurwitz_style():
    out, status = run(["expand", "sigma", "--style", "hurwitz", "--order", "7"])
    assert status == EXIT_PASS
    assert "(mubar1^2 + mu2)*(1/3!)*u^3" in out
    assert "6*mu3^2 + 24*mu6)*(1/7!)*u^7" in out


def test_expand_json_reparses():
    out, status = run(["expand", "sigma", "--order", "7", "--format", "json"])
    doc = json.loads(out)
    s = TruncSeries.from_json(doc["series"])
    assert s.bound == 7 and s[1] == 1


def test_expand_binding():
    out, _ = run(["expand", "x", "--mu1", "0", "--mu2", "0", "--mu3", "0", "--mu4", "0",
                  "--mu6", "0", "--order", "4"])
    assert out.startswith("(1)*u^(-2) + O(")


@pytest.mark.parametrize("what", ["sigma", "x", "y", "wp", "star"])
def test_expand_targets(what):
    assert run(["expand", what, "--order", "4"])[1] == EXIT_PASS


def test_verify_text():
    out, status = run(["verify", "two-term"])
    assert status == EXIT_PASS
    assert out == "two-term: PASS through total degree 10"


@pytest.mark.parametrize("argv", [
    ["verify", "n2", "--format", "json"],
    ["verify", "det", "--n", "3", "--format", "json"],
    ["derive", "--n", "2", "--format", "json"],
    ["expand", "star", "--order", "4", "--format", "json"],
])
def test_json_byte_stable(argv):
    first, _ = run(argv)
    assert run(argv)[0] == first
    json.loads(first)


def test_verify_json_fields():
    doc = json.loads(run(["verify", "n2", "--format", "json"])[0])
    assert doc["id"] == "n2" and doc["verdict"] == "pass" and doc["bound"] == 10
    assert doc["binding"]["mu1"] == "symbolic"


@pytest.mark.parametrize("seed", [0, 1, 2])
@pytest.mark.parametrize("target", ["two-term", "n2", "n3", "equianharmonic", "parity"])
def test_fast_agrees_with_symbolic(target, seed):
    assert run(["verify", target, "--fast", "--seed", str(seed)])[1] == \
        run(["verify", target])[1] == EXIT_PASS


def test_fast_binding_recorded():
    doc = json.loads(run(["verify", "n2", "--fast", "--seed", "4", "--format", "json"])[0])
    assert doc["binding"]["mu1"] != "symbolic"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_verify_det(n):
    out, status = run(["verify", "det", "--n", str(n)])
    assert status == EXIT_PASS
    assert "constant" in out


@pytest.mark.parametrize("case", ["1", "2", "3"])
def test_verify_special(case):
    assert run(["verify", "n3-special", "--case", case])[1] == EXIT_PASS


def test_verify_all_parallel_matches_serial():
    serial, s1 = run(["verify", "all", "--format", "json"])
    parallel, s2 = run(["verify", "all", "--format", "json", "--jobs", "4"])
    assert s1 == s2 == EXIT_PASS
    assert serial == parallel
    assert len(json.loads(serial)) == len(cli.ALL_CHECKS)


def test_failing_identity_exit_code(monkeypatch):
    from ellsigma.formulas import verify
    bad = IdentityReport("two-term", {}, 10, "fail",
                         {"vars": ["u", "v"], "exponents": [2, 0], "coefficient": "-2"})
    monkeypatch.setattr(verify, "verify_two_term", lambda *a, **k: bad)
    out, status = run(["verify", "two-term"])
    assert status == EXIT_FAIL
    assert "first residual at u^2*v^0: -2" in out


def test_derive_n2():
    out, status = run(["derive", "--n", "2"])
    assert status == EXIT_PASS
    assert "wp form = 1/2*mu1*wp_u - 1/2*mu1*wp_v + 1/2*dwp_u + 1/2*dwp_v" in out


def test_derive_n4_needs_flag():
    out, status = run(["derive", "--n", "4"])
    assert status == EXIT_ERROR
    assert "--experimental" in out


def test_derive_n4_report():
    out, status = run(["derive", "--n", "4", "--experimental", "--format", "json"])
    assert status == EXIT_FAIL
    doc = json.loads(out)
    assert doc["unknowns"] == 6368 and doc["required_order"] == 28


@pytest.mark.parametrize("argv", [
    ["verify", "bogus"],
    ["expand", "sigma", "--order", "-1"],
    ["expand", "sigma", "--mu1", "0.5"],
    ["verify", "det", "--n", "7"],
    [],
])
def test_usage_errors(argv):
    assert run(argv)[1] == EXIT_ERROR


def test_main_streams(capsys):
    assert main(["verify", "two-term"]) == EXIT_PASS
    assert "PASS" in capsys.readouterr().out
    assert main(["verify", "bogus"]) == EXIT_ERROR
    assert "error" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ellsigma", "verify", "ideal"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("ideal: PASS as a polynomial identity")
