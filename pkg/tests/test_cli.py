import json
import subprocess
import sys

import pytest

from lucas_elliptica.cli import format_complex, main, parse_complex, render_numeric
from lucas_elliptica.elliptic import EllipticParams, elliptic_binom
from lucas_elliptica.theta import theta


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.mark.parametrize(
    "text, value",
    [("1+0i", 1), ("0.7-0.2i", complex(0.7, -0.2)), ("2", 2), ("-3i", -3j), ("1e-3+2i", complex(1e-3, 2)), ("0.5j", 0.5j)],
)
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("z, text", [(0, "0"), (-1, "-1"), (2.5, "2.5"), (complex(1, -2), "1-2i"), (0.25j, "0+0.25i")])
def test_format_complex(z, text):
    assert format_complex(z) == text


@pytest.mark.parametrize("z", [complex(0.1, 0.2), complex(-1e-17, 3.3), 1 / 3])
def test_format_roundtrip(z):
    assert parse_complex(format_complex(z)) == z


def test_render_numeric():
    assert render_numeric({(1, 1): 5 / 3, (0, 3): 1.0, (2, 0): 0}) == "(1.6666666666666667) x y + y^3"
    assert render_numeric({}) == "0"


# --- theta --------------------------------------------------------------------


def test_theta_zero_at_one(capsys):
    assert run(capsys, "theta", "--z", "1+0i", "--p", "0.3+0i")[:2] == (0, "0")


def test_theta_at_zero_nome(capsys):
    assert run(capsys, "theta", "--z", "2+0i", "--p", "0")[:2] == (0, "-1")


def test_theta_matches_library(capsys):
    code, out, _ = run(capsys, "theta", "--z", "0.7+0.2i", "--p", "0.25")
    assert code == 0 and parse_complex(out) == theta(complex(0.7, 0.2), 0.25)


def test_theta_residuals(capsys):
    code, out, _ = run(capsys, "theta", "--z", "0.7+0.2i", "--p", "0.25", "--residuals")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4
    assert [line.split()[0] for line in lines[1:]] == ["inversion", "quasi_periodicity", "addition"]
    assert all(float(line.split()[1]) <= 1e-11 for line in lines[1:])


@pytest.mark.parametrize(
    "argv",
    [
        ["theta", "--z", "abc", "--p", "0.1"],
        ["theta", "--z", "1", "--p", "1.2"],
        ["theta", "--z", "0", "--p", "0.1"],
    ],
)
def test_theta_bad_input_exits_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2
    assert capsys.readouterr().err


# --- fib ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["fib", "-n", "4", "--mode", "word"], "x^2 + xy^2 + yxy + y^2x + y^4"),
        (["fib", "-n", "-3", "--mode", "word"], "- x^-1yx^-1"),
        (["fib", "-n", "3", "--mode", "weighted"], "(1 + w(1,1)) x y + y^3"),
        (["fib", "-n", "3", "--mode", "q", "--qr", "2/3"], "(5/3) x y + y^3"),
        (["fib", "-n", "-1"], "0"),
    ],
)
def test_fib_outputs(capsys, argv, expected):
    assert run(capsys, *argv)[:2] == (0, expected)


def test_fib_elliptic_matches_binomials(capsys):
    code, out, _ = run(capsys, "fib", "-n", "3", "--mode", "elliptic")
    assert code == 0
    ep = EllipticParams(complex(0.7, 0.3), complex(1.4, -0.5), complex(0.85, 0.35), complex(0.2, 0.1))
    coeff = parse_complex(out.split(") x y")[0].lstrip("("))
    assert abs(coeff - elliptic_binom(2, 1, ep)) < 1e-12
    assert out.endswith("+ y^3")


def test_fib_elliptic_p_zero_q_one_is_singular(capsys):
    code, _, err = run(capsys, "fib", "-n", "4", "--mode", "elliptic", "--q", "1", "--p", "0")
    assert code == 2 and "error" in err


# --- ellbin / lucas / normalize ---------------------------------------------------


def test_ellbin_modes(capsys):
    assert run(capsys, "ellbin", "-n", "4", "-k", "2", "--mode", "q", "--qr", "2")[:2] == (0, "35")
    assert run(capsys, "ellbin", "-n", "2", "-k", "1", "--mode", "weighted")[:2] == (0, "1 + w(1,1)")
    assert run(capsys, "ellbin", "-n", "5", "-k", "5")[:2] == (0, "1")


def test_lucas_modes(capsys):
    assert run(capsys, "lucas", "-n", "10", "--mode", "classical")[:2] == (0, "55")
    assert run(capsys, "lucas", "-n", "6", "--mode", "classical", "--P", "2", "--Q", "-1")[:2] == (0, "6")
    code, out, _ = run(capsys, "lucas", "-n", "3", "--level", "2")
    assert code == 0 and out.count("P_") >= 2 and "Q_" in out


def test_lucas_elliptic_closed_form_agrees(capsys):
    code, out, _ = run(capsys, "lucas", "-n", "6", "--level", "2", "--mode", "elliptic", "--closed-form")
    recurrence, closed = (parse_complex(s) for s in out.splitlines())
    assert code == 0 and abs(recurrence - closed) / (abs(closed) + 1) < 1e-10


def test_normalize(capsys):
    assert run(capsys, "normalize", "xyxy")[:2] == (0, "w(2,1) x^2 y^2")
    assert run(capsys, "normalize", "x x^-1")[:2] == (0, "1")
    assert run(capsys, "normalize", "z")[0] == 2


# --- verify ---------------------------------------------------------------------


def test_verify_word_identities_all_exact(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "word-identities")
    data = json.loads(out)
    assert code == 0 and data["pass"] and all(rec.get("exact") for rec in data["checks"])


def test_verify_lucas_seed_42(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lucas", "--trials", "20", "--seed", "42")
    data = json.loads(out)
    assert code == 0 and data["max_residual"] <= 1e-9 and data["seed"] == 42


def test_verify_failure_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theta", "--trials", "2", "--eps", "1e-30", "--format", "text")
    assert code == 1 and out.splitlines()[-1].startswith("FAIL")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--trials", "0"],
        ["verify", "--p-max", "1.5"],
        ["verify", "--seed", "-4"],
        ["verify", "--eps", "-1"],
    ],
)
def test_verify_config_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("LUCAS_ELLIPTICA_SEED", "17")
    code, out, _ = run(capsys, "verify", "--suite", "theta", "--trials", "1")
    assert code == 0 and json.loads(out)["seed"] == 17
    code, out, _ = run(capsys, "verify", "--suite", "theta", "--trials", "1", "--seed", "3")
    assert json.loads(out)["seed"] == 3
    monkeypatch.setenv("LUCAS_ELLIPTICA_SEED", "seventeen")
    assert run(capsys, "verify", "--suite", "theta", "--trials", "1")[0] == 2


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "weighted-identities", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "suite,id,residual,pass"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lucas_elliptica", "fib", "-n", "2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "x + y^2"
