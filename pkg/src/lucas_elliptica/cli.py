"""Command-line interface: ``lucas-elliptica {theta,ellbin,lucas,fib,normalize,verify}``.

Complex numbers are written ``RE+IMi`` (``1+0i``, ``0.7-0.2i``, ``2``);
rationals as ``n/d``.  Exit status is 0 on success, 1 when a verification
suite fails and 2 for bad input.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .elliptic import EllipticParams, elliptic_binom, elliptic_integer, q_binom
from .elliptic_algebra import EllipticAlgebra
from .errors import LucasEllipticaError
from .lucas import elliptic_assignment, lucas_classical, lucas_level_symbolic
from .normal import normal_order
from .theta import identity_residuals, theta
from .verify import ConfigError, RunConfig, SUITES, run_suite
from .weighted import fib_weighted, weighted_binom
from .weights import WeightEnv, evaluate
from .words import WordPoly, fib_word

SEED_ENV = "LUCAS_ELLIPTICA_SEED"


# --- scalar parsing and formatting ------------------------------------------


def parse_complex(text: str) -> complex:
    """Parse ``RE+IMi`` / ``RE`` / ``IMi`` (``j`` is accepted for ``i``)."""
    s = text.strip().replace(" ", "")
    if s.endswith("i"):
        s = s[:-1] + "j"
    try:
        return complex(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex literal: {text!r} (expected RE+IMi)") from None


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _real_text(x: float) -> str:
    if x == 0:
        return "0"
    text = repr(x)
    return text[:-2] if text.endswith(".0") else text


def format_complex(z: complex) -> str:
    """Shortest round-trip form; purely real values print without ``i``."""
    z = complex(z)
    if z.imag == 0:
        return _real_text(z.real)
    im = _real_text(z.imag)
    sign = "" if im.startswith("-") else "+"
    return f"{_real_text(z.real)}{sign}{im}i"


def format_scalar(v) -> str:
    if isinstance(v, (int, Fraction)):
        return str(v)
    return format_complex(v)


def render_numeric(coeffs: dict) -> str:
    """Numeric coefficients ``{(k, l): c}`` in the normal-form layout."""
    parts = []
    for (k, l), c in sorted(coeffs.items(), key=lambda kc: (kc[0][1], -kc[0][0])):
        if c == 0:
            continue
        mono = " ".join(
            p for p in ("" if k == 0 else ("x" if k == 1 else f"x^{k}"), "" if l == 0 else ("y" if l == 1 else f"y^{l}")) if p
        )
        text = format_scalar(c)
        if not mono:
            parts.append(text)
        elif text == "1":
            parts.append(mono)
        else:
            parts.append(f"({text}) {mono}")
    return " + ".join(parts) if parts else "0"


# --- subcommands --------------------------------------------------------------


def _params(args) -> EllipticParams:
    return EllipticParams(args.a, args.b, args.q, args.p)


def cmd_theta(args) -> int:
    print(format_complex(theta(args.z, args.p)))
    if args.residuals:
        res = identity_residuals(args.z, args.u, args.v, args.w, args.p)
        for name in res._fields:
            print(f"{name} {getattr(res, name):.3e}")
    return 0


def cmd_ellbin(args) -> int:
    if args.mode == "weighted":
        print(weighted_binom(args.n, args.k))
    elif args.mode == "q":
        print(q_binom(args.n, args.k, args.qr))
    else:
        print(format_complex(elliptic_binom(args.n, args.k, _params(args))))
    return 0


def cmd_lucas(args) -> int:
    if args.mode == "symbolic":
        print(lucas_level_symbolic(args.n, args.level))
    elif args.mode == "classical":
        print(format_scalar(lucas_classical(args.n, args.P, args.Q)))
    else:
        ep = _params(args)
        recurrence = lucas_level_symbolic(args.n, args.level).evaluate(elliptic_assignment(ep))
        print(format_complex(recurrence))
        if args.closed_form:
            print(format_complex(elliptic_integer(args.n, args.level, ep)))
    return 0


def cmd_fib(args) -> int:
    if args.mode == "word":
        print(fib_word(args.n))
    elif args.mode == "weighted":
        print(fib_weighted(args.n))
    elif args.mode == "q":
        print(render_numeric(fib_weighted(args.n, WeightEnv.q_mode(args.qr))))
    else:
        ep = _params(args)
        print(render_numeric(EllipticAlgebra(ep.q, ep.p).fib(args.n).evaluate(ep.a, ep.b)))
    return 0


def cmd_normalize(args) -> int:
    try:
        word = WordPoly.parse(args.expr)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    print(normal_order(word))
    return 0


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    cfg = RunConfig(seed=seed, trials=args.trials, eps_report=args.eps, p_max=args.p_max, output_format=args.format)
    report = run_suite(args.suite, cfg)
    print(report.render(cfg.output_format))
    return 0 if report.passed else 1


# --- parser -------------------------------------------------------------------


def _add_elliptic_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=parse_complex, default=complex(0.7, 0.3), help="parameter a (default 0.7+0.3i)")
    p.add_argument("--b", type=parse_complex, default=complex(1.4, -0.5), help="parameter b (default 1.4-0.5i)")
    p.add_argument("--q", type=parse_complex, default=complex(0.85, 0.35), help="base q (default 0.85+0.35i)")
    p.add_argument("--p", type=parse_complex, default=complex(0.2, 0.1), help="nome p, |p| < 1 (default 0.2+0.1i)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lucas-elliptica", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", help="evaluate theta(z; p)")
    p.add_argument("--z", type=parse_complex, required=True)
    p.add_argument("--p", type=parse_complex, required=True)
    p.add_argument("--residuals", action="store_true", help="also print the three identity residuals (needs p != 0)")
    p.add_argument("--u", type=parse_complex, default=complex(1.3, 0.4))
    p.add_argument("--v", type=parse_complex, default=complex(0.6, -0.8))
    p.add_argument("--w", type=parse_complex, default=complex(-0.9, 0.5))
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("ellbin", help="binomial coefficient [n, k]")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--mode", choices=("elliptic", "weighted", "q"), default="elliptic")
    p.add_argument("--qr", type=parse_rational, default=Fraction(2, 3), help="rational q for --mode q")
    _add_elliptic_flags(p)
    p.set_defaults(func=cmd_ellbin)

    p = sub.add_parser("lucas", help="Lucas sequence <n>, classical or level-dependent")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--mode", choices=("symbolic", "classical", "elliptic"), default="symbolic")
    p.add_argument("--P", type=parse_rational, default=Fraction(1))
    p.add_argument("--Q", type=parse_rational, default=Fraction(1))
    p.add_argument("--closed-form", action="store_true", help="elliptic mode: also print the closed form")
    _add_elliptic_flags(p)
    p.set_defaults(func=cmd_lucas)

    p = sub.add_parser("fib", help="non-commutative Fibonacci polynomial F_n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--mode", choices=("word", "weighted", "elliptic", "q"), default="word")
    p.add_argument("--qr", type=parse_rational, default=Fraction(2, 3), help="rational q for --mode q")
    _add_elliptic_flags(p)
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("normalize", help="normal form of a word polynomial, e.g. 'yx + x^-1y'")
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("verify", help="run identity suites over sampled parameters")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or 0")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--eps", type=float, default=1e-9, help="residual threshold for a passing check")
    p.add_argument("--p-max", type=float, default=0.5)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, LucasEllipticaError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
