"""Command-line entry point.

    xxcorr constants
    xxcorr prefactors --m-max 10
    xxcorr formfactor --L 256 --m-max 2
    xxcorr series --order 8
    xxcorr exact --order 12 --format json
    xxcorr sum-identity --cutoff 20
    xxcorr compare --x-max 512 --m-max 1
    xxcorr verify --level quick

Exit status: 0 when every check passes, 1 when any check fails, 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from . import checks
from .excitations import ParticleHoleConfig
from .luttinger import (
    coefficient_y_exact,
    convergence_table,
    particle_hole_convergence,
    prefactor_C,
)
from .luttinger.prefactors import ln_abs_coefficient_y, ln_abs_prefactor_C
from .numerics import CONSTANTS
from .report import Report, Table
from .toeplitz import exact_expansion, log_R_series, series_residual_report
from .xxchain import ChainSpec
from .xxchain.formfactor import shifted_ground_amplitude

EXACT_Y_MAX = 2  # y_m printed as rationals up to here; the rational path exists for all m
LN_DOUBLE_MAX = math.log(sys.float_info.max)


def _even_positive(text: str) -> int:
    v = int(text)
    if v <= 0 or v % 2:
        raise argparse.ArgumentTypeError(f"expected an even positive integer, got {text}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


# -- commands -----------------------------------------------------------------


def cmd_constants(args) -> Report:
    c = CONSTANTS
    rows = [
        ("zeta'(-1)", c.zeta_prime_minus1),
        ("lnA", c.lnA),
        ("A", c.A),
        ("G(1/2)", c.barnes_g_half),
        ("C0", c.c0),
        ("C0/(2 sqrt(pi))", c.c0 / (2 * math.sqrt(math.pi))),
        ("A^2 - pi G(1/2)^4", c.identity_gap()),
    ]
    return Report(args.argv, tuple(checks.constants_checks()), (Table.build("constants", ("name", "value"), rows),))


def cmd_prefactors(args) -> Report:
    if args.m_max > 20:
        raise ValueError("--m-max must be <= 20")
    rows = []
    for m in range(0, args.m_max + 1):
        ln_c = ln_abs_prefactor_C(m)
        c_m = (-1) ** m * math.exp(ln_c) if ln_c < LN_DOUBLE_MAX else None
        ln_y = ln_abs_coefficient_y(m) if m else 0.0
        y = (-1) ** m * math.exp(ln_y) if ln_y < LN_DOUBLE_MAX else None
        exact = coefficient_y_exact(m) if 1 <= m <= EXACT_Y_MAX else None
        rows.append((m, (-1) ** m, ln_c, c_m, ln_y, y, exact))
    table = Table.build("prefactors", ("m", "sign", "ln_abs_C_m", "C_m", "ln_abs_y_m", "y_m", "y_m_exact"), rows)
    return Report(args.argv, tuple(checks.prefactor_checks(min(args.m_max, 10))), (table,))


def cmd_formfactor(args) -> Report:
    spec = ChainSpec.half_filled(args.L)
    shifted, ph = [], []
    for m in range(args.m_max + 1):
        if 2 * m >= args.L / 4:
            break
        amp = shifted_ground_amplitude(spec, m)
        target = (-1) ** m * prefactor_C(m) / (1 if m == 0 else 2)
        scaled = amp * amp * (args.L / 2) ** (0.5 + 2 * m * m)
        shifted.append((m, amp, scaled, target, scaled / target - 1))
        for p, q in checks.PH_PAIRS:
            config = ParticleHoleConfig(m, right=((p, q),))
            if config.max_offset + m >= args.L / 8:
                continue
            rep = particle_hole_convergence(config, (args.L,))
            ph.append((m, p, q, rep.values[0], rep.target, rep.deviations[0]))
    tables = (
        Table.build("shifted", ("m", "amplitude", "scaled_abs2", "target", "rel_deviation"), shifted),
        Table.build("particle_hole", ("m", "p", "q", "ratio", "prediction", "rel_deviation"), ph),
    )
    records = checks.trivial_checks()[:2]
    if args.L <= 8:
        records += checks.ed_checks((args.L,))
    return Report(args.argv, tuple(records), tables)


def cmd_series(args) -> Report:
    lnA, log_coeff, S = log_R_series(args.order)
    rows = [("lnA", 0, lnA), ("lnN", 0, log_coeff)]
    rows += [("1/N", p, c) for p, c in S.items() if c]
    table = Table.build("log_R", ("term", "power", "coefficient"), rows)
    return Report(args.argv, tuple(checks.log_series_checks()), (table,))


def cmd_exact(args) -> Report:
    e = exact_expansion(args.order)
    rows = [(r["parity"], r["power"], r["numerator"], r["denominator"], r["extrapolated"]) for r in e.records()]
    table = Table.build("expansion", ("parity", "power", "numerator", "denominator", "extrapolated"), rows)
    records = checks.exact_series_checks(max(args.order, 8))
    return Report(args.argv, tuple(records), (table,))


def cmd_sum_identity(args) -> Report:
    phase = 0.6 * math.pi
    tables = []
    for param, branch in ((Fraction(-1, 2), "right"), (Fraction(1, 2), "left")):
        rows = [(k, s.real, s.imag, t.real, t.imag, err) for k, s, t, err in convergence_table(param, phase, args.cutoff, branch)]
        tables.append(Table.build(f"{branch} {param}", ("cutoff", "partial_re", "partial_im", "closed_re", "closed_im", "abs_error"), rows))
    return Report(args.argv, tuple(checks.sum_identity_checks(args.cutoff, phase)), tuple(tables))


def cmd_compare(args) -> Report:
    if args.x_max < 32:
        raise ValueError("--x-max must be >= 32")
    rep = series_residual_report(range(32, args.x_max + 1), args.m_max, args.order)
    rows = [(r.x, r.exact, r.luttinger, r.series, r.luttinger_residual, r.series_residual) for r in rep.rows]
    fits = [("even", rep.exponent_even), ("odd", rep.exponent_odd), ("all", rep.exponent_all)]
    tables = (
        Table.build("residuals", ("x", "exact_G", "luttinger", "series", "luttinger_residual", "series_residual"), rows),
        Table.build("decay_exponent", ("parity", "exponent"), fits),
    )
    records = [r for r in checks.exact_series_checks() if "Luttinger" in r.name or "y_1" in r.name]
    # the first omitted Luttinger term fixes the residual decay: x^{-1/2 - 2} or x^{-1/2 - 4}
    expected = {0: 2.5, 1: 4.5}.get(args.m_max)
    if expected is not None:
        records.append(checks.check_close(f"residual exponent, m_max={args.m_max}", expected, rep.exponent_all, 0.1))
    return Report(args.argv, tuple(records), tables)


def cmd_verify(args) -> Report:
    return Report(args.argv, tuple(checks.verify(args.level)))


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="xxcorr", description="XX chain transverse correlator: Luttinger vs exact.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("constants", parents=[common]).set_defaults(func=cmd_constants)
    p = sub.add_parser("prefactors", parents=[common])
    p.add_argument("--m-max", type=_nonnegative, default=10)
    p.set_defaults(func=cmd_prefactors)
    p = sub.add_parser("formfactor", parents=[common])
    p.add_argument("--L", type=_even_positive, default=256)
    p.add_argument("--m-max", type=_nonnegative, default=2)
    p.set_defaults(func=cmd_formfactor)
    p = sub.add_parser("series", parents=[common])
    p.add_argument("--order", type=_even_positive, default=8)
    p.set_defaults(func=cmd_series)
    p = sub.add_parser("exact", parents=[common])
    p.add_argument("--order", type=_even_positive, default=8)
    p.set_defaults(func=cmd_exact)
    p = sub.add_parser("sum-identity", parents=[common])
    p.add_argument("--cutoff", type=_nonnegative, default=20)
    p.set_defaults(func=cmd_sum_identity)
    p = sub.add_parser("compare", parents=[common])
    p.add_argument("--x-max", type=_positive, default=512)
    p.add_argument("--m-max", type=_nonnegative, default=1)
    p.add_argument("--order", type=_even_positive, default=8)
    p.set_defaults(func=cmd_compare)
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad usage
    args.argv = tuple(argv)
    try:
        report = args.func(args)
    except ValueError as exc:
        print(f"xxcorr {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
