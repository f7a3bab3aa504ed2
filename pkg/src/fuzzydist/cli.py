"""Command-line front end.

Subcommands compute distance tables for each state family, run the oracle
cross-checks, and execute the validation registry. Output is JSON (default)
or CSV with floats printed to 17 significant digits, so repeated runs with
the same arguments and seed are byte-identical once timestamps are
suppressed.

The compute modules are imported lazily inside the handlers: FUZZYDIST_THREADS
must be translated into the BLAS thread-count variables before numpy loads.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .halfint import HalfInteger

VERSION = "0.1.0"

_THREAD_VARS = ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS",
                "NUMEXPR_NUM_THREADS")


class UsageError(ValueError):
    pass


def _configure_threads():
    raw = os.environ.get("FUZZYDIST_THREADS")
    if raw is None or raw == "":
        return
    try:
        k = int(raw)
    except ValueError:
        raise UsageError("FUZZYDIST_THREADS must be an integer, got %r" % raw) from None
    if k < 1:
        raise UsageError("FUZZYDIST_THREADS must be >= 1, got %d" % k)
    for var in _THREAD_VARS:
        os.environ[var] = str(k)


# ---------------------------------------------------------------------------
# argument parsing

def _halfint_arg(text: str) -> HalfInteger:
    try:
        return HalfInteger.parse(text)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError("not a half-integer: %r" % text) from None


def _complex_arg(text: str) -> complex:
    """Parse 'a+bi' (also plain reals and pure-imaginary 'bi')."""
    s = text.strip().replace(" ", "")
    if not s:
        raise argparse.ArgumentTypeError("empty complex number")
    if s[-1] in "iI":
        s = s[:-1] + "j"
        # bare 'i' / '+i' / '-i' need an explicit 1
        if s[:-1] in ("", "+", "-"):
            s = s[:-1] + "1j"
    try:
        return complex(s)
    except ValueError:
        raise argparse.ArgumentTypeError("not a complex number: %r" % text) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzydist",
        description="Spectral distances on fuzzy spheres, with oracle cross-checks.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def common(p, with_n=True):
        if with_n:
            p.add_argument("--n", type=_halfint_arg, required=True,
                           help="spin label (half-integer, e.g. 1 or 3/2)")
        p.add_argument("--lambda", dest="lam", type=float, default=1.0,
                       help="noncommutativity scale (default 1)")
        output(p)

    def output(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="write output to this file")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--no-timestamp", action="store_true",
                       help="omit the timestamp from metadata (reproducible bytes)")

    p = sub.add_parser("discrete", help="adjacent pure-state distances on the sphere")
    common(p)
    p.add_argument("--n3", type=_halfint_arg, default=None,
                   help="lower state label; default: all adjacent pairs")
    p.add_argument("--oracle", action="store_true",
                   help="also run the constrained-ascent optimizer")

    p = sub.add_parser("coherent", help="infinitesimal coherent-state distances")
    common(p)
    p.add_argument("--z", type=_complex_arg, default=0j,
                   help="base point, stereographic label 'a+bi' (default 0)")
    p.add_argument("--dz", type=float, default=1e-4,
                   help="displacement magnitude (default 1e-4)")
    p.add_argument("--oracle", action="store_true",
                   help="also run the displaced-projector finite-difference oracle")

    p = sub.add_parser("quantum-pure", help="operator-space pure-state distances")
    common(p)
    p.add_argument("--n3", type=_halfint_arg, default=None)
    p.add_argument("--right-sector", choices=("same", "distinct"), default="same",
                   dest="right_sector")
    p.add_argument("--oracle", action="store_true",
                   help="also run the eigensolver oracle")

    p = sub.add_parser("quantum-mixed", help="mixed-state distances for a probability profile")
    common(p)
    p.add_argument("--n3", type=_halfint_arg, default=None)
    p.add_argument("--profile", default="uniform",
                   help="'uniform' or a path to a profile table (default uniform)")
    p.add_argument("--oracle", action="store_true",
                   help="also evaluate the explicit commutator norms")

    p = sub.add_parser("thermal", help="thermal-profile distances")
    common(p)
    p.add_argument("--n3", type=_halfint_arg, default=None)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--energies", default="default",
                   help="'default' (linear spectrum) or a path to a one-row table")
    p.add_argument("--oracle", action="store_true",
                   help="also evaluate the profile functional directly")

    p = sub.add_parser("continuum-check", help="run the commutative-geometry checks")
    output(p)

    p = sub.add_parser("table", help="sweep n and emit the distance table")
    p.add_argument("--n-min", dest="n_min", type=_halfint_arg, required=True)
    p.add_argument("--n-max", dest="n_max", type=_halfint_arg, required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--oracle", action="store_true",
                   help="include the optimizer column")
    output(p)

    p = sub.add_parser("validate", help="run the full validation registry")
    output(p)

    return parser


# ---------------------------------------------------------------------------
# deterministic emitters

def _fmt(x: float) -> str:
    s = "%.17g" % float(x)
    # keep float-typed values recognizably float ("1.0", not "1")
    if s.lstrip("+-").isdigit():
        s += ".0"
    return s


def _json_scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return _fmt(v)
    return json.dumps(str(v))


def _emit_json(meta: dict, rows: list) -> str:
    lines = ["{", '  "meta": {']
    items = list(meta.items())
    for i, (k, v) in enumerate(items):
        comma = "," if i < len(items) - 1 else ""
        lines.append('    %s: %s%s' % (json.dumps(k), _json_scalar(v), comma))
    lines.append("  },")
    lines.append('  "results": [')
    for r, row in enumerate(rows):
        cells = ", ".join("%s: %s" % (json.dumps(k), _json_scalar(v))
                          for k, v in row.items())
        comma = "," if r < len(rows) - 1 else ""
        lines.append("    {%s}%s" % (cells, comma))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _fmt(v)
    s = str(v)
    if any(c in s for c in ",\"\n"):
        s = '"' + s.replace('"', '""') + '"'
    return s


def _emit_csv(meta: dict, rows: list) -> str:
    if not rows:
        return ""
    header = list(rows[0].keys())
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_csv_cell(row.get(k)) for k in header))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# per-command handlers; each returns (extra_meta, rows, exit_code)

def _adjacent_labels(n: HalfInteger, n3):
    if n3 is not None:
        if n3.twice < -n.twice or n3.twice > n.twice - 2:
            raise UsageError("need -n <= n3 <= n-1, got n3 = %s at n = %s" % (n3, n))
        return [n3]
    return [HalfInteger(t) for t in range(-n.twice, n.twice - 1, 2)]


def _cmd_discrete(args):
    from . import distance, sphere, triple
    n, lam = args.n, args.lam
    labels = _adjacent_labels(n, args.n3)
    s = sphere.build_space(n, lam)
    tr = triple.build_dirac(s, "config", 0)
    rows, code = [], 0
    for n3 in labels:
        cf = distance.adjacent_distance_closed_form(n, n3, lam)
        lb = distance.distance_lower_bound(
            tr, sphere.pure_state(s, n3), sphere.pure_state(s, n3 + HalfInteger(2)))
        row = {"n": str(n), "n3": str(n3), "distance": cf, "value": cf,
               "method": "closed_form", "norm_pipeline": lb.value,
               "ratio": lb.value / cf, "ball_residual": lb.ball_residual}
        if args.oracle:
            try:
                opt = distance.connes_distance_optimized(
                    tr, sphere.pure_state(s, n3), sphere.pure_state(s, n3 + HalfInteger(2)),
                    seed=args.seed)
                row["optimizer"] = opt.value
                row["optimizer_ball_residual"] = opt.ball_residual
            except distance.OptimizerError as exc:
                print("fuzzydist: optimizer failed at n3 = %s: %s" % (n3, exc),
                      file=sys.stderr)
                row["optimizer"] = exc.best_value
                row["optimizer_ball_residual"] = None
                code = 1
        rows.append(row)
    extra = {"n3": str(args.n3) if args.n3 is not None else None, "oracle": args.oracle}
    return extra, rows, code


def _cmd_coherent(args):
    from . import coherent
    n, lam, z = args.n, args.lam, args.z
    dz = args.dz
    if not dz > 0:
        raise UsageError("--dz must be positive")
    if dz > 1e-3:
        raise UsageError("--dz must be <= 1e-3 (first-order regime)")
    coeff = coherent.coherent_metric_coefficient(n, lam, z)
    closed = coeff * dz
    numeric = coherent.coherent_distance_numeric(n, lam, dz, z)
    zs = _fmt(z.real) + ("+" if z.imag >= 0 else "-") + _fmt(abs(z.imag)) + "i"
    row = {"n": str(n), "z": zs, "dz": dz, "distance": numeric, "value": numeric,
           "method": "norm_pipeline", "closed_form": closed,
           "metric_coefficient": coeff, "ratio": numeric / closed}
    if args.oracle:
        scale = 1.0 / (1.0 + abs(z) ** 2)
        row["fd_oracle"] = coherent.coherent_distance_fd(n, lam, dz) * scale
        row["richardson_coefficient"] = coherent.richardson_distance_coefficient(n, lam) * scale
    extra = {"z": zs, "dz": dz, "oracle": args.oracle}
    return extra, [row], 0


def _cmd_quantum_pure(args):
    from . import quantum
    n, lam = args.n, args.lam
    same = args.right_sector == "same"
    labels = _adjacent_labels(n, args.n3)
    rows = []
    for n3 in labels:
        d = quantum.quantum_pure_distance(n, lam, n3, same)
        row = {"n": str(n), "n3": str(n3), "right_sector": args.right_sector,
               "distance": d, "value": d, "method": "closed_form"}
        if args.oracle:
            up = n3 + HalfInteger(2)
            if same:
                sem = quantum.quantum_seminorm_oracle(n, lam, n3, n, n)
            else:
                sem = quantum.quantum_seminorm_oracle(n, lam, n3, n3, up)
            row["oracle"] = 2.0 / sem
            row["ratio"] = row["oracle"] / d
            if not same:
                row["symmetrized"] = quantum.quantum_pure_distance_symmetrized(n, lam, n3)
        rows.append(row)
    extra = {"n3": str(args.n3) if args.n3 is not None else None,
             "right_sector": args.right_sector, "oracle": args.oracle}
    return extra, rows, 0


def _load_profile(source: str, n: HalfInteger):
    from . import quantum
    if source == "uniform":
        return quantum.ProbabilityProfile.uniform(n), "uniform"
    try:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError("cannot read profile file: %s" % exc) from None
    try:
        return quantum.ProbabilityProfile.from_text(text, n), source
    except ValueError as exc:
        raise UsageError("bad profile file %s: %s" % (source, exc)) from None


def _cmd_quantum_mixed(args):
    from . import quantum
    n, lam = args.n, args.lam
    profile, label = _load_profile(args.profile, n)
    labels = _adjacent_labels(n, args.n3)
    rows = []
    for n3 in labels:
        d = quantum.trace_norm_distance(n, lam, n3, profile)
        row = {"n": str(n), "n3": str(n3), "profile": label,
               "distance": d, "value": d, "method": "closed_form"}
        if args.oracle:
            norms = quantum.mixed_commutator_norms(n, lam, n3, profile)
            row["oracle"] = norms["numerator"] / norms["frobenius"]
            row["ratio"] = row["oracle"] / d
            row["frobenius"] = norms["frobenius"]
            row["nuclear"] = norms["nuclear"]
            row["operator"] = norms["operator"]
            cert = quantum.delta_matrix(n, lam, profile, n3, n3 + HalfInteger(2))
            row["stationarity_residual"] = cert.residual
        rows.append(row)
    extra = {"n3": str(args.n3) if args.n3 is not None else None,
             "profile": label, "oracle": args.oracle}
    return extra, rows, 0


def _load_spectrum(source: str, n: HalfInteger, lam: float):
    from . import quantum
    if source == "default":
        return quantum.EnergySpectrum.default(n, lam), "default"
    try:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError("cannot read energies file: %s" % exc) from None
    try:
        spectrum = quantum.EnergySpectrum.from_text(text)
    except ValueError as exc:
        raise UsageError("bad energies file %s: %s" % (source, exc)) from None
    if spectrum.levels.size != n.twice + 1:
        raise UsageError("energies file has %d levels, n = %s needs %d"
                         % (spectrum.levels.size, n, n.twice + 1))
    return spectrum, source


def _cmd_thermal(args):
    from . import quantum
    n, lam = args.n, args.lam
    if not (args.beta >= 0):
        raise UsageError("--beta must be >= 0")
    spectrum, label = _load_spectrum(args.energies, n, lam)
    labels = _adjacent_labels(n, args.n3)
    pf = quantum.thermal_prefactor(spectrum, args.beta)
    rows = []
    for n3 in labels:
        d = quantum.thermal_distance(n, lam, n3, spectrum, args.beta)
        row = {"n": str(n), "n3": str(n3), "beta": args.beta,
               "distance": d, "value": d, "method": "closed_form", "prefactor": pf}
        if args.oracle:
            weights = quantum.thermal_profile(spectrum, args.beta)
            prof = quantum.ProbabilityProfile(
                n, {t: weights for t in range(-n.twice, n.twice + 1, 2)})
            row["profile_functional"] = quantum.trace_norm_distance(n, lam, n3, prof)
            row["ratio"] = row["profile_functional"] / d
        rows.append(row)
    extra = {"n3": str(args.n3) if args.n3 is not None else None, "beta": args.beta,
             "energies": label, "oracle": args.oracle}
    return extra, rows, 0


_CONTINUUM_CHECKS = ("continuum-hopf", "continuum-metric", "continuum-killing",
                     "continuum-clifford", "continuum-monopole", "continuum-connection")


def _check_rows(results):
    rows = []
    code = 0
    for r in results:
        rows.append({"check": r.name, "passed": r.passed,
                     "max_deviation": r.max_deviation, "note": r.note})
        if not r.passed:
            print("fuzzydist: check failed: %s (max deviation %s)"
                  % (r.name, _fmt(r.max_deviation)), file=sys.stderr)
            code = 1
    return rows, code


def _cmd_continuum_check(args):
    from . import validate
    results = validate.run_checks(names=_CONTINUUM_CHECKS, seed=args.seed)
    rows, code = _check_rows(results)
    return {}, rows, code


def _cmd_validate(args):
    from . import validate
    results = validate.run_checks(seed=args.seed)
    rows, code = _check_rows(results)
    return {}, rows, code


def _cmd_table(args):
    from . import distance, sphere, triple
    n_min, n_max, lam = args.n_min, args.n_max, args.lam
    if n_min.twice < 1:
        raise UsageError("--n-min must be at least 1/2")
    if n_max.twice < n_min.twice:
        raise UsageError("--n-max must be >= --n-min")
    rows, code = [], 0
    for t in range(n_min.twice, n_max.twice + 1):
        n = HalfInteger(t)
        s = sphere.build_space(n, lam)
        tr = triple.build_dirac(s, "config", 0)
        for t3 in range(-t, t - 1, 2):
            n3 = HalfInteger(t3)
            cf = distance.adjacent_distance_closed_form(n, n3, lam)
            lb = distance.distance_lower_bound(
                tr, sphere.pure_state(s, n3), sphere.pure_state(s, n3 + HalfInteger(2)))
            row = {"n": str(n), "n3": str(n3), "closed_form": cf,
                   "norm_pipeline": lb.value}
            if args.oracle:
                try:
                    opt = distance.connes_distance_optimized(
                        tr, sphere.pure_state(s, n3),
                        sphere.pure_state(s, n3 + HalfInteger(2)), seed=args.seed)
                    row["optimizer"] = opt.value
                except distance.OptimizerError as exc:
                    print("fuzzydist: optimizer failed at n = %s, n3 = %s: %s"
                          % (n, n3, exc), file=sys.stderr)
                    row["optimizer"] = exc.best_value
                    code = 1
            row["ratio"] = lb.value / cf
            rows.append(row)
    extra = {"n_min": str(n_min), "n_max": str(n_max), "oracle": args.oracle}
    return extra, rows, code


_HANDLERS = {
    "discrete": _cmd_discrete,
    "coherent": _cmd_coherent,
    "quantum-pure": _cmd_quantum_pure,
    "quantum-mixed": _cmd_quantum_mixed,
    "thermal": _cmd_thermal,
    "continuum-check": _cmd_continuum_check,
    "table": _cmd_table,
    "validate": _cmd_validate,
}


def main(argv=None) -> int:
    try:
        _configure_threads()
    except UsageError as exc:
        print("fuzzydist: error: %s" % exc, file=sys.stderr)
        return 2

    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        extra, rows, code = _HANDLERS[args.command](args)
    except UsageError as exc:
        print("fuzzydist: error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        # domain errors raised by the library for inputs the grammar accepts
        print("fuzzydist: error: %s" % exc, file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print("fuzzydist: computation failed: %s" % exc, file=sys.stderr)
        return 1

    meta = {"command": args.command,
            "n": str(args.n) if hasattr(args, "n") else None,
            "lambda": args.lam if hasattr(args, "lam") else None,
            "seed": args.seed,
            "version": VERSION}
    meta.update(extra)
    meta["format"] = args.format
    if not args.no_timestamp:
        import datetime
        meta["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()

    text = _emit_json(meta, rows) if args.format == "json" else _emit_csv(meta, rows)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print("fuzzydist: error: cannot write %s: %s" % (args.out, exc), file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
