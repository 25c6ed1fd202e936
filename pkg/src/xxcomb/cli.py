"""Command-line front end: ``xxcomb <subcommand> [options]``.

Exit codes: 0 success, 1 guard violation or failed identity suite, 2 bad arguments.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import bethe, circulant, genfun, symfun, walks
from .exact import GuardError, TruncatedSeries
from .genfun import QGammaPoly
from .suite import run_suite

UNSAFE = 10**6


class ArgError(ValueError):
    pass


def parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ArgError(f"expected comma-separated integers, got {text!r}")


def parse_values(text: str):
    """Comma-separated numbers; rationals like 1/3 stay exact, decimals become floats."""
    out = []
    for t in text.split(","):
        t = t.strip()
        try:
            if "." in t or "e" in t.lower() or "j" in t:
                out.append(complex(t) if "j" in t else float(t))
            else:
                out.append(Fraction(t))
        except ValueError:
            raise ArgError(f"cannot parse number {t!r}")
    return [int(v) if isinstance(v, Fraction) and v.denominator == 1 else v for v in out]


def parse_number(text: str):
    return parse_values(text)[0]


# ------------------------------------------------------------------ encoding


def to_jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else {"num": str(v.numerator), "den": str(v.denominator)}
    if isinstance(v, float):
        return v
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, TruncatedSeries):
        return {"var": v.var, "order": v.order, "coefficients": [to_jsonable(c) for c in v.coeffs]}
    if isinstance(v, QGammaPoly):
        return json.loads(v.to_json())
    if isinstance(v, dict):
        return {str(k): to_jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [to_jsonable(x) for x in v]
    if hasattr(v, "item"):
        return to_jsonable(v.item())
    raise TypeError(f"cannot encode {type(v).__name__}")


def to_plain(v) -> str:
    if isinstance(v, complex):
        return f"{v.real!r}{v.imag:+.17g}j"
    if isinstance(v, (list, tuple)):
        return ",".join(to_plain(x) for x in v)
    if isinstance(v, QGammaPoly):
        return " + ".join(f"{c}*q^{i}*g^{j}" for (i, j), c in sorted(v.coeffs.items()))
    return str(v)


def emit(result: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(to_jsonable(result), sort_keys=False) + "\n")
    elif fmt == "csv":
        rows = result.get("rows")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if rows:
            keys = list(rows[0].keys())
            w.writerow(keys)
            for r in rows:
                w.writerow([to_plain(r[k]) for k in keys])
        else:
            w.writerow(list(result.keys()))
            w.writerow([to_plain(v) for v in result.values()])
        out.write(buf.getvalue())
    else:
        if "rows" in result:
            for r in result["rows"]:
                out.write("  ".join(f"{k}={to_plain(v)}" for k, v in r.items()) + "\n")
            for k, v in result.items():
                if k != "rows":
                    out.write(f"{k}: {to_plain(v)}\n")
        elif set(result) == {"value"}:
            out.write(to_plain(result["value"]) + "\n")
        else:
            for k, v in result.items():
                out.write(f"{k}: {to_plain(v)}\n")


# ---------------------------------------------------------------- commands


def _limits(args, keys):
    return {k: UNSAFE for k in keys} if args.unsafe_limits else None


def cmd_schur(args):
    lam = parse_ints(args.lam)
    x = parse_values(args.x)
    if args.route == "ones":
        return {"value": symfun.schur_ones(lam)}
    if args.route == "paths":
        return {"value": symfun.schur_paths(lam, x, _limits(args, ("N", "box")))}
    return {"value": symfun.schur_bialternant(lam, x)}


def _walk_cfg(args, stays=False):
    muL, muR = parse_ints(args.muL), parse_ints(args.muR)
    if len(muL) != len(muR):
        raise ArgError("muL and muR must have the same length")
    return walks.WalkConfig(len(muL), args.K, args.M, stays), muL, muR


def cmd_walks_count(args):
    cfg, muL, muR = _walk_cfg(args)
    if args.stays:
        poly = walks.count_with_stays(cfg, muL, muR)
        res = {"coefficients": poly}
        if args.w is not None:
            res["value"] = walks.eval_poly(poly, parse_number(args.w))
        return res
    return {"value": walks.count_formula(cfg, muL, muR)}


def cmd_walks_oracle(args):
    cfg, muL, muR = _walk_cfg(args, args.stays)
    nc = walks.oracle_count(cfg, muL, muR, _limits(args, ("N", "K")))
    if args.stays:
        return {"value": nc.value, "by_stays": [nc.by_stays[p] for p in range(cfg.K + 1)]}
    return {"value": nc.value}


def cmd_circulant_power(args):
    if args.offset is not None:
        return {"value": circulant.circulant_power_entry(args.M, args.K, 1, 1 + args.offset % args.M)}
    if args.j is None or args.m is None:
        return {"entries": list(circulant.circulant_power_formula(args.M, args.K).entries)}
    return {"value": circulant.circulant_power_entry(args.M, args.K, args.j, args.m)}


def cmd_ramus_check(args):
    trig, ex = circulant.ramus_sides(args.R, args.n, args.t)
    return {"trig": trig, "exact": ex, "tol": args.tol, "pass": abs(trig - ex) <= args.tol}


def cmd_gen_ramus_check(args):
    muL, muR = parse_ints(args.muL), parse_ints(args.muR)
    if args.det:
        lhs, rhs = circulant.det_ramus_identity(args.M, args.K, muL, muR)
    else:
        lhs = circulant.generalized_ramus_lhs(args.M, args.K, muL, muR)
        rhs = circulant.generalized_ramus_rhs(args.M, args.K, muL, muR)
    ok = abs(lhs - rhs) <= args.tol * max(1, abs(lhs))
    return {"lhs": lhs, "rhs": rhs, "tol": args.tol, "pass": ok}


def cmd_macmahon(args):
    return {"value": genfun.macmahon(args.N, args.box)}


def cmd_norm_trace(args):
    lim = _limits(args, ("N", "box"))
    if args.q is None and args.gamma is None:
        return {"polynomial": genfun.norm_trace_sum(args.N, args.box, lim)}
    if args.q is None or args.gamma is None:
        raise ArgError("give both --q and --gamma, or neither")
    return {"value": genfun.norm_trace_det(args.N, args.box, parse_number(args.q), parse_number(args.gamma), lim)}


def cmd_pinned_count(args):
    return {"value": genfun.pinned_pp_count(args.N, args.box, parse_ints(args.k))}


def cmd_diag_constrained(args):
    return {"value": genfun.diag_constrained_count(args.N, args.box, args.m)}


def cmd_amplitude(args):
    muL, muR = parse_ints(args.muL), parse_ints(args.muR)
    spec = bethe.ChainSpec(args.M, len(muL), args.h)
    if args.M > bethe.DENSE_LIMIT and not args.unsafe_limits:
        raise GuardError(f"amplitude: M={args.M} exceeds limit M<={bethe.DENSE_LIMIT}")
    res = {}
    if args.route in ("spectral", "both"):
        res["spectral"] = bethe.amplitude_spectral(spec, muL, muR, args.beta)
    if args.route in ("determinant", "both"):
        res["determinant"] = bethe.amplitude_determinant(spec, muL, muR, args.beta)
    return res


def cmd_bethe_check(args):
    I = parse_ints(args.I)
    spec = bethe.ChainSpec(args.M, len(I), args.h)
    s = bethe.bethe_roots(spec, I)
    limit = UNSAFE if args.unsafe_limits else bethe.DENSE_LIMIT
    res = bethe.eigen_residual(s, limit)
    return {"theta": list(s.theta), "energy": s.energy, "norm2": s.norm2, "residual": res,
            "tol": args.tol, "pass": res <= args.tol}


def cmd_total_trace(args):
    a = [float(v) for v in parse_values(args.a)] if args.a else None
    if a is not None and len(a) != args.M:
        raise ArgError(f"--a needs {args.M} weights")
    spec = bethe.ChainSpec(args.M, 0, args.h)
    t = genfun.total_trace(spec, a, args.beta)
    res = {"value": t.value, "ell_plus": t.plus, "ell_minus": t.minus}
    if args.dense:
        limit = UNSAFE if args.unsafe_limits else bethe.DENSE_LIMIT
        d = bethe.dense_trace(args.M, args.h, args.beta, a, limit)
        res.update(dense=d, rel_error=abs(d - t.value) / abs(d), tol=1e-10, **{"pass": abs(d - t.value) <= 1e-10 * abs(d)})
    return res


def cmd_correlator(args):
    sites = parse_ints(args.sites)
    kern = genfun.FermiKernel(args.beta, args.h, args.ell, args.M, not args.odd_grid)
    res = {"value": genfun.minor_derivative(kern, sites)}
    if args.M is not None and args.check:
        fd = genfun.finite_difference_minor(kern, sites)
        res.update(finite_difference=fd, tol=1e-5, **{"pass": abs(fd - res["value"]) <= 1e-5 * abs(res["value"])})
    return res


def cmd_moment_mean(args):
    lim = _limits(args, ("M", "N"))
    return {"value": genfun.moment_mean(args.N, args.beta, args.M, args.l, lim)}


def cmd_identity_suite(args):
    rows = run_suite(args.level)
    table = [{"identity": r.name, "pass": r.passed, "tol": r.tol, "detail": r.detail} for r in rows]
    return {"rows": table, "passed": sum(r.passed for r in rows), "failed": sum(not r.passed for r in rows)}


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    common.add_argument("--unsafe-limits", action="store_true", help="lift exhaustive-search guards")

    p = argparse.ArgumentParser(prog="xxcomb", description="Exact XX-chain combinatorics")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    s = add("schur", cmd_schur, "evaluate a Schur polynomial")
    s.add_argument("--lam", required=True)
    s.add_argument("--x", default="1")
    s.add_argument("--route", choices=("bialternant", "paths", "ones"), default="bialternant")

    for name, func, help_ in (("walks-count", cmd_walks_count, "count vicious-walker nests by formula"),
                              ("walks-oracle", cmd_walks_oracle, "count nests by brute-force enumeration")):
        s = add(name, func, help_)
        s.add_argument("--K", type=int, required=True)
        s.add_argument("--muL", required=True)
        s.add_argument("--muR", required=True)
        s.add_argument("--M", type=int, default=None, help="ring size; omit for the infinite line")
        s.add_argument("--stays", action="store_true")
        if name == "walks-count":
            s.add_argument("--w", default=None, help="evaluate the stays polynomial at w")

    s = add("circulant-power", cmd_circulant_power, "entries of Delta^K")
    s.add_argument("--M", type=int, required=True)
    s.add_argument("--K", type=int, required=True)
    s.add_argument("--offset", type=int)
    s.add_argument("--j", type=int)
    s.add_argument("--m", type=int)

    s = add("ramus-check", cmd_ramus_check, "check Ramus's identity")
    s.add_argument("--R", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--tol", type=float, default=1e-9)

    s = add("gen-ramus-check", cmd_gen_ramus_check, "generalized or determinantal Ramus identity")
    s.add_argument("--M", type=int, required=True)
    s.add_argument("--K", type=int, required=True)
    s.add_argument("--muL", required=True)
    s.add_argument("--muR", required=True)
    s.add_argument("--det", action="store_true")
    s.add_argument("--tol", type=float, default=1e-8)

    s = add("macmahon", cmd_macmahon, "boxed plane partition count")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--box", type=int, required=True)

    s = add("norm-trace", cmd_norm_trace, "norm-trace generating function")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--box", type=int, required=True)
    s.add_argument("--q")
    s.add_argument("--gamma")

    s = add("pinned-count", cmd_pinned_count, "pinned watermelon count")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--box", type=int, required=True)
    s.add_argument("--k", default="")

    s = add("diag-constrained", cmd_diag_constrained, "diagonally constrained plane partitions")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--box", type=int, required=True)
    s.add_argument("--m", type=int, required=True)

    s = add("amplitude", cmd_amplitude, "transition amplitude <muL|e^{-beta H}|muR>")
    s.add_argument("--M", type=int, required=True)
    s.add_argument("--h", type=float, default=0.0)
    s.add_argument("--beta", type=float, required=True)
    s.add_argument("--muL", required=True)
    s.add_argument("--muR", required=True)
    s.add_argument("--route", choices=("spectral", "determinant", "both"), default="both")

    s = add("bethe-check", cmd_bethe_check, "Bethe state eigen-residual")
    s.add_argument("--M", type=int, required=True)
    s.add_argument("--h", type=float, default=0.0)
    s.add_argument("--I", required=True)
    s.add_argument("--tol", type=float, default=1e-10)

    s = add("total-trace", cmd_total_trace, "Tr(e^Q e^{-beta H})")
    s.add_argument("--M", type=int, required=True)
    s.add_argument("--h", type=float, default=0.0)
    s.add_argument("--beta", type=float, required=True)
    s.add_argument("--a", default=None)
    s.add_argument("--dense", action="store_true", help="also compute the dense 2^M trace")

    s = add("correlator", cmd_correlator, "minor of the Fermi-weight matrix")
    s.add_argument("--beta", type=float, required=True)
    s.add_argument("--h", type=float, default=0.0)
    s.add_argument("--sites", required=True)
    s.add_argument("--M", type=int, default=None, help="ring size; omit for the infinite chain")
    s.add_argument("--ell", type=int, choices=(1, -1), default=1)
    s.add_argument("--odd-grid", action="store_true")
    s.add_argument("--check", action="store_true", help="compare with finite differences")

    s = add("moment-mean", cmd_moment_mean, "N-particle moment mean")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--M", type=int, required=True)
    s.add_argument("--beta", type=float, required=True)
    s.add_argument("--l", type=int, default=1)

    s = add("identity-suite", cmd_identity_suite, "run the identity checks")
    s.add_argument("--level", choices=("quick", "full"), default="quick")
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        result = args.func(args)
    except GuardError as e:
        err.write(f"guard violation: {e}\n")
        return 1
    except (ArgError, ValueError) as e:
        err.write(parser.format_usage())
        err.write(f"error: {e}\n")
        return 2
    emit(result, args.format, out)
    if args.command == "identity-suite" and result["failed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
