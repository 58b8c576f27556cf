"""Command-line front end.

Subcommands: exact, crosscheck, contacts, asym, bijection. Exit status is 0
on success, 1 when a cross-check finds differing routes, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable

from .asym import convergence_report, mean_asym, z_asym_leading
from .core import ContactPolynomial, DomainError, WalkerSpec, WatermelonSpec
from .formulas import z_thm4, z_thm8, z_thm9
from .lgv import z_det_deviation0, z_det_general, z_det_watermelon
from .oracle import PathFamily, enumerate_contact_polynomial, enumerate_families
from .stats import mean_contacts, normalized_mean
from .tableaux import prop6_forward, prop6_inverse, prop6_trace


# -- routes -----------------------------------------------------------------------

def _oracle(t, y, n):
    return enumerate_contact_polynomial(WatermelonSpec(n, t, y))


def _det_general(t, y, n):
    spec = WatermelonSpec(n, t, y)
    if t == 0:
        return _oracle(t, y, n)
    return z_det_general(spec.walker_spec())


def _det_dev0(t, y, n):
    if y != 0 or t % 2 or t < 2:
        raise DomainError("det-dev0 needs y = 0 and even t >= 2")
    return z_det_deviation0(t // 2, n)


def _thm4(t, y, n):
    if y != 0 or t % 2 or t < 2:
        raise DomainError("thm4 needs y = 0 and even t >= 2")
    return z_thm4(t // 2, n)


# Each route maps (t, y, n) to a ContactPolynomial. Tests may swap entries.
ROUTES: dict[str, Callable[[int, int, int], ContactPolynomial]] = {
    "oracle": _oracle,
    "det-general": _det_general,
    "det-watermelon": lambda t, y, n: z_det_watermelon(t, y, n),
    "det-dev0": _det_dev0,
    "thm4": _thm4,
    "thm8": lambda t, y, n: z_thm8(t, y, n),
    "thm9": lambda t, y, n: z_thm9(t, y, n)[1],
}


def applicable_routes(t: int, y: int) -> list[str]:
    """Routes whose preconditions hold at (t, y); the oracle always applies."""
    out = ["oracle", "det-general"]
    if t >= 1:
        out.append("det-watermelon")
    if t >= 1 and t + y >= 2:
        out += ["thm8", "thm9"]
    if y == 0 and t >= 2:
        out += ["det-dev0", "thm4"]
    return out


# -- output -------------------------------------------------------------------------

def _fmt_float(x: float) -> str:
    return f"{x:.17g}"


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, floats with 17 significant digits."""
    floats: list[str] = []

    def conv(v):
        if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
            return v
        if isinstance(v, float):
            floats.append(_fmt_float(v))
            return f"@@F{len(floats) - 1}@@"
        if isinstance(v, Fraction):
            return str(v)
        if isinstance(v, dict):
            return {str(k): conv(x) for k, x in v.items()}
        if isinstance(v, (list, tuple)):
            return [conv(x) for x in v]
        raise TypeError(f"cannot serialise {v!r}")

    text = json.dumps(conv(obj), sort_keys=True)
    for i, f in enumerate(floats):
        text = text.replace(f'"@@F{i}@@"', f)
    return text


def poly_to_json(p: ContactPolynomial, n: int, t: int, y: int | None) -> dict:
    return {"n": n, "t": t, "y": y, "coeffs": {str(e): str(v) for e, v in p}}


def poly_from_json(d: dict) -> ContactPolynomial:
    return ContactPolynomial({int(e): int(v) for e, v in d["coeffs"].items()})


def parse_kappa(s: str):
    """'p/q' or an integer gives an exact Fraction; a decimal gives a float."""
    s = s.strip()
    try:
        return Fraction(s) if ("/" in s or s.lstrip("+-").isdigit()) else float(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad kappa {s!r}") from exc


def _ints(s: str) -> tuple[int, ...]:
    return tuple(int(v) for v in s.split(",") if v.strip())


# -- commands -----------------------------------------------------------------------

def cmd_exact(args) -> int:
    if args.a is not None or args.e is not None:
        if args.a is None or args.e is None:
            raise DomainError("--a and --e go together")
        a, e = _ints(args.a), _ints(args.e)
        spec = WalkerSpec(len(a), args.t, a, e)
        if args.method == "oracle" or args.t == 0:
            p = enumerate_contact_polynomial(spec)
        elif args.method == "det-general":
            p = z_det_general(spec)
        else:
            raise DomainError("general start/end heights support only oracle and det-general")
        n, y = spec.n, None
    else:
        if args.n is None or args.y is None:
            raise DomainError("need --n and --y (or --a and --e)")
        n, y = args.n, args.y
        WatermelonSpec(n, args.t, y)
        p = ROUTES[args.method](args.t, y, n)
    if args.format == "csv":
        print("contacts,count")
        for ex, v in p:
            print(f"{ex},{v}")
    else:
        print(dumps(poly_to_json(p, n, args.t, y)))
    return 0


def crosscheck(max_n: int, max_t: int, max_y: int, min_t: int = 0) -> tuple[list[str], list[str]]:
    """Compare every applicable route on the grid. Returns (report lines, mismatches)."""
    lines, bad = [], []
    for n in range(1, max_n + 1):
        for y in range(max_y + 1):
            for t in range(max(y, min_t), max_t + 1):
                if (t - y) % 2:
                    continue
                routes = applicable_routes(t, y)
                ref = ROUTES["oracle"](t, y, n)
                status = []
                for name in routes:
                    p = ROUTES[name](t, y, n)
                    if p == ref:
                        status.append(f"{name}=PASS")
                        continue
                    status.append(f"{name}=FAIL")
                    exps = sorted(set(ref.coeffs) | set(p.coeffs))
                    first = next(e for e in exps if ref[e] != p[e])
                    bad.append(f"n={n} t={t} y={y} route={name}: kappa^{first} "
                               f"coefficient {p[first]} != oracle {ref[first]}")
                lines.append(f"n={n} t={t} y={y} " + " ".join(status))
    return lines, bad


def cmd_crosscheck(args) -> int:
    lines, bad = crosscheck(args.max_n, args.max_t, args.max_y)
    if not args.quiet:
        for ln in lines:
            print(ln)
    if bad:
        print("FAIL: " + bad[0])
        print(f"{len(bad)} mismatching route evaluations")
        return 1
    print("PASS")
    return 0


def cmd_contacts(args) -> int:
    WatermelonSpec(args.n, args.t, args.y)
    kappa = parse_kappa(args.kappa)
    p = ROUTES[args.method](args.t, args.y, args.n)
    if isinstance(kappa, Fraction):
        m, nm = mean_contacts(p, kappa), normalized_mean(p, kappa)
        out = {"kappa": str(kappa), "mean": str(m), "normalized_mean": str(nm)}
    else:
        z = p.evaluate(kappa)
        m = kappa * p.derivative().evaluate(kappa)
        out = {"kappa": kappa, "mean": float(m), "normalized_mean": float(m / z)}
    if args.format == "csv":
        print("n,t,y,kappa,mean,normalized_mean")
        print(",".join(str(v) for v in (args.n, args.t, args.y, out["kappa"], out["mean"], out["normalized_mean"])))
    elif args.format == "plain":
        print(out["normalized_mean"])
    else:
        out.update(n=args.n, t=args.t, y=args.y)
        print(dumps(out))
    return 0


def cmd_asym(args) -> int:
    kappa = float(parse_kappa(args.kappa))
    if args.report:
        ts = args.t_values and list(_ints(args.t_values))
        if not ts:
            ts = sorted({args.t // 4, args.t // 2, args.t})
            ts = [t + ((t - args.y) % 2) for t in ts]
        rep = convergence_report(args.y, args.n, kappa, ts)
        if args.format == "json":
            print(dumps({"n": args.n, "y": args.y, "kappa": kappa, "ok": rep.ok,
                         "rows": [{"t": r.t, "log_exact": r.log_exact, "log_asym": r.log_asym,
                                   "ratio": r.ratio, "error": r.error} for r in rep.rows]}))
        else:
            for ln in rep.lines():
                print(ln)
        return 0
    est = z_asym_leading(args.t, args.y, args.n, kappa)
    out = {"n": args.n, "t": args.t, "y": args.y, "kappa": kappa, "regime": est.regime,
           "growth_rate": est.growth_rate, "critical_exponent": est.critical_exponent,
           "constant": est.constant, "log_value": est.log_value,
           "mean": mean_asym(args.t, args.y, args.n, kappa)}
    if args.format == "csv":
        keys = sorted(out)
        print(",".join(keys))
        print(",".join(_fmt_float(out[k]) if isinstance(out[k], float) else str(out[k]) for k in keys))
    else:
        print(dumps(out))
    return 0


def cmd_bijection(args) -> int:
    spec = WatermelonSpec(args.n, args.t, args.y)
    if args.walks:
        fam = PathFamily.from_strings(*args.walks.split(","))
    else:
        fam = None
        for i, f in enumerate(enumerate_families(spec)):
            if i == args.family:
                fam = f
                break
        if fam is None:
            raise DomainError(f"family index {args.family} out of range")
    ell, trace = prop6_trace(spec, fam)
    image = prop6_forward(spec, fam)
    back = prop6_inverse(spec, image)
    if args.format == "json":
        print(dumps({"n": spec.n, "t": spec.t, "y": spec.y, "ell": ell,
                     "family": list(fam.to_strings()), "image": list(image.to_strings()),
                     "trace": [[list(r) for r in tab.rows] for tab in trace],
                     "round_trip": back == fam}))
        return 0
    print("family: " + " ".join(fam.to_strings()))
    print(f"wall returns of walk 1: {ell}")
    labels = ["start"]
    for k in range(ell):
        labels += [f"round {k + 1}: after slide", f"round {k + 1}: after deletion"]
    labels.append("minus 1")
    for label, tab in zip(labels, trace):
        print(f"-- {label}")
        print(tab.pretty())
    print("image: " + " ".join(image.to_strings()))
    print(f"round trip: {'ok' if back == fam else 'BROKEN'}")
    return 0


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="watermelons", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="contact polynomial by a chosen route")
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--y", type=int)
    p.add_argument("--a", help="comma-separated start heights")
    p.add_argument("--e", help="comma-separated end heights")
    p.add_argument("--method", choices=sorted(ROUTES), default="thm8")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("crosscheck", help="compare all exact routes on a grid")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-t", type=int, default=12)
    p.add_argument("--max-y", type=int, default=4)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("contacts", help="mean number of contacts at a fugacity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--y", type=int, default=0)
    p.add_argument("--kappa", required=True, help="p/q for exact, decimal for floating")
    p.add_argument("--method", choices=sorted(ROUTES), default="thm8")
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.set_defaults(func=cmd_contacts)

    p = sub.add_parser("asym", help="leading asymptotics and the convergence table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--y", type=int, default=0)
    p.add_argument("--kappa", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--report", action="store_true")
    p.add_argument("--t-values", help="comma-separated lengths for --report")
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("bijection", help="trace the contact-removing bijection on one family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--y", type=int, default=0)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--family", type=int, help="index in enumeration order")
    g.add_argument("--walks", help="comma-separated U/D strings, lowest walk first")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_bijection)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
