"""Command-line entry point: ``dahaskein verify`` and ``dahaskein element``.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.
Every flag may also be set through an environment variable ``DAHASKEIN_<FLAG>``
(upper case, dashes as underscores); explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Optional, Sequence

from .daha.engine import SELECTED
from .daha.operators import DEFAULT_PRIME

__all__ = ["main", "build_parser", "is_prime"]

ENV_PREFIX = "DAHASKEIN_"
SUITE_NAMES = (
    "daha-relations",
    "presentation-iso",
    "hecke",
    "theta4",
    "power-sum-central",
    "pw-comparison",
    "hall-transport",
    "theta-series",
    "all",
)


class UsageError(Exception):
    pass


def is_prime(p: int) -> bool:
    """Miller-Rabin with the first twelve prime bases (exact below 3.3e24)."""
    if p < 2:
        return False
    bases = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for b in bases:
        if p % b == 0:
            return p == b
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in bases:
        x = pow(b, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def _env(name: str, default):
    raw = os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"))
    if raw is None:
        return default
    if isinstance(default, int):
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"{ENV_PREFIX}{name.upper()} must be an integer, got {raw!r}")
    return raw


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dahaskein", description="Exact checks for the braid skein DAHA at small rank.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite_pos", nargs="?", metavar="SUITE", help="suite name (same as --suite)")
    v.add_argument("--suite", default=None, help=f"one of: {', '.join(SUITE_NAMES)}")
    v.add_argument("--n", type=int, default=None, help="rank (default 2)")
    v.add_argument("--m-max", type=int, default=None, help="largest m in the m-indexed families (default 2)")
    v.add_argument("--box", type=int, default=None, help="monomial box radius R (default 2)")
    v.add_argument("--prime", type=int, default=None, help=f"modulus for the fast refutation stage (default {DEFAULT_PRIME})")
    v.add_argument("--trials", type=int, default=None, help="random modular points per check (default 3)")
    v.add_argument("--seed", type=int, default=None, help="seed for the modular points (default 0)")
    v.add_argument("--format", choices=("json", "text"), default=None)
    v.add_argument("--timings", action="store_true", help="add wall times to the report (breaks byte equality)")
    v.add_argument("-o", "--output", default=None, help="also write the report to this file")

    e = sub.add_parser("element", help="print an element, or its image on a polynomial")
    e.add_argument("kind", choices=("qtilde", "q", "w", "theta"))
    e.add_argument("x", help="lattice vector such as (0,2); quote it in the shell")
    e.add_argument("--n", type=int, default=None, help="rank (default 2)")
    e.add_argument("--order", type=int, default=None, help="theta: index along the primitive direction")
    e.add_argument("--mode", choices=("axis", "general"), default=None, help="w: formula to use")
    e.add_argument("--apply-to", default=None, help="Laurent polynomial in X1..Xn to act on")
    e.add_argument("--format", choices=("json", "text"), default=None)
    return p


def _parse_vec(text: str):
    m = re.fullmatch(r"\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*", text)
    if not m:
        raise UsageError(f"cannot read a lattice vector from {text!r}")
    x = (int(m.group(1)), int(m.group(2)))
    if x == (0, 0):
        raise UsageError("the vector must be nonzero")
    return x


# -- verify -------------------------------------------------------------------


def _verify_config(args):
    from .suites import Config

    suite = args.suite or args.suite_pos or _env("suite", "all")
    if args.suite and args.suite_pos and args.suite != args.suite_pos:
        raise UsageError("suite given twice with different values")
    if suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    pick = lambda name, default: getattr(args, name.replace("-", "_")) if getattr(args, name.replace("-", "_")) is not None else _env(name, default)  # noqa: E731
    cfg = Config(
        n=pick("n", 2),
        m_max=pick("m-max", 2),
        box=pick("box", 2),
        prime=pick("prime", DEFAULT_PRIME),
        trials=pick("trials", 3),
        seed=pick("seed", 0),
    )
    fmt = args.format or _env("format", "json")
    if fmt not in ("json", "text"):
        raise UsageError(f"format must be json or text, got {fmt!r}")
    if cfg.n < 2:
        raise UsageError("rank must be at least 2")
    if cfg.m_max < 1:
        raise UsageError("m-max must be at least 1")
    if cfg.box < 1:
        raise UsageError("box radius must be at least 1")
    if cfg.trials < 0:
        raise UsageError("trials must be non-negative")
    if cfg.prime <= 2 ** 20 or not is_prime(cfg.prime):
        raise UsageError(f"--prime must be a prime above 2^20, got {cfg.prime}")
    return suite, cfg, fmt


def _render_text(report) -> str:
    lines = []
    for r in report["checks"]:
        mark = "PASS" if r["status"] == "pass" else "FAIL"
        line = f"{mark}  {r['id']}  [{r['verdict']}]"
        if "wall_time_s" in r:
            line += f"  {r['wall_time_s']:.3f}s"
        lines.append(line)
        if r["status"] != "pass":
            lines.append(f"      {r['reference']}")
            for key in ("witness", "detail"):
                if key in r:
                    lines.append(f"      {key}: {r[key]}")
    s = report["summary"]
    lines.append(f"{s['passed']}/{s['total']} passed, {s['failed']} failed  (suite {report['suite']}, convention {report['convention']['label']})")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    from .suites import SCHEMA, build_suite, run_checks

    suite, cfg, fmt = _verify_config(args)
    print(f"dahaskein: running {suite} at n={cfg.n}", file=sys.stderr)
    records = run_checks(build_suite(suite, cfg), timings=args.timings)
    failed = sum(r["status"] != "pass" for r in records)
    report = {
        "schema": SCHEMA,
        "suite": suite,
        "config": {
            "n": cfg.n,
            "m_max": cfg.m_max,
            "box_radius": cfg.box,
            "prime": cfg.prime,
            "modular_trials": cfg.trials,
            "seed": cfg.seed,
        },
        "convention": dict(SELECTED.as_dict(), label=SELECTED.label()),
        "checks": records,
        "summary": {"total": len(records), "passed": len(records) - failed, "failed": failed},
    }
    text = json.dumps(report, indent=2, sort_keys=True) + "\n" if fmt == "json" else _render_text(report)
    sys.stdout.write(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if failed:
        print(f"dahaskein: {failed} check(s) failed", file=sys.stderr)
    return 1 if failed else 0


# -- element ------------------------------------------------------------------


def cmd_element(args) -> int:
    from .daha.elements import q_elements, q_sandwich, qtilde, w_element
    from .daha.operators import LaurentPoly, skein_to_rep
    from .ehall import Vec2, theta_series, theta_symbolic

    x = _parse_vec(args.x)
    n = args.n if args.n is not None else _env("n", 2)
    fmt = args.format or _env("format", "text")
    if fmt not in ("json", "text"):
        raise UsageError(f"format must be json or text, got {fmt!r}")
    if n < 2:
        raise UsageError("rank must be at least 2")
    out = {"kind": args.kind, "x": list(x)}
    op = None
    if args.kind == "theta":
        if args.apply_to is not None:
            raise UsageError("theta elements live in the Hall algebra and have no polynomial action")
        v = Vec2(*x)
        order = args.order if args.order is not None else v.d()
        if order < 0:
            raise UsageError("order must be non-negative")
        x0 = v.primitive()
        out.update(x0=list(x0), order=order, symbolic=theta_symbolic(x0, order),
                   element=str(theta_series(x0, order)[order]))
    else:
        out["n"] = n
        if args.kind == "qtilde":
            el = qtilde(x, n)
            op = el
        elif args.kind == "q":
            el = q_elements(x, n)[1]
            op = q_sandwich(x, n)
        else:
            mode = args.mode or ("axis" if 0 in x else "general")
            if mode == "axis" and 0 not in x:
                raise UsageError(f"{x} is not on a coordinate axis")
            el = w_element(x, n, mode)
            op = el
            out["mode"] = mode
        out["element"] = str(el)
    if args.apply_to is not None:
        try:
            f = LaurentPoly.parse(args.apply_to, n)
        except ValueError as exc:
            raise UsageError(f"cannot parse polynomial {args.apply_to!r}: {exc}")
        out["apply_to"] = str(f)
        out["image"] = str(skein_to_rep(op)(f))
    if fmt == "json":
        sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    else:
        if "symbolic" in out:
            sys.stdout.write(out["symbolic"] + "\n")
        sys.stdout.write((out["image"] if "image" in out else out["element"]) + "\n")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_element(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"dahaskein: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"dahaskein: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
