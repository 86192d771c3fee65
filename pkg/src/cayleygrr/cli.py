"""Command-line interface: ``cayleygrr {classify,census,sample,bounds,unlabeled}``.

Exit codes: 0 success, 1 a checked claim failed (the witness is printed),
2 invalid input, 3 a size guard was hit (rerun with ``--force`` or ``--limit``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .abelian import parse_group
from .bits import bits_list
from .cayley import MODES, parse_set
from .census import DEFAULT_SEED, bounds, default_jobs, exact_census, sample_census
from .classify import classify
from .errors import ClaimViolation, InvalidInput, ResourceGuard
from .unlabeled import unlabeled_census

EXIT_OK, EXIT_VIOLATION, EXIT_INVALID, EXIT_GUARD = 0, 1, 2, 3
FORCE_LIMIT = 63  # largest n the bitmask arrays can hold


def _flatten(obj, prefix=""):
    out = {}
    if isinstance(obj, dict):
        for k, v in obj.items():
            out.update(_flatten(v, f"{prefix}{k}."))
        return out
    key = prefix[:-1]
    out[key] = json.dumps(obj, separators=(",", ":")) if isinstance(obj, list) else obj
    return out


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    flat = _flatten(payload)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(flat.keys())
        w.writerow("" if v is None else v for v in flat.values())
        return buf.getvalue()
    width = max(map(len, flat), default=0)
    return "".join(f"{k.ljust(width)}  {'-' if v is None else v}\n" for k, v in flat.items())


def _limit(args):
    return FORCE_LIMIT if args.force else args.limit


def cmd_classify(args):
    g = parse_group(args.group)
    if args.set is None:
        raise InvalidInput("--set is required for classify")
    s = parse_set(g, args.set)
    payload = {"group": g.spec, "mode": args.mode, "set": s.elements}
    payload.update(classify(g, s, args.mode).to_dict())
    return payload, EXIT_OK


def cmd_census(args):
    g = parse_group(args.group)
    report = exact_census(g, args.mode, jobs=args.jobs, limit=_limit(args), strict=False)
    payload = report.to_dict()
    code = EXIT_OK
    for v in report.violations:
        print(f"violation ({v['kind']}) on {g.name} {args.mode}: S={bits_list(v['mask'])} "
              f"mask={v['mask']:#x}, {v['count']} set(s)", file=sys.stderr)
        code = EXIT_VIOLATION
    return payload, code


def cmd_sample(args):
    g = parse_group(args.group)
    kwargs = {} if _limit(args) is None else {"limit": _limit(args)}
    report = sample_census(g, args.mode, trials=args.trials, seed=args.seed, jobs=args.jobs, **kwargs)
    return report.to_dict(), EXIT_OK


def cmd_bounds(args):
    if args.group is not None:
        g = parse_group(args.group)
        n, m = g.n, g.involution_count
    elif args.n is not None and args.m is not None:
        n, m = args.n, args.m
    else:
        raise InvalidInput("bounds needs --group or both --n and --m")
    payload = {"n": n, "m": m}
    payload.update({k: v.to_dict() for k, v in bounds(n, m).items()})
    return payload, EXIT_OK


def cmd_unlabeled(args):
    g = parse_group(args.group)
    return unlabeled_census(g, args.mode, jobs=args.jobs, limit=_limit(args)).to_dict(), EXIT_OK


COMMANDS = {"classify": cmd_classify, "census": cmd_census, "sample": cmd_sample,
            "bounds": cmd_bounds, "unlabeled": cmd_unlabeled}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help='invariant factors or any factorization, e.g. "2,4"')
    common.add_argument("--mode", choices=MODES, default="digraph")
    common.add_argument("--jobs", type=int, default=default_jobs(),
                        help="worker processes (default: $CAYLEY_CENSUS_JOBS or 1)")
    common.add_argument("--limit", type=int, help="override the size guard")
    common.add_argument("--force", action="store_true", help="lift the size guard")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", help="write to this file instead of stdout")

    p = argparse.ArgumentParser(prog="cayleygrr", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("classify", parents=[common], help="classify one connection set")
    c.add_argument("--set", help='element indices "1,3" or hex bitmask "0xA"')
    sub.add_parser("census", parents=[common], help="exhaustive census with dichotomy check")
    s = sub.add_parser("sample", parents=[common], help="Monte Carlo estimate of the good proportion")
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    b = sub.add_parser("bounds", parents=[common], help="bound exponents for given n and m")
    b.add_argument("--n", type=int)
    b.add_argument("--m", type=int)
    sub.add_parser("unlabeled", parents=[common], help="isomorphism-class counts")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command != "bounds" and args.group is None:
        print("error: --group is required", file=sys.stderr)
        return EXIT_INVALID
    try:
        payload, code = COMMANDS[args.command](args)
    except InvalidInput as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceGuard as e:
        print(f"guard: {e} (use --force or --limit)", file=sys.stderr)
        return EXIT_GUARD
    except ClaimViolation as e:
        print(f"violation: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    text = render(payload, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
