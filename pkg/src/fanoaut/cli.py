"""Command line interface: ``fano lookup|list|verify|decompose|discriminant|cases``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import catalog, fanodb
from .polyring import PolynomialError, RingSpec
from .sl2rep import CharacterError, decompose, format_decomposition, parse_character

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


def _family_text(f: fanodb.FanoFamily) -> str:
    lines = [f"{f.id}: {f.description or '(no description)'}",
             f"  Aut infinite: {f.infinity_class}",
             f"  generic Aut0: {f.generic_aut0}"]
    for m in f.exceptional_members:
        lines.append(f"  special member: {m.group} [{m.note}, family dim {m.family_dim}]")
    if f.degree is not None:
        lines.append(f"  anticanonical degree: {f.degree}")
    if f.h12_note:
        lines.append(f"  h^(1,2): {f.h12_note}")
    if f.moduli_note:
        lines.append(f"  moduli dimension: {f.moduli_note}")
    if f.ke_obstructed:
        lines.append("  Kahler-Einstein: obstructed for some member")
    if f.discrepancy:
        lines.append("  note: infinite members exist but the family is absent from the headline list")
    if f.model_refs:
        lines.append(f"  models: {', '.join(f.model_refs)}")
    lines.append(f"  anchor: {f.anchor}")
    return "\n".join(lines)


def cmd_lookup(args) -> int:
    db = fanodb.load()
    try:
        fam = db.lookup(args.id)
    except (fanodb.DatabaseError, KeyError) as exc:
        raise UsageError(str(exc)) from None
    _emit(args, fam.as_dict(), _family_text(fam))
    return OK


def cmd_list(args) -> int:
    db = fanodb.load()
    if args.infinite == "always":
        ids, title = db.infinite_always(), "always infinite"
    elif args.infinite == "sometimes":
        ids, title = db.infinite_sometimes(), "infinite for special members only"
    elif args.nonreductive:
        ids, title = db.nonreductive_always(), "non-reductive generic Aut0"
    elif args.h12:
        ids, title = db.h12_infinite(), "h^(1,2) > 0 and Aut infinite"
    elif args.ke_obstructed:
        ids, title = db.ke_obstructed(), "Kahler-Einstein obstructed by Aut0"
    else:
        ids, title = [str(f.id) for f in db.families], "all families"
    _emit(args, {"query": title, "ids": ids}, f"{title} ({len(ids)}): {', '.join(ids)}")
    return OK


def _parse_params(items) -> dict:
    params = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            params[key.strip()] = Fraction(val.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--param value {val!r} is not a rational number") from None
    return params


def _result_line(r: catalog.CaseResult) -> str:
    status = "PASS" if r.ok else "FAIL"
    if r.error:
        return f"{status} {r.label}: {r.error}"
    return f"{status} {r.label}: dim {r.dim} (expected {r.expected_dim}, {r.expected}) {r.seconds:.2f}s"


def cmd_verify(args) -> int:
    if args.all:
        if args.case or args.param:
            raise UsageError("--all takes no case or parameters")
        t0 = time.perf_counter()
        results = catalog.verify_all(jobs=args.jobs)
        model_rows = []
        if args.models:
            model_rows = fanodb.check_models(fanodb.load())
        ok = all(r.ok for r in results) and all(m[2] for m in model_rows)
        elapsed = time.perf_counter() - t0
        payload = {"ok": ok, "seconds": round(elapsed, 3), "cases": [r.as_dict() for r in results],
                   "models": [{"family": f, "case": c, "ok": o, "group": g} for f, c, o, g in model_rows]}
        text = "\n".join(_result_line(r) for r in results)
        if model_rows:
            text += "\n" + "\n".join(f"{'PASS' if o else 'FAIL'} family {f} <- {c}: {g}" for f, c, o, g in model_rows)
        n_bad = sum(not r.ok for r in results) + sum(not m[2] for m in model_rows)
        text += f"\n{len(results) + len(model_rows) - n_bad} passed, {n_bad} failed in {elapsed:.1f}s"
        _emit(args, payload, text)
        return OK if ok else FAILED
    if not args.case:
        raise UsageError("name a case or pass --all")
    params = _parse_params(args.param)
    try:
        catalog.build(args.case, params)
    except catalog.CatalogError as exc:
        raise UsageError(str(exc)) from None
    r = catalog.verify(args.case, params)
    text = _result_line(r)
    if r.computed is not None:
        text += f"\n  signature: {r.computed}\n  {r.report}"
        if r.jordan:
            text += f"\n  generator type: {r.jordan}"
    _emit(args, r.as_dict(), text)
    return OK if r.ok else FAILED


def cmd_decompose(args) -> int:
    try:
        ch = parse_character(args.expr)
        parts = decompose(ch)
    except CharacterError as exc:
        raise UsageError(str(exc)) from None
    text = format_decomposition(parts)
    _emit(args, {"expr": args.expr, "dim": ch.dim, "summands": parts, "text": text}, text)
    return OK


def cmd_discriminant(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as exc:
        raise UsageError(str(exc)) from None
    if len(lines) != 3:
        raise UsageError(f"expected three quadrics, found {len(lines)} lines")
    ring = RingSpec.of(["y0", "y1", "y2"])
    try:
        quadrics = [ring.parse(ln) for ln in lines]
        cubic = catalog.discriminant_cubic(quadrics)
    except (PolynomialError, catalog.CatalogError) as exc:
        raise UsageError(str(exc)) from None
    info = catalog.analyze_discriminant(cubic)
    text = f"discriminant: {info['cubic']}"
    if info["degenerate"]:
        text += "\n  the pencil is degenerate: every member is singular"
    for lf in info["line_factors"]:
        text += f"\n  line {lf['line']} divides it; residual conic {lf['residual']} has rank {lf['residual_rank']}"
    _emit(args, info, text)
    return OK


def cmd_cases(args) -> int:
    names = catalog.roster()
    _emit(args, {"cases": names}, "\n".join(names))
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from resetting a --json given before it
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine readable output")
    p = argparse.ArgumentParser(prog="fano", description="Automorphism groups of smooth Fano threefolds",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lookup", parents=[common], help="show one family")
    s.add_argument("id")
    s.set_defaults(func=cmd_lookup)

    s = sub.add_parser("list", parents=[common], help="list families by property")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--infinite", choices=["always", "sometimes"])
    g.add_argument("--nonreductive", action="store_true")
    g.add_argument("--h12", action="store_true")
    g.add_argument("--ke-obstructed", action="store_true")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("verify", parents=[common], help="recompute stabilizers of catalog cases")
    s.add_argument("case", nargs="?")
    s.add_argument("--param", action="append", metavar="KEY=VALUE")
    s.add_argument("--all", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--models", action="store_true", help="with --all, also check the database's model cases")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("decompose", parents=[common], help="decompose an SL2 representation")
    s.add_argument("expr")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("discriminant", parents=[common], help="discriminant cubic of three ternary quadrics")
    s.add_argument("file")
    s.set_defaults(func=cmd_discriminant)

    s = sub.add_parser("cases", parents=[common], help="list catalog cases")
    s.set_defaults(func=cmd_cases)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fano: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
