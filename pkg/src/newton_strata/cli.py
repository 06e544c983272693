"""Command-line front end.

Exit codes: 0 success, 1 domain rejection, 2 malformed input,
3 enumeration cap exceeded (partial result printed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import bg, levi, strata
from .errors import CandidateLimitExceeded, NewtonStrataError
from .polygon import Polygon, bruhat_leq, slopewise_leq
from .render import render_svg
from .serialize import (
    MalformedInput,
    decision_to_json,
    dumps,
    levi_blocks_to_json,
    levi_cochar_to_json,
    newton_class_to_json,
    parse_rational,
    partition_from_json,
    partition_to_json,
    polygon_from_json,
    polygon_to_json,
    rational_to_str,
    shape_from_json,
    shape_to_json,
)

MAX_CANDIDATES_ENV = "NEWTON_STRATA_MAX_CANDIDATES"
DEFAULT_MAX_CANDIDATES = 10**6


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stdout.write(dumps({"error": "MalformedInput", "message": message}))
        raise SystemExit(2)


def _max_candidates() -> int:
    raw = os.environ.get(MAX_CANDIDATES_ENV)
    if raw is None:
        return DEFAULT_MAX_CANDIDATES
    try:
        value = int(raw)
    except ValueError:
        raise MalformedInput(f"{MAX_CANDIDATES_ENV}={raw!r} is not an integer") from None
    if value < 0:
        raise MalformedInput(f"{MAX_CANDIDATES_ENV} must be non-negative")
    return value


def _load_doc(args) -> dict:
    if not getattr(args, "input", None):
        return {}
    try:
        if args.input == "-":
            doc = json.load(sys.stdin)
        else:
            with open(args.input, encoding="utf-8") as fh:
                doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"cannot read JSON input: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedInput("JSON input must be an object")
    return doc


def _pick(args, doc: dict, flag: str, key: Optional[str] = None, required: bool = True):
    value = getattr(args, flag, None)
    if value is None:
        value = doc.get(key or flag)
    if value is None and required:
        raise MalformedInput(f"missing --{flag.replace('_', '-')}")
    return value


def _group(args, doc: dict) -> bg.GroupTag:
    family = _pick(args, doc, "group", required=False) or bg.GSP
    n = _pick(args, doc, "n")
    if isinstance(n, str):
        try:
            n = int(n)
        except ValueError:
            raise MalformedInput(f"n must be an integer, got {n!r}") from None
    try:
        return bg.GroupTag(family, n)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def _poly(value) -> Polygon:
    # accepts "[1/2,1/2]" text, JSON lists, and embedded class objects
    if isinstance(value, dict):
        if "nu" not in value:
            raise MalformedInput("embedded class needs a 'nu' field")
        value = value["nu"]
    return polygon_from_json(value)


def _cls(group: bg.GroupTag, value) -> bg.NewtonClass:
    return bg.validate(group, _poly(value))


def _shape(args, doc: dict, n: int) -> strata.MinusculeShape:
    mu = getattr(args, "mu", None)
    if mu is None:
        mu = doc.get("mu")
    if mu is None:
        raise MalformedInput("missing --mu")
    if isinstance(mu, dict):
        shape = shape_from_json(mu)
    elif mu in ("ordinary", "central"):
        d = getattr(args, "d", None)
        if d is None:
            d = doc.get("d", 0)
        if isinstance(d, bool) or not isinstance(d, int):
            raise MalformedInput("d must be an integer")
        shape = strata.MinusculeShape(n, d, mu == "ordinary")
    else:
        shape = strata.minuscule_normalize(_poly(mu), n)
    if shape.n != n:
        raise MalformedInput(f"cocharacter is for n={shape.n}, expected n={n}")
    return shape


def cmd_validate(args, doc):
    group = _group(args, doc)
    b = _cls(group, _pick(args, doc, "nu"))
    payload = newton_class_to_json(b)
    payload["valid"] = True
    return payload


def cmd_kappa(args, doc):
    group = _group(args, doc)
    b = _cls(group, _pick(args, doc, "nu"))
    return {"kappa": rational_to_str(bg.kottwitz(b))}


def cmd_compare(args, doc):
    a = _poly(_pick(args, doc, "a"))
    b = _poly(_pick(args, doc, "b"))
    order = args.order or doc.get("order", "bruhat")
    if order == "bruhat":
        kw = {"sort_nondominant": bool(args.sort_nondominant)}
        leq, geq = bruhat_leq(a, b, **kw), bruhat_leq(b, a, **kw)
    elif order == "slopewise":
        leq, geq = slopewise_leq(a, b), slopewise_leq(b, a)
    else:
        raise MalformedInput(f"unknown order {order!r}")
    return {"order": order, "a_leq_b": leq, "b_leq_a": geq}


def _instance(args, doc):
    doc = doc.get("instance", doc)
    group = _group(args, doc)
    if group.family != bg.GSP:
        raise MalformedInput("decide works on GSp classes")
    b = _cls(group, _pick(args, doc, "b"))
    bt = _cls(group, _pick(args, doc, "bt"))
    return b, bt, _shape(args, doc, group.n)


def cmd_decide(args, doc):
    b, bt, mu = _instance(args, doc)
    payload = decision_to_json(strata.decide(b, bt, mu))
    payload["instance"] = {
        "group": bg.GSP,
        "n": b.n,
        "b": polygon_to_json(b.nu),
        "bt": polygon_to_json(bt.nu),
        "mu": shape_to_json(mu),
    }
    return payload


def cmd_enumerate(args, doc):
    group = _group(args, doc)
    if group.family != bg.GSP:
        raise MalformedInput("enumerate works on GSp classes")
    cap = _max_candidates()
    b_value = _pick(args, doc, "b", required=False)
    try:
        if b_value is not None:
            b = _cls(group, b_value)
            mu = _shape(args, doc, group.n)
            classes = strata.enumerate_nonempty(b, mu, max_candidates=cap)
            header = {"b": polygon_to_json(b.nu), "mu": shape_to_json(mu)}
        else:
            lower = _poly(_pick(args, doc, "lower"))
            upper = _poly(_pick(args, doc, "upper"))
            total = parse_rational(_pick(args, doc, "total"))
            classes = bg.enumerate_gsp(group.n, lower, upper, total, max_candidates=cap)
            header = {
                "lower": polygon_to_json(lower),
                "upper": polygon_to_json(upper),
                "total": rational_to_str(total),
            }
    except CandidateLimitExceeded as exc:
        return 3, {
            "warning": exc.code,
            "limit": cap,
            "partial": [newton_class_to_json(x) for x in exc.partial],
        }
    payload = {"group": bg.GSP, "n": group.n, "count": len(classes)}
    payload.update(header)
    payload["classes"] = [newton_class_to_json(x) for x in classes]
    return payload


def _alpha(args, doc, b: bg.NewtonClass) -> levi.OrderedPartition:
    raw = getattr(args, "alpha", None)
    if raw is None:
        raw = doc.get("alpha")
    if raw is None:
        return levi.centralizer_partition(b)
    if isinstance(raw, dict):
        return partition_from_json(raw)
    parts = [parse_rational(x) for x in (json.loads(raw) if isinstance(raw, str) else raw)]
    if any(p.denominator != 1 for p in parts):
        raise MalformedInput("partition parts must be integers")
    return partition_from_json({"n": b.n, "parts": [int(p) for p in parts]})


def cmd_reduce(args, doc):
    group = _group(args, doc)
    b = _cls(group, _pick(args, doc, "nu"))
    alpha = _alpha(args, doc, b)
    blocks = levi.split_blocks(b, alpha)
    return {
        "alpha": partition_to_json(alpha),
        "blocks": levi_blocks_to_json(blocks),
        "kottwitz": [rational_to_str(x) for x in levi.levi_kottwitz(b, alpha)],
    }


def cmd_mubar(args, doc):
    group = _group(args, doc)
    b = _cls(group, _pick(args, doc, "b"))
    bt = _cls(group, _pick(args, doc, "bt"))
    alpha = _alpha(args, doc, b)
    mb = levi.build_mu_bar(b, bt, alpha)
    return {
        "alpha": partition_to_json(alpha),
        "d_vector": list(mb.d_vector),
        "mu_bar": levi_cochar_to_json(mb.mu_bar),
        "dual": levi_cochar_to_json(levi.levi_dual(mb.mu_bar)),
        "degree": [rational_to_str(x) for x in levi.levi_degree(mb.mu_bar)],
    }


def cmd_render(args, doc):
    group = _group(args, doc)
    b = _cls(group, _pick(args, doc, "b"))
    bt_value = _pick(args, doc, "bt", required=False)
    bt = _cls(group, bt_value) if bt_value is not None else None
    mu = _shape(args, doc, group.n) if (args.mu or doc.get("mu")) is not None else None
    return render_svg(b, bt, mu)


COMMANDS = {
    "validate": cmd_validate,
    "kappa": cmd_kappa,
    "compare": cmd_compare,
    "decide": cmd_decide,
    "enumerate": cmd_enumerate,
    "reduce": cmd_reduce,
    "mubar": cmd_mubar,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="newton-strata", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", help="JSON document ('-' for stdin); flags take precedence")
        p.add_argument("--output", help="write the result here instead of stdout")
        return p

    def group_flags(p):
        p.add_argument("--group", choices=[bg.GL, bg.GSP])
        p.add_argument("--n", type=int)

    def shape_flags(p):
        p.add_argument("--mu", help="ordinary | central | explicit tuple")
        p.add_argument("--d", type=int)

    p = verb("validate", "validate a Newton polygon")
    group_flags(p)
    p.add_argument("--nu")
    p = verb("kappa", "Kottwitz point of a class")
    group_flags(p)
    p.add_argument("--nu")
    p = verb("compare", "compare two polygons")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--order", choices=["bruhat", "slopewise"])
    p.add_argument("--sort-nondominant", action="store_true")
    p = verb("decide", "decide nonemptiness of a Newton stratum")
    group_flags(p)
    p.add_argument("--b")
    p.add_argument("--bt")
    shape_flags(p)
    p = verb("enumerate", "list nonempty strata, or all classes in a band")
    group_flags(p)
    p.add_argument("--b")
    shape_flags(p)
    p.add_argument("--lower")
    p.add_argument("--upper")
    p.add_argument("--total")
    p = verb("reduce", "split a polygon along a Levi partition")
    group_flags(p)
    p.add_argument("--nu")
    p.add_argument("--alpha", help="parts as a list, default: centralizer partition")
    p = verb("mubar", "build the M_alpha cocharacter for a pair of classes")
    group_flags(p)
    p.add_argument("--b")
    p.add_argument("--bt")
    p.add_argument("--alpha")
    p = verb("render", "draw the polygons as SVG")
    group_flags(p)
    p.add_argument("--b")
    p.add_argument("--bt")
    shape_flags(p)
    return parser


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    code = 0
    try:
        doc = _load_doc(args)
        result = COMMANDS[args.verb](args, doc)
        if isinstance(result, tuple):
            code, result = result
    except MalformedInput as exc:
        sys.stdout.write(dumps(exc.to_json()))
        return 2
    except NewtonStrataError as exc:
        sys.stdout.write(dumps(exc.to_json()))
        return 1
    text = result if isinstance(result, str) else dumps(result)
    _emit(text, getattr(args, "output", None))
    return code


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
