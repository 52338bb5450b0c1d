"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys
from pathlib import Path

from . import family, ledger, montesinos, surgery, tangle
from .exactarith import cf_value
from .seifert import SeifertManifold
from .syntax import (
    ParseError,
    parse_cf,
    parse_finite_fraction,
    parse_fraction,
    parse_montesinos,
    parse_seifert,
    parse_slots,
)


def _arg(parser):
    """Turn a syntax parser into an argparse ``type`` so bad input exits 2."""

    def convert(text):
        try:
            return parser(text)
        except (ParseError, ValueError) as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    convert.__name__ = parser.__name__.replace("parse_", "")
    return convert


def _montesinos(text):
    fractions, twist = parse_montesinos(text)
    return montesinos.MontesinosLink(tuple(fractions), twist)


def _seifert(text):
    b, fractions = parse_seifert(text)
    return SeifertManifold.from_fractions(b, fractions)


def _slots(text):
    fractions, marks = parse_slots(text)
    return tangle.SlottedPresentation.from_fractions(fractions, marks)


def _link(text):
    path = Path(text)
    raw = path.read_text() if not text.lstrip().startswith("{") and path.exists() else text
    return surgery.FramedLink.from_dict(json.loads(raw))


def _order(value):
    return value if isinstance(value, int) else str(value)


def _seifert_summary(s: SeifertManifold) -> dict:
    lens = s.as_lens()
    triple = s.small_seifert_type()
    return {
        "manifold": str(s),
        "normal_form": str(s.normalize()),
        "euler_number": str(s.euler_number()),
        "h1": _order(s.h1_order()),
        "exceptional_indices": list(s.exceptional_indices()),
        "type_triple": list(triple) if triple else None,
        "lens": str(lens) if lens else None,
    }


# Each handler returns (payload dict, text lines, exit code).

def cmd_tangle_fraction(a):
    t = tangle.tangle_from_fraction(a.value)
    if a.mirror:
        t = tangle.mirror(t)
    payload = {"fraction": str(t.fraction), "word": list(t.word)}
    return payload, [f"{t.fraction} {list(t.word)}"], 0


def cmd_tangle_value(a):
    value = cf_value(a.word)
    return {"word": list(a.word), "fraction": str(value)}, [str(value)], 0


def cmd_tangle_surgery(a):
    try:
        result = tangle.untangle_surgery(a.slots, a.slot, a.r)
    except tangle.SurgeryError as exc:
        raise UsageError(str(exc))
    payload = {
        "slots": str(result),
        "nontrivial_slots": tangle.nontrivial_slot_count(result),
    }
    return payload, [str(result)], 0


def cmd_tangle_count(a):
    count = tangle.nontrivial_slot_count(a.slots)
    return {"slots": str(a.slots), "nontrivial_slots": count}, [str(count)], 0


def cmd_montesinos_normalize(a):
    m = a.link.normalize()
    return {"input": str(a.link), "normal_form": str(m)}, [str(m)], 0


def cmd_montesinos_equiv(a):
    eq = montesinos.equivalent(a.first, a.second, oriented=not a.unoriented)
    payload = {
        "first": str(a.first.normalize()),
        "second": str(a.second.normalize()),
        "oriented": not a.unoriented,
        "equivalent": eq,
    }
    return payload, [str(eq).lower()], 0


def cmd_montesinos_dbc(a):
    s = a.link.double_branched_cover()
    payload = {"link": str(a.link), **_seifert_summary(s)}
    return payload, [str(s.normalize())], 0


def cmd_seifert_normalize(a):
    s = a.manifold.normalize()
    return {"input": str(a.manifold), "normal_form": str(s)}, [str(s)], 0


def cmd_seifert_h1(a):
    h1 = _order(a.manifold.h1_order())
    return {"input": str(a.manifold), "h1": h1}, [str(h1)], 0


def cmd_seifert_type(a):
    triple = a.manifold.small_seifert_type()
    text = "S2(%d,%d,%d)" % triple if triple else "none"
    return {"input": str(a.manifold), "type_triple": list(triple) if triple else None}, [text], 0


def cmd_seifert_lens(a):
    lens = a.manifold.as_lens()
    return {"input": str(a.manifold), "lens": str(lens) if lens else None}, [str(lens or "none")], 0


def cmd_seifert_mirror(a):
    s = a.manifold.mirror()
    return {"input": str(a.manifold), "mirror": str(s)}, [str(s)], 0


def cmd_seifert_info(a):
    payload = _seifert_summary(a.manifold)
    return payload, [f"{k}: {v}" for k, v in payload.items()], 0


def cmd_surgery_h1(a):
    h1 = _order(surgery.h1_from_link(surgery.delete_unfilled(a.link)))
    return {"link": a.link.to_dict(), "h1": h1}, [str(h1)], 0


def cmd_surgery_twist(a):
    out = surgery.rolfsen_twist(a.link, a.component, a.t)
    if a.delete:
        out = surgery.delete_unfilled(out)
    payload = {"link": out.to_dict()}
    return payload, [json.dumps(out.to_dict())], 0


def cmd_surgery_slope(a):
    r = surgery.twist_slope(a.r, a.m, a.w)
    return {"slope": str(r)}, [str(r)], 0


def cmd_family_verify(a):
    variant = family.PRIMED if a.primed else family.STANDARD
    report = family.verify(a.n, variant)
    lines = [
        f"n={report.n} variant={report.variant} link={report.montesinos}",
        f"manifold={report.manifold.normalize()} h1={report.h1} "
        f"type={report.type_triple} lens={report.lens}",
    ] + [f"  {c.status:4} {c.name} {c.detail}" for c in report.checks]
    return report.to_dict(), lines, 0 if report.ok else 1


def cmd_family_sweep(a):
    variant = family.PRIMED if a.primed else family.STANDARD
    reports = family.sweep(a.start, a.stop, variant)
    ok = all(r.ok for r in reports)
    lines = [
        f"{r.n:5d} {'ok' if r.ok else 'FAIL'} h1={r.h1} type={r.type_triple} lens={r.lens}"
        for r in reports
    ]
    payload = {"from": a.start, "to": a.stop, "variant": variant, "ok": ok,
               "reports": [r.to_dict() for r in reports]}
    return payload, lines, 0 if ok else 1


def _fact_line(f):
    return f"{f.set_name} {f.direction} {f.slope} [{f.status}] {f.citation}" + (
        f" (witness: {f.witness})" if f.witness else ""
    )


def cmd_ledger_query(a):
    facts = ledger.query(a.set, a.slope)
    payload = {
        "set": a.set,
        "slope": str(a.slope),
        "verdict": ledger.verdict(a.set, a.slope),
        "facts": [f.to_dict() for f in facts],
    }
    return payload, [_fact_line(f) for f in facts] or ["no known facts"], 0


def cmd_ledger_containments(a):
    facts = ledger.containments()
    return {"facts": [f.to_dict() for f in facts]}, [_fact_line(f) for f in facts], 0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Treats negative fractions such as -2/3 as values, not options."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    parser = _Parser(
        prog="seifert-slopes",
        description="Tangles, Montesinos links, Seifert invariants and framed-link surgery.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    def group(name, help):
        sub = top.add_parser(name, help=help).add_subparsers(dest="action", required=True)
        return lambda action, func, help=None: _leaf(sub, action, func, help)

    def _leaf(sub, action, func, help):
        p = sub.add_parser(action, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    frac, finite = _arg(parse_fraction), _arg(parse_finite_fraction)

    add = group("tangle", "rational tangles")
    p = add("fraction", cmd_tangle_fraction, "tangle of a fraction")
    p.add_argument("value", type=frac)
    p.add_argument("--mirror", action="store_true")
    p = add("value", cmd_tangle_value, "evaluate a continued fraction word")
    p.add_argument("word", type=_arg(parse_cf))
    p = add("surgery", cmd_tangle_surgery, "untangle surgery on a slot list")
    p.add_argument("slots", type=_arg(_slots))
    p.add_argument("slot", type=int)
    p.add_argument("r", type=frac)
    p = add("count", cmd_tangle_count, "number of non-integral slots")
    p.add_argument("slots", type=_arg(_slots))

    add = group("montesinos", "Montesinos links")
    p = add("normalize", cmd_montesinos_normalize)
    p.add_argument("link", type=_arg(_montesinos))
    p = add("equiv", cmd_montesinos_equiv)
    p.add_argument("first", type=_arg(_montesinos))
    p.add_argument("second", type=_arg(_montesinos))
    p.add_argument("--unoriented", action="store_true", help="allow mirror image")
    p = add("dbc", cmd_montesinos_dbc, "double branched cover")
    p.add_argument("link", type=_arg(_montesinos))

    add = group("seifert", "Seifert fibered spaces over S^2")
    for action, func in [
        ("normalize", cmd_seifert_normalize), ("h1", cmd_seifert_h1),
        ("type", cmd_seifert_type), ("lens", cmd_seifert_lens),
        ("mirror", cmd_seifert_mirror), ("info", cmd_seifert_info),
    ]:
        add(action, func).add_argument("manifold", type=_arg(_seifert))

    add = group("surgery", "framed-link surgery")
    p = add("h1", cmd_surgery_h1, "first homology order of a JSON link")
    p.add_argument("link", type=_arg(_link), help="JSON text or path")
    p = add("twist", cmd_surgery_twist, "Rolfsen twist along an unknotted component")
    p.add_argument("link", type=_arg(_link), help="JSON text or path")
    p.add_argument("--component", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--delete", action="store_true", help="drop 1/0 components afterwards")
    p = add("slope", cmd_surgery_slope, "slope transport under twisting")
    p.add_argument("r", type=finite)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--w", type=int, default=1)

    add = group("family", "the knots K_n")
    p = add("verify", cmd_family_verify)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--primed", action="store_true")
    p = add("sweep", cmd_family_sweep)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--primed", action="store_true")

    add = group("ledger", "known slope-set results")
    p = add("query", cmd_ledger_query)
    p.add_argument("--set", required=True, choices=ledger.SETS)
    p.add_argument("--slope", required=True, type=frac)
    add("containments", cmd_ledger_containments)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, lines, code = args.func(args)
    except (UsageError, family.VariantError, KeyError, ValueError) as exc:
        print(f"{parser.prog}: error: {exc}", file=stderr)
        return 2
    if args.json:
        print(json.dumps(payload), file=stdout)
    else:
        for line in lines:
            print(line, file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
