"""Command-line harness: ``verify``, ``oracle``, ``dump-galleries``, ``render``.

``--lambda`` takes the labels ``<lambda, alpha_i^vee>`` as a comma list of
nonnegative integers.  Every command prints a JSON report; ``--json PATH``
also writes it to a file.  The exit status is 0 iff every requested check
passes.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import List, Optional

from .affine_coxeter import gallery_distance, minimal_gallery, minimal_gallery_types
from .characters import freudenthal, orbit_weighted_dimension, support_check, weyl_dim
from .convexity import a_type_set, dconv_hull, wconv_membership
from .galleries import (
    GalleryType,
    apply_fold_script,
    endpoints,
    enumerate_positively_folded,
    format_gallery,
    gallery_type,
    is_minimal,
    unfold,
)
from .render import RenderError, render_svg
from .root_system import RootSystem, RootSystemError, RootSystemKind, construct

DEFAULT_KINDS = ("A1", "A2", "B2", "G2", "A3")
DEFAULT_HEIGHT = {"G2": 3, "A3": 2}


class UsageError(ValueError):
    pass


def _num(a):
    a = Fraction(a)
    return int(a) if a.denominator == 1 else str(a)


def _vec(v):
    return [_num(a) for a in v]


@dataclass
class VerificationReport:
    kind: str
    lam: List
    type_length: int
    endpoint_set_size: int
    a_type_set_size: int
    verdict: str
    mismatch_witnesses: List
    wall_clock: float
    types_checked: int = 1
    unfold_checked: Optional[int] = None
    counterexample: Optional[dict] = None

    def to_json(self):
        d = asdict(self)
        out = {"kind": d.pop("kind"), "lambda": d.pop("lam")}
        out.update(d)
        return out


def parse_labels(text: str):
    """Labels ``a,b,..``; with the suffix ``-in-alpha`` the numbers are root coefficients."""
    if text.endswith("-in-alpha"):
        try:
            return ("alpha", tuple(int(x) for x in text[: -len("-in-alpha")].split(",")))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad lambda {text!r}") from None
    try:
        labels = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad lambda {text!r}") from None
    if any(a < 0 for a in labels):
        raise argparse.ArgumentTypeError("lambda labels must be nonnegative")
    return labels


def parse_point(rs: RootSystem, text: str) -> tuple:
    """``a,b`` as labels, or ``a,b-in-alpha`` as simple-root coefficients."""
    if text.endswith("-in-alpha"):
        return tuple(Fraction(x) for x in text[: -len("-in-alpha")].split(","))
    return rs.from_dynkin_labels([int(x) for x in text.split(",")])


def _lambda_of(rs: RootSystem, labels) -> tuple:
    if labels and labels[0] == "alpha":
        lam = labels[1]
        if len(lam) != rs.rank or not rs.is_dominant(lam):
            raise UsageError(f"--lambda {lam} is not a dominant vector of {rs.kind}")
        return lam
    if len(labels) != rs.rank:
        raise UsageError(f"--lambda needs {rs.rank} labels for {rs.kind}")
    lam = rs.from_dynkin_labels(labels)
    if any(Fraction(a).denominator != 1 for a in lam):
        hint = ",".join(str(2 * a) for a in labels)
        raise UsageError(f"labels {','.join(map(str, labels))} give {_vec(lam)}, which is not in the root lattice "
                         f"of {rs.kind}; try e.g. {hint} or coefficients with -in-alpha")
    return lam


def grid(rs: RootSystem, height: int):
    """Dominant root-lattice vectors with label sum at most ``height``."""
    for labels in itertools.product(range(height + 1), repeat=rs.rank):
        if sum(labels) <= height:
            lam = rs.from_dynkin_labels(labels)
            if all(Fraction(a).denominator == 1 for a in lam):
                yield labels, lam


def verify_cell(rs, lam, all_types=False, type_limit=4, check_unfold=False, counterexample=None, threads=1):
    start = time.perf_counter()
    t = gallery_type(minimal_gallery(rs, lam))
    gals = enumerate_positively_folded(rs, t, threads=threads)
    ends = endpoints(gals)
    A = a_type_set(rs, lam)
    witnesses = set(ends ^ A)
    ntypes = 1
    if all_types:
        types = minimal_gallery_types(rs, lam, type_limit)
        ntypes = len(types)
        for panel_types in types:
            other = endpoints(enumerate_positively_folded(rs, GalleryType(0, panel_types, 0), threads=threads))
            witnesses |= other ^ ends
    unfolded = None
    if check_unfold:
        unfolded = 0
        for g in gals:
            u, script = unfold(g)
            ok = (not u.stutters and gallery_type(u) == t and is_minimal(u)
                  and apply_fold_script(u, script) == g)
            if not ok:
                witnesses.add(g.target)
            unfolded += 1
    ce = None
    if counterexample is not None:
        y = tuple(counterexample)
        zero = tuple(0 for _ in lam)
        hull = dconv_hull(rs, lam)
        ce = {
            "y": _vec(y),
            "in_wconv": wconv_membership(rs, lam, y),
            "in_dconv": y in hull,
            "in_a_type_set": y in A,
            "delta_0_x": gallery_distance(rs, zero, lam),
            "delta_0_y": gallery_distance(rs, zero, y),
        }
        ce["holds"] = (ce["in_wconv"] and not ce["in_dconv"] and not ce["in_a_type_set"]
                       and ce["delta_0_y"] > ce["delta_0_x"])
    return VerificationReport(
        kind=str(rs.kind),
        lam=_vec(lam),
        type_length=len(t),
        endpoint_set_size=len(ends),
        a_type_set_size=len(A),
        verdict="match" if not witnesses else "mismatch",
        mismatch_witnesses=[_vec(v) for v in sorted(witnesses)],
        wall_clock=round(time.perf_counter() - start, 4),
        types_checked=ntypes,
        unfold_checked=unfolded,
        counterexample=ce,
    )


def _kinds(args):
    if args.kind:
        return [RootSystemKind.parse(k) for k in args.kind.split(",")]
    return [RootSystemKind.parse(k) for k in DEFAULT_KINDS]


def _emit(args, payload, ok):
    text = json.dumps(payload, indent=2)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    reports = []
    ok = True
    for kind in _kinds(args):
        rs = construct(kind)
        if args.lam is not None:
            cells = [(args.lam, _lambda_of(rs, args.lam))]
        else:
            height = args.max_height if args.max_height is not None else DEFAULT_HEIGHT.get(str(kind), 4)
            cells = list(grid(rs, height))
        for _, lam in cells:
            ce = parse_point(rs, args.check_counterexample) if args.check_counterexample else None
            r = verify_cell(rs, lam, args.all_minimal_types, args.type_limit, args.check_unfold, ce, args.threads)
            ok &= r.verdict == "match" and (r.counterexample is None or r.counterexample["holds"])
            reports.append(r.to_json())
    return _emit(args, reports, ok)


def cmd_oracle(args) -> int:
    reports = []
    ok = True
    for kind in _kinds(args):
        rs = construct(kind)
        if args.lam is not None:
            cells = [_lambda_of(rs, args.lam)]
        else:
            height = args.max_height if args.max_height is not None else DEFAULT_HEIGHT.get(str(kind), 4)
            cells = [lam for _, lam in grid(rs, height)]
        for lam in cells:
            table = freudenthal(rs, lam)
            dim = weyl_dim(rs, lam)
            total = orbit_weighted_dimension(rs, table)
            support = support_check(rs, lam)
            passed = support and total == dim
            ok &= passed
            reports.append({
                "kind": str(rs.kind),
                "lambda": _vec(lam),
                "dimension": dim,
                "orbit_weighted_sum": total,
                "support_ok": support,
                "multiplicities": [[_vec(nu), m] for nu, m in table.entries.items()],
                "verdict": "pass" if passed else "fail",
            })
    return _emit(args, reports, ok)


def _single(args):
    kinds = _kinds(args)
    if len(kinds) != 1 or args.lam is None:
        raise UsageError("this command needs exactly one --kind and a --lambda")
    rs = construct(kinds[0])
    return rs, _lambda_of(rs, args.lam)


def cmd_dump(args) -> int:
    rs, lam = _single(args)
    t = gallery_type(minimal_gallery(rs, lam))
    lines = [format_gallery(g) for g in enumerate_positively_folded(rs, t, threads=args.threads)]
    with open(args.output, "w") as fh:
        fh.write("".join(line + "\n" for line in lines))
    return _emit(args, {"kind": str(rs.kind), "lambda": _vec(lam), "galleries": len(lines),
                        "panel_types": list(t.panel_types), "output": args.output}, True)


def cmd_render(args) -> int:
    rs, lam = _single(args)
    t = gallery_type(minimal_gallery(rs, lam))
    gals = enumerate_positively_folded(rs, t)
    shown = gals[args.gallery] if args.gallery is not None else None
    marks = [parse_point(rs, args.mark)] if args.mark else []
    svg = render_svg(rs, lam, endpoints(gals), shown, marks)
    with open(args.output, "w") as fh:
        fh.write(svg)
    return _emit(args, {"kind": str(rs.kind), "lambda": _vec(lam), "output": args.output,
                        "endpoints": len(endpoints(gals))}, True)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alcovefold", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", help="root system kind(s), e.g. A2 or A1,A2")
    common.add_argument("--lambda", dest="lam", type=parse_labels, help="labels <lambda, alpha_i^vee>, e.g. 1,1; or 1,1-in-alpha")
    common.add_argument("--max-height", type=int, help="grid bound on the label sum when --lambda is omitted")
    common.add_argument("--json", help="also write the report here")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=0, help="reserved; the algorithms are exact")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="endpoints of folded galleries vs the dual hull")
    v.add_argument("--all-minimal-types", action="store_true")
    v.add_argument("--type-limit", type=int, default=4)
    v.add_argument("--check-unfold", action="store_true")
    v.add_argument("--check-counterexample", metavar="Y", help="labels, or coefficients with suffix -in-alpha")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", parents=[common], help="Freudenthal support and dimension checks")
    o.set_defaults(func=cmd_oracle)

    d = sub.add_parser("dump-galleries", parents=[common], help="write the folded galleries, one per line")
    d.add_argument("--output", "-o", required=True)
    d.set_defaults(func=cmd_dump)

    r = sub.add_parser("render", parents=[common], help="SVG picture of a rank-2 complex")
    r.add_argument("--output", "-o", required=True)
    r.add_argument("--gallery", type=int, help="index of a gallery to draw")
    r.add_argument("--mark", help="extra point, labels or coefficients with -in-alpha")
    r.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, UsageError, RootSystemError, RenderError) as exc:
        print(f"alcovefold: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
