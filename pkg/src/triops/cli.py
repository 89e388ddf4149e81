"""Command line interface.

Subcommands:

    apply            apply one operator to a triangle triple
    classify         JSON classification record of one operator
    orbit            iterate an area-preserving operator over a triple
    division-points  n-torsion of the parameter group
    verify           run self-check suites

Exit codes: 0 success, 1 failed verification, 2 usage or parse error,
3 domain error (invalid parameters, poles, degenerate input).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .dynamics import make_ap, parse_angle
from .errors import ParseError, TriopsError
from .geometry import make_triple, triple_to_csv
from .operators import CirculantOperator, classification_report
from .svg import render_triples
from .torus import division_points
from .verify import SUITES, format_result, run_suite


class _UsageError(Exception):
    pass


def _scalar(text: str, original: str, position: int | None = None) -> float:
    try:
        return float(text)
    except ValueError:
        pass
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot parse number {original!r}", position=position) from None


def parse_complex(text: str) -> complex:
    """Parse '1/3', '-0.25', '0.7+0.8i', '2-i', 'i' and friends.

    Accepts at most one real and one imaginary term; each term may be a
    decimal or an exact fraction; 'i' and 'j' both mark the imaginary unit.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty number")
    terms = []
    start = 0
    for i in range(1, len(s)):
        if s[i] in "+-" and s[i - 1] not in "eE+-/":
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    if len(terms) > 2:
        raise ParseError(f"too many terms in {text!r}")
    re_part = 0.0
    im_part = 0.0
    seen_re = seen_im = False
    for pos, term in enumerate(terms):
        if term and term[-1] in "ij":
            if seen_im:
                raise ParseError(f"two imaginary terms in {text!r}", position=pos)
            body = term[:-1]
            if body in ("", "+"):
                im_part = 1.0
            elif body == "-":
                im_part = -1.0
            else:
                im_part = _scalar(body, text, pos)
            seen_im = True
        else:
            if seen_re:
                raise ParseError(f"two real terms in {text!r}", position=pos)
            re_part = _scalar(term, text, pos)
            seen_re = True
    return complex(re_part, im_part)


def parse_triangle(text: str):
    fields = [f.strip() for f in text.strip().split(",")]
    if len(fields) != 6:
        raise ParseError(f"triangle needs 6 comma-separated fields, got {len(fields)}")
    vals = [_scalar(f, f, i) for i, f in enumerate(fields)]
    return make_triple(
        complex(vals[0], vals[1]), complex(vals[2], vals[3]), complex(vals[4], vals[5])
    )


_DEFAULT_TRIANGLE = "0,0,1,0,0.7,0.8"


def _add_operator_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", help="first parameter (complex)")
    sub.add_argument("--q", help="second parameter (complex)")
    sub.add_argument("--eta", help="first eigenvalue (complex)")
    sub.add_argument("--etap", help="second eigenvalue (complex)")


def _operator_from_args(args) -> CirculantOperator:
    have_pq = args.p is not None or args.q is not None
    have_eta = args.eta is not None or args.etap is not None
    if have_pq and have_eta:
        raise _UsageError("give either --p/--q or --eta/--etap, not both")
    if have_pq:
        if args.p is None or args.q is None:
            raise _UsageError("--p and --q must be given together")
        return CirculantOperator.from_pq(parse_complex(args.p), parse_complex(args.q))
    if have_eta:
        if args.eta is None or args.etap is None:
            raise _UsageError("--eta and --etap must be given together")
        return CirculantOperator.from_eta(parse_complex(args.eta), parse_complex(args.etap))
    raise _UsageError("an operator needs --p/--q or --eta/--etap")


def _cmd_apply(args) -> int:
    op = _operator_from_args(args)
    triple = parse_triangle(args.triangle)
    image = op.apply(triple)
    if image.is_degenerate:
        print("note: image triple is degenerate", file=sys.stderr)
    print(triple_to_csv(image))
    return 0


def _cmd_classify(args) -> int:
    op = _operator_from_args(args)
    print(json.dumps(classification_report(op), indent=2, sort_keys=True))
    return 0


def _angles_from_args(args):
    given = {
        "theta-x": args.theta_x,
        "theta-y": args.theta_y,
        "theta-yp": args.theta_yp,
    }
    missing = [k for k, v in given.items() if v is None]
    if len(missing) > 1:
        raise _UsageError("give at least two of --theta-x, --theta-y, --theta-yp")
    tx = parse_angle(args.theta_x) if args.theta_x is not None else None
    ty = parse_angle(args.theta_y) if args.theta_y is not None else None
    typ = parse_angle(args.theta_yp) if args.theta_yp is not None else None
    if tx is None:
        tx = (ty - typ) % 1
    elif ty is None:
        ty = (tx + typ) % 1
    elif typ is None:
        typ = (ty - tx) % 1
    return make_ap(tx, ty, typ)


def _cmd_orbit(args) -> int:
    ap = _angles_from_args(args)
    triple = parse_triangle(args.triangle)
    steps = ap.period() if args.steps is None else args.steps
    orbit = ap.orbit(triple, steps)
    if args.svg is not None:
        payload = render_triples(orbit)
        if args.svg == "-":
            sys.stdout.buffer.write(payload)
        else:
            with open(args.svg, "wb") as fh:
                fh.write(payload)
        if args.csv is None:
            return 0
    lines = ["n,re_a,im_a,re_b,im_b,re_c,im_c"]
    lines.extend(f"{n},{triple_to_csv(t)}" for n, t in enumerate(orbit))
    text = "\n".join(lines) + "\n"
    if args.csv is None or args.csv == "-":
        sys.stdout.write(text)
    else:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def _cmd_division_points(args) -> int:
    for el in division_points(args.n):
        print("inf" if el.is_infinite else format(el.finite().real, ".17g"))
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite)
    for r in results:
        print(format_result(r))
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triops",
        description="Circulant triangle operators: apply, classify, iterate, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_apply = sub.add_parser("apply", help="apply an operator to a triangle")
    _add_operator_args(p_apply)
    p_apply.add_argument("--triangle", default=_DEFAULT_TRIANGLE,
                         help="re_a,im_a,re_b,im_b,re_c,im_c (default %(default)s)")
    p_apply.set_defaults(func=_cmd_apply)

    p_cls = sub.add_parser("classify", help="JSON classification of an operator")
    _add_operator_args(p_cls)
    p_cls.set_defaults(func=_cmd_classify)

    p_orbit = sub.add_parser("orbit", help="iterate an area-preserving operator")
    p_orbit.add_argument("--theta-x", help="moduli rotation angle, exact fraction of a turn")
    p_orbit.add_argument("--theta-y", help="first eigenvalue angle, exact fraction of a turn")
    p_orbit.add_argument("--theta-yp", help="second eigenvalue angle, exact fraction of a turn")
    p_orbit.add_argument("--steps", type=int, default=None,
                         help="number of applications (default: one full period)")
    p_orbit.add_argument("--triangle", default=_DEFAULT_TRIANGLE,
                         help="re_a,im_a,re_b,im_b,re_c,im_c (default %(default)s)")
    p_orbit.add_argument("--svg", metavar="PATH", help="render the orbit as SVG ('-' for stdout)")
    p_orbit.add_argument("--csv", metavar="PATH", help="write the orbit CSV here instead of stdout")
    p_orbit.set_defaults(func=_cmd_orbit)

    p_div = sub.add_parser("division-points", help="n-torsion points of the parameter group")
    p_div.add_argument("n", type=int)
    p_div.set_defaults(func=_cmd_division_points)

    p_verify = sub.add_parser("verify", help="run self-check suites")
    p_verify.add_argument("suite", nargs="?", default="all", choices=list(SUITES),
                          help="suite name (default: all)")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except TriopsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
