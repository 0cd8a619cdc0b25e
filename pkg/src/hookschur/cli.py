"""Command-line front end.

Partitions are written as comma-separated parts, e.g. ``5,3,2,1,-1,-2``.
Negative parts can be given directly (``glchar -1,-2 --rank 2``) or after ``--``.
Exit codes: 0 success, 1 failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .glchar import gl_character, lr_coefficients, mixed_tensor_coefficients
from .partitions import format_parts, parse_generalized, parse_partition
from .polyring import X, Y
from .report import IDENTITIES, verify_all, verify_identity
from .superchar import (
    affine_character_mn,
    affine_character_nn,
    character,
    h_of,
    q_character,
    weight_of,
)
from .symfun import hook_schur_skew, hook_schur_tableau, schur
from .tensorprod import tensor_decompose, verify_tensor_against_branching

_NEGATIVE_PARTS = re.compile(r"^-\d+(,-?\d+)*$")


class _Parser(argparse.ArgumentParser):
    """Treats ``-1`` and ``-1,-2`` as values rather than options."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_PARTS


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _order(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed order {text!r}") from None
    if v < 0 or (2 * v).denominator != 1:
        raise argparse.ArgumentTypeError(f"order must be a nonnegative half-integer, got {text}")
    return v


def _alphabet(var, n):
    return [var(i) for i in range(1, n + 1)]


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _table(rows) -> str:
    return "\n".join(f"{k}: {v}" for k, v in rows) if rows else "(empty)"


# --- subcommands ---------------------------------------------------------------------


def cmd_schur(args) -> int:
    lam = parse_partition(args.partition)
    p = schur(lam, _alphabet(X, args.xsize))
    _emit(args, str(p), {"partition": list(lam.parts), "poly": p.to_json()})
    return 0


def cmd_hookschur(args) -> int:
    lam = parse_partition(args.partition)
    f = hook_schur_tableau if args.method == "tableau" else hook_schur_skew
    p = f(lam, _alphabet(X, args.xsize), _alphabet(Y, args.ysize))
    _emit(args, str(p), {"partition": list(lam.parts), "method": args.method, "poly": p.to_json()})
    return 0


def cmd_glchar(args) -> int:
    lam = parse_generalized(args.partition, args.rank)
    c = gl_character(lam)
    _emit(args, str(c.poly), {"partition": list(lam.parts), "rank": args.rank, "poly": c.poly.to_json()})
    return 0


def cmd_lrcoeff(args) -> int:
    mu, nu = parse_partition(args.mu), parse_partition(args.nu)
    coeffs = lr_coefficients(mu, nu)
    rows = [(str(k), v) for k, v in coeffs.items()]
    _emit(args, _table(rows), {"mu": list(mu.parts), "nu": list(nu.parts), "terms": [[list(k.parts), v] for k, v in coeffs.items()]})
    return 0


def cmd_mixedtensor(args) -> int:
    mu, nu = parse_partition(args.mu), parse_partition(args.nu)
    coeffs = mixed_tensor_coefficients(mu, nu, args.rank)
    rows = [(str(k), v) for k, v in coeffs.items()]
    _emit(args, _table(rows), {"rank": args.rank, "terms": [[list(k.parts), v] for k, v in coeffs.items()]})
    return 0


def cmd_weight(args) -> int:
    lam = parse_generalized(args.partition, args.rank)
    w = weight_of(lam)
    h = h_of(lam)
    text = f"Lambda{lam} = {w}\ncentral charge: {w.central_charge}\nh: {h}"
    _emit(args, text, {"partition": list(lam.parts), "weight": w.to_json(), "h": str(h)})
    return 0


def cmd_character(args) -> int:
    lam = parse_generalized(args.partition, args.rank)
    p = character(lam, args.zsize, args.ysize, args.trunc)
    _emit(args, str(p), {"partition": list(lam.parts), "trunc": args.trunc, "poly": p.to_json()})
    return 0


def cmd_qcharacter(args) -> int:
    lam = parse_generalized(args.partition, args.rank)
    s = q_character(lam, args.order)
    _emit(args, str(s), {"partition": list(lam.parts), "series": s.to_json()})
    return 0


def cmd_affine(args) -> int:
    if args.type == "nn":
        p = affine_character_nn(args.lam, args.n, args.order)
    else:
        p = affine_character_mn(args.lam, args.m, args.n, args.order)
    header = f"# q exponents are doubled: q^k stands for q^(k/2), known through q^({args.order})"
    _emit(args, f"{header}\n{p}", {"type": args.type, "lambda": args.lam, "order": str(args.order), "poly": p.to_json()})
    return 0


def cmd_tensor(args) -> int:
    mu = parse_generalized(args.mu, args.llevel)
    nu = parse_generalized(args.nu, args.rlevel)
    dec = tensor_decompose(mu, args.llevel, nu, args.rlevel, args.bound)
    payload = dec.to_json()
    lines = [f"# channels with |lambda| <= {args.bound} and d <= {args.bound} (higher terms omitted)"]
    lines += [f"{format_parts(ch.weight.parts)}: {ch.multiplicity}  (lambda={ch.lam}, d={ch.d})" for ch in dec.channels]
    code = 0
    if args.verify:
        ok, rep = verify_tensor_against_branching(mu, args.llevel, nu, args.rlevel, args.bound)
        payload["verification"] = rep
        lines.append(f"# branching oracle: {'pass' if ok else 'FAIL'} ({rep['checked']} weights checked)")
        code = 0 if ok else 1
    _emit(args, "\n".join(lines), payload)
    return code


def cmd_verify(args) -> int:
    rep = verify_identity(args.identity, args.order, args.size, lam=args.lam)
    _emit(args, rep.summary(), rep.to_dict())
    return 0 if rep.passed else 1


def cmd_verify_all(args) -> int:
    reports = verify_all(args.order, args.size)
    _emit(args, "\n".join(r.summary() for r in reports), [r.to_dict() for r in reports])
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hookschur", description="Hook Schur functions and super character formulas.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = add("schur", cmd_schur, "Schur polynomial s_lambda(x1..xn)")
    p.add_argument("partition")
    p.add_argument("--xsize", type=_nonneg, default=3, help="number of x variables (default 3)")

    p = add("hookschur", cmd_hookschur, "hook Schur polynomial HS_lambda(x;y)")
    p.add_argument("partition")
    p.add_argument("--xsize", type=_nonneg, default=2, help="number of x variables (default 2)")
    p.add_argument("--ysize", type=_nonneg, default=2, help="number of y variables (default 2)")
    p.add_argument("--method", choices=["skew", "tableau"], default="skew", help="definition used (default skew)")

    p = add("glchar", cmd_glchar, "character of the rational GL_l module V^lambda")
    p.add_argument("partition")
    p.add_argument("--rank", type=_positive, required=True)

    p = add("lrcoeff", cmd_lrcoeff, "Littlewood-Richardson coefficients of s_mu*s_nu")
    p.add_argument("mu")
    p.add_argument("nu")

    p = add("mixedtensor", cmd_mixedtensor, "decomposition of V^mu (x) (V^nu)* in rank l")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--rank", type=_positive, required=True)

    p = add("weight", cmd_weight, "highest weight Lambda(lambda), central charge and h(lambda)")
    p.add_argument("partition")
    p.add_argument("--rank", type=_positive, required=True)

    p = add("character", cmd_character, "character of L(Lambda(lambda)) in z, y alphabets")
    p.add_argument("partition")
    p.add_argument("--rank", type=_positive, required=True)
    p.add_argument("--zsize", type=_nonneg, default=2, help="z alphabet size (default 2)")
    p.add_argument("--ysize", type=_nonneg, default=2, help="y alphabet size (default 2)")
    p.add_argument("--trunc", type=_nonneg, default=3, help="total degree bound (default 3)")

    p = add("qcharacter", cmd_qcharacter, "q-character of L(Lambda(lambda))")
    p.add_argument("partition")
    p.add_argument("--rank", type=_positive, required=True)
    p.add_argument("--order", type=_order, default=Fraction(4), help="q-order, half-integers allowed (default 4)")

    p = add("affine-char", cmd_affine, "level-1 affine gl(m|n) character")
    p.add_argument("--type", choices=["nn", "mn"], default="mn")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--m", type=_positive, default=1, help="even rank m (default 1, ignored for nn)")
    p.add_argument("--n", type=_positive, default=1, help="odd rank n (default 1)")
    p.add_argument("--order", type=_order, default=Fraction(2), help="q-order (default 2)")

    p = add("tensor", cmd_tensor, "tensor product decomposition of two modules")
    p.add_argument("mu")
    p.add_argument("--llevel", type=_positive, required=True)
    p.add_argument("nu")
    p.add_argument("--rlevel", type=_positive, required=True)
    p.add_argument("--bound", type=_nonneg, default=4, help="bound on |lambda| and d (default 4)")
    p.add_argument("--verify", action="store_true", help="compare with the branching oracle")

    p = add("verify", cmd_verify, "check one identity")
    p.add_argument("identity", choices=sorted(IDENTITIES))
    p.add_argument("--order", type=_order, default=Fraction(4), help="q-order budget (default 4)")
    p.add_argument("--size", type=_nonneg, default=4, help="size/degree budget (default 4)")
    p.add_argument("--lambda", dest="lam", type=int, default=None, help="restrict to one lambda where applicable")

    p = add("verify-all", cmd_verify_all, "check every identity")
    p.add_argument("--order", type=_order, default=Fraction(3), help="q-order budget (default 3)")
    p.add_argument("--size", type=_nonneg, default=3, help="size/degree budget (default 3)")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"hookschur {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
