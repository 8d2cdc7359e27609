"""Command line front end.

Exit codes: 0 on success (including verifications with zero failures),
1 when a verification or cross-check fails, 2 on usage errors such as
malformed partitions, indivisible sizes, or an unsupported shape family.
All output is deterministic for a fixed flag set.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .fock import FockVec
from .operators import _hperp_moves, apply_expr, parse_expr
from .partitions import (
    contains,
    core_and_quotient,
    format_partition,
    parse_partition,
    partitions_up_to,
)
from .positive import UnsupportedShapeError, monomials_in_window, yamanouchi_tableaux
from .qlr import QLRTable, qlr_table_via_operators, qlr_via_expansion, qlr_via_operators
from .qpoly import QPoly
from .tableaux import enumerate_tableaux, horizontal_strips, ribbon_function, strip_heads
from .verify import CHECKERS, algebra_dimension, run_identity

IDENTITIES = ("relations", "cauchy", "heisenberg", "haction", "hcommute")


def _partition(text):
    try:
        return parse_partition(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _composition(text):
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad composition {text!r}")
    if any(p < 0 for p in parts):
        raise argparse.ArgumentTypeError("composition entries must be >= 0")
    return parts


def _window(text):
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like lo:hi, got {text!r}")


def _poly_json(p):
    return p.to_pairs()


def _poly_latex(p):
    if not p:
        return "0"
    bits = []
    for e, c in sorted(p.coeffs.items(), reverse=True):
        if e == 0:
            bits.append(str(c))
        else:
            head = "" if c == 1 else ("-" if c == -1 else str(c))
            power = "q" if e == 1 else f"q^{{{e}}}"
            bits.append(f"{head}{power}")
    return " + ".join(bits)


def _emit(payload):
    print(json.dumps(payload, indent=2))


def _require_skew(outer, inner):
    if not contains(outer, inner):
        raise ValueError(
            f"inner {format_partition(inner)} is not contained in outer {format_partition(outer)}")
    return sum(outer) - sum(inner)


def _cmd_qlr(args):
    size = _require_skew(args.outer, args.inner)
    if size % args.n:
        raise ValueError(f"skew size {size} is not divisible by n={args.n}")
    if args.nu is not None:
        if args.n * sum(args.nu) != size:
            raise ValueError(
                f"need n*|nu| = {size}, got {args.n}*{sum(args.nu)}")
        ops = qlr_via_operators(args.nu, args.outer, args.inner, args.n)
        exp = qlr_via_expansion(args.outer, args.inner, args.n).coefficient(args.nu)
        if ops != exp:
            print(f"route mismatch for nu={format_partition(args.nu)}: "
                  f"operators {ops}, expansion {exp}", file=sys.stderr)
            return 1
        if args.format == "json":
            _emit({"n": args.n, "outer": list(args.outer), "inner": list(args.inner),
                   "nu": list(args.nu), "coeffs": _poly_json(ops), "routes_agree": True})
        elif args.format == "latex":
            print(_poly_latex(ops))
        else:
            print(ops)
        return 0
    table_ops = qlr_table_via_operators(args.outer, args.inner, args.n)
    table_exp = qlr_via_expansion(args.outer, args.inner, args.n)
    if table_ops.entries != table_exp.entries:
        print("route mismatch between operator and expansion tables", file=sys.stderr)
        return 1
    if args.format == "json":
        payload = table_ops.to_json()
        payload["routes_agree"] = True
        _emit(payload)
    elif args.format == "latex":
        print(table_ops.latex())
    else:
        print(table_ops.text())
    return 0


def _cmd_ribbonfn(args):
    size = _require_skew(args.outer, args.inner)
    if size % args.n:
        raise ValueError(f"skew size {size} is not divisible by n={args.n}")
    if args.basis == "schur":
        table = qlr_via_expansion(args.outer, args.inner, args.n)
        if args.format == "json":
            _emit(table.to_json())
        elif args.format == "latex":
            print(table.latex())
        else:
            print(table.text())
        return 0
    f = ribbon_function(args.outer, args.inner, args.n)
    if args.format == "latex":
        raise ValueError("latex output is only wired for the schur basis")
    if args.format == "json":
        _emit({"n": args.n, "outer": list(args.outer), "inner": list(args.inner),
               "basis": "monomial",
               "entries": [{"mu": list(mu), "coeffs": _poly_json(c)}
                           for mu, c in sorted(f.coeffs.items(),
                                               key=lambda t: (sum(t[0]), t[0]))]})
    else:
        bits = []
        for mu, c in sorted(f.coeffs.items(), key=lambda t: (sum(t[0]), t[0])):
            body = str(c)
            if " " in body:
                body = f"({body})"
            name = ",".join(map(str, mu))
            bits.append(f"m[{name}]" if body == "1" else f"{body} m[{name}]")
        print(" + ".join(bits) if bits else "0")
    return 0


def _cmd_tableaux(args):
    size = _require_skew(args.outer, args.inner)
    if args.n * sum(args.weight) != size:
        raise ValueError(
            f"weight {args.weight} fills {args.n}*{sum(args.weight)} cells, shape has {size}")
    found = enumerate_tableaux(args.outer, args.inner, args.n, args.weight)
    if args.format == "json":
        _emit([t.to_json() for t in found])
    else:
        print(f"{len(found)} tableaux of shape "
              f"{format_partition(args.outer)}/{format_partition(args.inner)} "
              f"weight {','.join(map(str, args.weight))} (n={args.n})")
        for t in found:
            print(f"spin {t.spin}")
            print(t.ascii_art())
    return 0


def _cmd_strips(args):
    if args.remove:
        hits = sorted(_hperp_moves(args.inner, args.n, args.weight))
    else:
        hits = horizontal_strips(args.inner, args.n, args.weight)
    if args.window is not None:
        lo, hi = args.window
        kept = []
        for la, spin in hits:
            if args.remove:
                heads = strip_heads(la, args.inner, args.n)
            else:
                heads = strip_heads(args.inner, la, args.n)
            if heads and (heads[0] < lo or heads[-1] > hi):
                continue
            kept.append((la, spin))
        hits = kept
    if args.format == "json":
        _emit({"n": args.n, "shape": list(args.inner), "count": args.weight,
               "direction": "remove" if args.remove else "add",
               "strips": [{"shape": list(la), "spin": s} for la, s in hits]})
    else:
        for la, spin in hits:
            print(f"{format_partition(la)}  spin {spin}")
    return 0


def _cmd_quotient(args):
    core, quot, offsets = core_and_quotient(args.shape, args.n)
    if args.format == "json":
        _emit({"n": args.n, "shape": list(args.shape), "core": list(core),
               "quotient": [list(p) for p in quot], "offsets": list(offsets)})
    else:
        print(f"core: {format_partition(core)}")
        for j, (p, s) in enumerate(zip(quot, offsets)):
            print(f"quotient[{j}]: {format_partition(p)}  offset {s}")
    return 0


def _cmd_apply(args):
    atoms = parse_expr(args.expr)
    vec = apply_expr(atoms, args.n, FockVec.basis(args.inner))
    if args.format == "json":
        _emit({"n": args.n, "expr": args.expr, "start": list(args.inner),
               "terms": [[la, coeffs] for la, coeffs in vec.to_pairs()]})
    else:
        print(vec)
    return 0


def _cmd_monomials(args):
    words = monomials_in_window(args.nu, args.n, args.window)
    if args.format == "json":
        _emit({"n": args.n, "nu": list(args.nu), "window": list(args.window),
               "words": [list(w) for w in words]})
    else:
        for w in words:
            print(" ".join(f"u[{i}]" for i in w))
    return 0


def _cmd_yamanouchi(args):
    _require_skew(args.outer, args.inner)
    found = yamanouchi_tableaux(args.nu, args.outer, args.inner, args.n)
    total = QPoly.zero()
    for t in found:
        total = total + QPoly.q_power(t.spin)
    ops = qlr_via_operators(args.nu, args.outer, args.inner, args.n)
    agree = total == ops
    if args.format == "json":
        _emit({"n": args.n, "nu": list(args.nu), "outer": list(args.outer),
               "inner": list(args.inner), "tableaux": [t.to_json() for t in found],
               "coeffs": _poly_json(total), "matches_operator_route": agree})
    else:
        for t in found:
            print(f"spin {t.spin}")
            print(t.ascii_art())
        print(f"c^nu = {total}")
        if not agree:
            print(f"operator route disagrees: {ops}", file=sys.stderr)
    return 0 if agree else 1


def _verify_chunk(task):
    name, n, max_size, shapes = task
    return run_identity(name, n, max_size, shapes)


def _run_checker(name, n, max_size, jobs):
    if jobs <= 1:
        return run_identity(name, n, max_size)
    shapes = list(partitions_up_to(max_size))
    chunks = [shapes[i::jobs] for i in range(jobs) if shapes[i::jobs]]
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        parts = list(pool.map(_verify_chunk, [(name, n, max_size, c) for c in chunks]))
    merged = parts[0]
    for p in parts[1:]:
        merged.cases += p.cases
        merged.failures.extend(p.failures)
        merged.elapsed = max(merged.elapsed, p.elapsed)
    merged.params["jobs"] = jobs
    return merged


def _cmd_verify(args):
    if args.identity == "dimension":
        return _dimension(args)
    names = IDENTITIES if args.identity == "all" else (args.identity,)
    reports = [_run_checker(name, args.n, args.max_size, args.jobs) for name in names]
    if args.format == "text":
        for rep in reports:
            print(rep.summary())
    else:
        _emit([r.to_json() for r in reports] if len(reports) > 1 else reports[0].to_json())
    return 0 if all(r.ok for r in reports) else 1


def _dimension(args):
    rep = algebra_dimension(args.n, args.k, max_size=args.max_size,
                            residues=args.blocks, seed=args.seed)
    if args.format == "text":
        print(rep.summary())
    else:
        _emit(rep.to_json())
    return 0 if rep.stable else 1


def _add_common(p, *, outer=False, inner=False, nu=False):
    p.add_argument("--n", type=int, required=True, help="ribbon size")
    if outer:
        p.add_argument("--outer", type=_partition, required=True)
    if inner:
        p.add_argument("--inner", type=_partition, default=())
    if nu:
        p.add_argument("--nu", type=_partition, required=True)


def build_parser():
    top = argparse.ArgumentParser(
        prog="ribbonops",
        description="Exact ribbon Schur operator computations on partitions.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qlr", help="q-Littlewood-Richardson coefficients, both routes")
    _add_common(p, outer=True, inner=True)
    p.add_argument("--nu", type=_partition, default=None)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=_cmd_qlr)

    p = sub.add_parser("ribbonfn", help="ribbon tableaux spin generating function")
    _add_common(p, outer=True, inner=True)
    p.add_argument("--basis", choices=("schur", "monomial"), default="schur")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=_cmd_ribbonfn)

    p = sub.add_parser("tableaux", help="enumerate ribbon tableaux of one weight")
    _add_common(p, outer=True, inner=True)
    p.add_argument("--weight", type=_composition, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_tableaux)

    p = sub.add_parser("strips", help="horizontal ribbon strips on a shape")
    _add_common(p, inner=True)
    p.add_argument("--weight", type=int, required=True, help="ribbons in the strip")
    p.add_argument("--remove", action="store_true")
    p.add_argument("--window", type=_window, default=None,
                   help="keep strips with all heads inside lo:hi")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_strips)

    p = sub.add_parser("quotient", help="n-core and n-quotient with offsets")
    p.add_argument("shape", type=_partition)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("apply", help="apply an operator expression to a partition")
    p.add_argument("expr", help='e.g. "u[2] u[1] u[3] u[0]" or "h[2] hperp[1] s[2,1]"')
    _add_common(p, inner=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("monomials", help="positive-formula words over a window")
    _add_common(p, nu=True)
    p.add_argument("--window", type=_window, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_monomials)

    p = sub.add_parser("yamanouchi", help="tableaux carved from the positive formula")
    _add_common(p, outer=True, inner=True, nu=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_yamanouchi)

    p = sub.add_parser("verify", help="identity verification and dimension experiment")
    p.add_argument("--identity", required=True,
                   choices=IDENTITIES + ("dimension", "all"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--k", type=int, default=2, help="generator count for dimension")
    p.add_argument("--blocks", type=_composition, default=None,
                   help="size residues mod n kept in the dimension basis")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dim", help="shorthand for verify --identity dimension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--blocks", type=_composition, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(func=_dimension)

    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "verify" and args.identity in IDENTITIES + ("all",):
        if args.max_size is None:
            args.max_size = 8
    try:
        return args.func(args)
    except (ValueError, UnsupportedShapeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
