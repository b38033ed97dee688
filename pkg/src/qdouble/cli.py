"""Command-line front end: ``qdouble <subcommand> ...``.

Exit codes: 0 success, 1 a requested check failed, 2 bad input.
Reports are JSON with sorted keys, so identical runs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cartan, rep, taft, verify
from .pairing import is_lower, is_upper, pair, psi_inverse, psi_transport, double_multiply
from .parse import ParseError, parse_element, parse_scalar
from .pbw import DQ, UQ, format_element
from .scalars import FieldMode, parse_mode, scalar_to_json, scalar_to_text


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _color(text: str, ok: bool) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _latex(text: str) -> str:
    out = text.replace("Kt", "\\widetilde{K}")
    out = out.replace("^-1", "^{-1}")
    import re
    return re.sub(r"\^(-?\d+)", r"^{\1}", out)


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(_dump(payload))
    elif args.format == "latex":
        print(_latex(text))
    else:
        print(text)


# -- subcommands ------------------------------------------------------------


def cmd_simplify(args, field: FieldMode) -> int:
    x = parse_element(args.expr, args.algebra, field)
    text = format_element(x)
    _emit(args, text, {"input": args.expr, "mode": field.describe(), "normal_form": text, "element": x.to_json()})
    return 0


def cmd_pair(args, field: FieldMode) -> int:
    x = parse_element(args.x, UQ, field)
    y = parse_element(args.y, UQ, field)
    if not is_upper(x):
        raise UsageError(f"{args.x!r} is not in the span of E^a K^b")
    if not is_lower(y):
        raise UsageError(f"{args.y!r} is not in the span of K^b F^a")
    val = pair(x, y)
    text = scalar_to_text(val)
    _emit(args, text, {"x": args.x, "y": args.y, "mode": field.describe(), "value": text,
                       "scalar": scalar_to_json(val)})
    return 0


def cmd_double_mul(args, field: FieldMode) -> int:
    x = parse_element(args.x, DQ, field)
    y = parse_element(args.y, DQ, field)
    prod = double_multiply(psi_transport(x), psi_transport(y))
    back = psi_inverse(prod)
    text = str(prod)
    _emit(args, text, {"x": args.x, "y": args.y, "mode": field.describe(), "double": prod.to_json(),
                       "double_text": text, "pulled_back": format_element(back)})
    return 0


def cmd_verify(args, field: FieldMode) -> int:
    if args.suite == "all":
        reports = verify.run_all()
    elif args.suite in verify.AFORM_TARGETS:
        reports = [verify.aform_targets(args.suite, args.max, args.part)]
    elif args.suite in verify.SUITES:
        reports = [verify.SUITES[args.suite]()]
    else:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(verify.AFORM_TARGETS + tuple(verify.SUITES))}")
    agg = verify.aggregate(reports)
    if args.format in (None, "json"):
        print(_dump(agg))
    else:
        for r in reports:
            print(_color(r.line(), r.passed))
    return 0 if agg["pass"] else 1


def _scalar_arg(text, field):
    return parse_scalar(str(text), field)


def build_module(kind: str, params: dict, field: FieldMode) -> rep.WeightModule:
    sign = params.get("sign", "+")
    s = _scalar_arg(params.get("s", "1"), field)
    if kind == "verma":
        return rep.verma(s, sign, _scalar_arg(params.get("lam", "1"), field), int(params.get("trunc", 4)), field)
    if kind == "simple":
        return rep.simple(s, int(params.get("n", 0)), sign, field)
    if kind == "onedim":
        return rep.one_dim(s, sign, field)
    if kind == "z0":
        d = params.get("d")
        return rep.z0_module(s, sign, _scalar_arg(params.get("lam", "2"), field), int(d) if d else None, field)
    raise UsageError(f"unknown module kind {kind!r}")


def _module_payload(M: rep.WeightModule) -> dict:
    out = M.to_json()
    rel = rep.check_relations(M)
    out["relations"] = rel["relations"]
    out["relations_pass"] = rel["pass"]
    out["exempt"] = rel["exempt"]
    return out


def cmd_module(args, field: FieldMode) -> int:
    params = {k: getattr(args, k) for k in ("s", "sign", "lam", "n", "trunc", "d") if getattr(args, k) is not None}
    M = build_module(args.kind, params, field)
    payload = _module_payload(M)
    print(_dump(payload))
    return 0 if payload["relations_pass"] else 1


def parse_module_spec(text: str) -> tuple[str, dict]:
    """``kind:key=value,key=value`` e.g. ``simple:s=3,n=2,sign=+``."""
    kind, _, rest = text.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        if not eq:
            raise UsageError(f"bad module parameter {item!r}")
        params[key.strip()] = value.strip()
    return kind.strip(), params


def cmd_tensor_decompose(args, field: FieldMode) -> int:
    mods = [build_module(*parse_module_spec(spec), field) for spec in (args.left, args.right)]
    T = rep.tensor(*mods)
    target = _scalar_arg(args.s_target, field) if args.s_target else None
    res = rep.decompose(T, target)
    labels = [{"n": n, "sign": "+" if sg > 0 else "-", "s": scalar_to_text(s)} for n, sg, s in res.labels()]
    print(_dump({"dim": T.dim, "residual": res.residual, "components": labels,
                 "dimension_check": res.dimension() == T.dim}))
    return 0 if not res.residual else 1


def cmd_taft(args, field: FieldMode) -> int:
    d = args.d
    f = field if field.is_root_of_unity else taft.taft_field(d)
    if args.action == "dim":
        T = taft.build_taft_double(d, f)
        rel = T.check_relations()
        print(_dump({"d": d, "mode": f.describe(), "dimension": T.dimension, "relations": rel["relations"]}))
        return 0 if rel["pass"] else 1
    if args.action == "gram":
        G = taft.gram_matrix(d, f)
        ok = taft.nondegenerate(G)
        print(_dump({"d": d, "mode": f.describe(), "index": [list(i) for i in G.index], "matrix": G.to_json(),
                     "determinant": str(taft.determinant(G)), "nondegenerate": ok,
                     "block_structure": taft.block_structure_ok(G), "vandermonde_form": taft.vandermonde_form_ok(G)}))
        return 0 if ok else 1
    lambdas = [_scalar_arg(x, f) for x in (args.lam or ["2"])]
    inv = taft.simple_inventory(d, f, lambdas=lambdas)
    rows = [{"label": e.label, "dim": e.module.dim, "relations": e.relations_ok, "ideal": e.ideal,
             "simple": e.simple} for e in inv]
    ok = all(e.relations_ok and e.ideal["E^d"] and e.ideal["F^d"] and e.simple is not False for e in inv)
    print(_dump({"d": d, "mode": f.describe(), "modules": rows}))
    return 0 if ok else 1


def _load_json(text: str):
    if os.path.exists(text):
        with open(text) as fh:
            return json.load(fh)
    return json.loads(text)


def cmd_cartan(args, field: FieldMode) -> int:
    cd = cartan.CartanData.from_json(_load_json(args.cartan))
    mats = cartan.matrices_from_json(_load_json(args.matrix_file), field)
    s = [_scalar_arg(x, field) for x in (args.s.split(",") if args.s else ["1"] * cd.n)]
    report = cartan.check_matrix_rep(cd, mats, s, field)
    print(_dump(report))
    return 0 if report["pass"] else 1


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qdouble", description="Quantum double of the Borel of U_q(sl_2): exact computations.")
    common = _Parser(add_help=False)
    common.add_argument("--mode", default="symbolic", help="symbolic | rational:<q> | cyclotomic:<m>:<e>")
    common.add_argument("--format", choices=["text", "json", "latex"], default=None,
                        help="text by default; verify defaults to json")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("simplify", parents=[common], help="normal form of an expression")
    s.add_argument("expr")
    s.add_argument("--algebra", choices=[DQ, UQ], default=DQ)
    s.set_defaults(func=cmd_simplify)

    s = sub.add_parser("pair", parents=[common], help="pairing of an upper and a lower Borel element")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_pair)

    s = sub.add_parser("double-mul", parents=[common], help="product in the double of two D_q elements")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_double_mul)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite")
    s.add_argument("--max", type=int)
    s.add_argument("--part", type=int, choices=[1, 2, 3, 4])
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("module", parents=[common], help="build a weight module")
    s.add_argument("--kind", choices=["verma", "simple", "onedim", "z0"], required=True)
    s.add_argument("--s")
    s.add_argument("--sign", choices=["+", "-"])
    s.add_argument("--lam")
    s.add_argument("--n", type=int)
    s.add_argument("--trunc", type=int)
    s.add_argument("--d", type=int)
    s.set_defaults(func=cmd_module)

    s = sub.add_parser("tensor-decompose", parents=[common], help="decompose a tensor product of two modules")
    s.add_argument("left", help="kind:key=value,... e.g. simple:s=3,n=2,sign=+")
    s.add_argument("right")
    s.add_argument("--s-target", dest="s_target")
    s.set_defaults(func=cmd_tensor_decompose)

    s = sub.add_parser("taft", parents=[common], help="root-of-unity quotient")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("action", choices=["gram", "inventory", "dim"])
    s.add_argument("--lam", action="append")
    s.set_defaults(func=cmd_taft)

    s = sub.add_parser("cartan", parents=[common], help="check a higher-rank matrix representation")
    s.add_argument("action", choices=["check"])
    s.add_argument("--matrix-file", dest="matrix_file", required=True)
    s.add_argument("--cartan", required=True)
    s.add_argument("--s")
    s.set_defaults(func=cmd_cartan)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required")
        field = parse_mode(args.mode)
        return args.func(args, field)
    except (UsageError, ParseError, ValueError, KeyError, ZeroDivisionError) as exc:
        print(_dump({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
