"""Command-line front end.

Exit codes: 0 on success, 2 for bad input or a violated precondition, 3 when
an internal cross-check fails.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import criteria, hilbcurve, mckay
from .catalog import UnknownGroupError, catalog_group
from .cyclotomic import Cyclotomic, CyclotomicError
from .epoly import euler_number
from .errors import ConsistencyError, PreconditionError
from .matgroup import DEFAULT_CAP, CycMatrix, GroupError, MatrixGroup, closure, cotangent_lift

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class GroupSpecError(PreconditionError):
    """Malformed group document; ``kind`` says which check failed."""

    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


def _parse_rational(x: Any, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise GroupSpecError("malformed", f"{where}: expected an integer or a 'p/q' string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise GroupSpecError("malformed", f"{where}: cannot parse {x!r} as a rational") from None


def _parse_entry(x: Any, order: int, where: str) -> Cyclotomic:
    if isinstance(x, list):
        if len(x) > order:
            raise GroupSpecError("dimension", f"{where}: {len(x)} coefficients for cyclotomic order {order}")
        coeffs = [_parse_rational(c, where) for c in x] + [Fraction(0)] * (order - len(x))
        return Cyclotomic.from_rationals(order, coeffs)
    return Cyclotomic.rational(_parse_rational(x, where), order)


def parse_group_spec(document: Any, cap: Optional[int] = None) -> MatrixGroup:
    """Build a group from a parsed JSON document (or a catalog name string).

    Document fields: ``cyclotomic_order`` M, ``size`` d, ``generators`` (a
    list of d x d arrays whose entries are lists of at most M rationals
    c_j meaning sum_j c_j zeta_M^j, or a bare rational), optional ``cap``.
    """
    if isinstance(document, str):
        name = document[len("catalog:"):] if document.startswith("catalog:") else document
        return catalog_group(name, cap or DEFAULT_CAP)
    if not isinstance(document, dict):
        raise GroupSpecError("malformed", "group document must be a JSON object")
    try:
        order = int(document["cyclotomic_order"])
        size = int(document["size"])
        gens = document["generators"]
    except KeyError as exc:
        raise GroupSpecError("malformed", f"missing field {exc.args[0]!r}") from None
    except (TypeError, ValueError):
        raise GroupSpecError("malformed", "cyclotomic_order and size must be integers") from None
    if order < 1 or size < 1:
        raise GroupSpecError("malformed", "cyclotomic_order and size must be positive")
    if not isinstance(gens, list):
        raise GroupSpecError("malformed", "generators must be a list")
    cap = cap or int(document.get("cap", DEFAULT_CAP))
    mats = []
    for gi, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != size or any(not isinstance(r, list) or len(r) != size for r in g):
            raise GroupSpecError("dimension", f"generator {gi} is not a {size}x{size} array")
        rows = [[_parse_entry(x, order, f"generator {gi} entry ({i},{j})") for j, x in enumerate(r)]
                for i, r in enumerate(g)]
        mats.append(CycMatrix(rows, order))
    try:
        return closure(mats, cap, size=size)
    except GroupError as exc:
        msg = str(exc)
        kind = "cap" if "cap" in msg else ("singular" if "invertible" in msg else "dimension")
        raise GroupSpecError(kind, msg) from None


def load_group(spec: str, cap: Optional[int] = None) -> MatrixGroup:
    """Resolve ``--group``: ``catalog:NAME``, a JSON file path, or ``-`` for stdin.

    An explicit ``cap`` overrides one given in the document.
    """
    if spec.startswith("catalog:"):
        return parse_group_spec(spec, cap)
    if spec == "-" or os.path.exists(spec):
        try:
            text = sys.stdin.read() if spec == "-" else open(spec, encoding="utf-8").read()
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GroupSpecError("malformed", f"invalid JSON in {spec}: {exc}") from None
        return parse_group_spec(doc, cap)
    return parse_group_spec(spec, cap)


def describe_element(g: CycMatrix) -> str:
    s = g.scalar_value()
    if s is not None:
        if s == 1:
            return "I"
        if s == -1:
            return "-I"
        return f"({s})*I"
    return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in g.rows) + "]"


def _group_summary(G: MatrixGroup, label: str) -> dict:
    return {"group": label, "size": G.size, "cyclotomic_order": G.order, "order": len(G)}


# -- commands ---------------------------------------------------------------

def cmd_group_info(args, G: MatrixGroup) -> tuple[dict, list[str]]:
    hist = Counter(G.element_order(i) for i in range(len(G)))
    result = {
        "order": len(G),
        "element_orders": {str(k): hist[k] for k in sorted(hist)},
        "class_count": len(G.conjugacy_classes),
        "projective_class_count": len(G.projective_classes),
        "scalar_subgroup_order": len(G.scalar_subgroup),
    }
    lines = [
        f"order: {len(G)}",
        "element orders: " + ", ".join(f"{k}:{hist[k]}" for k in sorted(hist)),
        f"conjugacy classes: {result['class_count']}",
        f"projective classes: {result['projective_class_count']}",
        f"scalar subgroup order: {result['scalar_subgroup_order']}",
    ]
    return {"result": result}, lines


def cmd_stringy(args, G: MatrixGroup) -> tuple[dict, list[str]]:
    if args.cotangent:
        G = cotangent_lift(G, args.cap or DEFAULT_CAP)
    strata = mckay.stringy_strata(G)
    e = mckay.orbifold_assemble(strata)
    chi = euler_number(e)
    classes = []
    for cl, s in zip(G.conjugacy_classes, strata):
        ed = G.eigen_data(cl[0])
        classes.append({"representative": cl[0], "size": len(cl), "weight": s.weight,
                        "fixed_dimension": ed.fixed_dimension})
    lines = [f"class {c['representative']}: size {c['size']}, weight {c['weight']}, "
             f"dim Fix {c['fixed_dimension']}" for c in classes]
    lines.append(f"E = {e}; Euler = {chi}")
    return {"result": {"polynomial": e.to_json(), "text": str(e)}, "euler": chi, "classes": classes}, lines


def cmd_tpn(args, G: MatrixGroup) -> tuple[dict, list[str]]:
    n = G.size - 1
    table = mckay.tpn_classes(G)
    e = mckay.hodge_tpn(G)
    chi = mckay.euler_tpn(G)
    if chi != euler_number(e):
        raise ConsistencyError(f"Euler number mismatch: (n+1)c = {chi}, E(-1,-1) = {euler_number(e)}")
    classes = [{"representative": c.representative, "size": c.size, "k": list(c.multiplicities)} for c in table]
    lines = [f"n = {n}"]
    lines += [f"class {c['representative']}: size {c['size']}, k = {c['k']}" for c in classes]
    lines.append(f"E = {e}; Euler = {chi}")
    return {"result": {"n": n, "polynomial": e.to_json(), "text": str(e)}, "euler": chi, "classes": classes}, lines


def cmd_sympres(args, G: MatrixGroup) -> tuple[dict, list[str]]:
    if args.cotangent:
        G = cotangent_lift(G, args.cap or DEFAULT_CAP)
    pure = criteria.passes_pure_codim2(G)
    gen = criteria.generated_by_symplectic_reflections(G)
    verdict: dict = {"pure_codim2": {"passed": pure.passed}, "generated_by_symplectic_reflections": {"passed": gen.passed, "detail": gen.detail}}
    if pure.passed:
        line1 = "pure codimension 2: PASS"
    else:
        w = G.elements[pure.witness]
        codim = G.size - G.eigen_data(pure.witness).fixed_dimension
        verdict["pure_codim2"].update(witness=describe_element(w), witness_index=pure.witness, fixed_codim=codim)
        line1 = f"pure codimension 2: FAIL: witness {describe_element(w)}, fixed codim {codim}"
    lines = [line1, f"generated by symplectic reflections: {'PASS' if gen.passed else 'FAIL'} ({gen.detail})"]
    return {"result": {"verdict": verdict}}, lines


def cmd_smooth(args, G: MatrixGroup) -> tuple[dict, list[str]]:
    v = criteria.generated_by_pseudo_reflections(G)
    lines = [f"generated by pseudo-reflections: {'PASS' if v.passed else 'FAIL'} ({v.detail})",
             f"C^{G.size}/G is {'smooth' if v.passed else 'singular'}"]
    return {"result": {"verdict": {"passed": v.passed, "detail": v.detail}}}, lines


def cmd_hilb(args) -> tuple[dict, list[str]]:
    g, order = args.genus, args.terms
    if g < 0 or order < 0:
        raise PreconditionError("genus and terms must be nonnegative")
    rows = []
    lines = []
    product = hilbcurve.goettsche_series(g, order) if args.method in ("product", "both") else None
    for n in range(order + 1):
        poly = product[n] if product is not None else hilbcurve.hilb_poincare_strata(n, g)
        rows.append({"n": n, "coeffs": list(poly.coeffs), "text": str(poly)})
        lines.append(f"q^{n}: {poly}")
    out: dict = {"result": {"series": rows}}
    if args.method == "both":
        check = hilbcurve.check_goettsche_vs_strata(g, order)
        out["result"]["verdict"] = {"passed": check.passed, "mismatch": check.mismatch}
        if not check.passed:
            raise ConsistencyError(f"product and strata disagree at q^{check.mismatch}: {check.product} vs {check.strata}")
        lines.append("product vs strata: PASS")
    return out, lines


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS, help="closure cap (default 10000)")

    grp = argparse.ArgumentParser(add_help=False)
    grp.add_argument("--group", required=True, help="JSON file, '-' for stdin, or catalog:NAME")

    parser = argparse.ArgumentParser(prog="orbihodge", parents=[common],
                                     description="McKay-correspondence invariants of finite group quotients.")
    top = parser.add_subparsers(dest="area", required=True)

    group = top.add_parser("group", help="group data").add_subparsers(dest="cmd", required=True)
    group.add_parser("info", parents=[common, grp]).set_defaults(func=cmd_group_info, name="group info")

    compute = top.add_parser("compute", help="E-functions and Poincare series").add_subparsers(dest="cmd", required=True)
    p = compute.add_parser("stringy", parents=[common, grp])
    p.add_argument("--cotangent", action="store_true", help="apply the cotangent lift first")
    p.set_defaults(func=cmd_stringy, name="compute stringy")
    compute.add_parser("tpn", parents=[common, grp]).set_defaults(func=cmd_tpn, name="compute tpn")
    p = compute.add_parser("hilb", parents=[common])
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--method", choices=("product", "strata", "both"), default="product")
    p.set_defaults(func=cmd_hilb, name="compute hilb", group=None)

    check = top.add_parser("check", help="necessary conditions").add_subparsers(dest="cmd", required=True)
    p = check.add_parser("sympres", parents=[common, grp])
    p.add_argument("--cotangent", action="store_true", help="apply the cotangent lift first")
    p.set_defaults(func=cmd_sympres, name="check sympres")
    check.add_parser("smooth-quotient", parents=[common, grp]).set_defaults(func=cmd_smooth, name="check smooth-quotient")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    args.cap = getattr(args, "cap", None)
    try:
        if args.group is None:
            payload, lines = args.func(args)
            summary = {"genus": args.genus, "terms": args.terms, "method": args.method}
        else:
            G = load_group(args.group, args.cap)
            summary = _group_summary(G, args.group)
            payload, lines = args.func(args, G)
    except (ConsistencyError, CyclotomicError) as exc:
        _emit_error(fmt, args.name, exc, EXIT_INTERNAL)
        return EXIT_INTERNAL
    except (PreconditionError, UnknownGroupError, ValueError) as exc:
        _emit_error(fmt, args.name, exc, EXIT_INPUT)
        return EXIT_INPUT
    if fmt == "json":
        doc = {"command": args.name, "input_summary": summary}
        doc.update(payload)
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_OK


def _emit_error(fmt: str, command: str, exc: Exception, code: int) -> None:
    msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
    if fmt == "json":
        print(json.dumps({"command": command, "error": msg, "exit_code": code}, indent=2))
    else:
        print(f"error: {msg}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
