"""Command-line interface.

Exit codes: 0 success / verification passed, 1 verification failed,
2 usage or input format error, 3 solver size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classical, coloring, products, serialize
from .classical import SizeGuardError
from .opspace import DEFAULT_TOL
from .qgraph import verify_quantum_graph
from .report import VerificationReport

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_SIZE = 3


def _print_report(rep: VerificationReport) -> int:
    print(rep)
    return EXIT_OK if rep.passed else EXIT_VERIFY


def _cmd_verify_graph(args) -> int:
    g = serialize.load_any_graph(args.graph)
    print("graph: dim %d, dim S = %d, blocks %s"
          % (g.n, g.S.dim, list(g.M.blocks)))
    return _print_report(verify_quantum_graph(g, args.tol))


def _cmd_product(args) -> int:
    gq = serialize.load_any_graph(args.left)
    hq = serialize.load_any_graph(args.right)
    prod = products.product(gq, hq, args.kind)
    print("%s product: dim %d, dim S = %d" % (args.kind, prod.n, prod.S.dim))
    if args.kind == "lexicographic":
        print("note: " + products.LEXICOGRAPHIC_NOTE)
    if args.out:
        serialize.save(args.out, serialize.quantum_graph_to_obj(prod))
        print("wrote %s" % args.out)
    code = _print_report(verify_quantum_graph(prod, args.tol))
    if args.classical:
        g = serialize.load_classical_graph(args.left)
        h = serialize.load_classical_graph(args.right)
        rep = products.classical_crosscheck(g, h, args.kind, args.tol)
        code = max(code, _print_report(rep))
    return code


def _cmd_color_verify(args) -> int:
    g = serialize.load_any_graph(args.graph)
    cert = serialize.certificate_from_obj(serialize.load_json(args.certificate))
    print("certificate: %d colors, fold %d, ancilla dim %d, type %s"
          % (cert.colors, cert.fold, cert.ancilla_dim, cert.strategy_type))
    if args.bfold:
        rep = coloring.verify_bfold(g, cert, args.tol)
    else:
        rep = coloring.verify_coloring(g, cert, args.tol)
    return _print_report(rep)


def _write_cert(path, cert) -> None:
    serialize.save(path, serialize.certificate_to_obj(cert))
    print("wrote %s" % path)


def _cmd_transform(args) -> int:
    g = serialize.load_any_graph(args.graph) if getattr(args, "graph", None) else None
    if args.transform == "reduce":
        cert = serialize.certificate_from_obj(serialize.load_json(args.certificate))
        out, mapping = coloring.reduce_bfold(g, cert, args.tol)
        print("reduced to fold %d with %d colors; kept original colors %s"
              % (out.fold, out.colors, mapping))
        rep = coloring.verify_bfold(g, out, args.tol)
    elif args.transform == "combine":
        c1 = serialize.certificate_from_obj(serialize.load_json(args.certificate))
        c2 = serialize.certificate_from_obj(serialize.load_json(args.second))
        out, rep = coloring.combine_bfold(g, c1, c2, args.tol, strict=False)
        print("combined: fold %d, %d colors" % (out.fold, out.colors))
    elif args.transform == "scale":
        cert = serialize.certificate_from_obj(serialize.load_json(args.certificate))
        out, rep = coloring.scale_bfold(g, cert, args.fold, args.tol, strict=False)
        print("scaled: fold %d, %d colors" % (out.fold, out.colors))
    elif args.transform == "lex":
        cg = serialize.certificate_from_obj(serialize.load_json(args.certificate))
        ch = serialize.certificate_from_obj(serialize.load_json(args.second))
        out = coloring.lexicographic_coloring(cg, ch)
        gq = serialize.load_any_graph(args.graph_g)
        hq = serialize.load_any_graph(args.graph_h)
        print("note: " + products.LEXICOGRAPHIC_NOTE)
        rep = coloring.verify_coloring(products.lexicographic(gq, hq), out,
                                       args.tol)
    elif args.transform == "strong-lift":
        cg = serialize.certificate_from_obj(serialize.load_json(args.certificate))
        ch = serialize.certificate_from_obj(serialize.load_json(args.second))
        out = coloring.strong_coloring(cg, ch)
        gq = serialize.load_any_graph(args.graph_g)
        hq = serialize.load_any_graph(args.graph_h)
        rep = coloring.verify_coloring(products.strong(gq, hq), out, args.tol)
    elif args.transform == "cat-lift":
        cg = serialize.certificate_from_obj(serialize.load_json(args.certificate))
        gq = serialize.load_any_graph(args.graph_g)
        hq = serialize.load_any_graph(args.graph_h)
        out = coloring.categorical_lift(cg, hq.n)
        rep = coloring.verify_coloring(products.categorical(gq, hq), out,
                                       args.tol)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError("unknown transform %r" % args.transform)
    if args.out:
        _write_cert(args.out, out)
    return _print_report(rep)


def _cmd_classical(args) -> int:
    if args.what == "chi":
        g = serialize.load_classical_graph(args.graph)
        print("chromatic number: %d" % classical.chromatic_exact(g))
        return EXIT_OK
    if args.what == "chi-b":
        g = serialize.load_classical_graph(args.graph)
        value, witness = classical.bfold_exact(g, args.fold)
        print("%d-fold chromatic number: %d" % (args.fold, value))
        print("witness: %s" % " ".join(
            "{%s}" % ",".join(str(c) for c in sorted(s))
            for s in witness.assignment))
        return EXIT_OK
    if args.what == "product":
        g = serialize.load_classical_graph(args.left)
        h = serialize.load_classical_graph(args.right)
        p = classical.classical_product(g, h, args.kind)
        print("%s product: %d vertices, %d edges"
              % (args.kind, p.vertex_count, p.edge_count))
        if args.out:
            serialize.save(args.out, classical.graph_to_obj(p))
            print("wrote %s" % args.out)
        return EXIT_OK
    if args.what == "kneser":
        g = classical.kneser(args.c, args.b)
        print("Kneser graph K(%d, %d): %d vertices, %d edges"
              % (args.c, args.b, g.vertex_count, g.edge_count))
        if args.out:
            serialize.save(args.out, classical.graph_to_obj(g))
            print("wrote %s" % args.out)
        return EXIT_OK
    raise ValueError("unknown classical command %r" % args.what)


def bounds_report(g, h) -> dict:
    """Chromatic data for all four products of two classical graphs plus the
    product bound checks; all quantities exact integers."""
    chi_g = classical.chromatic_exact(g)
    chi_h = classical.chromatic_exact(h)
    b = chi_h
    chi_b_g, _ = classical.bfold_exact(g, b)
    prod_chi = {}
    for kind in classical.PRODUCT_KINDS:
        prod_chi[kind] = classical.chromatic_exact(
            classical.classical_product(g, h, kind))
    checks = [
        ("max(chi(G), chi(H)) <= chi(cartesian)",
         max(chi_g, chi_h) <= prod_chi["cartesian"],
         "%d <= %d" % (max(chi_g, chi_h), prod_chi["cartesian"])),
        ("chi(categorical) <= min(chi(G), chi(H))",
         prod_chi["categorical"] <= min(chi_g, chi_h),
         "%d <= %d" % (prod_chi["categorical"], min(chi_g, chi_h))),
        ("max(chi(G), chi(H)) <= chi(strong)",
         max(chi_g, chi_h) <= prod_chi["strong"],
         "%d <= %d" % (max(chi_g, chi_h), prod_chi["strong"])),
        ("chi(strong) <= chi(G) * chi(H)",
         prod_chi["strong"] <= chi_g * chi_h,
         "%d <= %d" % (prod_chi["strong"], chi_g * chi_h)),
        ("chi(lexicographic) <= chi_b(G) at b = chi(H)",
         prod_chi["lexicographic"] <= chi_b_g,
         "%d <= %d" % (prod_chi["lexicographic"], chi_b_g)),
        ("chi(lexicographic) == chi_b(G) at b = chi(H)",
         prod_chi["lexicographic"] == chi_b_g,
         "%d == %d" % (prod_chi["lexicographic"], chi_b_g)),
    ]
    return {
        "v": 1, "kind": "bounds_report",
        "chi_g": chi_g, "chi_h": chi_h, "b": b, "chi_b_g": chi_b_g,
        "products": prod_chi,
        "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in checks],
        "all_ok": all(ok for _, ok, _ in checks),
    }


def _cmd_report_bounds(args) -> int:
    g = serialize.load_classical_graph(args.left)
    h = serialize.load_classical_graph(args.right)
    rep = bounds_report(g, h)
    print("bounds report: G (%d vertices, %d edges), H (%d vertices, %d edges)"
          % (g.vertex_count, g.edge_count, h.vertex_count, h.edge_count))
    print("  chi(G) = %d" % rep["chi_g"])
    print("  chi(H) = %d" % rep["chi_h"])
    print("  chi_b(G) at b = chi(H) = %d: %d" % (rep["b"], rep["chi_b_g"]))
    print("  product chromatic numbers:")
    for kind in classical.PRODUCT_KINDS:
        print("    %-15s %d" % (kind, rep["products"][kind]))
    print("  checks:")
    for c in rep["checks"]:
        print("    %-48s %s (%s)" % (c["name"], "ok" if c["ok"] else "VIOLATED",
                                     c["detail"]))
    print("all checks passed" if rep["all_ok"] else "BOUND VIOLATION")
    if args.out:
        serialize.save(args.out, rep)
        print("wrote %s" % args.out)
    return EXIT_OK if rep["all_ok"] else EXIT_VERIFY


def _add_tol(p) -> None:
    p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                   help="residual tolerance (default %g)" % DEFAULT_TOL)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qgraph",
        description="Quantum graph products, coloring certificates, and "
                    "exact classical oracles.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-graph", help="check the quantum graph axioms")
    p.add_argument("graph", help="quantum graph JSON, or classical DIMACS/JSON")
    _add_tol(p)
    p.set_defaults(func=_cmd_verify_graph)

    p = sub.add_parser("product", help="build and verify a product")
    p.add_argument("--kind", required=True, choices=products.PRODUCT_KINDS)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--out", help="write the product as quantum graph JSON")
    p.add_argument("--classical", action="store_true",
                   help="also cross-check against the classical product "
                        "(classical inputs only)")
    _add_tol(p)
    p.set_defaults(func=_cmd_product)

    color = sub.add_parser("color", help="verify or transform coloring certificates")
    csub = color.add_subparsers(dest="color_command", required=True)

    p = csub.add_parser("verify", help="verify a certificate "
                        "(type loc for ancilla 1, q otherwise; commuting-"
                        "operator types are not certifiable from finite data)")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--bfold", action="store_true",
                   help="run the b-fold verifier instead of the fold-1 one")
    _add_tol(p)
    p.set_defaults(func=_cmd_color_verify)

    tr = csub.add_parser("transform", help="constructive certificate transformations")
    tsub = tr.add_subparsers(dest="transform", required=True)

    p = tsub.add_parser("reduce", help="fold b -> fold b-1, dropping colors")
    p.add_argument("certificate")
    p.add_argument("graph")
    p.add_argument("-o", "--out")
    _add_tol(p)
    p.set_defaults(func=_cmd_transform)

    p = tsub.add_parser("combine", help="join two certificates on one graph")
    p.add_argument("certificate")
    p.add_argument("second")
    p.add_argument("graph")
    p.add_argument("-o", "--out")
    _add_tol(p)
    p.set_defaults(func=_cmd_transform)

    p = tsub.add_parser("scale", help="b disjoint copies of a 1-fold coloring")
    p.add_argument("certificate")
    p.add_argument("graph")
    p.add_argument("-b", "--fold", type=int, required=True)
    p.add_argument("-o", "--out")
    _add_tol(p)
    p.set_defaults(func=_cmd_transform)

    p = tsub.add_parser("lex", help="compose b-fold of G with b-coloring of H")
    p.add_argument("certificate", help="b-fold certificate for G")
    p.add_argument("second", help="1-fold b-color certificate for H")
    p.add_argument("--graph-g", required=True, dest="graph_g")
    p.add_argument("--graph-h", required=True, dest="graph_h")
    p.add_argument("-o", "--out")
    _add_tol(p)
    p.set_defaults(func=_cmd_transform)

    p = tsub.add_parser("strong-lift", help="pair colorings across a strong product")
    p.add_argument("certificate")
    p.add_argument("second")
    p.add_argument("--graph-g", required=True, dest="graph_g")
    p.add_argument("--graph-h", required=True, dest="graph_h")
    p.add_argument("-o", "--out")
    _add_tol(p)
    p.set_defaults(func=_cmd_transform)

    p = tsub.add_parser("cat-lift", help="pull a coloring back along a "
                        "categorical factor")
    p.add_argument("certificate")
    p.add_argument("--graph-g", required=True, dest="graph_g")
    p.add_argument("--graph-h", required=True, dest="graph_h")
    p.add_argument("-o", "--out")
    _add_tol(p)
    p.set_defaults(func=_cmd_transform)

    cl = sub.add_parser("classical", help="exact classical oracles")
    clsub = cl.add_subparsers(dest="what", required=True)

    p = clsub.add_parser("chi", help="exact chromatic number")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_classical)

    p = clsub.add_parser("chi-b", help="exact b-fold chromatic number with witness")
    p.add_argument("graph")
    p.add_argument("-b", "--fold", type=int, required=True)
    p.set_defaults(func=_cmd_classical)

    p = clsub.add_parser("product", help="classical graph product")
    p.add_argument("--kind", required=True, choices=classical.PRODUCT_KINDS)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--out")
    p.set_defaults(func=_cmd_classical)

    p = clsub.add_parser("kneser", help="Kneser graph K(c, b)")
    p.add_argument("c", type=int)
    p.add_argument("b", type=int)
    p.add_argument("-o", "--out")
    p.set_defaults(func=_cmd_classical)

    rp = sub.add_parser("report", help="summary reports")
    rsub = rp.add_subparsers(dest="report_command", required=True)

    p = rsub.add_parser("bounds", help="chromatic numbers of all four products "
                        "and the product bound checks")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--out", help="also write the report as JSON")
    p.set_defaults(func=_cmd_report_bounds)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print("size guard: %s" % exc, file=sys.stderr)
        return EXIT_SIZE
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
