"""Command-line front end: `boolat field|lattice|group|ff`.

Exit status: 0 when the analysed lattice is Boolean, 1 when it is not,
2 on any error (with a one-line diagnostic on stderr).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import grouplat, numfield
from .errors import BoolatError, MinimalExtension, NotPrime, ParseError
from .latcore import (
    FiniteLattice,
    dual,
    find_isomorphism,
    is_boolean,
    lattice_from_json,
    lattice_from_leq,
    lattice_report,
    lattice_to_dict,
    lattice_to_dot,
)
from .polycore import parse_poly

SCHEMA = 1
EXIT_BOOLEAN, EXIT_NOT_BOOLEAN, EXIT_ERROR = 0, 1, 2


def _base(command: str, inp: dict, L: FiniteLattice) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "input": inp,
        "lattice": lattice_to_dict(L),
        "report": lattice_report(L).to_json(),
    }


# ---------------------------------------------------------------- field

def field_report(text: str, max_degree: int = numfield.DEFAULT_MAX_DEGREE):
    f = parse_poly(text)
    L = numfield.nf_create(f)
    lat = numfield.subfield_lattice(L, max_degree=max_degree)
    cert = numfield.is_boolean_field(lat)
    lin = numfield.PolyL.linear(L, L.gen)
    products = []
    for a, fa in enumerate(lat.factors):
        g = lin * fa
        Kg = numfield.subfield_from_coeffs(L, g)
        products.append({
            "factor": str(fa),
            "g": str(g),
            "K_g_dim": Kg.dim,
            "in_D": numfield.is_in_D(L, g),
            "principal_subfield": lat.factor_subfield[a],
        })
    try:
        coatoms = [lat.index(K) for K in numfield.coatoms_field(lat)]
    except MinimalExtension:
        coatoms = sorted(lat.lattice.coatoms())
    D, _ = numfield.compute_D(lat)
    out = _base("field", {"minpoly": str(f), "max_degree": max_degree}, lat.lattice)
    out.update({
        "degree": L.n,
        "factors_over_L": [str(lin)] + [str(fa) for fa in lat.factors],
        "factor_products": products,
        "t": lat.t,
        "principal_subfields": lat.principal_indices,
        "galois": lat.is_galois(),
        "subfields": [
            {
                "index": i,
                "dim": K.dim,
                "degree_over_K": L.n // K.dim,
                "f_K": str(K.fK),
                "basis": K.basis_strings(),
                "in_D": numfield.is_in_D(L, K.fK),
            }
            for i, K in enumerate(lat.subfields)
        ],
        "coatoms": coatoms,
        "D": [str(g) for g in D],
        "boolean": cert.boolean,
        "certificate": {
            "D_route": cert.D_route,
            "coatoms": cert.coatoms,
            "representations": {str(k): v for k, v in cert.representations.items()},
        },
    })
    return out, cert.boolean, lat.lattice


def _field_summary(r: dict) -> list[str]:
    lines = [
        f"field Q[X]/({r['input']['minpoly']}), degree {r['degree']}",
        "factors over L: " + " * ".join(f"({s})" for s in r["factors_over_L"]),
        f"principal subfields: t = {r['t']}",
        f"subfields: {len(r['subfields'])}",
    ]
    for s in r["subfields"]:
        lines.append(f"  [{s['index']}] dim={s['dim']}  f_K = {s['f_K']}")
    for p in r["factor_products"]:
        mark = "in D" if p["in_D"] else "not in D"
        lines.append(f"  g = {p['g']}: {mark}")
    lines.append(f"co-atoms: {r['coatoms']}")
    return lines


# ---------------------------------------------------------------- lattice

def lattice_file_report(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    L = lattice_from_json(text)
    out = _base("lattice", {"path": path}, L)
    rep = out["report"]
    out["boolean"] = rep["is_boolean"]
    return out, rep["is_boolean"], L


# ---------------------------------------------------------------- group

def _parse_product(spec: str) -> list[int]:
    try:
        parts = [int(p) for p in spec.split(",")]
    except ValueError as exc:
        raise ParseError(f"--product expects comma-separated integers, got {spec!r}") from exc
    if not parts or any(p < 1 for p in parts):
        raise ParseError("--product factors must be positive")
    return parts


def group_report(cyclic: int | None = None, product: str | None = None, cayley: str | None = None):
    if cyclic is not None:
        G = grouplat.cyclic(cyclic)
        inp = {"cyclic": cyclic}
    elif product is not None:
        parts = _parse_product(product)
        G = grouplat.cyclic(parts[0])
        for p in parts[1:]:
            G = grouplat.direct_product(G, grouplat.cyclic(p))
        inp = {"product": parts}
    else:
        try:
            text = Path(cayley).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {cayley}: {exc.strerror}") from exc
        G = grouplat.group_from_json(text)
        inp = {"cayley": cayley}
    sl = grouplat.subgroup_lattice(G)
    verdict = grouplat.is_boolean_galois(G)
    out = _base("group", inp, sl.lattice)
    out.update({
        "order": G.order,
        "cyclic": G.is_cyclic(),
        "abelian": G.is_abelian(),
        "subgroups": [sl.elements(i) for i in range(len(sl.subgroups))],
        "prime_order_subgroups": grouplat.coatoms_fixed_fields(G),
        "routes": {"lattice": verdict.lattice_route, "cyclic_squarefree": verdict.cyclic_squarefree_route},
        "boolean": verdict.boolean,
    })
    return out, verdict.boolean, sl.lattice


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def ff_label(p: int, d: int) -> str:
    return f"F_{p}" if d == 1 else f"F_{{{p}^{d}}}"


def ff_report(p: int, n: int):
    """Subfields of F_{p^n} over F_p: one per divisor of n."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ParseError("-n must be >= 1")
    D = grouplat.divisor_lattice(n)
    L = lattice_from_leq([ff_label(p, int(d)) for d in D.labels], D.strict_pairs())
    tau, ell, sqf = grouplat.cyclic_report(n)
    boolean = is_boolean(L)
    out = _base("ff", {"p": p, "n": n}, L)
    out.update({
        "tau": tau,
        "length": ell,
        "routes": {"lattice": boolean, "squarefree": sqf},
        "boolean": boolean,
    })
    if n <= grouplat.MAX_ORDER:
        sub = grouplat.subgroup_lattice(grouplat.cyclic(n)).lattice
        out["galois_group_dual_isomorphic"] = find_isomorphism(dual(sub), L) is not None
    return out, boolean, L


# ---------------------------------------------------------------- driver

def _summary(r: dict) -> list[str]:
    lines = _field_summary(r) if r["command"] == "field" else [f"{r['command']}: {json.dumps(r['input'], sort_keys=True)}"]
    rep = r["report"]
    lines.append(f"lattice: {rep['size']} elements, length {rep['length']}, "
                 f"{len(rep['atoms'])} atoms, {len(rep['coatoms'])} co-atoms")
    lines.append(f"distributive: {rep['is_distributive']}"
                 + (f" (witness {rep['distributive_witness']})" if rep["distributive_witness"] else ""))
    if "routes" in r:
        lines.append("routes: " + ", ".join(f"{k}={v}" for k, v in sorted(r["routes"].items())))
    lines.append("Boolean: " + ("yes" if r["boolean"] else "no"))
    return lines


def _add_output_flags(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", metavar="PATH", default=d(None), help="write the JSON report here ('-' for stdout)")
    p.add_argument("--dot", metavar="PATH", default=d(None), help="write the Hasse diagram in DOT format")
    p.add_argument("--max-degree", type=int, default=d(numfield.DEFAULT_MAX_DEGREE),
                   help="largest field degree accepted (default 16)")
    p.add_argument("--quiet", action="store_true", default=d(False), help="no summary on stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boolat", description="Decide whether lattices of subfields, "
                                     "subgroups or generic finite lattices are Boolean.")
    _add_output_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    pf = sub.add_parser("field", help="subfield lattice of Q[X]/(f)")
    pf.add_argument("minpoly", help='monic irreducible polynomial, e.g. "X^6 - 2"')
    pl = sub.add_parser("lattice", help="analyse a lattice given as JSON")
    pl.add_argument("path")
    pg = sub.add_parser("group", help="subgroup lattice of a finite group")
    g = pg.add_mutually_exclusive_group(required=True)
    g.add_argument("--cyclic", type=int, metavar="N")
    g.add_argument("--product", metavar="A,B,...")
    g.add_argument("--cayley", metavar="PATH")
    pff = sub.add_parser("ff", help="subfield lattice of F_{p^n} over F_p")
    pff.add_argument("-p", type=int, required=True)
    pff.add_argument("-n", type=int, required=True)
    for p in (pf, pl, pg, pff):
        _add_output_flags(p, suppress=True)
    return parser


def run(args: argparse.Namespace) -> tuple[dict, bool, FiniteLattice]:
    if args.command == "field":
        return field_report(args.minpoly, args.max_degree)
    if args.command == "lattice":
        return lattice_file_report(args.path)
    if args.command == "group":
        return group_report(args.cyclic, args.product, args.cayley)
    return ff_report(args.p, args.n)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, boolean, L = run(args)
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        elif args.json:
            Path(args.json).write_text(text, encoding="utf-8")
        if args.dot:
            Path(args.dot).write_text(lattice_to_dot(L), encoding="utf-8")
        if not args.quiet and args.json != "-":
            print("\n".join(_summary(report)))
    except (BoolatError, OSError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else ""
        print(f"boolat: error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_BOOLEAN if boolean else EXIT_NOT_BOOLEAN


if __name__ == "__main__":
    sys.exit(main())
