"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 precondition
failure (parameters that admit no construction).

When --out is a relative path and the environment variable GWSCHEMES_OUTDIR
is set, output files are written inside that directory.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .builders import bgw_build, bgw_incidence, gh_build
from .designs import (
    bgw_matrix,
    gh_matrix,
    latin_square,
    sgdd_params,
    verify_bgw,
    verify_gh,
    verify_latin,
)
from .errors import NotAScheme, SymmetryObstruction, VerificationError
from .oracle import oracle_spectrum
from .serialize import (
    load_scheme,
    save_scheme,
    scheme_to_dict,
    table_to_csv,
    table_to_json,
)
from .spectra import (
    FusedEigensystem,
    bgw_symmetric_fusion,
    bm_search,
    eigensystem_for,
    gh_symmetric_fusion,
)


class UsageError(Exception):
    """Missing or inconsistent command line arguments."""


def _out_path(path: str) -> str:
    outdir = os.environ.get("GWSCHEMES_OUTDIR")
    if outdir and not os.path.isabs(path):
        return os.path.join(outdir, path)
    return path


def _family_scheme(args):
    """Build (scheme, provenance) from --in or --family arguments."""
    if getattr(args, "infile", None):
        scheme, prov = load_scheme(args.infile)
        if prov is None:
            raise UsageError("scheme file has no provenance; cannot pick a family")
        return scheme, prov
    if args.family == "bgw":
        if args.q is None or args.m is None:
            raise UsageError("--family bgw needs --q and --m")
        return bgw_build(args.q, args.m), {"family": "bgw", "q": args.q, "m": args.m}
    if args.family == "gh":
        if args.q is None:
            raise UsageError("--family gh needs --q")
        return gh_build(args.q), {"family": "gh", "q": args.q}
    raise UsageError("need --in FILE or --family bgw|gh")


def _emit_scheme(scheme, provenance, out):
    if out:
        path = _out_path(out)
        save_scheme(path, scheme, provenance)
        print(f"wrote {path}: {scheme!r}")
    else:
        json.dump(scheme_to_dict(scheme, provenance), sys.stdout)
        print()


def _cmd_build(args) -> int:
    if args.what == "bgw-scheme":
        if args.q is None or args.m is None:
            print("build bgw-scheme needs --q and --m", file=sys.stderr)
            return 1
        scheme = bgw_build(args.q, args.m)
        _emit_scheme(scheme, {"family": "bgw", "q": args.q, "m": args.m}, args.out)
    else:
        if args.q is None:
            print("build gh-scheme needs --q", file=sys.stderr)
            return 1
        scheme = gh_build(args.q)
        _emit_scheme(scheme, {"family": "gh", "q": args.q}, args.out)
    return 0


def _cmd_verify(args) -> int:
    scheme, prov = load_scheme(args.infile)
    print(f"verified: {scheme!r}")
    print(f"valencies: {scheme.valencies}")
    if prov:
        print(f"provenance: {prov}")
    if args.spectral:
        if not prov:
            print("no provenance; cannot run the spectral check", file=sys.stderr)
            return 2
        es = eigensystem_for(scheme, prov)
        es.check_pq_duality()
        blocks = sorted((b.dim, m) for b, m in zip(es.blocks, es.multiplicities))
        numeric = oracle_spectrum(scheme.mats, seed=args.seed)
        if blocks != numeric:
            print(f"spectral mismatch: {blocks} vs {numeric}", file=sys.stderr)
            return 2
        print(f"spectral blocks (d_k, m_k): {blocks} (numeric oracle agrees)")
    return 0


def _cmd_table(args) -> int:
    scheme, prov = _family_scheme(args)
    es = eigensystem_for(scheme, prov)
    which = args.which
    if which == "P":
        entries = es.eigenmatrix_p()
        rows = [f"{name}({i},{j})" for name, i, j in es.row_index()]
        cols = list(scheme.labels)
    elif which == "Q":
        entries = es.eigenmatrix_q()
        rows = list(scheme.labels)
        cols = [f"{name}({i},{j})" for name, i, j in es.row_index()]
    else:
        entries = es.character_table()
        rows = [blk.name for blk in es.blocks]
        cols = list(scheme.labels)
    if args.format == "json":
        json.dump(table_to_json(which, es.algebra.field, rows, cols, entries), sys.stdout)
        print()
    else:
        sys.stdout.write(table_to_csv(rows, cols, entries))
    return 0


def _cmd_fusion(args) -> int:
    scheme, prov = _family_scheme(args)
    es = eigensystem_for(scheme, prov)
    if prov["family"] == "bgw":
        partition = bgw_symmetric_fusion(prov["m"])
    else:
        partition = gh_symmetric_fusion(prov["q"])
    fused = scheme.fuse(partition)
    print(f"fused scheme: {fused!r}")
    fes = FusedEigensystem(es, partition)
    print(f"fused multiplicities: {fes.multiplicities}")
    if args.check_bm:
        cert = bm_search(es, partition, product_form_only=True)
        if cert is None:
            print("product-form certificate: none")
            cert = bm_search(es, partition)
        if cert is None:
            print("no fusion certificate found", file=sys.stderr)
            return 2
        kind = "product-form" if cert.product_form else "general cells"
        print(f"certificate ({kind}): {cert.cell_count} cells = fused class count")
        for name, cells in zip(cert.block_names, cert.cells):
            desc = "; ".join(
                "{" + ",".join(f"({i},{j})" for i, j in cell) + "}" for cell in cells
            )
            print(f"  block {name}: {desc}")
    if args.format == "csv":
        sys.stdout.write(table_to_csv(fused.labels, fes.names, fes.qhat))
    else:
        json.dump(
            table_to_json("Q", es.algebra.field, fused.labels, fes.names, fes.qhat),
            sys.stdout,
        )
        print()
    return 0


def _cmd_designs(args) -> int:
    if args.what == "bgw":
        if args.q is None or args.m is None:
            print("designs bgw needs --q and --m", file=sys.stderr)
            return 1
        W = bgw_matrix(args.q, args.m)
        info = verify_bgw(W, args.m)
        print(f"BGW({info['v']},{info['k']},{info['lam']}) over Z_{args.m}: {info}")
        N = bgw_incidence(args.q, args.m, 0)
        params = sgdd_params(N, args.m)
        print(f"divisible design: {params}")
        if "lam" in params:
            print(
                f"2-design: 2-({params['v']},{params['k']},{params['lam']})"
            )
    elif args.what == "gh":
        if args.q is None:
            print("designs gh needs --q", file=sys.stderr)
            return 1
        H = gh_matrix(args.q)
        info = verify_gh(H, args.q)
        print(f"GH({args.q},{info['lam']}) over GF({args.q})+: verified")
    else:
        if args.q is None:
            print("designs latin needs --q", file=sys.stderr)
            return 1
        L = latin_square(args.q)
        verify_latin(L)
        print(f"Latin square of order {args.q} (symmetric, idempotent): verified")
        for row in L.tolist():
            print(" ".join(str(x) for x in row))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gwschemes",
        description="association schemes from weighing and Hadamard matrices",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("build", help="construct and save a scheme")
    p.add_argument("what", choices=["bgw-scheme", "gh-scheme"])
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("verify", help="verify a scheme file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--spectral", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="print an eigenmatrix or character table")
    p.add_argument("--in", dest="infile")
    p.add_argument("--family", choices=["bgw", "gh"])
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--which", choices=["P", "Q", "T"], default="T")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("fusion", help="symmetrizing fusion and its eigensystem")
    p.add_argument("--in", dest="infile")
    p.add_argument("--family", choices=["bgw", "gh"])
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--check-bm", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_fusion)

    p = sub.add_parser("designs", help="verify the underlying designs")
    p.add_argument("what", choices=["bgw", "gh", "latin"])
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(func=_cmd_designs)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    try:
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except SymmetryObstruction as e:
        print(f"precondition failure: {e}", file=sys.stderr)
        return 3
    except (NotAScheme, VerificationError) as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"precondition failure: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
