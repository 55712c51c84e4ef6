"""
Command-Line Parser
Subcommands divergence, project, embed, spectrum and verify; the global
flags are accepted before or after the subcommand
"""

import argparse


def _global_options(suppress: bool) -> argparse.ArgumentParser:
    default = argparse.SUPPRESS if suppress else None
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, default=default, help="random seed (default: NCGEOM_SEED)")
    parent.add_argument("--tol", type=float, default=default, help="tolerance override")
    parent.add_argument("--out", default=default, help="write the result to this file")
    parent.add_argument("--format", choices=["json", "csv"], default=default, help="report format")
    parent.add_argument(
        "--verbose", action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="debug logging",
    )
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncgeom",
        description="Alpha-divergences, projections and property checks on finite-dimensional algebras",
        parents=[_global_options(suppress=False)],
    )
    shared = _global_options(suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    div = sub.add_parser("divergence", parents=[shared], help="S_alpha between two functionals")
    div.add_argument("--phi", required=True, help="JSON file of the first functional")
    div.add_argument("--psi", required=True, help="JSON file of the second functional")
    div.add_argument("--alpha", type=float, required=True)
    div.add_argument("--oracle", action="store_true", help="cross-check with the spectral quasi-entropy")

    proj = sub.add_parser("project", parents=[shared], help="D_p- or alpha-projection onto a convex set")
    proj.add_argument("--y", required=True, help="JSON file: an L_p vector or a functional")
    proj.add_argument("--set", required=True, dest="set_file", help="JSON file of the convex set")
    proj.add_argument("--alpha", type=float, help="alpha for functional inputs (default: from the set order)")
    proj.add_argument("--max-iter", type=int, dest="max_iter")
    proj.add_argument("--samples", type=int, help="certificate samples")

    emb = sub.add_parser("embed", parents=[shared], help="alpha-embedding of a functional into L_p")
    emb.add_argument("--omega", required=True, help="JSON file of the functional")
    emb.add_argument("--alpha", type=float, required=True)
    emb.add_argument("--dual", action="store_true", help="also emit the duality map image")

    spectrum = sub.add_parser("spectrum", parents=[shared], help="relative modular spectrum of (phi, psi)")
    spectrum.add_argument("--phi", required=True)
    spectrum.add_argument("--psi", required=True)
    spectrum.add_argument("--function", help="scalar function name or JSON file of [t, g(t)] points")
    spectrum.add_argument("--strict", action="store_true", help="fail when psi is not faithful")

    ver = sub.add_parser("verify", parents=[shared], help="run the property-verification suite")
    ver.add_argument("--config", help="JSON suite config")
    ver.add_argument("--checks", nargs="+", help="run only these checks")
    ver.add_argument("--workers", type=int)
    ver.add_argument("--record", action="store_true", help="archive the run in the database")
    ver.add_argument("--compare-baseline", action="store_true", dest="compare_baseline",
                     help="compare with the latest archived run of the same config")
    ver.add_argument("--list", action="store_true", dest="list_checks", help="list check names and exit")

    return parser
