"""Command line interface.

Exit codes: 0 success, 1 domain errors (bad mesh geometry, unsupported
topology, trivial-case misuse, oversized oracle systems), 2 file or parse
errors, 3 oracle verification mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import dimension, oracle
from . import triangulation as tg
from .exact import format_rational
from .power_ideal import TiePair, homology_regularity, supersmoothness_threshold


def _load(path: str) -> tg.Triangulation:
    p = Path(path)
    if p.exists():
        return tg.load_mesh(p)
    # bare names fall back to the meshes shipped with the package
    base = p.name
    if base.removesuffix(".mesh") + ".mesh" in tg.bundled_mesh_names():
        return tg.load_bundled(base)
    raise FileNotFoundError(f"no such mesh file: {path}")


def cmd_validate(args: argparse.Namespace) -> int:
    tri = _load(args.mesh)
    nb = len(tri.boundary_vertices)
    ni = len(tri.interior_vertices)
    eb = len(tri.boundary_edges())
    ei = len(tri.interior_edges())
    ties = len(tri.totally_interior_edges())
    print(f"vertices: {len(tri.vertices)} (boundary {nb}, interior {ni})")
    print(f"triangles: {len(tri.triangles)}")
    print(f"edges: {len(tri.edges)} (boundary {eb}, interior {ei})")
    print(f"quasi-cross-cut: {'yes' if tg.is_quasi_cross_cut(tri) else 'no'}")
    noun = "totally interior edge" if ties == 1 else "totally interior edges"
    print(f"{ties} {noun}; interior vertices: {ni}")
    return 0


def cmd_dim(args: argparse.Namespace) -> int:
    tri = _load(args.mesh)
    rep = dimension.dim(tri, args.d, args.r, method=args.method, allow_large=args.allow_large)
    print(f"L={rep.lower_bound} H1={rep.correction} dim={rep.total} method={rep.method}")
    return 0


def _emit(fields: list[str], fmt: str, widths: list[int] | None = None) -> str:
    if fmt == "csv":
        return ",".join(fields)
    if fmt == "tsv":
        return "\t".join(fields)
    assert widths is not None
    return "  ".join(f.ljust(w) for f, w in zip(fields, widths)).rstrip()


def cmd_table(args: argparse.Namespace) -> int:
    tri = _load(args.mesh)
    header = ["r", "d", "L", "H1", "dim", "method"]
    if args.verify:
        header += ["oracle", "match"]
    body: list[list[str]] = []
    mismatch = False
    for d in range(args.dmax + 1):
        rep = dimension.dim(tri, d, args.r, method=args.method, allow_large=args.allow_large)
        fields = [str(rep.r), str(rep.d), str(rep.lower_bound), str(rep.correction),
                  str(rep.total), rep.method]
        if args.verify:
            checked = oracle.dim_spline_oracle(tri, d, args.r, allow_large=args.allow_large)
            ok = checked == rep.total
            mismatch = mismatch or not ok
            fields += [str(checked), "yes" if ok else "no"]
        body.append(fields)
    widths = None
    if args.format == "pretty":
        widths = [max(len(header[i]), *(len(row[i]) for row in body)) if body else len(header[i])
                  for i in range(len(header))]
    print(_emit(header, args.format, widths))
    for row in body:
        print(_emit(row, args.format, widths))
    return 3 if mismatch else 0


def cmd_regularity(args: argparse.Namespace) -> int:
    tri = _load(args.mesh)
    if tg.is_quasi_cross_cut(tri):
        print("trivial case: quasi-cross-cut mesh, dim = L for all d")
        return 0
    ties = tri.totally_interior_edges()
    if len(ties) != 1:
        raise dimension.UnsupportedTopology(
            f"{len(ties)} totally interior edges and not quasi-cross-cut")
    params = tg.extract_one_tie_params(tri)
    if params.trivial_slope_collision:
        print("trivial case: shared-edge slope reappears at an endpoint, dim = L for all d")
        return 0
    if params.trivial_many_slopes(args.r):
        print(f"trivial case: an endpoint carries at least r + 3 = {args.r + 3} slopes, "
              "dim = L for all d")
        return 0
    tp = TiePair(params.s, params.t, args.r)
    reg = homology_regularity(tp)
    congruent = (args.r + 1) % tp.s == tp.s - 1 and (args.r + 1) % tp.t == tp.t - 1
    print(f"s={tp.s} t={tp.t} r={tp.r}")
    print(f"stabilization degree: {reg + 1}")
    print(f"homology regularity: {reg}")
    print(f"supersmoothness threshold: {format_rational(supersmoothness_threshold(tp))}")
    print(f"congruence case: {'yes' if congruent else 'no'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splinedim",
        description="Exact dimensions of smooth spline spaces over planar triangulations.")
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("validate", help="check a mesh file and print its census")
    pv.add_argument("mesh")
    pv.set_defaults(func=cmd_validate)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("mesh")
    common.add_argument("--r", dest="r", type=int, required=True, help="smoothness order")

    pd = sub.add_parser("dim", parents=[common], help="dimension for one (r, d)")
    pd.add_argument("--d", dest="d", type=int, required=True, help="polynomial degree")
    pd.add_argument("--method", choices=["auto", "lattice", "explicit", "oracle"], default="auto")
    pd.add_argument("--allow-large", action="store_true",
                    help="lift the column guardrail on the oracle system")
    pd.set_defaults(func=cmd_dim)

    pt = sub.add_parser("table", parents=[common], help="dimension table for d = 0..dmax")
    pt.add_argument("--dmax", type=int, required=True)
    pt.add_argument("--method", choices=["auto", "lattice", "explicit", "oracle"], default="auto")
    pt.add_argument("--format", choices=["csv", "tsv", "pretty"], default="csv")
    pt.add_argument("--verify", action="store_true",
                    help="recompute every row with the linear-algebra oracle")
    pt.add_argument("--allow-large", action="store_true",
                    help="lift the column guardrail on the oracle system")
    pt.set_defaults(func=cmd_table)

    pr = sub.add_parser("regularity", parents=[common],
                        help="degree thresholds where the correction term dies")
    pr.set_defaults(func=cmd_regularity)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (tg.MeshFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except oracle.TooLarge as exc:
        print(f"error: {exc} (rerun with --allow-large to force)", file=sys.stderr)
        return 1
    except (tg.MeshError, dimension.DimensionError, oracle.OracleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
