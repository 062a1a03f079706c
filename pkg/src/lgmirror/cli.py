"""Command-line interface: ``lgmirror <subcommand> <file>``.

Input files may be PALP matrix blocks or the simple JSON format; every
subcommand processes all polytopes in the file.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .batch import batch_verify, emit_report
from .config import BatchConfig
from .errors import LatticeError, NotReflexive
from .faces import DualPair, enumerate_faces
from .hodge import toric_hodge_data
from .io import emit_simple, read_entries
from .lattice import LatticePolytope, convex_hull, is_reflexive, polar_dual
from .mirror import assemble_f_diamond, toric_hodge_diamond, verify_mirror
from .sphere import boundary_complex, sphere_check


def _label(entry) -> str:
    return f"#{entry.id}" + (f" ({entry.comment})" if entry.comment else "")


def _reflexive_pair(P: LatticePolytope) -> DualPair:
    if not is_reflexive(P):
        raise NotReflexive("polytope is not reflexive")
    return DualPair.build(P)


def _emit(args, payload: list, text_lines: list[str]) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def cmd_info(args) -> int:
    payload, lines = [], []
    for e in read_entries(args.file):
        P = convex_hull(e.vertices)
        L = enumerate_faces(P)
        faces = [
            {"dim": F.dim, "vertices": [list(P.vertices[i]) for i in sorted(F.vertex_ids)],
             "ell": F.ell, "ell_star": F.ell_star}
            for F in L.proper_faces()
        ]
        info = {
            "id": e.id,
            "comment": e.comment,
            "reflexive": is_reflexive(P),
            "ell": P.num_points,
            "interior_points": len(P.interior_points),
            "boundary_points": len(P.boundary_points),
            "face_counts": [len(L[d]) for d in range(3)],
            "vertices": [list(v) for v in P.vertices],
            "facets": [{"normal": list(f.normal), "offset": f.offset} for f in P.facets],
            "faces": faces,
        }
        payload.append(info)
        lines.append(f"polytope {_label(e)}")
        lines.append(f"  reflexive: {info['reflexive']}")
        lines.append(f"  lattice points: {info['ell']} (interior {info['interior_points']}, boundary {info['boundary_points']})")
        lines.append(f"  faces (vertices, edges, facets): {tuple(info['face_counts'])}")
        lines.append("  dim  ell  ell*  vertices")
        for F in faces:
            lines.append(f"  {F['dim']:>3}  {F['ell']:>3}  {F['ell_star']:>4}  {F['vertices']}")
    _emit(args, payload, lines)
    return 0


def cmd_dual(args) -> int:
    out = []
    for e in read_entries(args.file):
        D = polar_dual(convex_hull(e.vertices))
        out.append((D.vertices, f"polar dual of {_label(e)}"))
    sys.stdout.write(emit_simple(out))
    return 0


def cmd_hodge(args) -> int:
    payload, lines = [], []
    for e in read_entries(args.file):
        d = toric_hodge_data(_reflexive_pair(convex_hull(e.vertices)))
        payload.append({"id": e.id, **d.__dict__})
        lines.append(f"polytope {_label(e)}")
        lines.append(f"  h11_X={d.h11_X} h21_Z={d.h21_Z} h11_Z={d.h11_Z} "
                     f"pic_toric={d.pic_toric_fiber} ph={d.ph} k={d.k}")
    _emit(args, payload, lines)
    return 0


def cmd_diamond(args) -> int:
    payload, lines = [], []
    for e in read_entries(args.file):
        pair = _reflexive_pair(convex_hull(e.vertices))
        d = toric_hodge_data(pair)
        hodge = toric_hodge_diamond(pair)
        lg = assemble_f_diamond(d.ph, d.k, d.h21_Z)
        payload.append({"id": e.id, "h_pq": hodge.as_lists(), "f_pq": lg.as_lists()})
        lines += [f"polytope {_label(e)}", "h^{p,q}(X):", hodge.render(),
                  "f^{p,q}(Y,w):", lg.render(), ""]
    _emit(args, payload, lines)
    return 0


def cmd_verify(args) -> int:
    status = 0
    for e in read_entries(args.file):
        rec = verify_mirror(_reflexive_pair(convex_hull(e.vertices)), polytope_id=str(e.id))
        verdict = "PASS" if rec.passed else "FAIL"
        print(f"{verdict} {_label(e)}  ({len(rec.checks)} checks, {rec.seconds * 1000:.1f} ms)")
        for c in rec.failures() if not args.verbose else rec.checks:
            print(f"  {'ok  ' if c.passed else 'FAIL'} {c.name}: {c.lhs} vs {c.rhs}")
        if not rec.passed:
            status = 1
    return status


def cmd_sphere(args) -> int:
    payload, lines = [], []
    for e in read_entries(args.file):
        # The complex lives on the polar dual side.
        D = polar_dual(convex_hull(e.vertices)) if not args.as_given else convex_hull(e.vertices)
        S = boundary_complex(D)
        s = sphere_check(S)
        payload.append({"id": e.id, "betti": list(s.betti), "euler": s.euler,
                        "torsion_free": s.torsion_free, "vertices": s.vertices,
                        "edges": s.edges, "triangles": s.triangles,
                        "facet_triangles": list(S.facet_triangle_counts),
                        "unimodular": s.unimodular, "closed": s.closed})
        lines.append(f"polytope {_label(e)}")
        lines.append(f"  betti={s.betti} euler={s.euler} torsion_free={s.torsion_free}")
        lines.append(f"  V={s.vertices} E={s.edges} T={s.triangles} unimodular={s.unimodular} closed={s.closed}")
    _emit(args, payload, lines)
    return 0 if all(p["betti"] == [1, 0, 1] and p["torsion_free"] for p in payload) else 1


def cmd_batch(args) -> int:
    cfg = BatchConfig(jobs=args.jobs, report_format=args.format, out=args.out)
    records, summary = batch_verify(read_entries(args.file), config=cfg)
    data = emit_report(records, cfg.report_format)
    if cfg.out:
        Path(cfg.out).write_bytes(data)
    print(json.dumps(summary, indent=2))
    return 0 if summary["failed"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgmirror",
        description="Reflexive 3-polytopes: lattice data, toric Hodge invariants and mirror checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, formats=("text", "json")):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="PALP or simple-format polytope file")
        if formats:
            p.add_argument("--format", choices=formats, default=formats[0])
        p.set_defaults(func=func)
        return p

    add("info", cmd_info, "lattice points, reflexivity and the face table")
    add("dual", cmd_dual, "polar dual in the simple format", formats=())
    add("hodge", cmd_hodge, "h11_X, h21_Z, h11_Z, pic_toric, ph, k")
    add("diamond", cmd_diamond, "Hodge diamonds of X and of its LG mirror")
    p = add("verify", cmd_verify, "all identities for each polytope; exit 0 iff all pass", formats=())
    p.add_argument("-v", "--verbose", action="store_true", help="list every check")
    p = add("sphere-check", cmd_sphere, "homology of the triangulated boundary of the dual")
    p.add_argument("--as-given", action="store_true",
                   help="triangulate the boundary of the given polytope instead of its dual")
    p = add("batch", cmd_batch, "census sweep; summary on stdout", formats=("csv", "json"))
    p.add_argument("--out", help="write the per-polytope report here")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LatticeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
