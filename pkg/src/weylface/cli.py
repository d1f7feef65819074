"""Command-line front end: ``weylface <command> TYPE [LAMBDA] [options]``.

Exit status: 0 on success, 1 when an input violates a mathematical
hypothesis (or a verification suite reports violations), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import faces, lie, polyhedra, qmath, serialize, verify, weakface
from .lie import RootSystem, WeylWord
from .weights import (
    GVMWeights,
    HypothesisError,
    WeightSet,
    direct_sum_weights,
    gvm_weights,
    simple_module_weights,
    truncated_weights,
)


class UsageError(Exception):
    pass


# -- argument parsing -----------------------------------------------------


def parse_type(text: str) -> RootSystem:
    try:
        return lie.build_root_system(lie.CartanType.parse(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_weight(rs: RootSystem, text: str, what: str = "lambda") -> tuple:
    try:
        coords = tuple(qmath.parse_rational(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"{what}: {exc}") from None
    if len(coords) != rs.rank:
        raise UsageError(f"{what} needs {rs.rank} coordinates for {rs.cartan_type}, got {len(coords)}")
    return coords


def parse_weights(rs: RootSystem, text: str) -> list[tuple]:
    return [parse_weight(rs, part) for part in text.split("+")]


def parse_subset(rs: RootSystem, text: str | None, what: str) -> frozenset | None:
    if text is None:
        return None
    return frozenset(parse_subset_list(rs, text, what))


def parse_word(rs: RootSystem, text: str | None) -> WeylWord:
    letters = parse_subset_list(rs, text, "--word")
    return WeylWord(tuple(letters))


def parse_subset_list(rs: RootSystem, text: str | None, what: str) -> list[int]:
    if text is None or not text.strip():
        return []
    try:
        items = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated node labels, got {text!r}") from None
    bad = [i for i in items if not 1 <= i <= rs.rank]
    if bad:
        raise UsageError(f"{what}: node {bad[0]} is outside 1..{rs.rank}")
    return items


def single_weight(rs: RootSystem, text: str) -> tuple:
    lams = parse_weights(rs, text)
    if len(lams) != 1:
        raise UsageError("this command takes a single highest weight (no '+')")
    return lams[0]


# -- text formatting ------------------------------------------------------


def _cells(vectors: Sequence[Sequence]) -> list[list[str]]:
    return [[qmath.fmt(v) for v in vec] for vec in vectors]


def aligned(vectors: Sequence[Sequence], indent: str = "  ") -> list[str]:
    cells = _cells(vectors)
    if not cells:
        return []
    widths = [max(len(row[k]) for row in cells) for k in range(len(cells[0]))]
    return [indent + "(" + ", ".join(c.rjust(w) for c, w in zip(row, widths)) + ")" for row in cells]


def fmt_vec(v) -> str:
    return "(" + ",".join(qmath.fmt(x) for x in v) + ")"


def fmt_subset(s) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def _weight_set_lines(ws: WeightSet) -> list[str]:
    return [f"{len(ws)} weights ({ws.provenance})"] + aligned(ws.sorted())


def _gvm_lines(rs: RootSystem, gw: GVMWeights) -> list[str]:
    lines = [
        f"infinite weight set: transport {gw.transport} of finite part + rays",
        f"finite part: {len(gw.finite_part)} weights",
        *aligned(gw.finite_part.sorted()),
        f"rays (minus positive roots, simple-root coordinates): {len(gw.ray_roots)}",
    ]
    for r in sorted(gw.ray_roots, key=lambda r: (sum(r), r)):
        lines.append("  -(" + ",".join(str(c) for c in r) + ")  = " + fmt_vec(qmath.neg(rs.alpha_to_weight(r))))
    return lines


def _polyhedron_lines(P: polyhedra.VPolyhedron) -> list[str]:
    return [f"points: {len(P.points)}", *aligned(P.sorted_points()), f"rays: {len(P.rays)}", *aligned(P.sorted_rays())]


def _face_lines(k: int, F: faces.CanonicalFace) -> list[str]:
    verts, rays = F.key()
    descr = ", ".join(f"({d.w}, {fmt_subset(d.I0)})" for d in F.descriptors)
    head = f"face {k}: {len(verts)} vertices, {len(rays)} rays; descriptors {descr}"
    lines = [head, "  vertices:", *aligned(verts, "    ")]
    if rays:
        lines += ["  rays:", *aligned(rays, "    ")]
    return lines


# -- commands -------------------------------------------------------------


def cmd_roots(rs: RootSystem, args) -> tuple[object, list[str]]:
    roots = rs.positive_roots
    data = {
        "type": str(rs.cartan_type),
        "cartan_matrix": [list(r) for r in rs.cartan_matrix],
        "symmetrized_form": [serialize.vec(r) for r in rs.sym_form],
        "positive_roots": [{"weight": serialize.vec(r.weight), "alpha": list(r.alpha)} for r in roots],
    }
    lines = [f"{rs.cartan_type}: rank {rs.rank}, {len(roots)} positive roots", "Cartan matrix:"]
    lines += ["  " + " ".join(f"{a:>2}" for a in row) for row in rs.cartan_matrix]
    lines += ["symmetrized form (alpha_i, alpha_j):", *aligned(rs.sym_form)]
    lines.append("positive roots (omega-coordinates; simple-root coordinates):")
    w = aligned([r.weight for r in roots])
    for line, r in zip(w, roots):
        lines.append(f"{line}  [{', '.join(str(c) for c in r.alpha)}]")
    return data, lines


def cmd_weights(rs: RootSystem, args):
    lams = parse_weights(rs, args.lam)
    J = parse_subset(rs, args.J, "--J")
    if J is not None and J != rs.nodes:
        if len(lams) != 1:
            raise UsageError("--J applies to a single highest weight")
        gw = gvm_weights(rs, lams[0], J)
        return serialize.gvm_weights_to_json(gw), _gvm_lines(rs, gw)
    ws = simple_module_weights(rs, lams[0]) if len(lams) == 1 else direct_sum_weights(rs, lams)
    return serialize.weight_set_to_json(ws), _weight_set_lines(ws)


def cmd_truncate(rs: RootSystem, args):
    lam = single_weight(rs, args.lam)
    I0 = _required(parse_subset(rs, args.I0, "--I0"), "--I0")
    ws = truncated_weights(rs, lam, I0)
    return serialize.weight_set_to_json(ws), _weight_set_lines(ws)


def _J_or_all(rs, args) -> frozenset:
    J = parse_subset(rs, args.J, "--J")
    return rs.nodes if J is None else J


def cmd_gvm_hull(rs: RootSystem, args):
    lam = single_weight(rs, args.lam)
    P = faces.gvm_hull(rs, lam, _J_or_all(rs, args))
    return serialize.polyhedron_to_json(P), _polyhedron_lines(P)


def cmd_faces(rs: RootSystem, args):
    lam = single_weight(rs, args.lam)
    J = _J_or_all(rs, args)
    found = faces.enumerate_faces(rs, lam, J)
    lines = [f"{len(found)} faces of conv wt M({fmt_vec(lam)}, {fmt_subset(J)})"]
    for k, F in enumerate(found, 1):
        lines += _face_lines(k, F)
    return [serialize.face_to_json(F) for F in found], lines


def cmd_face_weights(rs: RootSystem, args):
    lam = single_weight(rs, args.lam)
    J = _J_or_all(rs, args)
    I0 = _required(parse_subset(rs, args.I0, "--I0"), "--I0")
    d = faces.FaceDescriptor(parse_word(rs, args.word), I0)
    out = faces.face_weights(rs, lam, J, d)
    if isinstance(out, GVMWeights):
        return serialize.gvm_weights_to_json(out), _gvm_lines(rs, out)
    return serialize.weight_set_to_json(out), _weight_set_lines(out)


def cmd_face_equal(rs: RootSystem, args):
    lam = single_weight(rs, args.lam)
    I1 = _required(parse_subset(rs, args.I1, "--I1"), "--I1")
    I2 = _required(parse_subset(rs, args.I2, "--I2"), "--I2")
    r = faces.faces_equal(rs, lam, I1, I2)
    data = {
        "equal": r.equal,
        "truncations_equal": r.truncations_equal,
        "rhos_equal": r.rhos_equal,
        "orbits_equal": r.orbits_equal,
    }
    word = "equal" if r.equal else "not equal"
    return data, [f"{word} (criteria {r.criteria} agree)"]


def cmd_center(rs: RootSystem, args):
    lam = single_weight(rs, args.lam)
    J = _required(parse_subset(rs, args.J, "--J"), "--J")
    center = faces.face_center(rs, lam, J)
    coeffs = faces.solve_center_system(rs, lam, J) if J else {}
    data = {"center": serialize.vec(center), "coefficients": {str(j): qmath.fmt(x) for j, x in coeffs.items()}}
    lines = [f"center: {fmt_vec(center)}"]
    if coeffs:
        terms = " - ".join(f"({qmath.fmt(x)}) alpha_{j}" for j, x in sorted(coeffs.items()))
        lines.append(f"       = lambda - {terms}")
    return data, lines


def cmd_maximizer(rs: RootSystem, args):
    lam = single_weight(rs, args.lam)
    if args.nu is None:
        raise UsageError("--nu is required")
    nu = parse_weight(rs, args.nu, "--nu")
    ws = faces.maximizer_face(rs, lam, nu, check=True)
    _, top = polyhedra.maximizer_subset(ws.elements, faces.weyl_functional(rs, nu))
    data = serialize.weight_set_to_json(ws)
    data["max"] = qmath.fmt(top)
    return data, _weight_set_lines(ws) + [f"max value: {qmath.fmt(top)}"]


def cmd_weakface(rs: RootSystem, args):
    lams = parse_weights(rs, args.lam)
    X = simple_module_weights(rs, lams[0]) if len(lams) == 1 else direct_sum_weights(rs, lams)
    if args.Y is not None:
        Y = [parse_weight(rs, part, "--Y") for part in args.Y.split(";") if part.strip()]
        v = weakface.is_positive_weak_face(X, Y)
        data = {"Y": [serialize.vec(y) for y in sorted(Y, reverse=True)], "weak": v.is_weak, "positive": v.is_positive}
        word = "positive weak face" if v.is_positive else ("weak face (not positive)" if v.is_weak else "not a weak face")
        return data, [word]
    found = weakface.enumerate_weak_faces(X)
    entries, lines = [], [f"{len(found)} weak faces of {len(X)} weights"]
    for Y in found:
        pos = weakface.is_positive_weak_face(X, Y).is_positive
        ys = sorted(Y, reverse=True)
        entries.append({"weights": [serialize.vec(y) for y in ys], "positive": pos})
        lines.append(f"  {'positive' if pos else 'weak    '}  " + " ".join(fmt_vec(y) for y in ys))
    return {"weak_faces": entries}, lines


def _required(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


COMMANDS = {
    "roots": cmd_roots,
    "weights": cmd_weights,
    "truncate": cmd_truncate,
    "gvm-hull": cmd_gvm_hull,
    "faces": cmd_faces,
    "face-weights": cmd_face_weights,
    "face-equal": cmd_face_equal,
    "center": cmd_center,
    "maximizer": cmd_maximizer,
    "weakface": cmd_weakface,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylface", description="Weight polyhedra, their faces and weak faces.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("type", help="Cartan type such as A2, B3, G2")
        if name != "roots":
            sp.add_argument("lam", metavar="LAMBDA", help="omega-coordinates, e.g. 1,0 or 1/2,-1 ('+' joins a direct sum)")
        for flag in ("--J", "--I0", "--I1", "--I2", "--nu", "--word", "--Y"):
            sp.add_argument(flag, default=None)
        sp.add_argument("--json", action="store_true")
    vp = sub.add_parser("verify")
    vp.add_argument("suite", choices=sorted(verify.SUITES))
    vp.add_argument("--types", default=None, help="comma-separated Cartan types")
    vp.add_argument("--max-coord", type=int, default=None, help="bound on the coordinate sum of lambda")
    vp.add_argument("--seed", type=int, default=None, help="seed for sampled checks")
    vp.add_argument("--json", action="store_true")
    return p


def _verify(args, out) -> int:
    types = None
    if args.types:
        types = [t.strip() for t in args.types.split(",") if t.strip()]
        for t in types:
            parse_type(t)
    if args.max_coord is not None and args.max_coord < 0:
        raise UsageError("--max-coord must be nonnegative")
    report = verify.run_suite(args.suite, types, args.max_coord, args.seed)
    if args.json:
        out.write(serialize.dumps(report) + "\n")
    else:
        width = max((len(r["instance"]) for r in report["reports"]), default=0)
        for r in report["reports"]:
            status = "ok" if not r["violations"] else f"{len(r['violations'])} violations"
            out.write(f"{r['instance'].ljust(width)}  checked {r['subsets_checked']:>5}  {status}\n")
        out.write(f"suite {report['suite']}: {len(report['reports'])} instances, {report['violations']} violations\n")
    return 0 if report["violations"] == 0 else 1


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _verify(args, out)
        rs = parse_type(args.type)
        data, lines = COMMANDS[args.command](rs, args)
    except UsageError as exc:
        err.write(f"weylface: usage error: {exc}\n")
        return 2
    except (HypothesisError, lie.RootSystemError, weakface.BoundExceeded, faces.TheoremViolation) as exc:
        err.write(f"weylface: {exc}\n")
        return 1
    except ValueError as exc:
        err.write(f"weylface: {exc}\n")
        return 1
    if args.json:
        out.write(serialize.dumps(data) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
