"""JSON encodings with exact rationals written as "p/q" strings."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .faces import CanonicalFace, FaceDescriptor
from .lie import WeylWord
from .polyhedra import VPolyhedron
from .weights import GVMWeights, WeightSet


def q(v) -> str:
    return str(Fraction(v))


def unq(s) -> Fraction:
    return Fraction(s)


def vec(v) -> list[str]:
    return [q(x) for x in v]


def unvec(v) -> tuple[Fraction, ...]:
    return tuple(unq(x) for x in v)


def weight_set_to_json(ws: WeightSet) -> dict:
    return {"weights": [vec(w) for w in ws.sorted()], "provenance": ws.provenance}


def weight_set_from_json(d: dict) -> WeightSet:
    return WeightSet(frozenset(unvec(w) for w in d["weights"]), d.get("provenance", "ad-hoc"))


def gvm_weights_to_json(gw: GVMWeights) -> dict:
    return {
        "finite_part": weight_set_to_json(gw.finite_part),
        "ray_roots": [list(r) for r in gw.ray_roots],
        "lambda": vec(gw.lam),
        "J": sorted(gw.J),
        "transport": list(gw.transport.letters),
    }


def gvm_weights_from_json(d: dict) -> GVMWeights:
    return GVMWeights(
        weight_set_from_json(d["finite_part"]),
        tuple(tuple(r) for r in d["ray_roots"]),
        unvec(d["lambda"]),
        frozenset(d["J"]),
        WeylWord(tuple(d["transport"])),
    )


def polyhedron_to_json(P: VPolyhedron) -> dict:
    return {"points": [vec(p) for p in P.sorted_points()], "rays": [vec(r) for r in P.sorted_rays()]}


def polyhedron_from_json(d: dict) -> VPolyhedron:
    return VPolyhedron([unvec(p) for p in d["points"]], [unvec(r) for r in d["rays"]])


def descriptor_to_json(d: FaceDescriptor) -> dict:
    return d.to_json()


def descriptor_from_json(d: dict) -> FaceDescriptor:
    return FaceDescriptor(WeylWord(tuple(d["word"])), frozenset(d["I0"]))


def face_to_json(F: CanonicalFace) -> dict:
    verts, rays = F.key()
    return {
        "vertices": [vec(v) for v in verts],
        "rays": [vec(r) for r in rays],
        "descriptors": [descriptor_to_json(d) for d in F.descriptors],
    }


def face_from_json(d: dict) -> CanonicalFace:
    return CanonicalFace(
        frozenset(unvec(v) for v in d["vertices"]),
        frozenset(unvec(r) for r in d["rays"]),
        tuple(descriptor_from_json(x) for x in d["descriptors"]),
    )


def dumps(obj: Any) -> str:
    """Deterministic JSON text (sorted keys, fixed indentation)."""
    return json.dumps(obj, indent=2, sort_keys=True, default=_default)


def _default(o):
    if isinstance(o, Fraction):
        return q(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")
