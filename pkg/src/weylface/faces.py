"""Faces of weight polyhedra of generalized Verma modules.

A face is named by a descriptor ``(w, I0)`` with ``w`` in W_J: it is
``w`` applied to the hull of the weights of M(lam, J) lying in
``lam - Q^+_{I0}``, i.e.

    conv(w(wt U(m_{I0 & J}) m_lam)) - cone(w(Phi^+_{I0} minus Phi^+_{I0 & J}))

Faces are compared through their canonical form (vertex set, primitive
extremal rays).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import lie, polyhedra, qmath
from .lie import RootSystem, Weight, WeylWord
from .polyhedra import LinearFunctional, VPolyhedron
from .weights import (
    GVMWeights,
    HypothesisError,
    WeightSet,
    finite_part_weights,
    rho,
    simple_module_weights,
    transport,
    _fmt,
    _fmt_set,
    truncated_weights,
)


class TheoremViolation(AssertionError):
    """Two routes that a theorem declares equivalent disagreed."""


@dataclass(frozen=True)
class FaceDescriptor:
    w: WeylWord
    I0: frozenset

    def to_json(self) -> dict:
        return {"word": list(self.w.letters), "I0": sorted(self.I0)}


@dataclass(frozen=True)
class CanonicalFace:
    vertex_set: frozenset
    ray_set: frozenset
    descriptors: tuple = field(default=(), compare=False, hash=False)

    def key(self) -> tuple:
        return (tuple(sorted(self.vertex_set, reverse=True)), tuple(sorted(self.ray_set, reverse=True)))

    def polyhedron(self) -> VPolyhedron:
        return VPolyhedron(self.vertex_set, self.ray_set)

    @property
    def bounded(self) -> bool:
        return not self.ray_set


def subsets(nodes: Iterable[int]) -> list[frozenset]:
    items = sorted(nodes)
    return [frozenset(c) for k in range(len(items) + 1) for c in itertools.combinations(items, k)]


def _lam(rs: RootSystem, lam: Sequence) -> Weight:
    lam = tuple(Fraction(v) for v in lam)
    lie._check_rank(rs, lam)
    return lam


def _require_nonzero_dominant(lam: Weight) -> None:
    if not lie.is_dominant_integral(lam) or not any(lam):
        raise HypothesisError(
            f"lambda = {_fmt(lam)} must be a nonzero dominant integral weight (0 != lambda in P^+)"
        )


def _neg_rays(rs: RootSystem, roots) -> list[Weight]:
    return [qmath.neg(r.weight) for r in roots]


def gvm_hull(rs: RootSystem, lam: Sequence, J: Iterable[int]) -> VPolyhedron:
    """conv wt M(lam, J) = conv(finite part) - cone(Phi^+ minus Phi_J^+)."""
    lam = _lam(rs, lam)
    J = lie._as_subset(rs, J)
    points = finite_part_weights(rs, lam, J).elements
    return VPolyhedron(points, _neg_rays(rs, rs.positive_roots_outside(J)))


def _check_descriptor(rs: RootSystem, J: frozenset, d: FaceDescriptor) -> None:
    bad = [i for i in d.w.letters if i not in J]
    if bad:
        raise HypothesisError(f"descriptor word {d.w} uses s_{bad[0]}, which is not in W_J for J = {sorted(J)}")
    lie._as_subset(rs, d.I0)


def descriptor_generators(rs: RootSystem, lam: Sequence, J: Iterable[int], d: FaceDescriptor) -> VPolyhedron:
    """Uncanonicalized generators of the face named by ``d``."""
    lam = _lam(rs, lam)
    J = lie._as_subset(rs, J)
    _check_descriptor(rs, J, d)
    K = d.I0 & J
    points = [lie.apply_weyl(rs, d.w, mu) for mu in finite_part_weights(rs, lam, K).elements]
    inside = set(rs.positive_roots_in(K))
    rays = [
        lie.apply_weyl(rs, d.w, qmath.neg(r.weight))
        for r in rs.positive_roots_in(d.I0)
        if r not in inside
    ]
    return VPolyhedron(points, rays)


def face_from_descriptor(rs: RootSystem, lam: Sequence, J: Iterable[int], d: FaceDescriptor) -> CanonicalFace:
    P = polyhedra.canonical(descriptor_generators(rs, lam, J, d))
    return CanonicalFace(P.points, P.rays, (d,))


def face_vertices_from_orbit(rs: RootSystem, lam: Sequence, J: Iterable[int], d: FaceDescriptor) -> frozenset:
    """Vertex set w(W_{J & I0}(lam')) with lam' the (J & I0)-dominant conjugate of lam."""
    lam = _lam(rs, lam)
    K = d.I0 & lie._as_subset(rs, J)
    lam_dom, _ = lie.dominant_representative(rs, K, lam)
    return frozenset(lie.apply_weyl(rs, d.w, mu) for mu in lie.orbit(rs, K, lam_dom))


def enumerate_faces(rs: RootSystem, lam: Sequence, J: Iterable[int]) -> list[CanonicalFace]:
    """All faces of gvm_hull(lam, J), from every descriptor in W_J x 2^I, deduplicated."""
    lam = _lam(rs, lam)
    J = lie._as_subset(rs, J)
    group = lie.weyl_subgroup(rs, J)
    found: dict[tuple, list] = {}
    faces: dict[tuple, CanonicalFace] = {}
    memo: dict[tuple, CanonicalFace] = {}
    for I0 in subsets(rs.nodes):
        for w in group:
            d = FaceDescriptor(w, I0)
            gens = descriptor_generators(rs, lam, J, d)
            gkey = gens.key()
            face = memo.get(gkey)
            if face is None:
                P = polyhedra.canonical(gens)
                face = CanonicalFace(P.points, P.rays)
                memo[gkey] = face
            k = face.key()
            faces.setdefault(k, face)
            found.setdefault(k, []).append(d)
    out = [CanonicalFace(f.vertex_set, f.ray_set, tuple(found[k])) for k, f in faces.items()]
    out.sort(key=lambda f: (len(f.vertex_set) + len(f.ray_set), f.key()))
    return out


def lp_face_set(P: VPolyhedron) -> set[tuple]:
    """Canonical keys of every face of P, found by LP alone (no Weyl group)."""
    return {F.key() for F in polyhedra.lp_faces(P)}


def face_weights(rs: RootSystem, lam: Sequence, J: Iterable[int], d: FaceDescriptor) -> WeightSet | GVMWeights:
    """Weights of M(lam, J) on the face named by ``d``.

    Finite faces come back as a ``WeightSet``; faces with rays as a symbolic
    ``GVMWeights`` (query membership through ``gvm_contains``).
    """
    lam = _lam(rs, lam)
    J = lie._as_subset(rs, J)
    _check_descriptor(rs, J, d)
    K = d.I0 & J
    inside = set(rs.positive_roots_in(K))
    ray_roots = tuple(r.alpha for r in rs.positive_roots_in(d.I0) if r not in inside)
    if not ray_roots:
        if J == rs.nodes and lie.is_dominant_integral(lam):
            base = truncated_weights(rs, lam, d.I0)
        else:
            base = finite_part_weights(rs, lam, K)
        return transport(rs, d.w, base, f"face(w={d.w},I0={_fmt_set(d.I0)})")
    return GVMWeights(finite_part_weights(rs, lam, K), ray_roots, lam, K, d.w)


def rho_vector(rs: RootSystem, lam: Sequence, J: Iterable[int]) -> Weight:
    """rho_{lam, J}: the sum of wt V_J(lam)."""
    return rho(truncated_weights(rs, lam, J), rs.rank)


@dataclass(frozen=True)
class FaceEquality:
    equal: bool
    truncations_equal: bool
    rhos_equal: bool
    orbits_equal: bool

    @property
    def criteria(self) -> str:
        return "a,b,c"


def faces_equal(rs: RootSystem, lam: Sequence, I1: Iterable[int], I2: Iterable[int]) -> FaceEquality:
    """Do (1, I1) and (1, I2) give the same face of conv wt V(lam)?

    Evaluates truncation equality, rho equality and equality of the vertex
    orbits W_{I1}(lam), W_{I2}(lam); raises ``TheoremViolation`` if they
    disagree.
    """
    lam = _lam(rs, lam)
    _require_nonzero_dominant(lam)
    I1 = lie._as_subset(rs, I1)
    I2 = lie._as_subset(rs, I2)
    t1, t2 = truncated_weights(rs, lam, I1), truncated_weights(rs, lam, I2)
    a = t1.elements == t2.elements
    b = rho(t1, rs.rank) == rho(t2, rs.rank)
    c = lie.orbit(rs, I1, lam) == lie.orbit(rs, I2, lam)
    if not (a == b == c):
        raise TheoremViolation(
            f"face equality criteria disagree for lambda={_fmt(lam)}, I1={_fmt_set(I1)}, I2={_fmt_set(I2)}: "
            f"truncation={a}, rho={b}, orbit={c}"
        )
    return FaceEquality(a, a, b, c)


def weyl_functional(rs: RootSystem, nu: Sequence) -> LinearFunctional:
    """The functional (nu, -) under the invariant form."""
    return LinearFunctional(tuple(Fraction(v) for v in nu), rs.fundamental_weight_gram)


def maximizer_face(rs: RootSystem, lam: Sequence, nu: Sequence, check: bool = False) -> WeightSet:
    """Argmax of (nu, -) on wt V(lam), via the dominant conjugate of nu.

    With w(nu) dominant this is w^{-1}(wt V_{I \\ supp(w nu)}(lam)).
    """
    lam = _lam(rs, lam)
    _require_nonzero_dominant(lam)
    nu = _lam(rs, nu)
    nu_dom, w = lie.dominant_representative(rs, rs.nodes, nu)
    base = truncated_weights(rs, lam, rs.nodes - lie.support(nu_dom))
    out = transport(rs, w.inverse(), base, f"maximizer(nu={_fmt(nu)})")
    if check:
        direct, _ = polyhedra.maximizer_subset(simple_module_weights(rs, lam).elements, weyl_functional(rs, nu))
        if direct != out.elements:
            raise TheoremViolation(f"maximizer map disagrees with direct argmax for nu={_fmt(nu)}")
    return out


def truncation_is_proper(rs: RootSystem, lam: Sequence, J: Iterable[int], check: bool = False) -> bool:
    """wt V_J(lam) is a proper subset of wt V(lam)  <=>  I_lam is not inside J."""
    lam = _lam(rs, lam)
    _require_nonzero_dominant(lam)
    J = lie._as_subset(rs, J)
    verdict = not lie.i_lambda(rs, lam) <= J
    if check:
        full = simple_module_weights(rs, lam)
        trunc = truncated_weights(rs, lam, J)
        proper = trunc.elements != full.elements
        _, top = polyhedra.maximizer_subset(full.elements, weyl_functional(rs, rho(trunc, rs.rank)))
        positive = top > 0
        if not (verdict == proper == positive):
            raise TheoremViolation(
                f"properness criteria disagree for lambda={_fmt(lam)}, J={_fmt_set(J)}: "
                f"I_lambda={verdict}, set={proper}, max>0={positive}"
            )
    return verdict


def face_center(rs: RootSystem, lam: Sequence, J: Iterable[int]) -> Weight:
    """rho_{lam,J} / |wt V_J(lam)|, the unique W_J-invariant point of the face."""
    lam = _lam(rs, lam)
    _require_nonzero_dominant(lam)
    trunc = truncated_weights(rs, lam, J)
    return qmath.scale(Fraction(1, len(trunc)), rho(trunc, rs.rank))


def solve_center_system(rs: RootSystem, lam: Sequence, J: Iterable[int]) -> dict[int, Fraction]:
    """Coefficients x_j with sum_j x_j (alpha_j, alpha_i) = (lam, alpha_i) for i in J.

    Then lam - sum_j x_j alpha_j is the face center.
    """
    lam = _lam(rs, lam)
    if not lie.is_dominant_integral(lam):
        raise HypothesisError("lambda must be dominant integral")
    J = sorted(lie._as_subset(rs, J))
    if not J:
        raise HypothesisError("J must be nonempty")
    B = rs.sym_form
    # (lam, alpha_i) = lam_i (alpha_i, alpha_i) / 2
    rhs = [[lam[i - 1] * rs.root_lengths[i - 1] / 2] for i in J]
    m = [[B[j - 1][i - 1] for j in J] for i in J]
    sol = qmath.solve(m, rhs)
    return {j: sol[k][0] for k, j in enumerate(J)}


def center_from_coefficients(rs: RootSystem, lam: Sequence, coeffs: dict[int, Fraction]) -> Weight:
    out = tuple(Fraction(v) for v in lam)
    for j, x in coeffs.items():
        out = qmath.sub(out, qmath.scale(x, rs.simple_roots[j - 1]))
    return out


def orbit_hull(rs: RootSystem, lam: Sequence, J: Iterable[int]) -> VPolyhedron:
    """conv(W_J(lam)) - cone(Phi^+ minus Phi_J^+) for any rational lam."""
    lam = _lam(rs, lam)
    J = lie._as_subset(rs, J)
    return VPolyhedron(lie.orbit(rs, J, lam), _neg_rays(rs, rs.positive_roots_outside(J)))


def orbit_hull_faces(rs: RootSystem, lam: Sequence, J: Iterable[int]) -> list[CanonicalFace]:
    """Faces of orbit_hull via w(conv W_{J & I0}(lam') - cone(Phi^+_{I0} minus Phi^+_{J & I0}))."""
    lam = _lam(rs, lam)
    J = lie._as_subset(rs, J)
    lam_dom, _ = lie.dominant_representative(rs, J, lam)
    faces: dict[tuple, CanonicalFace] = {}
    found: dict[tuple, list] = {}
    for I0 in subsets(rs.nodes):
        K = I0 & J
        base_dom, _ = lie.dominant_representative(rs, K, lam_dom)
        inside = set(rs.positive_roots_in(K))
        base_rays = [qmath.neg(r.weight) for r in rs.positive_roots_in(I0) if r not in inside]
        base_pts = lie.orbit(rs, K, base_dom)
        for w in lie.weyl_subgroup(rs, J):
            gens = VPolyhedron(
                [lie.apply_weyl(rs, w, p) for p in base_pts],
                [lie.apply_weyl(rs, w, r) for r in base_rays],
            )
            P = polyhedra.canonical(gens)
            face = CanonicalFace(P.points, P.rays)
            faces.setdefault(face.key(), face)
            found.setdefault(face.key(), []).append(FaceDescriptor(w, I0))
    out = [CanonicalFace(f.vertex_set, f.ray_set, tuple(found[k])) for k, f in faces.items()]
    out.sort(key=lambda f: (len(f.vertex_set) + len(f.ray_set), f.key()))
    return out
