"""Exact convex geometry on finitely generated rational polyhedra.

A ``VPolyhedron`` is ``conv(points) + cone(rays)``.  Every question here is
answered by an exact LP (see :mod:`weylface.lp`); no H-representation is
ever built.

Relative interior of a finite hull is decided by the per-generator test:
``x`` is in relint conv(U) iff for every ``u`` in ``U`` some convex
representation of ``x`` puts positive weight on ``u``.  For finite rational
``U`` this agrees with the two-point definition (``x = t y + (1 - t) z``):
one direction is the usual extraction of a positive coefficient, and the
other follows by averaging the per-generator representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import qmath
from .lp import LPProblem, LPResult, lp_solve
from .qmath import QVector

_ONE = Fraction(1)
_ZERO = Fraction(0)


def _vec(x) -> QVector:
    return tuple(Fraction(v) for v in x)


@dataclass(frozen=True)
class VPolyhedron:
    points: frozenset
    rays: frozenset = frozenset()

    def __init__(self, points: Iterable[Sequence] = (), rays: Iterable[Sequence] = ()):
        pts = frozenset(_vec(p) for p in points)
        rs = frozenset(qmath.primitive(r) for r in rays if any(r))
        dims = {len(v) for v in pts | rs}
        if len(dims) > 1:
            raise ValueError(f"mixed dimensions {sorted(dims)}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "rays", rs)

    @property
    def dim(self) -> int:
        for v in self.points | self.rays:
            return len(v)
        raise ValueError("empty polyhedron has no ambient dimension")

    def sorted_points(self) -> list[QVector]:
        return sorted(self.points, reverse=True)

    def sorted_rays(self) -> list[QVector]:
        return sorted(self.rays, reverse=True)

    def key(self) -> tuple:
        return (tuple(self.sorted_points()), tuple(self.sorted_rays()))


@dataclass(frozen=True)
class Membership:
    member: bool
    coefficients: tuple | None = None

    def __bool__(self):
        return self.member

    @property
    def support(self) -> int:
        return sum(1 for c in (self.coefficients or ()) if c)


@dataclass(frozen=True)
class LinearFunctional:
    """``x -> normal^T G x`` with ``G`` the Gram matrix (identity if ``None``)."""

    normal: tuple
    gram: tuple | None = None

    def __call__(self, x: Sequence) -> Fraction:
        if self.gram is None:
            return qmath.dot(self.normal, x)
        return qmath.dot(qmath.matvec(self.gram, self.normal), x)


def _representation_lp(points: Sequence, rays: Sequence, x: Sequence, objective, sense="max") -> LPResult:
    """LP over (a, b) with sum a_p p + sum b_r r = x, sum a = 1 (if points), a, b >= 0."""
    d = len(x)
    gens = list(points) + list(rays)
    A = [[g[k] for g in gens] for k in range(d)]
    rel = ["="] * d
    b = list(x)
    if points:
        A.append([_ONE] * len(points) + [_ZERO] * len(rays))
        rel.append("=")
        b.append(_ONE)
    return lp_solve(LPProblem(A, rel, b, objective, sense=sense))


def conv_contains(points: Iterable[Sequence], x: Sequence) -> Membership:
    """Is ``x`` a convex combination of ``points``?  Witness is a basic solution."""
    pts = [_vec(p) for p in points]
    if not pts:
        raise ValueError("conv_contains needs at least one point")
    x = _vec(x)
    res = _representation_lp(pts, [], x, [_ZERO] * len(pts))
    if not res.feasible:
        return Membership(False)
    return Membership(True, res.x)


def cone_contains(rays: Iterable[Sequence], x: Sequence) -> Membership:
    rs = [_vec(r) for r in rays]
    x = _vec(x)
    if not any(x):
        return Membership(True, tuple(_ZERO for _ in rs))
    if not rs:
        return Membership(False)
    res = _representation_lp([], rs, x, [_ZERO] * len(rs))
    if not res.feasible:
        return Membership(False)
    return Membership(True, res.x)


def poly_contains(P: VPolyhedron, x: Sequence) -> Membership:
    pts = P.sorted_points()
    rays = P.sorted_rays()
    if not pts:
        raise ValueError("polyhedron has no points")
    res = _representation_lp(pts, rays, _vec(x), [_ZERO] * (len(pts) + len(rays)))
    if not res.feasible:
        return Membership(False)
    return Membership(True, res.x)


def relint_contains(U: Iterable[Sequence], x: Sequence) -> bool:
    pts = sorted({_vec(u) for u in U})
    if not pts:
        raise ValueError("relint_contains needs a nonempty set")
    x = _vec(x)
    known: set[int] = set()
    for k in range(len(pts)):
        if k in known:
            continue
        obj = [_ONE if i == k else _ZERO for i in range(len(pts))]
        res = _representation_lp(pts, [], x, obj)
        if not res.feasible or res.value <= 0:
            return False
        known.update(i for i, c in enumerate(res.x) if c > 0)
    return True


def maximizer_subset(X: Iterable[Sequence], phi: LinearFunctional | Sequence) -> tuple[frozenset, Fraction]:
    """Exact argmax of ``phi`` over the finite set ``X`` and the max value."""
    if not isinstance(phi, LinearFunctional):
        phi = LinearFunctional(_vec(phi))
    xs = {_vec(x) for x in X}
    if not xs:
        raise ValueError("maximizer_subset needs a nonempty set")
    values = {x: phi(x) for x in xs}
    top = max(values.values())
    return frozenset(x for x, v in values.items() if v == top), top


def vertices(P: VPolyhedron) -> frozenset:
    """Points of P not in conv(other points) + cone(rays)."""
    pts = P.sorted_points()
    rays = P.sorted_rays()
    out = []
    for k, p in enumerate(pts):
        others = pts[:k] + pts[k + 1:]
        if not _in_sum(others, rays, p):
            out.append(p)
    return frozenset(out)


def _in_sum(points, rays, x) -> bool:
    if not points:
        return False
    res = _representation_lp(points, rays, x, [_ZERO] * (len(points) + len(rays)))
    return res.feasible


def extremal_rays(P: VPolyhedron) -> frozenset:
    """Rays not in the cone of the remaining rays (recession cone only)."""
    rays = P.sorted_rays()
    out = []
    for k, r in enumerate(rays):
        others = rays[:k] + rays[k + 1:]
        if not cone_contains(others, r):
            out.append(r)
    return frozenset(out)


def canonical(P: VPolyhedron) -> VPolyhedron:
    """Reduce to vertices and extremal rays."""
    return VPolyhedron(vertices(P), extremal_rays(P))


def minimal_face(P: VPolyhedron, x: Sequence) -> VPolyhedron:
    """Generators of P carrying weight in some representation of ``x``.

    These generate the smallest face of P containing ``x`` (the face with
    ``x`` in its relative interior).  ``x`` must lie in P.
    """
    pts = P.sorted_points()
    rays = P.sorted_rays()
    gens = pts + rays
    x = _vec(x)
    used: set[int] = set()
    closed: set[int] = set()
    for k in range(len(gens)):
        if k in used or k in closed:
            continue
        obj = [_ONE if i == k else _ZERO for i in range(len(gens))]
        res = _representation_lp(pts, rays, x, obj)
        if not res.feasible:
            raise ValueError("point is not in the polyhedron")
        if res.value > 0:
            used.update(i for i, c in enumerate(res.x) if c > 0)
        else:
            closed.add(k)
    return VPolyhedron([gens[i] for i in used if i < len(pts)], [gens[i] for i in used if i >= len(pts)])


def _tight_generators(P: VPolyhedron, F: VPolyhedron) -> tuple[list, list, tuple]:
    """Generators of P tight for every valid inequality that is tight on F.

    One LP: variables (phi, c, t_g); phi.f = c on F's points, phi.r = 0 on
    F's rays, phi.p + t_p <= c on P's points, phi.r + t_r <= 0 on P's rays,
    0 <= t_g <= 1; maximize sum t.  Feasible (phi, c) form a cone, so the
    optimum makes every generator that can be strict strict at once.
    """
    d = P.dim
    pts = P.sorted_points()
    rays = P.sorted_rays()
    g = len(pts) + len(rays)
    A, rel, b = [], [], []

    def row(coef_phi, coef_c, t_index=None):
        r = list(coef_phi) + [Fraction(coef_c)] + [_ZERO] * g
        if t_index is not None:
            r[d + 1 + t_index] = _ONE
        return r

    for f in F.sorted_points():
        A.append(row(f, -1)); rel.append("="); b.append(_ZERO)
    for r in F.sorted_rays():
        A.append(row(r, 0)); rel.append("="); b.append(_ZERO)
    for k, p in enumerate(pts):
        A.append(row(p, -1, k)); rel.append("<="); b.append(_ZERO)
    for k, r in enumerate(rays):
        A.append(row(r, 0, len(pts) + k)); rel.append("<="); b.append(_ZERO)
    for k in range(g):
        A.append(row([_ZERO] * d, 0, k)); rel.append("<="); b.append(_ONE)
    nonneg = [False] * (d + 1) + [True] * g
    obj = [_ZERO] * (d + 1) + [_ONE] * g
    res = lp_solve(LPProblem(A, rel, b, obj, nonneg=nonneg))
    assert res.optimal, res.status
    t = res.x[d + 1:]
    tight_pts = [p for k, p in enumerate(pts) if t[k] == 0]
    tight_rays = [r for k, r in enumerate(rays) if t[len(pts) + k] == 0]
    return tight_pts, tight_rays, res.x[:d]


def is_face(P: VPolyhedron, F: VPolyhedron) -> bool:
    """Is F equal to P or to P cut by a supporting hyperplane?"""
    if not F.points:
        raise ValueError("a face must contain at least one point")
    for p in F.points:
        if not poly_contains(P, p):
            raise ValueError(f"F is not contained in P: point {tuple(map(str, p))}")
    for r in F.rays:
        if not cone_contains(P.sorted_rays(), r):
            raise ValueError(f"F is not contained in P: ray {tuple(map(str, r))}")
    tight_pts, tight_rays, _ = _tight_generators(P, F)
    frays = F.sorted_rays()
    if any(not poly_contains(F, p) for p in tight_pts):
        return False
    if any(not cone_contains(frays, r) for r in tight_rays):
        return False
    return True


def supporting_functional(P: VPolyhedron, F: VPolyhedron) -> tuple | None:
    """A normal whose argmax over P is exactly F, or None if F is not a face."""
    if not is_face(P, F):
        return None
    return _tight_generators(P, F)[2]


def lp_faces(P: VPolyhedron) -> list[VPolyhedron]:
    """All nonempty faces of a pointed polyhedron, each as (vertices, extremal rays).

    Walks upward from the vertices: the smallest face containing a face and
    one more generator is again a face, and every face is reached this way.
    """
    Q = canonical(P)
    if not Q.points:
        raise ValueError("polyhedron has no vertices (not pointed or empty)")
    gens = [("p", v) for v in Q.sorted_points()] + [("r", r) for r in Q.sorted_rays()]
    seen: dict[tuple, VPolyhedron] = {}
    frontier = []
    for v in Q.sorted_points():
        F = VPolyhedron([v])
        seen[F.key()] = F
        frontier.append(F)
    while frontier:
        nxt = []
        for F in frontier:
            for kind, g in gens:
                if (kind == "p" and g in F.points) or (kind == "r" and g in F.rays):
                    continue
                pts = list(F.points) + ([g] if kind == "p" else [])
                rays = list(F.rays) + ([g] if kind == "r" else [])
                center = qmath.add(
                    qmath.scale(Fraction(1, len(pts)), qmath.vsum(pts, Q.dim)),
                    qmath.vsum(rays, Q.dim),
                )
                G = minimal_face(Q, center)
                if G.key() not in seen:
                    seen[G.key()] = G
                    nxt.append(G)
        frontier = nxt
    return sorted(seen.values(), key=lambda F: (len(F.points) + len(F.rays), F.key()))
