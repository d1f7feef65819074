"""Verification sweeps that cross-check each classification result against an
independent oracle over small ranks.

Every suite returns a report dict ``{"suite", "types", "max_coord",
"reports", "violations"}``; ``reports`` holds per-instance entries in the
``{theorem, instance, subsets_checked, violations}`` shape.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import faces, lie, polyhedra, qmath, weakface
from .lie import RootSystem
from .lp import LPProblem, check_certificate, lp_solve
from .weights import direct_sum_weights, rho, simple_module_weights, truncated_weights

SAMPLE_SIZE = 2000


def dominant_grid(rank: int, max_coord: int, include_zero: bool = False) -> list[tuple]:
    """Dominant integral weights with coordinate sum at most ``max_coord``."""
    out = []
    for lam in itertools.product(range(max_coord + 1), repeat=rank):
        if sum(lam) <= max_coord and (include_zero or any(lam)):
            out.append(tuple(Fraction(v) for v in lam))
    return out


def _fmt_lam(lam) -> str:
    return "(" + ",".join(qmath.fmt(v) for v in lam) + ")"


def _entry(theorem: str, instance: str, checked: int, violations: list, **extra) -> dict:
    out = {"theorem": theorem, "instance": instance, "subsets_checked": checked, "violations": violations}
    out.update(extra)
    return out


def _wrap(suite: str, types: Sequence[str], max_coord: int, reports: list[dict]) -> dict:
    return {
        "suite": suite,
        "types": [str(t) for t in types],
        "max_coord": max_coord,
        "reports": reports,
        "violations": sum(len(r["violations"]) for r in reports),
    }


def _sampling(n: int, seed: int | None) -> dict:
    if n <= weakface.DEFAULT_BOUND:
        return {}
    return {"sample": SAMPLE_SIZE, "seed": 0 if seed is None else seed}


def suite_T2(types: Sequence[str], max_coord: int, seed: int | None = None) -> dict:
    reports = []
    for t in types:
        rs = lie.build_root_system(t)
        for lam in dominant_grid(rs.rank, max_coord):
            V = simple_module_weights(rs, lam)
            reports.append(
                weakface.verify_T2(rs, V, instance=f"{t} V{_fmt_lam(lam)}", **_sampling(len(V), seed))
            )
        if str(rs.cartan_type) == "A2":
            V = direct_sum_weights(rs, [(0, 2), (1, 1)])
            reports.append(weakface.verify_T2(rs, V, instance="A2 V(0,2)+V(1,1)", **_sampling(len(V), seed)))
    return _wrap("T2", types, max_coord, reports)


def suite_T32(types: Sequence[str], max_coord: int, seed: int | None = None) -> dict:
    reports = []
    for t in types:
        rs = lie.build_root_system(t)
        for lam in dominant_grid(rs.rank, max_coord):
            n = len(simple_module_weights(rs, lam))
            reports.append(weakface.verify_T32(rs, lam, **_sampling(n, seed)))
    return _wrap("T32", types, max_coord, reports)


def suite_T33(types: Sequence[str], max_coord: int, seed: int | None = None) -> dict:
    reports = []
    for t in types:
        rs = lie.build_root_system(t)
        subs = faces.subsets(rs.nodes)
        for lam in dominant_grid(rs.rank, max_coord):
            violations = []
            equal_pairs = 0
            for I1, I2 in itertools.combinations_with_replacement(subs, 2):
                try:
                    equal_pairs += faces.faces_equal(rs, lam, I1, I2).equal
                except faces.TheoremViolation as exc:
                    violations.append({"I1": sorted(I1), "I2": sorted(I2), "error": str(exc)})
            pairs = len(subs) * (len(subs) + 1) // 2
            reports.append(
                _entry("T33", f"{t} lambda={_fmt_lam(lam)}", pairs, violations, equal_pairs=equal_pairs)
            )
    return _wrap("T33", types, max_coord, reports)


def suite_tvin(types: Sequence[str], max_coord: int, seed: int | None = None) -> dict:
    """Descriptor enumeration of faces against the LP face oracle."""
    reports = []
    for t in types:
        rs = lie.build_root_system(t)
        for lam in dominant_grid(rs.rank, max_coord, include_zero=True):
            for J in faces.subsets(rs.nodes):
                found = {F.key() for F in faces.enumerate_faces(rs, lam, J)}
                oracle = faces.lp_face_set(faces.gvm_hull(rs, lam, J))
                violations = []
                if found != oracle:
                    violations.append(
                        {"missing": len(oracle - found), "spurious": len(found - oracle)}
                    )
                reports.append(
                    _entry("faces", f"{t} lambda={_fmt_lam(lam)} J={sorted(J)}", len(oracle), violations)
                )
    return _wrap("tvin", types, max_coord, reports)


def suite_P51(types: Sequence[str], max_coord: int, seed: int | None = None) -> dict:
    reports = []
    for t in types:
        rs = lie.build_root_system(t)
        for lam in dominant_grid(rs.rank, max_coord):
            violations = []
            subs = faces.subsets(rs.nodes)
            for J in subs:
                try:
                    faces.truncation_is_proper(rs, lam, J, check=True)
                except faces.TheoremViolation as exc:
                    violations.append({"J": sorted(J), "error": str(exc)})
            reports.append(_entry("P51", f"{t} lambda={_fmt_lam(lam)}", len(subs), violations))
    return _wrap("P51", types, max_coord, reports)


def orbit_partition(rs: RootSystem, J: Iterable[int], Y: Iterable) -> list[frozenset]:
    """W_J-orbits partitioning a W_J-stable set."""
    rest = set(Y)
    out = []
    while rest:
        mu = max(rest)
        orb = lie.orbit(rs, J, mu)
        out.append(orb)
        rest -= orb
    return sorted(out, key=lambda o: sorted(o, reverse=True), reverse=True)


def suite_P53(types: Sequence[str], max_coord: int, seed: int | None = None, max_orbits: int = 10) -> dict:
    """Sums over W_J-stable subsets of a truncation, and the center linear system."""
    reports = []
    for t in types:
        rs = lie.build_root_system(t)
        for lam in dominant_grid(rs.rank, max_coord):
            for J in faces.subsets(rs.nodes):
                trunc = truncated_weights(rs, lam, J)
                rho_lj = rho(trunc, rs.rank)
                orbits = orbit_partition(rs, J, trunc.elements)
                violations = []
                checked = 0
                for k in range(1, min(len(orbits), max_orbits) + 1):
                    for combo in itertools.combinations(orbits[:max_orbits], k):
                        Y = frozenset().union(*combo)
                        checked += 1
                        lhs = qmath.scale(len(Y), rho_lj)
                        rhs = qmath.scale(len(trunc), rho(Y, rs.rank))
                        if lhs != rhs:
                            violations.append({"Y": [[qmath.fmt(v) for v in y] for y in sorted(Y)]})
                center = faces.face_center(rs, lam, J)
                for j in J:
                    if lie.inner_product(rs, center, rs.simple_roots[j - 1]) != 0:
                        violations.append({"center_not_invariant": j})
                if not polyhedra.conv_contains(trunc.elements, center):
                    violations.append({"center_outside": [qmath.fmt(v) for v in center]})
                if J:
                    coeffs = faces.solve_center_system(rs, lam, J)
                    if faces.center_from_coefficients(rs, lam, coeffs) != center:
                        violations.append({"center_system": {str(j): qmath.fmt(x) for j, x in coeffs.items()}})
                elif center != lam:
                    violations.append({"center_empty_J": [qmath.fmt(v) for v in center]})
                reports.append(_entry("P53", f"{t} lambda={_fmt_lam(lam)} J={sorted(J)}", checked, violations))
    return _wrap("P53", types, max_coord, reports)


def random_rational_weight(rng: random.Random, rank: int, span: int = 4, den: int = 3) -> tuple:
    return tuple(Fraction(rng.randint(-span * den, span * den), rng.randint(1, den)) for _ in range(rank))


def suite_L3(types: Sequence[str], max_coord: int, seed: int | None = None, samples: int = 50) -> dict:
    """Maximizer map through the dominant chamber against direct argmax."""
    rng = random.Random(0 if seed is None else seed)
    reports = []
    for t in types:
        rs = lie.build_root_system(t)
        lams = dominant_grid(rs.rank, max_coord)
        violations = []
        nus = [qmath.zero(rs.rank)] + [random_rational_weight(rng, rs.rank) for _ in range(samples)]
        for nu in nus:
            lam = lams[rng.randrange(len(lams))]
            try:
                faces.maximizer_face(rs, lam, nu, check=True)
            except faces.TheoremViolation as exc:
                violations.append({"lambda": _fmt_lam(lam), "nu": _fmt_lam(nu), "error": str(exc)})
        reports.append(_entry("L3", f"{t} {len(nus)} functionals", len(nus), violations))
    return _wrap("L3", types, max_coord, reports)


def suite_L22(types: Sequence[str], max_coord: int = 0, seed: int | None = None) -> dict:
    """w(alpha_i) is a positive root for w in W_J and i outside J."""
    reports = []
    for t in types:
        rs = lie.build_root_system(t)
        violations = []
        checked = 0
        for J in faces.subsets(rs.nodes):
            group = lie.weyl_subgroup(rs, J)
            for i in sorted(rs.nodes - J):
                for w in group:
                    checked += 1
                    image = lie.apply_weyl(rs, w, rs.simple_roots[i - 1])
                    if not lie.is_positive_root(rs, image):
                        violations.append({"J": sorted(J), "i": i, "w": list(w.letters)})
        reports.append(_entry("L22", str(t), checked, violations))
    return _wrap("L22", types, max_coord, reports)


def suite_T44(types: Sequence[str], max_coord: int, seed: int | None = None, limit: int = 9) -> dict:
    """Positive weak faces versus faces avoiding the origin, on wt V and a translate."""
    reports = []
    for t in types:
        rs = lie.build_root_system(t)
        for lam in dominant_grid(rs.rank, max_coord):
            V = simple_module_weights(rs, lam)
            if len(V) > limit:
                continue
            for label, X in (("", V.elements), ("+lambda", {qmath.add(x, lam) for x in V.elements})):
                r = weakface.verify_T44(X)
                r["instance"] = f"{t} wt V{_fmt_lam(lam)}{label}"
                reports.append(r)
    return _wrap("T44", types, max_coord, reports)


def _box(rank: int, radius: int) -> list[tuple]:
    return [tuple(Fraction(v) for v in p) for p in itertools.product(range(-radius, radius + 1), repeat=rank)]


def suite_kernel(types: Sequence[str], max_coord: int, seed: int | None = None) -> dict:
    """Exact LP certificates and Caratheodory support on a fixed family of LPs.

    The family: hull membership of every lattice point in a box against
    wt V(lam); the maximum weight one generator can carry in each such
    representation; and the maximizers of each coordinate over the hull.
    """
    reports = []
    for t in types:
        rs = lie.build_root_system(t)
        for lam in dominant_grid(rs.rank, max_coord):
            pts = simple_module_weights(rs, lam).sorted()
            d = rs.rank
            violations = []
            solved = 0
            positives = 0
            radius = int(max(abs(v) for p in pts for v in p)) + 1
            for x in _box(d, radius):
                member = polyhedra.conv_contains(pts, x)
                if member:
                    positives += 1
                    if member.support > d + 1:
                        violations.append({"x": [qmath.fmt(v) for v in x], "support": member.support})
                A = [[p[k] for p in pts] for k in range(d)] + [[Fraction(1)] * len(pts)]
                b = list(x) + [Fraction(1)]
                for k in range(min(len(pts), 3)):
                    c = [Fraction(int(i == k)) for i in range(len(pts))]
                    problem = LPProblem(A, ["="] * (d + 1), b, c)
                    res = lp_solve(problem)
                    solved += 1
                    if res.feasible != bool(member):
                        violations.append({"x": [qmath.fmt(v) for v in x], "status": res.status})
                    elif res.optimal and not check_certificate(problem, res):
                        violations.append({"x": [qmath.fmt(v) for v in x], "certificate": False})
            for k in range(d):
                for sense in ("max", "min"):
                    # optimize coordinate k over conv(pts), written in barycentric variables
                    c = [p[k] for p in pts]
                    problem = LPProblem([[Fraction(1)] * len(pts)], ["="], [Fraction(1)], c, sense=sense)
                    res = lp_solve(problem)
                    solved += 1
                    want = max(c) if sense == "max" else min(c)
                    if not res.optimal or res.value != want or not check_certificate(problem, res):
                        violations.append({"coordinate": k + 1, "sense": sense})
            reports.append(
                _entry("kernel", f"{t} lambda={_fmt_lam(lam)}", solved, violations, positive_memberships=positives)
            )
    return _wrap("kernel", types, max_coord, reports)


SUITES: dict[str, tuple[Callable[..., dict], tuple[str, ...], int]] = {
    "T2": (suite_T2, ("A1", "A2", "B2"), 2),
    "T32": (suite_T32, ("A1", "A2", "B2"), 2),
    "T33": (suite_T33, ("A2", "B2", "A3"), 2),
    "tvin": (suite_tvin, ("A1", "A2", "B2", "G2"), 3),
    "P51": (suite_P51, ("A1", "A2", "B2", "G2", "A3"), 2),
    "P53": (suite_P53, ("A1", "A2", "B2", "G2"), 2),
    "L3": (suite_L3, ("A1", "A2", "B2"), 2),
    "L22": (suite_L22, ("A1", "A2", "B2", "G2", "A3", "B3", "C3"), 0),
    "T44": (suite_T44, ("A1", "A2", "B2"), 2),
    "kernel": (suite_kernel, ("A1", "A2", "B2", "G2"), 2),
}


def run_suite(name: str, types: Sequence[str] | None = None, max_coord: int | None = None, seed: int | None = None) -> dict:
    if name not in SUITES:
        raise KeyError(name)
    fn, default_types, default_max = SUITES[name]
    types = tuple(types) if types else default_types
    return fn(types, default_max if max_coord is None else max_coord, seed)
