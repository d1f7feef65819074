"""Weak faces and positive weak faces of finite rational point sets.

Y is a weak face of X when every relation

    sum_{y in Y} m_y y = sum_{x in X} r_x x,   sum m = sum r,   m, r >= 0

forces r_x = 0 off Y.  It is positive when moreover every such relation has
sum m <= sum r.  Both are decided by exact LPs.
"""

from __future__ import annotations

import random
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import lie, polyhedra, qmath
from .faces import subsets, weyl_functional
from .lie import RootSystem
from .lp import LPProblem, lp_solve
from .weights import HypothesisError, WeightSet, rho, simple_module_weights, transport, truncated_weights

DEFAULT_BOUND = 16
_ONE = Fraction(1)
_ZERO = Fraction(0)


class BoundExceeded(ValueError):
    """The brute-force subset enumeration would exceed the configured bound."""


@dataclass(frozen=True)
class WeakFaceVerdict:
    is_weak: bool
    is_positive: bool | None = None
    # (x0, m coefficients over Y, r coefficients over X) for a violated implication
    counterexample: tuple | None = field(default=None, compare=False)


def _points(X) -> list[tuple]:
    items = X.elements if isinstance(X, WeightSet) else X
    return sorted({tuple(Fraction(v) for v in x) for x in items}, reverse=True)


def _split(X, Y) -> tuple[list, list, list]:
    xs = _points(X)
    ys = _points(Y)
    xset = set(xs)
    bad = [y for y in ys if y not in xset]
    if bad:
        raise ValueError(f"Y is not a subset of X: {tuple(map(str, bad[0]))} not in X")
    yset = set(ys)
    return xs, ys, [x for x in xs if x not in yset]


def _relation_lp(ys: list, xs: list, objective_r: list, sense: str, normalize_r: bool) -> LPProblem:
    """Variables (m_y, r_x) >= 0 with sum m y = sum r x and sum m = 1 (and sum r = 1)."""
    d = len(xs[0])
    A, rel, b = [], [], []
    for k in range(d):
        A.append([y[k] for y in ys] + [-x[k] for x in xs]); rel.append("="); b.append(_ZERO)
    A.append([_ONE] * len(ys) + [_ZERO] * len(xs)); rel.append("="); b.append(_ONE)
    if normalize_r:
        A.append([_ZERO] * len(ys) + [_ONE] * len(xs)); rel.append("="); b.append(_ONE)
    c = [_ZERO] * len(ys) + list(objective_r)
    return LPProblem(A, rel, b, c, sense=sense)


def _weak_part(xs: list, ys: list, outside: list) -> WeakFaceVerdict:
    if not ys or not outside:
        return WeakFaceVerdict(True)
    # One LP for all x0 at once: the largest total weight off Y.
    off = set(outside)
    obj = [_ONE if x in off else _ZERO for x in xs]
    res = lp_solve(_relation_lp(ys, xs, obj, "max", True))
    assert res.optimal, res.status
    if res.value == 0:
        return WeakFaceVerdict(True)
    m, r = res.x[: len(ys)], res.x[len(ys):]
    x0 = next(x for x, rx in zip(xs, r) if rx > 0 and x in off)
    return WeakFaceVerdict(False, False, (x0, tuple(m), tuple(r)))


def is_weak_face(X, Y) -> WeakFaceVerdict:
    xs, ys, outside = _split(X, Y)
    return _weak_part(xs, ys, outside)


def positive_lp_minimum(X, Y) -> Fraction | None:
    """min sum r subject to sum m y = sum r x, sum m = 1; None if Y is empty."""
    xs, ys, _ = _split(X, Y)
    if not ys:
        return None
    res = lp_solve(_relation_lp(ys, xs, [_ONE] * len(xs), "min", False))
    assert res.optimal, res.status
    return res.value


def is_positive_weak_face(X, Y, check: bool = False) -> WeakFaceVerdict:
    xs, ys, outside = _split(X, Y)
    weak = _weak_part(xs, ys, outside)
    if not ys:
        return WeakFaceVerdict(True, True)
    res = lp_solve(_relation_lp(ys, xs, [_ONE] * len(xs), "min", False))
    assert res.optimal, res.status
    positive_relation = res.value >= 1
    witness = weak.counterexample
    if weak.is_weak and not positive_relation:
        witness = (None, tuple(res.x[: len(ys)]), tuple(res.x[len(ys):]))
    verdict = WeakFaceVerdict(weak.is_weak, weak.is_weak and positive_relation, witness)
    if check:
        alt = lemma_positive(xs, ys)
        if alt != verdict.is_positive:
            raise AssertionError(f"positivity criteria disagree for Y={_key(ys)}: LP={verdict.is_positive}, origin test={alt}")
    return verdict


def lemma_positive(X, Y) -> bool:
    """Positivity through the origin: weak in X with 0 adjoined, and 0 not in conv(Y)."""
    xs = _points(X)
    ys = _points(Y)
    if not ys:
        return True
    origin = qmath.zero(len(xs[0]))
    with_origin = sorted(set(xs) | {origin}, reverse=True)
    if not is_weak_face(with_origin, ys).is_weak:
        return False
    return not polyhedra.conv_contains(ys, origin)


@lru_cache(maxsize=1 << 18)
def _weak_mask(xs: tuple, mask: int) -> bool:
    ys = [x for k, x in enumerate(xs) if mask >> k & 1]
    outside = [x for k, x in enumerate(xs) if not mask >> k & 1]
    return _weak_part(list(xs), ys, outside).is_weak


def _subset_of(xs: list, mask: int) -> frozenset:
    return frozenset(x for k, x in enumerate(xs) if mask >> k & 1)


def _check_bound(n: int, bound: int | None) -> None:
    limit = DEFAULT_BOUND if bound is None else bound
    if n > limit:
        raise BoundExceeded(
            f"|X| = {n} exceeds the brute-force bound {limit}; use sampled verification (--seed) instead"
        )


def brute_force_weak_faces(X, bound: int | None = None) -> list[frozenset]:
    """Every nonempty Y of X passing is_weak_face, by exhaustive enumeration."""
    xs = _points(X)
    _check_bound(len(xs), bound)
    out = []
    key = tuple(xs)
    for mask in range(1, 1 << len(xs)):
        if _weak_mask(key, mask):
            out.append(_subset_of(xs, mask))
    return _sort_subsets(out)


def face_traces(X) -> list[frozenset]:
    """{X cap F : F a nonempty face of conv X}, faces found by the LP oracle."""
    xs = _points(X)
    out = set()
    for F in polyhedra.lp_faces(polyhedra.VPolyhedron(xs)):
        # F has no rays, so X cap F = X cap conv(vertices of F)
        verts = F.sorted_points()
        out.add(frozenset(x for x in xs if x in F.points or polyhedra.conv_contains(verts, x)))
    return _sort_subsets(out)


def _sort_subsets(sets: Iterable[frozenset]) -> list[frozenset]:
    return sorted(set(sets), key=lambda s: (len(s), sorted(s, reverse=True)))


def enumerate_weak_faces(X, bound: int | None = None) -> list[frozenset]:
    """Nonempty weak faces of X, asserted equal along two independent routes."""
    brute = brute_force_weak_faces(X, bound)
    traces = face_traces(X)
    if brute != traces:
        extra = set(brute) ^ set(traces)
        raise AssertionError(f"weak-face enumerations disagree on {len(extra)} subsets")
    return brute


# -- theorem reports ------------------------------------------------------


def _key(Y) -> list:
    return [[qmath.fmt(v) for v in y] for y in sorted(Y, reverse=True)]


def _report(theorem: str, instance: str, checked: int, violations: list, **extra) -> dict:
    out = {"theorem": theorem, "instance": instance, "subsets_checked": checked, "violations": violations}
    out.update(extra)
    return out


def _candidate_masks(n: int, sample: int | None, seed: int | None, forced: Iterable[int]) -> list[int]:
    if sample is None:
        return list(range(1, 1 << n))
    rng = random.Random(seed)
    masks = set(forced)
    full = (1 << n) - 1
    while len(masks) < min(sample + len(set(forced)), full):
        masks.add(rng.randint(1, full))
    return sorted(masks)


def verify_T2(
    rs: RootSystem,
    module_weights,
    instance: str = "",
    bound: int | None = None,
    sample: int | None = None,
    seed: int | None = None,
) -> dict:
    """Proper weak <=> positive weak <=> trace of a proper face, over subsets of wt V."""
    xs = _points(module_weights)
    if xs == [qmath.zero(rs.rank)]:
        return _report("T2", instance, 0, [], status="theorem hypothesis excluded (wt V = {0})")
    if sample is None:
        _check_bound(len(xs), bound)
    full = frozenset(xs)
    traces = {Y for Y in face_traces(xs) if Y != full}
    index = {x: k for k, x in enumerate(xs)}
    forced = [sum(1 << index[x] for x in Y) for Y in traces]
    masks = _candidate_masks(len(xs), sample, seed, forced)
    violations = []
    counts = {"weak": 0, "positive": 0, "face_traces": len(traces)}
    checked = 0
    for mask in masks:
        Y = _subset_of(xs, mask)
        if Y == full:
            continue
        checked += 1
        ys = sorted(Y, reverse=True)
        weak = _weak_mask(tuple(xs), mask)
        positive = is_positive_weak_face(xs, ys).is_positive if weak else False
        trace = Y in traces
        counts["weak"] += weak
        counts["positive"] += positive
        if not (weak == positive == trace):
            violations.append({"Y": _key(Y), "weak": weak, "positive": positive, "face_trace": trace})
    return _report("T2", instance, checked, violations, counts=counts)


def predicted_faces(rs: RootSystem, lam: Sequence) -> dict[frozenset, tuple]:
    """w(wt V_{I0}(lam)) for all (w, I0), mapped to one descriptor producing it."""
    out: dict[frozenset, tuple] = {}
    for I0 in subsets(rs.nodes):
        trunc = truncated_weights(rs, lam, I0)
        for w in lie.weyl_subgroup(rs, rs.nodes):
            out.setdefault(transport(rs, w, trunc).elements, (w, I0))
    return out


def verify_T32(
    rs: RootSystem,
    lam: Sequence,
    bound: int | None = None,
    sample: int | None = None,
    seed: int | None = None,
) -> dict:
    """Weak faces of wt V(lam): transported truncations, maximizers of (rho_Y, -)."""
    lam = tuple(Fraction(v) for v in lam)
    if not lie.is_dominant_integral(lam) or not any(lam):
        raise HypothesisError("verify_T32 needs 0 != lambda in P^+")
    V = simple_module_weights(rs, lam)
    xs = _points(V)
    if sample is None:
        _check_bound(len(xs), bound)
    full = frozenset(xs)
    predicted = predicted_faces(rs, lam)
    index = {x: k for k, x in enumerate(xs)}
    forced = [sum(1 << index[x] for x in Y) for Y in predicted if Y]
    masks = _candidate_masks(len(xs), sample, seed, forced)
    violations = []
    weak_count = 0
    checked = 0
    for mask in masks:
        Y = _subset_of(xs, mask)
        checked += 1
        ys = sorted(Y, reverse=True)
        weak = _weak_mask(tuple(xs), mask)
        in_pred = Y in predicted
        rY = rho(ys)
        argmax, top = polyhedra.maximizer_subset(xs, weyl_functional(rs, rY))
        is_max = argmax == Y
        bad = {}
        if not (weak == in_pred == is_max):
            bad.update(weak=weak, transported_truncation=in_pred, maximizer=is_max)
        if weak and Y != full:
            if top <= 0:
                bad["max"] = qmath.fmt(top)
            # dominance of rho_Y is checked on the dominant-chamber representative
            w, I0 = predicted.get(Y, (None, None))
            if w is not None:
                base = rho(truncated_weights(rs, lam, I0), rs.rank)
                if not lie.is_dominant_integral(base):
                    bad["rho_dominant"] = [qmath.fmt(v) for v in base]
        weak_count += weak
        if bad:
            bad["Y"] = _key(Y)
            violations.append(bad)
    return _report(
        "T32",
        f"{rs.cartan_type} lambda=({','.join(qmath.fmt(v) for v in lam)})",
        checked,
        violations,
        weak_faces=weak_count,
        predicted_faces=len(predicted) - (frozenset() in predicted),
    )


def verify_T44(X, bound: int | None = None) -> dict:
    """Positive weak faces are the argmax sets with positive maximum (origin adjoined)."""
    xs = _points(X)
    _check_bound(len(xs), bound)
    origin = qmath.zero(len(xs[0]))
    with_origin = sorted(set(xs) | {origin}, reverse=True)
    positive_traces = set()
    for F in polyhedra.lp_faces(polyhedra.VPolyhedron(with_origin)):
        if origin in F.points or polyhedra.conv_contains(F.sorted_points(), origin):
            continue
        positive_traces.add(frozenset(x for x in xs if x in F.points or polyhedra.conv_contains(F.sorted_points(), x)))
    violations = []
    checked = 0
    for mask in range(1, 1 << len(xs)):
        Y = _subset_of(xs, mask)
        checked += 1
        v = is_positive_weak_face(xs, sorted(Y, reverse=True), check=True)
        if v.is_positive != (Y in positive_traces):
            violations.append({"Y": _key(Y), "positive": v.is_positive})
    return _report("T44", f"|X|={len(xs)}", checked, violations)

