"""Weight supports of simple modules, generalized Verma modules and truncations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import lie, qmath
from .lie import RootSystem, Weight, WeylWord


class HypothesisError(ValueError):
    """An input violates a hypothesis the underlying theorem requires."""


@dataclass(frozen=True)
class WeightSet:
    elements: frozenset
    provenance: str = "ad-hoc"

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.sorted())

    def __len__(self):
        return len(self.elements)

    def __contains__(self, mu):
        return tuple(Fraction(v) for v in mu) in self.elements

    def __eq__(self, other):
        if isinstance(other, WeightSet):
            return self.elements == other.elements
        if isinstance(other, (set, frozenset)):
            return self.elements == frozenset(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.elements)

    def sorted(self) -> list[Weight]:
        # highest first in the lexicographic sense, for stable output
        return sorted(self.elements, reverse=True)

    @classmethod
    def of(cls, weights: Iterable[Sequence], provenance: str = "ad-hoc") -> "WeightSet":
        return cls(frozenset(tuple(Fraction(v) for v in w) for w in weights), provenance)


@dataclass(frozen=True)
class GVMWeights:
    """``transport( finite_part - Z_+ ray_roots )`` as a symbolic weight set.

    ``ray_roots`` hold simple-root coordinates.  ``transport`` is applied to
    the whole set (identity for wt M(lambda, J) itself).
    """

    finite_part: WeightSet
    ray_roots: tuple[tuple[int, ...], ...]
    lam: Weight
    J: frozenset
    transport: WeylWord = field(default_factory=WeylWord)


def _require_dominant(lam: Sequence) -> None:
    if not lie.is_dominant_integral(lam):
        raise HypothesisError(
            f"lambda = {_fmt(lam)} is not dominant integral (lambda in P^+ required)"
        )


def _dominant_in_alpha(rs: RootSystem, subset: Sequence[int], mu: list[Fraction], depth: list[int]) -> tuple[list[Fraction], list[int]]:
    # Reflect mu (omega-coords) into the J-dominant chamber while tracking
    # the simple-root depth below lambda.
    mu = list(mu)
    depth = list(depth)
    while True:
        for j in subset:
            c = mu[j - 1]
            if c < 0:
                alpha = rs.simple_roots[j - 1]
                for k in range(rs.rank):
                    mu[k] -= c * alpha[k]
                # lam - s_j(mu) = (lam - mu) + c alpha_j
                depth[j - 1] += c
                break
        else:
            return mu, depth


def _saturated(rs: RootSystem, lam: Weight, subset: frozenset) -> frozenset:
    """Weights of the simple g_J-module with highest weight lam.

    mu = lam - sum c_j alpha_j is a weight iff its W_J-dominant conjugate
    mu+ satisfies lam - mu+ in Z_+ Delta_J.  Every non-highest weight has a
    weight directly above it, so a downward BFS reaches them all.
    """
    order = sorted(subset)
    lam = tuple(Fraction(v) for v in lam)
    start = (lam, tuple(0 for _ in range(rs.rank)))
    seen = {lam}
    queue = deque([start])
    while queue:
        mu, depth = queue.popleft()
        for j in order:
            alpha = rs.simple_roots[j - 1]
            cand = tuple(m - a for m, a in zip(mu, alpha))
            if cand in seen:
                continue
            cdepth = list(depth)
            cdepth[j - 1] += 1
            _, dom_depth = _dominant_in_alpha(rs, order, list(cand), cdepth)
            if all(d >= 0 for d in dom_depth):
                seen.add(cand)
                queue.append((cand, tuple(cdepth)))
    return frozenset(seen)


@lru_cache(maxsize=4096)
def _finite_part_cached(t: lie.CartanType, lam: Weight, subset: frozenset) -> frozenset:
    return _saturated(lie.build_root_system(t), lam, subset)


def simple_module_weights(rs: RootSystem, lam: Sequence) -> WeightSet:
    """wt V(lam) for dominant integral lam."""
    lam = tuple(Fraction(v) for v in lam)
    lie._check_rank(rs, lam)
    _require_dominant(lam)
    return WeightSet(_finite_part_cached(rs.cartan_type, lam, rs.nodes), f"simple-module{_fmt(lam)}")


def finite_part_weights(rs: RootSystem, lam: Sequence, subset: Iterable[int]) -> WeightSet:
    """wt U(m_J) m_lam, which lies in lam - Z_+ Delta_J.  Requires J within J_lam."""
    lam = tuple(Fraction(v) for v in lam)
    lie._check_rank(rs, lam)
    j = lie._as_subset(rs, subset)
    allowed = lie.j_lambda(lam)
    for i in sorted(j):
        if i not in allowed:
            raise HypothesisError(
                f"J must lie in J_lambda: lambda(h_{i}) = {lam[i - 1]} is not a nonnegative integer"
            )
    return WeightSet(_finite_part_cached(rs.cartan_type, lam, j), f"finite-part{_fmt(lam)}J{_fmt_set(j)}")


def truncated_weights(rs: RootSystem, lam: Sequence, subset: Iterable[int]) -> WeightSet:
    """wt V_{I0}(lam) = wt V(lam) intersected with lam - Q^+_{I0}."""
    lam = tuple(Fraction(v) for v in lam)
    full = simple_module_weights(rs, lam)
    i0 = lie._as_subset(rs, subset)
    kept = []
    for mu in full.elements:
        depth = rs.weight_to_alpha(qmath.sub(lam, mu))
        if all(d == 0 or (k + 1) in i0 for k, d in enumerate(depth)):
            kept.append(mu)
    return WeightSet(frozenset(kept), f"truncation{_fmt(lam)}I0{_fmt_set(i0)}")


def gvm_weights(rs: RootSystem, lam: Sequence, subset: Iterable[int]) -> GVMWeights:
    """Symbolic description of wt M(lam, J)."""
    lam = tuple(Fraction(v) for v in lam)
    j = lie._as_subset(rs, subset)
    finite = finite_part_weights(rs, lam, j)
    rays = tuple(r.alpha for r in rs.positive_roots_outside(j))
    return GVMWeights(finite, rays, lam, j)


def gvm_contains(rs: RootSystem, gw: GVMWeights, mu: Sequence) -> bool:
    """Decide mu in transport(finite_part - Z_+ ray_roots) exactly."""
    mu = tuple(Fraction(v) for v in mu)
    lie._check_rank(rs, mu)
    mu = lie.apply_weyl(rs, gw.transport.inverse(), mu)
    rays = sorted(set(gw.ray_roots), key=lambda r: (-sum(r), r))
    for nu in gw.finite_part.elements:
        gap = rs.weight_to_alpha(qmath.sub(nu, mu))
        if any(g.denominator != 1 or g < 0 for g in gap):
            continue
        if _in_integer_cone(tuple(int(g) for g in gap), tuple(rays)):
            return True
    return False


def _in_integer_cone(target: tuple[int, ...], rays: tuple[tuple[int, ...], ...]) -> bool:
    # Depth-first over rays; every ray has nonnegative coordinates summing
    # to at least 1, so the budget `target` bounds each multiplicity.
    @lru_cache(maxsize=None)
    def go(k: int, rem: tuple[int, ...]) -> bool:
        if not any(rem):
            return True
        if k == len(rays):
            return False
        r = rays[k]
        mult = min((rem[i] // c for i, c in enumerate(r) if c > 0), default=0)
        for m in range(mult, -1, -1):
            nxt = tuple(x - m * c for x, c in zip(rem, r))
            if go(k + 1, nxt):
                return True
        return False

    return go(0, target)


def rho(weights: Iterable[Sequence], rank: int | None = None) -> Weight:
    """Unnormalized sum of a finite weight set."""
    items = list(weights.elements if isinstance(weights, WeightSet) else weights)
    if not items:
        if rank is None:
            raise ValueError("rank needed for the sum of an empty set")
        return qmath.zero(rank)
    return qmath.vsum(items, len(items[0]))


def transport(rs: RootSystem, w: WeylWord, ws: WeightSet, provenance: str | None = None) -> WeightSet:
    return WeightSet(
        frozenset(lie.apply_weyl(rs, w, mu) for mu in ws.elements),
        provenance or f"{ws.provenance}@{w}",
    )


def direct_sum_weights(rs: RootSystem, lams: Iterable[Sequence]) -> WeightSet:
    """wt of V(l1) + V(l2) + ... (union of the weight supports)."""
    out: set = set()
    tags = []
    for lam in lams:
        ws = simple_module_weights(rs, lam)
        out |= ws.elements
        tags.append(_fmt(tuple(Fraction(v) for v in lam)))
    return WeightSet(frozenset(out), "direct-sum" + "+".join(tags))


def _fmt(mu) -> str:
    return "(" + ",".join(qmath.fmt(v) for v in mu) + ")"


def _fmt_set(s) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"
