from __future__ import annotations

import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

import oracles
from weylface import lie, qmath
from weylface.lie import WeylWord
from weylface.weights import (
    GVMWeights,
    HypothesisError,
    WeightSet,
    direct_sum_weights,
    finite_part_weights,
    gvm_contains,
    gvm_weights,
    rho,
    simple_module_weights,
    transport,
    truncated_weights,
)


def subsets(rs):
    nodes = sorted(rs.nodes)
    return [frozenset(c) for k in range(len(nodes) + 1) for c in itertools.combinations(nodes, k)]


def grid(rank, total):
    return [lam for lam in itertools.product(range(total + 1), repeat=rank) if sum(lam) <= total]


def test_simple_module_examples():
    a1 = lie.build_root_system("A1")
    assert simple_module_weights(a1, (2,)) == {(2,), (0,), (-2,)}
    a2 = lie.build_root_system("A2")
    adj = simple_module_weights(a2, (1, 1))
    assert len(adj) == 7
    assert adj.elements == {r.weight for r in a2.positive_roots} | {qmath.neg(r.weight) for r in a2.positive_roots} | {(0, 0)}
    a1_, a2_ = a2.simple_roots
    lam = (F(1), F(0))
    assert simple_module_weights(a2, lam) == {lam, qmath.sub(lam, a1_), qmath.sub(qmath.sub(lam, a1_), a2_)}


def test_simple_module_requires_dominant():
    a2 = lie.build_root_system("A2")
    with pytest.raises(HypothesisError):
        simple_module_weights(a2, (1, -1))
    with pytest.raises(HypothesisError):
        simple_module_weights(a2, (F(1, 2), 0))


@pytest.mark.parametrize("t,total", [("A1", 4), ("A2", 4), ("B2", 4), ("G2", 3), ("A3", 3), ("C3", 2)])
def test_saturation_matches_freudenthal(t, total):
    rs = lie.build_root_system(t)
    for lam in grid(rs.rank, total):
        mult = oracles.freudenthal(t, lam)
        assert simple_module_weights(rs, lam).elements == set(mult), lam
        assert sum(mult.values()) == oracles.weyl_dimension(t, lam)


def test_finite_part_examples():
    a2 = lie.build_root_system("A2")
    lam = (F(1), F(1))
    assert finite_part_weights(a2, lam, set()) == {lam}
    assert finite_part_weights(a2, lam, {1}) == {lam, qmath.sub(lam, a2.simple_roots[0])}
    assert finite_part_weights(a2, lam, {1, 2}) == simple_module_weights(a2, lam)


def test_finite_part_names_offending_index():
    a2 = lie.build_root_system("A2")
    with pytest.raises(HypothesisError, match="h_2"):
        finite_part_weights(a2, (1, F(-1, 2)), {1, 2})
    # non-integral outside J is fine
    assert finite_part_weights(a2, (1, F(-1, 2)), {1}) == {(1, F(-1, 2)), (-1, F(1, 2))}


def test_gvm_contains_examples():
    a1 = lie.build_root_system("A1")
    verma = gvm_weights(a1, (0,), set())
    alpha = a1.simple_roots[0]
    for k in range(6):
        assert gvm_contains(a1, verma, qmath.scale(-k, alpha))
    assert not gvm_contains(a1, verma, (1,))
    a2 = lie.build_root_system("A2")
    lam = (F(1), F(1))
    gw = gvm_weights(a2, lam, {1})
    assert set(gw.ray_roots) == {(0, 1), (1, 1)}
    assert gvm_contains(a2, gw, lam)
    assert gvm_contains(a2, gw, qmath.sub(lam, a2.simple_roots[1]))
    assert not gvm_contains(a2, gw, qmath.add(lam, a2.simple_roots[1]))


def test_truncation_examples():
    a2 = lie.build_root_system("A2")
    assert truncated_weights(a2, (1, 1), {1, 2}) == simple_module_weights(a2, (1, 1))
    assert truncated_weights(a2, (1, 1), {1}) == {(1, 1), (-1, 2)}
    assert truncated_weights(a2, (1, 0), {2}) == {(1, 0)}


def test_rho_examples():
    a2 = lie.build_root_system("A2")
    assert rho(simple_module_weights(a2, (1, 1))) == (0, 0)
    assert rho(truncated_weights(a2, (1, 1), {1})) == (0, 3)
    assert rho([(2, 5)]) == (2, 5)
    assert rho([], 2) == (0, 0)


@pytest.mark.parametrize("t", ["A1", "A2", "B2", "G2", "A3", "B3"])
def test_truncation_equals_finite_part_and_support_reduction(t):
    rs = lie.build_root_system(t)
    for lam in grid(rs.rank, 2):
        if not any(lam):
            continue
        il = lie.i_lambda(rs, lam)
        for J in subsets(rs):
            tr = truncated_weights(rs, lam, J)
            assert tr == finite_part_weights(rs, lam, J)
            assert tr == truncated_weights(rs, lam, J & il)


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_finite_part_is_wj_stable_and_gvm_wj_invariant(t):
    rs = lie.build_root_system(t)
    lam = (F(2), F(-3, 2))
    J = {1}
    fp = finite_part_weights(rs, lam, J)
    gw = gvm_weights(rs, lam, J)
    for w in lie.weyl_subgroup(rs, J):
        assert transport(rs, w, fp) == fp
    probes = [qmath.sub(lam, rs.alpha_to_weight(c)) for c in itertools.product(range(3), repeat=2)]
    for mu in probes:
        for w in lie.weyl_subgroup(rs, J):
            assert gvm_contains(rs, gw, mu) == gvm_contains(rs, gw, lie.apply_weyl(rs, w, mu))


def test_transported_gvm_membership():
    a2 = lie.build_root_system("A2")
    gw = gvm_weights(a2, (1, 1), {1})
    moved = GVMWeights(gw.finite_part, gw.ray_roots, gw.lam, gw.J, WeylWord((1,)))
    mu = qmath.sub((F(1), F(1)), a2.simple_roots[1])
    assert gvm_contains(a2, moved, lie.apply_weyl(a2, WeylWord((1,)), mu))


def test_weight_set_behaviour():
    ws = WeightSet.of([(1, 0), (0, 1), (1, 0)], "ad-hoc")
    assert len(ws) == 2
    assert (1, 0) in ws and (F(0), F(1)) in ws
    assert ws.sorted() == [(1, 0), (0, 1)]
    assert list(ws) == ws.sorted()
    assert ws == {(1, 0), (0, 1)}


def test_direct_sum_is_union():
    a2 = lie.build_root_system("A2")
    ds = direct_sum_weights(a2, [(0, 2), (1, 1)])
    assert ds.elements == simple_module_weights(a2, (0, 2)).elements | simple_module_weights(a2, (1, 1)).elements


@given(st.sampled_from(["A2", "B2", "G2"]), st.integers(0, 3), st.integers(0, 3))
def test_simple_module_weights_are_w_stable_and_below_lambda(t, a, b):
    rs = lie.build_root_system(t)
    lam = (F(a), F(b))
    ws = simple_module_weights(rs, lam)
    assert lam in ws
    for mu in ws.elements:
        depth = rs.weight_to_alpha(qmath.sub(lam, mu))
        assert all(d >= 0 and d.denominator == 1 for d in depth)
        for i in rs.nodes:
            assert lie.reflect(rs, i, mu) in ws
