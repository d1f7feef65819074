from __future__ import annotations

import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

import oracles
from weylface import lie, qmath
from weylface.lie import CartanType, WeylWord


SMALL = ["A1", "A2", "B2", "G2", "A3", "B3", "C3"]


def test_cartan_type_parse_and_rank_rules():
    assert CartanType.parse("a3") == CartanType("A", 3)
    assert str(CartanType.parse("G2")) == "G2"
    for bad in ["B1", "D2", "E5", "F3", "G3", "A0", "X2", "A", "3A"]:
        with pytest.raises(ValueError):
            CartanType.parse(bad)


@pytest.mark.parametrize("t", sorted(oracles.POSITIVE_ROOTS))
def test_positive_root_counts(t):
    rs = lie.build_root_system(t)
    assert len(rs.positive_roots) == oracles.POSITIVE_ROOTS[t]
    assert all(m > 0 for m in qmath.leading_minors(rs.sym_form))


@pytest.mark.parametrize("t", SMALL)
def test_roots_match_root_string_oracle(t):
    rs = lie.build_root_system(t)
    assert [list(r) for r in rs.cartan_matrix] == oracles.CARTAN[t]
    assert {r.alpha for r in rs.positive_roots} == oracles.positive_roots_alpha(oracles.CARTAN[t])
    for r in rs.positive_roots:
        assert r.weight == rs.alpha_to_weight(r.alpha)


@pytest.mark.parametrize("t", [t for t in SMALL if t != "A1"])
def test_symmetrized_form_matches_euclidean_model(t):
    rs = lie.build_root_system(t)
    assert [list(r) for r in rs.sym_form] == oracles.euclid_gram(t)


@pytest.mark.parametrize("t", SMALL + ["D4", "F4"])
def test_alpha_omega_duality(t):
    rs = lie.build_root_system(t)
    n = rs.rank
    omegas = [tuple(F(int(i == j)) for j in range(n)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = 2 * lie.inner_product(rs, rs.simple_roots[i], omegas[j])
            assert lhs == (rs.sym_form[i][i] if i == j else 0)


def test_inner_product_examples():
    a1 = lie.build_root_system("A1")
    assert lie.inner_product(a1, (1,), (1,)) == F(1, 2)
    a2 = lie.build_root_system("A2")
    assert lie.inner_product(a2, (1, 0), (0, 1)) == F(1, 3)
    assert lie.inner_product(a2, (1, 0), (1, 0)) == F(2, 3)
    with pytest.raises(ValueError):
        lie.inner_product(a2, (1, 0), (1,))


def test_g2_length_ratio_and_a1():
    g2 = lie.build_root_system("G2")
    lengths = sorted({lie.inner_product(g2, r.weight, r.weight) for r in g2.positive_roots})
    assert lengths[1] / lengths[0] == 3
    a1 = lie.build_root_system("A1")
    assert a1.cartan_matrix == ((2,),) and a1.sym_form == ((2,),)


def test_apply_weyl_examples():
    a1 = lie.build_root_system("A1")
    assert lie.apply_weyl(a1, WeylWord((1,)), (1,)) == (-1,)
    a2 = lie.build_root_system("A2")
    assert lie.apply_weyl(a2, WeylWord((1,)), (0, 1)) == (0, 1)
    alpha1, alpha2 = a2.simple_roots
    # by hand: s2(a1) = a1 + a2, then s1(a1 + a2) = a2
    assert lie.apply_weyl(a2, WeylWord((1, 2)), alpha1) == alpha2
    assert lie.apply_weyl(a2, WeylWord((1, 2, 1)), alpha1) == qmath.neg(alpha2)
    assert lie.apply_weyl(a2, WeylWord(), (3, -7)) == (3, -7)


@pytest.mark.parametrize("t", list(oracles.WEYL_ORDER))
def test_weyl_group_orders(t):
    rs = lie.build_root_system(t)
    group = lie.weyl_subgroup(rs)
    assert len(group) == oracles.WEYL_ORDER[t]
    keys = {lie.weyl_matrix(rs, w) for w in group}
    assert len(keys) == len(group)
    assert WeylWord() in group


def test_weyl_subgroup_bound():
    rs = lie.build_root_system("B3")
    with pytest.raises(lie.WeylBoundExceeded) as info:
        lie.weyl_subgroup(rs, rs.nodes, bound=10)
    assert info.value.bound == 10
    assert lie.weyl_subgroup(rs, frozenset()) == [WeylWord()]


def test_longest_element():
    a1 = lie.build_root_system("A1")
    assert lie.longest_element(a1, {1}).letters == (1,)
    a2 = lie.build_root_system("A2")
    w0 = lie.longest_element(a2, {1, 2})
    assert len(w0) == 3
    for r in a2.positive_roots:
        assert lie.is_positive_root(a2, qmath.neg(lie.apply_weyl(a2, w0, r.weight)))
    assert lie.longest_element(a2, set()) == WeylWord()


def test_dominant_representative_examples():
    a1 = lie.build_root_system("A1")
    nu, w = lie.dominant_representative(a1, {1}, (-3,))
    assert nu == (3,) and w.letters == (1,)
    a2 = lie.build_root_system("A2")
    nu, w = lie.dominant_representative(a2, {1, 2}, (-1, -1))
    assert nu == (1, 1) and len(w) == 3
    assert lie.dominant_representative(a2, {1, 2}, (2, 0)) == ((2, 0), WeylWord())


def test_support_sets():
    a2 = lie.build_root_system("A2")
    assert lie.support((1, 0)) == {1}
    assert lie.j_lambda((1, 0)) == {1, 2}
    assert lie.i_lambda(a2, (1, 0)) == {1, 2}
    assert lie.j_lambda((F(1, 2), -1)) == frozenset()
    d4 = lie.build_root_system("D4")
    assert lie.i_lambda(d4, (0, 0, 0, 1)) == {1, 2, 3, 4}
    assert lie.support((0, 0)) == frozenset() and lie.i_lambda(a2, (0, 0)) == frozenset()
    assert lie.j_lambda((0, 0)) == {1, 2}


def test_components_of_disconnected_subsets():
    a3 = lie.build_root_system("A3")
    assert sorted(map(sorted, a3.components())) == [[1, 2, 3]]


@pytest.mark.parametrize("t", SMALL)
def test_lemma_positive_images(t):
    # for w in W_J and i outside J, w(alpha_i) stays positive
    rs = lie.build_root_system(t)
    for J in [frozenset(c) for k in range(rs.rank + 1) for c in itertools.combinations(sorted(rs.nodes), k)]:
        for w in lie.weyl_subgroup(rs, J):
            for i in rs.nodes - J:
                assert lie.is_positive_root(rs, lie.apply_weyl(rs, w, rs.simple_roots[i - 1]))


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "A3"])
def test_orbit_sums_vanish(t):
    rs = lie.build_root_system(t)
    for mu in [(1,) + (0,) * (rs.rank - 1), (1,) * rs.rank, (F(1, 2),) + (F(-3, 2),) * (rs.rank - 1)]:
        orb = lie.orbit(rs, rs.nodes, mu)
        assert qmath.vsum(orb, rs.rank) == qmath.zero(rs.rank)


def rational():
    return st.fractions(min_value=-5, max_value=5, max_denominator=4)


@given(st.sampled_from(["A2", "B2", "G2", "A3"]), st.data())
def test_weyl_action_preserves_form(t, data):
    rs = lie.build_root_system(t)
    mu = tuple(data.draw(rational()) for _ in range(rs.rank))
    nu = tuple(data.draw(rational()) for _ in range(rs.rank))
    group = lie.weyl_subgroup(rs)
    w = group[data.draw(st.integers(0, len(group) - 1))]
    assert lie.inner_product(rs, lie.apply_weyl(rs, w, mu), lie.apply_weyl(rs, w, nu)) == lie.inner_product(rs, mu, nu)
    assert lie.apply_weyl(rs, w.inverse(), lie.apply_weyl(rs, w, mu)) == mu


@given(st.sampled_from(["A2", "B2", "G2", "A3"]), st.data())
def test_dominant_representative_is_unique_chamber_point(t, data):
    rs = lie.build_root_system(t)
    J = frozenset(i for i in rs.nodes if data.draw(st.booleans()))
    nu = tuple(data.draw(rational()) for _ in range(rs.rank))
    rep, w = lie.dominant_representative(rs, J, nu)
    assert set(w.letters) <= J
    assert lie.apply_weyl(rs, w, nu) == rep
    chamber = {mu for mu in lie.orbit(rs, J, nu) if all(mu[j - 1] >= 0 for j in J)}
    assert chamber == {rep}


def test_weyl_bound_environment_override(monkeypatch):
    rs = lie.build_root_system("A3")
    monkeypatch.setenv("WEYLFACE_MAX_WEYL", "5")
    with pytest.raises(lie.WeylBoundExceeded, match="WEYLFACE_MAX_WEYL"):
        lie.weyl_subgroup(rs)
    monkeypatch.setenv("WEYLFACE_MAX_WEYL", "zero")
    with pytest.raises(lie.RootSystemError):
        lie.max_weyl()
    monkeypatch.delenv("WEYLFACE_MAX_WEYL")
    assert len(lie.weyl_subgroup(rs)) == 24
