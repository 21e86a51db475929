import math

import pytest


def test_profile_and_roots(core):
    p = core.RankProfile(2, 2, 4.0)
    assert p.q == 2 and p.d == 2
    assert p.gamma == pytest.approx(4.0)
    m = p.multiplicities
    assert (m.m1, m.m2, m.m3) == (4.0, 1.0, 2.0)
    assert p.rho() == pytest.approx([5.0, 3.0])
    assert p.is_geometric

    with pytest.raises(ValueError):
        core.RankProfile(2, 2, 3.0)  # mu must exceed gamma - 1


def test_order_and_orbits(core):
    assert core.dominance_leq([0, 0], [2, 0])
    assert not core.dominance_leq([2, 2], [2, 0])
    assert core.lower_set([4], 2) == [[0], [2], [4]]
    assert sorted(core.weyl_orbit([2, 0])) == [[-2, 0], [0, -2], [0, 2], [2, 0]]


def test_worked_polynomial_constants(core):
    engine = core.JacobiEngine(core.RankProfile(1, 2, 2.0))
    poly = engine.polynomial([2])
    assert poly.coeffs[0] == pytest.approx(2.0 / 3.0, abs=1e-9)
    assert poly.c_value == pytest.approx(0.375, abs=1e-12)
    assert poly.norm_sq == pytest.approx(0.5, abs=1e-9)
    assert poly.plancherel_weight == pytest.approx(2.0, abs=1e-8)
    assert poly.eval_R([0.0]) == pytest.approx(1.0, abs=1e-9)
    assert poly.eval_R([math.pi / 4]) == pytest.approx(0.25, abs=1e-12)


def test_convolution_neutrality_and_probability(core):
    p = core.RankProfile(2, 2, 4.0)
    measure = core.convolve([0.9, 0.4], [0.0, 0.0], p, n_samples=200, seed=3)
    assert all(atom == [0.9, 0.4] for atom in measure.atoms)
    assert sum(measure.weights) == pytest.approx(1.0, abs=1e-12)

    generic = core.convolve([0.9, 0.4], [0.5, 0.2], p, n_samples=500, seed=4)
    assert all(w >= 0 for w in generic.weights)
    assert all(1.4 + 1e-12 >= a[0] >= a[1] >= 0 for a in generic.atoms)


def test_product_formula_zscore(core):
    p = core.RankProfile(1, 2, 2.0)
    engine = core.JacobiEngine(p)
    poly = engine.polynomial([2])
    rep = core.product_formula_check(poly, [math.pi / 4], [math.pi / 4], p,
                                     n_samples=20000, seed=11)
    assert rep.lhs == pytest.approx(1.0 / 16.0, abs=1e-12)
    assert rep.z_score <= 4.0


def test_kappa_and_classical(core):
    est, se = core.estimate_kappa(core.RankProfile(1, 2, 2.0), 100000, seed=7)
    assert abs(est - math.pi) <= 3 * se

    assert core.classical_R(1.0, 0.0, 0, 0.3) == 1.0
    assert core.classical_R(1.0, 0.0, 1, 1.0) == pytest.approx(1.0)

    m = core.rank1_param_map(core.RankProfile(1, 2, 2.0))
    assert (m.alpha, m.beta) == (1.0, 0.0)

    prod = core.koornwinder_product(1.0, 0.0, 1, 0.0, 0.0)
    assert prod == pytest.approx(1.0 / 16.0, abs=1e-9)


def test_determinism(core):
    p = core.RankProfile(2, 1, 2.2)
    a = core.convolve([1.1, 0.3], [0.8, 0.2], p, n_samples=100, seed=42)
    b = core.convolve([1.1, 0.3], [0.8, 0.2], p, n_samples=100, seed=42)
    assert a.atoms == b.atoms
    assert a.weights == b.weights
