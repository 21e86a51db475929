#include <cmath>

#include "doctest.h"
#include "hoj/numeric.hpp"
#include "hoj/quadrature.hpp"
#include "hoj/sampling.hpp"

using namespace hoj;

TEST_CASE("alcove membership") {
    CHECK(in_closed_alcove({kPi / 2, 0.3, 0.0}));
    CHECK(in_closed_alcove({0.0}));
    CHECK_FALSE(in_closed_alcove({0.2, 0.3}));
    CHECK_FALSE(in_closed_alcove({kPi / 2 + 0.1}));
    CHECK_FALSE(in_closed_alcove({0.4, -0.1}));
    CHECK_THROWS_AS(make_alcove_point({0.1, 0.2}), std::invalid_argument);
    CHECK_NOTHROW(make_alcove_point({0.2, 0.1}));
}

TEST_CASE("grid construction: node counts, placement, total mass") {
    auto g1 = build_grid(1, 2);
    CHECK(g1.nodes.size() == 2);
    double s1 = 0;
    for (double w : g1.weights) s1 += w;
    CHECK(s1 == doctest::Approx(kPi / 2).epsilon(1e-14));

    auto g2 = build_grid(2, 4);
    CHECK(g2.nodes.size() == 16);
    double s2 = 0;
    for (double w : g2.weights) s2 += w;
    CHECK(s2 == doctest::Approx(kPi * kPi / 8).epsilon(1e-14));
    for (const auto& x : g2.nodes) CHECK(in_closed_alcove(x));
    for (double w : g2.weights) CHECK(w > 0.0);

    auto g3 = build_grid(3, 3);
    CHECK(g3.nodes.size() == 27);
    double s3 = 0;
    for (double w : g3.weights) s3 += w;
    CHECK(s3 == doctest::Approx(std::pow(kPi / 2, 3) / 6).epsilon(1e-13));

    CHECK_THROWS_AS(build_grid(1, 1), std::invalid_argument);
}

TEST_CASE("weight function") {
    Multiplicities m{2.0, 1.0, 0.0};
    // (2 sin x)^2 (2 sin 2x) = 16 sin^3 x cos x
    for (double x : {0.3, 0.7, 1.1}) {
        double expected = 16.0 * std::pow(std::sin(x), 3) * std::cos(x);
        CHECK(weight_w_m({x}, m, 1) == doctest::Approx(expected).epsilon(1e-14));
    }
    CHECK(weight_w_m({0.0}, m, 1) == doctest::Approx(0.0));
    CHECK(weight_w_m({kPi / 2}, m, 1) == doctest::Approx(0.0));  // long root wall
    CHECK(weight_w_m({0.4, 0.4}, Multiplicities{1.0, 1.0, 2.0}, 2) == doctest::Approx(0.0));
    CHECK(weight_w_m({0.9, 0.2}, Multiplicities{0, 0, 0}, 2) == doctest::Approx(1.0));
}

TEST_CASE("worked integrals in the rank-one complex case") {
    RankProfile p(1, 2, 2.0);
    auto grid = build_grid(p, 32);
    auto one = [](const std::vector<double>&) { return 1.0; };
    CHECK(inner_product(one, one, p, grid) == doctest::Approx(4.0).epsilon(1e-10));

    auto m2 = [](const std::vector<double>& x) { return 2.0 * std::cos(2.0 * x[0]); };
    CHECK(inner_product(m2, one, p, grid) == doctest::Approx(-8.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("bilinear symmetry and positivity") {
    RankProfile p(2, 2, 4.0);
    auto grid = build_grid(p, 16);
    Rng rng(5);
    for (int rep = 0; rep < 5; ++rep) {
        double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1), c = rng.uniform(-1, 1);
        auto f = [&](const std::vector<double>& x) {
            return a + b * std::cos(2 * x[0]) + c * std::cos(2 * x[1]);
        };
        auto g = [&](const std::vector<double>& x) {
            return c + a * std::cos(2 * (x[0] + x[1])) + b * std::cos(2 * x[1]);
        };
        CHECK(inner_product(f, g, p, grid) ==
              doctest::Approx(inner_product(g, f, p, grid)).epsilon(1e-14));
        CHECK(inner_product(f, f, p, grid) >= 0.0);
    }
}

TEST_CASE("unit weight integrates low trigonometric degrees to machine precision") {
    auto grid = build_grid(1, 64);
    for (int k = 0; k <= 8; ++k) {
        auto f = [k](const std::vector<double>& x) { return std::cos(k * x[0]); };
        double exact = (k == 0) ? kPi / 2 : std::sin(k * kPi / 2) / k;
        CHECK(std::abs(integrate(f, grid) - exact) <= 1e-12);
    }
}

TEST_CASE("refinement residuals shrink for a singular weight") {
    // m1 = 0.4 puts an x^0.4 endpoint factor in the integrand, so the
    // convergence is algebraic and the n vs 2n residuals are informative.
    Multiplicities m{0.4, 0.0, 0.0};
    auto f = [](const std::vector<double>& x) { return 2.0 * std::cos(2.0 * x[0]); };
    std::vector<double> values;
    for (int n : {8, 16, 32, 64, 128}) {
        auto grid = build_grid(1, n);
        values.push_back(inner_product(f, f, m, grid));
    }
    std::vector<double> residuals;
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        residuals.push_back(std::abs(values[i] - values[i + 1]));
    for (std::size_t i = 0; i + 1 < residuals.size(); ++i)
        CHECK(residuals[i + 1] < residuals[i]);
}
