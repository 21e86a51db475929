// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hoj/hypergroup.hpp"
#include "hoj/jacobi.hpp"
#include "hoj/numeric.hpp"
#include "hoj/rank1.hpp"
#include "hoj/sampling.hpp"
#include "hoj/verify.hpp"
#include "support/oracles.hpp"

using namespace hoj;

namespace {

struct Outcome {
    bool pass = false;
    std::string stats;
};

int g_failures = 0;

template <typename Fn>
void criterion(int id, const std::string& name, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = fn();
    } catch (const std::exception& e) {
        out.pass = false;
        out.stats = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] C%02d %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", id, name.c_str(),
                out.stats.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

double timed_seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criteria 1/2: closed-form rank-one oracles ---------------------------

Outcome rank1_oracle(const std::vector<RankProfile>& profiles, int max_degree,
                     double time_limit) {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const auto& p : profiles) {
        JacobiEngine engine(p);
        auto map = rank1_param_map(p);
        for (int lam = 0; lam / map.lambda_divisor <= max_degree; lam += p.weight_scale()) {
            auto poly = engine.polynomial(DominantWeight({lam}, p.weight_scale()));
            auto params = map.params_for(lam);
            for (int k = 0; k < 20; ++k) {
                double x = (k + 0.5) / 20.0 * kPi / 2.0;
                worst = std::max(
                    worst, std::abs(poly->eval_R({x}) - classical_R(params, map.argument(x))));
            }
        }
    }
    double secs = timed_seconds(t0);
    return {worst <= 1e-8 && secs < time_limit,
            fmt("max |engine - classical| = %.2e (tol 1e-8)", worst)};
}

// ---- shared engines for criteria 3 and 5 ----------------------------------

struct NormalizationData {
    std::vector<std::shared_ptr<JacobiEngine>> engines;
    std::vector<std::vector<std::shared_ptr<const JacobiPolynomial>>> polys;
};

NormalizationData build_normalization_data() {
    NormalizationData data;
    const std::vector<std::tuple<int, int, double>> specs = {
        {1, 1, 2.0}, {1, 2, 2.0}, {1, 2, 2.7}, {2, 1, 2.2}, {2, 2, 4.0}, {2, 2, 4.6}};
    for (auto [q, d, mu] : specs) {
        auto engine = std::make_shared<JacobiEngine>(RankProfile(q, d, mu), EngineOptions{64, 1e12});
        std::vector<std::shared_ptr<const JacobiPolynomial>> ps;
        for (const auto& lam : engine->weights_up_to(8)) ps.push_back(engine->polynomial(lam));
        data.engines.push_back(std::move(engine));
        data.polys.push_back(std::move(ps));
    }
    return data;
}

}  // namespace

int main() {
    std::printf("acceptance: Heckman-Opdam BC Jacobi polynomials and alcove convolution\n");

    criterion(1, "rank-one complex-series oracle", [] {
        return rank1_oracle({RankProfile(1, 2, 2.0), RankProfile(1, 2, 3.0), RankProfile(1, 2, 4.0)},
                            5, 5.0);
    });

    criterion(2, "rank-one ultraspherical oracle", [] {
        for (double mu : {1.5, 2.0, 3.0}) {
            auto map = rank1_param_map(RankProfile(1, 1, mu));
            if (std::abs(map.alpha - (mu - 1.0)) > 1e-14)
                return Outcome{false, "alpha does not equal mu - 1"};
        }
        return rank1_oracle({RankProfile(1, 1, 1.5), RankProfile(1, 1, 2.0), RankProfile(1, 1, 3.0)},
                            5, 5.0);
    });

    NormalizationData norm_data;
    criterion(3, "normalization R(0) = 1 across profiles", [&] {
        auto t0 = std::chrono::steady_clock::now();
        norm_data = build_normalization_data();
        double worst = 0.0;
        std::size_t count = 0;
        for (const auto& ps : norm_data.polys)
            for (const auto& poly : ps) {
                std::vector<double> origin(poly->lam.rank(), 0.0);
                worst = std::max(worst, std::abs(poly->eval_R(origin) - 1.0));
                ++count;
            }
        double secs = timed_seconds(t0);
        return Outcome{worst <= 1e-8 && secs < 60.0,
                       fmt("%0.0f polynomials, max |R(0)-1| = %.2e (tol 1e-8)",
                           static_cast<double>(count), worst)};
    });

    criterion(4, "worked rank-one constants", [] {
        JacobiEngine engine(RankProfile(1, 2, 2.0));
        auto poly = engine.polynomial(DominantWeight({2}, 2));
        bool pass = std::abs(poly->coeffs[0] - 2.0 / 3.0) <= 1e-9 &&
                    std::abs(poly->c_value - 0.375) <= 1e-12 &&
                    std::abs(poly->norm_sq - 0.5) <= 1e-9 &&
                    std::abs(poly->plancherel_weight - 2.0) <= 1e-8;
        return Outcome{pass, fmt("c10 err %.1e, c err %.1e, norm err %.1e",
                                 std::abs(poly->coeffs[0] - 2.0 / 3.0),
                                 std::abs(poly->c_value - 0.375),
                                 std::abs(poly->norm_sq - 0.5))};
    });

    criterion(5, "orthogonality of distinct characters", [&] {
        if (norm_data.engines.empty())
            return Outcome{false, "no polynomial data (criterion 3 errored)"};
        double worst = 0.0;
        for (std::size_t e = 0; e < norm_data.engines.size(); ++e) {
            auto& engine = *norm_data.engines[e];
            auto& ps = norm_data.polys[e];
            for (std::size_t i = 0; i < ps.size(); ++i)
                for (std::size_t j = i + 1; j < ps.size(); ++j) {
                    double cross = engine.inner_product_R(*ps[i], *ps[j]);
                    worst = std::max(worst, std::abs(cross) /
                                                std::sqrt(ps[i]->norm_sq * ps[j]->norm_sq));
                }
        }
        return Outcome{worst <= 1e-8, fmt("max normalized cross product = %.2e (tol 1e-8)", worst)};
    });

    criterion(6, "kappa against the closed rank-one value", [] {
        auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        std::string stats;
        for (double mu : {2.0, 3.0}) {
            RankProfile p(1, 2, mu);
            Rng rng(640 + static_cast<std::uint64_t>(mu));
            auto est = estimate_kappa(p, 1000000, rng);
            double reference = kPi / (mu - 1.0);
            double dev = std::abs(est.estimate - reference);
            pass = pass && dev <= 3.0 * est.std_error;
            stats += fmt("p=%1.0f: dev %.1e vs 3se %.1e; ", mu, dev, 3.0 * est.std_error);
        }
        double secs = timed_seconds(t0);
        return Outcome{pass && secs < 30.0, stats};
    });

    // criteria 7 and 8 share the convolution runs
    const std::vector<std::tuple<int, int, double>> product_profiles = {
        {1, 2, 2.0}, {1, 2, 2.7}, {2, 1, 2.2}, {2, 2, 4.0}, {2, 2, 4.6}};
    double support_worst = -1.0;
    bool support_ran = false;

    criterion(7, "product formula across profiles and weights", [&] {
        auto t0 = std::chrono::steady_clock::now();
        const std::size_t n_samples = 200000;
        std::size_t total = 0, over4 = 0, over6 = 0;
        double max_z = 0.0;
        for (std::size_t pi = 0; pi < product_profiles.size(); ++pi) {
            auto [q, d, mu] = product_profiles[pi];
            RankProfile profile(q, d, mu);
            JacobiEngine engine(profile);
            std::vector<std::shared_ptr<const JacobiPolynomial>> polys;
            for (const auto& lam : engine.weights_up_to(6))
                polys.push_back(engine.polynomial(lam));
            auto pairs = default_pairs(q);
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                Rng rng(700 + 17 * pi + k);
                auto measure = convolve(pairs[k].first, pairs[k].second, profile, n_samples, rng);
                support_worst =
                    std::max(support_worst, support_slack(measure, pairs[k].first, pairs[k].second));
                for (const auto& poly : polys) {
                    auto rep =
                        product_check_on_measure(*poly, pairs[k].first, pairs[k].second, measure);
                    ++total;
                    max_z = std::max(max_z, rep.z_score);
                    if (rep.z_score > 4.0) ++over4;
                    if (rep.z_score > 6.0) ++over6;
                }
            }
        }
        support_ran = true;
        double secs = timed_seconds(t0);
        double frac_ok = 1.0 - static_cast<double>(over4) / total;
        bool pass = frac_ok >= 0.95 && over6 == 0 && secs < 600.0;
        return Outcome{pass, fmt("%0.0f checks, z<=4 for %.1f%%, max z %.2f",
                                 static_cast<double>(total), 100.0 * frac_ok, max_z)};
    });

    criterion(8, "support bound for every sampled atom", [&] {
        if (!support_ran) return Outcome{false, "no convolution data (criterion 7 errored)"};
        return Outcome{support_worst <= 1e-12,
                       fmt("max slack = %.2e (tol 1e-12)", support_worst)};
    });

    criterion(9, "neutral element produces exact point masses", [] {
        Rng rng(900);
        bool pass = true;
        for (int k = 0; k < 10; ++k) {
            RankProfile profile = (k < 5) ? RankProfile(2, 2, 4.0) : RankProfile(1, 2, 2.7);
            const int q = profile.rank();
            auto x = random_alcove_point(q, rng);
            std::vector<double> zero(q, 0.0);
            Rng sub = rng.substream(k);
            auto right = convolve(x, zero, profile, 500, sub);
            for (const auto& atom : right.atoms) pass = pass && (atom == x);
            auto left = convolve(zero, x, profile, 200, sub);
            for (const auto& atom : left.atoms) pass = pass && (atom == x);
        }
        return Outcome{pass, std::string("10 random points, atoms identical to x: ") +
                                 (pass ? "yes" : "no")};
    });

    criterion(10, "commutativity under the adjoint pairing", [&] {
        double worst = 0.0;
        for (std::size_t pi = 0; pi < product_profiles.size(); ++pi) {
            auto [q, d, mu] = product_profiles[pi];
            RankProfile profile(q, d, mu);
            auto pairs = default_pairs(q);
            for (std::size_t k = 0; k < 2; ++k) {
                Rng rng(1000 + 13 * pi + k);
                worst = std::max(worst, commutativity_residual(pairs[k].first, pairs[k].second,
                                                               profile, 20000, rng));
            }
        }
        return Outcome{worst <= 1e-10, fmt("max paired residual = %.2e (tol 1e-10)", worst)};
    });

    criterion(11, "associativity via nested Monte Carlo", [&] {
        std::size_t total = 0, failed = 0;
        double max_ratio = 0.0;
        for (std::size_t pi = 0; pi < product_profiles.size(); ++pi) {
            auto [q, d, mu] = product_profiles[pi];
            RankProfile profile(q, d, mu);
            JacobiEngine engine(profile);
            DominantWeight lam = engine.weights_up_to(4)[1];  // first nonzero weight
            auto poly = engine.polynomial(lam);
            auto f = [&](const std::vector<double>& t) { return poly->eval_R(t); };
            Rng rng(1100 + pi);
            for (int trip = 0; trip < 3; ++trip) {
                auto x = random_alcove_point(q, rng);
                auto y = random_alcove_point(q, rng);
                auto z = random_alcove_point(q, rng);
                Rng sub = rng.substream(trip);
                auto rep = associativity_check(x, y, z, f, profile, 1000, 100, 8, sub);
                ++total;
                double ratio = std::abs(rep.lhs - rep.rhs) /
                               std::max(rep.combined_se, 1e-300);
                max_ratio = std::max(max_ratio, ratio);
                if (ratio > 4.0) ++failed;
            }
        }
        return Outcome{failed == 0,
                       fmt("%0.0f sampled triples (instance check), max |diff|/se = %.2f (limit 4)",
                           static_cast<double>(total), max_ratio)};
    });

    criterion(12, "translation invariance of the Haar measure", [] {
        const std::vector<std::tuple<int, int, double>> profiles = {
            {1, 2, 2.0}, {1, 2, 2.7}, {2, 2, 4.0}};
        bool pass = true;
        double worst_rel = 0.0;
        for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
            auto [q, d, mu] = profiles[pi];
            RankProfile profile(q, d, mu);
            JacobiEngine engine(profile, {32, 1e12});
            DominantWeight lam = engine.weights_up_to(4)[1];
            auto poly = engine.polynomial(lam);
            auto grid = build_grid(profile, 32);
            double one_mass = integrate(
                [&](const std::vector<double>& x) { return weight_w_m(x, profile); }, grid);
            double threshold = 5e-3 * std::sqrt(poly->norm_sq) * one_mass;
            Rng rng(1200 + pi);
            for (int k = 0; k < 3; ++k) {
                auto z = random_alcove_point(q, rng);
                Rng sub = rng.substream(k);
                double residual = haar_residual(*poly, z, profile, grid, 10000, sub);
                pass = pass && residual <= threshold;
                worst_rel = std::max(worst_rel, residual / threshold);
            }
        }
        return Outcome{pass, fmt("max residual/threshold = %.3f", worst_rel)};
    });

    criterion(13, "Plancherel identity for band-limited functions", [] {
        JacobiEngine engine(RankProfile(1, 2, 2.0));
        std::vector<std::shared_ptr<const JacobiPolynomial>> polys;
        for (int lam : {0, 2, 4, 6}) polys.push_back(engine.polynomial(DominantWeight({lam}, 2)));

        auto worked = plancherel_check({0.0, 1.0, 0.0, 0.0}, polys, engine);
        bool pass = worked.residual <= 1e-6 && std::abs(worked.lhs - 0.5) <= 1e-6 &&
                    std::abs(worked.rhs - 0.5) <= 1e-6;
        auto mixed = plancherel_check({1.0, 0.5, -0.25, 0.125}, polys, engine);
        pass = pass && mixed.residual <= 1e-6;

        JacobiEngine engine2(RankProfile(2, 2, 4.0));
        std::vector<std::shared_ptr<const JacobiPolynomial>> polys2;
        for (auto lam : {std::vector<int>{0, 0}, {2, 0}, {2, 2}, {4, 0}})
            polys2.push_back(engine2.polynomial(DominantWeight(lam, 2)));
        auto mixed2 = plancherel_check({0.3, 1.0, -0.5, 0.25}, polys2, engine2);
        pass = pass && mixed2.residual <= 1e-6;

        return Outcome{pass, fmt("worked lhs err %.1e; residuals %.1e / %.1e",
                                 std::abs(worked.lhs - 0.5), mixed.residual, mixed2.residual)};
    });

    criterion(14, "classical product-formula reduction", [] {
        RankProfile profile(1, 2, 2.0);
        JacobiEngine engine(profile);
        auto map = rank1_param_map(profile);  // alpha = 1, beta = 0
        std::vector<double> x{0.3 * kPi / 2}, y{0.55 * kPi / 2};
        double t = map.argument(x[0]), s = map.argument(y[0]);

        Rng rng(1400);
        auto measure = convolve(x, y, profile, 200000, rng);

        bool pass = true;
        double worst_quad = 0.0, worst_mc = 0.0;
        for (int n = 0; n <= 4; ++n) {
            auto params = map.params_for(2 * n);
            double closed = classical_R(params, t) * classical_R(params, s);
            double quad = koornwinder_product(params, t, s);
            worst_quad = std::max(worst_quad, std::abs(quad - closed));
            pass = pass && std::abs(quad - closed) <= 1e-6;

            auto poly = engine.polynomial(DominantWeight({2 * n}, 2));
            auto rep = product_check_on_measure(*poly, x, y, measure);
            double dev = std::abs(rep.rhs_estimate - quad);
            double limit = 4.0 * std::max(rep.std_error, 1e-300);
            if (n > 0) {
                worst_mc = std::max(worst_mc, dev / limit);
                pass = pass && dev <= limit;
            }
        }
        return Outcome{pass, fmt("max |quad-closed| = %.1e (tol 1e-6), max MC dev/4se = %.2f",
                                 worst_quad, worst_mc)};
    });

    criterion(15, "dominance lemmas, exhaustive at small rank", [] {
        std::size_t orbit_checks = 0, norm_checks = 0, violations = 0;
        for (int q : {1, 2, 3}) {
            auto group = weyl_group(q);
            auto dominants = hoj::testing::dominant_vectors_up_to_norm(q, 6.0);
            for (const auto& gamma : dominants) {
                for (const auto& w : group) {
                    auto image = w.apply(gamma);
                    std::vector<int> diff(q);
                    for (int i = 0; i < q; ++i) diff[i] = gamma[i] - image[i];
                    ++orbit_checks;
                    if (!in_positive_root_cone(diff)) ++violations;
                }
            }
            for (const auto& le : dominants) {
                DominantWeight lam(le);
                for (const auto& me : dominants) {
                    DominantWeight mu(me);
                    if (!dominance_leq(mu, lam)) continue;
                    ++norm_checks;
                    if (mu.euclidean_norm() > lam.euclidean_norm() + 1e-12) ++violations;
                }
            }
        }
        return Outcome{violations == 0,
                       fmt("%0.0f orbit checks, %0.0f norm checks, %0.0f violations",
                           static_cast<double>(orbit_checks), static_cast<double>(norm_checks),
                           static_cast<double>(violations))};
    });

    std::printf("acceptance summary: %d of 15 criteria passed\n", 15 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
