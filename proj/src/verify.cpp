#include "hoj/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hoj/hypergroup.hpp"
#include "hoj/numeric.hpp"
#include "hoj/rank1.hpp"

namespace hoj {

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> suites = {"product", "support", "neutral",
                                                    "commute", "assoc",   "haar",
                                                    "plancherel", "rank1", "kappa"};
    return suites;
}

std::vector<std::pair<std::vector<double>, std::vector<double>>> default_pairs(int q) {
    const double h = kPi / 2.0;
    if (q == 1)
        return {{{0.25 * h}, {0.35 * h}},
                {{0.45 * h}, {0.20 * h}},
                {{0.70 * h}, {0.55 * h}},
                {{0.35 * h}, {0.65 * h}},
                {{0.60 * h}, {0.40 * h}}};
    if (q == 2)
        return {{{0.70 * h, 0.30 * h}, {0.50 * h, 0.20 * h}},
                {{0.45 * h, 0.15 * h}, {0.80 * h, 0.35 * h}},
                {{0.60 * h, 0.50 * h}, {0.30 * h, 0.10 * h}},
                {{0.85 * h, 0.40 * h}, {0.55 * h, 0.45 * h}},
                {{0.35 * h, 0.25 * h}, {0.65 * h, 0.15 * h}}};
    // generic fallback: scaled staircases
    std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
    for (int k = 0; k < 5; ++k) {
        std::vector<double> x(q), y(q);
        for (int i = 0; i < q; ++i) {
            x[i] = h * (0.85 - 0.08 * k) * (q - i) / (q + 1.0);
            y[i] = h * (0.55 + 0.06 * k) * (q - i) / (q + 1.5);
        }
        pairs.emplace_back(std::move(x), std::move(y));
    }
    return pairs;
}

std::vector<double> random_alcove_point(int q, Rng& rng, double margin) {
    const double lo = margin * kPi / 2.0;
    const double hi = (1.0 - margin) * kPi / 2.0;
    std::vector<double> x(q);
    for (int i = 0; i < q; ++i) x[i] = rng.uniform(lo, hi);
    std::sort(x.begin(), x.end(), std::greater<>());
    return x;
}

std::optional<double> kappa_closed_form(const RankProfile& profile) {
    if (profile.rank() != 1) return std::nullopt;
    const double d = profile.field_dim();
    const double mu = profile.mu();
    return std::exp(0.5 * d * std::log(kPi) + std::lgamma(mu - 0.5 * d) - std::lgamma(mu));
}

std::string weight_label(const DominantWeight& w) {
    std::string s = "[";
    for (int i = 0; i < w.rank(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.entries()[i]);
    }
    return s + "]";
}

namespace {

std::string point_label(const std::vector<double>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%.3f", x[i]);
        s += buf;
    }
    return s + ")";
}

std::vector<DominantWeight> effective_weights(const VerifyConfig& cfg, JacobiEngine& engine) {
    if (!cfg.weights.empty()) return cfg.weights;
    return engine.weights_up_to(4);
}

DominantWeight first_nonzero_weight(JacobiEngine& engine) {
    for (const auto& w : engine.weights_up_to(6))
        if (!w.is_zero()) return w;
    throw std::logic_error("no nonzero lattice weight found");
}

std::vector<CheckResult> suite_product(const VerifyConfig& cfg, bool support_instead) {
    JacobiEngine engine(cfg.profile, {cfg.grid_order, 1e12});
    auto weights = effective_weights(cfg, engine);
    auto pairs = default_pairs(cfg.profile.rank());
    Rng rng(cfg.seed);

    std::vector<CheckResult> results;
    int pair_idx = 0;
    for (const auto& [x, y] : pairs) {
        Rng sub = rng.substream(pair_idx);
        auto measure = convolve(x, y, cfg.profile, cfg.n_samples, sub);
        if (support_instead) {
            double slack = support_slack(measure, x, y);
            results.push_back(abs_check("support", "pair" + std::to_string(pair_idx),
                                        std::max(slack, 0.0), 1e-12,
                                        "x=" + point_label(x) + " y=" + point_label(y)));
        } else {
            for (const auto& lam : weights) {
                auto poly = engine.polynomial(lam);
                auto rep = product_check_on_measure(*poly, x, y, measure);
                results.push_back(z_check(
                    "product", "lam" + weight_label(lam) + " pair" + std::to_string(pair_idx),
                    std::abs(rep.lhs - rep.rhs_estimate), rep.std_error, 5.0, cfg.n_samples,
                    "lhs=" + format_double(rep.lhs) + " rhs=" + format_double(rep.rhs_estimate)));
            }
        }
        ++pair_idx;
    }
    return results;
}

std::vector<CheckResult> suite_neutral(const VerifyConfig& cfg) {
    Rng rng(cfg.seed);
    std::vector<CheckResult> results;
    const int q = cfg.profile.rank();
    const std::vector<double> zero(q, 0.0);
    for (int k = 0; k < 3; ++k) {
        auto x = random_alcove_point(q, rng);
        Rng sub = rng.substream(k);
        auto measure = convolve(x, zero, cfg.profile, std::min<std::size_t>(cfg.n_samples, 1000),
                                sub);
        double max_diff = 0.0;
        for (const auto& atom : measure.atoms)
            for (int i = 0; i < q; ++i) max_diff = std::max(max_diff, std::abs(atom[i] - x[i]));
        results.push_back(
            abs_check("neutral", "x" + point_label(x) + " atoms", max_diff, 0.0,
                      "every atom equals x exactly"));
        KahanSum wsum;
        for (double w : measure.weights) wsum.add(w);
        results.push_back(abs_check("neutral", "x" + point_label(x) + " mass",
                                    std::abs(wsum.value() - 1.0), 1e-12));
    }
    return results;
}

std::vector<CheckResult> suite_commute(const VerifyConfig& cfg) {
    Rng rng(cfg.seed);
    std::vector<CheckResult> results;
    auto pairs = default_pairs(cfg.profile.rank());
    for (std::size_t k = 0; k < 2 && k < pairs.size(); ++k) {
        Rng sub = rng.substream(k);
        double residual = commutativity_residual(pairs[k].first, pairs[k].second, cfg.profile,
                                                 std::min<std::size_t>(cfg.n_samples, 20000), sub);
        results.push_back(abs_check("commute", "pair" + std::to_string(k), residual, 1e-10));
    }
    return results;
}

std::vector<CheckResult> suite_assoc(const VerifyConfig& cfg) {
    JacobiEngine engine(cfg.profile, {cfg.grid_order, 1e12});
    auto poly = engine.polynomial(first_nonzero_weight(engine));
    Rng rng(cfg.seed);
    std::vector<CheckResult> results;
    const int q = cfg.profile.rank();
    for (int k = 0; k < 2; ++k) {
        auto x = random_alcove_point(q, rng);
        auto y = random_alcove_point(q, rng);
        auto z = random_alcove_point(q, rng);
        Rng sub = rng.substream(k);
        auto rep = associativity_check(
            x, y, z, [&](const std::vector<double>& t) { return poly->eval_R(t); }, cfg.profile,
            std::min<std::size_t>(cfg.n_samples, 1000), 100, 6, sub);
        results.push_back(z_check("assoc", "triple" + std::to_string(k),
                                  std::abs(rep.lhs - rep.rhs), rep.combined_se, 5.0,
                                  cfg.n_samples,
                                  "lhs=" + format_double(rep.lhs) +
                                      " rhs=" + format_double(rep.rhs) +
                                      "; validates sampled instances, not all triples"));
    }
    return results;
}

std::vector<CheckResult> suite_haar(const VerifyConfig& cfg) {
    const int order = std::min(cfg.grid_order, 32);
    JacobiEngine engine(cfg.profile, {order, 1e12});
    auto poly = engine.polynomial(first_nonzero_weight(engine));
    auto grid = build_grid(cfg.profile, order);
    const double one_mass = integrate(
        [&](const std::vector<double>& x) { return weight_w_m(x, cfg.profile); }, grid);
    const double threshold = 5e-3 * std::sqrt(poly->norm_sq) * one_mass;

    Rng rng(cfg.seed);
    std::vector<CheckResult> results;
    for (int k = 0; k < 2; ++k) {
        auto z = random_alcove_point(cfg.profile.rank(), rng);
        Rng sub = rng.substream(k);
        double residual = haar_residual(*poly, z, cfg.profile, grid,
                                        std::min<std::size_t>(cfg.n_samples, 10000), sub);
        results.push_back(abs_check("haar", "lam" + weight_label(poly->lam) + " z" +
                                                point_label(z),
                                    residual, threshold));
    }
    return results;
}

std::vector<CheckResult> suite_plancherel(const VerifyConfig& cfg) {
    JacobiEngine engine(cfg.profile, {cfg.grid_order, 1e12});
    auto weights = effective_weights(cfg, engine);
    if (weights.size() > 4) weights.erase(weights.begin() + 4, weights.end());
    std::vector<std::shared_ptr<const JacobiPolynomial>> polys;
    std::vector<double> coeffs;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        polys.push_back(engine.polynomial(weights[k]));
        coeffs.push_back(1.0 / (1.0 + static_cast<double>(k)));
    }
    auto rep = plancherel_check(coeffs, polys, engine);
    return {abs_check("plancherel", "bandlimited_" + std::to_string(weights.size()), rep.residual,
                      1e-6, "lhs=" + format_double(rep.lhs) + " rhs=" + format_double(rep.rhs))};
}

std::vector<CheckResult> suite_rank1(const VerifyConfig& cfg) {
    if (cfg.profile.rank() != 1)
        throw std::invalid_argument("rank1 suite requires a rank-one profile");
    JacobiEngine engine(cfg.profile, {cfg.grid_order, 1e12});
    auto map = rank1_param_map(cfg.profile);
    auto weights = effective_weights(cfg, engine);

    std::vector<CheckResult> results;
    for (const auto& lam : weights) {
        auto poly = engine.polynomial(lam);
        auto params = map.params_for(lam.entries()[0]);
        double max_diff = 0.0;
        for (int k = 0; k < 20; ++k) {
            double x = (k + 0.5) / 20.0 * kPi / 2.0;
            max_diff = std::max(max_diff,
                                std::abs(poly->eval_R({x}) - classical_R(params, map.argument(x))));
        }
        results.push_back(abs_check("rank1", "lam" + weight_label(lam), max_diff, 1e-8));
    }

    // product formula reduction, available for d = 2
    if (cfg.profile.field_dim() == 2) {
        auto params = map.params_for(2);
        double x = 0.3 * kPi / 2.0, y = 0.55 * kPi / 2.0;
        double t = map.argument(x), s = map.argument(y);
        double quad = koornwinder_product(params, t, s);
        double closed = classical_R(params, t) * classical_R(params, s);
        results.push_back(abs_check("rank1", "koornwinder_n1", std::abs(quad - closed), 1e-6));
    }
    return results;
}

std::vector<CheckResult> suite_kappa(const VerifyConfig& cfg) {
    Rng rng(cfg.seed);
    std::vector<CheckResult> results;
    auto est = estimate_kappa(cfg.profile, std::max<std::uint64_t>(cfg.n_samples, 100000),
                              rng);
    if (auto closed = kappa_closed_form(cfg.profile)) {
        results.push_back(z_check("kappa", "closed_form", std::abs(est.estimate - *closed),
                                  est.std_error, 3.0, est.n_samples,
                                  "estimate=" + format_double(est.estimate) +
                                      " reference=" + format_double(*closed)));
    } else {
        Rng other = rng.substream(1);
        auto est2 = estimate_kappa(cfg.profile, std::max<std::uint64_t>(cfg.n_samples, 100000),
                                   other);
        double se = std::sqrt(est.std_error * est.std_error + est2.std_error * est2.std_error);
        results.push_back(z_check("kappa", "independent_replicates",
                                  std::abs(est.estimate - est2.estimate), se, 3.0,
                                  est.n_samples + est2.n_samples,
                                  "estimates " + format_double(est.estimate) + " / " +
                                      format_double(est2.estimate)));
    }
    return results;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config) {
    if (suite == "product") return suite_product(config, false);
    if (suite == "support") return suite_product(config, true);
    if (suite == "neutral") return suite_neutral(config);
    if (suite == "commute") return suite_commute(config);
    if (suite == "assoc") return suite_assoc(config);
    if (suite == "haar") return suite_haar(config);
    if (suite == "plancherel") return suite_plancherel(config);
    if (suite == "rank1") return suite_rank1(config);
    if (suite == "kappa") return suite_kappa(config);
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace hoj
