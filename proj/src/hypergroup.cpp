#include "hoj/hypergroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hoj/numeric.hpp"

namespace hoj {

namespace {

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double c : v) m = std::max(m, std::abs(c));
    return m;
}

struct WeightedPair {
    MatrixF v;
    MatrixF w;
    double weight;  // Delta(I - w* w)^(mu - gamma), unnormalized
};

std::vector<WeightedPair> sample_weighted_pairs(const RankProfile& profile, std::size_t n,
                                                Rng& rng) {
    const Field f = field_from_dim(profile.field_dim());
    const MatrixF id = MatrixF::identity(f, profile.rank());
    const double exponent = profile.mu() - profile.gamma();
    std::vector<WeightedPair> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        MatrixF v = sample_haar_unitary(profile, rng);
        MatrixF w = sample_ball_uniform(profile, rng);
        double rho = delta_det_power(id - w.adjoint() * w, exponent);
        pairs.push_back({std::move(v), std::move(w), rho});
    }
    return pairs;
}

void normalize_weights(std::vector<double>& w) {
    KahanSum total;
    for (double x : w) total.add(x);
    const double t = total.value();
    if (!(t > 0.0)) throw std::runtime_error("convolve: importance weights sum to zero");
    for (double& x : w) x /= t;
}

}  // namespace

double EmpiricalMeasure::apply(const std::function<double(const std::vector<double>&)>& f) const {
    KahanSum s;
    for (std::size_t i = 0; i < atoms.size(); ++i) s.add(weights[i] * f(atoms[i]));
    return s.value();
}

EmpiricalMeasure convolve(const std::vector<double>& x, const std::vector<double>& y,
                          const RankProfile& profile, std::size_t n_samples, Rng& rng) {
    if (!in_closed_alcove(x) || !in_closed_alcove(y))
        throw std::invalid_argument("convolve: arguments must lie in the closed alcove");
    if (n_samples == 0) throw std::invalid_argument("convolve: n_samples must be positive");

    EmpiricalMeasure em;
    em.profile = profile;
    em.seed = rng.seed();
    em.n_samples = n_samples;
    em.atoms.reserve(n_samples);
    em.weights.reserve(n_samples);
    for (auto& pair : sample_weighted_pairs(profile, n_samples, rng)) {
        em.atoms.push_back(kernel_d(x, y, pair.v, pair.w));
        em.weights.push_back(pair.weight);
    }
    normalize_weights(em.weights);
    return em;
}

ConvolutionReport product_check_on_measure(const JacobiPolynomial& poly,
                                           const std::vector<double>& x,
                                           const std::vector<double>& y,
                                           const EmpiricalMeasure& measure) {
    ConvolutionReport rep;
    rep.lhs = poly.eval_R(x) * poly.eval_R(y);

    std::vector<double> values(measure.atoms.size());
    KahanSum mean_sum;
    for (std::size_t i = 0; i < measure.atoms.size(); ++i) {
        values[i] = poly.eval_R(measure.atoms[i]);
        mean_sum.add(measure.weights[i] * values[i]);
    }
    rep.rhs_estimate = mean_sum.value();

    KahanSum var_sum;
    for (std::size_t i = 0; i < values.size(); ++i) {
        double d = values[i] - rep.rhs_estimate;
        var_sum.add(measure.weights[i] * measure.weights[i] * d * d);
    }
    rep.std_error = std::sqrt(std::max(0.0, var_sum.value()));

    double diff = std::abs(rep.lhs - rep.rhs_estimate);
    if (diff <= 1e-12)  // rounding-level agreement, e.g. constant characters
        rep.z_score = 0.0;
    else if (rep.std_error > 0.0)
        rep.z_score = diff / rep.std_error;
    else
        rep.z_score = std::numeric_limits<double>::infinity();
    return rep;
}

ConvolutionReport product_formula_check(const JacobiPolynomial& poly,
                                        const std::vector<double>& x,
                                        const std::vector<double>& y,
                                        const RankProfile& profile, std::size_t n_samples,
                                        Rng& rng) {
    return product_check_on_measure(poly, x, y, convolve(x, y, profile, n_samples, rng));
}

AssociativityReport associativity_check(const std::vector<double>& x,
                                        const std::vector<double>& y,
                                        const std::vector<double>& z,
                                        const std::function<double(const std::vector<double>&)>& f,
                                        const RankProfile& profile, std::size_t n_outer,
                                        std::size_t n_inner, int n_blocks, Rng& rng) {
    if (n_blocks < 2) throw std::invalid_argument("associativity_check: need at least 2 blocks");

    auto one_side = [&](const std::vector<double>& outer_a, const std::vector<double>& outer_b,
                        bool left, Rng block_rng) {
        Rng outer_rng = block_rng.substream(0);
        Rng inner_rng = block_rng.substream(1);
        EmpiricalMeasure outer = convolve(outer_a, outer_b, profile, n_outer, outer_rng);
        auto inner = sample_weighted_pairs(profile, n_inner, inner_rng);
        std::vector<double> tau(inner.size());
        for (std::size_t j = 0; j < inner.size(); ++j) tau[j] = inner[j].weight;
        normalize_weights(tau);

        KahanSum total;
        for (std::size_t i = 0; i < outer.atoms.size(); ++i) {
            KahanSum inner_sum;
            for (std::size_t j = 0; j < inner.size(); ++j) {
                std::vector<double> atom =
                    left ? kernel_d(outer.atoms[i], z, inner[j].v, inner[j].w)
                         : kernel_d(x, outer.atoms[i], inner[j].v, inner[j].w);
                inner_sum.add(tau[j] * f(atom));
            }
            total.add(outer.weights[i] * inner_sum.value());
        }
        return total.value();
    };

    std::vector<double> lhs_blocks(n_blocks), rhs_blocks(n_blocks);
    for (int b = 0; b < n_blocks; ++b) {
        Rng block = rng.substream(static_cast<std::uint64_t>(b));
        lhs_blocks[b] = one_side(x, y, true, block.substream(100));
        rhs_blocks[b] = one_side(y, z, false, block.substream(200));
    }

    auto mean_se = [n_blocks](const std::vector<double>& v) {
        double m = 0.0;
        for (double t : v) m += t;
        m /= n_blocks;
        double var = 0.0;
        for (double t : v) var += (t - m) * (t - m);
        var /= (n_blocks - 1);
        return std::pair<double, double>(m, std::sqrt(var / n_blocks));
    };

    AssociativityReport rep;
    std::tie(rep.lhs, rep.lhs_se) = mean_se(lhs_blocks);
    std::tie(rep.rhs, rep.rhs_se) = mean_se(rhs_blocks);
    rep.combined_se = std::sqrt(rep.lhs_se * rep.lhs_se + rep.rhs_se * rep.rhs_se);
    double diff = std::abs(rep.lhs - rep.rhs);
    if (diff <= 1e-12)
        rep.z_score = 0.0;
    else if (rep.combined_se > 0.0)
        rep.z_score = diff / rep.combined_se;
    else
        rep.z_score = std::numeric_limits<double>::infinity();
    return rep;
}

double haar_residual(const JacobiPolynomial& poly, const std::vector<double>& z,
                     const RankProfile& profile, const QuadratureGrid& grid,
                     std::size_t n_samples, Rng& rng) {
    if (poly.lam.is_zero())
        throw std::invalid_argument("haar_residual: lam must be nonzero (R_0 integrates to "
                                    "the total mass, not zero)");
    // The inner translation estimates use a bank of independent substreams
    // cycled over the quadrature nodes: node-level Monte Carlo errors then
    // average down across the grid while the sampling cost stays bounded.
    constexpr std::size_t kStreams = 32;
    std::vector<std::vector<WeightedPair>> banks;
    std::vector<std::vector<double>> taus;
    const std::size_t n_banks = std::min(kStreams, grid.nodes.size());
    for (std::size_t s = 0; s < n_banks; ++s) {
        Rng sub = rng.substream(s);
        banks.push_back(sample_weighted_pairs(profile, n_samples, sub));
        std::vector<double> tau(n_samples);
        for (std::size_t j = 0; j < n_samples; ++j) tau[j] = banks.back()[j].weight;
        normalize_weights(tau);
        taus.push_back(std::move(tau));
    }

    auto wq = weighted_node_factors(grid, profile.multiplicities());
    KahanSum total;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        const auto& pairs = banks[i % n_banks];
        const auto& tau = taus[i % n_banks];
        KahanSum g;
        for (std::size_t j = 0; j < pairs.size(); ++j)
            g.add(tau[j] * poly.eval_R(kernel_d(z, grid.nodes[i], pairs[j].v, pairs[j].w)));
        total.add(wq[i] * g.value());
    }
    return std::abs(total.value());
}

std::vector<double> fourier_transform(
    const AlcoveFn& f, const std::vector<std::shared_ptr<const JacobiPolynomial>>& polys,
    JacobiEngine& engine) {
    std::vector<double> hat(polys.size());
    for (std::size_t k = 0; k < polys.size(); ++k) hat[k] = engine.inner_with_R(f, *polys[k]);
    return hat;
}

PlancherelReport plancherel_check(const std::vector<double>& coeffs,
                                  const std::vector<std::shared_ptr<const JacobiPolynomial>>& polys,
                                  JacobiEngine& engine) {
    if (coeffs.size() != polys.size())
        throw std::invalid_argument("plancherel_check: coefficient/polynomial count mismatch");
    AlcoveFn f = [&](const std::vector<double>& x) {
        double s = 0.0;
        for (std::size_t k = 0; k < polys.size(); ++k) s += coeffs[k] * polys[k]->eval_R(x);
        return s;
    };
    PlancherelReport rep;
    rep.lhs = engine.inner_fn(f, f);
    auto hat = fourier_transform(f, polys, engine);
    KahanSum rhs;
    for (std::size_t k = 0; k < polys.size(); ++k)
        rhs.add(polys[k]->plancherel_weight * hat[k] * hat[k]);
    rep.rhs = rhs.value();
    rep.residual = std::abs(rep.lhs - rep.rhs);
    return rep;
}

double commutativity_residual(const std::vector<double>& x, const std::vector<double>& y,
                              const RankProfile& profile, std::size_t n_samples, Rng& rng) {
    const Field f = field_from_dim(profile.field_dim());
    const MatrixF id = MatrixF::identity(f, profile.rank());
    const double exponent = profile.mu() - profile.gamma();

    double max_atom_diff = 0.0;
    std::vector<double> w_xy(n_samples), w_yx(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        MatrixF v = sample_haar_unitary(profile, rng);
        MatrixF w = sample_ball_uniform(profile, rng);
        auto z_xy = kernel_d(x, y, v, w);
        auto z_yx = kernel_d(y, x, v.adjoint(), w.adjoint());
        for (int c = 0; c < profile.rank(); ++c)
            max_atom_diff = std::max(max_atom_diff, std::abs(z_xy[c] - z_yx[c]));
        w_xy[i] = delta_det_power(id - w.adjoint() * w, exponent);
        w_yx[i] = delta_det_power(id - w * w.adjoint(), exponent);
    }
    normalize_weights(w_xy);
    normalize_weights(w_yx);
    double max_weight_diff = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i)
        max_weight_diff = std::max(max_weight_diff, std::abs(w_xy[i] - w_yx[i]));
    return std::max(max_atom_diff, max_weight_diff);
}

double support_slack(const EmpiricalMeasure& measure, const std::vector<double>& x,
                     const std::vector<double>& y) {
    const double bound = max_abs(x) + max_abs(y);
    double slack = -std::numeric_limits<double>::infinity();
    for (const auto& atom : measure.atoms) slack = std::max(slack, max_abs(atom) - bound);
    return slack;
}

}  // namespace hoj
