#include "hoj/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hoj/errors.hpp"
#include "hoj/numeric.hpp"

namespace hoj {

double OrbitSum::eval(const std::vector<double>& x) const {
    double s = 0.0;
    for (const auto& gamma : orbit) {
        double dot = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) dot += gamma[i] * x[i];
        s += std::cos(dot);
    }
    return s;
}

OrbitSum make_orbit_sum(const DominantWeight& weight) {
    auto orbit_set = weyl_orbit(weight.entries());
    return OrbitSum{weight, {orbit_set.begin(), orbit_set.end()}};
}

double JacobiPolynomial::eval_P(const std::vector<double>& x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        double ms = 0.0;
        for (const auto& gamma : orbits[k]) {
            double dot = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) dot += gamma[i] * x[i];
            ms += std::cos(dot);
        }
        s += coeffs[k] * ms;
    }
    return s;
}

double JacobiPolynomial::eval_R(const std::vector<double>& x) const {
    return c_value * eval_P(x);
}

double JacobiPolynomial::eval_P_at_zero() const {
    double s = 0.0;
    for (std::size_t k = 0; k < orbits.size(); ++k) s += coeffs[k] * orbits[k].size();
    return s;
}

double c_function(const std::vector<int>& lam, const Multiplicities& m, int q) {
    std::vector<double> lam_d(lam.begin(), lam.end());
    std::vector<double> rho_v = rho(m, q);

    double log_c = 0.0;
    for (const Root& alpha : positive_roots(q)) {
        double ma = root_multiplicity(alpha, m);
        double mhalf = (alpha.cls == RootClass::Long) ? m.m1 : 0.0;
        double la = lambda_alpha(lam_d, alpha);
        double ra = lambda_alpha(rho_v, alpha);

        double args[4] = {la + ra + 0.25 * mhalf,            // numerator
                          ra + 0.25 * mhalf + 0.5 * ma,      // numerator
                          la + ra + 0.25 * mhalf + 0.5 * ma, // denominator
                          ra + 0.25 * mhalf};                // denominator
        for (double a : args)
            if (!(a > 0.0)) throw GammaPole("c_function: Gamma argument not positive");
        log_c += std::lgamma(args[0]) + std::lgamma(args[1]) - std::lgamma(args[2]) -
                 std::lgamma(args[3]);
    }
    return std::exp(log_c);
}

double c_function(const DominantWeight& lam, const RankProfile& profile) {
    return c_function(lam.entries(), profile.multiplicities(), profile.rank());
}

JacobiEngine::JacobiEngine(RankProfile profile, EngineOptions options)
    : profile_(profile), options_(options), grid_(build_grid(profile, options.grid_order)) {
    wq_ = weighted_node_factors(grid_, profile_.multiplicities());
}

int JacobiEngine::ensure_registered(const DominantWeight& w) {
    auto it = index_.find(w.entries());
    if (it != index_.end()) return it->second;

    int idx = static_cast<int>(sums_.size());
    index_.emplace(w.entries(), idx);
    sums_.push_back(make_orbit_sum(w));

    std::vector<double> vals(grid_.nodes.size());
    for (std::size_t i = 0; i < grid_.nodes.size(); ++i) vals[i] = sums_.back().eval(grid_.nodes[i]);
    node_values_.push_back(std::move(vals));

    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (auto& row : gram_) row.push_back(nan);
    gram_.emplace_back(sums_.size(), nan);
    return idx;
}

double JacobiEngine::gram(int i, int j) {
    if (!std::isnan(gram_[i][j])) return gram_[i][j];
    KahanSum s;
    const auto& vi = node_values_[i];
    const auto& vj = node_values_[j];
    for (std::size_t k = 0; k < wq_.size(); ++k) s.add(wq_[k] * vi[k] * vj[k]);
    gram_[i][j] = gram_[j][i] = s.value();
    return gram_[i][j];
}

namespace {

// Gaussian elimination with partial pivoting; a is n x n row-major.
std::vector<double> solve_linear(std::vector<double> a, std::vector<double> b, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        if (a[piv * n + col] == 0.0)
            throw IllConditioned("gram_schmidt: singular Gram matrix");
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = a[r * n + col] / a[col * n + col];
            for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
        x[r] = s / a[r * n + r];
    }
    return x;
}

}  // namespace

std::shared_ptr<const JacobiPolynomial> JacobiEngine::polynomial(const DominantWeight& lam) {
    if (lam.rank() != profile_.rank())
        throw std::invalid_argument("polynomial: weight rank does not match profile");
    for (int e : lam.entries())
        if (e % profile_.weight_scale() != 0)
            throw std::invalid_argument("polynomial: weight not in the lattice of this profile");

    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(lam.entries());
        if (it != cache_.end()) return it->second;
    }

    DominantWeight key(lam.entries(), profile_.weight_scale());
    auto lower = lower_set(key);
    const int k = static_cast<int>(lower.size());

    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(lam.entries());
    if (it != cache_.end()) return it->second;

    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = ensure_registered(lower[i]);

    auto poly = std::make_shared<JacobiPolynomial>();
    poly->lam = key;
    poly->support = lower;
    poly->coeffs.assign(k, 0.0);
    poly->coeffs[k - 1] = 1.0;

    if (k > 1) {
        const int n = k - 1;
        std::vector<double> a(static_cast<std::size_t>(n) * n);
        std::vector<double> b(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a[i * n + j] = gram(idx[i], idx[j]);
            b[i] = -gram(idx[i], idx[k - 1]);
        }

        auto ev = symmetric_eigenvalues(a, n);
        double emax = std::abs(ev.front());
        double emin = std::abs(ev.back());
        for (double e : ev) {
            emax = std::max(emax, std::abs(e));
            emin = std::min(emin, std::abs(e));
        }
        poly->gram_condition = (emin > 0.0) ? emax / emin : std::numeric_limits<double>::infinity();
        if (poly->gram_condition > options_.max_condition)
            throw IllConditioned("gram_schmidt: condition number " +
                                 std::to_string(poly->gram_condition) +
                                 " exceeds bound; raise the grid order");

        auto c = solve_linear(std::move(a), std::move(b), n);
        for (int i = 0; i < n; ++i) poly->coeffs[i] = c[i];
    }

    poly->orbits.reserve(k);
    for (int i = 0; i < k; ++i) poly->orbits.push_back(sums_[idx[i]].orbit);

    poly->c_value = c_function(key, profile_);

    KahanSum norm_p;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            norm_p.add(poly->coeffs[i] * poly->coeffs[j] * gram(idx[i], idx[j]));
    poly->norm_sq = poly->c_value * poly->c_value * norm_p.value();
    poly->plancherel_weight = 1.0 / poly->norm_sq;

    auto shared = std::shared_ptr<const JacobiPolynomial>(poly);
    cache_.emplace(lam.entries(), shared);
    return shared;
}

double JacobiEngine::inner_product_R(const JacobiPolynomial& a, const JacobiPolynomial& b) {
    std::lock_guard<std::mutex> lock(mutex_);
    KahanSum s;
    for (std::size_t i = 0; i < a.support.size(); ++i) {
        int ia = ensure_registered(a.support[i]);
        for (std::size_t j = 0; j < b.support.size(); ++j) {
            int jb = ensure_registered(b.support[j]);
            s.add(a.coeffs[i] * b.coeffs[j] * gram(ia, jb));
        }
    }
    return a.c_value * b.c_value * s.value();
}

double JacobiEngine::inner_with_R(const AlcoveFn& f, const JacobiPolynomial& p) const {
    KahanSum s;
    for (std::size_t i = 0; i < grid_.nodes.size(); ++i)
        s.add(wq_[i] * f(grid_.nodes[i]) * p.eval_R(grid_.nodes[i]));
    return s.value();
}

double JacobiEngine::inner_fn(const AlcoveFn& f, const AlcoveFn& g) const {
    KahanSum s;
    for (std::size_t i = 0; i < grid_.nodes.size(); ++i)
        s.add(wq_[i] * f(grid_.nodes[i]) * g(grid_.nodes[i]));
    return s.value();
}

std::vector<DominantWeight> JacobiEngine::weights_up_to(int max_one_norm) const {
    const int q = profile_.rank();
    const int scale = profile_.weight_scale();
    std::vector<DominantWeight> out;
    std::vector<int> cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == q) {
            out.emplace_back(cur, scale);
            return;
        }
        int used = 0;
        for (int e : cur) used += e;
        int cap = cur.empty() ? max_one_norm : std::min(cur.back(), max_one_norm - used);
        for (int e = 0; e <= cap; e += scale) {
            cur.push_back(e);
            rec();
            cur.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end(), grlex_less);
    return out;
}

}  // namespace hoj
