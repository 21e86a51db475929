#include "hoj/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "hoj/errors.hpp"
#include "hoj/numeric.hpp"

namespace hoj {

Rng::Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t state = seed;
    gen_.seed(splitmix64(state));
}

double Rng::uniform01() { return (gen_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - uniform01();  // keep log() away from zero
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * kPi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

Rng Rng::substream(std::uint64_t index) const {
    std::uint64_t state = seed_ ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    return Rng(splitmix64(state));
}

namespace {

Quaternion random_gaussian_scalar(Field f, Rng& rng) {
    Quaternion q;
    q.w = rng.gaussian();
    if (f != Field::R) q.x = rng.gaussian();
    if (f == Field::H) {
        q.y = rng.gaussian();
        q.z = rng.gaussian();
    }
    return q;
}

Quaternion random_box_scalar(Field f, Rng& rng) {
    Quaternion q;
    q.w = rng.uniform(-1.0, 1.0);
    if (f != Field::R) q.x = rng.uniform(-1.0, 1.0);
    if (f == Field::H) {
        q.y = rng.uniform(-1.0, 1.0);
        q.z = rng.uniform(-1.0, 1.0);
    }
    return q;
}

}  // namespace

MatrixF sample_haar_unitary(const RankProfile& profile, Rng& rng) {
    const Field f = field_from_dim(profile.field_dim());
    const int q = profile.rank();

    MatrixF u(f, q);
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) u.at(i, j) = random_gaussian_scalar(f, rng);

        // modified Gram-Schmidt over the (skew) field; the inner product is
        // conjugate-linear in the first slot, scalars multiply on the right
        bool degenerate = false;
        for (int j = 0; j < q && !degenerate; ++j) {
            for (int i = 0; i < j; ++i) {
                Quaternion s;
                for (int k = 0; k < q; ++k) s = s + u.at(k, i).conj() * u.at(k, j);
                for (int k = 0; k < q; ++k) u.at(k, j) = u.at(k, j) - u.at(k, i) * s;
            }
            double norm_sq = 0.0;
            for (int k = 0; k < q; ++k) norm_sq += u.at(k, j).norm_sq();
            if (norm_sq < 1e-24) {
                degenerate = true;
                break;
            }
            double inv = 1.0 / std::sqrt(norm_sq);
            for (int k = 0; k < q; ++k) u.at(k, j) = u.at(k, j) * inv;
        }
        if (degenerate) continue;

        if (f == Field::R) {
            double det = cmat_determinant(complex_rep(u)).real();
            if (det < 0.0)
                for (int k = 0; k < q; ++k) u.at(k, q - 1) = u.at(k, q - 1) * (-1.0);
        }
        return u;
    }
    throw NonConvergence("sample_haar_unitary: repeated degenerate Gaussian draws");
}

MatrixF sample_ball_uniform(const RankProfile& profile, Rng& rng, BallSampleStats* stats,
                            double min_acceptance) {
    const Field f = field_from_dim(profile.field_dim());
    const int q = profile.rank();
    const std::uint64_t max_attempts =
        static_cast<std::uint64_t>(std::max(1e4, 20.0 / min_acceptance));

    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        MatrixF w(f, q);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) w.at(i, j) = random_box_scalar(f, rng);
        if (stats) ++stats->proposals;
        if (spec_s(w).front() < 1.0) {
            if (stats) ++stats->accepted;
            return w;
        }
    }
    throw RejectionBudgetExceeded("sample_ball_uniform: acceptance below " +
                                  std::to_string(min_acceptance));
}

KappaEstimate estimate_kappa(const RankProfile& profile, std::uint64_t n_samples, Rng& rng) {
    const Field f = field_from_dim(profile.field_dim());
    const int q = profile.rank();
    const double exponent = profile.mu() - profile.gamma();
    const double box_volume =
        std::pow(2.0, static_cast<double>(profile.field_dim()) * q * q);
    const MatrixF id = MatrixF::identity(f, q);

    KahanSum sum, sum_sq;
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        MatrixF w(f, q);
        for (int r = 0; r < q; ++r)
            for (int c = 0; c < q; ++c) w.at(r, c) = random_box_scalar(f, rng);
        double value = 0.0;
        if (spec_s(w).front() < 1.0)
            value = delta_det_power(id - w.adjoint() * w, exponent);
        sum.add(value);
        sum_sq.add(value * value);
    }
    const double n = static_cast<double>(n_samples);
    const double mean = sum.value() / n;
    const double var = std::max(0.0, sum_sq.value() / n - mean * mean);
    KappaEstimate est;
    est.estimate = box_volume * mean;
    est.std_error = box_volume * std::sqrt(var / std::max(1.0, n - 1.0));
    est.n_samples = n_samples;
    return est;
}

}  // namespace hoj
