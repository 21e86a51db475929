#pragma once

#include <cstdint>
#include <random>

#include "hoj/matrix.hpp"
#include "hoj/root_system.hpp"

namespace hoj {

// Deterministic generator with derivable substreams; Gaussians come from an
// explicit Box-Muller transform so streams are reproducible across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    double uniform01();  // in [0,1)
    double uniform(double a, double b);
    double gaussian();

    std::uint64_t seed() const { return seed_; }
    Rng substream(std::uint64_t index) const;

    static constexpr const char* kAlgorithm = "mt19937_64+box-muller";

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Haar sample from the identity component of the unitary group over F:
// SO(q), U(q) or Sp(q). Gram-Schmidt of a Gaussian matrix with real positive
// normalization; over R the determinant is forced to +1 by a column flip.
MatrixF sample_haar_unitary(const RankProfile& profile, Rng& rng);

struct BallSampleStats {
    std::uint64_t proposals = 0;
    std::uint64_t accepted = 0;
};

// Uniform sample from the matrix ball {w : w* w < I} by rejection from the
// componentwise box [-1,1]; throws RejectionBudgetExceeded when the estimated
// acceptance probability falls below min_acceptance.
MatrixF sample_ball_uniform(const RankProfile& profile, Rng& rng,
                            BallSampleStats* stats = nullptr, double min_acceptance = 1e-6);

struct KappaEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
};

// Monte Carlo estimate of kappa_mu = integral over the ball of
// Delta(I - w* w)^(mu - gamma) dw, with the ball volume estimated from the
// same box proposals so the standard error is propagated in one stage.
KappaEstimate estimate_kappa(const RankProfile& profile, std::uint64_t n_samples, Rng& rng);

}  // namespace hoj
