#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

namespace hoj {

inline constexpr double kPi = std::numbers::pi;

// Compensated accumulator; used wherever quadrature sums feed tight tolerances.
class KahanSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

// Gauss-Legendre nodes and weights on [-1,1], Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic Jacobi
// rotations, sorted nonincreasing. Sweep budget and off-diagonal threshold are
// fixed; throws NonConvergence when the budget is exhausted.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n, int max_sweeps = 50);

// SplitMix64 step, used to derive rng substreams.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace hoj
