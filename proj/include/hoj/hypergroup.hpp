#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hoj/jacobi.hpp"
#include "hoj/matrix.hpp"
#include "hoj/quadrature.hpp"
#include "hoj/root_system.hpp"
#include "hoj/sampling.hpp"

namespace hoj {

// delta_x * delta_y realized as atoms z_i = d(x, y, v_i, w_i) with
// self-normalized importance weights proportional to Delta(I - w* w)^(mu-gamma);
// the normalization makes the measure an exact probability measure and removes
// the constant kappa_mu from the convolution entirely.
struct EmpiricalMeasure {
    std::vector<std::vector<double>> atoms;
    std::vector<double> weights;
    RankProfile profile{1, 2, 2.0};
    std::uint64_t seed = 0;
    std::size_t n_samples = 0;

    double apply(const std::function<double(const std::vector<double>&)>& f) const;
};

EmpiricalMeasure convolve(const std::vector<double>& x, const std::vector<double>& y,
                          const RankProfile& profile, std::size_t n_samples, Rng& rng);

struct ConvolutionReport {
    double lhs = 0.0;
    double rhs_estimate = 0.0;
    double std_error = 0.0;
    double z_score = 0.0;
};

ConvolutionReport product_check_on_measure(const JacobiPolynomial& poly,
                                           const std::vector<double>& x,
                                           const std::vector<double>& y,
                                           const EmpiricalMeasure& measure);

ConvolutionReport product_formula_check(const JacobiPolynomial& poly,
                                        const std::vector<double>& x,
                                        const std::vector<double>& y,
                                        const RankProfile& profile, std::size_t n_samples,
                                        Rng& rng);

struct AssociativityReport {
    double lhs = 0.0;      // (x * y) * z applied to f
    double rhs = 0.0;      // x * (y * z) applied to f
    double lhs_se = 0.0;
    double rhs_se = 0.0;
    double combined_se = 0.0;
    double z_score = 0.0;
};

// Nested Monte Carlo with block replicates: each block draws a fresh outer
// measure and a fresh inner sample shared across the outer atoms (stratified
// reuse; the O(1/n_inner) bias is common to both sides).
AssociativityReport associativity_check(const std::vector<double>& x,
                                        const std::vector<double>& y,
                                        const std::vector<double>& z,
                                        const std::function<double(const std::vector<double>&)>& f,
                                        const RankProfile& profile, std::size_t n_outer,
                                        std::size_t n_inner, int n_blocks, Rng& rng);

// |integral of (tau_z R)(x) w_m(x) dx| estimated with quadrature over x and an
// inner convolution estimate per node (independent substreams cycled across
// the nodes); zero for lam != 0 when w_m dx is the Haar measure.
double haar_residual(const JacobiPolynomial& poly, const std::vector<double>& z,
                     const RankProfile& profile, const QuadratureGrid& grid,
                     std::size_t n_samples, Rng& rng);

// hat f(lam) = <f, R_lam>_m for each polynomial in the list.
std::vector<double> fourier_transform(const AlcoveFn& f,
                                      const std::vector<std::shared_ptr<const JacobiPolynomial>>& polys,
                                      JacobiEngine& engine);

struct PlancherelReport {
    double lhs = 0.0;       // |f|^2 by quadrature
    double rhs = 0.0;       // sum of r_nu |hat f(nu)|^2
    double residual = 0.0;
};

// Both sides for a band-limited f = sum coeff_k R_k; the spectral sum is
// finite and exact for such f.
PlancherelReport plancherel_check(const std::vector<double>& coeffs,
                                  const std::vector<std::shared_ptr<const JacobiPolynomial>>& polys,
                                  JacobiEngine& engine);

// Paired commutativity test: with the same draws (v, w), the atoms of x * y
// and the atoms of y * x under the adjoint substitution (v*, w*) coincide.
// Returns the largest componentwise atom/weight discrepancy.
double commutativity_residual(const std::vector<double>& x, const std::vector<double>& y,
                              const RankProfile& profile, std::size_t n_samples, Rng& rng);

// max over atoms of |z|_inf - (|x|_inf + |y|_inf); nonpositive when the
// support bound holds.
double support_slack(const EmpiricalMeasure& measure, const std::vector<double>& x,
                     const std::vector<double>& y);

}  // namespace hoj
