#pragma once

#include "hoj/root_system.hpp"

namespace hoj {

struct ClassicalJacobiParams {
    double alpha;  // > -1
    double beta;   // > -1
    int n;         // degree >= 0
};

// Normalized classical Jacobi polynomial with R_n(1) = 1, by the three-term
// recurrence. classical_R_series is the independent route through the
// terminating hypergeometric sum.
double classical_R(const ClassicalJacobiParams& p, double t);
double classical_R_series(const ClassicalJacobiParams& p, double t);

// Dictionary between rank-one profiles and classical parameters:
// d in {2,4}: lam = 2n, R_lam(x) = R_n^{(alpha,beta)}(cos 2x) with
//             alpha = (m1 + m2 - 1)/2, beta = (m2 - 1)/2;
// d = 1:      lam = n, R_lam(x) = R_n^{(alpha,alpha)}(cos x) with
//             alpha = (m1 - 1)/2 (ultraspherical case).
struct Rank1Map {
    double alpha;
    double beta;
    int lambda_divisor;   // n = lam / lambda_divisor
    int argument_scale;   // argument is cos(argument_scale * x)

    ClassicalJacobiParams params_for(int lam) const;
    double argument(double x) const;
};

Rank1Map rank1_param_map(const RankProfile& profile);

// Two-dimensional Gauss quadrature of the classical product-formula kernel;
// requires alpha > beta > -1/2. The radial variable is substituted r = sin phi
// to keep the (1-r^2)^(alpha-beta-1) factor smooth at the endpoint, and the
// normalization constant is computed by the same rule applied to 1.
double koornwinder_product(const ClassicalJacobiParams& p, double t, double s,
                           int order_r = 64, int order_theta = 64);

}  // namespace hoj
