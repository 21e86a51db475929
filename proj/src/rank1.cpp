#include "hoj/rank1.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hoj/numeric.hpp"

namespace hoj {

namespace {

// internal long double arithmetic keeps the two evaluation routes in
// agreement through the alternating-sum cancellation at larger n
long double jacobi_poly(long double alpha, long double beta, int n, long double t) {
    if (n == 0) return 1.0L;
    long double p_prev = 1.0L;
    long double p = 0.5L * (alpha + beta + 2.0L) * t + 0.5L * (alpha - beta);
    for (int k = 2; k <= n; ++k) {
        long double a = 2.0L * k * (k + alpha + beta) * (2.0L * k + alpha + beta - 2.0L);
        long double b = (2.0L * k + alpha + beta - 1.0L) *
                        ((2.0L * k + alpha + beta) * (2.0L * k + alpha + beta - 2.0L) * t +
                         alpha * alpha - beta * beta);
        long double c = 2.0L * (k + alpha - 1.0L) * (k + beta - 1.0L) *
                        (2.0L * k + alpha + beta);
        long double p_next = (b * p - c * p_prev) / a;
        p_prev = p;
        p = p_next;
    }
    return p;
}

}  // namespace

double classical_R(const ClassicalJacobiParams& p, double t) {
    if (p.n < 0) throw std::invalid_argument("classical_R: degree must be nonnegative");
    if (p.alpha <= -1.0 || p.beta <= -1.0)
        throw std::invalid_argument("classical_R: parameters must exceed -1");
    // R_n = P_n * n! / (alpha+1)_n
    long double scale = 1.0L;
    for (int k = 1; k <= p.n; ++k) scale *= k / (static_cast<long double>(p.alpha) + k);
    return static_cast<double>(scale * jacobi_poly(p.alpha, p.beta, p.n, t));
}

namespace {

// sum_k (-n)_k (n+alpha+beta+1)_k / ((alpha+1)_k k!) u^k with u = (1-t)/2
long double terminating_sum(long double alpha, long double beta, int n, long double t) {
    const long double u = 0.5L * (1.0L - t);
    long double term = 1.0L;
    long double sum = term;
    for (int k = 1; k <= n; ++k) {
        term *= (-(n - k + 1.0L)) * (n + alpha + beta + k) / ((alpha + k) * k) * u;
        sum += term;
    }
    return sum;
}

}  // namespace

double classical_R_series(const ClassicalJacobiParams& p, double t) {
    // For t < 0 the alternating sum cancels badly; reflect through
    // R_n^{(a,b)}(t) = (-1)^n (b+1)_n / (a+1)_n R_n^{(b,a)}(-t) so the series
    // argument u = (1-t)/2 stays at most 1/2.
    if (t < 0.0) {
        long double ratio = 1.0L;
        for (int k = 1; k <= p.n; ++k)
            ratio *= (static_cast<long double>(p.beta) + k) /
                     (static_cast<long double>(p.alpha) + k);
        long double flipped = terminating_sum(p.beta, p.alpha, p.n, -static_cast<long double>(t));
        long double sign = (p.n % 2 == 0) ? 1.0L : -1.0L;
        return static_cast<double>(sign * ratio * flipped);
    }
    return static_cast<double>(terminating_sum(p.alpha, p.beta, p.n, t));
}

ClassicalJacobiParams Rank1Map::params_for(int lam) const {
    if (lam % lambda_divisor != 0)
        throw std::invalid_argument("Rank1Map: weight not divisible by the lattice divisor");
    return {alpha, beta, lam / lambda_divisor};
}

double Rank1Map::argument(double x) const { return std::cos(argument_scale * x); }

Rank1Map rank1_param_map(const RankProfile& profile) {
    if (profile.rank() != 1)
        throw std::invalid_argument("rank1_param_map: profile must have rank 1");
    auto m = profile.multiplicities();
    if (profile.field_dim() == 1)
        return Rank1Map{0.5 * (m.m1 - 1.0), 0.5 * (m.m1 - 1.0), 1, 1};
    return Rank1Map{0.5 * (m.m1 + m.m2 - 1.0), 0.5 * (m.m2 - 1.0), 2, 2};
}

double koornwinder_product(const ClassicalJacobiParams& p, double t, double s, int order_r,
                           int order_theta) {
    if (!(p.alpha > p.beta && p.beta > -0.5))
        throw std::invalid_argument("koornwinder_product: requires alpha > beta > -1/2");

    std::vector<double> pn, pw, tn, tw;
    gauss_legendre(order_r, pn, pw);
    gauss_legendre(order_theta, tn, tw);

    const double ct = std::sqrt(std::max(0.0, 1.0 - t * t));
    const double cs = std::sqrt(std::max(0.0, 1.0 - s * s));

    KahanSum num, den;
    for (int i = 0; i < order_r; ++i) {
        const double phi = (pn[i] + 1.0) * 0.25 * kPi;  // r = sin(phi)
        const double r = std::sin(phi);
        const double cphi = std::cos(phi);
        const double wr = pw[i] * 0.25 * kPi;
        for (int j = 0; j < order_theta; ++j) {
            const double theta = (tn[j] + 1.0) * 0.5 * kPi;
            const double wt = tw[j] * 0.5 * kPi;
            double weight = std::pow(cphi, 2.0 * (p.alpha - p.beta) - 1.0) * std::sin(phi);
            if (p.beta != 0.0) weight *= std::pow(r * std::sin(theta), 2.0 * p.beta);
            const double arg = 0.5 * (1.0 + t) * (1.0 + s) + 0.5 * (1.0 - t) * (1.0 - s) * r * r +
                               ct * cs * r * std::cos(theta) - 1.0;
            num.add(wr * wt * weight * classical_R(p, arg));
            den.add(wr * wt * weight);
        }
    }
    return num.value() / den.value();
}

}  // namespace hoj
