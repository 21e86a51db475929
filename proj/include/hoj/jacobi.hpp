#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hoj/quadrature.hpp"
#include "hoj/root_system.hpp"

namespace hoj {

// Weyl-orbit sum M_lam(x) = sum over the orbit of cos<gamma,x>; real since the
// sign flip -id lies in the group, so the imaginary parts cancel pairwise.
struct OrbitSum {
    DominantWeight weight;
    std::vector<std::vector<int>> orbit;

    double eval(const std::vector<double>& x) const;
    int orbit_size() const { return static_cast<int>(orbit.size()); }
};

OrbitSum make_orbit_sum(const DominantWeight& weight);

// Expansion of P_lam over the orbit sums of its lower set, together with the
// normalization data: c_value = c(lam + rho, m) so that R_lam = c_value P_lam
// satisfies R_lam(0) = 1, the squared norm of R_lam, and the Plancherel weight
// r_lam = 1 / |R_lam|^2.
struct JacobiPolynomial {
    DominantWeight lam = DominantWeight({0});
    std::vector<DominantWeight> support;            // lower set, grlex order, lam last
    std::vector<double> coeffs;                     // aligned with support; coeff at lam is 1
    std::vector<std::vector<std::vector<int>>> orbits;  // orbit vectors per support weight
    double c_value = 1.0;
    double norm_sq = 0.0;
    double plancherel_weight = 0.0;
    double gram_condition = 1.0;

    double eval_P(const std::vector<double>& x) const;
    double eval_R(const std::vector<double>& x) const;
    double eval_P_at_zero() const;
};

// Gamma-factor product c(lam + rho, m); equals 1 / P_lam(0). The half-root
// multiplicity m_{alpha/2} is m1 for alpha = 2e_i and 0 otherwise. Throws
// GammaPole when a Gamma argument is not positive.
double c_function(const std::vector<int>& lam, const Multiplicities& m, int q);
double c_function(const DominantWeight& lam, const RankProfile& profile);

struct EngineOptions {
    int grid_order = 64;
    double max_condition = 1e12;
};

// Constructs Jacobi polynomials by a single linear solve against the Gram
// matrix of the lower-set orbit sums, with all integrals from the alcove
// quadrature rule. Polynomials are cached by weight; values are immutable.
class JacobiEngine {
  public:
    explicit JacobiEngine(RankProfile profile, EngineOptions options = {});

    const RankProfile& profile() const { return profile_; }
    const QuadratureGrid& grid() const { return grid_; }
    const EngineOptions& options() const { return options_; }

    std::shared_ptr<const JacobiPolynomial> polynomial(const DominantWeight& lam);

    // Quadrature inner products against constructed polynomials.
    double inner_product_R(const JacobiPolynomial& a, const JacobiPolynomial& b);
    double inner_with_R(const AlcoveFn& f, const JacobiPolynomial& p) const;
    double inner_fn(const AlcoveFn& f, const AlcoveFn& g) const;

    // Lattice weights of this profile with 1-norm at most `max_one_norm`.
    std::vector<DominantWeight> weights_up_to(int max_one_norm) const;

  private:
    int ensure_registered(const DominantWeight& w);
    double gram(int i, int j);

    RankProfile profile_;
    EngineOptions options_;
    QuadratureGrid grid_;
    std::vector<double> wq_;  // node weight times w_m

    std::map<std::vector<int>, int> index_;
    std::vector<OrbitSum> sums_;
    std::vector<std::vector<double>> node_values_;
    std::vector<std::vector<double>> gram_;  // lazily filled; NaN marks unset

    std::map<std::vector<int>, std::shared_ptr<const JacobiPolynomial>> cache_;
    std::mutex mutex_;
};

}  // namespace hoj
