#pragma once

#include <functional>
#include <vector>

#include "hoj/root_system.hpp"

namespace hoj {

// A point of the closed fundamental alcove pi/2 >= x_1 >= ... >= x_q >= 0.
struct AlcovePoint {
    std::vector<double> coords;
};

bool in_closed_alcove(const std::vector<double>& x, double tol = 1e-12);
AlcovePoint make_alcove_point(std::vector<double> coords);

// Tensor Gauss-Legendre rule mapped onto the ordered domain; nodes lie in the
// closed alcove and the weights sum to its volume (pi/2)^q / q!.
struct QuadratureGrid {
    int rank = 0;
    int order = 0;
    std::vector<std::vector<double>> nodes;
    std::vector<double> weights;
};

QuadratureGrid build_grid(int q, int order);
QuadratureGrid build_grid(const RankProfile& profile, int order);

// Trigonometric weight prod over positive roots of |2 sin<alpha,x>|^{m_alpha}.
double weight_w_m(const std::vector<double>& x, const Multiplicities& m, int q);
double weight_w_m(const std::vector<double>& x, const RankProfile& profile);

using AlcoveFn = std::function<double(const std::vector<double>&)>;

// Plain integral of f over the closed alcove.
double integrate(const AlcoveFn& f, const QuadratureGrid& grid);

// <f,g>_m = integral of f g w_m over the closed alcove.
double inner_product(const AlcoveFn& f, const AlcoveFn& g, const Multiplicities& m,
                     const QuadratureGrid& grid);
double inner_product(const AlcoveFn& f, const AlcoveFn& g, const RankProfile& profile,
                     const QuadratureGrid& grid);

// Per-node factor weight_i * w_m(node_i); the workhorse for Gram matrices.
std::vector<double> weighted_node_factors(const QuadratureGrid& grid, const Multiplicities& m);

}  // namespace hoj
