#include "hoj/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "hoj/numeric.hpp"

namespace hoj {

bool in_closed_alcove(const std::vector<double>& x, double tol) {
    if (x.empty()) return false;
    if (x.front() > kPi / 2 + tol) return false;
    if (x.back() < -tol) return false;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i] > x[i - 1] + tol) return false;
    return true;
}

AlcovePoint make_alcove_point(std::vector<double> coords) {
    if (!in_closed_alcove(coords))
        throw std::invalid_argument("alcove point must satisfy pi/2 >= x_1 >= ... >= x_q >= 0");
    return AlcovePoint{std::move(coords)};
}

QuadratureGrid build_grid(int q, int order) {
    if (q < 1) throw std::invalid_argument("build_grid: rank must be positive");
    if (order < 2) throw std::invalid_argument("build_grid: order must be >= 2");

    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(order, gl_nodes, gl_weights);

    QuadratureGrid grid;
    grid.rank = q;
    grid.order = order;

    // Ordered-domain mapping: x_1 = u_1 in [0, pi/2], x_k = x_{k-1} u_k with
    // u_k in [0,1]; Jacobian x_1 ... x_{q-1}. Nodes land in the closed alcove
    // by construction and the weights sum exactly to (pi/2)^q / q!.
    std::size_t total = 1;
    for (int k = 0; k < q; ++k) total *= static_cast<std::size_t>(order);
    grid.nodes.reserve(total);
    grid.weights.reserve(total);

    std::vector<int> idx(q, 0);
    std::vector<double> x(q);
    for (std::size_t flat = 0; flat < total; ++flat) {
        double w = 1.0;
        for (int k = 0; k < q; ++k) {
            double t = gl_nodes[idx[k]];
            double gw = gl_weights[idx[k]];
            if (k == 0) {
                x[0] = (t + 1.0) * 0.25 * kPi;
                w *= gw * 0.25 * kPi;
            } else {
                double u = (t + 1.0) * 0.5;
                w *= gw * 0.5 * x[k - 1];  // Jacobian factor
                x[k] = x[k - 1] * u;
            }
        }
        grid.nodes.push_back(x);
        grid.weights.push_back(w);
        for (int k = q - 1; k >= 0; --k) {
            if (++idx[k] < order) break;
            idx[k] = 0;
        }
    }
    return grid;
}

QuadratureGrid build_grid(const RankProfile& profile, int order) {
    return build_grid(profile.rank(), order);
}

double weight_w_m(const std::vector<double>& x, const Multiplicities& m, int q) {
    double w = 1.0;
    for (const Root& alpha : positive_roots(q)) {
        double ma = root_multiplicity(alpha, m);
        if (ma == 0.0) continue;
        double dot = 0.0;
        for (int i = 0; i < q; ++i) dot += alpha.vec[i] * x[i];
        w *= std::pow(std::abs(2.0 * std::sin(dot)), ma);
    }
    return w;
}

double weight_w_m(const std::vector<double>& x, const RankProfile& profile) {
    return weight_w_m(x, profile.multiplicities(), profile.rank());
}

double integrate(const AlcoveFn& f, const QuadratureGrid& grid) {
    KahanSum s;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) s.add(grid.weights[i] * f(grid.nodes[i]));
    return s.value();
}

double inner_product(const AlcoveFn& f, const AlcoveFn& g, const Multiplicities& m,
                     const QuadratureGrid& grid) {
    KahanSum s;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        const auto& x = grid.nodes[i];
        s.add(grid.weights[i] * weight_w_m(x, m, grid.rank) * f(x) * g(x));
    }
    return s.value();
}

double inner_product(const AlcoveFn& f, const AlcoveFn& g, const RankProfile& profile,
                     const QuadratureGrid& grid) {
    return inner_product(f, g, profile.multiplicities(), grid);
}

std::vector<double> weighted_node_factors(const QuadratureGrid& grid, const Multiplicities& m) {
    std::vector<double> wq(grid.nodes.size());
    for (std::size_t i = 0; i < grid.nodes.size(); ++i)
        wq[i] = grid.weights[i] * weight_w_m(grid.nodes[i], m, grid.rank);
    return wq;
}

}  // namespace hoj
