#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hoj/hypergroup.hpp"
#include "hoj/jacobi.hpp"
#include "hoj/rank1.hpp"
#include "hoj/sampling.hpp"
#include "hoj/verify.hpp"

namespace py = pybind11;
using namespace hoj;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Heckman-Opdam Jacobi polynomials of type BC and the hypergroup "
              "convolution on the fundamental alcove";

    py::class_<Multiplicities>(m, "Multiplicities")
        .def_readonly("m1", &Multiplicities::m1)
        .def_readonly("m2", &Multiplicities::m2)
        .def_readonly("m3", &Multiplicities::m3);

    py::class_<RankProfile>(m, "RankProfile")
        .def(py::init<int, int, double>(), py::arg("q"), py::arg("d"), py::arg("mu"))
        .def_property_readonly("q", &RankProfile::rank)
        .def_property_readonly("d", &RankProfile::field_dim)
        .def_property_readonly("mu", &RankProfile::mu)
        .def_property_readonly("gamma", &RankProfile::gamma)
        .def_property_readonly("multiplicities", &RankProfile::multiplicities)
        .def_property_readonly("weight_scale", &RankProfile::weight_scale)
        .def_property_readonly("is_geometric", &RankProfile::is_geometric)
        .def("rho", [](const RankProfile& p) { return rho(p); });

    m.def("dominance_leq",
          [](const std::vector<int>& mu, const std::vector<int>& lam) {
              return dominance_leq(DominantWeight(mu), DominantWeight(lam));
          },
          py::arg("mu"), py::arg("lam"));
    m.def("lower_set",
          [](const std::vector<int>& lam, int scale) {
              std::vector<std::vector<int>> out;
              for (const auto& w : lower_set(DominantWeight(lam, scale)))
                  out.push_back(w.entries());
              return out;
          },
          py::arg("lam"), py::arg("scale") = 1);
    m.def("weyl_orbit",
          [](const std::vector<int>& lam) {
              auto orbit = weyl_orbit(lam);
              return std::vector<std::vector<int>>(orbit.begin(), orbit.end());
          },
          py::arg("lam"));
    m.def("weight_w_m",
          [](const std::vector<double>& x, const RankProfile& p) { return weight_w_m(x, p); },
          py::arg("x"), py::arg("profile"));

    py::class_<JacobiPolynomial, std::shared_ptr<JacobiPolynomial>>(m, "JacobiPolynomial")
        .def_property_readonly("lam",
                               [](const JacobiPolynomial& p) { return p.lam.entries(); })
        .def_property_readonly("support",
                               [](const JacobiPolynomial& p) {
                                   std::vector<std::vector<int>> s;
                                   for (const auto& w : p.support) s.push_back(w.entries());
                                   return s;
                               })
        .def_readonly("coeffs", &JacobiPolynomial::coeffs)
        .def_readonly("c_value", &JacobiPolynomial::c_value)
        .def_readonly("norm_sq", &JacobiPolynomial::norm_sq)
        .def_readonly("plancherel_weight", &JacobiPolynomial::plancherel_weight)
        .def_readonly("gram_condition", &JacobiPolynomial::gram_condition)
        .def("eval_R", &JacobiPolynomial::eval_R, py::arg("x"))
        .def("eval_P", &JacobiPolynomial::eval_P, py::arg("x"));

    py::class_<JacobiEngine>(m, "JacobiEngine")
        .def(py::init([](const RankProfile& p, int grid_order, double max_condition) {
                 return new JacobiEngine(p, {grid_order, max_condition});
             }),
             py::arg("profile"), py::arg("grid_order") = 64, py::arg("max_condition") = 1e12)
        .def("polynomial",
             [](JacobiEngine& e, const std::vector<int>& lam) {
                 return std::const_pointer_cast<JacobiPolynomial>(
                     e.polynomial(DominantWeight(lam, e.profile().weight_scale())));
             },
             py::arg("lam"))
        .def("inner_product_R",
             [](JacobiEngine& e, const JacobiPolynomial& a, const JacobiPolynomial& b) {
                 return e.inner_product_R(a, b);
             })
        .def("weights_up_to",
             [](const JacobiEngine& e, int max_one_norm) {
                 std::vector<std::vector<int>> out;
                 for (const auto& w : e.weights_up_to(max_one_norm)) out.push_back(w.entries());
                 return out;
             },
             py::arg("max_one_norm"));

    m.def("c_function",
          [](const std::vector<int>& lam, const RankProfile& p) {
              return c_function(DominantWeight(lam, p.weight_scale()), p);
          },
          py::arg("lam"), py::arg("profile"));

    py::class_<EmpiricalMeasure>(m, "EmpiricalMeasure")
        .def_readonly("atoms", &EmpiricalMeasure::atoms)
        .def_readonly("weights", &EmpiricalMeasure::weights)
        .def_readonly("profile", &EmpiricalMeasure::profile)
        .def_readonly("seed", &EmpiricalMeasure::seed)
        .def_readonly("n_samples", &EmpiricalMeasure::n_samples);

    m.def("convolve",
          [](const std::vector<double>& x, const std::vector<double>& y, const RankProfile& p,
             std::size_t n_samples, std::uint64_t seed) {
              Rng rng(seed);
              return convolve(x, y, p, n_samples, rng);
          },
          py::arg("x"), py::arg("y"), py::arg("profile"), py::arg("n_samples"), py::arg("seed"));

    py::class_<ConvolutionReport>(m, "ConvolutionReport")
        .def_readonly("lhs", &ConvolutionReport::lhs)
        .def_readonly("rhs_estimate", &ConvolutionReport::rhs_estimate)
        .def_readonly("std_error", &ConvolutionReport::std_error)
        .def_readonly("z_score", &ConvolutionReport::z_score);

    m.def("product_formula_check",
          [](const JacobiPolynomial& poly, const std::vector<double>& x,
             const std::vector<double>& y, const RankProfile& p, std::size_t n_samples,
             std::uint64_t seed) {
              Rng rng(seed);
              return product_formula_check(poly, x, y, p, n_samples, rng);
          },
          py::arg("poly"), py::arg("x"), py::arg("y"), py::arg("profile"), py::arg("n_samples"),
          py::arg("seed"));

    m.def("estimate_kappa",
          [](const RankProfile& p, std::uint64_t n_samples, std::uint64_t seed) {
              Rng rng(seed);
              auto est = estimate_kappa(p, n_samples, rng);
              return py::make_tuple(est.estimate, est.std_error);
          },
          py::arg("profile"), py::arg("n_samples"), py::arg("seed"));

    py::class_<ClassicalJacobiParams>(m, "ClassicalJacobiParams")
        .def(py::init([](double alpha, double beta, int n) {
                 return ClassicalJacobiParams{alpha, beta, n};
             }),
             py::arg("alpha"), py::arg("beta"), py::arg("n"))
        .def_readonly("alpha", &ClassicalJacobiParams::alpha)
        .def_readonly("beta", &ClassicalJacobiParams::beta)
        .def_readonly("n", &ClassicalJacobiParams::n);

    m.def("classical_R",
          [](double alpha, double beta, int n, double t) {
              return classical_R({alpha, beta, n}, t);
          },
          py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("t"));

    py::class_<Rank1Map>(m, "Rank1Map")
        .def_readonly("alpha", &Rank1Map::alpha)
        .def_readonly("beta", &Rank1Map::beta)
        .def_readonly("lambda_divisor", &Rank1Map::lambda_divisor)
        .def_readonly("argument_scale", &Rank1Map::argument_scale)
        .def("argument", &Rank1Map::argument, py::arg("x"));

    m.def("rank1_param_map", &rank1_param_map, py::arg("profile"));

    m.def("koornwinder_product",
          [](double alpha, double beta, int n, double t, double s, int order) {
              return koornwinder_product({alpha, beta, n}, t, s, order, order);
          },
          py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("t"), py::arg("s"),
          py::arg("order") = 64);
}
