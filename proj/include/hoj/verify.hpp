#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hoj/jacobi.hpp"
#include "hoj/report.hpp"
#include "hoj/root_system.hpp"
#include "hoj/sampling.hpp"

namespace hoj {

struct VerifyConfig {
    RankProfile profile;
    std::vector<DominantWeight> weights;  // empty: lattice weights with 1-norm <= 4
    int grid_order = 64;
    std::size_t n_samples = 20000;
    std::uint64_t seed = 1;
};

// Suite names accepted by run_suite: product, support, neutral, commute,
// assoc, haar, plancherel, rank1, kappa.
const std::vector<std::string>& known_suites();

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config);

// Fixed evaluation pairs strictly inside the alcove, used by the product,
// support and commutativity suites.
std::vector<std::pair<std::vector<double>, std::vector<double>>> default_pairs(int q);

// A uniformly drawn point of the open alcove, kept `margin` away from walls.
std::vector<double> random_alcove_point(int q, Rng& rng, double margin = 0.05);

// Closed form of the kappa integral, available in rank one:
// pi^(d/2) Gamma(mu - d/2) / Gamma(mu).
std::optional<double> kappa_closed_form(const RankProfile& profile);

std::string weight_label(const DominantWeight& w);

}  // namespace hoj
