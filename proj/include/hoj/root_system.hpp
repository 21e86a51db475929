#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace hoj {

// Multiplicities on the three root lengths of BC_q: m1 on e_i, m2 on 2e_i,
// m3 on e_i +- e_j. The case m2 = 0 degenerates to B_q.
struct Multiplicities {
    double m1 = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
};

enum class RootClass { Short, Long, Medium };  // e_i, 2e_i, e_i +- e_j

struct Root {
    std::vector<int> vec;
    RootClass cls;
    double squared_length() const;
};

// Rank q over a field of real dimension d in {1,2,4}, with interpolation
// parameter mu. Derived multiplicities are m = (2 mu - d q, d - 1, d); valid
// profiles require mu > gamma - 1 with gamma = d (q - 1/2) + 1.
class RankProfile {
  public:
    RankProfile(int q, int d, double mu);

    int rank() const { return q_; }
    int field_dim() const { return d_; }
    double mu() const { return mu_; }
    double gamma() const;
    Multiplicities multiplicities() const;

    // Spacing of the dominant weight lattice on the alcove: entries of
    // lattice weights are multiples of 2 (see lower_set / weights_up_to).
    int weight_scale() const { return 2; }

    // Geometric profiles are those with 2 mu / d an integer p >= 2q; there the
    // convolution coincides with a compact double-coset convolution.
    bool is_geometric() const;
    std::optional<int> geometric_p() const;

  private:
    int q_;
    int d_;
    double mu_;
};

std::vector<Root> positive_roots(int q);
double root_multiplicity(const Root& root, const Multiplicities& m);
std::vector<std::pair<Root, double>> positive_roots(const RankProfile& profile);

// rho = (1/2) sum over positive roots of m_alpha * alpha; closed form
// rho_i = m1/2 + m2 + m3 (q - i).
std::vector<double> rho(const Multiplicities& m, int q);
std::vector<double> rho(const RankProfile& profile);

// <lam, alpha> / <alpha, alpha>
double lambda_alpha(const std::vector<double>& lam, const Root& alpha);

// A dominant lattice point: nonincreasing, nonnegative integer entries, all
// divisible by `scale`.
class DominantWeight {
  public:
    DominantWeight(std::vector<int> entries, int scale = 1);

    const std::vector<int>& entries() const { return entries_; }
    int scale() const { return scale_; }
    int rank() const { return static_cast<int>(entries_.size()); }
    int one_norm() const;
    double euclidean_norm() const;
    bool is_zero() const;
    // True when entries are not all congruent mod 2.
    bool mixed_parity() const;

    bool operator==(const DominantWeight& o) const { return entries_ == o.entries_; }
    bool operator!=(const DominantWeight& o) const { return !(*this == o); }

  private:
    std::vector<int> entries_;
    int scale_;
};

// Graded lexicographic order (by 1-norm, ties by lexicographic entries);
// the fixed total order used for deterministic coefficient tables.
bool grlex_less(const DominantWeight& a, const DominantWeight& b);

// Membership of an arbitrary integer vector in the nonnegative-integer span
// of the positive roots: all prefix sums nonnegative.
bool in_positive_root_cone(const std::vector<int>& v);

// Dominance order: mu <= lam iff lam - mu lies in the positive root cone.
bool dominance_leq(const DominantWeight& mu, const DominantWeight& lam);

// All dominant weights mu of the given lattice spacing with mu <= lam,
// sorted by grlex (so lam itself is last).
std::vector<DominantWeight> lower_set(const DominantWeight& lam);

// A signed permutation: (w x)_i = sign_i * x_{perm_i}.
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> sign;

    template <typename T>
    std::vector<T> apply(const std::vector<T>& x) const {
        std::vector<T> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = static_cast<T>(sign[i]) * x[perm[i]];
        return y;
    }
};

// The full hyperoctahedral group, all 2^q q! elements.
std::vector<WeylElement> weyl_group(int q);

// Orbit of lam under the Weyl group, without repetition.
std::set<std::vector<int>> weyl_orbit(const std::vector<int>& lam);

}  // namespace hoj
