#include "hoj/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hoj {

double Root::squared_length() const {
    double s = 0.0;
    for (int c : vec) s += static_cast<double>(c) * c;
    return s;
}

RankProfile::RankProfile(int q, int d, double mu) : q_(q), d_(d), mu_(mu) {
    if (q < 1) throw std::invalid_argument("RankProfile: rank must be positive");
    if (d != 1 && d != 2 && d != 4) throw std::invalid_argument("RankProfile: d must be 1, 2 or 4");
    if (!(mu > gamma() - 1.0))
        throw std::invalid_argument("RankProfile: mu must exceed gamma - 1 = d(q - 1/2)");
}

double RankProfile::gamma() const { return d_ * (q_ - 0.5) + 1.0; }

Multiplicities RankProfile::multiplicities() const {
    return {2.0 * mu_ - d_ * q_, static_cast<double>(d_ - 1), static_cast<double>(d_)};
}

std::optional<int> RankProfile::geometric_p() const {
    double p = 2.0 * mu_ / d_;
    double rounded = std::round(p);
    if (std::abs(p - rounded) > 1e-9) return std::nullopt;
    int pi = static_cast<int>(rounded);
    if (pi < 2 * q_) return std::nullopt;
    return pi;
}

bool RankProfile::is_geometric() const { return geometric_p().has_value(); }

std::vector<Root> positive_roots(int q) {
    std::vector<Root> roots;
    for (int i = 0; i < q; ++i) {
        Root r{std::vector<int>(q, 0), RootClass::Short};
        r.vec[i] = 1;
        roots.push_back(r);
    }
    for (int i = 0; i < q; ++i) {
        Root r{std::vector<int>(q, 0), RootClass::Long};
        r.vec[i] = 2;
        roots.push_back(r);
    }
    for (int i = 0; i < q; ++i) {
        for (int j = i + 1; j < q; ++j) {
            Root minus{std::vector<int>(q, 0), RootClass::Medium};
            minus.vec[i] = 1;
            minus.vec[j] = -1;
            roots.push_back(minus);
            Root plus{std::vector<int>(q, 0), RootClass::Medium};
            plus.vec[i] = 1;
            plus.vec[j] = 1;
            roots.push_back(plus);
        }
    }
    return roots;
}

double root_multiplicity(const Root& root, const Multiplicities& m) {
    switch (root.cls) {
        case RootClass::Short: return m.m1;
        case RootClass::Long: return m.m2;
        case RootClass::Medium: return m.m3;
    }
    return 0.0;
}

std::vector<std::pair<Root, double>> positive_roots(const RankProfile& profile) {
    auto m = profile.multiplicities();
    std::vector<std::pair<Root, double>> out;
    for (auto& r : positive_roots(profile.rank())) {
        double mult = root_multiplicity(r, m);
        out.emplace_back(std::move(r), mult);
    }
    return out;
}

std::vector<double> rho(const Multiplicities& m, int q) {
    std::vector<double> r(q);
    for (int i = 0; i < q; ++i) r[i] = 0.5 * m.m1 + m.m2 + m.m3 * (q - 1 - i);
    return r;
}

std::vector<double> rho(const RankProfile& profile) {
    return rho(profile.multiplicities(), profile.rank());
}

double lambda_alpha(const std::vector<double>& lam, const Root& alpha) {
    double num = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i) num += lam[i] * alpha.vec[i];
    return num / alpha.squared_length();
}

DominantWeight::DominantWeight(std::vector<int> entries, int scale)
    : entries_(std::move(entries)), scale_(scale) {
    if (entries_.empty()) throw std::invalid_argument("DominantWeight: empty entry vector");
    if (scale_ < 1) throw std::invalid_argument("DominantWeight: scale must be >= 1");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0) throw std::invalid_argument("DominantWeight: negative entry");
        if (i > 0 && entries_[i] > entries_[i - 1])
            throw std::invalid_argument("DominantWeight: entries must be nonincreasing");
        if (entries_[i] % scale_ != 0)
            throw std::invalid_argument("DominantWeight: entry not divisible by lattice scale");
    }
}

int DominantWeight::one_norm() const {
    int s = 0;
    for (int e : entries_) s += e;
    return s;
}

double DominantWeight::euclidean_norm() const {
    double s = 0.0;
    for (int e : entries_) s += static_cast<double>(e) * e;
    return std::sqrt(s);
}

bool DominantWeight::is_zero() const { return one_norm() == 0; }

bool DominantWeight::mixed_parity() const {
    for (int e : entries_)
        if ((e - entries_[0]) % 2 != 0) return true;
    return false;
}

bool grlex_less(const DominantWeight& a, const DominantWeight& b) {
    if (a.one_norm() != b.one_norm()) return a.one_norm() < b.one_norm();
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end());
}

bool in_positive_root_cone(const std::vector<int>& v) {
    // v = sum c_k (e_k - e_{k+1}) + c_q e_q with c_k >= 0 iff every prefix sum
    // of v is nonnegative; the simple roots of BC_q span the same cone as the
    // full positive system.
    long long prefix = 0;
    for (int c : v) {
        prefix += c;
        if (prefix < 0) return false;
    }
    return true;
}

bool dominance_leq(const DominantWeight& mu, const DominantWeight& lam) {
    if (mu.rank() != lam.rank())
        throw std::invalid_argument("dominance_leq: rank mismatch");
    std::vector<int> diff(lam.rank());
    for (int i = 0; i < lam.rank(); ++i) diff[i] = lam.entries()[i] - mu.entries()[i];
    return in_positive_root_cone(diff);
}

namespace {

void enumerate_partitions(int q, int scale, int max_entry, std::vector<int>& cur,
                          const DominantWeight& lam, std::vector<DominantWeight>& out) {
    if (static_cast<int>(cur.size()) == q) {
        DominantWeight w(cur, scale);
        if (dominance_leq(w, lam)) out.push_back(std::move(w));
        return;
    }
    int cap = cur.empty() ? max_entry : cur.back();
    for (int e = 0; e <= cap; e += scale) {
        cur.push_back(e);
        enumerate_partitions(q, scale, max_entry, cur, lam, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<DominantWeight> lower_set(const DominantWeight& lam) {
    // mu <= lam forces mu_1 <= lam_1 (first prefix sum), so the search box is
    // bounded by the top entry.
    std::vector<DominantWeight> out;
    std::vector<int> cur;
    enumerate_partitions(lam.rank(), lam.scale(), lam.entries()[0], cur, lam, out);
    std::sort(out.begin(), out.end(), grlex_less);
    return out;
}

std::vector<WeylElement> weyl_group(int q) {
    std::vector<int> perm(q);
    for (int i = 0; i < q; ++i) perm[i] = i;
    std::vector<WeylElement> group;
    do {
        for (int mask = 0; mask < (1 << q); ++mask) {
            WeylElement w{perm, std::vector<int>(q, 1)};
            for (int i = 0; i < q; ++i)
                if (mask & (1 << i)) w.sign[i] = -1;
            group.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return group;
}

std::set<std::vector<int>> weyl_orbit(const std::vector<int>& lam) {
    std::set<std::vector<int>> orbit;
    for (const auto& w : weyl_group(static_cast<int>(lam.size()))) orbit.insert(w.apply(lam));
    return orbit;
}

}  // namespace hoj
