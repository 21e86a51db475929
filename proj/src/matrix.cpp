#include "hoj/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hoj/errors.hpp"
#include "hoj/numeric.hpp"

namespace hoj {

int field_dim(Field f) {
    switch (f) {
        case Field::R: return 1;
        case Field::C: return 2;
        case Field::H: return 4;
    }
    return 0;
}

Field field_from_dim(int d) {
    switch (d) {
        case 1: return Field::R;
        case 2: return Field::C;
        case 4: return Field::H;
    }
    throw std::invalid_argument("field_from_dim: d must be 1, 2 or 4");
}

MatrixF::MatrixF(Field field, int n) : field_(field), n_(n), a_(static_cast<std::size_t>(n) * n) {}

MatrixF MatrixF::identity(Field field, int n) {
    MatrixF m(field, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Quaternion::real(1.0);
    return m;
}

MatrixF MatrixF::adjoint() const {
    MatrixF m(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = at(j, i).conj();
    return m;
}

MatrixF MatrixF::operator*(const MatrixF& o) const {
    MatrixF m(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Quaternion s;
            for (int k = 0; k < n_; ++k) s = s + at(i, k) * o.at(k, j);
            m.at(i, j) = s;
        }
    return m;
}

MatrixF MatrixF::operator-(const MatrixF& o) const {
    MatrixF m(field_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

MatrixF MatrixF::operator+(const MatrixF& o) const {
    MatrixF m(field_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

MatrixF MatrixF::scaled_rows(const std::vector<double>& d) const {
    MatrixF m(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j) * d[i];
    return m;
}

MatrixF MatrixF::scaled_cols(const std::vector<double>& d) const {
    MatrixF m(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j) * d[j];
    return m;
}

double MatrixF::max_abs_component() const {
    double m = 0.0;
    for (const auto& q : a_)
        m = std::max({m, std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
    return m;
}

CMatrix cmat_multiply(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < a.n; ++k) s += a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

CMatrix cmat_adjoint(const CMatrix& a) {
    CMatrix c(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) c.at(i, j) = std::conj(a.at(j, i));
    return c;
}

std::complex<double> cmat_determinant(CMatrix a) {
    std::complex<double> det = 1.0;
    for (int col = 0; col < a.n; ++col) {
        int piv = col;
        for (int r = col + 1; r < a.n; ++r)
            if (std::abs(a.at(r, col)) > std::abs(a.at(piv, col))) piv = r;
        if (std::abs(a.at(piv, col)) == 0.0) return 0.0;
        if (piv != col) {
            for (int c = 0; c < a.n; ++c) std::swap(a.at(piv, c), a.at(col, c));
            det = -det;
        }
        det *= a.at(col, col);
        for (int r = col + 1; r < a.n; ++r) {
            std::complex<double> f = a.at(r, col) / a.at(col, col);
            for (int c = col; c < a.n; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return det;
}

CMatrix chi_embedding(const MatrixF& a) {
    if (a.field() != Field::H)
        throw std::invalid_argument("chi_embedding: requires a quaternionic matrix");
    const int q = a.dim();
    CMatrix c(2 * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            // entry = (w + x i) + (y + z i) j
            std::complex<double> a1(a.at(i, j).w, a.at(i, j).x);
            std::complex<double> a2(a.at(i, j).y, a.at(i, j).z);
            c.at(i, j) = a1;
            c.at(i, j + q) = a2;
            c.at(i + q, j) = -std::conj(a2);
            c.at(i + q, j + q) = std::conj(a1);
        }
    return c;
}

CMatrix complex_rep(const MatrixF& a) {
    if (a.field() == Field::H) return chi_embedding(a);
    CMatrix c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            c.at(i, j) = std::complex<double>(a.at(i, j).w, a.at(i, j).x);
    return c;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h, int max_sweeps) {
    const int n = h.n;
    std::vector<double> s(static_cast<std::size_t>(2 * n) * (2 * n), 0.0);
    auto set = [&](int i, int j, double v) { s[static_cast<std::size_t>(i) * 2 * n + j] = v; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double re = h.at(i, j).real(), im = h.at(i, j).imag();
            set(i, j, re);
            set(i + n, j + n, re);
            set(i, j + n, -im);
            set(i + n, j, im);
        }
    auto ev = symmetric_eigenvalues(std::move(s), 2 * n, max_sweeps);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = ev[2 * i];  // spectrum doubles in the embedding
    return out;
}

namespace {

std::vector<double> field_eigenvalues(const MatrixF& a) {
    if (a.field() == Field::R) {
        const int n = a.dim();
        std::vector<double> s(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(i) * n + j] = a.at(i, j).w;
        return symmetric_eigenvalues(std::move(s), n);
    }
    return hermitian_eigenvalues(complex_rep(a));
}

}  // namespace

std::vector<double> spec_s(const MatrixF& a) {
    std::vector<double> ev;
    if (a.field() == Field::R) {
        ev = field_eigenvalues(a.adjoint() * a);
    } else {
        CMatrix x = complex_rep(a);
        ev = hermitian_eigenvalues(cmat_multiply(cmat_adjoint(x), x));
    }
    std::vector<double> sv(ev.size());
    for (std::size_t i = 0; i < ev.size(); ++i) sv[i] = std::sqrt(std::max(ev[i], 0.0));
    if (a.field() == Field::H) {
        // every value of the 2q-list appears twice; keep one representative
        std::vector<double> dedup(a.dim());
        for (int i = 0; i < a.dim(); ++i) dedup[i] = sv[2 * i];
        return dedup;
    }
    return sv;
}

double delta_det_power(const MatrixF& a, double exponent) {
    std::vector<double> ev = field_eigenvalues(a);
    const double half = (a.field() == Field::H) ? 0.5 : 1.0;

    bool has_zero = false;
    double log_det = 0.0;
    for (double e : ev) {
        if (e < -1e-12)
            throw NegativeEigenvalue("delta_det_power: eigenvalue " + std::to_string(e));
        if (e <= 0.0)
            has_zero = true;
        else
            log_det += std::log(e);
    }
    if (exponent == 0.0) return 1.0;
    if (has_zero)
        return exponent > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::exp(exponent * half * log_det);
}

std::vector<double> kernel_d(const std::vector<double>& x, const std::vector<double>& y,
                             const MatrixF& v, const MatrixF& w) {
    const int q = v.dim();
    auto all_zero = [](const std::vector<double>& t) {
        for (double c : t)
            if (c != 0.0) return false;
        return true;
    };
    // neutral-element identities: the spectrum of cos(x) v is exactly cos(x)
    if (all_zero(y)) return x;
    if (all_zero(x)) return y;

    std::vector<double> cx(q), sx(q), cy(q), sy(q);
    for (int i = 0; i < q; ++i) {
        cx[i] = std::cos(x[i]);
        sx[i] = std::sin(x[i]);
        cy[i] = std::cos(y[i]);
        sy[i] = std::sin(y[i]);
    }
    MatrixF m = v.scaled_rows(cx).scaled_cols(cy) - w.scaled_rows(sx).scaled_cols(sy);
    std::vector<double> sigma = spec_s(m);
    if (!sigma.empty() && sigma.front() > 1.0 + 1e-10)
        throw SpectrumOutOfRange("kernel_d: singular value " + std::to_string(sigma.front()));
    std::vector<double> z(q);
    for (int i = 0; i < q; ++i) z[i] = std::acos(std::min(sigma[i], 1.0));
    std::reverse(z.begin(), z.end());  // arccos of a nonincreasing list ascends
    return z;
}

}  // namespace hoj
