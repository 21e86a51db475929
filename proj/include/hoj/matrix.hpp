#pragma once

#include <complex>
#include <vector>

namespace hoj {

// A quaternion w + x i + y j + z k. Real and complex scalars embed with the
// trailing components zero, which gives one arithmetic path for all fields.
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    static Quaternion real(double a) { return {a, 0.0, 0.0, 0.0}; }
    static Quaternion complex(double re, double im) { return {re, im, 0.0, 0.0}; }

    Quaternion conj() const { return {w, -x, -y, -z}; }
    double norm_sq() const { return w * w + x * x + y * y + z * z; }

    Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }
    Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
};

enum class Field { R, C, H };

int field_dim(Field f);
Field field_from_dim(int d);

// Square matrix over R, C or H; entries stored as quaternions.
class MatrixF {
  public:
    MatrixF(Field field, int n);
    static MatrixF identity(Field field, int n);

    Field field() const { return field_; }
    int dim() const { return n_; }

    Quaternion& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Quaternion& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    MatrixF adjoint() const;
    MatrixF operator*(const MatrixF& o) const;
    MatrixF operator-(const MatrixF& o) const;
    MatrixF operator+(const MatrixF& o) const;

    MatrixF scaled_rows(const std::vector<double>& d) const;
    MatrixF scaled_cols(const std::vector<double>& d) const;

    double max_abs_component() const;

  private:
    Field field_;
    int n_;
    std::vector<Quaternion> a_;
};

// Dense complex matrix, square, row-major.
struct CMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;

    explicit CMatrix(int n_ = 0) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}
    std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const std::complex<double>& at(int i, int j) const {
        return a[static_cast<std::size_t>(i) * n + j];
    }
};

CMatrix cmat_multiply(const CMatrix& a, const CMatrix& b);
CMatrix cmat_adjoint(const CMatrix& a);
std::complex<double> cmat_determinant(CMatrix a);

// Complex image of a quaternionic matrix A = A1 + A2 j as the 2q x 2q block
// matrix [[A1, A2], [-conj(A2), conj(A1)]]. Multiplicative and adjoint
// compatible; each singular value of A appears twice in the image.
CMatrix chi_embedding(const MatrixF& a);

// q x q complex image for R/C matrices, chi embedding for H.
CMatrix complex_rep(const MatrixF& a);

// Eigenvalues of a complex Hermitian matrix, nonincreasing, via the real
// symmetric embedding [[Re, -Im], [Im, Re]] whose spectrum doubles.
std::vector<double> hermitian_eigenvalues(const CMatrix& h, int max_sweeps = 50);

// Singular spectrum: nonincreasing singular values; for H computed from the
// chi embedding with the doubled values deduplicated.
std::vector<double> spec_s(const MatrixF& a);

// Delta(A)^exponent for Hermitian positive semidefinite A: the ordinary
// determinant over R/C and the Dieudonne determinant sqrt(det chi_A) over H,
// evaluated through eigenvalue logarithms. Eigenvalues below -1e-12 raise
// NegativeEigenvalue; smaller noise clamps to zero.
double delta_det_power(const MatrixF& a, double exponent);

// The geometric kernel: arccos of the singular spectrum of
// cos(x) v cos(y) - sin(x) w sin(y), sorted nonincreasing into the closed
// alcove. d(x, 0, v, w) = x and d(0, y, v, w) = y hold exactly for unitary v,
// and are returned as such. Singular values above 1 + 1e-10 raise
// SpectrumOutOfRange; smaller excess clamps to 1.
std::vector<double> kernel_d(const std::vector<double>& x, const std::vector<double>& y,
                             const MatrixF& v, const MatrixF& w);

}  // namespace hoj
