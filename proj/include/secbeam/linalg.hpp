#ifndef SECBEAM_LINALG_HPP
#define SECBEAM_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace secbeam {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Entries must stay finite; callers that
/// ingest external data should run validate_finite().
class CMatrix {
  public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static CMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    const std::vector<Complex>& data() const { return data_; }

    bool all_finite() const;
    void validate_finite() const;  // throws InvalidInput

    double frobenius_norm() const;

  private:
    int rows_, cols_;
    std::vector<Complex> data_;
};

/// Hermitian matrix storing only the upper triangle; the diagonal is kept
/// real and the lower triangle is derived, so A = A^H holds by construction.
class HermitianMatrix {
  public:
    HermitianMatrix() : dim_(0) {}
    explicit HermitianMatrix(int dim)
        : dim_(dim), upper_(static_cast<size_t>(dim) * (dim + 1) / 2) {}

    static HermitianMatrix identity(int n);
    /// Requires ||A - A^H|| entries within tol; throws InvalidInput otherwise.
    static HermitianMatrix from_full(const CMatrix& a, double tol = 1e-12);
    /// (A + A^H)/2 of an arbitrary square matrix.
    static HermitianMatrix symmetrized(const CMatrix& a);
    /// Rank-one h h^H.
    static HermitianMatrix outer(const std::vector<Complex>& h);

    int dim() const { return dim_; }

    Complex at(int i, int j) const {
        if (i <= j) return upper_[index(i, j)];
        return std::conj(upper_[index(j, i)]);
    }
    /// Sets entry (i, j) with i <= j; a diagonal entry keeps only the real part.
    void set(int i, int j, Complex v) {
        if (i == j) v = Complex(v.real(), 0.0);
        upper_[index(i, j)] = v;
    }

    CMatrix to_full() const;
    double frobenius_norm() const;
    bool all_finite() const;

    HermitianMatrix& operator+=(const HermitianMatrix& o);
    HermitianMatrix& operator-=(const HermitianMatrix& o);
    HermitianMatrix& operator*=(double scale);
    friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) {
        return a += b;
    }
    friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) {
        return a -= b;
    }
    friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

  private:
    size_t index(int i, int j) const {
        return static_cast<size_t>(i) * dim_ - static_cast<size_t>(i) * (i - 1) / 2 + (j - i);
    }

    int dim_;
    std::vector<Complex> upper_;  // row-major upper triangle, i <= j
};

struct EigResult {
    std::vector<double> eigenvalues;  // sorted descending
    CMatrix eigenvectors;             // unitary, columns match eigenvalues
};

/// Full eigendecomposition by cyclic complex Jacobi rotations. dim <= 64.
EigResult hermitian_eig(const HermitianMatrix& a);

/// Tr(A B); exactly real for Hermitian arguments.
double trace_inner(const HermitianMatrix& a, const HermitianMatrix& b);

/// min eigenvalue >= -tol * max(1, ||A||_F)
bool psd_check(const HermitianMatrix& a, double tol);

/// [[Re A, -Im A], [Im A, Re A]]; Tr(embed(A) embed(B)) = 2 Tr(A B).
Eigen::MatrixXd real_embed(const HermitianMatrix& a);

}  // namespace secbeam

#endif
