#include "secbeam/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "secbeam/errors.hpp"

namespace secbeam {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool CMatrix::all_finite() const {
    for (const Complex& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

void CMatrix::validate_finite() const {
    if (!all_finite()) throw InvalidInput("matrix has non-finite entries");
}

double CMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex& z : data_) sum += std::norm(z);
    return std::sqrt(sum);
}

HermitianMatrix HermitianMatrix::identity(int n) {
    HermitianMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

HermitianMatrix HermitianMatrix::from_full(const CMatrix& a, double tol) {
    if (a.rows() != a.cols()) throw InvalidInput("from_full: matrix not square");
    a.validate_finite();
    const int n = a.rows();
    const double scale = std::max(1.0, a.frobenius_norm());
    HermitianMatrix h(n);
    for (int i = 0; i < n; ++i) {
        if (std::abs(a(i, i).imag()) > tol * scale)
            throw InvalidInput("from_full: diagonal not real");
        for (int j = i; j < n; ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol * scale)
                throw InvalidInput("from_full: matrix not Hermitian");
            h.set(i, j, 0.5 * (a(i, j) + std::conj(a(j, i))));
        }
    }
    return h;
}

HermitianMatrix HermitianMatrix::symmetrized(const CMatrix& a) {
    if (a.rows() != a.cols()) throw InvalidInput("symmetrized: matrix not square");
    const int n = a.rows();
    HermitianMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) h.set(i, j, 0.5 * (a(i, j) + std::conj(a(j, i))));
    return h;
}

HermitianMatrix HermitianMatrix::outer(const std::vector<Complex>& v) {
    const int n = static_cast<int>(v.size());
    HermitianMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) h.set(i, j, v[i] * std::conj(v[j]));
    return h;
}

CMatrix HermitianMatrix::to_full() const {
    CMatrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(i, j) = at(i, j);
    return m;
}

double HermitianMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (int i = 0; i < dim_; ++i) {
        sum += std::norm(at(i, i));
        for (int j = i + 1; j < dim_; ++j) sum += 2.0 * std::norm(at(i, j));
    }
    return std::sqrt(sum);
}

bool HermitianMatrix::all_finite() const {
    for (const Complex& z : upper_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
    if (o.dim_ != dim_) throw InvalidInput("HermitianMatrix: dim mismatch");
    for (size_t k = 0; k < upper_.size(); ++k) upper_[k] += o.upper_[k];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
    if (o.dim_ != dim_) throw InvalidInput("HermitianMatrix: dim mismatch");
    for (size_t k = 0; k < upper_.size(); ++k) upper_[k] -= o.upper_[k];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double scale) {
    for (Complex& z : upper_) z *= scale;
    return *this;
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) sum += 2.0 * std::norm(a(i, j));
    return std::sqrt(sum);
}

}  // namespace

EigResult hermitian_eig(const HermitianMatrix& h) {
    const int n = h.dim();
    if (n <= 0) throw InvalidInput("hermitian_eig: empty matrix");
    if (n > 64) throw InvalidInput("hermitian_eig: dim > 64 unsupported");
    if (!h.all_finite()) throw InvalidInput("hermitian_eig: non-finite entries");

    CMatrix a = h.to_full();
    CMatrix v = CMatrix::identity(n);
    const double norm = std::max(h.frobenius_norm(), 1e-300);

    const int max_sweeps = 100;
    const double target = 1e-14 * norm;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= target) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double rho = std::abs(apq);
                if (rho <= 1e-300) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const Complex phase = apq / rho;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * rho);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(tau, 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = t * c * phase;  // |s|^2 + c^2 = 1

                // A <- U^H A U with U = I except U(p,p)=c, U(p,q)=s, U(q,p)=-conj(s), U(q,q)=c
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s) * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = std::conj(s) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
                for (int k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(s) * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigResult result;
    result.eigenvalues.resize(n);
    result.eigenvectors = CMatrix(n, n);
    for (int col = 0; col < n; ++col) {
        result.eigenvalues[col] = a(order[col], order[col]).real();
        for (int k = 0; k < n; ++k) result.eigenvectors(k, col) = v(k, order[col]);
    }
    return result;
}

double trace_inner(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw InvalidInput("trace_inner: dim mismatch");
    double sum = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        sum += a.at(i, i).real() * b.at(i, i).real();
        for (int j = i + 1; j < a.dim(); ++j) {
            // Tr(AB) accumulates a_ij * conj(b_ij) + conj; imaginary parts cancel.
            const Complex prod = a.at(i, j) * std::conj(b.at(i, j));
            sum += 2.0 * prod.real();
        }
    }
    return sum;
}

bool psd_check(const HermitianMatrix& a, double tol) {
    const EigResult eig = hermitian_eig(a);
    const double floor = tol * std::max(1.0, a.frobenius_norm());
    return eig.eigenvalues.back() >= -floor;
}

Eigen::MatrixXd real_embed(const HermitianMatrix& a) {
    const int n = a.dim();
    Eigen::MatrixXd e(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex z = a.at(i, j);
            e(i, j) = z.real();
            e(i + n, j + n) = z.real();
            e(i, j + n) = -z.imag();
            e(i + n, j) = z.imag();
        }
    }
    return e;
}

}  // namespace secbeam
