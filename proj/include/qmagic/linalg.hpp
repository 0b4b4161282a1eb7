#pragma once

// Dense complex vectors and matrices with a cyclic-Jacobi Hermitian
// eigensolver. Row-major storage throughout; the largest matrix in this
// project is 841 x 841, so no attempt is made at BLAS-grade performance.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "qmagic/errors.hpp"

namespace qmagic {

using Complex = std::complex<double>;
using Vec = std::vector<Complex>;

class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Complex{0, 0}) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Mat& operator+=(const Mat& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Mat& operator*=(Complex s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, Complex s) { return a *= s; }
    friend Mat operator*(Complex s, Mat a) { return a *= s; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{0, 0}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Vec operator*(const Mat& m, const Vec& v) {
        Vec r(m.rows_, Complex{0, 0});
        for (std::size_t i = 0; i < m.rows_; ++i) {
            Complex s{0, 0};
            for (std::size_t j = 0; j < m.cols_; ++j) s += m(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

    Mat dagger() const {
        Mat d(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) d(j, i) = std::conj((*this)(i, j));
        return d;
    }

    Complex trace() const {
        Complex t{0, 0};
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Complex> a_;
};

// <u|v>, conjugate-linear in the first argument.
inline Complex dot(const Vec& u, const Vec& v) {
    Complex s{0, 0};
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

inline double norm(const Vec& v) { return std::sqrt(std::real(dot(v, v))); }

// |u><v|
inline Mat outer(const Vec& u, const Vec& v) {
    Mat m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
    return m;
}

inline double max_abs(const Mat& m) {
    double best = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, std::abs(m(i, j)));
    return best;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0, 0}) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    k(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
        }
    return k;
}

inline Vec kron(const Vec& a, const Vec& b) {
    Vec k(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) k[i * b.size() + j] = a[i] * b[j];
    return k;
}

inline Mat matrix_power(Mat m, std::int64_t e) {
    Mat r = Mat::identity(m.rows());
    while (e > 0) {
        if (e & 1) r = r * m;
        m = m * m;
        e >>= 1;
    }
    return r;
}

inline double hermiticity_defect(const Mat& m) {
    double worst = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

inline bool is_hermitian(const Mat& m, double tol = 1e-10) {
    return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

inline bool is_unitary(const Mat& m, double tol = 1e-10) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m.dagger() * m - Mat::identity(m.rows())) <= tol;
}

struct EigenResult {
    std::vector<double> eigenvalues;  // ascending
    Mat eigenvectors;                 // orthonormal columns, matching order
};

// Full spectrum of a Hermitian matrix by cyclic Jacobi rotations. Sweeps
// continue until the off-diagonal Frobenius mass drops below 1e-12 * ||H||_F.
// The input is symmetrized as (H + H^dag)/2 first to wash out roundoff;
// anything asymmetric beyond `tol` is rejected.
inline EigenResult hermitian_eigen(const Mat& h, double tol = 1e-10) {
    if (h.rows() != h.cols())
        throw NotHermitian("hermitian_eigen: matrix is not square", 0.0);
    const double defect = hermiticity_defect(h);
    if (defect > tol)
        throw NotHermitian("hermitian_eigen: asymmetry " + std::to_string(defect) +
                               " exceeds tolerance " + std::to_string(tol),
                           defect);

    const std::size_t n = h.rows();
    Mat a = (h + h.dagger()) * Complex{0.5, 0};
    Mat v = Mat::identity(n);

    double fro = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fro += std::norm(a(i, j));
    fro = std::sqrt(fro);
    const double stop = (fro > 0 ? 1e-12 * fro : 0.0);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * std::norm(a(i, j));
        if (std::sqrt(off) <= stop) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-300) continue;
                const Complex phase = apq / r;  // e^{i phi}
                const double app = std::real(a(p, p));
                const double aqq = std::real(a(q, q));
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0 ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                           : 1.0 / (-tau + std::sqrt(1.0 + tau * tau)));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Columns p,q of A and V: right-multiply by the rotation
                //   [ c        -s e^{i phi} ]
                //   [ s e^{-i phi}   c      ]
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip + s * std::conj(phase) * aiq;
                    a(i, q) = -s * phase * aip + c * aiq;
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip + s * std::conj(phase) * viq;
                    v(i, q) = -s * phase * vip + c * viq;
                }
                // Rows p,q of A: left-multiply by the conjugate transpose.
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj + s * phase * aqj;
                    a(q, j) = -s * std::conj(phase) * apj + c * aqj;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = std::real(a(p, p));
                a(q, q) = std::real(a(q, q));
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return std::real(a(i, i)) < std::real(a(j, j));
    });

    EigenResult res;
    res.eigenvalues.resize(n);
    res.eigenvectors = Mat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        res.eigenvalues[k] = std::real(a(order[k], order[k]));
        for (std::size_t i = 0; i < n; ++i) res.eigenvectors(i, k) = v(i, order[k]);
    }
    return res;
}

inline double lambda_max(const Mat& h, double tol = 1e-10) {
    return hermitian_eigen(h, tol).eigenvalues.back();
}

}  // namespace qmagic
