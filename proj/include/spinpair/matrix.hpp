// Small fixed-size complex linear algebra for a two-spin (4-dimensional) Hilbert space.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace spinpair {

using cplx = std::complex<double>;

using Vec4 = std::array<cplx, 4>;
using Mat2 = std::array<cplx, 4>;  // row-major 2x2

class Mat4 {
public:
    Mat4() : m_{} {}

    static Mat4 identity() {
        Mat4 r;
        for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
        return r;
    }

    static Mat4 diag(double d0, double d1, double d2, double d3) {
        Mat4 r;
        r(0, 0) = d0;
        r(1, 1) = d1;
        r(2, 2) = d2;
        r(3, 3) = d3;
        return r;
    }

    // |v><v|
    static Mat4 outer(const Vec4& v) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r(i, j) = v[i] * std::conj(v[j]);
        return r;
    }

    cplx& operator()(int row, int col) { return m_[static_cast<std::size_t>(4 * row + col)]; }
    const cplx& operator()(int row, int col) const {
        return m_[static_cast<std::size_t>(4 * row + col)];
    }

    Mat4 operator+(const Mat4& o) const {
        Mat4 r;
        for (std::size_t k = 0; k < 16; ++k) r.m_[k] = m_[k] + o.m_[k];
        return r;
    }

    Mat4 operator-(const Mat4& o) const {
        Mat4 r;
        for (std::size_t k = 0; k < 16; ++k) r.m_[k] = m_[k] - o.m_[k];
        return r;
    }

    Mat4 operator*(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                const cplx a = (*this)(i, k);
                if (a == cplx{}) continue;
                for (int j = 0; j < 4; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Mat4 operator*(cplx s) const {
        Mat4 r;
        for (std::size_t k = 0; k < 16; ++k) r.m_[k] = m_[k] * s;
        return r;
    }

    friend Mat4 operator*(cplx s, const Mat4& m) { return m * s; }

    Vec4 operator*(const Vec4& v) const {
        Vec4 r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Mat4 adjoint() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    Mat4 transpose() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    cplx trace() const { return m_[0] + m_[5] + m_[10] + m_[15]; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : m_) m = std::max(m, std::abs(x));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& x : m_) s += std::norm(x);
        return std::sqrt(s);
    }

    // sqrt(2 * sum_{i<j} |a_ij|^2), the quantity Jacobi sweeps drive to zero
    double off_diagonal_norm() const {
        double s = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) s += std::norm((*this)(i, j));
        return std::sqrt(s);
    }

    bool is_hermitian(double tol) const {
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        return true;
    }

private:
    std::array<cplx, 16> m_;
};

inline double max_abs_diff(const Mat4& a, const Mat4& b) { return (a - b).max_abs(); }

// <a|b> with the left argument conjugated
inline cplx vdot(const Vec4& a, const Vec4& b) {
    cplx s{};
    for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline double vnorm(const Vec4& v) { return std::sqrt(std::real(vdot(v, v))); }

inline Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) =
                        a[static_cast<std::size_t>(2 * i + j)] * b[static_cast<std::size_t>(2 * k + l)];
    return r;
}

inline Mat2 pauli_x() { return {cplx{0}, cplx{1}, cplx{1}, cplx{0}}; }
inline Mat2 pauli_y() { return {cplx{0}, cplx{0, -1}, cplx{0, 1}, cplx{0}}; }
inline Mat2 pauli_z() { return {cplx{1}, cplx{0}, cplx{0}, cplx{-1}}; }

}  // namespace spinpair
