#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylpav/errors.hpp"
#include "weylpav/exactmat/matrix.hpp"

namespace weylpav {

namespace detail {

inline void require_square(std::size_t rows, std::size_t cols, const char* who) {
    if (rows != cols) throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

struct RowEchelon {
    RatMat reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each non-zero row
};

/// Gauss-Jordan reduction over the rationals; the first `ncols` columns are
/// eligible pivots (trailing columns ride along as right-hand sides).
inline RowEchelon reduce(RatMat m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Rat inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rat f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace detail

/// Exact inverse. Throws SingularMatrix when det(m) = 0.
inline RatMat rat_inverse(const RatMat& m) {
    detail::require_square(m.rows(), m.cols(), "rat_inverse");
    const std::size_t n = m.rows();
    RatMat aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, RatMat::identity(n));
    auto ech = detail::reduce(std::move(aug), n);
    if (ech.pivots.size() != n) throw SingularMatrix();
    return ech.reduced.block(0, n, n, n);
}

/// Exact determinant by Gaussian elimination over the rationals.
inline Rat determinant(const RatMat& m) {
    detail::require_square(m.rows(), m.cols(), "determinant");
    RatMat a = m;
    const std::size_t n = a.rows();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rat f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

/// Integer determinant by Bareiss' fraction-free elimination; every division
/// below is exact.
inline BigInt determinant(const IntMat& m) {
    detail::require_square(m.rows(), m.cols(), "determinant");
    IntMat a = m;
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline bool is_unimodular(const IntMat& m) {
    if (!m.is_square()) return false;
    return abs(determinant(m)) == 1;
}

/// Integer inverse of a unimodular matrix. Throws NonUnimodular otherwise.
inline IntMat unimodular_inverse(const IntMat& m) {
    if (!is_unimodular(m)) throw NonUnimodular();
    // The rational inverse of a unimodular matrix is integral.
    return *to_integral(rat_inverse(to_rational(m)));
}

/// Solution set of coeff * x = rhs: a particular solution (absent when the
/// system is inconsistent) and a basis of the kernel of coeff.
///
/// The particular solution has every free variable set to zero, and kernel
/// vector k has free variable k set to one and the others to zero.
struct AffineSolution {
    std::optional<RatVec> particular;
    std::vector<RatVec> kernel_basis;
};

inline AffineSolution solve_affine(const RatMat& coeff, std::span<const Rat> rhs) {
    if (rhs.size() != coeff.rows()) {
        throw std::invalid_argument("solve_affine: right-hand side length differs from row count");
    }
    const std::size_t n = coeff.cols();
    RatMat aug(coeff.rows(), n + 1);
    aug.set_block(0, 0, coeff);
    for (std::size_t i = 0; i < rhs.size(); ++i) aug(i, n) = rhs[i];
    const auto ech = detail::reduce(std::move(aug), n);
    const RatMat& r = ech.reduced;

    AffineSolution out;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : ech.pivots) is_pivot[c] = true;

    bool consistent = true;
    for (std::size_t i = ech.pivots.size(); i < r.rows(); ++i)
        if (r(i, n) != 0) consistent = false;
    if (consistent) {
        RatVec x(n, Rat(0));
        for (std::size_t k = 0; k < ech.pivots.size(); ++k) x[ech.pivots[k]] = r(k, n);
        out.particular = std::move(x);
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec k(n, Rat(0));
        k[f] = 1;
        for (std::size_t row = 0; row < ech.pivots.size(); ++row) k[ech.pivots[row]] = -r(row, f);
        out.kernel_basis.push_back(std::move(k));
    }
    return out;
}

inline std::size_t rank(const RatMat& m) { return detail::reduce(m, m.cols()).pivots.size(); }

/// Positive definiteness of a symmetric matrix via its leading principal
/// minors. Elimination without row exchanges produces the ratios
/// minor_k / minor_{k-1} as pivots, so every pivot must be positive.
inline bool is_positive_definite(const RatMat& m) {
    detail::require_square(m.rows(), m.cols(), "is_positive_definite");
    if (!m.is_symmetric()) throw NotSymmetric();
    RatMat a = m;
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rat f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

}  // namespace weylpav
