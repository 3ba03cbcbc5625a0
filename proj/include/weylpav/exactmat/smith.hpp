#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "weylpav/exactmat/matrix.hpp"

namespace weylpav {

/// u * input * v = d with u, v unimodular and d diagonal.
///
/// Diagonal entries are non-negative and ascending under divisibility:
/// d(j, j) divides d(j + 1, j + 1). Zero entries, if any, come last.
struct SnfResult {
    IntMat u;
    IntMat d;
    IntMat v;
};

namespace detail {

inline void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

inline void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += f * row[src]
inline void add_row(IntMat& m, std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

inline void add_col(IntMat& m, std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace detail

inline SnfResult smith_normal_form(const IntMat& m) {
    IntMat a = m;
    IntMat u = IntMat::identity(m.rows());
    IntMat v = IntMat::identity(m.cols());
    const std::size_t steps = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest non-zero entry of the trailing block becomes the pivot.
            std::size_t pr = t, pc = t;
            bool found = false;
            for (std::size_t i = t; i < a.rows(); ++i)
                for (std::size_t j = t; j < a.cols(); ++j)
                    if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                        found = true;
                    }
            if (!found) return {std::move(u), std::move(a), std::move(v)};

            detail::swap_rows(a, t, pr);
            detail::swap_rows(u, t, pr);
            detail::swap_cols(a, t, pc);
            detail::swap_cols(v, t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                const BigInt q = a(i, t) / a(t, t);
                detail::add_row(a, i, t, -q);
                detail::add_row(u, i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                const BigInt q = a(t, j) / a(t, t);
                detail::add_col(a, j, t, -q);
                detail::add_col(v, j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide the whole trailing block; otherwise fold an
            // offending row into row t and reduce again with a smaller pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        detail::add_row(a, t, i, 1);
                        detail::add_row(u, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < a.cols(); ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < u.cols(); ++j) u(t, j) = -u(t, j);
        }
    }
    return {std::move(u), std::move(a), std::move(v)};
}

/// Diagonal of the Smith normal form, ascending.
inline std::vector<BigInt> invariant_factors(const IntMat& m) {
    const SnfResult snf = smith_normal_form(m);
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) out.push_back(snf.d(i, i));
    return out;
}

}  // namespace weylpav
