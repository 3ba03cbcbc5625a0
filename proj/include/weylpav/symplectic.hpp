#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylpav/errors.hpp"
#include "weylpav/exactmat/elimination.hpp"
#include "weylpav/exactmat/matrix.hpp"

namespace weylpav {

/// J = [[0, I], [-I, 0]] of size 2n.
inline IntMat standard_alternating_form(std::size_t n) {
    IntMat j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = 1;
        j(n + i, i) = -1;
    }
    return j;
}

inline bool is_symplectic(const IntMat& m) {
    if (!m.is_square() || m.rows() % 2 != 0) {
        throw std::invalid_argument("is_symplectic: matrix must be square of even size");
    }
    const IntMat j = standard_alternating_form(m.rows() / 2);
    return m.transpose() * j * m == j;
}

/// An integral 2n x 2n matrix M with M^t J M = J, viewed as blocks
/// [[A, B], [C, D]] of size n.
class SymplecticMat {
public:
    /// Throws NotSymplectic if m does not preserve J.
    explicit SymplecticMat(IntMat m) : m_(std::move(m)) {
        if (!is_symplectic(m_)) throw NotSymplectic();
    }

    std::size_t n() const noexcept { return m_.rows() / 2; }
    const IntMat& matrix() const noexcept { return m_; }

    IntMat a() const { return m_.block(0, 0, n(), n()); }
    IntMat b() const { return m_.block(0, n(), n(), n()); }
    IntMat c() const { return m_.block(n(), 0, n(), n()); }
    IntMat d() const { return m_.block(n(), n(), n(), n()); }

    friend SymplecticMat operator*(const SymplecticMat& x, const SymplecticMat& y) {
        return SymplecticMat(x.m_ * y.m_);
    }
    friend bool operator==(const SymplecticMat&, const SymplecticMat&) = default;

private:
    IntMat m_;
};

inline IntMat block_diagonal(const IntMat& top, const IntMat& bottom) {
    IntMat m(top.rows() + bottom.rows(), top.cols() + bottom.cols());
    m.set_block(0, 0, top);
    m.set_block(top.rows(), top.cols(), bottom);
    return m;
}

/// [[rho, 0], [0, rho^-t]]. Throws NonUnimodular.
inline SymplecticMat embed_block_diag(const IntMat& rho) {
    const IntMat inv = unimodular_inverse(rho);
    return SymplecticMat(block_diagonal(rho, inv.transpose()));
}

/// Siegel action Z -> (A Z + B)(C Z + D)^-1. Throws SingularDenominator.
inline RatMat modular_action(const SymplecticMat& m, const RatMat& z) {
    if (z.rows() != m.n() || z.cols() != m.n()) throw std::invalid_argument("modular_action: shape mismatch");
    const RatMat num = to_rational(m.a()) * z + to_rational(m.b());
    const RatMat den = to_rational(m.c()) * z + to_rational(m.d());
    RatMat den_inv;
    try {
        den_inv = rat_inverse(den);
    } catch (const SingularMatrix&) {
        throw SingularDenominator();
    }
    return num * den_inv;
}

/// particular + span(basis), a set of symmetric n x n rational matrices.
/// particular is absent when no symmetric matrix satisfies the constraints.
/// Basis elements are scaled to primitive integral matrices.
struct AffineMatrixSpace {
    std::size_t n = 0;
    std::optional<RatMat> particular;
    std::vector<RatMat> basis;

    std::size_t dimension() const noexcept { return basis.size(); }
};

namespace detail {

inline std::size_t sym_unknowns(std::size_t n) { return n * (n + 1) / 2; }

inline RatMat sym_from_vector(const RatVec& x, std::size_t n) {
    RatMat z(n, n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++k) {
            z(i, j) = x[k];
            z(j, i) = x[k];
        }
    return z;
}

}  // namespace detail

/// Symmetric Z with (A Z + B) A^t = Z for every generator. Only generators
/// with C = 0 are accepted (for those D^-1 = A^t and the condition is
/// linear in Z); others throw UnsupportedGenerator.
inline AffineMatrixSpace fixed_symmetric_space(const std::vector<SymplecticMat>& generators) {
    if (generators.empty()) throw std::invalid_argument("fixed_symmetric_space: no generators");
    const std::size_t n = generators.front().n();
    const std::size_t unknowns = detail::sym_unknowns(n);

    RatMat coeff(generators.size() * n * n, unknowns);
    RatVec rhs(coeff.rows(), Rat(0));
    std::size_t row = 0;
    for (const SymplecticMat& g : generators) {
        if (g.n() != n) throw std::invalid_argument("fixed_symmetric_space: generator sizes differ");
        if (!g.c().is_zero()) throw UnsupportedGenerator();
        const IntMat a = g.a();
        const IntMat shift = g.b() * a.transpose();
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q, ++row) {
                std::size_t k = 0;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i; j < n; ++j, ++k) {
                        BigInt c = a(p, i) * a(q, j);
                        if (i != j) c += a(p, j) * a(q, i);
                        if ((p == i && q == j) || (p == j && q == i)) c -= 1;
                        coeff(row, k) = Rat(c);
                    }
                rhs[row] = Rat(-shift(p, q));
            }
    }

    const AffineSolution sol = solve_affine(coeff, rhs);
    AffineMatrixSpace space;
    space.n = n;
    if (sol.particular) space.particular = detail::sym_from_vector(*sol.particular, n);
    for (const RatVec& k : sol.kernel_basis) {
        space.basis.push_back(to_rational(primitive_integral_multiple(detail::sym_from_vector(k, n))));
    }
    return space;
}

/// Isomorphism check for the families t*z1 and t*z2 under
/// A (I, t z1) = (I, t z2) diag(A, A^-t); independent of t, this is
/// A z1 A^t = z2. Throws NonUnimodular.
inline bool verify_family_isomorphism(const IntMat& a, const RatMat& z1, const RatMat& z2) {
    if (!is_unimodular(a)) throw NonUnimodular();
    if (a.cols() != z1.rows() || a.rows() != z2.rows()) {
        throw std::invalid_argument("verify_family_isomorphism: shape mismatch");
    }
    const RatMat ar = to_rational(a);
    return ar * z1 * ar.transpose() == z2;
}

/// Splitting check F (I, t z0) = (I, t diag(d)) diag(F, M); independent of
/// t, this is F z0 = diag(d) M. Throws NonUnimodular.
inline bool verify_decomposition_witness(const IntMat& f, const std::vector<BigInt>& d, const IntMat& m,
                                         const RatMat& z0) {
    if (!is_unimodular(f)) throw NonUnimodular();
    if (d.size() != f.rows()) throw std::invalid_argument("verify_decomposition_witness: divisor count mismatch");
    const IntMat dm = IntMat::diagonal(d) * m;
    return to_rational(f) * z0 == to_rational(dm);
}

}  // namespace weylpav

namespace weylpav {

/// Rank of a family of equally-sized matrices viewed as vectors.
inline std::size_t matrix_family_rank(const std::vector<RatMat>& family) {
    if (family.empty()) return 0;
    const std::size_t len = family.front().rows() * family.front().cols();
    RatMat rows(family.size(), len);
    for (std::size_t k = 0; k < family.size(); ++k) {
        if (family[k].rows() * family[k].cols() != len) throw std::invalid_argument("matrix_family_rank: shape mismatch");
        for (std::size_t e = 0; e < len; ++e) rows(k, e) = family[k].entries()[e];
    }
    return rank(rows);
}

inline bool spans_equal(const std::vector<RatMat>& a, const std::vector<RatMat>& b) {
    std::vector<RatMat> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t r = matrix_family_rank(both);
    return matrix_family_rank(a) == r && matrix_family_rank(b) == r;
}

inline bool is_proportional(const RatMat& a, const RatMat& b) {
    if (a.is_zero() || b.is_zero()) return false;
    return primitive_integral_multiple(a) == primitive_integral_multiple(b);
}

}  // namespace weylpav
