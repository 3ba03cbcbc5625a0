#pragma once

#include <string>

#include "weylpav/errors.hpp"
#include "weylpav/exactmat/matrix.hpp"
#include "weylpav/ppav.hpp"
#include "weylpav/rootsys.hpp"
#include "weylpav/symplectic.hpp"

namespace weylpav {

/// The centralizer of the embedded Weyl group in Sp(2n, Z), identified with
/// Gamma^0(N) (upper-right entry divisible by N), and the modular curve that
/// parameterizes the family.
struct CentralizerReport {
    RootSystemId system;
    BigInt level;

    std::string group() const { return "Gamma^0(" + level.get_str() + ")"; }
    std::string curve() const { return "H_1/" + group(); }

    /// Level 1 is the full modular group, written Gamma.
    std::string display_group() const { return level == 1 ? "Gamma" : group(); }
    std::string display_curve() const { return "H_1/" + display_group(); }
};

/// Least N >= 1 with N * z0 integral, found by direct search.
inline BigInt centralizer_level(const RootSystemId& id) {
    const RatMat z0 = riemann_family(id).z0;
    for (BigInt n = 1;; ++n) {
        if (to_integral(z0 * Rat(n))) return n;
    }
}

/// [[a I, b z0], [c z0^-1, d I]]. Throws DeterminantNotOne if ad - bc != 1
/// and LevelViolation if b * z0 is not integral.
inline SymplecticMat centralizer_element(const RootSystemId& id, const BigInt& a, const BigInt& b, const BigInt& c,
                                         const BigInt& d) {
    if (a * d - b * c != 1) throw DeterminantNotOne();
    const std::size_t n = id.dim();
    const auto upper = to_integral(riemann_family(id).z0 * Rat(b));
    if (!upper) {
        throw LevelViolation("b = " + b.get_str() + " is not a multiple of the level " +
                             centralizer_level(id).get_str() + " of " + id.tag());
    }
    IntMat m(2 * n, 2 * n);
    m.set_block(0, 0, IntMat::identity(n) * a);
    m.set_block(0, n, *upper);
    m.set_block(n, 0, gram_matrix(id) * c);
    m.set_block(n, n, IntMat::identity(n) * d);
    return SymplecticMat(std::move(m));
}

inline CentralizerReport modular_curve_report(const RootSystemId& id) { return {id, centralizer_level(id)}; }

}  // namespace weylpav
