#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylpav/exactmat/elimination.hpp"
#include "weylpav/exactmat/matrix.hpp"
#include "weylpav/exactmat/smith.hpp"
#include "weylpav/rootsys.hpp"

namespace weylpav {

/// The one-parameter family of Riemann matrices Z_t = t * z0, t in the upper
/// half plane. The parameter is symbolic; Im t > 0 is a precondition of the
/// family and is never evaluated.
struct RiemannFamily {
    RootSystemId system;
    RatMat z0;

    std::string description() const { return "Z_t = t * Z0(" + system.tag() + "), Im t > 0"; }
};

/// Elementary divisors of the root lattice inside its dual, largest first;
/// each divides its predecessor.
struct DivisorChain {
    std::vector<BigInt> divisors;

    BigInt product() const {
        BigInt p = 1;
        for (const BigInt& d : divisors) p *= d;
        return p;
    }
};

/// The torus as a product of elliptic curves E_{t/d}^m, one factor per
/// distinct divisor d, ordered by increasing d.
struct EllipticDecomposition {
    struct Factor {
        BigInt divisor;
        std::size_t multiplicity;
    };
    std::vector<Factor> factors;

    std::size_t dimension() const {
        std::size_t n = 0;
        for (const auto& f : factors) n += f.multiplicity;
        return n;
    }

    /// Renders e.g. "E_t^6 x E_{t/2}".
    std::string render() const {
        std::ostringstream os;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k) os << " x ";
            const auto& f = factors[k];
            if (f.divisor == 1) os << "E_t";
            else os << "E_{t/" << f.divisor << '}';
            if (f.multiplicity > 1) os << '^' << f.multiplicity;
        }
        return os.str();
    }
};

inline RiemannFamily riemann_family(const RootSystemId& id) {
    RatMat z0 = rat_inverse(to_rational(gram_matrix(id)));
    return {id, std::move(z0)};
}

/// Invariant factors of the Gram matrix, reversed into descending order.
inline DivisorChain divisor_chain(const RootSystemId& id) {
    std::vector<BigInt> f = invariant_factors(gram_matrix(id));
    std::reverse(f.begin(), f.end());
    return {std::move(f)};
}

inline EllipticDecomposition elliptic_decomposition(const DivisorChain& chain) {
    std::vector<BigInt> ds = chain.divisors;
    std::sort(ds.begin(), ds.end());
    EllipticDecomposition out;
    for (const BigInt& d : ds) {
        if (!out.factors.empty() && out.factors.back().divisor == d) ++out.factors.back().multiplicity;
        else out.factors.push_back({d, 1});
    }
    return out;
}

inline EllipticDecomposition elliptic_decomposition(const RootSystemId& id) {
    return elliptic_decomposition(divisor_chain(id));
}

/// Exponent of the discriminant group L*/L. Computed both as the least
/// common denominator of z0 and as the largest invariant factor of the Gram
/// matrix; the two must agree.
inline BigInt exponent_level(const RootSystemId& id) {
    const BigInt by_denominators = lcm_of_denominators(riemann_family(id).z0);
    const BigInt by_snf = divisor_chain(id).divisors.front();
    if (by_denominators != by_snf) {
        throw std::logic_error("exponent_level: denominator lcm and largest invariant factor disagree for " + id.tag());
    }
    return by_denominators;
}

/// Degree of the induced polarization on the coroot lattice: the determinant
/// of the normalized coroot Gram matrix.
inline BigInt coroot_polarization_degree(const RootSystemId& id) {
    const BigInt det = determinant(coroot_gram_matrix(id));
    if (det <= 0) throw std::logic_error("coroot Gram matrix of " + id.tag() + " is not positive definite");
    return det;
}

}  // namespace weylpav
