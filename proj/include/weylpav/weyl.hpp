#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "weylpav/errors.hpp"
#include "weylpav/exactmat/elimination.hpp"
#include "weylpav/exactmat/matrix.hpp"
#include "weylpav/rootsys.hpp"

namespace weylpav {

class NonUnimodularGenerator : public NonUnimodular {
public:
    NonUnimodularGenerator() : NonUnimodular("group generator is not unimodular") {}
};

/// A finite matrix group given by its elements in canonical (lexicographic)
/// order. When truncated is set the enumeration hit its cap and elements is
/// only the part found so far.
struct MatrixGroup {
    std::size_t dimension = 0;
    std::vector<IntMat> elements;
    std::vector<IntMat> generators;
    bool truncated = false;

    std::size_t order() const noexcept { return elements.size(); }

    bool contains(const IntMat& g) const { return std::binary_search(elements.begin(), elements.end(), g); }
};

namespace detail {

using SmallMat = std::vector<std::int64_t>;

struct SmallMatHash {
    std::size_t operator()(const SmallMat& m) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t x : m) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct SmallOverflow {};

inline SmallMat small_product(const SmallMat& a, const SmallMat& b, std::size_t n) {
    SmallMat c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::int64_t aik = a[i * n + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t t;
                if (__builtin_mul_overflow(aik, b[k * n + j], &t) || __builtin_add_overflow(c[i * n + j], t, &c[i * n + j])) {
                    throw SmallOverflow{};
                }
            }
        }
    return c;
}

inline bool fits_small(const IntMat& m) {
    return std::all_of(m.entries().begin(), m.entries().end(), [](const BigInt& x) { return x.fits_slong_p(); });
}

inline SmallMat to_small(const IntMat& m) {
    SmallMat s;
    s.reserve(m.rows() * m.cols());
    for (const BigInt& x : m.entries()) s.push_back(x.get_si());
    return s;
}

inline IntMat from_small(const SmallMat& s, std::size_t n) {
    std::vector<BigInt> e(s.begin(), s.end());
    return IntMat(n, n, std::move(e));
}

// Breadth-first closure under right multiplication by the generators. For
// finite groups of invertible matrices this is the generated group, because
// every inverse is a positive power.
inline std::pair<std::vector<SmallMat>, bool> small_closure(const std::vector<SmallMat>& gens, std::size_t n,
                                                             std::size_t cap) {
    SmallMat id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    std::unordered_set<SmallMat, SmallMatHash> seen{id};
    std::vector<SmallMat> found{id};
    std::deque<std::size_t> frontier{0};
    if (cap == 0) return {{}, true};
    while (!frontier.empty()) {
        const std::size_t at = frontier.front();
        frontier.pop_front();
        for (const SmallMat& g : gens) {
            SmallMat h = small_product(found[at], g, n);
            if (seen.contains(h)) continue;
            if (found.size() == cap) return {std::move(found), true};
            seen.insert(h);
            found.push_back(std::move(h));
            frontier.push_back(found.size() - 1);
        }
    }
    return {std::move(found), false};
}

inline std::pair<std::vector<IntMat>, bool> big_closure(const std::vector<IntMat>& gens, std::size_t n,
                                                         std::size_t cap) {
    if (cap == 0) return {{}, true};
    std::set<IntMat> seen{IntMat::identity(n)};
    std::vector<IntMat> found{IntMat::identity(n)};
    for (std::size_t at = 0; at < found.size(); ++at) {
        for (const IntMat& g : gens) {
            IntMat h = found[at] * g;
            if (seen.contains(h)) continue;
            if (found.size() == cap) return {std::move(found), true};
            seen.insert(h);
            found.push_back(std::move(h));
        }
    }
    return {std::move(found), false};
}

}  // namespace detail

/// Enumerates the group generated by `generators`, stopping once `cap`
/// elements have been found. Throws NonUnimodularGenerator.
inline MatrixGroup generate_group(const std::vector<IntMat>& generators, std::size_t cap) {
    if (generators.empty()) throw std::invalid_argument("generate_group: no generators");
    const std::size_t n = generators.front().rows();
    for (const IntMat& g : generators) {
        if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generate_group: generator shapes differ");
        if (!is_unimodular(g)) throw NonUnimodularGenerator();
    }

    MatrixGroup group;
    group.dimension = n;
    group.generators = generators;

    const bool small = std::all_of(generators.begin(), generators.end(), detail::fits_small);
    if (small) {
        std::vector<detail::SmallMat> gens;
        for (const IntMat& g : generators) gens.push_back(detail::to_small(g));
        try {
            auto [found, truncated] = detail::small_closure(gens, n, cap);
            // Lexicographic order on int64 entries agrees with the order on IntMat.
            std::sort(found.begin(), found.end());
            group.elements.reserve(found.size());
            for (const auto& s : found) group.elements.push_back(detail::from_small(s, n));
            group.truncated = truncated;
            return group;
        } catch (const detail::SmallOverflow&) {
            // fall through to arbitrary precision
        }
    }
    auto [found, truncated] = detail::big_closure(generators, n, cap);
    std::sort(found.begin(), found.end());
    group.elements = std::move(found);
    group.truncated = truncated;
    return group;
}

/// True iff g^t s g = s for every generator g, which suffices for the whole
/// generated group.
inline bool check_invariance(const std::vector<IntMat>& generators, const IntMat& s) {
    for (const IntMat& g : generators) {
        if (g.rows() != s.rows() || g.cols() != s.cols()) {
            throw std::invalid_argument("check_invariance: shape mismatch");
        }
        if (g.transpose() * s * g != s) return false;
    }
    return true;
}

/// Classical Weyl group orders.
inline BigInt expected_order(const RootSystemId& id) {
    const unsigned long n = static_cast<unsigned long>(id.rank());
    BigInt fact;
    switch (id.family()) {
        case Family::A:
            mpz_fac_ui(fact.get_mpz_t(), n + 1);
            return fact;
        case Family::B:
        case Family::C: {
            mpz_fac_ui(fact.get_mpz_t(), n);
            BigInt two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n);
            return two_pow * fact;
        }
        case Family::D: {
            mpz_fac_ui(fact.get_mpz_t(), n);
            BigInt two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n - 1);
            return two_pow * fact;
        }
        case Family::G2: return 12;
        case Family::F4: return 1152;
        case Family::E6: return 51840;
        case Family::E7: return 2903040;
        case Family::E8: return 696729600;
    }
    return 0;
}

}  // namespace weylpav
