#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weylpav/errors.hpp"
#include "weylpav/exactmat/elimination.hpp"
#include "weylpav/exactmat/matrix.hpp"

namespace weylpav {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

/// An irreducible reduced root system, identified by family and rank.
///
/// Ranks: A >= 1; B, C >= 2; D >= 3 (D3 is A3 in another labelling);
/// E6, E7, E8, F4, G2 have their fixed rank.
class RootSystemId {
public:
    static RootSystemId make(Family family, int rank) {
        if (!valid(family, rank)) {
            throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                        std::string(family_name(family)));
        }
        return RootSystemId(family, rank);
    }

    static RootSystemId exceptional(Family family) { return make(family, fixed_rank(family)); }

    /// Parses tags such as "A4", "d5", "E8", "g2". Throws ParseError.
    static RootSystemId parse(std::string_view tag) {
        std::string t(tag);
        std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
        if (t.size() < 2) throw ParseError("unrecognised root system tag '" + std::string(tag) + "'");
        int rank = 0;
        const char* first = t.data() + 1;
        const char* last = t.data() + t.size();
        auto [ptr, ec] = std::from_chars(first, last, rank);
        if (ec != std::errc{} || ptr != last || t[1] == '0') {
            throw ParseError("unrecognised root system tag '" + std::string(tag) + "'");
        }
        Family family;
        switch (t[0]) {
            case 'A': family = Family::A; break;
            case 'B': family = Family::B; break;
            case 'C': family = Family::C; break;
            case 'D': family = Family::D; break;
            case 'E':
                if (rank == 6) family = Family::E6;
                else if (rank == 7) family = Family::E7;
                else if (rank == 8) family = Family::E8;
                else throw ParseError("no root system E" + std::to_string(rank));
                break;
            case 'F': family = Family::F4; break;
            case 'G': family = Family::G2; break;
            default: throw ParseError("unrecognised root system tag '" + std::string(tag) + "'");
        }
        if (!valid(family, rank)) throw ParseError("invalid rank in root system tag '" + std::string(tag) + "'");
        return RootSystemId(family, rank);
    }

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(rank_); }

    std::string tag() const {
        switch (family_) {
            case Family::A: return "A" + std::to_string(rank_);
            case Family::B: return "B" + std::to_string(rank_);
            case Family::C: return "C" + std::to_string(rank_);
            case Family::D: return "D" + std::to_string(rank_);
            default: return std::string(family_name(family_));
        }
    }

    friend bool operator==(const RootSystemId&, const RootSystemId&) = default;

    static constexpr std::string_view family_name(Family f) {
        switch (f) {
            case Family::A: return "A";
            case Family::B: return "B";
            case Family::C: return "C";
            case Family::D: return "D";
            case Family::E6: return "E6";
            case Family::E7: return "E7";
            case Family::E8: return "E8";
            case Family::F4: return "F4";
            case Family::G2: return "G2";
        }
        return "?";
    }

    static constexpr int fixed_rank(Family f) {
        switch (f) {
            case Family::E6: return 6;
            case Family::E7: return 7;
            case Family::E8: return 8;
            case Family::F4: return 4;
            case Family::G2: return 2;
            default: return 0;
        }
    }

    static constexpr bool valid(Family f, int rank) {
        switch (f) {
            case Family::A: return rank >= 1;
            case Family::B:
            case Family::C: return rank >= 2;
            case Family::D: return rank >= 3;
            default: return rank == fixed_rank(f);
        }
    }

private:
    RootSystemId(Family f, int r) : family_(f), rank_(r) {}

    Family family_;
    int rank_;
};

/// Every catalog system of rank at most max_rank, classical families first
/// (by family, then rank) followed by the exceptional ones.
inline std::vector<RootSystemId> catalog(int max_rank) {
    std::vector<RootSystemId> out;
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int n = 1; n <= max_rank; ++n)
            if (RootSystemId::valid(f, n)) out.push_back(RootSystemId::make(f, n));
    for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2})
        if (RootSystemId::fixed_rank(f) <= max_rank) out.push_back(RootSystemId::exceptional(f));
    return out;
}

/// Cartan matrix and squared root lengths for one system.
///
/// cartan(i, j) = 2 (a_i, a_j) / (a_j, a_j); half_norm[i] = (a_i, a_i) / 2.
struct CartanData {
    IntMat cartan;
    std::vector<Rat> half_norm;
};

namespace detail {

inline void link(IntMat& c, std::size_t i, std::size_t j, int cij = -1, int cji = -1) {
    c(i, j) = cij;
    c(j, i) = cji;
}

// Simply-laced E-type diagram in Bourbaki labelling (1-based node pairs).
inline IntMat e_type_cartan(std::size_t n) {
    IntMat c = IntMat::identity(n) * BigInt(2);
    link(c, 0, 2);
    link(c, 1, 3);
    for (std::size_t i = 2; i + 1 < n; ++i) link(c, i, i + 1);
    return c;
}

}  // namespace detail

/// Bourbaki Cartan data. Root lengths: simply-laced systems have all roots of
/// squared length 2; B_n uses (2, ..., 2, 1), C_n (2, ..., 2, 4), F4
/// (4, 4, 2, 2) and G2 (2, 6). The Gram matrix is then integral, with
/// coprime entries except for A1 and C2.
inline CartanData cartan_data(const RootSystemId& id) {
    const std::size_t n = id.dim();
    IntMat c = IntMat::identity(n) * BigInt(2);
    std::vector<Rat> half(n, Rat(1));
    switch (id.family()) {
        case Family::A:
            for (std::size_t i = 0; i + 1 < n; ++i) detail::link(c, i, i + 1);
            break;
        case Family::B:
            for (std::size_t i = 0; i + 2 < n; ++i) detail::link(c, i, i + 1);
            detail::link(c, n - 2, n - 1, -2, -1);
            half[n - 1] = frac(1, 2);
            break;
        case Family::C:
            for (std::size_t i = 0; i + 2 < n; ++i) detail::link(c, i, i + 1);
            detail::link(c, n - 2, n - 1, -1, -2);
            half[n - 1] = 2;
            break;
        case Family::D:
            for (std::size_t i = 0; i + 2 < n; ++i) detail::link(c, i, i + 1);
            detail::link(c, n - 3, n - 1);
            break;
        case Family::E6:
        case Family::E7:
        case Family::E8:
            c = detail::e_type_cartan(n);
            break;
        case Family::F4:
            detail::link(c, 0, 1);
            detail::link(c, 1, 2, -2, -1);
            detail::link(c, 2, 3);
            half = {Rat(2), Rat(2), Rat(1), Rat(1)};
            break;
        case Family::G2:
            detail::link(c, 0, 1, -1, -3);
            half = {Rat(1), Rat(3)};
            break;
    }
    return {std::move(c), std::move(half)};
}

inline IntMat cartan_matrix(const RootSystemId& id) { return cartan_data(id).cartan; }

/// Gram matrix S = C * diag(half_norm): S(i, j) = (a_i, a_j).
inline IntMat gram_matrix(const RootSystemId& id) {
    const CartanData cd = cartan_data(id);
    const RatMat s = to_rational(cd.cartan) * RatMat::diagonal(cd.half_norm);
    auto integral = to_integral(s);
    if (!integral || !integral->is_symmetric()) {
        throw std::logic_error("gram_matrix: catalog data for " + id.tag() + " is inconsistent");
    }
    return *integral;
}

/// Matrices of the simple reflections in the simple-root basis. Column j of
/// reflection i holds the coordinates of s_i(a_j) = a_j - cartan(j, i) a_i.
inline std::vector<IntMat> simple_reflections(const RootSystemId& id) {
    const IntMat c = cartan_matrix(id);
    const std::size_t n = id.dim();
    std::vector<IntMat> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        IntMat r = IntMat::identity(n);
        for (std::size_t j = 0; j < n; ++j) r(i, j) -= c(j, i);
        out.push_back(std::move(r));
    }
    return out;
}

/// Permutation matrix sending simple root a_i to a_perm[i].
inline IntMat permutation_matrix(const std::vector<std::size_t>& perm) {
    IntMat p(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) p(perm[i], i) = 1;
    return p;
}

/// Generators of the group of Dynkin diagram symmetries, as permutations of
/// the simple roots. Empty when the group is trivial.
inline std::vector<IntMat> diagram_automorphisms(const RootSystemId& id) {
    const std::size_t n = id.dim();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<IntMat> out;
    switch (id.family()) {
        case Family::A:
            if (n >= 2) {
                std::reverse(perm.begin(), perm.end());
                out.push_back(permutation_matrix(perm));
            }
            break;
        case Family::D:
            if (n == 4) {
                // S3 on the outer nodes 1, 3, 4.
                auto swap13 = perm;
                std::swap(swap13[0], swap13[2]);
                auto swap34 = perm;
                std::swap(swap34[2], swap34[3]);
                out.push_back(permutation_matrix(swap13));
                out.push_back(permutation_matrix(swap34));
            } else {
                // The fork swap; for n = 3 this is the flip of A3.
                std::swap(perm[n - 2], perm[n - 1]);
                out.push_back(permutation_matrix(perm));
            }
            break;
        case Family::E6:
            perm = {5, 1, 4, 3, 2, 0};
            out.push_back(permutation_matrix(perm));
            break;
        default:
            break;
    }
    return out;
}

/// Gram matrix of the simple coroots 2 a_i / (a_i, a_i), scaled by the lcm of
/// its denominators. The result is the Gram matrix of the dual system, so
/// B_n and C_n trade places and F4, G2 come back with reversed node order.
inline IntMat coroot_gram_matrix(const RootSystemId& id) {
    const IntMat s = gram_matrix(id);
    const std::size_t n = id.dim();
    RatMat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = Rat(4 * s(i, j)) / Rat(s(i, i) * s(j, j));
    return *to_integral(g * Rat(lcm_of_denominators(g)));
}

}  // namespace weylpav
