// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure. All comparisons are exact; the only tolerances are the time
// budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "weylpav/centralizer.hpp"
#include "weylpav/ppav.hpp"
#include "weylpav/reference.hpp"
#include "weylpav/symplectic.hpp"
#include "weylpav/weyl.hpp"

using namespace weylpav;

namespace {

constexpr double kE6BudgetSeconds = 30.0;
constexpr double kTotalBudgetSeconds = 60.0;
constexpr int kMaxRank = 8;
constexpr int kRandomWords = 200;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& what) {
        if (ok) detail += (detail.empty() ? "" : "; ") + what;
    }
};

RatMat z0_of(const RootSystemId& id) { return riemann_family(id).z0; }

std::vector<BigInt> ones_then(std::size_t n, std::vector<BigInt> tail) {
    std::vector<BigInt> v(tail.begin(), tail.end());
    while (v.size() < n) v.push_back(1);
    return v;  // descending: the non-trivial divisors come first
}

// Closed forms restated from the criteria, independent of the reference data.
std::vector<BigInt> published_chain(const RootSystemId& id) {
    const std::size_t n = id.dim();
    switch (id.family()) {
        case Family::A: return ones_then(n, {BigInt(id.rank() + 1)});
        case Family::B:
        case Family::E8: return ones_then(n, {});
        case Family::C:
        case Family::D: return id.rank() % 2 ? ones_then(n, {4}) : ones_then(n, {2, 2});
        case Family::E6: return ones_then(n, {3});
        case Family::E7: return ones_then(n, {2});
        case Family::F4: return ones_then(n, {2, 2});
        case Family::G2: return ones_then(n, {3});
    }
    return {};
}

BigInt published_level(const RootSystemId& id) {
    switch (id.family()) {
        case Family::A: return id.rank() + 1;
        case Family::B:
        case Family::E8: return 1;
        case Family::C:
        case Family::D: return id.rank() % 2 ? 4 : 2;
        case Family::E6:
        case Family::G2: return 3;
        case Family::E7:
        case Family::F4: return 2;
    }
    return 0;
}

BigInt published_degree(const RootSystemId& id) {
    switch (id.family()) {
        case Family::A: return id.rank() + 1;
        case Family::B: return 4;
        case Family::C: return 1;
        case Family::D: return 4;
        case Family::E6: return 3;
        case Family::E7: return 2;
        case Family::E8: return 1;
        case Family::F4: return 4;
        case Family::G2: return 3;
    }
    return 0;
}

Outcome published_riemann_matrices() {
    Outcome out;
    for (const auto& id : catalog(kMaxRank)) {
        const IntMat s = gram_matrix(id);
        const RatMat z0 = rat_inverse(to_rational(s));
        out.require(to_rational(s) * z0 == RatMat::identity(id.dim()), id.tag() + " S*z0 != I");
        const RatMat printed = reference::printed_z0(id);
        if (id.family() == Family::E7) {
            out.require(z0 != printed && to_integral(printed) == s, "E7 printed entry is not S");
            out.note("E7 documented-discrepancy (printed matrix equals S)");
        } else if (id.family() == Family::E8) {
            bool only_66 = true;
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t j = 0; j < 8; ++j)
                    only_66 = only_66 && ((i == 5 && j == 5) ? printed(i, j) == 22 && z0(i, j) == 12 : printed(i, j) == z0(i, j));
            out.require(only_66, "E8 differs outside entry (6,6)");
            out.note("E8 documented-discrepancy (entry (6,6): printed 22, exact 12)");
        } else {
            out.require(z0 == printed, id.tag() + " differs from published z0");
        }
    }
    return out;
}

Outcome divisor_chains() {
    Outcome out;
    for (const auto& id : catalog(kMaxRank)) {
        const DivisorChain chain = divisor_chain(id);
        out.require(chain.divisors == published_chain(id), id.tag() + " chain mismatch");
        out.require(elliptic_decomposition(chain).render() == reference::expected_decomposition(id),
                    id.tag() + " decomposition mismatch");
    }
    return out;
}

Outcome centralizer_levels() {
    Outcome out;
    for (const auto& id : catalog(kMaxRank)) {
        const BigInt level = centralizer_level(id);
        out.require(level == published_level(id), id.tag() + " level mismatch");
        out.require(level == divisor_chain(id).divisors.front(), id.tag() + " level != largest invariant factor");
        out.require(level == lcm_of_denominators(z0_of(id)), id.tag() + " level != lcm of denominators");
        out.require(modular_curve_report(id).curve() == "H_1/Gamma^0(" + level.get_str() + ")", id.tag() + " curve");
    }
    return out;
}

Outcome isomorphism_witnesses() {
    Outcome out;
    for (int n = 4; n <= kMaxRank; ++n) {
        const auto d = RootSystemId::make(Family::D, n), c = RootSystemId::make(Family::C, n);
        out.require(verify_family_isomorphism(reference::d_to_c_witness(n), z0_of(d), z0_of(c)), d.tag() + "->" + c.tag());
    }
    out.require(verify_family_isomorphism(reference::d4_to_f4_witness(), z0_of(RootSystemId::make(Family::D, 4)),
                                          z0_of(RootSystemId::exceptional(Family::F4))),
                "D4->F4");
    const RatMat g2 = z0_of(RootSystemId::exceptional(Family::G2)), a2 = z0_of(RootSystemId::make(Family::A, 2));
    const IntMat printed = reference::g2_to_a2_witness();
    out.require(!verify_family_isomorphism(printed, g2, a2) &&
                    verify_family_isomorphism(IntMat{{1, 0}, {0, -1}} * printed, g2, a2),
                "G2->A2 after diag(1,-1)");
    out.note("G2->A2 documented-discrepancy (composed with diag(1,-1))");
    for (int n = 1; n <= kMaxRank; ++n) {
        const auto a = RootSystemId::make(Family::A, n);
        RatMat target(a.dim(), a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) target(i, j) = i == j ? frac(n, n + 1) : frac(-1, n + 1);
        out.require(verify_family_isomorphism(reference::lower_bidiagonal(a.dim()), z0_of(a), target),
                    a.tag() + " alternate family");
    }
    out.note("alternate A_n family reached with t -> t/(n+1)");
    return out;
}

Outcome bn_splitting() {
    Outcome out;
    for (int n = 2; n <= kMaxRank; ++n) {
        const auto b = RootSystemId::make(Family::B, n);
        IntMat f = IntMat::identity(b.dim());
        for (std::size_t i = 1; i < b.dim(); ++i) f(i, i - 1) = -1;
        const RatMat z0 = z0_of(b);
        const auto m = to_integral(to_rational(f) * z0);
        const bool ok = m && verify_decomposition_witness(f, std::vector<BigInt>(b.dim(), BigInt(1)), *m, z0) &&
                        *m == unimodular_inverse(f).transpose() && is_symplectic(block_diagonal(f, *m)) &&
                        f.transpose() * f == gram_matrix(b);
        out.require(ok, b.tag());
    }
    return out;
}

Outcome cyclic5() {
    Outcome out;
    const auto space = fixed_symmetric_space({embed_block_diag(reference::cyclic5_generator())});
    const auto [first, second] = reference::cyclic5_family();
    out.require(space.dimension() == 2, "dimension " + std::to_string(space.dimension()));
    out.require(space.particular && space.particular->is_zero(), "not a linear space");
    out.require(spans_equal(space.basis, {to_rational(first), to_rational(second)}), "span differs");
    out.require(z0_of(RootSystemId::make(Family::A, 4)) * Rat(5) == to_rational(first), "5*z0(A4) mismatch");
    return out;
}

Outcome s5() {
    Outcome out;
    const auto [g1, g2] = reference::s5_symplectic_generators();
    out.require(is_symplectic(g1) && is_symplectic(g2), "generator not symplectic");
    if (!out.ok) return out;
    const auto space = fixed_symmetric_space({SymplecticMat(g1), SymplecticMat(g2)});
    out.require(space.dimension() == 1, "dimension " + std::to_string(space.dimension()));
    out.require(space.particular && *space.particular == reference::s5_family_constant(), "constant part");
    if (space.dimension() == 1) {
        const RatMat& slope = space.basis.front();
        bool diag3 = true;
        for (std::size_t i = 0; i < 6; ++i) diag3 = diag3 && slope(i, i) == 3;
        out.require(diag3, "slope diagonal");
        out.require(slope == to_rational(reference::s5_family_slope()), "slope pattern");
    }
    return out;
}

Outcome weyl_orders() {
    Outcome out;
    std::vector<RootSystemId> systems;
    for (int n = 1; n <= 6; ++n) systems.push_back(RootSystemId::make(Family::A, n));
    for (int n = 2; n <= 5; ++n) systems.push_back(RootSystemId::make(Family::B, n));
    for (int n = 2; n <= 5; ++n) systems.push_back(RootSystemId::make(Family::C, n));
    for (int n = 3; n <= 5; ++n) systems.push_back(RootSystemId::make(Family::D, n));
    systems.push_back(RootSystemId::exceptional(Family::F4));
    systems.push_back(RootSystemId::exceptional(Family::G2));
    for (const auto& id : systems) {
        const MatrixGroup g = generate_group(simple_reflections(id), 100000);
        out.require(!g.truncated && BigInt(static_cast<unsigned long>(g.order())) == expected_order(id), id.tag());
    }
    const auto t0 = Clock::now();
    const MatrixGroup e6 = generate_group(simple_reflections(RootSystemId::exceptional(Family::E6)), 100000);
    const double elapsed = seconds_since(t0);
    out.require(!e6.truncated && e6.order() == 51840, "E6 order " + std::to_string(e6.order()));
    out.require(elapsed <= kE6BudgetSeconds, "E6 enumeration over budget");
    for (Family f : {Family::E7, Family::E8}) {
        const auto id = RootSystemId::exceptional(f);
        const auto gens = simple_reflections(id);
        bool ok = check_invariance(gens, gram_matrix(id));
        for (const IntMat& r : gens) ok = ok && is_unimodular(r);
        out.require(ok, id.tag() + " generators");
    }
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << "E6 enumerated in " << elapsed << " s";
    out.note(os.str());
    return out;
}

Outcome coroot_degrees() {
    Outcome out;
    for (const auto& id : catalog(kMaxRank))
        out.require(coroot_polarization_degree(id) == published_degree(id), id.tag() + " degree");
    out.note("E7 read as inserted after E6 (degree 2)");
    return out;
}

Outcome property_suites() {
    Outcome out;
    std::mt19937 rng(424242);
    const auto systems = catalog(kMaxRank);
    std::uniform_int_distribution<std::size_t> pick_sys(0, systems.size() - 1);
    for (int k = 0; k < kRandomWords; ++k) {
        const auto& id = systems[pick_sys(rng)];
        const auto gens = simple_reflections(id);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1), len(0, 10);
        auto word = [&] {
            IntMat w = IntMat::identity(id.dim());
            for (std::size_t l = len(rng); l > 0; --l) w = w * gens[pick(rng)];
            return w;
        };
        const IntMat x = word(), y = word();
        if (embed_block_diag(x * y) != embed_block_diag(x) * embed_block_diag(y)) {
            out.require(false, "homomorphism fails on " + id.tag());
            break;
        }
    }
    for (const auto& id : systems) {
        const RatMat z0 = z0_of(id);
        std::vector<SymplecticMat> embedded;
        for (const IntMat& r : simple_reflections(id)) {
            embedded.push_back(embed_block_diag(r));
            out.require(modular_action(embedded.back(), z0) == z0, id.tag() + " z0 not fixed");
        }
        if (id.rank() <= 6) {
            const auto space = fixed_symmetric_space(embedded);
            out.require(space.dimension() == 1 && space.particular && space.particular->is_zero() &&
                            is_proportional(space.basis.front(), z0),
                        id.tag() + " fixed space");
        }
    }
    out.note(std::to_string(kRandomWords) + " random words");
    return out;
}

}  // namespace

int main() {
    const auto start = Clock::now();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"published Riemann matrices", published_riemann_matrices},
        {"elementary divisors and torus decompositions", divisor_chains},
        {"centralizer levels (published, SNF, denominators)", centralizer_levels},
        {"isomorphism witnesses", isomorphism_witnesses},
        {"B_n principal splitting", bn_splitting},
        {"Z/5 fixed space", cyclic5},
        {"S5 fixed space", s5},
        {"Weyl group orders", weyl_orders},
        {"coroot polarization degrees", coroot_degrees},
        {"property suites", property_suites},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.ok;
        std::printf("%s %2zu %s%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.empty() ? "" : " -- ", o.detail.c_str());
    }
    const double total = seconds_since(start);
    const bool in_budget = total <= kTotalBudgetSeconds;
    failures += !in_budget;
    std::printf("%s    total runtime %.2f s (budget %.0f s)\n", in_budget ? "PASS" : "FAIL", total, kTotalBudgetSeconds);
    std::printf("%d failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
