#include <gtest/gtest.h>

#include <random>

#include "weylpav/ppav.hpp"
#include "weylpav/reference.hpp"
#include "weylpav/symplectic.hpp"

using namespace weylpav;

namespace {

RootSystemId sys(const char* tag) { return RootSystemId::parse(tag); }

RatMat z0_of(const RootSystemId& id) { return riemann_family(id).z0; }

IntMat random_word(std::mt19937& rng, const std::vector<IntMat>& letters, std::size_t n) {
    std::uniform_int_distribution<std::size_t> len(0, 12), pick(0, letters.size() - 1);
    IntMat w = IntMat::identity(n);
    for (std::size_t k = len(rng); k > 0; --k) w = w * letters[pick(rng)];
    return w;
}

}  // namespace

TEST(IsSymplectic, Examples) {
    EXPECT_TRUE(is_symplectic(standard_alternating_form(3)));
    const auto [g1, g2] = reference::s5_symplectic_generators();
    EXPECT_TRUE(is_symplectic(g1));
    EXPECT_TRUE(is_symplectic(g2));
    EXPECT_FALSE(is_symplectic(IntMat::diagonal(std::vector<BigInt>{2, 1, 1, 1})));
    EXPECT_FALSE(is_symplectic(IntMat::diagonal(std::vector<BigInt>{2, 2, 1, 1})));
    EXPECT_THROW(is_symplectic(IntMat(2, 4)), std::invalid_argument);
    EXPECT_THROW(is_symplectic(IntMat::identity(3)), std::invalid_argument);
}

TEST(SymplecticMat, RejectsNonSymplectic) {
    EXPECT_THROW(SymplecticMat(IntMat::diagonal(std::vector<BigInt>{2, 1, 1, 1})), NotSymplectic);
    const SymplecticMat j(standard_alternating_form(2));
    EXPECT_EQ(j.n(), 2u);
    EXPECT_EQ(j.b(), IntMat::identity(2));
    EXPECT_EQ(j.c(), IntMat::identity(2) * BigInt(-1));
    EXPECT_EQ((j * j).matrix(), IntMat::identity(4) * BigInt(-1));
}

TEST(EmbedBlockDiag, Examples) {
    EXPECT_EQ(embed_block_diag(IntMat::identity(2)).matrix(), IntMat::identity(4));
    EXPECT_EQ(embed_block_diag(IntMat{{-1}}).matrix(), (IntMat{{-1, 0}, {0, -1}}));
    const SymplecticMat c5 = embed_block_diag(reference::cyclic5_generator());
    EXPECT_EQ(c5.matrix().rows(), 8u);
    EXPECT_TRUE(is_symplectic(c5.matrix()));
    EXPECT_EQ(c5.d(), unimodular_inverse(reference::cyclic5_generator()).transpose());
    EXPECT_THROW(embed_block_diag(IntMat{{2}}), NonUnimodular);
}

TEST(EmbedBlockDiag, HomomorphismOnRandomWords) {
    std::mt19937 rng(20240611);
    std::vector<std::pair<std::size_t, std::vector<IntMat>>> alphabets;
    for (const auto& id : catalog(6)) {
        auto letters = simple_reflections(id);
        for (const IntMat& p : diagram_automorphisms(id)) letters.push_back(p);
        alphabets.emplace_back(id.dim(), std::move(letters));
    }
    alphabets.emplace_back(4, std::vector<IntMat>{reference::cyclic5_generator()});
    alphabets.emplace_back(6, std::vector<IntMat>{reference::s5_five_cycle(), reference::s5_transposition()});

    std::uniform_int_distribution<std::size_t> which(0, alphabets.size() - 1);
    int cases = 0;
    for (; cases < 300; ++cases) {
        const auto& [n, letters] = alphabets[which(rng)];
        const IntMat x = random_word(rng, letters, n);
        const IntMat y = random_word(rng, letters, n);
        const SymplecticMat ex = embed_block_diag(x), ey = embed_block_diag(y);
        ASSERT_EQ(embed_block_diag(x * y), ex * ey);
        ASSERT_TRUE(is_symplectic(ex.matrix()));
        ASSERT_EQ(embed_block_diag(IntMat::identity(n)).matrix(), IntMat::identity(2 * n));
    }
    EXPECT_GE(cases, 100);
}

TEST(ModularAction, Examples) {
    const RatMat z = RatMat({{frac(1, 2), 3}, {3, frac(-7, 5)}});
    EXPECT_EQ(modular_action(SymplecticMat(IntMat::identity(4)), z), z);

    const auto a2 = sys("A2");
    const RatMat z0 = z0_of(a2);
    EXPECT_EQ(modular_action(embed_block_diag(simple_reflections(a2)[0]), z0), z0);

    const IntMat b{{1, 2}, {2, -3}};
    IntMat t = IntMat::identity(4);
    t.set_block(0, 2, b);
    EXPECT_EQ(modular_action(SymplecticMat(t), z), z + to_rational(b));

    // J acts as z -> -z^-1.
    const SymplecticMat j(standard_alternating_form(2));
    EXPECT_EQ(modular_action(j, z), rat_inverse(z) * Rat(-1));
    EXPECT_THROW(modular_action(j, RatMat(2, 2)), SingularDenominator);
    EXPECT_THROW(modular_action(j, RatMat(3, 3)), std::invalid_argument);
}

TEST(ModularAction, ReflectionsAndDiagramSymmetriesFixZ0) {
    for (const auto& id : catalog(8)) {
        SCOPED_TRACE(id.tag());
        const RatMat z0 = z0_of(id);
        for (const IntMat& r : simple_reflections(id)) EXPECT_EQ(modular_action(embed_block_diag(r), z0), z0);
        for (const IntMat& p : diagram_automorphisms(id)) {
            EXPECT_EQ(to_rational(p.transpose()) * z0 * to_rational(p), z0);
            EXPECT_EQ(modular_action(embed_block_diag(p), z0), z0);
        }
    }
}

TEST(FixedSymmetricSpace, IdentityGivesAllSymmetricMatrices) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto space = fixed_symmetric_space({SymplecticMat(IntMat::identity(2 * n))});
        EXPECT_EQ(space.dimension(), n * (n + 1) / 2);
        ASSERT_TRUE(space.particular);
        EXPECT_TRUE(space.particular->is_zero());
        EXPECT_EQ(matrix_family_rank(space.basis), n * (n + 1) / 2);
        for (const RatMat& m : space.basis) EXPECT_TRUE(m.is_symmetric());
    }
}

TEST(FixedSymmetricSpace, CyclicGroupOfOrderFive) {
    const auto space = fixed_symmetric_space({embed_block_diag(reference::cyclic5_generator())});
    ASSERT_EQ(space.dimension(), 2u);
    ASSERT_TRUE(space.particular);
    EXPECT_TRUE(space.particular->is_zero());
    const auto [first, second] = reference::cyclic5_family();
    EXPECT_TRUE(spans_equal(space.basis, {to_rational(first), to_rational(second)}));
    EXPECT_EQ(to_rational(first), z0_of(sys("A4")) * Rat(5));
    EXPECT_TRUE(is_positive_definite(to_rational(second)));
}

TEST(FixedSymmetricSpace, SymmetricGroupOnFiveLetters) {
    const auto [g1, g2] = reference::s5_symplectic_generators();
    const auto space = fixed_symmetric_space({SymplecticMat(g1), SymplecticMat(g2)});
    ASSERT_TRUE(space.particular);
    EXPECT_EQ(*space.particular, reference::s5_family_constant());
    ASSERT_EQ(space.dimension(), 1u);
    EXPECT_EQ(space.basis[0], to_rational(reference::s5_family_slope()));
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(space.basis[0](i, i), 3);
}

TEST(FixedSymmetricSpace, SolutionsAreFixedByEveryGenerator) {
    const auto [g1, g2] = reference::s5_symplectic_generators();
    std::vector<std::vector<SymplecticMat>> cases = {
        {SymplecticMat(g1), SymplecticMat(g2)},
        {embed_block_diag(reference::cyclic5_generator())},
    };
    for (const char* tag : {"A3", "B3", "G2", "D4"}) {
        std::vector<SymplecticMat> gens;
        for (const IntMat& r : simple_reflections(sys(tag))) gens.push_back(embed_block_diag(r));
        cases.push_back(gens);
    }
    for (const auto& gens : cases) {
        const auto space = fixed_symmetric_space(gens);
        ASSERT_TRUE(space.particular);
        for (const Rat& t : {Rat(1), Rat(2), frac(-3, 7)}) {
            RatMat z = *space.particular;
            for (const RatMat& b : space.basis) z = z + b * t;
            for (const SymplecticMat& g : gens) EXPECT_EQ(modular_action(g, z), z);
        }
    }
}

TEST(FixedSymmetricSpace, FullReflectionSetGivesTheOneParameterFamily) {
    for (const auto& id : catalog(6)) {
        SCOPED_TRACE(id.tag());
        std::vector<SymplecticMat> gens;
        for (const IntMat& r : simple_reflections(id)) gens.push_back(embed_block_diag(r));
        const auto space = fixed_symmetric_space(gens);
        ASSERT_EQ(space.dimension(), 1u);
        EXPECT_TRUE(is_proportional(space.basis[0], z0_of(id)));
        ASSERT_TRUE(space.particular);
        EXPECT_TRUE(space.particular->is_zero());
    }
}

TEST(FixedSymmetricSpace, RejectsUnsupportedGenerators) {
    EXPECT_THROW(fixed_symmetric_space({SymplecticMat(standard_alternating_form(2))}), UnsupportedGenerator);
    EXPECT_THROW(fixed_symmetric_space({}), std::invalid_argument);
    EXPECT_THROW(fixed_symmetric_space({SymplecticMat(IntMat::identity(2)), SymplecticMat(IntMat::identity(4))}),
                 std::invalid_argument);
}

TEST(FamilyIsomorphism, Witnesses) {
    const RatMat z = z0_of(sys("E6"));
    EXPECT_TRUE(verify_family_isomorphism(IntMat::identity(6), z, z));
    for (int n = 4; n <= 8; ++n) {
        const auto d = RootSystemId::make(Family::D, n);
        const auto c = RootSystemId::make(Family::C, n);
        EXPECT_TRUE(verify_family_isomorphism(reference::d_to_c_witness(n), z0_of(d), z0_of(c))) << n;
    }
    EXPECT_TRUE(verify_family_isomorphism(reference::d4_to_f4_witness(), z0_of(sys("D4")), z0_of(sys("F4"))));
    EXPECT_THROW(verify_family_isomorphism(IntMat{{2, 0}, {0, 1}}, z0_of(sys("A2")), z0_of(sys("A2"))), NonUnimodular);
}

TEST(FamilyIsomorphism, G2ToA2NeedsOrientationChange) {
    const IntMat printed = reference::g2_to_a2_witness();
    const RatMat g2 = z0_of(sys("G2")), a2 = z0_of(sys("A2"));
    EXPECT_FALSE(verify_family_isomorphism(printed, g2, a2));
    EXPECT_EQ(to_rational(printed) * g2 * to_rational(printed.transpose()),
              RatMat({{frac(2, 3), frac(-1, 3)}, {frac(-1, 3), frac(2, 3)}}));
    EXPECT_TRUE(verify_family_isomorphism(reference::g2_to_a2_orientation() * printed, g2, a2));
}

TEST(FamilyIsomorphism, AlternateAnFamily) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const RatMat target = reference::a_alternate_family(n) * reference::a_alternate_parameter_scale(n);
        const auto id = RootSystemId::make(Family::A, static_cast<int>(n));
        EXPECT_TRUE(verify_family_isomorphism(reference::lower_bidiagonal(n), z0_of(id), target)) << n;
        EXPECT_FALSE(verify_family_isomorphism(reference::lower_bidiagonal(n), z0_of(id),
                                               reference::a_alternate_family(n)));
    }
}

TEST(DecompositionWitness, DiagonalCase) {
    const RatMat z0 = RatMat::diagonal(std::vector<Rat>{2, 3});
    EXPECT_TRUE(verify_decomposition_witness(IntMat::identity(2), {2, 3}, IntMat::identity(2), z0));
    EXPECT_FALSE(verify_decomposition_witness(IntMat::identity(2), {3, 2}, IntMat::identity(2), z0));
    EXPECT_THROW(verify_decomposition_witness(IntMat::identity(2), {1}, IntMat::identity(2), z0), std::invalid_argument);
}

TEST(DecompositionWitness, BnSplitsAsPrincipallyPolarized) {
    for (int n = 2; n <= 8; ++n) {
        SCOPED_TRACE(n);
        const auto id = RootSystemId::make(Family::B, n);
        const IntMat f = reference::lower_bidiagonal(n);
        const RatMat z0 = z0_of(id);
        const auto m = to_integral(to_rational(f) * z0);
        ASSERT_TRUE(m);
        EXPECT_TRUE(verify_decomposition_witness(f, std::vector<BigInt>(n, BigInt(1)), *m, z0));
        EXPECT_EQ(*m, unimodular_inverse(f).transpose());
        EXPECT_TRUE(is_symplectic(block_diagonal(f, *m)));
        EXPECT_EQ(f.transpose() * f, gram_matrix(id));
    }
}
