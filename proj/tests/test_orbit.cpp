#include <noether/orbit.hpp>

#include <gtest/gtest.h>

using namespace noether;

namespace {

const PrimeField kP(1000003);
const PrimeField kP2(999983);
const Rationals kQ;

// Rank of the action map x -> rho(x) v, built column by column from the
// matrices and reduced with a SpanBuilder rather than kernel_basis.
template <Field F>
std::size_t span_rank_of_action(const std::vector<Matrix<F>>& mats, const Vector<F>& v) {
    SpanBuilder<F> span(mats.front().field(), v.size());
    for (const auto& m : mats) span.insert(m * v);
    return span.dimension();
}

template <Field F>
std::vector<Matrix<F>> with_scaling(std::vector<Matrix<F>> mats) {
    mats.push_back(Matrix<F>::identity(mats.front().field(), mats.front().rows()));
    return mats;
}

template <Field F>
std::size_t rank_of_rows(const F& f, const std::vector<Vector<F>>& rows, std::size_t width) {
    SpanBuilder<F> span(f, width);
    for (const auto& r : rows) span.insert(r);
    return span.dimension();
}

}  // namespace

TEST(Stabilizer, ZeroVectorGivesEverything) {
    auto spin = spin_rep(QuadraticSpace(7), kQ);
    auto rep = stabilizer(spin, Vector<Rationals>(8, mpq_class(0)));
    EXPECT_EQ(rep.dimension, 21u);
    EXPECT_EQ(rep.orbit_dimension, 0u);
}

TEST(Stabilizer, KernelAnnihilatesAndMatchesSpanRank) {
    RandomSource rng(5);
    for (int n : {5, 7, 9, 10}) {
        auto spin = spin_rep(QuadraticSpace(n), kP);
        for (int t = 0; t < 3; ++t) {
            auto v = random_point(kP, spin.dimension, rng);
            auto rep = stabilizer(spin, v);
            EXPECT_EQ(rep.dimension + span_rank_of_action(spin.matrices, v), spin.algebra_dimension()) << n;
            EXPECT_EQ(rep.orbit_dimension, spin.algebra_dimension() - rep.dimension);
            for (const auto& z : rep.kernel) EXPECT_TRUE(is_zero_vector(kP, element_matrix(spin.matrices, z) * v));
            // lower bound dim g - d
            EXPECT_GE(rep.dimension + spin.dimension, spin.algebra_dimension());
        }
    }
}

TEST(Stabilizer, SpinSevenGenericIsFourteen) {
    auto build = [](const PrimeField& f) { return spin_rep(QuadraticSpace(7), f).matrices; };
    auto c = confirmed_generic_stabilizer_dim(build, {1000003, 999983}, 3, 1);
    EXPECT_EQ(c.dimension, 14u);
    EXPECT_EQ(c.per_prime, (std::vector<std::size_t>{14, 14}));

    RandomSource rng(2);
    auto spin = spin_rep(QuadraticSpace(7), kQ);
    EXPECT_EQ(generic_stabilizer_dim(spin, 3, rng), 14u);
}

TEST(Stabilizer, HalfSpinFourteenIsTwentyEight) {
    auto half = half_spin_reps(QuadraticSpace(14), kP).first;
    RandomSource rng(3);
    auto v = random_point(kP, 64, rng);
    EXPECT_EQ(stabilizer(half, v).dimension, 28u);
    // the orbit under so(14) plus scaling is open: 92 - 64
    EXPECT_EQ(stabilizer(with_scaling(half.matrices), v).dimension, 28u);
}

TEST(Stabilizer, SeedAndPrimeInvariance) {
    for (std::uint64_t seed : {1u, 99u, 12345u}) {
        auto build = [](const PrimeField& f) { return half_spin_reps(QuadraticSpace(10), f).first.matrices; };
        EXPECT_EQ(confirmed_generic_stabilizer_dim(build, {1000003, 999983}, 3, seed).dimension, 29u);
        EXPECT_EQ(confirmed_generic_stabilizer_dim(build, {999983, 1000003}, 3, seed).dimension, 29u);
    }
}

TEST(Stabilizer, CoregularSumsAreGenericallyFree) {
    RandomSource rng(8);
    {
        QuadraticSpace s7(7);
        auto sum = direct_sum(std::vector{vector_rep(s7, kP), vector_rep(s7, kP), vector_rep(s7, kP), spin_rep(s7, kP)});
        EXPECT_EQ(sum.dimension, 29u);
        EXPECT_EQ(generic_stabilizer_dim(sum, 3, rng), 0u);
    }
    {
        QuadraticSpace s10(10);
        auto five = power(vector_rep(s10, kP), 5);
        EXPECT_EQ(generic_stabilizer_dim(five, 3, rng), 10u);
        auto sum = direct_sum(std::vector{half_spin_reps(s10, kP).first, five});
        EXPECT_EQ(sum.dimension, 66u);
        EXPECT_EQ(generic_stabilizer_dim(sum, 3, rng), 0u);
    }
}

TEST(Stabilizer, DirectSumStacksColumns) {
    RandomSource rng(13);
    QuadraticSpace s5(5);
    auto a = vector_rep(s5, kP);
    auto b = spin_rep(s5, kP);
    auto sum = direct_sum(std::vector{a, b});
    auto va = random_point(kP, 5, rng), vb = random_point(kP, 4, rng);
    Vector<PrimeField> v = va;
    v.insert(v.end(), vb.begin(), vb.end());
    // stacked action matrix has rank equal to the rank of [A(va); B(vb)]
    std::vector<Vector<PrimeField>> cols;
    for (std::size_t k = 0; k < a.matrices.size(); ++k) {
        auto col = a.matrices[k] * va;
        auto lo = b.matrices[k] * vb;
        col.insert(col.end(), lo.begin(), lo.end());
        cols.push_back(col);
    }
    EXPECT_EQ(stabilizer(sum, v).dimension, 10 - rank_of_rows(kP, cols, 9));
    EXPECT_THROW(stabilizer(sum, va), DimensionMismatch);
}

TEST(Stabilizer, GenericNeedsTrials) {
    RandomSource rng(1);
    EXPECT_THROW(generic_stabilizer_dim(vector_rep(QuadraticSpace(4), kP), 0, rng), std::invalid_argument);
}

TEST(Subalgebra, SpinSevenStabilizerIsSimpleOfDimensionFourteen) {
    QuadraticSpace s7(7);
    auto spin = spin_rep(s7, kQ);
    RandomSource rng(4);
    auto v = random_point(kQ, 8, rng);
    auto stab = stabilizer(spin, v);
    ASSERT_EQ(stab.dimension, 14u);
    auto via_spin = subalgebra_structure(stab.kernel, spin.matrices);
    auto via_vector = subalgebra_structure(stab.kernel, vector_rep(s7, kQ).matrices);
    EXPECT_EQ(via_spin.killing_rank, 14u);
    EXPECT_EQ(via_vector.killing_rank, 14u);
    EXPECT_EQ(via_spin.structure, via_vector.structure);
    EXPECT_EQ(via_spin.derived_dimension, 14u);
}

TEST(Subalgebra, HalfSpinTenStabilizerHasEightDimensionalRadical) {
    QuadraticSpace s10(10);
    auto half = half_spin_reps(s10, kP).first;
    RandomSource rng(6);
    auto stab = stabilizer(half, random_point(kP, 16, rng));
    ASSERT_EQ(stab.dimension, 29u);
    auto st = subalgebra_structure(stab.kernel, vector_rep(s10, kP).matrices);
    EXPECT_EQ(st.killing_rank, 21u);
    EXPECT_EQ(st.killing_nullity(), 8u);
    auto again = subalgebra_structure(stab.kernel, half_spin_reps(s10, kP).second.matrices);
    EXPECT_EQ(again.killing_rank, 21u);
}

TEST(Subalgebra, SpinElevenStabilizerIsSimpleOfDimensionTwentyFour) {
    QuadraticSpace s11(11);
    auto spin = spin_rep(s11, kP);
    RandomSource rng(7);
    auto stab = stabilizer(spin, random_point(kP, 32, rng));
    ASSERT_EQ(stab.dimension, 24u);
    auto st = subalgebra_structure(stab.kernel, vector_rep(s11, kP).matrices);
    EXPECT_EQ(st.killing_rank, 24u);
}

TEST(Subalgebra, KillingFormIsSymmetricAndInvariant) {
    QuadraticSpace s7(7);
    RandomSource rng(9);
    auto stab = stabilizer(spin_rep(s7, kQ), random_point(kQ, 8, rng));
    auto st = subalgebra_structure(stab.kernel, vector_rep(s7, kQ).matrices);
    EXPECT_EQ(st.killing, st.killing.transpose());
    // K([x_i, x_j], x_k) = K(x_i, [x_j, x_k])
    const std::size_t s = st.dimension();
    auto K = [&](const Vector<Rationals>& a, std::size_t k) {
        mpq_class acc = 0;
        for (std::size_t i = 0; i < s; ++i) acc += a[i] * st.killing(i, k);
        return acc;
    };
    for (std::size_t i = 0; i < s; i += 3)
        for (std::size_t j = 0; j < s; j += 2)
            for (std::size_t k = 0; k < s; ++k) {
                mpq_class rhs = 0;
                for (std::size_t l = 0; l < s; ++l) rhs += st.structure[j][k][l] * st.killing(i, l);
                EXPECT_EQ(K(st.structure[i][j], k), rhs);
            }
}

TEST(Subalgebra, NonClosedSpanThrows) {
    QuadraticSpace s4(4);
    auto vec = vector_rep(s4, kQ);
    std::vector<Vector<Rationals>> basis(2, Vector<Rationals>(6, mpq_class(0)));
    basis[0][bivector_index(4, 0, 2)] = 1;
    basis[1][bivector_index(4, 1, 3)] = 1;
    EXPECT_THROW(subalgebra_structure(basis, vec.matrices), ClosureViolation);
}

TEST(Forms, SpinSevenHasInvariantQuadric) {
    auto spin = spin_rep(QuadraticSpace(7), kQ);
    auto forms = invariant_bilinear_space(spin);
    EXPECT_EQ(forms.symmetric.size(), 1u);
    EXPECT_EQ(forms.antisymmetric.size(), 0u);
    ASSERT_TRUE(forms.sample.has_value());
    EXPECT_EQ(forms.sample_rank, 8u);
    const auto& B = *forms.sample;
    EXPECT_EQ(B, B.transpose());
    for (const auto& m : spin.matrices) EXPECT_TRUE((m.transpose() * B + B * m).is_zero());
}

TEST(Forms, SpinFiveHasSymplecticForm) {
    auto forms = invariant_bilinear_space(spin_rep(QuadraticSpace(5), kQ));
    EXPECT_EQ(forms.symmetric.size(), 0u);
    EXPECT_EQ(forms.antisymmetric.size(), 1u);
    EXPECT_EQ(forms.sample_rank, 4u);
    EXPECT_EQ(*forms.sample, forms.sample->scaled(mpq_class(-1)).transpose());
}

TEST(Forms, HalfSpinTenHasNone) {
    auto forms = invariant_bilinear_space(half_spin_reps(QuadraticSpace(10), kP).first);
    EXPECT_TRUE(forms.symmetric.empty());
    EXPECT_TRUE(forms.antisymmetric.empty());
    EXPECT_FALSE(forms.sample.has_value());
}

TEST(Forms, VectorRepRecoversGramMatrix) {
    for (int n : {4, 5, 6, 7}) {
        QuadraticSpace s(n);
        auto forms = invariant_bilinear_space(vector_rep(s, kQ));
        ASSERT_EQ(forms.symmetric.size(), 1u) << n;
        auto gram = s.gram(kQ);
        // the sample is a scalar multiple of the Gram matrix
        std::vector<Vector<Rationals>> rows{flatten(gram), flatten(*forms.sample)};
        EXPECT_EQ(rank_of_rows(kQ, rows, std::size_t(n * n)), 1u);
    }
}

TEST(Forms, OverPrimeAndRationalsAgree) {
    for (int n : {5, 6, 7, 8}) {
        auto fq = invariant_bilinear_space(spin_rep(QuadraticSpace(n), kQ));
        auto fp = invariant_bilinear_space(spin_rep(QuadraticSpace(n), kP2));
        EXPECT_EQ(fq.symmetric.size(), fp.symmetric.size()) << n;
        EXPECT_EQ(fq.antisymmetric.size(), fp.antisymmetric.size()) << n;
        EXPECT_EQ(fq.sample_rank, fp.sample_rank) << n;
    }
}

TEST(FixedSubspace, StabilizerOfSpinorFixesOnlyThatSpinor) {
    auto spin = spin_rep(QuadraticSpace(7), kQ);
    RandomSource rng(10);
    auto v = random_point(kQ, 8, rng);
    auto stab = stabilizer(spin, v);
    auto fixed = fixed_subspace(kQ, 8, element_matrices(spin.matrices, stab.kernel));
    ASSERT_EQ(fixed.size(), 1u);
    EXPECT_EQ(rank_of_rows(kQ, {fixed[0], v}, 8), 1u);
    EXPECT_TRUE(fixed_subspace(kQ, 8, spin.matrices).empty());
    EXPECT_EQ(fixed_subspace(kQ, 5, {}).size(), 5u);
}

TEST(Fingerprint, HalfSpinFourteenStabilizerOnVectors) {
    QuadraticSpace s14(14);
    auto half = half_spin_reps(s14, kP).first;
    RandomSource rng(11);
    auto stab = stabilizer(half, random_point(kP, 64, rng));
    ASSERT_EQ(stab.dimension, 28u);
    auto on_vectors = element_matrices(vector_rep(s14, kP).matrices, stab.kernel);
    EXPECT_EQ(isotypic_fingerprint(kP, 14, on_vectors), (Fingerprint{98, 2}));
}

TEST(Fingerprint, SpinElevenStabilizerOnVectors) {
    QuadraticSpace s11(11);
    RandomSource rng(12);
    auto stab = stabilizer(spin_rep(s11, kP), random_point(kP, 32, rng));
    ASSERT_EQ(stab.dimension, 24u);
    auto on_vectors = element_matrices(vector_rep(s11, kP).matrices, stab.kernel);
    const auto fp = isotypic_fingerprint(kP, 11, on_vectors);
    // 5 + 5* + 1: three pairwise inequivalent irreducible summands
    EXPECT_EQ(fp.commutant, 3u);
    EXPECT_EQ(fp.closure, 25u + 25u + 1u);
    EXPECT_EQ(fixed_subspace(kP, 11, on_vectors).size(), 1u);
}

TEST(Fingerprint, DirectSumOfCopies) {
    auto vec = vector_rep(QuadraticSpace(7), kP);
    auto three = power(vec, 3);
    EXPECT_EQ(isotypic_fingerprint(kP, 21, three.matrices), (Fingerprint{49, 9}));
}

TEST(Quartic, VectorRepHasSquareOfQuadric) {
    for (int n : {4, 5, 7}) {
        auto vec = vector_rep(QuadraticSpace(n), kP);
        EXPECT_EQ(invariant_quartic_dim(vec.matrices), 1u) << n;
    }
}

TEST(Quartic, SpinSevenHasSquareOfQuadric) {
    EXPECT_EQ(invariant_quartic_dim(spin_rep(QuadraticSpace(7), kP).matrices), 1u);
}

TEST(Quartic, TwoCopiesOfVectorsHaveSixQuartics) {
    // invariants of two vectors: q(x), q(y), B(x,y); degree 4 products: 6
    EXPECT_EQ(invariant_quartic_dim(power(vector_rep(QuadraticSpace(5), kP), 2).matrices), 6u);
}

TEST(Quartic, BudgetAborts) {
    EXPECT_THROW(invariant_quartic_dim(spin_rep(QuadraticSpace(7), kP).matrices, 10), Aborted);
}

TEST(Quartic, SpinElevenHasOneQuartic) {
    EXPECT_EQ(invariant_quartic_dim(spin_rep(QuadraticSpace(11), kP).matrices), 1u);
}
