#include <noether/octonion.hpp>

#include <gtest/gtest.h>

using namespace noether;

namespace {

const PrimeField kP(1000003);
const Rationals kQ;

template <Field F>
Matrix<F> right_multiplication(const F& f, const Octonion<F>& x) {
    Matrix<F> m(f, 8, 8);
    for (int j = 0; j < 8; ++j) {
        const auto col = oct_multiply(f, Octonion<F>::basis(f, j), x).coordinates();
        for (int i = 0; i < 8; ++i) m(i, j) = col[i];
    }
    return m;
}

// Inner derivations [L_x, L_y] + [L_x, R_y] + [R_x, R_y] span Der(O) for an
// octonion algebra; this rebuilds the derivation span without the linear
// system used by derivation_algebra.
template <Field F>
std::size_t inner_derivation_span(const F& f, const std::vector<Matrix<F>>& derivs) {
    SpanBuilder<F> span(f, 64);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            const auto x = Octonion<F>::basis(f, i), y = Octonion<F>::basis(f, j);
            const auto lx = left_multiplication(f, x), ly = left_multiplication(f, y);
            const auto rx = right_multiplication(f, x), ry = right_multiplication(f, y);
            span.insert(flatten(commutator(lx, ly) + commutator(lx, ry) + commutator(rx, ry)));
        }
    const auto inner = span.dimension();
    for (const auto& d : derivs) span.insert(flatten(d));
    EXPECT_EQ(span.dimension(), inner);
    return inner;
}

}  // namespace

TEST(Octonion, UnitAndIdempotents) {
    RandomSource rng(1);
    const auto one = Octonion<Rationals>::one(kQ);
    for (int t = 0; t < 10; ++t) {
        auto x = random_octonion(kQ, rng);
        EXPECT_EQ(oct_multiply(kQ, one, x), x);
        EXPECT_EQ(oct_multiply(kQ, x, one), x);
    }
    auto e1 = Octonion<Rationals>::zero(kQ);
    e1.a = 1;
    auto e2 = Octonion<Rationals>::zero(kQ);
    e2.b = 1;
    EXPECT_EQ(oct_multiply(kQ, e1, e1), e1);
    EXPECT_EQ(oct_multiply(kQ, e2, e2), e2);
    EXPECT_EQ(oct_multiply(kQ, e1, e2), Octonion<Rationals>::zero(kQ));
    EXPECT_EQ(oct_add(kQ, e1, e2), one);
}

TEST(Octonion, NormIsMultiplicative) {
    RandomSource rng(2);
    for (int t = 0; t < 100; ++t) {
        auto x = random_octonion(kQ, rng), y = random_octonion(kQ, rng);
        EXPECT_EQ(oct_norm(kQ, oct_multiply(kQ, x, y)), oct_norm(kQ, x) * oct_norm(kQ, y));
    }
    for (int t = 0; t < 100; ++t) {
        auto x = random_octonion(kP, rng), y = random_octonion(kP, rng);
        EXPECT_EQ(oct_norm(kP, oct_multiply(kP, x, y)), kP.mul(oct_norm(kP, x), oct_norm(kP, y)));
    }
}

TEST(Octonion, AlternativeButNotAssociative) {
    RandomSource rng(3);
    bool saw_non_associative = false;
    for (int t = 0; t < 50; ++t) {
        auto x = random_octonion(kQ, rng), y = random_octonion(kQ, rng), z = random_octonion(kQ, rng);
        EXPECT_EQ(oct_multiply(kQ, x, oct_multiply(kQ, x, y)), oct_multiply(kQ, oct_multiply(kQ, x, x), y));
        EXPECT_EQ(oct_multiply(kQ, oct_multiply(kQ, y, x), x), oct_multiply(kQ, y, oct_multiply(kQ, x, x)));
        if (!(oct_multiply(kQ, oct_multiply(kQ, x, y), z) == oct_multiply(kQ, x, oct_multiply(kQ, y, z))))
            saw_non_associative = true;
    }
    EXPECT_TRUE(saw_non_associative);
}

TEST(Octonion, TraceFormIsNondegenerateSymmetric) {
    auto t = trace_form(kQ);
    EXPECT_EQ(t, t.transpose());
    EXPECT_EQ(rank(t), 8u);
}

TEST(Derivations, DimensionAndLeibniz) {
    auto derivs = derivation_algebra(kQ);
    ASSERT_EQ(derivs.size(), 14u);
    const auto one = Octonion<Rationals>::one(kQ);
    for (const auto& d : derivs) {
        EXPECT_EQ(apply(d, one), Octonion<Rationals>::zero(kQ));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                auto x = Octonion<Rationals>::basis(kQ, i), y = Octonion<Rationals>::basis(kQ, j);
                EXPECT_EQ(apply(d, oct_multiply(kQ, x, y)),
                          oct_add(kQ, oct_multiply(kQ, apply(d, x), y), oct_multiply(kQ, x, apply(d, y))));
            }
    }
    EXPECT_EQ(derivation_algebra(kP).size(), 14u);
}

TEST(Derivations, SpanMatchesInnerDerivations) {
    EXPECT_EQ(inner_derivation_span(kQ, derivation_algebra(kQ)), 14u);
}

TEST(Derivations, ClosedSkewAndTraceZeroPreserving) {
    auto derivs = derivation_algebra(kQ);
    std::vector<Vector<Rationals>> flat, brackets;
    for (const auto& d : derivs) flat.push_back(flatten(d));
    for (const auto& x : derivs)
        for (const auto& y : derivs) brackets.push_back(flatten(commutator(x, y)));
    EXPECT_TRUE(coordinates_in_basis(kQ, flat, brackets).has_value());

    const auto t = trace_form(kQ);
    for (const auto& d : derivs) {
        EXPECT_TRUE((d.transpose() * t + t * d).is_zero());
        for (const auto& b : trace_zero_basis(kQ)) EXPECT_EQ(oct_trace(kQ, apply(d, Octonion<Rationals>::from_coordinates(b))), 0);
        EXPECT_NO_THROW(restrict_to_trace_zero(d));
    }
}

TEST(Derivations, RestrictionIsFaithfulHomomorphism) {
    auto derivs = derivation_algebra(kQ);
    std::vector<Matrix<Rationals>> on_v7;
    for (const auto& d : derivs) on_v7.push_back(restrict_to_trace_zero(d));
    SpanBuilder<Rationals> span(kQ, 49);
    for (const auto& m : on_v7) span.insert(flatten(m));
    EXPECT_EQ(span.dimension(), 14u);
    // brackets restrict to brackets
    auto lhs = restrict_to_trace_zero(commutator(derivs[0], derivs[5]));
    EXPECT_EQ(lhs, commutator(on_v7[0], on_v7[5]));
    EXPECT_EQ(fixed_subspace(kQ, 7, on_v7).size(), 0u);
}

TEST(Derivations, NonDerivationRejected) {
    EXPECT_THROW(restrict_to_trace_zero(left_multiplication(kQ, Octonion<Rationals>::basis(kQ, 1))), ConstructionFailure);
}

TEST(Generation, Examples) {
    RandomSource rng(4);
    auto x = random_octonion(kQ, rng);
    EXPECT_LE(subalgebra_generated(kQ, {x}), 2u);
    EXPECT_EQ(subalgebra_generated(kQ, {}), 1u);
    auto [a, b, c] = split_generating_triple(kQ);
    EXPECT_EQ(subalgebra_generated(kQ, {a, b, c}), 8u);
    EXPECT_LT(subalgebra_generated(kQ, {a, b}), 8u);
    for (int t = 0; t < 10; ++t) {
        std::vector<Octonion<PrimeField>> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(from_trace_zero(kP, random_point(kP, 7, rng)));
        EXPECT_EQ(subalgebra_generated(kP, gens), 8u);
    }
}

TEST(Generation, MonotoneAndCapped) {
    RandomSource rng(5);
    for (int t = 0; t < 20; ++t) {
        std::vector<Octonion<PrimeField>> gens;
        std::size_t last = 1;
        for (int k = 0; k < 4; ++k) {
            // sparse elements so that small subalgebras actually occur
            auto c = Vector<PrimeField>(8, 0);
            c[rng.next_u64() % 8] = rng.draw_nonzero(kP);
            c[rng.next_u64() % 8] = rng.draw(kP);
            gens.push_back(Octonion<PrimeField>::from_coordinates(c));
            auto dim = subalgebra_generated(kP, gens);
            EXPECT_GE(dim, last);
            EXPECT_LE(dim, 8u);
            last = dim;
        }
    }
}

TEST(G2, StabilizerChecks) {
    auto derivs = derivation_algebra(kP);
    RandomSource rng(6);
    auto checks = g2_stabilizer_checks(derivs, 3, rng);
    EXPECT_EQ(checks.triple_kernel, 0u);
    EXPECT_EQ(checks.vector_kernel, 8u);
    EXPECT_EQ(checks.scaled_kernel, 8u);

    RandomSource rq(7);
    auto exact = g2_stabilizer_checks(derivation_algebra(kQ), 1, rq);
    EXPECT_EQ(exact.triple_kernel, 0u);
    EXPECT_EQ(exact.vector_kernel, 8u);
    EXPECT_EQ(exact.scaled_kernel, 8u);
}

TEST(G2, SplitTripleHasTrivialStabilizer) {
    auto derivs = derivation_algebra(kQ);
    std::vector<Matrix<Rationals>> on_v7;
    for (const auto& d : derivs) on_v7.push_back(restrict_to_trace_zero(d));
    auto three = power(LieRepresentation<Rationals>{7, {}, on_v7, RepName::external("V7"), 7}, 3);
    Vector<Rationals> point;
    for (const auto& x : split_generating_triple(kQ)) {
        auto c = x.coordinates();
        // trace-zero coordinates: a, v, w
        point.insert(point.end(), c.begin(), c.begin() + 7);
    }
    EXPECT_EQ(stabilizer(three, point).dimension, 0u);
}

TEST(G2, MatchesSpinorStabilizerInSpinSeven) {
    auto derivs = derivation_algebra(kQ);
    std::vector<Vector<Rationals>> basis;
    for (std::size_t i = 0; i < 14; ++i) {
        Vector<Rationals> e(14, mpq_class(0));
        e[i] = 1;
        basis.push_back(e);
    }
    auto g2 = subalgebra_structure(basis, derivs);
    EXPECT_EQ(g2.killing_rank, 14u);

    auto spin = spin_rep(QuadraticSpace(7), kQ);
    RandomSource rng(8);
    auto stab = stabilizer(spin, random_point(kQ, 8, rng));
    auto s = subalgebra_structure(stab.kernel, spin.matrices);
    EXPECT_EQ(s.dimension(), g2.dimension());
    EXPECT_EQ(s.killing_rank, g2.killing_rank);
}
