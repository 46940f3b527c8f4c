#ifndef NOETHER_SUITES_HPP
#define NOETHER_SUITES_HPP

#include <noether/octonion.hpp>
#include <noether/orbit.hpp>
#include <noether/representation.hpp>
#include <noether/sln_quotient.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace noether {

using json = nlohmann::json;

struct RunConfig {
    std::uint64_t prime = 1000003;
    std::uint64_t confirm_prime = 999983;
    std::uint64_t seed = 0;
    std::size_t trials = 3;
    bool stretch = false;

    /// Throws std::invalid_argument (InvalidField for bad primes).
    void validate() const {
        for (auto p : {prime, confirm_prime}) {
            if (p < 5) throw InvalidField("primes must be at least 5, got " + std::to_string(p));
            FieldSpec::prime_field(p).validate();
        }
        if (prime == confirm_prime) throw std::invalid_argument("prime and confirm prime must differ");
        if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    }
};

/// Which fields contribute the observed value of a check.
enum class Scope { All, Primes, Rational };

struct Expectation {
    std::string id;
    std::string description;
    json expected;
    std::string provenance;  ///< how the expected value was obtained
    std::string anchor;      ///< mathematical statement the check certifies, or "plumbing"
    Scope scope = Scope::All;
    bool stretch = false;
};

struct SuiteSpec {
    std::string name;
    std::string summary;
    std::vector<std::string> modules;
    std::vector<Expectation> checks;
    bool rational_replay = false;
};

struct CheckResult {
    std::string id;
    std::string description;
    json expected;
    json observed;
    std::string provenance;
    std::string anchor;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> primes;
    bool rational_replay = false;
    double elapsed_ms = 0;
    bool pass = false;
    std::vector<std::string> notes;

    const CheckResult* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
};

inline void to_json(json& j, const CheckResult& c) {
    j = json{{"id", c.id},
             {"description", c.description},
             {"expected", c.expected},
             {"observed", c.observed},
             {"provenance", c.provenance},
             {"anchor", c.anchor},
             {"pass", c.pass}};
}

inline void to_json(json& j, const SuiteReport& r) {
    j = json{{"suite", r.suite},   {"checks", r.checks},
             {"seed", r.seed},     {"primes", r.primes},
             {"rational_replay", r.rational_replay},
             {"elapsed_ms", r.elapsed_ms},
             {"pass", r.pass},     {"notes", r.notes}};
}

/// Values observed by one suite over one field.
using Observations = std::map<std::string, json>;

struct SuiteContext {
    std::uint64_t seed;
    std::size_t trials;
    bool stretch;
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

template <Field F>
struct GenericPoint {
    Vector<F> point;
    StabilizerReport<F> report;
};

/// Random point of smallest stabilizer over `trials` draws.
template <Field F>
GenericPoint<F> generic_point(const std::vector<Matrix<F>>& mats, std::size_t trials, RandomSource& rng) {
    const F& f = mats.front().field();
    std::optional<GenericPoint<F>> best;
    for (std::size_t t = 0; t < trials; ++t) {
        auto v = random_point(f, mats.front().rows(), rng);
        auto rep = stabilizer(mats, v);
        if (!best || rep.dimension < best->report.dimension) best = GenericPoint<F>{std::move(v), std::move(rep)};
    }
    return std::move(*best);
}

template <Field F>
std::vector<std::size_t> kernel_signature(const F& f, const std::vector<Vector<F>>& kernel, std::size_t width) {
    if (kernel.empty()) return {};
    Matrix<F> m(f, kernel.size(), width);
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m(i, j) = kernel[i][j];
    return rref(m).pivots;
}

template <Field F>
std::size_t span_dim(const F& f, std::size_t width, const std::vector<Vector<F>>& rows) {
    SpanBuilder<F> s(f, width);
    for (const auto& r : rows) s.insert(r);
    return s.dimension();
}

// ---- per-suite observations -------------------------------------------------

template <Field F>
Observations observe_g2_octonion(const F& f, const SuiteContext& ctx, RandomSource& rng) {
    Observations obs;
    const auto derivs = derivation_space(f);
    obs["derivation_dim"] = derivs.size();
    const auto [x, y, z] = split_generating_triple(f);
    obs["split_triple_closure"] = subalgebra_generated(f, {x, y, z});
    if (derivs.size() != 14) return obs;

    const auto checks = g2_stabilizer_checks(derivs, ctx.trials, rng);
    obs["triple_kernel"] = checks.triple_kernel;
    obs["vector_kernel"] = checks.vector_kernel;
    obs["scaled_vector_kernel"] = checks.scaled_kernel;

    std::vector<Vector<F>> identity;
    for (std::size_t i = 0; i < derivs.size(); ++i) {
        Vector<F> e(derivs.size(), f.zero());
        e[i] = f.one();
        identity.push_back(std::move(e));
    }
    const auto g2 = subalgebra_structure(identity, derivs);
    obs["derivation_killing_rank"] = g2.killing_rank;

    const auto spin = spin_rep(QuadraticSpace(7), f);
    const auto gp = generic_point(spin.matrices, ctx.trials, rng);
    const auto stab = subalgebra_structure(gp.report.kernel, spin.matrices);
    obs["matches_spin7_stabilizer"] = stab.dimension() == g2.dimension() && stab.killing_rank == g2.killing_rank;
    return obs;
}

template <Field F>
Observations observe_spin7(const F& f, const SuiteContext& ctx, RandomSource& rng) {
    Observations obs;
    const QuadraticSpace s7(7);
    const auto spin = spin_rep(s7, f);
    obs["spin_dim"] = spin.dimension;
    const auto forms = invariant_bilinear_space(spin);
    obs["forms_symmetric"] = forms.symmetric.size();
    obs["forms_antisymmetric"] = forms.antisymmetric.size();
    obs["form_rank"] = forms.sample_rank;

    const auto gp = generic_point(spin.matrices, ctx.trials, rng);
    obs["stabilizer_dim"] = gp.report.dimension;
    obs["orbit_dim"] = gp.report.orbit_dimension;
    const auto st = subalgebra_structure(gp.report.kernel, spin.matrices);
    obs["killing_rank"] = st.killing_rank;

    const auto fixed = fixed_subspace(f, spin.dimension, element_matrices(spin.matrices, gp.report.kernel));
    obs["fixed_subspace_dim"] = fixed.size();
    auto with_point = fixed;
    with_point.push_back(gp.point);
    obs["fixed_subspace_contains_point"] = span_dim(f, spin.dimension, with_point) == fixed.size();
    obs["center_acts_minus_one"] = center_acts_minus_one(s7, spin);

    auto scaled = gp.point;
    const auto c = f.from_int(3);
    for (auto& e : scaled) e = f.mul(e, c);
    const auto rescaled = stabilizer(spin, scaled);
    obs["kernel_scale_invariant"] =
        kernel_signature(f, rescaled.kernel, 21) == kernel_signature(f, gp.report.kernel, 21) &&
        span_dim(f, 21, [&] {
            auto all = rescaled.kernel;
            all.insert(all.end(), gp.report.kernel.begin(), gp.report.kernel.end());
            return all;
        }()) == gp.report.dimension;
    return obs;
}

template <Field F>
json spin10_certificate(const LieRepresentation<F>& half, const std::vector<Matrix<F>>& faithful, const SuiteContext& ctx,
                        RandomSource& rng) {
    const auto gp = generic_point(half.matrices, ctx.trials, rng);
    json cert{{"stabilizer_dim", gp.report.dimension}};
    try {
        const auto st = subalgebra_structure(gp.report.kernel, faithful);
        cert["bracket_closed"] = true;
        cert["killing_rank"] = st.killing_rank;
        cert["killing_nullity"] = st.killing_nullity();
    } catch (const ClosureViolation&) {
        cert["bracket_closed"] = false;
    }
    const auto forms = invariant_bilinear_space(half);
    cert["forms_symmetric"] = forms.symmetric.size();
    cert["forms_antisymmetric"] = forms.antisymmetric.size();
    return cert;
}

template <Field F>
Observations observe_spin10(const F& f, const SuiteContext& ctx, RandomSource& rng) {
    Observations obs;
    const QuadraticSpace s10(10);
    const auto [even, odd] = half_spin_reps(s10, f);
    const auto vec = vector_rep(s10, f).matrices;
    obs["half_spin_dim"] = even.dimension;
    const auto cert = spin10_certificate(even, vec, ctx, rng);
    for (const auto& [k, v] : cert.items()) obs[k] = v;
    obs["parity_twin_identical"] = spin10_certificate(odd, vec, ctx, rng) == cert;
    return obs;
}

template <Field F>
Observations observe_spin11(const F& f, const SuiteContext& ctx, RandomSource& rng) {
    Observations obs;
    const QuadraticSpace s11(11);
    const auto spin = spin_rep(s11, f);
    const auto vec = vector_rep(s11, f);
    obs["spin_dim"] = spin.dimension;
    const auto gp = generic_point(spin.matrices, ctx.trials, rng);
    obs["stabilizer_dim"] = gp.report.dimension;
    obs["orbit_dim"] = gp.report.orbit_dimension;
    obs["killing_rank"] = subalgebra_structure(gp.report.kernel, vec.matrices).killing_rank;
    const auto on_vectors = element_matrices(vec.matrices, gp.report.kernel);
    const auto fp = isotypic_fingerprint(f, 11, on_vectors);
    obs["closure_on_vectors"] = fp.closure;
    obs["commutant_on_vectors"] = fp.commutant;
    obs["fixed_vectors"] = fixed_subspace(f, 11, on_vectors).size();
    obs["center_acts_minus_one"] = center_acts_minus_one(s11, spin);
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (ctx.stretch) obs["quartic_invariants"] = invariant_quartic_dim(spin.matrices);
    }
    return obs;
}

template <Field F>
Observations observe_spin14(const F& f, const SuiteContext& ctx, RandomSource& rng) {
    Observations obs;
    const QuadraticSpace s14(14);
    const auto half = half_spin_reps(s14, f).first;
    const auto vec = vector_rep(s14, f);
    obs["half_spin_dim"] = half.dimension;
    const auto gp = generic_point(half.matrices, ctx.trials, rng);
    obs["stabilizer_dim"] = gp.report.dimension;
    obs["killing_rank"] = subalgebra_structure(gp.report.kernel, vec.matrices).killing_rank;
    const auto fp = isotypic_fingerprint(f, 14, element_matrices(vec.matrices, gp.report.kernel));
    obs["fingerprint_on_vectors"] = json::array({fp.closure, fp.commutant});
    const auto forms = invariant_bilinear_space(half);
    obs["forms_symmetric"] = forms.symmetric.size();
    obs["forms_antisymmetric"] = forms.antisymmetric.size();
    auto scaled = half.matrices;
    scaled.push_back(Matrix<F>::identity(f, half.dimension));
    obs["scaled_stabilizer_dim"] = stabilizer(scaled, gp.point).dimension;
    return obs;
}

template <Field F>
Observations observe_coregular_free(const F& f, const SuiteContext& ctx, RandomSource& rng) {
    Observations obs;
    auto generic = [&](const LieRepresentation<F>& rep) { return generic_stabilizer_dim(rep, ctx.trials, rng); };
    {
        const QuadraticSpace s(7);
        obs["v7x3_w7"] = generic(direct_sum(std::vector{power(vector_rep(s, f), 3), spin_rep(s, f)}));
    }
    {
        const QuadraticSpace s(10);
        const auto five = power(vector_rep(s, f), 5);
        obs["chain_v10x5"] = generic(five);
        obs["v10x5_w10half"] = generic(direct_sum(std::vector{five, half_spin_reps(s, f).first}));
    }
    {
        const QuadraticSpace s(11);
        const auto four = power(vector_rep(s, f), 4);
        obs["chain_v11x4"] = generic(four);
        obs["v11x4_w11"] = generic(direct_sum(std::vector{four, spin_rep(s, f)}));
    }
    {
        const QuadraticSpace s(14);
        const auto three = power(vector_rep(s, f), 3);
        obs["chain_v14x3"] = generic(three);
        obs["v14x3_w14half"] = generic(direct_sum(std::vector{three, half_spin_reps(s, f).first}));
    }
    return obs;
}

template <Field F>
Observations observe_branching(const F& f, const SuiteContext&, RandomSource& rng) {
    Observations obs;
    {
        const QuadraticSpace s11(11);
        const auto res = restrict(spin_rep(s11, f), embed_subalgebra(s11, 10));
        std::size_t diagonal = 0;
        for (const auto& m : res.matrices) diagonal += parity_block_diagonal(std::vector{m}) ? 1 : 0;
        obs["spin11_block_diagonal_matrices"] = diagonal;
        obs["spin11_block_sizes"] = json::array({parity_block(5, 0).size(), parity_block(5, 1).size()});
    }
    {
        const QuadraticSpace s10(10);
        const auto res = restrict(half_spin_reps(s10, f).first, embed_subalgebra(s10, 5));
        const auto fp = isotypic_fingerprint(f, 16, res.matrices);
        obs["half_spin10_so5_fingerprint"] = json::array({fp.closure, fp.commutant});
    }
    const auto spin5 = spin_rep(QuadraticSpace(5), f);
    const auto forms = invariant_bilinear_space(spin5);
    obs["spin5_forms_symmetric"] = forms.symmetric.size();
    obs["spin5_forms_antisymmetric"] = forms.antisymmetric.size();
    obs["spin5_form_rank"] = forms.sample_rank;
    if (forms.antisymmetric.size() != 1) return obs;

    // sp4 from the computed form: a^T w + w a = 0
    const auto& w = forms.antisymmetric.front();
    Matrix<F> sys(f, 16, 16);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                // (a^T w)(i, j) = sum_k a(k, i) w(k, j); (w a)(i, j) = sum_k w(i, k) a(k, j)
                sys(4 * i + j, 4 * k + i) = f.add(sys(4 * i + j, 4 * k + i), w(k, j));
                sys(4 * i + j, 4 * k + j) = f.add(sys(4 * i + j, 4 * k + j), w(i, k));
            }
    std::vector<Matrix<F>> sp4;
    for (const auto& k : kernel_basis(sys)) sp4.emplace_back(f, 4, 4, k);
    obs["sp4_dim"] = sp4.size();
    std::vector<Vector<F>> both;
    for (const auto& m : sp4) both.push_back(flatten(m));
    for (const auto& m : spin5.matrices) both.push_back(flatten(m));
    obs["sp4_equals_spin5_image"] = span_dim(f, 16, both) == sp4.size();

    // left multiplication on M_4x4 is four copies of the defining module
    const auto on_matrices = power(LieRepresentation<F>{4, {}, sp4, RepName::external("sp4"), 4}, 4);
    Vector<F> x;
    while (true) {
        x = random_point(f, 16, rng);
        Matrix<F> m(f, 4, 4);
        for (std::size_t c = 0; c < 4; ++c)
            for (std::size_t r = 0; r < 4; ++r) m(r, c) = x[4 * c + r];
        if (!f.is_zero(determinant(m))) break;
    }
    obs["sp4_left_multiplication_stabilizer"] = stabilizer(on_matrices, x).dimension;
    return obs;
}

template <Field F>
Observations observe_sln_quotient(const F& f, const SuiteContext&, RandomSource& rng) {
    constexpr bool rational = std::is_same_v<F, Rationals>;
    const std::size_t n_max = rational ? 5 : 8;
    constexpr int kSamples = 50;
    constexpr int kFibers = 10;
    Observations obs;
    bool invariant = true, tau_ok = true, normalize_ok = true, transporter_ok = true, transpose_ok = true;
    json stab = json::array(), jac = json::array();
    for (std::size_t n = 2; n <= n_max; ++n) {
        for (int s = 0; s < kSamples; ++s) {
            const auto p = random_pair(f, n, rng);
            const auto a = random_sln(f, n, rng);
            const auto moved = act(a, p);
            invariant = invariant && pi(moved) == pi(p);
            tau_ok = tau_ok && tau(tau(p)) == p && tau(moved) == act(inverse(a).transpose(), tau(p));
            transpose_ok = transpose_ok && pi(tau(p)) == pi(p).transpose();
        }
        for (int s = 0; s < kFibers; ++s) {
            auto p = random_pair(f, n, rng);
            while (f.is_zero(determinant(pi(p)))) p = random_pair(f, n, rng);
            try {
                const auto norm = normalize_to_J(p);
                normalize_ok = normalize_ok && norm.pair.x == canonical_J(f, n) && f.equal(determinant(norm.a), f.one()) &&
                               act(norm.a, p) == norm.pair;
                // another point of the same fiber: free last column
                auto z = norm.pair.y;
                for (std::size_t i = 0; i + 1 < n; ++i) z(i, n - 1) = rng.draw(f);
                const MatrixPair<F> jz(norm.pair.x, z);
                const auto t = fiber_transporter(norm.pair, jz);
                transporter_ok = transporter_ok && act(t, norm.pair) == jz && stabilizer_lie_dim(p) == 0;
                // transported back from an independent SL_n translate
                const auto q = act(random_sln(f, n, rng), p);
                const auto found = same_orbit(p, q);
                transporter_ok = transporter_ok && found && act(*found, p) == q;
            } catch (const std::exception&) {
                transporter_ok = false;
            }
        }
        const auto p = random_pair(f, n, rng);
        stab.push_back(stabilizer_lie_dim(p));
        jac.push_back(jacobian_rank_pi(p));
    }
    obs["pi_invariant"] = invariant;
    obs["tau_identities"] = tau_ok;
    obs["quotient_action_transpose"] = transpose_ok;
    obs["normalize_replay"] = normalize_ok;
    obs["transporter_unique"] = transporter_ok;
    const std::string suffix = rational ? "_q" : "_fp";
    obs["stabilizer_lie_dims" + suffix] = stab;
    obs["jacobian_ranks" + suffix] = jac;
    if constexpr (rational) {
        const auto j = canonical_J(f, 2);
        const MatrixPair<F> y(j, Matrix<F>::from_ints(f, 1, 2, {3, 5}));
        const MatrixPair<F> z(j, Matrix<F>::from_ints(f, 1, 2, {3, 7}));
        obs["hand_case_t1"] = f.to_string(fiber_transporter(y, z)(0, 1));
    }
    return obs;
}

inline json zeros(std::size_t count) { return json(std::vector<std::size_t>(count, 0)); }

inline json squares(std::size_t n_max) {
    json out = json::array();
    for (std::size_t n = 2; n <= n_max; ++n) out.push_back((n - 1) * (n - 1));
    return out;
}

}  // namespace detail

/// Suites in their stable order.
inline const std::vector<SuiteSpec>& suite_catalog() {
    using S = Scope;
    static const std::vector<SuiteSpec> catalog = {
        {"g2_octonion",
         "G2 = Der(split octonions); G2 x Gm has an open orbit on V7, generic stabilizer SL3 at Lie level",
         {"octonion-g2", "orbit-stabilizer", "clifford-spin"},
         {
             {"derivation_dim", "dimension of the derivation algebra of the Zorn octonions", 14, "kernel of the Leibniz system",
              "Der of the split octonions is split g2"},
             {"split_triple_closure", "subalgebra generated by the split triple", 8, "span closure",
              "three standard generators generate the octonions"},
             {"triple_kernel", "g2 stabilizer of a generic generating triple in V7^3", 0, "kernel of the stacked action map",
              "G2 acts generically freely on V7^3"},
             {"vector_kernel", "g2 stabilizer of an anisotropic vector in V7", 8, "kernel of the stacked action map",
              "generic stabilizer in G2 of a vector is SL3 (dim 8)"},
             {"scaled_vector_kernel", "g2 + scaling stabilizer of the same vector", 8, "kernel of the stacked action map",
              "G2 x Gm has an open orbit on V7"},
             {"derivation_killing_rank", "Killing rank of the derivation algebra", 14, "Killing form in its own adjoint",
              "g2 is simple"},
             {"matches_spin7_stabilizer", "spinor stabilizer in so(7) has the same dimension and Killing rank", true,
              "cross-module comparison", "the spinor stabilizer in Spin7 is G2"},
         },
         true},
        {"spin7",
         "Spin7 on its 8-dim spinors: invariant quadric, generic stabilizer G2",
         {"clifford-spin", "orbit-stabilizer"},
         {
             {"spin_dim", "dimension of the spin module", 8, "Fock model", "plumbing"},
             {"forms_symmetric", "invariant symmetric bilinear forms", 1, "linear solve", "Spin7 preserves a quadratic form g"},
             {"forms_antisymmetric", "invariant antisymmetric bilinear forms", 0, "linear solve", "Spin7 preserves a quadratic form g"},
             {"form_rank", "rank of the invariant form", 8, "rank of the solved form", "g is nondegenerate"},
             {"stabilizer_dim", "generic stabilizer dimension", 14, "kernel of the stacked action map",
              "the generic stabilizer is G2"},
             {"killing_rank", "Killing rank of the stabilizer", 14, "Killing form in its own adjoint", "the generic stabilizer is G2"},
             {"fixed_subspace_dim", "vectors fixed by the stabilizer", 1, "common null space",
              "W7 = 1 + V7 as a G2-module"},
             {"fixed_subspace_contains_point", "the fixed line is spanned by the point", true, "span comparison",
              "W7 = 1 + V7 as a G2-module"},
             {"center_acts_minus_one", "the central element -1 acts as -Id", true, "Clifford action of -1",
              "the center of Spin7 acts as -Id on spinors"},
             {"orbit_dim", "orbit dimension 21 - 14", 7, "arithmetic on certified kernels",
              "orbits are the fibers of g"},
             {"kernel_scale_invariant", "stabilizer of 3v equals stabilizer of v", true, "kernel comparison", "plumbing"},
         },
         true},
        {"spin10",
         "Spin10 on a half-spin module: open orbit, stabilizer with an 8-dim vector-group radical",
         {"clifford-spin", "orbit-stabilizer"},
         {
             {"half_spin_dim", "dimension of the half-spin module", 16, "Fock model", "plumbing"},
             {"stabilizer_dim", "generic stabilizer dimension", 29, "kernel of the stacked action map",
              "45 - 16: two nonzero orbits, one of them open"},
             {"bracket_closed", "stabilizer is closed under brackets", true, "coordinates of brackets", "plumbing"},
             {"killing_rank", "Killing rank of the stabilizer", 21, "Killing form in its own adjoint",
              "H = W x| G0 with G0 semisimple of dim 21"},
             {"killing_nullity", "Killing nullity of the stabilizer", 8, "Killing form in its own adjoint",
              "W is an 8-dimensional vector group"},
             {"forms_symmetric", "invariant symmetric bilinear forms", 0, "linear solve", "no invariant quadric on an open orbit"},
             {"forms_antisymmetric", "invariant antisymmetric bilinear forms", 0, "linear solve",
              "no invariant bilinear form on an open orbit"},
             {"parity_twin_identical", "the other half-spin module gives the same certificate", true,
              "repeat on the odd block", "plumbing"},
         },
         false},
        {"spin11",
         "Spin11 on its 32-dim spinors: invariant quartic, generic stabilizer SL5",
         {"clifford-spin", "orbit-stabilizer"},
         {
             {"spin_dim", "dimension of the spin module", 32, "Fock model", "plumbing"},
             {"stabilizer_dim", "generic stabilizer dimension", 24, "kernel of the stacked action map",
              "the generic stabilizer is SL5"},
             {"killing_rank", "Killing rank of the stabilizer", 24, "Killing form in its own adjoint", "sl5 is semisimple"},
             {"closure_on_vectors", "associative closure of the stabilizer on V11", 51,
              "25 + 25 + 1 for the summands 5, 5*, 1", "V11 = 5 + 5* + 1 under SL5"},
             {"commutant_on_vectors", "commutant of the stabilizer on V11", 3, "three inequivalent irreducible summands",
              "V11 = 5 + 5* + 1 under SL5"},
             {"fixed_vectors", "vectors in V11 fixed by the stabilizer", 1, "common null space", "V11 = 5 + 5* + 1 under SL5"},
             {"center_acts_minus_one", "the central element -1 acts as -Id", true, "Clifford action of -1",
              "the center of Spin11 acts as -Id on spinors"},
             {"orbit_dim", "orbit dimension 55 - 24", 31, "arithmetic on certified kernels",
              "nonzero level sets of the quartic J are orbits"},
             {"quartic_invariants", "degree-4 invariant polynomials", 1, "weight-zero derivation system",
              "a unique invariant quartic J", S::Primes, true},
         },
         false},
        {"spin14",
         "Spin14 on a half-spin module: projectively open orbit, generic stabilizer G2 x G2",
         {"clifford-spin", "orbit-stabilizer"},
         {
             {"half_spin_dim", "dimension of the half-spin module", 64, "Fock model", "plumbing"},
             {"stabilizer_dim", "generic stabilizer dimension", 28, "kernel of the stacked action map",
              "the identity component of the stabilizer is G2 x G2"},
             {"killing_rank", "Killing rank of the stabilizer", 28, "Killing form in its own adjoint", "g2 + g2 is semisimple"},
             {"fingerprint_on_vectors", "(closure, commutant) of the stabilizer on V14", json::array({98, 2}),
              "49 + 49 for two inequivalent 7-dim summands", "V14 = V7 + V7 under G2 x G2"},
             {"forms_symmetric", "invariant symmetric bilinear forms", 0, "linear solve", "the projective orbit is open"},
             {"forms_antisymmetric", "invariant antisymmetric bilinear forms", 0, "linear solve", "the projective orbit is open"},
             {"scaled_stabilizer_dim", "stabilizer of so(14) + scaling", 28, "kernel of the stacked action map",
              "the orbit of [v] is open in P(V)"},
         },
         false},
        {"coregular_free",
         "generic freeness of the four coregular sums V7^3+W7, V10^5+W10', V11^4+W11, V14^3+W14'",
         {"clifford-spin", "orbit-stabilizer"},
         {
             {"v7x3_w7", "generic stabilizer of V7^3 + W7", 0, "kernel of the stacked action map", "V7^3 + W7 is generically free"},
             {"v10x5_w10half", "generic stabilizer of V10^5 + W10 half-spin", 0, "kernel of the stacked action map",
              "V10^5 + W10' is generically free"},
             {"v11x4_w11", "generic stabilizer of V11^4 + W11", 0, "kernel of the stacked action map",
              "V11^4 + W11 is generically free"},
             {"v14x3_w14half", "generic stabilizer of V14^3 + W14 half-spin", 0, "kernel of the stacked action map",
              "V14^3 + W14' is generically free"},
             {"chain_v10x5", "generic stabilizer of V10^5", 10, "dim so(5)", "the stabilizer of 5 vectors is Spin5"},
             {"chain_v11x4", "generic stabilizer of V11^4", 21, "dim so(7)", "the stabilizer of 4 vectors is Spin7"},
             {"chain_v14x3", "generic stabilizer of V14^3", 55, "dim so(11)", "the stabilizer of 3 vectors is Spin11"},
         },
         false},
        {"branching",
         "branching W11 -> W10' + W10', W10' -> W5^4 over Spin5, Spin5 = Sp4 acting on M4x4",
         {"clifford-spin", "orbit-stabilizer"},
         {
             {"spin11_block_diagonal_matrices", "so(10) matrices preserving both parity blocks of W11", 45,
              "parity of Fock basis vectors", "W11 restricts to W10' + W10'"},
             {"spin11_block_sizes", "parity block sizes", json::array({16, 16}), "popcount parity", "W11 restricts to W10' + W10'"},
             {"half_spin10_so5_fingerprint", "(closure, commutant) of so(5) on W10'", json::array({16, 16}),
              "End(W5) with multiplicity 4", "W10' = W5^4 as a Spin5-module"},
             {"spin5_forms_symmetric", "invariant symmetric forms on W5", 0, "linear solve", "Spin5 = Sp4"},
             {"spin5_forms_antisymmetric", "invariant antisymmetric forms on W5", 1, "linear solve", "Spin5 = Sp4"},
             {"spin5_form_rank", "rank of the invariant symplectic form", 4, "rank of the solved form", "Spin5 = Sp4"},
             {"sp4_dim", "dimension of the symplectic algebra of the computed form", 10, "linear solve", "Spin5 = Sp4"},
             {"sp4_equals_spin5_image", "so(5) on W5 spans that symplectic algebra", true, "span comparison", "Spin5 = Sp4"},
             {"sp4_left_multiplication_stabilizer", "sp4 stabilizer of an invertible 4x4 matrix under left multiplication", 0,
              "kernel of the stacked action map", "Sp4 on M4x4 by left multiplication is generically free"},
         },
         false},
        {"sln_quotient",
         "SL_n x| Z/2 on pairs (X, Y): pi(X, Y) = YX is a quotient map with trivial stabilizers",
         {"sln-quotient", "exact-linear-algebra"},
         {
             {"pi_invariant", "pi(A.(X,Y)) = pi(X,Y) on 50 samples per n", true, "direct evaluation", "pi is SL_n-invariant"},
             {"tau_identities", "tau is an involution with tau(A.p) = (A^-1)^T.tau(p)", true, "direct evaluation",
              "tau normalises the SL_n action"},
             {"quotient_action_transpose", "pi(tau(p)) = pi(p)^T", true, "direct evaluation", "tau acts on the quotient by Z -> Z^T"},
             {"normalize_replay", "normalize_to_J lands on J with det 1", true, "post-condition replay",
              "SL_n is transitive on (n-1)-frames"},
             {"transporter_unique", "unique transporter on 10 sampled fibers per n", true, "linear solve with replay",
              "fibers of pi over nonsingular Z are single free orbits"},
             {"stabilizer_lie_dims_fp", "Lie stabilizer dimensions, n = 2..8", detail::zeros(7), "kernel of the stacked system",
              "stabilizers are trivial", S::Primes},
             {"jacobian_ranks_fp", "rank of d pi, n = 2..8", detail::squares(8), "rank of the differential", "pi is smooth",
              S::Primes},
             {"stabilizer_lie_dims_q", "Lie stabilizer dimensions, n = 2..5", detail::zeros(4), "kernel of the stacked system",
              "stabilizers are trivial", S::Rational},
             {"jacobian_ranks_q", "rank of d pi, n = 2..5", detail::squares(5), "rank of the differential", "pi is smooth",
              S::Rational},
             {"hand_case_t1", "n = 2, Y = (3, 5), Z = (3, 7)", "-2/3", "hand computation 3t + 7 = 5", "plumbing", S::Rational},
         },
         true},
    };
    return catalog;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& s : suite_catalog()) names.push_back(s.name);
    return names;
}

inline const SuiteSpec& find_suite(const std::string& name) {
    for (const auto& s : suite_catalog())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown suite: " + name);
}

namespace detail {

template <Field F>
Observations observe(const std::string& name, const F& f, const SuiteContext& ctx, RandomSource& rng) {
    if (name == "g2_octonion") return observe_g2_octonion(f, ctx, rng);
    if (name == "spin7") return observe_spin7(f, ctx, rng);
    if (name == "spin10") return observe_spin10(f, ctx, rng);
    if (name == "spin11") return observe_spin11(f, ctx, rng);
    if (name == "spin14") return observe_spin14(f, ctx, rng);
    if (name == "coregular_free") return observe_coregular_free(f, ctx, rng);
    if (name == "branching") return observe_branching(f, ctx, rng);
    if (name == "sln_quotient") return observe_sln_quotient(f, ctx, rng);
    throw std::invalid_argument("unknown suite: " + name);
}

constexpr std::uint64_t kSmallPrime = 1000;

}  // namespace detail

/// Runs one suite over both primes (and Q when the suite replays over Q).
/// Exceptions inside a field's run become notes and failed checks.
inline SuiteReport run_suite(const SuiteSpec& spec, const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = spec.name;
    report.seed = config.seed;
    report.primes = {config.prime, config.confirm_prime};
    report.rational_replay = spec.rational_replay;
    const std::uint64_t suite_seed = RandomSource::mix(config.seed, detail::fnv1a(spec.name));
    const SuiteContext ctx{suite_seed, config.trials, config.stretch};

    struct FieldRun {
        std::string label;
        Scope kind;
        std::optional<Observations> obs;
    };
    std::vector<FieldRun> runs;
    auto attempt = [&](const std::string& label, Scope kind, auto&& body) {
        FieldRun run{label, kind, std::nullopt};
        try {
            run.obs = body();
        } catch (const std::exception& e) {
            report.notes.push_back(label + ": " + e.what());
        }
        runs.push_back(std::move(run));
    };
    for (std::size_t i = 0; i < report.primes.size(); ++i) {
        const PrimeField f(report.primes[i]);
        attempt(f.spec().to_string(), Scope::Primes, [&] {
            RandomSource rng(RandomSource::mix(suite_seed, i));
            return detail::observe(spec.name, f, ctx, rng);
        });
    }
    if (spec.rational_replay) {
        const Rationals q;
        attempt("Q", Scope::Rational, [&] {
            RandomSource rng(RandomSource::mix(suite_seed, 0x51));
            return detail::observe(spec.name, q, ctx, rng);
        });
    }
    for (auto p : report.primes)
        if (p < detail::kSmallPrime)
            report.notes.push_back("prime-too-small: F_" + std::to_string(p) +
                                   " makes random points degenerate too often for reliable genericity");

    report.pass = true;
    for (const auto& expect : spec.checks) {
        if (expect.stretch && !config.stretch) {
            report.notes.push_back("skipped stretch check " + expect.id);
            continue;
        }
        CheckResult check{expect.id, expect.description, expect.expected, nullptr, expect.provenance, expect.anchor, false};
        json per_field = json::object();
        bool complete = true;
        for (const auto& run : runs) {
            const bool in_scope = expect.scope == Scope::All || expect.scope == run.kind;
            if (!in_scope) continue;
            if (!run.obs || !run.obs->count(expect.id)) {
                complete = false;
                per_field[run.label] = nullptr;
                continue;
            }
            per_field[run.label] = run.obs->at(expect.id);
        }
        bool agree = !per_field.empty();
        for (const auto& [label, value] : per_field.items())
            if (value != per_field.begin().value()) agree = false;
        if (complete && agree) {
            check.observed = per_field.begin().value();
            check.pass = check.observed == check.expected;
        } else {
            check.observed = per_field;
            if (complete) report.notes.push_back("fields disagree on " + expect.id);
        }
        report.pass = report.pass && check.pass;
        report.checks.push_back(std::move(check));
    }
    if (spec.name == "sln_quotient") report.notes.push_back("n = 1 skipped by design: no matrix content");
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

/// Runs the named suites on up to `jobs` threads; reports keep the order of
/// `names`.
inline std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const RunConfig& config, std::size_t jobs = 1) {
    std::vector<const SuiteSpec*> specs;
    for (const auto& n : names) specs.push_back(&find_suite(n));
    std::vector<SuiteReport> reports(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) reports[i] = run_suite(*specs[i], config);
    };
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, specs.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return reports;
}

inline json reports_json(const std::vector<SuiteReport>& reports, const RunConfig& config) {
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;
    return json{{"config",
                 {{"prime", config.prime},
                  {"confirm_prime", config.confirm_prime},
                  {"seed", config.seed},
                  {"trials", config.trials},
                  {"stretch", config.stretch}}},
                {"suites", reports},
                {"pass", pass}};
}

/// Report with the timing fields removed, for determinism comparisons.
inline json without_timing(json j) {
    if (j.contains("elapsed_ms")) j.erase("elapsed_ms");
    if (j.contains("suites"))
        for (auto& s : j["suites"]) s.erase("elapsed_ms");
    return j;
}

}  // namespace noether

#endif  // NOETHER_SUITES_HPP
