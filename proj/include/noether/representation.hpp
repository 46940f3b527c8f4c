#ifndef NOETHER_REPRESENTATION_HPP
#define NOETHER_REPRESENTATION_HPP

// Matrix representations of so(n): the vector representation, the spin
// representation in the Fock model, half-spin blocks, restriction along
// subalgebra embeddings, and direct sums.

#include <noether/clifford.hpp>
#include <noether/linalg.hpp>

#include <string>
#include <utility>
#include <vector>

namespace noether {

struct RepName {
    enum class Kind { Vector, Spin, HalfSpinEven, HalfSpinOdd, DirectSum, External };
    Kind kind = Kind::External;
    std::vector<RepName> parts;  // DirectSum summands
    std::string label;           // External label

    static RepName of(Kind k) { return RepName{k, {}, {}}; }
    static RepName external(std::string l) { return RepName{Kind::External, {}, std::move(l)}; }

    std::string to_string() const {
        switch (kind) {
            case Kind::Vector: return "Vector";
            case Kind::Spin: return "Spin";
            case Kind::HalfSpinEven: return "HalfSpinEven";
            case Kind::HalfSpinOdd: return "HalfSpinOdd";
            case Kind::External: return "External(" + label + ")";
            case Kind::DirectSum: {
                std::string s = "DirectSum(";
                for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i].to_string();
                return s + ")";
            }
        }
        return {};
    }

    bool operator==(const RepName&) const = default;
};

/// Matrices aligned with a basis of a Lie algebra. For so(n) representations
/// `labels` holds the bivector labels (a, b); external algebras leave
/// `n = 0` and `labels` empty.
template <Field F>
struct LieRepresentation {
    int n = 0;
    std::vector<std::pair<int, int>> labels;
    std::vector<Matrix<F>> matrices;
    RepName name;
    std::size_t dimension = 0;

    std::size_t algebra_dimension() const { return matrices.size(); }
    const F& field() const { return matrices.front().field(); }
};

/// Matrix of v -> m v - v m on the generator basis, for each bivector m.
template <Field F>
LieRepresentation<F> vector_rep(const QuadraticSpace& space, const F& f) {
    const int n = space.n();
    const auto basis = bivector_basis(space, f);
    LieRepresentation<F> rep{n, bivector_labels(n), {}, RepName::of(RepName::Kind::Vector), std::size_t(n)};
    for (const auto& m : basis) {
        Matrix<F> mat(f, n, n);
        for (int c = 0; c < n; ++c) {
            auto e = CliffordElement<F>::generator(space, f, c);
            auto img = clifford_product(m, e) - clifford_product(e, m);
            for (const auto& [blade, coef] : img.terms()) {
                if (std::popcount(blade) != 1) throw ConstructionFailure("vector action left the generator span");
                mat(std::countr_zero(blade), c) = coef;
            }
        }
        rep.matrices.push_back(std::move(mat));
    }
    return rep;
}

/// Fock-space action of each Clifford generator: p_i is exterior
/// multiplication by f_i, q_i contraction against f_i, and u (odd n) the
/// parity involution. Basis vectors are subsets of {f_1..f_m} by bitmask.
template <Field F>
std::vector<Matrix<F>> fock_generators(const QuadraticSpace& space, const F& f) {
    const int m = space.pairs();
    const std::size_t d = std::size_t(1) << m;
    std::vector<Matrix<F>> gens;
    auto sign_before = [](std::size_t s, int i) {
        return (std::popcount(s & ((std::size_t(1) << i) - 1)) % 2) ? -1L : 1L;
    };
    for (int i = 0; i < m; ++i) {
        Matrix<F> wedge(f, d, d), contract(f, d, d);
        for (std::size_t s = 0; s < d; ++s) {
            const std::size_t bit = std::size_t(1) << i;
            if (s & bit)
                contract(s ^ bit, s) = f.from_int(sign_before(s, i));
            else
                wedge(s | bit, s) = f.from_int(sign_before(s, i));
        }
        gens.push_back(std::move(wedge));
        gens.push_back(std::move(contract));
    }
    if (space.odd()) {
        Matrix<F> parity(f, d, d);
        for (std::size_t s = 0; s < d; ++s) parity(s, s) = f.from_int(std::popcount(s) % 2 ? -1 : 1);
        gens.push_back(std::move(parity));
    }
    return gens;
}

/// Fock action of an arbitrary Clifford element.
template <Field F>
Matrix<F> fock_action(const CliffordElement<F>& x) {
    const F& f = x.field();
    const auto gens = fock_generators(x.space(), f);
    const std::size_t d = gens.front().rows();
    Matrix<F> out(f, d, d);
    for (const auto& [blade, c] : x.terms()) {
        Matrix<F> word = Matrix<F>::identity(f, d);
        for (int a = 0; a < x.space().n(); ++a)
            if (blade >> a & 1u) word = word * gens[a];
        out.add_scaled(c, word);
    }
    return out;
}

template <Field F>
LieRepresentation<F> spin_rep(const QuadraticSpace& space, const F& f) {
    const int n = space.n();
    const auto gens = fock_generators(space, f);
    const auto quarter = f.from_ratio(1, 4);
    LieRepresentation<F> rep{n, bivector_labels(n), {}, RepName::of(RepName::Kind::Spin), gens.front().rows()};
    for (auto [a, b] : rep.labels) rep.matrices.push_back(commutator(gens[a], gens[b]).scaled(quarter));
    return rep;
}

/// Fock basis indices of the even (parity 0) or odd (parity 1) block.
inline std::vector<std::size_t> parity_block(int pairs, int parity) {
    std::vector<std::size_t> idx;
    for (std::size_t s = 0; s < (std::size_t(1) << pairs); ++s)
        if (std::popcount(s) % 2 == parity) idx.push_back(s);
    return idx;
}

template <Field F>
Matrix<F> principal_submatrix(const Matrix<F>& m, const std::vector<std::size_t>& idx) {
    Matrix<F> out(m.field(), idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = m(idx[i], idx[j]);
    return out;
}

/// Even- and odd-degree blocks of the spin representation (n even).
template <Field F>
std::pair<LieRepresentation<F>, LieRepresentation<F>> half_spin_reps(const QuadraticSpace& space, const F& f) {
    if (space.odd()) throw std::invalid_argument("half-spin representations need even n");
    const auto full = spin_rep(space, f);
    auto block = [&](int parity, RepName::Kind kind) {
        const auto idx = parity_block(space.pairs(), parity);
        LieRepresentation<F> rep{space.n(), full.labels, {}, RepName::of(kind), idx.size()};
        for (const auto& m : full.matrices) rep.matrices.push_back(principal_submatrix(m, idx));
        return rep;
    };
    return {block(0, RepName::Kind::HalfSpinEven), block(1, RepName::Kind::HalfSpinOdd)};
}

/// True when every matrix preserves both parity blocks of the Fock space.
template <Field F>
bool parity_block_diagonal(const std::vector<Matrix<F>>& mats) {
    for (const auto& m : mats)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if ((std::popcount(i) + std::popcount(j)) % 2 == 1 && !m.field().is_zero(m(i, j))) return false;
    return true;
}

template <Field F>
LieRepresentation<F> restrict(const LieRepresentation<F>& rep, const SubalgebraEmbedding& emb) {
    if (rep.n != emb.ambient_n) throw std::invalid_argument("representation and embedding disagree on n");
    const F& f = rep.field();
    LieRepresentation<F> out{emb.sub_n, bivector_labels(emb.sub_n), {}, rep.name, rep.dimension};
    for (const auto& coeffs : emb.image) {
        Matrix<F> m(f, rep.dimension, rep.dimension);
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != 0) m.add_scaled(f.from_int(coeffs[k]), rep.matrices[k]);
        out.matrices.push_back(std::move(m));
    }
    return out;
}

/// Block-diagonal direct sum; all summands represent the same algebra basis.
template <Field F>
LieRepresentation<F> direct_sum(const std::vector<LieRepresentation<F>>& reps) {
    if (reps.empty()) throw std::invalid_argument("direct sum of no representations");
    const F& f = reps.front().field();
    const std::size_t g = reps.front().algebra_dimension();
    std::size_t d = 0;
    RepName name{RepName::Kind::DirectSum, {}, {}};
    for (const auto& r : reps) {
        if (r.algebra_dimension() != g || r.n != reps.front().n)
            throw std::invalid_argument("direct sum summands represent different algebras");
        d += r.dimension;
        name.parts.push_back(r.name);
    }
    LieRepresentation<F> out{reps.front().n, reps.front().labels, {}, std::move(name), d};
    for (std::size_t k = 0; k < g; ++k) {
        Matrix<F> m(f, d, d);
        std::size_t off = 0;
        for (const auto& r : reps) {
            const auto& src = r.matrices[k];
            for (std::size_t i = 0; i < r.dimension; ++i)
                for (std::size_t j = 0; j < r.dimension; ++j) m(off + i, off + j) = src(i, j);
            off += r.dimension;
        }
        out.matrices.push_back(std::move(m));
    }
    return out;
}

template <Field F>
LieRepresentation<F> power(const LieRepresentation<F>& rep, std::size_t copies) {
    return direct_sum(std::vector<LieRepresentation<F>>(copies, rep));
}

/// Number of basis pairs (i < j) where rho([m_i, m_j]) differs from
/// [rho(m_i), rho(m_j)]; zero for a Lie algebra homomorphism.
template <Field F>
std::size_t homomorphism_defects(const LieRepresentation<F>& rep, const StructureConstants<F>& sc) {
    const F& f = rep.field();
    const std::size_t g = rep.algebra_dimension();
    if (sc.size() != g) throw DimensionMismatch("structure constants do not match the representation");
    std::size_t defects = 0;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) {
            Matrix<F> lhs = commutator(rep.matrices[i], rep.matrices[j]);
            for (const auto& [k, c] : sc[i][j]) lhs.add_scaled(f.neg(c), rep.matrices[k]);
            if (!lhs.is_zero()) ++defects;
        }
    return defects;
}

/// M^T G + G M == 0 for every matrix.
template <Field F>
bool preserves_form(const std::vector<Matrix<F>>& mats, const Matrix<F>& gram) {
    for (const auto& m : mats)
        if (!(m.transpose() * gram + gram * m).is_zero()) return false;
    return true;
}

/// E(v) E(w) + E(w) E(v) == 2 B(v, w) Id on the Fock space.
template <Field F>
bool fock_clifford_relations_hold(const QuadraticSpace& space, const F& f) {
    const auto gens = fock_generators(space, f);
    const std::size_t d = gens.front().rows();
    for (int a = 0; a < space.n(); ++a)
        for (int b = a; b < space.n(); ++b) {
            Matrix<F> anti = gens[a] * gens[b] + gens[b] * gens[a];
            anti -= Matrix<F>::identity(f, d).scaled(f.from_int(space.twice_polar(a, b)));
            if (!anti.is_zero()) return false;
        }
    return true;
}

/// The central element -1 of Spin(n) acts on the spin module (or a parity
/// block of it) as -Id.
template <Field F>
bool center_acts_minus_one(const QuadraticSpace& space, const LieRepresentation<F>& rep) {
    using K = RepName::Kind;
    if (rep.name.kind != K::Spin && rep.name.kind != K::HalfSpinEven && rep.name.kind != K::HalfSpinOdd)
        throw std::invalid_argument("center_acts_minus_one expects a spin or half-spin representation");
    const F& f = rep.field();
    Matrix<F> action = fock_action(CliffordElement<F>::scalar(space, f, f.neg(f.one())));
    if (rep.name.kind != K::Spin)
        action = principal_submatrix(action, parity_block(space.pairs(), rep.name.kind == K::HalfSpinOdd));
    if (action.rows() != rep.dimension) return false;
    return (action + Matrix<F>::identity(f, rep.dimension)).is_zero();
}

/// Twisted conjugation by -1 fixes every vector: (-1) v (-1)^-1 = v.
template <Field F>
bool center_fixes_vectors(const QuadraticSpace& space, const F& f) {
    const auto minus_one = CliffordElement<F>::scalar(space, f, f.neg(f.one()));
    for (int a = 0; a < space.n(); ++a) {
        const auto e = CliffordElement<F>::generator(space, f, a);
        if (!(clifford_product(clifford_product(minus_one, e), minus_one) == e)) return false;
    }
    return true;
}

}  // namespace noether

#endif  // NOETHER_REPRESENTATION_HPP
