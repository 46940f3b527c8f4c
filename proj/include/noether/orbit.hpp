#ifndef NOETHER_ORBIT_HPP
#define NOETHER_ORBIT_HPP

// Lie-algebra orbit and stabilizer analysis. The stabilizer of a point v is
// the kernel of x -> rho(x) v; its dimension at a random point estimates
// the stabilizer in general position (dimension only jumps up on closed
// subsets), and two independent primes must agree before a value is
// reported.

#include <noether/representation.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace noether {

class GenericityUncertain : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ClosureViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Aborted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <Field F>
struct StabilizerReport {
    std::vector<Vector<F>> kernel;  ///< in coordinates of the algebra basis
    std::size_t dimension = 0;
    std::size_t orbit_dimension = 0;
    std::size_t trials = 1;
    std::vector<std::uint64_t> primes;
};

/// sum_k z_k rho(m_k)
template <Field F>
Matrix<F> element_matrix(const std::vector<Matrix<F>>& mats, const Vector<F>& z) {
    return linear_combination(mats.front().field(), mats, z);
}

/// Matrices of a family of algebra elements (e.g. a kernel basis) in a representation.
template <Field F>
std::vector<Matrix<F>> element_matrices(const std::vector<Matrix<F>>& mats, const std::vector<Vector<F>>& elems) {
    std::vector<Matrix<F>> out;
    out.reserve(elems.size());
    for (const auto& z : elems) out.push_back(element_matrix(mats, z));
    return out;
}

/// Columns rho(m_k) v of the orbit map's differential at v.
template <Field F>
Matrix<F> action_matrix(const std::vector<Matrix<F>>& mats, const Vector<F>& v) {
    const F& f = mats.front().field();
    const std::size_t d = mats.front().rows();
    if (v.size() != d) throw DimensionMismatch("point length does not match representation dimension");
    Matrix<F> a(f, d, mats.size());
    for (std::size_t k = 0; k < mats.size(); ++k) {
        const auto col = mats[k] * v;
        for (std::size_t i = 0; i < d; ++i) a(i, k) = col[i];
    }
    return a;
}

template <Field F>
StabilizerReport<F> stabilizer(const std::vector<Matrix<F>>& mats, const Vector<F>& v) {
    const auto a = action_matrix(mats, v);
    StabilizerReport<F> rep;
    rep.kernel = kernel_basis(a);
    rep.dimension = rep.kernel.size();
    rep.orbit_dimension = mats.size() - rep.dimension;
    const auto spec = mats.front().field().spec();
    if (spec.kind == FieldSpec::Kind::PrimeField) rep.primes.push_back(spec.prime);
    for (const auto& z : rep.kernel)
        if (!is_zero_vector(mats.front().field(), element_matrix(mats, z) * v))
            throw std::logic_error("stabilizer kernel element does not annihilate the point");
    return rep;
}

template <Field F>
StabilizerReport<F> stabilizer(const LieRepresentation<F>& rep, const Vector<F>& v) {
    return stabilizer(rep.matrices, v);
}

template <Field F>
Vector<F> random_point(const F& f, std::size_t d, RandomSource& rng) {
    Vector<F> v(d);
    for (auto& e : v) e = rng.draw(f);
    return v;
}

/// Minimum stabilizer dimension over `trials` random points, one field.
template <Field F>
std::size_t generic_stabilizer_dim(const std::vector<Matrix<F>>& mats, std::size_t trials, RandomSource& rng) {
    if (trials == 0) throw std::invalid_argument("generic_stabilizer_dim needs at least one trial");
    const F& f = mats.front().field();
    std::size_t best = mats.size();
    for (std::size_t t = 0; t < trials; ++t) {
        const auto v = random_point(f, mats.front().rows(), rng);
        best = std::min(best, stabilizer(mats, v).dimension);
    }
    return best;
}

template <Field F>
std::size_t generic_stabilizer_dim(const LieRepresentation<F>& rep, std::size_t trials, RandomSource& rng) {
    return generic_stabilizer_dim(rep.matrices, trials, rng);
}

struct ConfirmedDimension {
    std::size_t dimension = 0;
    std::vector<std::uint64_t> primes;
    std::vector<std::size_t> per_prime;
};

/// Runs generic_stabilizer_dim over each prime with a fresh stream per
/// (prime index, trial) and insists the values agree. `build` maps a
/// PrimeField to the matrix list to analyse.
inline ConfirmedDimension confirmed_generic_stabilizer_dim(
    const std::function<std::vector<Matrix<PrimeField>>(const PrimeField&)>& build,
    const std::vector<std::uint64_t>& primes, std::size_t trials, std::uint64_t seed) {
    ConfirmedDimension out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        PrimeField f(primes[i]);
        const auto mats = build(f);
        RandomSource rng(RandomSource::mix(seed, i));
        out.primes.push_back(primes[i]);
        out.per_prime.push_back(generic_stabilizer_dim(mats, trials, rng));
    }
    if (out.per_prime.empty()) throw std::invalid_argument("no primes configured");
    out.dimension = out.per_prime.front();
    for (auto d : out.per_prime)
        if (d != out.dimension)
            throw GenericityUncertain("generic stabilizer dimension differs between primes; raise trials");
    return out;
}

template <Field F>
struct SubalgebraStructure {
    std::vector<Vector<F>> basis;  ///< ambient algebra coordinates
    std::vector<std::vector<Vector<F>>> structure;  ///< [i][j] -> coordinates of [x_i, x_j]
    Matrix<F> killing;
    std::size_t killing_rank = 0;
    std::size_t derived_dimension = 0;

    std::size_t dimension() const { return basis.size(); }
    std::size_t killing_nullity() const { return dimension() - killing_rank; }
};

/// Bracket closure, structure constants and the subalgebra's own Killing
/// form. `faithful` is any faithful representation of the ambient algebra;
/// brackets are taken as matrix commutators there.
template <Field F>
SubalgebraStructure<F> subalgebra_structure(const std::vector<Vector<F>>& basis, const std::vector<Matrix<F>>& faithful) {
    const F& f = faithful.front().field();
    const std::size_t s = basis.size();
    SubalgebraStructure<F> out{basis, {}, Matrix<F>(f, s, s), 0, 0};
    if (s == 0) return out;
    const auto mats = element_matrices(faithful, basis);
    std::vector<Vector<F>> flat;
    for (const auto& m : mats) flat.push_back(flatten(m));
    std::vector<Vector<F>> brackets;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) brackets.push_back(flatten(commutator(mats[i], mats[j])));
    auto coords = coordinates_in_basis(f, flat, brackets);
    if (!coords) throw ClosureViolation("bracket leaves the span of the subalgebra basis");
    out.structure.assign(s, std::vector<Vector<F>>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) out.structure[i][j] = std::move((*coords)[i * s + j]);

    // ad(x_i)_{k j} = c_{ij}^k; K_ij = sum_{a,b} c_{ib}^a c_{ja}^b
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i; j < s; ++j) {
            auto acc = f.zero();
            for (std::size_t a = 0; a < s; ++a)
                for (std::size_t b = 0; b < s; ++b) {
                    const auto& x = out.structure[i][b][a];
                    const auto& y = out.structure[j][a][b];
                    if (!f.is_zero(x) && !f.is_zero(y)) acc = f.add(acc, f.mul(x, y));
                }
            out.killing(i, j) = acc;
            out.killing(j, i) = acc;
        }
    out.killing_rank = rank(out.killing);

    SpanBuilder<F> derived(f, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) derived.insert(out.structure[i][j]);
    out.derived_dimension = derived.dimension();
    return out;
}

/// Common null space of square matrices of size d.
template <Field F>
std::vector<Vector<F>> fixed_subspace(const F& f, std::size_t d, const std::vector<Matrix<F>>& mats) {
    if (mats.empty()) {
        std::vector<Vector<F>> basis;
        for (std::size_t i = 0; i < d; ++i) {
            Vector<F> e(d, f.zero());
            e[i] = f.one();
            basis.push_back(std::move(e));
        }
        return basis;
    }
    Matrix<F> stacked(f, d * mats.size(), d);
    for (std::size_t k = 0; k < mats.size(); ++k) {
        if (mats[k].rows() != d || mats[k].cols() != d) throw DimensionMismatch("fixed_subspace expects d x d matrices");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) stacked(k * d + i, j) = mats[k](i, j);
    }
    return kernel_basis(stacked);
}

struct Fingerprint {
    std::size_t closure = 0;
    std::size_t commutant = 0;
    bool operator==(const Fingerprint&) const = default;
};

template <Field F>
Fingerprint isotypic_fingerprint(const F& f, std::size_t d, const std::vector<Matrix<F>>& mats) {
    return {associative_closure(f, d, mats), commutant_dimension(f, d, mats)};
}

template <Field F>
struct InvariantForms {
    std::vector<Matrix<F>> symmetric;
    std::vector<Matrix<F>> antisymmetric;
    std::optional<Matrix<F>> sample;  ///< first symmetric form, else first antisymmetric
    std::size_t sample_rank = 0;
};

namespace detail {

template <Field F>
bool is_diagonal(const Matrix<F>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m.field().is_zero(m(i, j))) return false;
    return true;
}

/// Invariant forms B = E_ab + sign E_ba (a <= b, a < b when antisymmetric)
/// solving rho^T B + B rho = 0. Diagonal generators are imposed first as an
/// entrywise filter, which keeps the unknown count small for weight bases.
template <Field F>
std::vector<Matrix<F>> invariant_forms_of_type(const std::vector<Matrix<F>>& mats, bool symmetric) {
    const F& f = mats.front().field();
    const std::size_t d = mats.front().rows();
    std::vector<const Matrix<F>*> diagonal, general;
    for (const auto& m : mats) (is_diagonal(m) ? diagonal : general).push_back(&m);

    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = symmetric ? a : a + 1; b < d; ++b) {
            bool alive = true;
            for (const auto* dm : diagonal)
                if (!f.is_zero(f.add((*dm)(a, a), (*dm)(b, b)))) {
                    alive = false;
                    break;
                }
            if (alive) unknowns.emplace_back(a, b);
        }
    if (unknowns.empty()) return {};

    const auto sign = symmetric ? f.one() : f.neg(f.one());
    // Equation rows keyed by matrix entry (i, j), i <= j; the result of
    // rho^T B + B rho has the same symmetry type as B.
    std::vector<Vector<F>> rows;
    for (const auto* gm : general) {
        const Matrix<F>& rho = *gm;
        std::unordered_map<std::size_t, std::size_t> row_of;
        auto add = [&](std::size_t i, std::size_t j, std::size_t col, typename F::Element v) {
            if (f.is_zero(v)) return;
            if (i == j && !symmetric) return;
            if (i > j) {
                std::swap(i, j);
                if (!symmetric) v = f.neg(v);
            }
            auto [it, inserted] = row_of.try_emplace(i * d + j, rows.size());
            if (inserted) rows.emplace_back(unknowns.size(), f.zero());
            auto& r = rows[it->second];
            r[col] = f.add(r[col], v);
        };
        for (std::size_t col = 0; col < unknowns.size(); ++col) {
            const auto [a, b] = unknowns[col];
            const auto eps = (a == b) ? f.zero() : sign;  // diagonal unknown is E_aa alone
            for (std::size_t i = 0; i < d; ++i) {
                add(i, b, col, rho(a, i));                 // rho^T E_ab
                add(a, i, col, rho(b, i));                 // E_ab rho
                if (!f.is_zero(eps)) {
                    add(i, a, col, f.mul(eps, rho(b, i)));  // rho^T E_ba
                    add(b, i, col, f.mul(eps, rho(a, i)));  // E_ba rho
                }
            }
        }
    }
    std::vector<Vector<F>> solutions;
    if (rows.empty()) {
        for (std::size_t c = 0; c < unknowns.size(); ++c) {
            Vector<F> e(unknowns.size(), f.zero());
            e[c] = f.one();
            solutions.push_back(std::move(e));
        }
    } else {
        Matrix<F> sys(f, rows.size(), unknowns.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < unknowns.size(); ++j) sys(i, j) = rows[i][j];
        solutions = kernel_basis(sys);
    }
    std::vector<Matrix<F>> forms;
    for (const auto& sol : solutions) {
        Matrix<F> form(f, d, d);
        for (std::size_t c = 0; c < unknowns.size(); ++c) {
            const auto [a, b] = unknowns[c];
            form(a, b) = f.add(form(a, b), sol[c]);
            if (a != b) form(b, a) = f.add(form(b, a), f.mul(sign, sol[c]));
        }
        forms.push_back(std::move(form));
    }
    return forms;
}

}  // namespace detail

/// Invariant bilinear forms: solutions of rho(m)^T B + B rho(m) = 0 for all
/// m, split into symmetric and antisymmetric parts.
template <Field F>
InvariantForms<F> invariant_bilinear_space(const std::vector<Matrix<F>>& mats) {
    InvariantForms<F> out;
    out.symmetric = detail::invariant_forms_of_type(mats, true);
    out.antisymmetric = detail::invariant_forms_of_type(mats, false);
    if (!out.symmetric.empty())
        out.sample = out.symmetric.front();
    else if (!out.antisymmetric.empty())
        out.sample = out.antisymmetric.front();
    if (out.sample) out.sample_rank = rank(*out.sample);
    return out;
}

template <Field F>
InvariantForms<F> invariant_bilinear_space(const LieRepresentation<F>& rep) {
    return invariant_bilinear_space(rep.matrices);
}

/// Dimension of the degree-4 invariant polynomials of a representation over
/// F_p. Only weight-zero monomials (for the diagonal generators) can occur;
/// the remaining generators act as derivations and their annihilation
/// conditions are reduced incrementally. Throws Aborted when the number of
/// equation rows exceeds `row_budget`.
inline std::size_t invariant_quartic_dim(const std::vector<Matrix<PrimeField>>& mats, std::size_t row_budget = 2'000'000) {
    constexpr int kDegree = 4;
    const PrimeField& f = mats.front().field();
    const std::size_t d = mats.front().rows();
    if (d > 32) throw std::invalid_argument("invariant_quartic_dim supports dimension at most 32");
    using Mono = std::array<std::uint8_t, kDegree>;  // sorted variable indices
    auto key = [d](const Mono& m) {
        std::uint64_t k = 0;
        for (auto v : m) k = k * d + v;
        return k;
    };
    std::vector<const Matrix<PrimeField>*> diagonal, general;
    for (const auto& m : mats) (detail::is_diagonal(m) ? diagonal : general).push_back(&m);

    std::vector<Mono> unknowns;
    std::unordered_map<std::uint64_t, std::size_t> index_of;
    Mono m{};
    std::function<void(int, std::uint8_t)> enumerate = [&](int pos, std::uint8_t start) {
        if (pos == kDegree) {
            for (const auto* dm : diagonal) {
                auto w = f.zero();
                for (auto v : m) w = f.add(w, (*dm)(v, v));
                if (!f.is_zero(w)) return;
            }
            index_of.emplace(key(m), unknowns.size());
            unknowns.push_back(m);
            return;
        }
        for (std::uint8_t v = start; v < d; ++v) {
            m[pos] = v;
            enumerate(pos + 1, v);
        }
    };
    enumerate(0, 0);
    if (unknowns.empty()) return 0;

    SpanBuilder<PrimeField> span(f, unknowns.size());
    std::size_t rows_seen = 0;
    for (const auto* gm : general) {
        const auto& x = *gm;
        std::unordered_map<std::uint64_t, Vector<PrimeField>> rows;
        for (std::size_t col = 0; col < unknowns.size(); ++col) {
            const Mono& mono = unknowns[col];
            // d/dt f(v + t X v): replace one factor x_i by sum_j X_ij x_j
            for (int pos = 0; pos < kDegree; ++pos) {
                const auto i = mono[pos];
                if (pos > 0 && mono[pos - 1] == i) continue;  // handle each distinct variable once
                const long mult = std::count(mono.begin(), mono.end(), i);
                for (std::size_t j = 0; j < d; ++j) {
                    if (f.is_zero(x(i, j))) continue;
                    Mono img = mono;
                    img[pos] = static_cast<std::uint8_t>(j);
                    std::sort(img.begin(), img.end());
                    auto [it, inserted] = rows.try_emplace(key(img));
                    if (inserted) {
                        if (++rows_seen > row_budget) throw Aborted("invariant_quartic_dim exceeded its row budget");
                        it->second.assign(unknowns.size(), f.zero());
                    }
                    it->second[col] = f.add(it->second[col], f.mul(f.from_int(mult), x(i, j)));
                }
            }
        }
        for (auto& [k, r] : rows) {
            span.insert(std::move(r));
            if (span.dimension() == unknowns.size()) return 0;
        }
    }
    return unknowns.size() - span.dimension();
}

}  // namespace noether

#endif  // NOETHER_ORBIT_HPP
