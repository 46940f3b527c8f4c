#ifndef NOETHER_CLIFFORD_HPP
#define NOETHER_CLIFFORD_HPP

// Split quadratic spaces and their Clifford algebras.
//
// Generators are ordered p1, q1, ..., pm, qm (and u when n is odd) with
// q(x) = sum x_pi x_qi (+ x_u^2). The polarization B has B(pi, qi) = 1/2 and
// B(u, u) = 1, and the algebra relation is v w + w v = 2 B(v, w). Blades are
// ordered products e_i1 ... e_ik with i1 < ... < ik, addressed by bitmask.

#include <noether/matrix.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace noether {

class ConstructionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuadraticSpace {
public:
    explicit QuadraticSpace(int n) : n_(n) {
        if (n < 2 || n > 30) throw std::invalid_argument("quadratic space dimension must be in [2, 30]");
    }

    int n() const { return n_; }
    int pairs() const { return n_ / 2; }
    bool odd() const { return n_ % 2 == 1; }

    int p(int i) const { return 2 * i; }      // 0-based pair index
    int q(int i) const { return 2 * i + 1; }
    int u() const {
        if (!odd()) throw std::logic_error("even quadratic space has no unit vector");
        return n_ - 1;
    }

    /// Twice the polarization: 2 B(a, b), always an integer.
    long twice_polar(int a, int b) const {
        if (a > b) std::swap(a, b);
        if (odd() && a == u() && b == u()) return 2;
        if (a % 2 == 0 && b == a + 1 && b < 2 * pairs()) return 1;
        return 0;
    }

    /// q(e_a) = B(e_a, e_a): 1 for u, 0 for the isotropic generators.
    long square(int a) const { return twice_polar(a, a) / 2; }

    std::string generator_name(int a) const {
        if (odd() && a == u()) return "u";
        return (a % 2 == 0 ? "p" : "q") + std::to_string(a / 2 + 1);
    }

    template <Field F>
    Matrix<F> gram(const F& f) const {
        Matrix<F> g(f, n_, n_);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) g(a, b) = f.from_ratio(twice_polar(a, b), 2);
        return g;
    }

    bool operator==(const QuadraticSpace&) const = default;

private:
    int n_;
};

using Blade = std::uint32_t;
using IntegerTerms = std::map<Blade, long>;

namespace detail {

inline void accumulate(IntegerTerms& into, Blade b, long c) {
    if (c == 0) return;
    auto [it, inserted] = into.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) into.erase(it);
    }
}

/// blade * e_j expanded in the blade basis (integer coefficients).
inline IntegerTerms blade_times_generator(const QuadraticSpace& space, Blade s, int j) {
    IntegerTerms out;
    const Blade bit_j = Blade(1) << j;
    if (s == 0) {
        out[bit_j] = 1;
        return out;
    }
    const int last = 31 - std::countl_zero(s);
    if (last < j) {
        out[s | bit_j] = 1;
    } else if (last == j) {
        accumulate(out, s ^ bit_j, space.square(j));
    } else {
        // S' e_last e_j = -(S' e_j) e_last + 2B(last, j) S'
        const Blade rest = s ^ (Blade(1) << last);
        for (auto [b, c] : blade_times_generator(space, rest, j)) accumulate(out, b | (Blade(1) << last), -c);
        accumulate(out, rest, space.twice_polar(last, j));
    }
    return out;
}

}  // namespace detail

/// Product of two blades, as an integer combination of blades.
inline IntegerTerms blade_product(const QuadraticSpace& space, Blade a, Blade b) {
    IntegerTerms acc{{a, 1}};
    for (int j = 0; j < space.n(); ++j) {
        if (!(b >> j & 1u)) continue;
        IntegerTerms next;
        for (auto [blade, c] : acc)
            for (auto [nb, nc] : detail::blade_times_generator(space, blade, j)) detail::accumulate(next, nb, c * nc);
        acc = std::move(next);
    }
    return acc;
}

/// Blade masks in canonical order: by size, then lexicographically.
inline std::vector<Blade> blade_order(int n) {
    std::vector<Blade> all(std::size_t(1) << n);
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<Blade>(k);
    std::stable_sort(all.begin(), all.end(), [](Blade x, Blade y) {
        const int cx = std::popcount(x), cy = std::popcount(y);
        if (cx != cy) return cx < cy;
        // lexicographic on increasing index lists: the lowest differing bit decides
        const Blade diff = x ^ y;
        const Blade low = diff & (~diff + 1);
        return (x & low) != 0;
    });
    return all;
}

/// Element of Cl(n), stored sparsely by blade mask.
template <Field F>
class CliffordElement {
public:
    using Element = typename F::Element;

    CliffordElement(QuadraticSpace space, F field) : space_(space), field_(std::move(field)) {}

    static CliffordElement scalar(QuadraticSpace space, const F& f, Element c) {
        CliffordElement e(space, f);
        e.add_term(0, c);
        return e;
    }
    static CliffordElement generator(QuadraticSpace space, const F& f, int a) {
        CliffordElement e(space, f);
        e.add_term(Blade(1) << a, f.one());
        return e;
    }

    const QuadraticSpace& space() const { return space_; }
    const F& field() const { return field_; }
    const std::map<Blade, Element>& terms() const { return terms_; }

    Element coefficient(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    bool is_zero() const { return terms_.empty(); }

    void add_term(Blade b, const Element& c) {
        if (field_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    CliffordElement& operator+=(const CliffordElement& o) {
        check(o);
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    CliffordElement& operator-=(const CliffordElement& o) {
        check(o);
        for (const auto& [b, c] : o.terms_) add_term(b, field_.neg(c));
        return *this;
    }
    CliffordElement scaled(const Element& s) const {
        CliffordElement r(space_, field_);
        for (const auto& [b, c] : terms_) r.add_term(b, field_.mul(s, c));
        return r;
    }

    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }

    bool operator==(const CliffordElement& o) const {
        if (!(space_ == o.space_) || terms_.size() != o.terms_.size()) return false;
        for (const auto& [b, c] : terms_) {
            auto it = o.terms_.find(b);
            if (it == o.terms_.end() || !field_.equal(c, it->second)) return false;
        }
        return true;
    }

    void check(const CliffordElement& o) const {
        if (!(space_ == o.space_)) throw std::invalid_argument("Clifford elements live in different spaces");
    }

private:
    QuadraticSpace space_;
    F field_;
    std::map<Blade, Element> terms_;
};

template <Field F>
CliffordElement<F> clifford_product(const CliffordElement<F>& a, const CliffordElement<F>& b) {
    a.check(b);
    const F& f = a.field();
    CliffordElement<F> out(a.space(), f);
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            const auto cab = f.mul(ca, cb);
            for (auto [blade, k] : blade_product(a.space(), ba, bb)) out.add_term(blade, f.mul(cab, f.from_int(k)));
        }
    return out;
}

/// Ordered basis labels (a, b), a < b, of so(n).
inline std::vector<std::pair<int, int>> bivector_labels(int n) {
    std::vector<std::pair<int, int>> labels;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) labels.emplace_back(a, b);
    return labels;
}

inline std::size_t bivector_index(int n, int a, int b) {
    if (a > b) std::swap(a, b);
    // rows before a contribute (n-1) + (n-2) + ... + (n-a)
    return static_cast<std::size_t>(a * n - a * (a + 1) / 2 + (b - a - 1));
}

/// m_ab = (e_a e_b - e_b e_a) / 4 for a < b.
template <Field F>
std::vector<CliffordElement<F>> bivector_basis(const QuadraticSpace& space, const F& f) {
    std::vector<CliffordElement<F>> basis;
    const auto quarter = f.from_ratio(1, 4);
    for (auto [a, b] : bivector_labels(space.n())) {
        auto ea = CliffordElement<F>::generator(space, f, a);
        auto eb = CliffordElement<F>::generator(space, f, b);
        basis.push_back((clifford_product(ea, eb) - clifford_product(eb, ea)).scaled(quarter));
    }
    return basis;
}

/// Sparse expansion of each [m_i, m_j] in the bivector basis:
/// entry [i][j] lists (k, c) with [m_i, m_j] = sum c m_k.
template <Field F>
using StructureConstants = std::vector<std::vector<std::vector<std::pair<std::size_t, typename F::Element>>>>;

/// Expands a Clifford element lying in span{m_ab} in that basis, or throws.
template <Field F>
Vector<F> bivector_coordinates(const CliffordElement<F>& x, const std::vector<CliffordElement<F>>& basis) {
    const F& f = x.field();
    const int n = x.space().n();
    Vector<F> coords(basis.size(), f.zero());
    // m_ab has blade coefficient 1/2 on e_a e_b; read that off, then verify.
    for (const auto& [blade, c] : x.terms()) {
        if (std::popcount(blade) == 0) continue;
        if (std::popcount(blade) != 2) throw ConstructionFailure("element is not in the bivector span");
        const int a = std::countr_zero(blade);
        const int b = 31 - std::countl_zero(blade);
        coords[bivector_index(n, a, b)] = f.add(c, c);
    }
    CliffordElement<F> rebuilt(x.space(), f);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!f.is_zero(coords[k])) rebuilt += basis[k].scaled(coords[k]);
    if (!(rebuilt == x)) throw ConstructionFailure("element is not in the bivector span");
    return coords;
}

/// Structure constants of so(n), computed once inside Cl(n).
template <Field F>
StructureConstants<F> so_structure_constants(const QuadraticSpace& space, const F& f) {
    const auto basis = bivector_basis(space, f);
    const std::size_t dim = basis.size();
    StructureConstants<F> sc(dim, std::vector<std::vector<std::pair<std::size_t, typename F::Element>>>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            auto br = clifford_product(basis[i], basis[j]) - clifford_product(basis[j], basis[i]);
            auto coords = bivector_coordinates(br, basis);
            for (std::size_t k = 0; k < dim; ++k)
                if (!f.is_zero(coords[k])) {
                    sc[i][j].emplace_back(k, coords[k]);
                    sc[j][i].emplace_back(k, f.neg(coords[k]));
                }
        }
    return sc;
}

/// so(n') inside so(n): an ordered split basis of a nondegenerate subspace,
/// given by integer coordinates in the ambient generator basis, and the
/// induced images of the so(n') bivectors in the ambient bivector basis.
struct SubalgebraEmbedding {
    int ambient_n = 0;
    int sub_n = 0;
    std::vector<std::vector<long>> vectors;  ///< sub_n vectors of length ambient_n
    std::vector<std::vector<long>> image;    ///< per sub-bivector, coefficients over ambient bivectors

    bool operator==(const SubalgebraEmbedding&) const = default;
};

namespace detail {

inline SubalgebraEmbedding embedding_from_vectors(int ambient_n, std::vector<std::vector<long>> vectors) {
    SubalgebraEmbedding e;
    e.ambient_n = ambient_n;
    e.sub_n = static_cast<int>(vectors.size());
    e.vectors = std::move(vectors);
    // m'_ab = sum_{i<j} (alpha_i beta_j - alpha_j beta_i) m_ij
    for (auto [a, b] : bivector_labels(e.sub_n)) {
        std::vector<long> coeffs(bivector_labels(ambient_n).size(), 0);
        const auto& al = e.vectors[a];
        const auto& be = e.vectors[b];
        for (int i = 0; i < ambient_n; ++i)
            for (int j = i + 1; j < ambient_n; ++j) coeffs[bivector_index(ambient_n, i, j)] = al[i] * be[j] - al[j] * be[i];
        e.image.push_back(std::move(coeffs));
    }
    return e;
}

}  // namespace detail

inline SubalgebraEmbedding identity_embedding(int n) {
    std::vector<std::vector<long>> vecs(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) vecs[i][i] = 1;
    return detail::embedding_from_vectors(n, std::move(vecs));
}

/// inner: so(k'') in so(k'); outer: so(k') in so(n). Result: so(k'') in so(n).
inline SubalgebraEmbedding compose(const SubalgebraEmbedding& outer, const SubalgebraEmbedding& inner) {
    if (inner.ambient_n != outer.sub_n) throw std::invalid_argument("embeddings do not compose");
    std::vector<std::vector<long>> vecs;
    for (const auto& v : inner.vectors) {
        std::vector<long> w(outer.ambient_n, 0);
        for (int k = 0; k < inner.ambient_n; ++k)
            for (int i = 0; i < outer.ambient_n; ++i) w[i] += v[k] * outer.vectors[k][i];
        vecs.push_back(std::move(w));
    }
    return detail::embedding_from_vectors(outer.ambient_n, std::move(vecs));
}

/// Canonical chain so(target) in so(n): going from k to k-1, drop the unit
/// vector when k is odd, and replace the last hyperbolic pair (p, q) by the
/// unit vector p + q when k is even.
inline SubalgebraEmbedding embed_subalgebra(const QuadraticSpace& space, int target) {
    const int n = space.n();
    if (target >= n) throw std::invalid_argument("embedding target must be smaller than the ambient dimension");
    if (target < 2) throw std::invalid_argument("embedding target must be at least 2");
    SubalgebraEmbedding current = identity_embedding(n);
    for (int k = n; k > target; --k) {
        std::vector<std::vector<long>> step;  // vectors of so(k-1)'s space inside so(k)'s space
        auto unit = [&](int i) {
            std::vector<long> v(k, 0);
            v[i] = 1;
            return v;
        };
        if (k % 2 == 1) {
            for (int i = 0; i < k - 1; ++i) step.push_back(unit(i));
        } else {
            for (int i = 0; i < k - 2; ++i) step.push_back(unit(i));
            std::vector<long> folded(k, 0);
            folded[k - 2] = 1;
            folded[k - 1] = 1;
            step.push_back(std::move(folded));
        }
        current = compose(current, detail::embedding_from_vectors(k, std::move(step)));
    }
    return current;
}

/// Gram matrix (scaled by 2) of the embedding's vectors under the ambient form.
inline std::vector<std::vector<long>> embedded_twice_gram(const QuadraticSpace& ambient, const SubalgebraEmbedding& e) {
    std::vector<std::vector<long>> g(e.sub_n, std::vector<long>(e.sub_n, 0));
    for (int a = 0; a < e.sub_n; ++a)
        for (int b = 0; b < e.sub_n; ++b)
            for (int i = 0; i < ambient.n(); ++i)
                for (int j = 0; j < ambient.n(); ++j) g[a][b] += e.vectors[a][i] * e.vectors[b][j] * ambient.twice_polar(i, j);
    return g;
}

}  // namespace noether

#endif  // NOETHER_CLIFFORD_HPP
