#ifndef NOETHER_LINALG_HPP
#define NOETHER_LINALG_HPP

// Exact dense linear algebra over Rationals and PrimeField.
//
// Over Q elimination is fraction-free: each row is cleared of denominators
// and the integer matrix is reduced with Bareiss-style exact divisions, so
// intermediate entries stay minors of the input instead of growing
// rationals. Over F_p it is ordinary Gauss-Jordan. In both cases the pivot
// is the first nonzero entry in column order, which makes every result
// (kernel bases in particular) deterministic.

#include <noether/matrix.hpp>

#include <optional>
#include <type_traits>
#include <variant>
#include <vector>

namespace noether {

template <Field F>
struct Echelon {
    Matrix<F> reduced;              ///< reduced row echelon form, pivots equal to one
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row

    std::size_t rank() const { return pivots.size(); }
};

namespace detail {

struct IntegerEchelon {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivots;
    mpz_class pivot_value = 1;  ///< common value of all pivot entries after reduction
};

inline std::vector<std::vector<mpz_class>> clear_denominators(const Matrix<Rationals>& m) {
    std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpz_class& den = m(i, j).get_den();
            if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpq_class& q = m(i, j);
            rows[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    return rows;
}

/// Fraction-free Gauss-Jordan. Divisions by the previous pivot are exact.
inline IntegerEchelon fraction_free_rref(const Matrix<Rationals>& m) {
    IntegerEchelon out;
    out.rows = clear_denominators(m);
    auto& a = out.rows;
    const std::size_t nr = m.rows(), nc = m.cols();
    mpz_class prev = 1;
    std::size_t r = 0;
    mpz_class t;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && sgn(a[p][c]) == 0) ++p;
        if (p == nr) continue;
        std::swap(a[p], a[r]);
        const mpz_class piv = a[r][c];
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r) continue;
            const mpz_class factor = a[i][c];
            for (std::size_t j = 0; j < nc; ++j) {
                t = piv * a[i][j];
                if (sgn(factor) != 0 && sgn(a[r][j]) != 0) t -= factor * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = piv;
        out.pivots.push_back(c);
        ++r;
    }
    out.pivot_value = prev;
    a.resize(r);
    return out;
}

/// Forward-only Bareiss elimination; enough for rank and determinant.
/// Returns the rank and the signed last pivot (the determinant for square
/// nonsingular input).
inline std::pair<std::size_t, mpz_class> bareiss_forward(const Matrix<Rationals>& m) {
    auto a = clear_denominators(m);
    const std::size_t nr = m.rows(), nc = m.cols();
    mpz_class prev = 1;
    int sign = 1;
    std::size_t r = 0;
    mpz_class t;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && sgn(a[p][c]) == 0) ++p;
        if (p == nr) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        const mpz_class& piv = a[r][c];
        for (std::size_t i = r + 1; i < nr; ++i) {
            const mpz_class factor = a[i][c];
            for (std::size_t j = c + 1; j < nc; ++j) {
                t = piv * a[i][j] - factor * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = piv;
        ++r;
    }
    return {r, sign * prev};
}

inline Echelon<PrimeField> modular_rref(const Matrix<PrimeField>& m) {
    const PrimeField& f = m.field();
    const std::uint64_t p = f.prime();
    std::vector<std::uint32_t> a = m.entries();
    const std::size_t nr = m.rows(), nc = m.cols();
    auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return a[i * nc + j]; };
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv_row = r;
        while (piv_row < nr && at(piv_row, c) == 0) ++piv_row;
        if (piv_row == nr) continue;
        if (piv_row != r)
            for (std::size_t j = c; j < nc; ++j) std::swap(at(piv_row, j), at(r, j));
        const std::uint64_t inv = f.inv(at(r, c));
        for (std::size_t j = c; j < nc; ++j) at(r, j) = static_cast<std::uint32_t>(at(r, j) * inv % p);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || at(i, c) == 0) continue;
            const std::uint64_t factor = p - at(i, c);
            for (std::size_t j = c; j < nc; ++j) {
                const std::uint32_t arj = at(r, j);
                if (arj) at(i, j) = static_cast<std::uint32_t>((at(i, j) + factor * arj) % p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<PrimeField> reduced(f, r, nc, std::vector<std::uint32_t>(a.begin(), a.begin() + r * nc));
    return {std::move(reduced), std::move(pivots)};
}

}  // namespace detail

/// Reduced row echelon form; zero rows are dropped.
template <Field F>
Echelon<F> rref(const Matrix<F>& m) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        return detail::modular_rref(m);
    } else {
        auto ie = detail::fraction_free_rref(m);
        Matrix<F> reduced(m.field(), ie.rows.size(), m.cols());
        for (std::size_t i = 0; i < ie.rows.size(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                mpq_class q(ie.rows[i][j], ie.pivot_value);
                q.canonicalize();
                reduced(i, j) = q;
            }
        return {std::move(reduced), std::move(ie.pivots)};
    }
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        return detail::modular_rref(m).rank();
    } else {
        return detail::bareiss_forward(m).first;
    }
}

/// Basis of the right null space, one vector per free column. Over Q the
/// vectors are integral.
template <Field F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& m) {
    const F& f = m.field();
    const std::size_t nc = m.cols();
    std::vector<Vector<F>> basis;
    auto build = [&](const std::vector<std::size_t>& pivots, auto entry, const typename F::Element& diag) {
        std::vector<bool> is_pivot(nc, false);
        for (auto c : pivots) is_pivot[c] = true;
        for (std::size_t free = 0; free < nc; ++free) {
            if (is_pivot[free]) continue;
            Vector<F> v(nc, f.zero());
            v[free] = diag;
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(entry(i, free));
            basis.push_back(std::move(v));
        }
    };
    if constexpr (std::is_same_v<F, PrimeField>) {
        auto e = detail::modular_rref(m);
        build(e.pivots, [&](std::size_t i, std::size_t j) { return e.reduced(i, j); }, f.one());
    } else {
        auto ie = detail::fraction_free_rref(m);
        build(ie.pivots, [&](std::size_t i, std::size_t j) { return mpq_class(ie.rows[i][j]); },
              mpq_class(ie.pivot_value));
    }
    return basis;
}

struct NoSolution {};
struct NonUnique {};

template <Field F>
using SolveResult = std::variant<Vector<F>, NoSolution, NonUnique>;

/// Solves m x = b. Inconsistent systems give NoSolution; consistent systems
/// with a nontrivial kernel give NonUnique.
template <Field F>
SolveResult<F> solve(const Matrix<F>& m, const Vector<F>& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length differs from row count");
    const F& f = m.field();
    const std::size_t nc = m.cols();
    Matrix<F> aug(f, m.rows(), nc + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < nc; ++j) aug(i, j) = m(i, j);
        aug(i, nc) = b[i];
    }
    auto e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == nc) return NoSolution{};
    if (e.rank() < nc) return NonUnique{};
    Vector<F> x(nc, f.zero());
    for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots[i]] = e.reduced(i, nc);
    return x;
}

template <Field F>
typename F::Element determinant(const Matrix<F>& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const F& f = m.field();
    if (m.rows() == 0) return f.one();
    if constexpr (std::is_same_v<F, PrimeField>) {
        std::vector<std::uint32_t> a = m.entries();
        const std::size_t n = m.rows();
        std::uint32_t det = 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && a[p * n + c] == 0) ++p;
            if (p == n) return 0;
            if (p != c) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
                det = f.neg(det);
            }
            det = f.mul(det, a[c * n + c]);
            const auto inv = f.inv(a[c * n + c]);
            for (std::size_t i = c + 1; i < n; ++i) {
                const auto factor = f.mul(a[i * n + c], inv);
                if (factor == 0) continue;
                for (std::size_t j = c; j < n; ++j)
                    a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[c * n + j]));
            }
        }
        return det;
    } else {
        // Row scaling by the denominator lcm multiplies the determinant; undo it.
        mpq_class scale = 1;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            mpz_class l = 1;
            for (std::size_t j = 0; j < m.cols(); ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
            scale *= l;
        }
        auto [r, last] = detail::bareiss_forward(m);
        if (r < m.rows()) return f.zero();
        mpq_class d(last);
        d /= scale;
        return d;
    }
}

/// Exact inverse; throws ArithmeticError for singular input.
template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const F& f = m.field();
    Matrix<F> aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = f.one();
    }
    auto e = rref(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw ArithmeticError("matrix is singular");
    return e.reduced.block(0, n, n, n);
}

/// Incrementally maintained echelon basis of a subspace of F^len.
template <Field F>
class SpanBuilder {
public:
    SpanBuilder(F field, std::size_t length) : field_(std::move(field)), length_(length) {}

    std::size_t dimension() const { return rows_.size(); }
    std::size_t length() const { return length_; }

    /// Reduces v modulo the current span; true when v enlarged the span.
    bool insert(Vector<F> v) {
        if (v.size() != length_) throw DimensionMismatch("span vector length mismatch");
        reduce(v);
        std::size_t lead = 0;
        while (lead < length_ && field_.is_zero(v[lead])) ++lead;
        if (lead == length_) return false;
        const auto inv = field_.inv(v[lead]);
        for (auto& e : v) e = field_.mul(e, inv);
        rows_.push_back(std::move(v));
        pivots_.push_back(lead);
        return true;
    }

    bool contains(Vector<F> v) const {
        reduce(v);
        return is_zero_vector(field_, v);
    }

private:
    void reduce(Vector<F>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const auto c = v[pivots_[k]];
            if (field_.is_zero(c)) continue;
            const auto& row = rows_[k];
            for (std::size_t j = pivots_[k]; j < length_; ++j)
                if (!field_.is_zero(row[j])) v[j] = field_.sub(v[j], field_.mul(c, row[j]));
        }
    }

    F field_;
    std::size_t length_;
    std::vector<Vector<F>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Coordinates of each target in terms of a linearly independent family,
/// or nullopt if some target lies outside its span.
template <Field F>
std::optional<std::vector<Vector<F>>> coordinates_in_basis(const F& f, const std::vector<Vector<F>>& basis,
                                                           const std::vector<Vector<F>>& targets) {
    const std::size_t s = basis.size();
    if (s == 0) {
        for (const auto& t : targets)
            if (!is_zero_vector(f, t)) return std::nullopt;
        return std::vector<Vector<F>>(targets.size());
    }
    const std::size_t len = basis.front().size();
    Matrix<F> aug(f, len, s + targets.size());
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t i = 0; i < len; ++i) aug(i, k) = basis[k][i];
    for (std::size_t t = 0; t < targets.size(); ++t) {
        if (targets[t].size() != len) throw DimensionMismatch("target length mismatch");
        for (std::size_t i = 0; i < len; ++i) aug(i, s + t) = targets[t][i];
    }
    auto e = rref(aug);
    if (e.rank() < s || e.pivots[s - 1] != s - 1)
        throw DimensionMismatch("coordinates_in_basis: basis is linearly dependent");
    if (e.rank() > s) return std::nullopt;
    std::vector<Vector<F>> coords(targets.size(), Vector<F>(s, f.zero()));
    for (std::size_t t = 0; t < targets.size(); ++t)
        for (std::size_t k = 0; k < s; ++k) coords[t][k] = e.reduced(k, s + t);
    return coords;
}

/// Dimension of the unital associative algebra generated by square matrices.
template <Field F>
std::size_t associative_closure(const F& f, std::size_t d, const std::vector<Matrix<F>>& gens) {
    for (const auto& g : gens)
        if (g.rows() != d || g.cols() != d) throw DimensionMismatch("closure generators must be d x d");
    SpanBuilder<F> span(f, d * d);
    std::vector<Matrix<F>> frontier{Matrix<F>::identity(f, d)};
    span.insert(flatten(frontier.front()));
    while (!frontier.empty()) {
        std::vector<Matrix<F>> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Matrix<F> y = g * x;
                if (span.insert(flatten(y))) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return span.dimension();
}

/// Dimension of {X : X g = g X for every generator}.
template <Field F>
std::size_t commutant_dimension(const F& f, std::size_t d, const std::vector<Matrix<F>>& gens) {
    if (gens.empty()) return d * d;
    // Unknown X(r, c) sits in column r*d + c; equation (g X - X g)(i, j) = 0.
    SpanBuilder<F> rows(f, d * d);
    for (const auto& g : gens) {
        if (g.rows() != d || g.cols() != d) throw DimensionMismatch("commutant generators must be d x d");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vector<F> eq(d * d, f.zero());
                for (std::size_t k = 0; k < d; ++k) {
                    if (!f.is_zero(g(i, k))) eq[k * d + j] = f.add(eq[k * d + j], g(i, k));
                    if (!f.is_zero(g(k, j))) eq[i * d + k] = f.sub(eq[i * d + k], g(k, j));
                }
                rows.insert(std::move(eq));
                if (rows.dimension() == d * d) return 0;
            }
    }
    return d * d - rows.dimension();
}

}  // namespace noether

#endif  // NOETHER_LINALG_HPP
