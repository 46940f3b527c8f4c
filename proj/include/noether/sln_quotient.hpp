#ifndef NOETHER_SLN_QUOTIENT_HPP
#define NOETHER_SLN_QUOTIENT_HPP

#include <noether/linalg.hpp>

#include <optional>
#include <stdexcept>

namespace noether {

class NotInSLn : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegeneratePair : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotSameFiber : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularFiber : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// (X, Y) with X of shape n x (n-1) and Y of shape (n-1) x n.
template <Field F>
struct MatrixPair {
    Matrix<F> x;
    Matrix<F> y;

    MatrixPair(Matrix<F> x_, Matrix<F> y_) : x(std::move(x_)), y(std::move(y_)) {
        const std::size_t n = x.rows();
        if (n < 2 || x.cols() != n - 1 || y.rows() != n - 1 || y.cols() != n)
            throw DimensionMismatch("matrix pair needs X: n x (n-1) and Y: (n-1) x n with n >= 2");
    }

    std::size_t n() const { return x.rows(); }
    const F& field() const { return x.field(); }
    bool operator==(const MatrixPair&) const = default;

    static MatrixPair zero(const F& f, std::size_t n) { return {Matrix<F>(f, n, n - 1), Matrix<F>(f, n - 1, n)}; }
};

/// Identity on top of a zero last row.
template <Field F>
Matrix<F> canonical_J(const F& f, std::size_t n) {
    if (n < 2) throw std::invalid_argument("canonical_J needs n >= 2");
    Matrix<F> j(f, n, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) j(i, i) = f.one();
    return j;
}

/// A . (X, Y) = (AX, Y A^-1).
template <Field F>
MatrixPair<F> act(const Matrix<F>& a, const MatrixPair<F>& p) {
    const F& f = p.field();
    if (a.rows() != p.n() || a.cols() != p.n()) throw DimensionMismatch("act: A must be n x n");
    if (!f.equal(determinant(a), f.one())) throw NotInSLn("act: det(A) must be 1");
    return {a * p.x, p.y * inverse(a)};
}

/// tau(X, Y) = (Y^T, X^T).
template <Field F>
MatrixPair<F> tau(const MatrixPair<F>& p) {
    return {p.y.transpose(), p.x.transpose()};
}

/// pi(X, Y) = YX.
template <Field F>
Matrix<F> pi(const MatrixPair<F>& p) {
    return p.y * p.x;
}

template <Field F>
struct Normalization {
    Matrix<F> a;       ///< det 1 with A X = J
    MatrixPair<F> pair;  ///< A . (X, Y) = (J, Y A^-1)
};

/// Completes the columns of X by the first standard basis vector outside
/// their span, scaled so the determinant is 1, and inverts.
template <Field F>
Normalization<F> normalize_to_J(const MatrixPair<F>& p) {
    const F& f = p.field();
    const std::size_t n = p.n();
    if (rank(p.x) != n - 1) throw DegeneratePair("normalize_to_J: X must have rank n-1");
    for (std::size_t k = 0; k < n; ++k) {
        Matrix<F> b(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j + 1 < n; ++j) b(i, j) = p.x(i, j);
        b(k, n - 1) = f.one();
        const auto det = determinant(b);
        if (f.is_zero(det)) continue;
        b(k, n - 1) = f.inv(det);
        auto a = inverse(b);
        auto moved = act(a, p);
        return {std::move(a), std::move(moved)};
    }
    throw DegeneratePair("normalize_to_J: no basis completion found");
}

/// The unique A with A . (J, Y) = (J, Z): identity except for the last
/// column (t, 1), where pi(J, Y) t = y_n - z_n.
template <Field F>
Matrix<F> fiber_transporter(const MatrixPair<F>& jy, const MatrixPair<F>& jz) {
    const F& f = jy.field();
    const std::size_t n = jy.n();
    if (jz.n() != n) throw DimensionMismatch("fiber_transporter: pairs have different n");
    const auto j = canonical_J(f, n);
    if (!(jy.x == j) || !(jz.x == j)) throw std::invalid_argument("fiber_transporter: X components must equal J");
    const auto piy = pi(jy);
    if (!(piy == pi(jz))) throw NotSameFiber("fiber_transporter: pi values differ");
    Vector<F> rhs(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) rhs[i] = f.sub(jy.y(i, n - 1), jz.y(i, n - 1));
    auto sol = solve(piy, rhs);
    if (!std::holds_alternative<Vector<F>>(sol)) throw SingularFiber("fiber_transporter: pi(J, Y) is singular");
    const auto& t = std::get<Vector<F>>(sol);
    auto a = Matrix<F>::identity(f, n);
    for (std::size_t i = 0; i + 1 < n; ++i) a(i, n - 1) = t[i];
    if (!(act(a, jy) == jz)) throw ArithmeticError("fiber_transporter: replay failed");
    return a;
}

/// An A in SL_n with A . p = q when one exists (pi(p) nonsingular
/// required), std::nullopt when p and q lie in different fibers.
template <Field F>
std::optional<Matrix<F>> same_orbit(const MatrixPair<F>& p, const MatrixPair<F>& q) {
    if (!(pi(p) == pi(q))) return std::nullopt;
    const auto np = normalize_to_J(p);
    const auto nq = normalize_to_J(q);
    const auto t = fiber_transporter(np.pair, nq.pair);
    auto a = inverse(nq.a) * t * np.a;
    if (!(act(a, p) == q)) throw ArithmeticError("same_orbit: replay failed");
    return a;
}

/// dim { a in sl_n : aX = 0, Ya = 0 }.
template <Field F>
std::size_t stabilizer_lie_dim(const MatrixPair<F>& p) {
    const F& f = p.field();
    const std::size_t n = p.n();
    // unknown a(r, c) sits in column n r + c
    Matrix<F> sys(f, 2 * n * (n - 1) + 1, n * n);
    std::size_t row = 0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c + 1 < n; ++c, ++row)  // (aX)(r, c)
            for (std::size_t k = 0; k < n; ++k) sys(row, n * r + k) = p.x(k, c);
    for (std::size_t r = 0; r + 1 < n; ++r)
        for (std::size_t c = 0; c < n; ++c, ++row)  // (Ya)(r, c)
            for (std::size_t k = 0; k < n; ++k) sys(row, n * k + c) = p.y(r, k);
    for (std::size_t i = 0; i < n; ++i) sys(row, n * i + i) = f.one();
    return n * n - rank(sys);
}

/// Rank of d pi at (X, Y): (H, K) -> YH + KX.
template <Field F>
std::size_t jacobian_rank_pi(const MatrixPair<F>& p) {
    const F& f = p.field();
    const std::size_t n = p.n(), m = n - 1;
    // columns: H(i, j) at m i + j, then K(i, j) at n m + n i + j; rows: (r, c) at m r + c
    Matrix<F> jac(f, m * m, 2 * n * m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            for (std::size_t k = 0; k < n; ++k) {
                jac(m * r + c, m * k + c) = p.y(r, k);
                jac(m * r + c, n * m + n * r + k) = p.x(k, c);
            }
        }
    return rank(jac);
}

/// Random element of SL_n: a random invertible matrix with its first column
/// divided by the determinant.
template <Field F>
Matrix<F> random_sln(const F& f, std::size_t n, RandomSource& rng) {
    while (true) {
        auto m = Matrix<F>::random(f, n, n, rng);
        const auto det = determinant(m);
        if (f.is_zero(det)) continue;
        const auto s = f.inv(det);
        for (std::size_t i = 0; i < n; ++i) m(i, 0) = f.mul(m(i, 0), s);
        return m;
    }
}

template <Field F>
MatrixPair<F> random_pair(const F& f, std::size_t n, RandomSource& rng) {
    return {Matrix<F>::random(f, n, n - 1, rng), Matrix<F>::random(f, n - 1, n, rng)};
}

}  // namespace noether

#endif  // NOETHER_SLN_QUOTIENT_HPP
