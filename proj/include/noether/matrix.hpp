#ifndef NOETHER_MATRIX_HPP
#define NOETHER_MATRIX_HPP

#include <noether/field.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace noether {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <Field F>
using Vector = std::vector<typename F::Element>;

/// Dense row-major matrix over a Field. The field instance travels with the
/// matrix, so F_p matrices always know their modulus.
template <Field F>
class Matrix {
public:
    using Element = typename F::Element;

    explicit Matrix(F field) : field_(std::move(field)) {}
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}
    Matrix(F field, std::size_t rows, std::size_t cols, std::vector<Element> data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw DimensionMismatch("entry count does not match shape");
    }

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// Row-major integer entries, handy for literals in tests and fixtures.
    static Matrix from_ints(const F& field, std::size_t rows, std::size_t cols,
                            std::initializer_list<long> values) {
        if (values.size() != rows * cols) throw DimensionMismatch("literal entry count does not match shape");
        Matrix m(field, rows, cols);
        std::size_t k = 0;
        for (long v : values) m.data_[k++] = field.from_int(v);
        return m;
    }

    static Matrix column(const F& field, const Vector<F>& v) {
        return Matrix(field, v.size(), 1, v);
    }

    static Matrix random(const F& field, std::size_t rows, std::size_t cols, RandomSource& rng) {
        Matrix m(field, rows, cols);
        for (auto& e : m.data_) e = rng.draw(field);
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Element> row(std::size_t i) const {
        return std::span<const Element>(data_).subspan(i * cols_, cols_);
    }
    const std::vector<Element>& entries() const { return data_; }

    Vector<F> column_vector(std::size_t j) const {
        Vector<F> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!field_.is_zero(e)) return false;
        return true;
    }

    bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!field_.equal((*this)(i, j), i == j ? field_.one() : field_.zero())) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
        Matrix b(field_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.add(data_[k], o.data_[k]);
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.sub(data_[k], o.data_[k]);
        return *this;
    }

    /// this += c * o
    void add_scaled(const Element& c, const Matrix& o) {
        check_same_shape(o);
        if (field_.is_zero(c)) return;
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!field_.is_zero(o.data_[k])) data_[k] = field_.add(data_[k], field_.mul(c, o.data_[k]));
    }

    Matrix scaled(const Element& c) const {
        Matrix r(*this);
        for (auto& e : r.data_) e = field_.mul(c, e);
        return r;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    /// Product that skips zero entries of the left factor; representation
    /// matrices are mostly sparse.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        const F& f = a.field_;
        Matrix c(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Element& aik = a(i, k);
                if (f.is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Element& bkj = b(k, j);
                    if (!f.is_zero(bkj)) c(i, j) = f.add(c(i, j), f.mul(aik, bkj));
                }
            }
        }
        return c;
    }

    friend Vector<F> operator*(const Matrix& a, const Vector<F>& v) {
        if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
        const F& f = a.field_;
        Vector<F> out(a.rows_, f.zero());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Element& aik = a(i, k);
                if (!f.is_zero(aik) && !f.is_zero(v[k])) out[i] = f.add(out[i], f.mul(aik, v[k]));
            }
        return out;
    }

    /// Commutator a*b - b*a.
    friend Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!field_.equal(data_[k], o.data_[k])) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += '[';
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ' ';
                s += field_.to_string((*this)(i, j));
            }
            s += "]\n";
        }
        return s;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
    }

    F field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

template <Field F>
bool is_zero_vector(const F& f, const Vector<F>& v) {
    for (const auto& e : v)
        if (!f.is_zero(e)) return false;
    return true;
}

template <Field F>
Vector<F> linear_combination(const F& f, const std::vector<Vector<F>>& vectors, const Vector<F>& coeffs) {
    if (vectors.size() != coeffs.size()) throw DimensionMismatch("coefficient count mismatch");
    if (vectors.empty()) return {};
    Vector<F> out(vectors.front().size(), f.zero());
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (f.is_zero(coeffs[k])) continue;
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = f.add(out[i], f.mul(coeffs[k], vectors[k][i]));
    }
    return out;
}

/// Sum of coeffs[k] * mats[k]; all matrices share one shape.
template <Field F>
Matrix<F> linear_combination(const F& f, const std::vector<Matrix<F>>& mats, const Vector<F>& coeffs) {
    if (mats.size() != coeffs.size() || mats.empty()) throw DimensionMismatch("coefficient count mismatch");
    Matrix<F> out(f, mats.front().rows(), mats.front().cols());
    for (std::size_t k = 0; k < mats.size(); ++k) out.add_scaled(coeffs[k], mats[k]);
    return out;
}

template <Field F>
Vector<F> flatten(const Matrix<F>& m) {
    return m.entries();
}

}  // namespace noether

#endif  // NOETHER_MATRIX_HPP
