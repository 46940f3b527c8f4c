#ifndef NOETHER_OCTONION_HPP
#define NOETHER_OCTONION_HPP

#include <noether/clifford.hpp>
#include <noether/orbit.hpp>

#include <array>

namespace noether {

/// Split octonion in Zorn vector-matrix form [[a, v], [w, b]].
/// Coordinates are ordered (a, v1, v2, v3, w1, w2, w3, b).
template <Field F>
struct Octonion {
    using Element = typename F::Element;
    Element a, b;
    std::array<Element, 3> v, w;

    static Octonion zero(const F& f) { return {f.zero(), f.zero(), {f.zero(), f.zero(), f.zero()}, {f.zero(), f.zero(), f.zero()}}; }
    static Octonion one(const F& f) {
        auto x = zero(f);
        x.a = f.one();
        x.b = f.one();
        return x;
    }
    static Octonion basis(const F& f, int i) {
        auto c = Vector<F>(8, f.zero());
        c[i] = f.one();
        return from_coordinates(c);
    }
    static Octonion from_coordinates(const Vector<F>& c) {
        if (c.size() != 8) throw DimensionMismatch("octonion coordinates have length 8");
        return {c[0], c[7], {c[1], c[2], c[3]}, {c[4], c[5], c[6]}};
    }
    Vector<F> coordinates() const { return {a, v[0], v[1], v[2], w[0], w[1], w[2], b}; }

    bool operator==(const Octonion&) const = default;
};

namespace detail {

template <Field F>
typename F::Element dot(const F& f, const std::array<typename F::Element, 3>& x, const std::array<typename F::Element, 3>& y) {
    return f.add(f.add(f.mul(x[0], y[0]), f.mul(x[1], y[1])), f.mul(x[2], y[2]));
}

template <Field F>
std::array<typename F::Element, 3> cross(const F& f, const std::array<typename F::Element, 3>& x,
                                         const std::array<typename F::Element, 3>& y) {
    return {f.sub(f.mul(x[1], y[2]), f.mul(x[2], y[1])), f.sub(f.mul(x[2], y[0]), f.mul(x[0], y[2])),
            f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]))};
}

}  // namespace detail

template <Field F>
Octonion<F> oct_add(const F& f, const Octonion<F>& x, const Octonion<F>& y) {
    Octonion<F> r = x;
    r.a = f.add(x.a, y.a);
    r.b = f.add(x.b, y.b);
    for (int i = 0; i < 3; ++i) {
        r.v[i] = f.add(x.v[i], y.v[i]);
        r.w[i] = f.add(x.w[i], y.w[i]);
    }
    return r;
}

/// [[a,v],[w,b]] [[a',v'],[w',b']] =
///   [[aa' + v.w', av' + b'v + w x w'], [a'w + bw' - v x v', bb' + w.v']]
template <Field F>
Octonion<F> oct_multiply(const F& f, const Octonion<F>& x, const Octonion<F>& y) {
    using detail::cross;
    using detail::dot;
    Octonion<F> r;
    r.a = f.add(f.mul(x.a, y.a), dot(f, x.v, y.w));
    r.b = f.add(f.mul(x.b, y.b), dot(f, x.w, y.v));
    const auto ww = cross(f, x.w, y.w);
    const auto vv = cross(f, x.v, y.v);
    for (int i = 0; i < 3; ++i) {
        r.v[i] = f.add(f.add(f.mul(x.a, y.v[i]), f.mul(y.b, x.v[i])), ww[i]);
        r.w[i] = f.sub(f.add(f.mul(y.a, x.w[i]), f.mul(x.b, y.w[i])), vv[i]);
    }
    return r;
}

template <Field F>
typename F::Element oct_norm(const F& f, const Octonion<F>& x) {
    return f.sub(f.mul(x.a, x.b), detail::dot(f, x.v, x.w));
}

template <Field F>
typename F::Element oct_trace(const F& f, const Octonion<F>& x) {
    return f.add(x.a, x.b);
}

/// Left multiplication by x as an 8x8 matrix on coordinates.
template <Field F>
Matrix<F> left_multiplication(const F& f, const Octonion<F>& x) {
    Matrix<F> m(f, 8, 8);
    for (int j = 0; j < 8; ++j) {
        const auto col = oct_multiply(f, x, Octonion<F>::basis(f, j)).coordinates();
        for (int i = 0; i < 8; ++i) m(i, j) = col[i];
    }
    return m;
}

/// Gram matrix of the trace form (x, y) -> trace(xy).
template <Field F>
Matrix<F> trace_form(const F& f) {
    Matrix<F> g(f, 8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            g(i, j) = oct_trace(f, oct_multiply(f, Octonion<F>::basis(f, i), Octonion<F>::basis(f, j)));
    return g;
}

template <Field F>
Octonion<F> apply(const Matrix<F>& d, const Octonion<F>& x) {
    return Octonion<F>::from_coordinates(d * x.coordinates());
}

/// Solutions of D(xy) = D(x)y + xD(y) on all basis pairs, as 8x8 matrices.
template <Field F>
std::vector<Matrix<F>> derivation_space(const F& f) {
    // unknown D(r, c) sits in column 8r + c
    Matrix<F> system(f, 8 * 64, 64);
    std::array<Vector<F>, 64> prod;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            prod[8 * i + j] = oct_multiply(f, Octonion<F>::basis(f, i), Octonion<F>::basis(f, j)).coordinates();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const std::size_t row0 = 8 * (8 * i + j);
            const auto& eij = prod[8 * i + j];
            for (int r = 0; r < 8; ++r) {
                // D(e_i e_j)_r = sum_c D(r, c) (e_i e_j)_c
                for (int c = 0; c < 8; ++c) system(row0 + r, 8 * r + c) = f.add(system(row0 + r, 8 * r + c), eij[c]);
                // D(e_i) e_j = sum_k D(k, i) (e_k e_j); likewise e_i D(e_j)
                for (int k = 0; k < 8; ++k) {
                    const auto& kj = prod[8 * k + j];
                    const auto& ik = prod[8 * i + k];
                    system(row0 + r, 8 * k + i) = f.sub(system(row0 + r, 8 * k + i), kj[r]);
                    system(row0 + r, 8 * k + j) = f.sub(system(row0 + r, 8 * k + j), ik[r]);
                }
            }
        }
    std::vector<Matrix<F>> out;
    for (const auto& k : kernel_basis(system)) out.emplace_back(f, 8, 8, k);
    return out;
}

/// Basis of Der(O); throws ConstructionFailure unless it has dimension 14.
template <Field F>
std::vector<Matrix<F>> derivation_algebra(const F& f) {
    auto derivs = derivation_space(f);
    if (derivs.size() != 14)
        throw ConstructionFailure("derivation algebra has dimension " + std::to_string(derivs.size()) + ", expected 14");
    return derivs;
}

/// Basis of the trace-zero subspace V7 inside O: E1 - E2, then v1..v3, w1..w3.
template <Field F>
std::vector<Vector<F>> trace_zero_basis(const F& f) {
    std::vector<Vector<F>> basis;
    Vector<F> h(8, f.zero());
    h[0] = f.one();
    h[7] = f.neg(f.one());
    basis.push_back(h);
    for (int i = 1; i < 7; ++i) {
        Vector<F> e(8, f.zero());
        e[i] = f.one();
        basis.push_back(e);
    }
    return basis;
}

/// A derivation restricted to V7, in the trace_zero_basis coordinates.
template <Field F>
Matrix<F> restrict_to_trace_zero(const Matrix<F>& d) {
    const F& f = d.field();
    const auto basis = trace_zero_basis(f);
    std::vector<Vector<F>> images;
    for (const auto& b : basis) images.push_back(d * b);
    auto coords = coordinates_in_basis(f, basis, images);
    if (!coords) throw ConstructionFailure("derivation does not preserve the trace-zero subspace");
    Matrix<F> m(f, 7, 7);
    for (std::size_t j = 0; j < 7; ++j)
        for (std::size_t i = 0; i < 7; ++i) m(i, j) = (*coords)[j][i];
    return m;
}

template <Field F>
Octonion<F> from_trace_zero(const F& f, const Vector<F>& c) {
    if (c.size() != 7) throw DimensionMismatch("trace-zero coordinates have length 7");
    return {c[0], f.neg(c[0]), {c[1], c[2], c[3]}, {c[4], c[5], c[6]}};
}

/// Dimension of the subalgebra generated by 1 and the given elements.
template <Field F>
std::size_t subalgebra_generated(const F& f, const std::vector<Octonion<F>>& gens) {
    SpanBuilder<F> span(f, 8);
    std::vector<Octonion<F>> basis;
    auto add = [&](const Octonion<F>& x) {
        if (span.insert(x.coordinates())) basis.push_back(x);
    };
    add(Octonion<F>::one(f));
    for (const auto& g : gens) add(g);
    for (std::size_t done = 0; done < basis.size() && basis.size() < 8;) {
        const std::size_t limit = basis.size();
        for (std::size_t i = 0; i < limit; ++i)
            for (std::size_t j = done; j < limit; ++j) {
                add(oct_multiply(f, basis[i], basis[j]));
                add(oct_multiply(f, basis[j], basis[i]));
            }
        done = limit;
    }
    return span.dimension();
}

template <Field F>
Octonion<F> random_octonion(const F& f, RandomSource& rng) {
    Vector<F> c(8);
    for (auto& e : c) e = rng.draw(f);
    return Octonion<F>::from_coordinates(c);
}

/// (E1 - E2, [[0,e1],[e1,0]], [[0,e2],[e2,0]]): generates the split octonions.
template <Field F>
std::array<Octonion<F>, 3> split_generating_triple(const F& f) {
    auto x = Octonion<F>::zero(f), y = x, z = x;
    x.a = f.one();
    x.b = f.neg(f.one());
    y.v[0] = y.w[0] = f.one();
    z.v[1] = z.w[1] = f.one();
    return {x, y, z};
}

struct G2Checks {
    std::size_t triple_kernel = 0;   ///< g2 on V7^3 at a generating triple
    std::size_t vector_kernel = 0;   ///< g2 on V7 at an anisotropic vector
    std::size_t scaled_kernel = 0;   ///< g2 + scaling on V7 at the same vector
    std::size_t resamples = 0;
};

/// Kernel dimensions of the three G2 actions, minimised over `trials`
/// random points. Points that are isotropic or fail to generate are redrawn.
template <Field F>
G2Checks g2_stabilizer_checks(const std::vector<Matrix<F>>& derivs, std::size_t trials, RandomSource& rng) {
    if (trials == 0) throw std::invalid_argument("g2_stabilizer_checks needs at least one trial");
    const F& f = derivs.front().field();
    std::vector<Matrix<F>> on_v7;
    for (const auto& d : derivs) on_v7.push_back(restrict_to_trace_zero(d));
    auto scaled = on_v7;
    scaled.push_back(Matrix<F>::identity(f, 7));
    auto on_three = power(LieRepresentation<F>{7, {}, on_v7, RepName::external("V7"), 7}, 3).matrices;

    G2Checks out{derivs.size(), derivs.size(), derivs.size() + 1, 0};
    constexpr std::size_t kMaxResamples = 64;
    for (std::size_t t = 0; t < trials; ++t) {
        Vector<F> x;
        while (true) {
            x = random_point(f, 7, rng);
            if (!f.is_zero(oct_norm(f, from_trace_zero(f, x)))) break;
            if (++out.resamples > kMaxResamples) throw GenericityUncertain("no anisotropic vector found");
        }
        out.vector_kernel = std::min(out.vector_kernel, stabilizer(on_v7, x).dimension);
        out.scaled_kernel = std::min(out.scaled_kernel, stabilizer(scaled, x).dimension);

        Vector<F> triple;
        while (true) {
            triple = random_point(f, 21, rng);
            std::vector<Octonion<F>> gens;
            for (int k = 0; k < 3; ++k)
                gens.push_back(from_trace_zero(f, Vector<F>(triple.begin() + 7 * k, triple.begin() + 7 * k + 7)));
            if (subalgebra_generated(f, gens) == 8) break;
            if (++out.resamples > kMaxResamples) throw GenericityUncertain("no generating triple found");
        }
        out.triple_kernel = std::min(out.triple_kernel, stabilizer(on_three, triple).dimension);
    }
    return out;
}

}  // namespace noether

#endif  // NOETHER_OCTONION_HPP
