#ifndef NOETHER_FIELD_HPP
#define NOETHER_FIELD_HPP

// Exact scalar fields: the rationals (GMP) and prime fields F_p with a
// runtime modulus. Every algorithm in the library is written against the
// Field concept below, so it runs unchanged over either field.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace noether {

class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InvalidField : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Runtime description of a field; the kind of value a config file or CLI
/// flag selects before a concrete Field type is instantiated.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::uint64_t prime = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime_field(std::uint64_t p) {
        FieldSpec s{Kind::PrimeField, p};
        s.validate();
        return s;
    }

    // Characteristic 2 and 3 are excluded throughout.
    void validate() const {
        if (kind == Kind::Rationals) return;
        if (prime < 5 || !is_prime(prime) || prime >= (1ull << 31))
            throw InvalidField("prime field modulus must be a prime in [5, 2^31), got " +
                               std::to_string(prime));
    }

    std::string to_string() const {
        return kind == Kind::Rationals ? std::string("Q") : "F_" + std::to_string(prime);
    }

    bool operator==(const FieldSpec&) const = default;
};

/// Field of rational numbers with arbitrary-precision numerator and denominator.
class Rationals {
public:
    using Element = mpq_class;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long v) const { return Element(v); }
    Element from_ratio(long num, long den) const {
        if (den == 0) throw ArithmeticError("division by zero");
        Element r(num, den);
        r.canonicalize();
        return r;
    }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const {
        if (sgn(a) == 0) throw ArithmeticError("division by zero");
        return 1 / a;
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    std::string to_string(const Element& a) const { return a.get_str(); }

    FieldSpec spec() const { return FieldSpec::rationals(); }
    bool operator==(const Rationals&) const { return true; }
};

/// Prime field F_p, p < 2^31, elements stored as canonical residues.
class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint64_t p) : p_(p) { FieldSpec::prime_field(p); }

    std::uint64_t prime() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long v) const {
        const long m = static_cast<long>(p_);
        long r = v % m;
        if (r < 0) r += m;
        return static_cast<Element>(r);
    }
    Element from_ratio(long num, long den) const { return div(from_int(num), from_int(den)); }

    Element add(Element a, Element b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Element>(s >= p_ ? s - p_ : s);
    }
    Element sub(Element a, Element b) const {
        return static_cast<Element>(a >= b ? a - b : a + p_ - b);
    }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((std::uint64_t(a) * b) % p_);
    }
    Element neg(Element a) const { return a == 0 ? 0 : static_cast<Element>(p_ - a); }
    Element inv(Element a) const {
        if (a == 0) throw ArithmeticError("division by zero in F_" + std::to_string(p_));
        // Extended Euclid on (a, p).
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Element>(t);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    bool is_zero(Element a) const { return a == 0; }
    bool equal(Element a, Element b) const { return a == b; }

    std::string to_string(Element a) const { return std::to_string(a); }

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::PrimeField, p_}; }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

template <class F>
concept Field = std::copyable<F> && requires(const F f, const typename F::Element a, long k) {
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.from_int(k) } -> std::convertible_to<typename F::Element>;
    { f.from_ratio(k, k) } -> std::convertible_to<typename F::Element>;
    { f.add(a, a) } -> std::convertible_to<typename F::Element>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
    { f.neg(a) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.equal(a, a) } -> std::same_as<bool>;
    { f.spec() } -> std::same_as<FieldSpec>;
};

/// Seeded scalar stream. Identical seed and field give an identical sequence.
/// Prime-field draws are uniform on {0, ..., p-1}; rational draws are
/// integers uniform on [-99, 99].
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return position_; }

    typename PrimeField::Element draw(const PrimeField& f) {
        ++position_;
        std::uniform_int_distribution<std::uint64_t> dist(0, f.prime() - 1);
        return static_cast<PrimeField::Element>(dist(engine_));
    }

    typename Rationals::Element draw(const Rationals&) {
        ++position_;
        std::uniform_int_distribution<long> dist(-99, 99);
        return mpq_class(dist(engine_));
    }

    /// Nonzero draw; used where a generic point must avoid an obvious zero.
    template <Field F>
    typename F::Element draw_nonzero(const F& f) {
        for (;;) {
            auto v = draw(f);
            if (!f.is_zero(v)) return v;
        }
    }

    std::uint64_t next_u64() {
        ++position_;
        return engine_();
    }

    /// Derived stream for an independent sub-computation (trial, suite).
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t seed_;
    std::uint64_t position_ = 0;
    std::mt19937_64 engine_;
};

}  // namespace noether

#endif  // NOETHER_FIELD_HPP
