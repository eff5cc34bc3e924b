#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "starsylv/errors.hpp"

namespace starsylv {

// Deterministic Miller-Rabin, valid for the full uint64 range.
bool is_prime_u64(std::uint64_t n);

enum class FieldKind { Rationals, GaussianRationals, PrimeField };

// Identifies the scalar field. Two scalars may be combined only when their
// tags compare equal. GF(2) violates the char != 2 hypothesis the library is
// built around, so its tag can only be created through the probe factory.
class FieldTag {
public:
    static FieldTag rationals() { return FieldTag(FieldKind::Rationals, 0); }
    static FieldTag gaussian_rationals() { return FieldTag(FieldKind::GaussianRationals, 0); }

    // Requires an odd prime p >= 3.
    static FieldTag prime_field(std::uint64_t p);

    // Same as prime_field but additionally admits p = 2. Exists only for the
    // char-2 probe; nothing else may construct a GF(2) tag.
    static FieldTag prime_field_probe(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }

    bool has_conjugation() const { return kind_ == FieldKind::GaussianRationals; }
    bool characteristic_two() const { return kind_ == FieldKind::PrimeField && modulus_ == 2; }

    // "Q", "QI" or "GF(p)".
    std::string name() const;

    friend bool operator==(const FieldTag& a, const FieldTag& b) {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const FieldTag& a, const FieldTag& b) { return !(a == b); }

private:
    FieldTag(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}
    FieldKind kind_;
    std::uint64_t modulus_;
};

// One exact field element. Representations are canonical so that structural
// equality is field equality:
//   Rationals          reduced fraction, positive denominator (mpq canonical)
//   GaussianRationals  pair of reduced fractions (re, im), meaning re + im*i
//   PrimeField         residue in [0, p)
class Scalar {
public:
    static Scalar zero(const FieldTag& tag);
    static Scalar one(const FieldTag& tag);
    static Scalar from_int(const FieldTag& tag, long value);

    // Injects an exact rational into Q (tag Rationals).
    static Scalar rational(mpq_class value);
    // re + im*i over QI.
    static Scalar gaussian(mpq_class re, mpq_class im);
    // Integer reduced mod p.
    static Scalar residue(const FieldTag& tag, const mpz_class& value);

    const FieldTag& tag() const { return tag_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;

    // The involution underlying the star operator: identity on Q and GF(p),
    // a + bi -> a - bi on QI. An automorphism of order two.
    Scalar conj() const;

    // Multiplicative inverse; throws DivisionByZero on zero.
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { lhs += rhs; return lhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { lhs -= rhs; return lhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { lhs *= rhs; return lhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { lhs /= rhs; return lhs; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Representation accessors; re()/im() are valid on Q and QI (im is zero
    // on Q), residue_value() only on GF(p).
    const mpq_class& re() const;
    const mpq_class& im() const;
    std::uint64_t residue_value() const;

    // Scalar literal grammar shared by every file format:
    //   integer   -12
    //   fraction  3/4
    //   Gaussian  a, bi, i, -i, a+bi, a-bi   (a, b integers or fractions)
    // GF(p) literals are integers, reduced mod p on input.
    std::string to_string() const;
    static Scalar parse(const FieldTag& tag, std::string_view text);

private:
    struct Exact {
        mpq_class re;
        mpq_class im;
    };
    Scalar(const FieldTag& tag, Exact v) : tag_(tag), v_(std::move(v)) {}
    Scalar(const FieldTag& tag, std::uint64_t r) : tag_(tag), v_(r) {}

    const Exact& exact() const { return std::get<Exact>(v_); }
    Exact& exact() { return std::get<Exact>(v_); }
    std::uint64_t res() const { return std::get<std::uint64_t>(v_); }

    FieldTag tag_;
    std::variant<Exact, std::uint64_t> v_;
};

}  // namespace starsylv
