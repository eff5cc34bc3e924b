#include "starsylv/field.hpp"

#include <utility>

namespace starsylv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 base, u64 exp, u64 p) {
    u64 acc = 1 % p;
    while (exp != 0) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

// Extended Euclid on the residue and the modulus; p prime, 0 < a < p.
u64 invmod(u64 a, u64 p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<u64>(t);
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic below 2^64 (Sorenson & Webster).
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldTag FieldTag::prime_field(u64 p) {
    if (p == 2) throw Char2Rejected("GF(2) requires the char-2 probe flag");
    if (!is_prime_u64(p)) throw Error("PrimeField modulus " + std::to_string(p) + " is not prime");
    return FieldTag(FieldKind::PrimeField, p);
}

FieldTag FieldTag::prime_field_probe(u64 p) {
    if (!is_prime_u64(p)) throw Error("PrimeField modulus " + std::to_string(p) + " is not prime");
    return FieldTag(FieldKind::PrimeField, p);
}

std::string FieldTag::name() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::GaussianRationals: return "QI";
        case FieldKind::PrimeField: return "GF(" + std::to_string(modulus_) + ")";
    }
    return "?";
}

namespace {

void require_same_tag(const Scalar& a, const Scalar& b) {
    if (a.tag() != b.tag())
        throw FieldMismatch("scalar operation across fields " + a.tag().name() + " and " + b.tag().name());
}

mpq_class canonical(mpq_class q) {
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::zero(const FieldTag& tag) { return from_int(tag, 0); }

Scalar Scalar::one(const FieldTag& tag) { return from_int(tag, 1); }

Scalar Scalar::from_int(const FieldTag& tag, long value) {
    if (tag.kind() == FieldKind::PrimeField) return residue(tag, mpz_class(value));
    return Scalar(tag, Exact{mpq_class(value), mpq_class(0)});
}

Scalar Scalar::rational(mpq_class value) {
    return Scalar(FieldTag::rationals(), Exact{canonical(std::move(value)), mpq_class(0)});
}

Scalar Scalar::gaussian(mpq_class re, mpq_class im) {
    return Scalar(FieldTag::gaussian_rationals(), Exact{canonical(std::move(re)), canonical(std::move(im))});
}

Scalar Scalar::residue(const FieldTag& tag, const mpz_class& value) {
    if (tag.kind() != FieldKind::PrimeField) throw FieldMismatch("residue requires a GF(p) tag");
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), mpz_class(tag.modulus()).get_mpz_t());
    return Scalar(tag, static_cast<u64>(r.get_ui()));
}

bool Scalar::is_zero() const {
    if (tag_.kind() == FieldKind::PrimeField) return res() == 0;
    const Exact& e = exact();
    return sgn(e.re) == 0 && sgn(e.im) == 0;
}

bool Scalar::is_one() const {
    if (tag_.kind() == FieldKind::PrimeField) return res() == 1;
    const Exact& e = exact();
    return e.re == 1 && sgn(e.im) == 0;
}

Scalar Scalar::operator-() const {
    if (tag_.kind() == FieldKind::PrimeField) {
        u64 r = res();
        return Scalar(tag_, r == 0 ? 0 : tag_.modulus() - r);
    }
    const Exact& e = exact();
    return Scalar(tag_, Exact{-e.re, -e.im});
}

Scalar Scalar::conj() const {
    if (tag_.kind() != FieldKind::GaussianRationals) return *this;
    const Exact& e = exact();
    return Scalar(tag_, Exact{e.re, -e.im});
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + tag_.name());
    switch (tag_.kind()) {
        case FieldKind::Rationals:
            return Scalar(tag_, Exact{1 / exact().re, mpq_class(0)});
        case FieldKind::GaussianRationals: {
            const Exact& e = exact();
            mpq_class norm = e.re * e.re + e.im * e.im;
            return Scalar(tag_, Exact{e.re / norm, -e.im / norm});
        }
        case FieldKind::PrimeField:
            return Scalar(tag_, invmod(res(), tag_.modulus()));
    }
    throw Error("unreachable");
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_tag(*this, rhs);
    if (tag_.kind() == FieldKind::PrimeField) {
        u64 p = tag_.modulus();
        v_ = static_cast<u64>((u128(res()) + rhs.res()) % p);
        return *this;
    }
    Exact& e = exact();
    e.re += rhs.exact().re;
    e.im += rhs.exact().im;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_tag(*this, rhs);
    if (tag_.kind() == FieldKind::PrimeField) {
        u64 p = tag_.modulus(), a = res(), b = rhs.res();
        v_ = a >= b ? a - b : a + (p - b);
        return *this;
    }
    Exact& e = exact();
    e.re -= rhs.exact().re;
    e.im -= rhs.exact().im;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_tag(*this, rhs);
    switch (tag_.kind()) {
        case FieldKind::PrimeField:
            v_ = mulmod(res(), rhs.res(), tag_.modulus());
            break;
        case FieldKind::Rationals:
            exact().re *= rhs.exact().re;
            break;
        case FieldKind::GaussianRationals: {
            const Exact& a = exact();
            const Exact& b = rhs.exact();
            Exact out{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
            v_ = std::move(out);
            break;
        }
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_tag(*this, rhs);
    if (rhs.is_zero()) throw DivisionByZero("division by zero in " + tag_.name());
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_tag(a, b);
    if (a.tag_.kind() == FieldKind::PrimeField) return a.res() == b.res();
    return a.exact().re == b.exact().re && a.exact().im == b.exact().im;
}

const mpq_class& Scalar::re() const { return exact().re; }

const mpq_class& Scalar::im() const { return exact().im; }

std::uint64_t Scalar::residue_value() const { return res(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// INT or INT/UINT with optional leading minus; positive denominator enforced
// by the grammar itself.
mpq_class parse_fraction(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) throw Error("malformed number '" + std::string(text) + "'");
    mpz_class den_z{std::string(den)};
    if (sgn(den_z) == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    mpq_class q(mpz_class{std::string(num)}, den_z);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

// "", "-" and "3/4"-style magnitudes in front of the trailing i.
mpq_class parse_imag_magnitude(std::string_view body) {
    if (body.empty()) return mpq_class(1);
    if (body == "-") return mpq_class(-1);
    return parse_fraction(body);
}

std::string fraction_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string Scalar::to_string() const {
    if (tag_.kind() == FieldKind::PrimeField) return std::to_string(res());
    const Exact& e = exact();
    if (tag_.kind() == FieldKind::Rationals) return fraction_str(e.re);
    if (sgn(e.im) == 0) return fraction_str(e.re);
    std::string imag;
    mpq_class mag = abs(e.im);
    if (mag != 1) imag = fraction_str(mag);
    imag += 'i';
    if (sgn(e.re) == 0) return (sgn(e.im) < 0 ? "-" : "") + imag;
    return fraction_str(e.re) + (sgn(e.im) < 0 ? "-" : "+") + imag;
}

Scalar Scalar::parse(const FieldTag& tag, std::string_view text) {
    if (text.empty()) throw Error("empty scalar literal");
    switch (tag.kind()) {
        case FieldKind::PrimeField: {
            std::string_view body = text;
            if (body.front() == '-') body.remove_prefix(1);
            if (!all_digits(body)) throw Error("malformed GF literal '" + std::string(text) + "'");
            return residue(tag, mpz_class(std::string(text)));
        }
        case FieldKind::Rationals:
            return Scalar(tag, Exact{parse_fraction(text), mpq_class(0)});
        case FieldKind::GaussianRationals: {
            // A sign past position 0 separates the real and imaginary terms;
            // numerals never contain an interior sign.
            std::size_t split = std::string_view::npos;
            for (std::size_t pos = 1; pos < text.size(); ++pos) {
                if (text[pos] == '+' || text[pos] == '-') {
                    split = pos;
                    break;
                }
            }
            if (split != std::string_view::npos) {
                std::string_view imag = text.substr(split);
                if (imag.back() != 'i')
                    throw Error("malformed Gaussian literal '" + std::string(text) + "'");
                bool neg = imag.front() == '-';
                mpq_class mag = parse_imag_magnitude(imag.substr(1, imag.size() - 2));
                return Scalar(tag, Exact{parse_fraction(text.substr(0, split)), neg ? mpq_class(-mag) : mag});
            }
            if (text.back() == 'i') {
                bool neg = text.front() == '-';
                std::string_view body = text.substr(0, text.size() - 1);
                if (neg) body.remove_prefix(1);
                mpq_class mag = parse_imag_magnitude(body);
                return Scalar(tag, Exact{mpq_class(0), neg ? mpq_class(-mag) : mag});
            }
            return Scalar(tag, Exact{parse_fraction(text), mpq_class(0)});
        }
    }
    throw Error("unreachable");
}

}  // namespace starsylv
