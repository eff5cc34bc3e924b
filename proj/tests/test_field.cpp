#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starsylv/field.hpp"
#include "starsylv/rng.hpp"

using namespace starsylv;

namespace {

Scalar q(long num, long den = 1) {
    mpq_class v(num, den);
    v.canonicalize();
    return Scalar::rational(v);
}

Scalar qi(long re_num, long re_den, long im_num, long im_den) {
    mpq_class re(re_num, re_den), im(im_num, im_den);
    re.canonicalize();
    im.canonicalize();
    return Scalar::gaussian(re, im);
}

Scalar random_scalar(SplitMix64& rng, const FieldTag& tag) {
    switch (tag.kind()) {
        case FieldKind::PrimeField:
            return Scalar::residue(tag, mpz_class(static_cast<unsigned long>(rng.next_below(tag.modulus()))));
        case FieldKind::Rationals: {
            mpq_class v(static_cast<long>(rng.next_in(-20, 20)), static_cast<long>(rng.next_in(1, 12)));
            v.canonicalize();
            return Scalar::rational(v);
        }
        case FieldKind::GaussianRationals: {
            mpq_class re(static_cast<long>(rng.next_in(-20, 20)), static_cast<long>(rng.next_in(1, 12)));
            mpq_class im(static_cast<long>(rng.next_in(-20, 20)), static_cast<long>(rng.next_in(1, 12)));
            re.canonicalize();
            im.canonicalize();
            return Scalar::gaussian(re, im);
        }
    }
    throw Error("unreachable");
}

}  // namespace

TEST_CASE("tag construction and the char-2 gate") {
    CHECK(FieldTag::rationals() == FieldTag::rationals());
    CHECK(FieldTag::rationals() != FieldTag::gaussian_rationals());
    CHECK(FieldTag::prime_field(5).modulus() == 5);
    CHECK(FieldTag::prime_field(3) != FieldTag::prime_field(5));
    CHECK_THROWS_AS(FieldTag::prime_field(2), Char2Rejected);
    CHECK_THROWS_AS(FieldTag::prime_field(9), Error);
    CHECK_THROWS_AS(FieldTag::prime_field(1), Error);
    CHECK(FieldTag::prime_field_probe(2).characteristic_two());
    CHECK_THROWS_AS(FieldTag::prime_field_probe(4), Error);
    CHECK(FieldTag::prime_field(5).name() == "GF(5)");
}

TEST_CASE("primality helper") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(97));
    CHECK(is_prime_u64(1000000007ULL));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(91));  // 7 * 13
    CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("exact fraction addition: 1/2 + 1/3 = 5/6") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
}

TEST_CASE("GF(5): 2 * 3 = 1") {
    FieldTag gf5 = FieldTag::prime_field(5);
    CHECK(Scalar::from_int(gf5, 2) * Scalar::from_int(gf5, 3) == Scalar::one(gf5));
}

TEST_CASE("QI: (1+i)(1-i) = 2") {
    CHECK(qi(1, 1, 1, 1) * qi(1, 1, -1, 1) == qi(2, 1, 0, 1));
}

TEST_CASE("conj fixtures") {
    CHECK(q(3, 4).conj() == q(3, 4));
    CHECK(qi(2, 1, -5, 1).conj() == qi(2, 1, 5, 1));
    FieldTag gf7 = FieldTag::prime_field(7);
    CHECK(Scalar::from_int(gf7, 4).conj() == Scalar::from_int(gf7, 4));
}

TEST_CASE("division and errors") {
    CHECK(q(3, 4) / q(3, 2) == q(1, 2));
    CHECK_THROWS_AS(q(1) / q(0), DivisionByZero);
    CHECK_THROWS_AS(q(0).inverse(), DivisionByZero);
    FieldTag gf5 = FieldTag::prime_field(5);
    CHECK(Scalar::from_int(gf5, 3).inverse() == Scalar::from_int(gf5, 2));
    CHECK(qi(0, 1, 1, 1).inverse() == qi(0, 1, -1, 1));  // 1/i = -i
    CHECK_THROWS_AS(q(1) + Scalar::from_int(gf5, 1), FieldMismatch);
    CHECK_THROWS_AS(q(1) == Scalar::from_int(gf5, 1), FieldMismatch);
}

TEST_CASE("field axioms on random triples, exact equality") {
    std::vector<FieldTag> tags = {FieldTag::rationals(), FieldTag::gaussian_rationals(),
                                  FieldTag::prime_field(7), FieldTag::prime_field_probe(2)};
    for (const FieldTag& tag : tags) {
        SplitMix64 rng(42);
        for (int trial = 0; trial < 200; ++trial) {
            Scalar a = random_scalar(rng, tag);
            Scalar b = random_scalar(rng, tag);
            Scalar c = random_scalar(rng, tag);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(tag));
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(tag));
        }
    }
}

TEST_CASE("conj is an automorphism and an involution") {
    SplitMix64 rng(7);
    FieldTag tag = FieldTag::gaussian_rationals();
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(rng, tag);
        Scalar b = random_scalar(rng, tag);
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("literal grammar: parse of every emitted form is the identity") {
    std::vector<FieldTag> tags = {FieldTag::rationals(), FieldTag::gaussian_rationals(),
                                  FieldTag::prime_field(11)};
    for (const FieldTag& tag : tags) {
        SplitMix64 rng(99);
        for (int trial = 0; trial < 300; ++trial) {
            Scalar a = random_scalar(rng, tag);
            CHECK(Scalar::parse(tag, a.to_string()) == a);
        }
    }
}

TEST_CASE("literal grammar: explicit forms") {
    FieldTag qt = FieldTag::rationals();
    FieldTag gt = FieldTag::gaussian_rationals();
    FieldTag gf7 = FieldTag::prime_field(7);

    CHECK(Scalar::parse(qt, "-12") == q(-12));
    CHECK(Scalar::parse(qt, "3/4") == q(3, 4));
    CHECK(Scalar::parse(qt, "-6/8") == q(-3, 4));
    CHECK(Scalar::parse(gt, "i") == qi(0, 1, 1, 1));
    CHECK(Scalar::parse(gt, "-i") == qi(0, 1, -1, 1));
    CHECK(Scalar::parse(gt, "2-5i") == qi(2, 1, -5, 1));
    CHECK(Scalar::parse(gt, "1/2+3/4i") == qi(1, 2, 3, 4));
    CHECK(Scalar::parse(gt, "-3i") == qi(0, 1, -3, 1));
    CHECK(Scalar::parse(gt, "7") == qi(7, 1, 0, 1));
    CHECK(Scalar::parse(gf7, "-1") == Scalar::from_int(gf7, 6));
    CHECK(Scalar::parse(gf7, "23") == Scalar::from_int(gf7, 2));

    CHECK(qi(0, 1, 1, 1).to_string() == "i");
    CHECK(qi(0, 1, -1, 1).to_string() == "-i");
    CHECK(qi(2, 1, -5, 1).to_string() == "2-5i");
    CHECK(qi(1, 2, 3, 4).to_string() == "1/2+3/4i");
    CHECK(q(-3, 4).to_string() == "-3/4");

    CHECK_THROWS_AS(Scalar::parse(qt, "3/0"), Error);
    CHECK_THROWS_AS(Scalar::parse(qt, "abc"), Error);
    CHECK_THROWS_AS(Scalar::parse(qt, ""), Error);
    CHECK_THROWS_AS(Scalar::parse(qt, "1.5"), Error);
    CHECK_THROWS_AS(Scalar::parse(gf7, "i"), Error);
    CHECK_THROWS_AS(Scalar::parse(gt, "3+4"), Error);
}

TEST_CASE("canonical residues and fractions") {
    FieldTag gf7 = FieldTag::prime_field(7);
    CHECK(Scalar::residue(gf7, mpz_class(-1)).residue_value() == 6);
    CHECK(Scalar::residue(gf7, mpz_class(14)).residue_value() == 0);
    Scalar s = q(6, 8);
    CHECK(s.re().get_num() == 3);
    CHECK(s.re().get_den() == 4);
}
