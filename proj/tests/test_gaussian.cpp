#include <doctest.h>

#include <random>
#include <vector>

#include "machin/gaussian.hpp"

using machin::AtanTerm;
using machin::BigInt;
using machin::GaussianRational;
using machin::Rational;

TEST_CASE("gaussian multiplication") {
    GaussianRational i1(Rational(1), Rational(1));
    CHECK(i1 * i1 == GaussianRational(Rational(0), Rational(2)));

    // (1 + i/2)(1 + i/3): direct expansion, encodes Euler's identity
    // since re = im > 0.
    GaussianRational a(Rational(1), Rational(1, 2));
    GaussianRational b(Rational(1), Rational(1, 3));
    GaussianRational p = a * b;
    CHECK(p.re() == Rational(1) - Rational(1, 2) * Rational(1, 3));
    CHECK(p.im() == Rational(1, 2) + Rational(1, 3));
    CHECK(p == GaussianRational(Rational(5, 6), Rational(5, 6)));

    CHECK(a * GaussianRational::one() == a);
}

TEST_CASE("gaussian power matches repeated multiplication") {
    GaussianRational z(Rational(1), Rational(1, 5));
    GaussianRational folded = GaussianRational::one();
    for (int i = 0; i < 4; ++i) folded = folded * z;
    CHECK(machin::gaussian_pow(z, 4) == folded);
    CHECK(machin::gaussian_pow(z, 4) ==
          GaussianRational(Rational(476, 625), Rational(480, 625)));
}

TEST_CASE("gaussian power edge exponents") {
    GaussianRational z(Rational(3, 7), Rational(-2, 5));
    CHECK(machin::gaussian_pow(z, 0) == GaussianRational::one());

    GaussianRational i1(Rational(1), Rational(1));
    CHECK(machin::gaussian_pow(i1, -1) ==
          GaussianRational(Rational(1, 2), Rational(-1, 2)));

    CHECK_THROWS_AS(machin::gaussian_pow(GaussianRational(), 0),
                    machin::DomainError);
    CHECK_THROWS_AS(machin::gaussian_pow(GaussianRational(), -2),
                    machin::DomainError);
}

TEST_CASE("gaussian power equals multiplication fold for |k| <= 16") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> num(1, 6), den(1, 5), expo(0, 16);
    for (int trial = 0; trial < 60; ++trial) {
        GaussianRational z(Rational(num(rng), den(rng)),
                           Rational(num(rng) - 3, den(rng)));
        long k = expo(rng);
        GaussianRational folded = GaussianRational::one();
        for (long i = 0; i < k; ++i) folded = folded * z;
        CHECK(machin::gaussian_pow(z, k) == folded);

        // Negative exponent: fold the independently computed inverse
        // conj(z)/|z|^2.
        Rational mod2 = z.re() * z.re() + z.im() * z.im();
        GaussianRational inv(z.re() / mod2, -z.im() / mod2);
        GaussianRational folded_inv = GaussianRational::one();
        for (long i = 0; i < k; ++i) folded_inv = folded_inv * inv;
        CHECK(machin::gaussian_pow(z, -k) == folded_inv);
    }
}

TEST_CASE("arg tangent") {
    GaussianRational z(Rational(5, 6), Rational(5, 6));
    CHECK(z.arg_tangent() == Rational(1));
    GaussianRational pole(Rational(0), Rational(2));
    CHECK_THROWS_AS(pole.arg_tangent(), machin::PoleError);
}

TEST_CASE("tan combination reproduces classic identities") {
    std::vector<AtanTerm> machin{{BigInt(4), Rational(1, 5)},
                                 {BigInt(-1), Rational(1, 239)}};
    CHECK(machin::tan_combination(machin) == Rational(1));

    std::vector<AtanTerm> euler{{BigInt(1), Rational(1, 2)},
                                {BigInt(1), Rational(1, 3)}};
    CHECK(machin::tan_combination(euler) == Rational(1));
}

TEST_CASE("tan combination self-cancellation and errors") {
    for (Rational u : {Rational(1, 2), Rational(3, 79), Rational(24478, 873121)}) {
        std::vector<AtanTerm> cancel{{BigInt(1), u}, {BigInt(-1), u}};
        CHECK(machin::tan_combination(cancel) == Rational(0));
    }

    // 2*atan(1) = pi/2: pole.
    std::vector<AtanTerm> pole{{BigInt(2), Rational(1)}};
    CHECK_THROWS_AS(machin::tan_combination(pole), machin::PoleError);

    std::vector<AtanTerm> bad{{BigInt(1), Rational(-1, 2)}};
    CHECK_THROWS_AS(machin::tan_combination(bad), machin::DomainError);
}

TEST_CASE("tangent of doubled angle round-trips through subtraction") {
    // tan(2 arctan u) combined with arctan x - arctan y = arctan((x-y)/(1+xy))
    // must land back on u.
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(1, 30), den(31, 90);
    for (int trial = 0; trial < 100; ++trial) {
        Rational u(num(rng), den(rng));  // in (0, 1)
        std::vector<AtanTerm> twice{{BigInt(2), u}};
        Rational t = machin::tan_combination(twice);
        Rational back = (t - u) / (Rational(1) + t * u);
        CHECK(back == u);
    }
}
