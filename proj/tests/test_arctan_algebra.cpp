#include <doctest.h>

#include <random>
#include <vector>

#include "machin/arctan_algebra.hpp"

using machin::BigInt;
using machin::Rational;
using machin::StepResult;
using machin::StepStrategy;

TEST_CASE("arctan subtraction formula") {
    CHECK(machin::arctan_sub(Rational(1, 2), Rational(1, 3)) == Rational(1, 7));
    CHECK(machin::arctan_sub(Rational(2, 11), Rational(1, 7)) == Rational(3, 79));
    for (Rational x : {Rational(1, 2), Rational(3, 79)}) {
        CHECK(machin::arctan_sub(x, x) == Rational(0));
    }
    CHECK_THROWS_AS(machin::arctan_sub(Rational(1, 3), Rational(1, 2)),
                    machin::DomainError);
    CHECK_THROWS_AS(machin::arctan_sub(Rational(1, 2), Rational(-1, 3)),
                    machin::DomainError);
}

TEST_CASE("arctan addition formula") {
    CHECK(machin::arctan_add(Rational(1, 2), Rational(1, 3)) == Rational(1));
    CHECK(machin::arctan_add(Rational(3, 79), Rational(0)) == Rational(3, 79));
    // (1/3 + 1/7)/(1 - 1/21) = (10/21)/(20/21)
    CHECK(machin::arctan_add(Rational(1, 3), Rational(1, 7)) == Rational(1, 2));

    CHECK_THROWS_AS(machin::arctan_add(Rational(2), Rational(1, 2)),
                    machin::RangeError);
    CHECK_THROWS_AS(machin::arctan_add(Rational(3), Rational(2)),
                    machin::RangeError);
    CHECK_THROWS_AS(machin::arctan_add(Rational(-1, 2), Rational(1, 3)),
                    machin::DomainError);
}

TEST_CASE("refinement step on the Euler chain") {
    for (StepStrategy s : {StepStrategy::Linear, StepStrategy::Doubling}) {
        StepResult r0 = machin::step(Rational(1, 2), Rational(1, 3), s);
        CHECK(r0.q == 1);
        CHECK(r0.w == Rational(1, 7));

        StepResult r1 = machin::step(Rational(1, 3), Rational(1, 7), s);
        CHECK(r1.q == 2);
        CHECK(r1.w == Rational(3, 79));

        StepResult r2 = machin::step(Rational(1, 7), Rational(3, 79), s);
        CHECK(r2.q == 3);
        CHECK(r2.w == Rational(24478, 873121));
    }
}

TEST_CASE("step output closes the loop exactly") {
    // tan(arctan u - q arctan v) must equal w.
    Rational u(1, 3), v(1, 7);
    StepResult r = machin::step(u, v);
    std::vector<machin::AtanTerm> loop{{BigInt(1), u}, {-r.q, v}};
    CHECK(machin::tan_combination(loop) == r.w);
    CHECK(r.w < v);
}

TEST_CASE("step preconditions and degenerate ratio") {
    CHECK_THROWS_AS(machin::step(Rational(1, 3), Rational(1, 2)),
                    machin::DomainError);
    CHECK_THROWS_AS(machin::step(Rational(1, 2), Rational(0)),
                    machin::DomainError);

    // arctan(3/4) = 2 arctan(1/3) exactly, so the remainder vanishes.
    CHECK_THROWS_AS(machin::step(Rational(3, 4), Rational(1, 3)),
                    machin::DegenerateRatio);
    CHECK_THROWS_AS(
        machin::step(Rational(3, 4), Rational(1, 3), StepStrategy::Linear),
        machin::DegenerateRatio);
}

TEST_CASE("strategies agree along the Euler chain") {
    Rational u(1, 2), v(1, 3);
    for (int n = 0; n < 9; ++n) {
        StepResult lin = machin::step(u, v, StepStrategy::Linear);
        StepResult dbl = machin::step(u, v, StepStrategy::Doubling);
        CHECK(lin.q == dbl.q);
        CHECK(lin.w == dbl.w);
        CHECK(dbl.w < v);
        CHECK(v < u);
        u = v;
        v = dbl.w;
    }
}

TEST_CASE("strategies agree on random states") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> num(1, 60), den(61, 240);
    int tested = 0;
    while (tested < 25) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        if (a == b) continue;
        Rational u = a > b ? a : b;
        Rational v = a > b ? b : a;
        ++tested;
        try {
            StepResult lin = machin::step(u, v, StepStrategy::Linear);
            StepResult dbl = machin::step(u, v, StepStrategy::Doubling);
            CHECK(lin.q == dbl.q);
            CHECK(lin.w == dbl.w);
        } catch (const machin::DegenerateRatio&) {
            CHECK_THROWS_AS(machin::step(u, v, StepStrategy::Doubling),
                            machin::DegenerateRatio);
        }
    }
}

TEST_CASE("doubling probes stay within the overshoot bound") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<long> num(1, 40), den(41, 400);
    for (int trial = 0; trial < 40; ++trial) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        if (a == b) continue;
        Rational u = a > b ? a : b;
        Rational v = a > b ? b : a;
        BigInt q_true;
        try {
            q_true = machin::step(u, v, StepStrategy::Linear).q;
        } catch (const machin::DegenerateRatio&) {
            continue;
        }
        std::vector<BigInt> probes;
        machin::step_with_probes(u, v, StepStrategy::Doubling, &probes);
        for (const BigInt& p : probes) {
            CHECK(p <= 2 * (q_true + 1));
        }
    }
}

TEST_CASE("seed step with u >= 1 falls back to linear") {
    // arctan(2) - arctan(1/3) = pi/4, a valid seed shape with u0 >= 1.
    Rational u(2), v(1, 3);
    StepResult lin = machin::step(u, v, StepStrategy::Linear);
    StepResult dbl = machin::step(u, v, StepStrategy::Doubling);
    CHECK(lin.q == dbl.q);
    CHECK(lin.w == dbl.w);
    std::vector<machin::AtanTerm> loop{{BigInt(1), u}, {-dbl.q, v}};
    CHECK(machin::tan_combination(loop) == dbl.w);
}
