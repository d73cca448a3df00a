#include "machin/cf_engine.hpp"

#include <array>

#include "machin/identity.hpp"

namespace machin {

namespace {

void check_seed_shape(const Seed& seed) {
    if (!(seed.u0 > seed.u1 && seed.u1.sign() > 0)) {
        throw SeedInvalid("seed requires u0 > u1 > 0");
    }
    if (seed.a0 == 0 || seed.a1 == 0) {
        throw SeedInvalid("seed coefficients must be nonzero");
    }
}

void verify_seed(const Seed& seed) {
    check_seed_shape(seed);
    std::vector<AtanTerm> terms{{seed.a0, seed.u0}, {seed.a1, seed.u1}};
    VerifyResult r = verify(MachinIdentity(std::move(terms)));
    if (r.verdict == Verdict::Fails) {
        throw SeedInvalid("seed identity does not sum to pi/4: " + r.diagnostic);
    }
    if (r.verdict == Verdict::Inconclusive) {
        throw PrecisionExhausted("seed verification inconclusive at precision budget");
    }
}

}  // namespace

RefinementStream::RefinementStream(Seed seed, StepStrategy strategy)
    : seed_(std::move(seed)), strategy_(strategy) {
    verify_seed(seed_);
    init_state();
}

RefinementStream::RefinementStream(Seed seed, StepStrategy strategy, unverified_tag)
    : seed_(std::move(seed)), strategy_(strategy) {
    check_seed_shape(seed_);
    init_state();
}

RefinementStream RefinementStream::unverified_for_tests(Seed seed,
                                                        StepStrategy strategy) {
    return RefinementStream(std::move(seed), strategy, unverified_tag{});
}

void RefinementStream::init_state() {
    u_ = seed_.u0;
    v_ = seed_.u1;
    a_ = seed_.a0;
    a_prev_ = seed_.a1;
    n_m2_ = 0;
    n_m1_ = 1;
    d_m2_ = 1;
    d_m1_ = 0;
    fib_prev_ = 0;
    fib_ = 1;
}

RefinementRecord RefinementStream::next() {
    StepResult s = step(u_, v_, strategy_);
    BigInt n_conv = s.q * n_m1_ + n_m2_;
    BigInt d_conv = s.q * d_m1_ + d_m2_;
    RefinementRecord rec{n_, s.q, u_, v_, a_, a_prev_, n_conv, d_conv, fib_};

    BigInt a_next = s.q * a_ + a_prev_;
    a_prev_ = std::move(a_);
    a_ = std::move(a_next);
    u_ = std::move(v_);
    v_ = std::move(s.w);
    n_m2_ = std::move(n_m1_);
    n_m1_ = n_conv;
    d_m2_ = std::move(d_m1_);
    d_m1_ = d_conv;
    BigInt f = fib_prev_ + fib_;
    fib_prev_ = std::move(fib_);
    fib_ = std::move(f);
    ++n_;
    return rec;
}

std::vector<RefinementRecord> refine_stream(const Seed& seed, long depth,
                                            StepStrategy strategy) {
    if (depth < 1) throw DomainError("refine_stream requires depth >= 1");
    RefinementStream stream(seed, strategy);
    std::vector<RefinementRecord> out;
    out.reserve(static_cast<std::size_t>(depth));
    for (long i = 0; i < depth; ++i) out.push_back(stream.next());
    return out;
}

BigInt fibonacci(long n) {
    if (n < 0) throw DomainError("fibonacci requires n >= 0");
    BigInt a = 0, b = 1;
    for (long i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return a;
}

BigInt coefficient_closed_form(const Seed& seed, const BigInt& n_conv,
                               const BigInt& d_conv) {
    return seed.a0 * n_conv + seed.a1 * d_conv;
}

BigInt coefficient_closed_form(const Seed& seed, const RefinementRecord& record) {
    return coefficient_closed_form(seed, record.N, record.D);
}

bool argument_closed_form_check(const Seed& seed, const RefinementRecord& record,
                                std::string* diagnostic) {
    if (record.n < 2) {
        throw DomainError("argument closed form check requires n >= 2");
    }
    // Convergents two steps back, re-derived from the seed.
    std::vector<RefinementRecord> prefix = refine_stream(seed, record.n - 1);
    const BigInt& n_back = prefix.back().N;
    const BigInt& d_back = prefix.back().D;

    Rational expected = record.n % 2 == 0 ? record.u_n : -record.u_n;
    std::array<AtanTerm, 2> terms{AtanTerm{d_back, seed.u0},
                                  AtanTerm{-n_back, seed.u1}};
    Rational tan_value;
    try {
        tan_value = tan_combination(terms);
    } catch (const PoleError& e) {
        if (diagnostic) *diagnostic = std::string("tangent pole: ") + e.what();
        return false;
    }
    if (tan_value != expected) {
        if (diagnostic) {
            *diagnostic = "tangent mismatch: got " + tan_value.to_string() +
                          ", expected " + expected.to_string();
        }
        return false;
    }

    // Branch pin: enclose both sides to combined width < 1 (< pi);
    // equal tangents whose angles differ would differ by >= pi.
    Rational eps1(1, 16 * (::abs(d_back) + 1));
    Rational eps2(1, 16 * (::abs(n_back) + 1));
    Interval lhs = d_back * arctan_enclosure_any(seed.u0, eps1) -
                   n_back * arctan_enclosure_any(seed.u1, eps2);
    Interval rhs = arctan_enclosure_any(record.u_n, Rational(1, 8));
    if (record.n % 2 == 1) rhs = -rhs;
    if (!lhs.intersects(rhs)) {
        if (diagnostic) *diagnostic = "branch check failed: enclosures disjoint";
        return false;
    }
    return true;
}

namespace {

long starting_digits(const BigInt& d) {
    return decimal_digits(d * d) + 10;
}

}  // namespace

Verdict convergent_error_bound_check(const Seed& seed,
                                     std::span<const RefinementRecord> records,
                                     std::size_t idx,
                                     const PrecisionBudget& budget) {
    if (idx + 1 >= records.size()) {
        throw DomainError("convergent bound check needs the successor record");
    }
    const RefinementRecord& rec = records[idx];
    const BigInt& d_next = records[idx + 1].D;
    Rational center(rec.N, rec.D);
    Rational bound(BigInt(1), rec.D * d_next);
    Interval target(center - bound, center + bound);

    for (long digits = starting_digits(d_next); digits <= budget.max_digits;
         digits *= 2) {
        Rational eps = pow10(-digits);
        Interval a0 = arctan_enclosure_any(seed.u0, eps);
        Interval a1 = arctan_enclosure_any(seed.u1, eps);
        if (a1.lo().sign() <= 0) continue;  // not yet separated from zero
        Interval alpha = a0 / a1;
        if (target.contains(alpha)) return Verdict::Holds;
        if (!target.intersects(alpha)) return Verdict::Fails;
    }
    return Verdict::Inconclusive;
}

Verdict argument_decay_bound_check(const Seed& seed,
                                   std::span<const RefinementRecord> records,
                                   std::size_t idx,
                                   const PrecisionBudget& budget) {
    if (idx < 1 || idx >= records.size()) {
        throw DomainError("argument decay check requires idx >= 1");
    }
    const RefinementRecord& rec = records[idx];
    const BigInt& d_prev = records[idx - 1].D;
    Rational scale(BigInt(1), d_prev);

    for (long digits = starting_digits(rec.D); digits <= budget.max_digits;
         digits *= 2) {
        Rational eps = pow10(-digits);
        Interval lhs = arctan_enclosure_any(rec.u_n, eps);
        Interval rhs = scale * arctan_enclosure_any(seed.u1, eps);
        if (lhs.hi() <= rhs.lo()) return Verdict::Holds;
        if (lhs.lo() > rhs.hi()) return Verdict::Fails;
    }
    return Verdict::Inconclusive;
}

}  // namespace machin
