#include "machin/enclosure.hpp"

#include <cstdlib>
#include <vector>

namespace machin {

PrecisionBudget PrecisionBudget::from_env() {
    PrecisionBudget b;
    if (const char* s = std::getenv("MACHIN_REFINE_MAX_PRECISION_BITS")) {
        char* end = nullptr;
        long bits = std::strtol(s, &end, 10);
        if (end != s && bits > 0) {
            // floor(bits * log10(2)), at least one digit
            long digits = bits * 30103 / 100000;
            b.max_digits = digits > 0 ? digits : 1;
        }
    }
    return b;
}

namespace {

// Number of series terms needed so the first omitted term
// x^(2m+1)/(2m+1) is <= eps; the enclosure width equals that term.
long terms_for_eps(const Rational& x, const Rational& eps) {
    if (x.is_zero()) return 1;
    Rational x2 = x * x;
    Rational power = x;  // x^(2k+1)
    long k = 0;
    while (Rational(power.num(), power.den() * (2 * k + 1)) > eps) {
        power *= x2;
        ++k;
    }
    return k + 1;  // sum terms 0..k-1; enclosure [P_{k-1}, P_k] has width t_k
}

}  // namespace

Interval arctan_interval_terms(const Rational& x, long terms) {
    if (x.sign() < 0 || x >= Rational(1)) {
        throw DomainError("arctan enclosure requires 0 <= x < 1");
    }
    if (terms < 1) throw DomainError("arctan enclosure requires terms >= 1");
    if (x.is_zero()) return Interval::point(Rational(0));

    Rational x2 = x * x;
    Rational power = x;
    Rational prev(0);   // P_{m-2}
    Rational sum(0);    // P_{m-1}
    for (long k = 0; k < terms; ++k) {
        prev = sum;
        Rational term(power.num(), power.den() * (2 * k + 1));
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
        power *= x2;
    }
    // The true value lies between any two consecutive partial sums.
    return sum <= prev ? Interval(sum, prev) : Interval(prev, sum);
}

ArctanSeries arctan_series(const Rational& x, const Rational& eps) {
    if (eps.sign() <= 0) throw DomainError("arctan enclosure requires eps > 0");
    if (x.sign() < 0 || x >= Rational(1)) {
        throw DomainError("arctan enclosure requires 0 <= x < 1");
    }
    long m = terms_for_eps(x, eps);
    return {arctan_interval_terms(x, m), m};
}

Interval arctan_interval(const Rational& x, const Rational& eps) {
    return arctan_series(x, eps).enclosure;
}

Interval pi_interval(const Rational& eps, std::span<const AtanTerm> terms) {
    if (eps.sign() <= 0) throw DomainError("pi enclosure requires eps > 0");
    if (terms.empty()) throw DomainError("pi enclosure requires identity terms");
    Rational per_term = eps / Rational(4 * static_cast<long>(terms.size()));
    Interval sum = Interval::point(Rational(0));
    for (const AtanTerm& t : terms) {
        Rational slice(per_term.num(), per_term.den() * ::abs(t.coef));
        sum = sum + t.coef * arctan_interval(t.arg, slice);
    }
    return Rational(4) * sum;
}

namespace {

// Euler's arctan(1/2) + arctan(1/3) = pi/4, checked once at first use.
// Both angles are below pi/4 (arguments < 1), so their sum lies in
// (0, pi/2) where tan is injective; the exact tangent value 1 then
// pins the sum to pi/4 with no reference to pi.
const std::span<const AtanTerm> euler_identity() {
    static const std::vector<AtanTerm> terms = [] {
        std::vector<AtanTerm> t;
        t.push_back({BigInt(1), Rational(1, 2)});
        t.push_back({BigInt(1), Rational(1, 3)});
        if (tan_combination(t) != Rational(1)) {
            throw std::logic_error("internal pi identity failed self-check");
        }
        return t;
    }();
    return terms;
}

}  // namespace

Interval pi_interval(const Rational& eps) {
    return pi_interval(eps, euler_identity());
}

}  // namespace machin
