#include "machin/arctan_algebra.hpp"

#include <array>

namespace machin {

Rational arctan_sub(const Rational& x, const Rational& y) {
    if (y.sign() < 0 || x < y) {
        throw DomainError("arctan_sub requires x >= y >= 0");
    }
    return (x - y) / (Rational(1) + x * y);
}

Rational arctan_add(const Rational& x, const Rational& y) {
    if (x.sign() < 0 || y.sign() < 0) {
        throw DomainError("arctan_add requires x, y >= 0");
    }
    Rational xy = x * y;
    if (xy >= Rational(1)) {
        throw RangeError("arctan_add: angle sum reaches pi/2 (x*y >= 1)");
    }
    return (x + y) / (Rational(1) - xy);
}

namespace {

// sign of im((1 + i u)(1 - i v)^q) on cleared denominators; equals the
// sign of arctan u - q arctan v while that angle stays in (-pi, pi/4],
// which holds for u < 1 and q <= 2(q_true + 1).
int probe_sign(const Rational& u, const Rational& v, const BigInt& q) {
    auto [vr, vi] = detail::integral_pow(v.den(), -v.num(), q);
    BigInt im = u.den() * vi + u.num() * vr;
    return sgn(im);
}

StepResult step_linear(const Rational& u, const Rational& v) {
    BigInt q = 0;
    Rational w = u;
    while (w >= v) {
        w = arctan_sub(w, v);
        ++q;
    }
    return {q, w};
}

StepResult step_doubling(const Rational& u, const Rational& v,
                         std::vector<BigInt>* probes) {
    auto log_probe = [&](const BigInt& q) {
        if (probes) probes->push_back(q);
    };

    // q = 1 is always feasible: u > v means arctan u - arctan v > 0.
    BigInt lo = 1;
    log_probe(lo);
    BigInt hi = 2;
    log_probe(hi);
    while (probe_sign(u, v, hi) >= 0) {
        lo = hi;
        hi *= 2;
        log_probe(hi);
    }
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        log_probe(mid);
        if (probe_sign(u, v, mid) >= 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    std::array<AtanTerm, 2> terms{AtanTerm{BigInt(1), u}, AtanTerm{-lo, v}};
    Rational w = tan_combination(terms);
    return {lo, w};
}

}  // namespace

StepResult step_with_probes(const Rational& u, const Rational& v,
                            StepStrategy strategy,
                            std::vector<BigInt>* probes) {
    if (!(u > v && v.sign() > 0)) {
        throw DomainError("step requires u > v > 0");
    }
    StepResult r;
    if (strategy == StepStrategy::Linear || u >= Rational(1)) {
        // The doubling sign test is only sound for u < 1; a seed step
        // with u >= 1 falls back to the linear strategy.
        r = step_linear(u, v);
    } else {
        r = step_doubling(u, v, probes);
    }
    if (r.w.is_zero()) {
        throw DegenerateRatio(
            "arctan ratio is rational: refinement step terminated (invalid seed)");
    }
    if (!(r.w < v)) {
        throw std::logic_error("step postcondition w < v violated");
    }
    return r;
}

StepResult step(const Rational& u, const Rational& v, StepStrategy strategy) {
    return step_with_probes(u, v, strategy, nullptr);
}

}  // namespace machin
