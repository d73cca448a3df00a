#include "machin/approx.hpp"

#include <future>
#include <utility>

#include "machin/identity.hpp"

namespace machin {

std::vector<ApproxRecord> approx_sequence(const Seed& seed, long depth,
                                          const Rational& eps,
                                          StepStrategy strategy) {
    if (depth < 1) throw DomainError("approx_sequence requires depth >= 1");
    if (eps.sign() <= 0) throw DomainError("approx_sequence requires eps > 0");

    std::vector<RefinementRecord> records = refine_stream(seed, depth, strategy);
    Interval pi = pi_interval(eps);

    std::vector<ApproxRecord> out;
    out.reserve(records.size());
    BigInt d_prev = 0;  // D_{-1}
    for (const RefinementRecord& rec : records) {
        Rational r = Rational(4) * (Rational(rec.a_n) * rec.u_n +
                                    Rational(rec.a_prev) * rec.u_next);
        Interval err = Interval::point(r) - pi;
        Interval err_scaled = Rational(d_prev * d_prev) * err.abs();
        BigInt a_next = rec.q * rec.a_n + rec.a_prev;
        Interval ratio = Interval::point(Rational(a_next, rec.D));
        out.push_back({rec.n, std::move(r), std::move(err),
                       std::move(err_scaled), std::move(ratio)});
        d_prev = rec.D;
    }
    return out;
}

CoefficientAsymptotic coefficient_asymptotic_check(const Seed& seed,
                                                   std::span<const RefinementRecord> records,
                                                   const Rational& eps) {
    if (records.size() < 3) {
        throw DomainError("asymptotic check needs at least 3 records");
    }
    const RefinementRecord& deepest = records.back();
    BigInt a_next = deepest.q * deepest.a_n + deepest.a_prev;
    Interval ratio = Interval::point(Rational(a_next, deepest.D));

    Interval pi = pi_interval(eps);
    Interval atan_u1 = arctan_enclosure_any(seed.u1, eps);
    Interval target = (Rational(1, 4) * pi) / atan_u1;

    long first_positive = -1;
    bool persists = true;
    for (std::size_t i = 0; i < records.size(); ++i) {
        BigInt an = records[i].q * records[i].a_n + records[i].a_prev;
        if (an > 0) {
            if (first_positive < 0) first_positive = records[i].n;
        } else if (first_positive >= 0) {
            persists = false;
        }
    }
    return {std::move(ratio), std::move(target), first_positive, persists};
}

PiDigitsResult pi_digits(const Seed& seed, long n, long digits,
                         const PrecisionBudget& budget, StepStrategy strategy) {
    if (n < 1) throw DomainError("pi_digits requires n >= 1");
    if (digits < 1) throw DomainError("pi_digits requires digits >= 1");

    RefinementStream stream(seed, strategy);
    RefinementRecord rec{};
    for (long i = 0; i <= n; ++i) rec = stream.next();

    if (rec.u_n >= Rational(1) || rec.u_next >= Rational(1)) {
        throw DomainError("pi_digits needs both identity arguments below one");
    }

    Rational target = pow10(-digits - 2);
    while (true) {
        if (decimal_digits(target.den()) - 1 > budget.max_digits) {
            throw PrecisionExhausted(
                "pi digit prefix not certified within precision budget");
        }
        Rational eps_u(target.num(), target.den() * 8 * ::abs(rec.a_n));
        Rational eps_v(target.num(), target.den() * 8 * ::abs(rec.a_prev));

        // The two series are independent; evaluate them concurrently and
        // combine deterministically.
        auto fu = std::async(std::launch::async,
                             [&] { return arctan_series(rec.u_n, eps_u); });
        ArctanSeries sv = arctan_series(rec.u_next, eps_v);
        ArctanSeries su = fu.get();

        Interval pi = Rational(4) * (rec.a_n * su.enclosure +
                                     rec.a_prev * sv.enclosure);
        std::string lo = pi.lo().to_decimal(digits);
        std::string hi = pi.hi().to_decimal(digits);
        if (lo == hi) {
            return {std::move(lo),
                    {{rec.a_n, rec.u_n, su.terms, eps_u},
                     {rec.a_prev, rec.u_next, sv.terms, eps_v}}};
        }
        // Endpoints straddle a decimal boundary; tighten and retry.
        target = target * pow10(-4);
    }
}

}  // namespace machin
