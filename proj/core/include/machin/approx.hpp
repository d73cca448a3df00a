#ifndef MACHIN_APPROX_HPP
#define MACHIN_APPROX_HPP

#include <span>
#include <string>
#include <vector>

#include "machin/cf_engine.hpp"
#include "machin/interval.hpp"

namespace machin {

/// Rational pi approximation r_n = 4(a_{-n} u_n + a_{-n+1} u_{n+1})
/// with rigorous error enclosures. err encloses r_n - pi; err_scaled
/// encloses |r_n - pi| * D_{n-1}^2; coeff_ratio is the (exact, hence
/// degenerate) enclosure of a_{-n-1}/D_n.
struct ApproxRecord {
    long n;
    Rational r;
    Interval err;
    Interval err_scaled;
    Interval coeff_ratio;
};

/// Approximation records for n = 0..depth-1. eps controls the width of
/// the pi enclosure behind err; all scaling is exact endpoint
/// arithmetic, never float subtraction.
std::vector<ApproxRecord> approx_sequence(const Seed& seed, long depth,
                                          const Rational& eps,
                                          StepStrategy strategy = StepStrategy::Doubling);

/// Finite restatement of the coefficient asymptotic
/// a_{-n-1} ~ (pi/4 / arctan u1) D_n: the exact ratio at the deepest
/// record together with an enclosure of the limit, plus the
/// eventual-positivity witness for the coefficients.
struct CoefficientAsymptotic {
    Interval ratio;    // a_{-n-1}/D_n at the deepest record (exact point)
    Interval target;   // enclosure of (pi/4)/arctan(u1)
    long first_positive_index;
    bool positivity_persists;  // a_{-n-1} > 0 from that index onward
};

CoefficientAsymptotic coefficient_asymptotic_check(const Seed& seed,
                                                   std::span<const RefinementRecord> records,
                                                   const Rational& eps);

struct PiDigitsTermStat {
    BigInt coef;
    Rational arg;
    long terms;     // series terms summed
    Rational eps;   // per-arctan enclosure width
};

struct PiDigitsResult {
    std::string digits;  // e.g. "3.1415926535"
    std::vector<PiDigitsTermStat> term_stats;
};

/// Decimal expansion of pi, correct to `digits` places, from the
/// record-n refined identity (n >= 1 so both arguments are below one).
/// The two arctan series evaluate concurrently; the printed string is
/// the common truncated prefix of the enclosure endpoints, so every
/// digit is certified. Throws PrecisionExhausted if the prefix cannot
/// be certified within the budget.
PiDigitsResult pi_digits(const Seed& seed, long n, long digits,
                         const PrecisionBudget& budget = {},
                         StepStrategy strategy = StepStrategy::Doubling);

}  // namespace machin

#endif
