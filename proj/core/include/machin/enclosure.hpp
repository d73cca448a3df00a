#ifndef MACHIN_ENCLOSURE_HPP
#define MACHIN_ENCLOSURE_HPP

#include <span>

#include "machin/gaussian.hpp"
#include "machin/interval.hpp"

namespace machin {

/// Cap on adaptive precision escalation, expressed in decimal digits.
/// The CLI derives it from MACHIN_REFINE_MAX_PRECISION_BITS.
struct PrecisionBudget {
    long max_digits = 1000000;

    /// Reads MACHIN_REFINE_MAX_PRECISION_BITS if set (bits -> digits),
    /// otherwise returns the default.
    static PrecisionBudget from_env();
};

/// Enclosure of arctan x from the alternating series, plus the number
/// of series terms that were summed.
struct ArctanSeries {
    Interval enclosure;
    long terms;
};

/// Enclosure of width <= eps containing arctan x, endpoints being two
/// consecutive exact partial sums of the alternating series
/// sum (-1)^k x^(2k+1)/(2k+1). The term count comes from the
/// alternating-series bound (first omitted term <= eps), fixed up
/// front rather than adaptively.
/// Preconditions: 0 <= x < 1, eps > 0; violations throw DomainError.
ArctanSeries arctan_series(const Rational& x, const Rational& eps);
Interval arctan_interval(const Rational& x, const Rational& eps);

/// Enclosure from exactly `terms` series terms (terms >= 1). Enclosures
/// are nested: more terms always give a sub-interval.
Interval arctan_interval_terms(const Rational& x, long terms);

/// Enclosure of pi of width <= eps, evaluated as
/// 4 * sum coef_i * arctan(arg_i) over a two-term identity that is
/// stored internally and exactly verified (Euler's
/// arctan(1/2) + arctan(1/3) = pi/4).
Interval pi_interval(const Rational& eps);

/// Same evaluation over caller-supplied terms. The caller must pass an
/// identity already verified to sum to pi/4; every argument must lie in
/// (0, 1) or DomainError is thrown.
Interval pi_interval(const Rational& eps, std::span<const AtanTerm> terms);

}  // namespace machin

#endif
