#ifndef MACHIN_ARCTAN_ALGEBRA_HPP
#define MACHIN_ARCTAN_ALGEBRA_HPP

#include <vector>

#include "machin/gaussian.hpp"
#include "machin/rational.hpp"

namespace machin {

/// arctan x - arctan y = arctan((x - y)/(1 + x y)) for x > y >= 0.
/// The difference lies in (0, pi/2), so no branch ambiguity exists.
/// Throws DomainError on precondition violation.
Rational arctan_sub(const Rational& x, const Rational& y);

/// arctan x + arctan y = arctan((x + y)/(1 - x y)) for x, y >= 0 with
/// x y < 1 (sum below pi/2). Throws RangeError when x y >= 1,
/// DomainError on negative input.
Rational arctan_add(const Rational& x, const Rational& y);

enum class StepStrategy { Linear, Doubling };

/// Result of one continued-fraction refinement step:
/// arctan u = q * arctan v + arctan w with 0 <= w < v.
/// w = 0 signals the degenerate rational-ratio case and is reported as
/// an error by step(), never returned.
struct StepResult {
    BigInt q;
    Rational w;
};

/// Extracts the partial quotient q = floor(arctan u / arctan v) and the
/// remainder argument w, using exact rational arithmetic only.
///
/// Linear: repeated arctan_sub while the running argument is >= v
/// (argument comparison equals angle comparison by monotonicity).
/// Doubling: exponential plus binary search for q on the sign of
/// im((1 + i u)(1 - i v)^q), then one tangent combination for w. The
/// sign test is sound for u < 1; a seed step with u >= 1 silently falls
/// back to the linear strategy.
///
/// Preconditions: u > v > 0. Throws DegenerateRatio when w = 0.
StepResult step(const Rational& u, const Rational& v,
                StepStrategy strategy = StepStrategy::Doubling);

/// step() with the doubling strategy's probe exponents appended to
/// *probes (when non-null); used to validate the overshoot bound.
StepResult step_with_probes(const Rational& u, const Rational& v,
                            StepStrategy strategy,
                            std::vector<BigInt>* probes);

}  // namespace machin

#endif
