#ifndef MACHIN_IDENTITY_HPP
#define MACHIN_IDENTITY_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "machin/cf_engine.hpp"
#include "machin/enclosure.hpp"
#include "machin/gaussian.hpp"

namespace machin {

/// Multi-term Machin-like identity sum coef_i * arctan(arg_i) = pi/4.
/// Arguments are strictly positive, coefficients nonzero.
class MachinIdentity {
public:
    explicit MachinIdentity(std::vector<AtanTerm> terms);

    std::span<const AtanTerm> terms() const { return terms_; }

    /// Canonical text form, e.g. "4*atan(1/5) - 1*atan(1/239) = pi/4".
    /// parse(to_text()) reproduces the identity bit-exactly.
    std::string to_text() const;

    /// Parses the identity grammar
    ///   a0*atan(p0/q0) + a1*atan(p1/q1) + ... = pi/4
    /// (whitespace-insensitive, optionally signed coefficients,
    /// fraction or integer arguments). Throws ParseError with the byte
    /// position of the offending token.
    static MachinIdentity parse(std::string_view text);

private:
    std::vector<AtanTerm> terms_;
};

/// Evidence retained from a verification run: the exact integral
/// (re, im) of the Gaussian product (a positive-rational multiple of
/// the true product, identical ratio) and the interval enclosure of
/// the angle sum used to pin the branch.
struct VerifyCertificate {
    BigInt re;
    BigInt im;
    Interval angle;
};

struct VerifyResult {
    Verdict verdict;
    std::optional<VerifyCertificate> certificate;
    std::string diagnostic;

    bool verified() const { return verdict == Verdict::Holds; }
};

/// Two-stage exact verification.
/// Stage 1 (exact tangent): the integral Gaussian product of
/// (den + i num)^coef factors must have re = im, proving the angle sum
/// is pi/4 mod pi. A tangent pole refutes with a pole diagnostic.
/// Stage 2 (branch pinning): an interval enclosure of the angle sum,
/// divided against a pi enclosure, isolates the unique integer k with
/// sum = pi/4 + k*pi; the identity holds iff k = 0. Precision escalates
/// until k is isolated; at the budget cap the result is Inconclusive,
/// never a claim.
VerifyResult verify(const MachinIdentity& id, const PrecisionBudget& budget = {});

/// The record's two-term identity
/// a_{-n} arctan(u_n) + a_{-n+1} arctan(u_{n+1}) = pi/4, verified.
/// A verification failure here indicates an internal bug and throws
/// std::logic_error.
MachinIdentity refined_identity(const RefinementRecord& record);

/// Enclosure of arctan x of width <= eps for any x >= 0. Arguments
/// >= 1 are reduced through arctan x = pi/4 + arctan((x-1)/(x+1)) or
/// arctan x = pi/2 - arctan(1/x), whichever leaves the smaller series
/// argument; the pi enclosure comes from pi_interval (itself resting on
/// the internally verified all-arguments-below-one Euler identity).
Interval arctan_enclosure_any(const Rational& x, const Rational& eps);

}  // namespace machin

#endif
