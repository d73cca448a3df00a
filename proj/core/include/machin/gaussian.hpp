#ifndef MACHIN_GAUSSIAN_HPP
#define MACHIN_GAUSSIAN_HPP

#include <span>
#include <utility>
#include <vector>

#include "machin/rational.hpp"

namespace machin {

/// Complex number with rational parts, re + i*im. Multiplying factors
/// (1 + i*u) adds arctangent angles, so products of these carry exact
/// tangent-of-angle-combination values.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(Rational re, Rational im)
        : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    static GaussianRational one() { return {Rational(1), Rational(0)}; }

    /// im/re: the exact tangent of this value's argument.
    /// Throws PoleError when re = 0.
    Rational arg_tangent() const;

    friend GaussianRational operator*(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }

    friend bool operator==(const GaussianRational& a,
                           const GaussianRational& b) = default;

private:
    Rational re_, im_;
};

/// z^k by square-and-multiply. For k < 0 the exact inverse power is
/// returned (the conjugate power divided by the squared-modulus power),
/// so the result equals the mathematical z^k for every k.
/// Throws DomainError when z = 0 and k <= 0.
GaussianRational gaussian_pow(const GaussianRational& z, const BigInt& k);

/// One term of an arctangent combination: coef * arctan(arg).
struct AtanTerm {
    BigInt coef;
    Rational arg;

    friend bool operator==(const AtanTerm&, const AtanTerm&) = default;
};

/// tan(sum of coef_i * arctan(arg_i)), exact. Denominators are cleared
/// first (each factor enters as (den + i*num)^coef, conjugated for
/// negative coef), all intermediates stay integral, and the final ratio
/// is reduced once. Correct for any angle since tan has period pi.
/// Preconditions: each arg > 0. Throws PoleError when the combination
/// is pi/2 mod pi (zero real part).
Rational tan_combination(std::span<const AtanTerm> terms);

namespace detail {

/// Integral (re, im) of prod (den_i + i*num_i)^(coef_i), with negative
/// coefficients entering via the conjugate power. The pair is a
/// positive-rational multiple of the true Gaussian product, so the
/// im/re ratio and both signs are those of the exact value.
std::pair<BigInt, BigInt> gaussian_combination_parts(std::span<const AtanTerm> terms);

/// (re, im)^k for integral parts, k >= 0.
std::pair<BigInt, BigInt> integral_pow(const BigInt& re, const BigInt& im,
                                       const BigInt& k);

}  // namespace detail

}  // namespace machin

#endif
