#include "machin/gaussian.hpp"

namespace machin {

Rational GaussianRational::arg_tangent() const {
    if (re_.is_zero()) {
        throw PoleError("arg_tangent: zero real part (angle is pi/2 mod pi)");
    }
    return im_ / re_;
}

namespace detail {

std::pair<BigInt, BigInt> integral_pow(const BigInt& re, const BigInt& im,
                                       const BigInt& k) {
    BigInt rr(1), ri(0);
    BigInt br = re, bi = im;
    mp_bitcnt_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    if (k == 0) return {rr, ri};
    for (mp_bitcnt_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(k.get_mpz_t(), i)) {
            BigInt nr = rr * br - ri * bi;
            ri = rr * bi + ri * br;
            rr = std::move(nr);
        }
        if (i + 1 < bits) {
            BigInt nbr = br * br - bi * bi;
            bi = 2 * br * bi;
            br = std::move(nbr);
        }
    }
    return {rr, ri};
}

std::pair<BigInt, BigInt> gaussian_combination_parts(std::span<const AtanTerm> terms) {
    BigInt re(1), im(0);
    for (const AtanTerm& t : terms) {
        if (t.arg.sign() <= 0) {
            throw DomainError("tan combination requires positive arguments");
        }
        BigInt k = ::abs(t.coef);
        // coef < 0: conjugate factor, a positive-rational multiple of the
        // inverse power with identical im/re ratio.
        BigInt num = sgn(t.coef) < 0 ? BigInt(-t.arg.num()) : t.arg.num();
        auto [fr, fi] = integral_pow(t.arg.den(), num, k);
        BigInt nr = re * fr - im * fi;
        im = re * fi + im * fr;
        re = std::move(nr);
    }
    return {re, im};
}

}  // namespace detail

GaussianRational gaussian_pow(const GaussianRational& z, const BigInt& k) {
    if (z.is_zero() && k <= 0) {
        throw DomainError("gaussian_pow: zero base with non-positive exponent");
    }
    if (k == 0) return GaussianRational::one();

    // Clear denominators: z = (a + i b)/d with integral a, b.
    BigInt d = z.re().den() * z.im().den();
    BigInt a = z.re().num() * z.im().den();
    BigInt b = z.im().num() * z.re().den();

    BigInt kk = ::abs(k);
    if (!kk.fits_ulong_p()) {
        throw DomainError("gaussian_pow: exponent magnitude too large");
    }
    if (sgn(k) < 0) b = -b;  // conjugate
    auto [pr, pi] = detail::integral_pow(a, b, kk);

    // z^k = (a + i b)^k / d^k; for k < 0, conj(z)^|k| / |z|^(2|k|) gives
    // the exact inverse: (a - i b)^|k| * d^|k| / (a^2 + b^2)^|k|.
    BigInt dk;
    mpz_pow_ui(dk.get_mpz_t(), d.get_mpz_t(), mpz_get_ui(kk.get_mpz_t()));
    if (sgn(k) > 0) {
        return {Rational(pr, dk), Rational(pi, dk)};
    }
    BigInt m2 = a * a + b * b;
    BigInt m2k;
    mpz_pow_ui(m2k.get_mpz_t(), m2.get_mpz_t(), mpz_get_ui(kk.get_mpz_t()));
    return {Rational(pr * dk, m2k), Rational(pi * dk, m2k)};
}

Rational tan_combination(std::span<const AtanTerm> terms) {
    auto [re, im] = detail::gaussian_combination_parts(terms);
    if (re == 0) {
        throw PoleError("tan_combination: angle combination is pi/2 mod pi");
    }
    return Rational(std::move(im), std::move(re));
}

}  // namespace machin
