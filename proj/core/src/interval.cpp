#include "machin/interval.hpp"

#include <algorithm>

namespace machin {

Interval::Interval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw DomainError("interval with lo > hi");
}

Interval Interval::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return {-hi_, -lo_};
    return {Rational(0), std::max(-lo_, hi_)};
}

Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo_ * b.lo_;
    Rational p2 = a.lo_ * b.hi_;
    Rational p3 = a.hi_ * b.lo_;
    Rational p4 = a.hi_ * b.hi_;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0) {
        throw DomainError("interval division by an interval containing zero");
    }
    return a * Interval(b.hi_.reciprocal(), b.lo_.reciprocal());
}

Interval operator*(const Rational& c, const Interval& iv) {
    if (c.sign() >= 0) return {c * iv.lo(), c * iv.hi()};
    return {c * iv.hi(), c * iv.lo()};
}

Interval operator*(const BigInt& c, const Interval& iv) {
    return Rational(c) * iv;
}

}  // namespace machin
