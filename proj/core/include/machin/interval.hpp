#ifndef MACHIN_INTERVAL_HPP
#define MACHIN_INTERVAL_HPP

#include <string>
#include <utility>

#include "machin/rational.hpp"

namespace machin {

/// Closed interval [lo, hi] with exact rational endpoints, enclosing a
/// real value. Endpoint arithmetic is exact, so operations return the
/// exact image hull; widening enters only through series tail bounds.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    Interval(Rational lo, Rational hi);
    static Interval point(Rational x) { return Interval(x, x); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    /// Enclosure of |x| over this interval.
    Interval abs() const;

    Interval operator-() const { return {-hi_, -lo_}; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return {a.lo_ + b.lo_, a.hi_ + b.hi_};
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return {a.lo_ - b.hi_, a.hi_ - b.lo_};
    }
    friend Interval operator*(const Interval& a, const Interval& b);

    /// Division; the divisor interval must not contain zero.
    friend Interval operator/(const Interval& a, const Interval& b);

    friend bool operator==(const Interval& a, const Interval& b) = default;

private:
    Rational lo_, hi_;
};

/// Scale by an exact value (sign-aware endpoint swap).
Interval operator*(const Rational& c, const Interval& iv);
Interval operator*(const BigInt& c, const Interval& iv);

}  // namespace machin

#endif
