#include "machin/rational.hpp"

#include <cctype>
#include <utility>

namespace machin {

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

bool Rational::is_canonical() const {
    if (sgn(den_) <= 0) return false;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return num_ == 0 ? den_ == 1 : g == 1;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw DivisionByZero("reciprocal of zero");
    return Rational(den_, num_);
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw DivisionByZero("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // den > 0 on both sides, so cross-multiplication preserves order.
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Signed decimal integer -> BigInt; offset is for error reporting.
BigInt parse_integer(std::string_view s, std::size_t offset) {
    bool negative = false;
    std::string_view body = s;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) {
        throw ParseError("expected integer at position " + std::to_string(offset), offset);
    }
    BigInt n(std::string(body), 10);  // base fixed: never octal/hex
    return negative ? BigInt(-n) : n;
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
    // Trim surrounding whitespace.
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view s = text.substr(b, e - b);
    if (s.empty()) throw ParseError("empty rational", b);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt n = parse_integer(s.substr(0, slash), b);
        BigInt d = parse_integer(s.substr(slash + 1), b + slash + 1);
        if (d == 0) throw ParseError("zero denominator", b + slash + 1);
        return Rational(std::move(n), std::move(d));
    }

    // Exact decimal / scientific notation: [sign] digits [. digits] [e[sign]digits]
    std::size_t epos = s.find_first_of("eE");
    long exp10 = 0;
    std::string_view mant = s;
    if (epos != std::string_view::npos) {
        BigInt ex = parse_integer(s.substr(epos + 1), b + epos + 1);
        if (!ex.fits_slong_p()) throw ParseError("exponent out of range", b + epos + 1);
        exp10 = ex.get_si();
        mant = s.substr(0, epos);
    }
    std::string digits;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
        digits = std::string(mant.substr(0, dot)) + std::string(mant.substr(dot + 1));
        exp10 -= static_cast<long>(mant.size() - dot - 1);
    } else {
        digits = std::string(mant);
    }
    BigInt n = parse_integer(digits, b);
    Rational r(std::move(n));
    return r * pow10(exp10);
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::string Rational::to_decimal(long places) const {
    if (places < 0) throw DomainError("to_decimal requires places >= 0");
    BigInt n = ::abs(num_);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    BigInt scaled = n * scale / den_;  // floor of |value| * 10^places
    BigInt ip = scaled / scale;
    BigInt fp = scaled % scale;
    std::string out;
    if (sgn(num_) < 0) out += "-";
    out += ip.get_str();
    if (places > 0) {
        std::string frac = fp.get_str();
        out += ".";
        out += std::string(static_cast<std::size_t>(places) - frac.size(), '0');
        out += frac;
    }
    return out;
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

BigInt floor(const Rational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

BigInt ceil(const Rational& x) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

Rational pow10(long k) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? Rational(BigInt(1), std::move(p)) : Rational(std::move(p));
}

long decimal_digits(const BigInt& n) {
    // mpz_sizeinbase may overestimate by one; correct it exactly.
    long size = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10));
    if (size > 1) {
        BigInt bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), 10, static_cast<unsigned long>(size - 1));
        if (cmp(::abs(n), bound) < 0) --size;
    }
    return size;
}

}  // namespace machin
