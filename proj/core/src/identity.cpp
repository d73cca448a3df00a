#include "machin/identity.hpp"

#include <cctype>
#include <utility>

namespace machin {

MachinIdentity::MachinIdentity(std::vector<AtanTerm> terms)
    : terms_(std::move(terms)) {
    if (terms_.empty()) throw DomainError("identity needs at least one term");
    for (const AtanTerm& t : terms_) {
        if (t.coef == 0) throw DomainError("identity coefficients must be nonzero");
        if (t.arg.sign() <= 0) {
            throw DomainError("identity arguments must be positive");
        }
    }
}

std::string MachinIdentity::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const AtanTerm& t = terms_[i];
        if (i == 0) {
            out += t.coef.get_str();
        } else if (sgn(t.coef) < 0) {
            out += " - " + BigInt(-t.coef).get_str();
        } else {
            out += " + " + t.coef.get_str();
        }
        out += "*atan(" + t.arg.to_string() + ")";
    }
    out += " = pi/4";
    return out;
}

namespace {

// Cursor over the identity grammar; all errors carry byte positions.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c, const char* what) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) {
            throw ParseError(std::string("expected '") + c + "' (" + what +
                                 ") at position " + std::to_string(pos),
                             pos);
        }
        ++pos;
    }
    void expect_word(std::string_view word) {
        skip_ws();
        if (text.substr(pos, word.size()) != word) {
            throw ParseError("expected '" + std::string(word) + "' at position " +
                                 std::to_string(pos),
                             pos);
        }
        pos += word.size();
    }
    BigInt unsigned_integer(const char* what) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == start) {
            throw ParseError(std::string("expected ") + what + " at position " +
                                 std::to_string(start),
                             start);
        }
        return BigInt(std::string(text.substr(start, pos - start)), 10);
    }
    int optional_sign() {
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            return text[pos++] == '-' ? -1 : 1;
        }
        return 1;
    }
};

AtanTerm parse_term(Cursor& c, int outer_sign) {
    int sign = outer_sign * c.optional_sign();
    BigInt coef = c.unsigned_integer("coefficient");
    if (sign < 0) coef = -coef;
    c.expect('*', "coefficient times atan");
    c.expect_word("atan");
    c.expect('(', "atan argument");
    std::size_t arg_pos = c.pos;
    BigInt num = c.unsigned_integer("argument numerator");
    BigInt den = 1;
    if (c.peek() == '/') {
        c.expect('/', "fraction");
        den = c.unsigned_integer("argument denominator");
        if (den == 0) throw ParseError("zero denominator in argument", arg_pos);
    }
    c.expect(')', "closing atan");
    return {std::move(coef), Rational(std::move(num), std::move(den))};
}

}  // namespace

MachinIdentity MachinIdentity::parse(std::string_view text) {
    Cursor c{text};
    std::vector<AtanTerm> terms;
    terms.push_back(parse_term(c, 1));
    while (true) {
        char next = c.peek();
        if (next == '+' || next == '-') {
            ++c.pos;
            terms.push_back(parse_term(c, next == '-' ? -1 : 1));
        } else {
            break;
        }
    }
    c.expect('=', "identity target");
    c.expect_word("pi");
    c.expect('/', "pi over four");
    c.expect_word("4");
    if (!c.at_end()) {
        throw ParseError("trailing input at position " + std::to_string(c.pos),
                         c.pos);
    }
    return MachinIdentity(std::move(terms));
}

Interval arctan_enclosure_any(const Rational& x, const Rational& eps) {
    if (x.sign() < 0) throw DomainError("arctan enclosure requires x >= 0");
    if (x < Rational(1)) return arctan_interval(x, eps);
    if (x == Rational(1)) {
        Interval pi = pi_interval(Rational(4) * eps);
        return Rational(1, 4) * pi;
    }
    // Two exact reductions are available; take the one whose reduced
    // argument is smaller (crossover at x = 1 + sqrt(2)), so the series
    // never runs near argument 1.
    Rational split = (x - Rational(1)) / (x + Rational(1));
    Rational recip = x.reciprocal();
    if (split < recip) {
        // arctan x = pi/4 + arctan((x-1)/(x+1))
        Interval pi = pi_interval(Rational(2) * eps);
        return Rational(1, 4) * pi + arctan_interval(split, eps / Rational(2));
    }
    // arctan x = pi/2 - arctan(1/x)
    Interval pi = pi_interval(eps);
    return Rational(1, 2) * pi - arctan_interval(recip, eps / Rational(2));
}

namespace {

// Enclosure of the angle sum with total width <= target.
Interval angle_sum_enclosure(std::span<const AtanTerm> terms,
                             const Rational& target) {
    Rational per_term = target / Rational(static_cast<long>(terms.size()));
    Interval sum = Interval::point(Rational(0));
    for (const AtanTerm& t : terms) {
        Rational slice(per_term.num(), per_term.den() * ::abs(t.coef));
        sum = sum + t.coef * arctan_enclosure_any(t.arg, slice);
    }
    return sum;
}

}  // namespace

VerifyResult verify(const MachinIdentity& id, const PrecisionBudget& budget) {
    // Stage 1: exact tangent. re = im proves the sum is pi/4 mod pi.
    auto [re, im] = detail::gaussian_combination_parts(id.terms());

    VerifyResult result;
    result.certificate = VerifyCertificate{re, im, Interval()};

    if (re == 0) {
        result.verdict = Verdict::Fails;
        result.diagnostic = "tangent pole: angle sum is pi/2 mod pi, not pi/4";
        result.certificate->angle = angle_sum_enclosure(id.terms(), Rational(1, 4));
        return result;
    }
    if (re != im) {
        result.verdict = Verdict::Fails;
        result.diagnostic = "exact tangent of the angle sum differs from 1";
        result.certificate->angle = angle_sum_enclosure(id.terms(), Rational(1, 4));
        return result;
    }

    // Stage 2: branch pinning. The sum equals pi/4 + k*pi for a unique
    // integer k; isolate k by intervals and accept iff k = 0.
    Rational width(1, 4);
    while (true) {
        if (decimal_digits(width.den()) > budget.max_digits) {
            result.verdict = Verdict::Inconclusive;
            result.diagnostic = "branch not isolated within precision budget";
            return result;
        }
        Interval angle = angle_sum_enclosure(id.terms(), width);
        Interval pi = pi_interval(width);
        Interval k_range = (angle - Rational(1, 4) * pi) / pi;
        BigInt k_lo = ceil(k_range.lo());
        BigInt k_hi = floor(k_range.hi());
        if (k_lo > k_hi) {
            throw std::logic_error("branch interval excludes every integer");
        }
        if (k_lo == k_hi) {
            result.certificate->angle = angle;
            if (k_lo == 0) {
                result.verdict = Verdict::Holds;
            } else {
                result.verdict = Verdict::Fails;
                result.diagnostic =
                    "angle sum is pi/4 + k*pi with k = " + k_lo.get_str();
            }
            return result;
        }
        width /= Rational(100);
    }
}

MachinIdentity refined_identity(const RefinementRecord& record) {
    std::vector<AtanTerm> terms{{record.a_n, record.u_n},
                                {record.a_prev, record.u_next}};
    MachinIdentity id(std::move(terms));
    VerifyResult r = verify(id);
    if (!r.verified()) {
        throw std::logic_error(
            "refined identity failed verification (internal bug): " +
            r.diagnostic);
    }
    return id;
}

}  // namespace machin
