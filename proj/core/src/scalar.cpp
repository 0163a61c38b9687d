#include "qlie/scalar.hpp"

#include <ostream>
#include <sstream>
#include <vector>

namespace qlie {

Scalar Scalar::of_fraction(long long num, long long den) {
    if (den == 0) {
        throw DivisionByZeroError("fraction with zero denominator");
    }
    return Scalar(Rational(num, den));
}

Scalar Scalar::operator*(const Scalar& o) const {
    // (a + b r2 + c i + d i r2)(a' + b' r2 + c' i + d' i r2) with r2^2 = 2,
    // i^2 = -1, expanded on the same basis.
    const Rational &a1 = a_, &b1 = b_, &c1 = c_, &d1 = d_;
    const Rational &a2 = o.a_, &b2 = o.b_, &c2 = o.c_, &d2 = o.d_;
    return Scalar(a1 * a2 + 2 * b1 * b2 - c1 * c2 - 2 * d1 * d2,
                  a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
                  a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
                  a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2);
}

bool Scalar::operator<(const Scalar& o) const {
    if (a_ != o.a_) return a_ < o.a_;
    if (b_ != o.b_) return b_ < o.b_;
    if (c_ != o.c_) return c_ < o.c_;
    return d_ < o.d_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw DivisionByZeroError("inverse of zero scalar");
    }
    // 1/x = conj_i(x) / (x * conj_i(x)); the norm lies in Q(r2), and its own
    // inverse is obtained with the r2 -> -r2 conjugate over Q.
    const Scalar conj = conj_i();
    const Scalar norm = *this * conj; // p + q*r2, real, not zero
    const Rational& p = norm.a_;
    const Rational& q = norm.b_;
    const Rational denom = p * p - 2 * q * q; // rational norm of p + q*r2
    if (denom == 0) {
        // p^2 = 2 q^2 has no nonzero rational solutions, so this would force
        // norm == 0, contradicting x != 0 in a real quadratic field.
        throw DivisionByZeroError("degenerate scalar norm");
    }
    const Scalar norm_inv(p / denom, -q / denom, Rational(0), Rational(0));
    return conj * norm_inv;
}

namespace {

// Exact square root of a nonnegative rational, if it is a perfect square.
bool rational_sqrt(const Rational& r, Rational& out) {
    if (r < 0) return false;
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    const Integer sn = boost::multiprecision::sqrt(num);
    const Integer sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    out = Rational(sn, sd);
    return true;
}

} // namespace

bool Scalar::try_sqrt(Scalar& out) const {
    // Supported radicands: u^2, 2*u^2, -u^2, -2*u^2 for rational u, whose
    // roots are u, u*r2, u*i, u*i*r2 respectively.  Anything else reports no
    // representable root.
    if (!is_rational()) return false;
    const Rational& r = a_;
    Rational u;
    if (r == 0) {
        out = Scalar::zero();
        return true;
    }
    if (r > 0) {
        if (rational_sqrt(r, u)) {
            out = Scalar(u, 0, 0, 0);
            return true;
        }
        if (rational_sqrt(r / 2, u)) {
            out = Scalar(0, u, 0, 0);
            return true;
        }
        return false;
    }
    if (rational_sqrt(-r, u)) {
        out = Scalar(0, 0, u, 0);
        return true;
    }
    if (rational_sqrt(-r / 2, u)) {
        out = Scalar(0, 0, 0, u);
        return true;
    }
    return false;
}

namespace {

std::string rational_str(const Rational& r) {
    return r.str();
}

Rational parse_rational(const std::string& text) {
    // Accept "p" or "p/q" with optional leading '-'; reject anything else.
    if (text.empty()) throw ParseError("empty number in scalar");
    std::size_t pos = 0;
    if (text[pos] == '-') ++pos;
    if (pos == text.size()) throw ParseError("bare sign in scalar: '" + text + "'");
    bool seen_slash = false;
    for (std::size_t k = pos; k < text.size(); ++k) {
        const char ch = text[k];
        if (ch == '/') {
            if (seen_slash || k == pos || k + 1 == text.size()) {
                throw ParseError("malformed fraction: '" + text + "'");
            }
            seen_slash = true;
        } else if (ch < '0' || ch > '9') {
            throw ParseError("malformed number: '" + text + "'");
        }
    }
    try {
        Rational r(text);
        return r;
    } catch (const std::exception&) {
        throw ParseError("malformed number: '" + text + "'");
    }
}

// One additive term: a rational coefficient with an optional basis suffix.
Scalar parse_term(const std::string& term) {
    const std::size_t star = term.find('*');
    const std::string coeff_text = (star == std::string::npos) ? term : term.substr(0, star);
    const std::string suffix = (star == std::string::npos) ? "" : term.substr(star + 1);
    const Rational coeff = parse_rational(coeff_text);
    if (suffix.empty()) return Scalar(coeff, 0, 0, 0);
    if (suffix == "r2") return Scalar(0, coeff, 0, 0);
    if (suffix == "i") return Scalar(0, 0, coeff, 0);
    if (suffix == "i*r2") return Scalar(0, 0, 0, coeff);
    throw ParseError("unknown scalar basis suffix: '" + suffix + "'");
}

} // namespace

std::string Scalar::render() const {
    struct Part {
        const Rational* value;
        const char* suffix;
    };
    const Part parts[] = {{&a_, ""}, {&b_, "*r2"}, {&c_, "*i"}, {&d_, "*i*r2"}};
    std::string out;
    for (const Part& part : parts) {
        if (*part.value == 0) continue;
        if (out.empty()) {
            if (*part.value < 0) {
                out += "-" + rational_str(-*part.value);
            } else {
                out += rational_str(*part.value);
            }
        } else if (*part.value < 0) {
            out += " - " + rational_str(-*part.value);
        } else {
            out += " + " + rational_str(*part.value);
        }
        out += part.suffix;
    }
    if (out.empty()) return "0";
    return out;
}

Scalar Scalar::parse(const std::string& text) {
    // Whitespace-separated sequence: term (('+'|'-') term)*.
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw ParseError("empty scalar");
    Scalar result = parse_term(tokens[0]);
    std::size_t k = 1;
    while (k < tokens.size()) {
        if (k + 1 >= tokens.size()) {
            throw ParseError("dangling operator in scalar: '" + text + "'");
        }
        const std::string& op = tokens[k];
        const Scalar term = parse_term(tokens[k + 1]);
        if (op == "+") {
            result += term;
        } else if (op == "-") {
            result -= term;
        } else {
            throw ParseError("expected '+' or '-' in scalar, got '" + op + "'");
        }
        k += 2;
    }
    return result;
}

Scalar operator*(int k, const Scalar& s) {
    return Scalar(k) * s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.render();
}

} // namespace qlie
