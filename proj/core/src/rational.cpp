#include "mcx/rational.hpp"

#include "mcx/error.hpp"

#include <cctype>
#include <sstream>

namespace mcx {

std::string to_string(Ring ring) {
    return ring == Ring::integers ? "z" : "q";
}

Ring parse_ring(std::string_view text) {
    if (text == "z" || text == "Z" || text == "integers") return Ring::integers;
    if (text == "q" || text == "Q" || text == "rationals") return Ring::rationals;
    throw ReferenceError("unknown coefficient ring '" + std::string(text) + "'");
}

std::string to_string(const Rational& value) {
    return value.str();
}

std::string to_string(const Integer& value) {
    return value.str();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

Integer parse_integer(std::string_view text) {
    if (!is_integer_literal(text))
        throw ReferenceError("not an integer: '" + std::string(text) + "'");
    return Integer(strip_plus(text));
}

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
            throw ReferenceError("denominator must be unsigned: '" + std::string(text) + "'");
        Integer den = parse_integer(den_text);
        if (den == 0) throw ReferenceError("zero denominator: '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string whole(text.substr(0, dot));
        std::string frac(text.substr(dot + 1));
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        if (frac.empty() || !is_integer_literal(frac) || frac[0] == '-' || frac[0] == '+')
            throw ReferenceError("not a rational: '" + std::string(text) + "'");
        Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
        Integer w = parse_integer(whole);
        Integer f(frac);
        Integer num = boost::multiprecision::abs(w) * scale + f;
        if (negative) num = -num;
        return Rational(num, scale);
    }
    return Rational(parse_integer(text));
}

std::string to_decimal(const Rational& value, int digits) {
    Integer num = numerator(value);
    Integer den = denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;
    Integer whole = num / den;
    Integer rem = num % den;
    std::ostringstream out;
    if (negative) out << '-';
    out << whole.str();
    if (digits > 0) {
        out << '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            out << (rem / den).str();
            rem %= den;
        }
    }
    return out.str();
}

Rational abs(const Rational& value) {
    return value < 0 ? Rational(-value) : value;
}

Integer numerator(const Rational& value) {
    return boost::multiprecision::numerator(value);
}

Integer denominator(const Rational& value) {
    return boost::multiprecision::denominator(value);
}

bool is_integral(const Rational& value) {
    return denominator(value) == 1;
}

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace mcx
