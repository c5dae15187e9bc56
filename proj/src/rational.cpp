#include "thermo/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace thermo {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    BigInt out = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        }
        out = out * 10 + (c - '0');
    }
    return out;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
    const std::string_view whole = text;
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    Rational out;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), whole);
        BigInt den = parse_integer(text.substr(slash + 1), whole);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
        }
        out = Rational(num, den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) {
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        }
        BigInt num = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
        BigInt den = 1;
        if (!frac_part.empty()) {
            BigInt frac = parse_integer(frac_part, whole);
            for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
            num = num * den + frac;
        }
        out = Rational(num, den);
    } else {
        out = Rational(parse_integer(text, whole), BigInt(1));
    }
    return negative ? -out : out;
}

Rational Rational::pow2(int exponent) {
    BigInt p = 1;
    p <<= (exponent < 0 ? -exponent : exponent);
    return exponent < 0 ? Rational(BigInt(1), p) : Rational(p, BigInt(1));
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Rational::str() const {
    const BigInt den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
}

std::string Rational::decimal(int significant_digits) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.*g", significant_digits, to_double());
    return buf;
}

double Rational::to_double() const { return value_.convert_to<double>(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_ == 0) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

}  // namespace thermo
