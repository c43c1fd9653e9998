#ifndef LATSEC_RATIONAL_HPP
#define LATSEC_RATIONAL_HPP

// Exact arbitrary-precision arithmetic types used across the library, plus
// small parsing/printing helpers. All certified decisions are made with
// Rational; Real is a guard-banded floating type for numeric evaluation only.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace latsec {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real to_real(const Rational& r) {
    return numerator(r).convert_to<Real>() / denominator(r).convert_to<Real>();
}

inline Int floor_div(const Int& a, const Int& b) {
    // b > 0 assumed; cpp_int division truncates toward zero
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline Int floor_rat(const Rational& r) { return floor_div(numerator(r), denominator(r)); }

inline Int ceil_rat(const Rational& r) { return -floor_rat(-r); }

// Parses "p/q" or a plain integer string.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: \"" + s + "\"");
    }
}

inline std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    if (denominator(r) == 1)
        os << numerator(r);
    else
        os << numerator(r) << "/" << denominator(r);
    return os.str();
}

// Decimal rendering with the given number of significant digits.
inline std::string decimal_string(const Real& x, int digits = 12) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

inline std::string decimal_string(const Rational& r, int digits = 12) {
    return decimal_string(to_real(r), digits);
}

} // namespace latsec

#endif
