#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace alpert {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^m for any integer m, exact.
inline Rational pow2(int m) {
    Integer p = Integer(1) << (m >= 0 ? m : -m);
    return m >= 0 ? Rational(p) : Rational(1, p);
}

inline Rational rat_pow(const Rational& base, int e) {
    if (e < 0) throw std::invalid_argument("rat_pow: negative exponent");
    Rational acc(1), b = base;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= b;
        if (k > 1) b *= b;
    }
    return acc;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Rational literals in files are "p" or "p/q".
inline Rational parse_rational(const std::string& text) {
    std::size_t i = 0, n = text.size();
    auto fail = [&]() -> void {
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    };
    if (n == 0) fail();
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t digits_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) fail();
    if (i < n) {
        if (text[i] != '/') fail();
        ++i;
        std::size_t den_start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != n) fail();
        Integer den(text.substr(den_start));
        if (den == 0) fail();
    }
    return Rational(text);
}

inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace alpert
