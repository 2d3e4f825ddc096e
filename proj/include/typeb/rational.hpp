// Exact scalar arithmetic. Every quantity in this library (weights, path
// sums, gradings, matrix coefficients) is an exact rational; there is no
// floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace typeb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

// Half-integers are the rationals with denominator 1 or 2 (canonical form).
inline bool is_half_integer(const Rational& q) {
    const Int d = rat_den(q);
    return d == 1 || d == 2;
}

// Two half-integers are congruent mod 1 iff their doubles have equal parity.
inline bool congruent_mod_one(const Rational& a, const Rational& b) {
    const Rational d = a - b;
    return rat_den(d) == 1;
}

inline Int to_integer(const Rational& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_integer: not an integer: " + q.str());
    return rat_num(q);
}

inline long long to_long(const Rational& q) {
    return static_cast<long long>(to_integer(q));
}

// Canonical serialization: "p/q" with q omitted when 1, e.g. "3/2", "-1", "0".
inline std::string rational_to_string(const Rational& q) {
    const Int n = rat_num(q), d = rat_den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline Rational parse_rational(std::string_view s) {
    const auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
        Int num{std::string(s.substr(0, slash))};
        Int den{std::string(s.substr(slash + 1))};
        if (den == 0) throw bad();
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

}  // namespace typeb
