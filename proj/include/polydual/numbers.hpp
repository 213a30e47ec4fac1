#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace polydual {

// Exact arithmetic throughout: unbounded integers, rationals as normalized
// numerator/denominator pairs.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Rat make_rat(Int num, Int den) { return Rat(std::move(num), std::move(den)); }

inline bool is_integral(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

}  // namespace polydual
