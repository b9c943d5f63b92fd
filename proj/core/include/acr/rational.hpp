#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acr {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. The backing type keeps every value in lowest terms
// with a positive denominator, which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// Accepts "p", "p/q", and plain decimals like "1.25" or "-0.5".
// Returns nullopt on malformed input or zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

// "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& q);

// lcm of denominators; 1 for an empty vector.
Int common_denominator(const std::vector<Rational>& v);

// Scales v by the positive rational that makes it an integer vector with
// content 1. The zero vector is returned unchanged. Sign is preserved.
std::vector<Rational> primitive_vector(const std::vector<Rational>& v);

// primitive_vector followed by a sign flip if the first nonzero entry is
// negative. This is the canonical representative of span{v} used for kernel
// bases.
std::vector<Rational> canonical_sign_vector(const std::vector<Rational>& v);

}  // namespace acr
