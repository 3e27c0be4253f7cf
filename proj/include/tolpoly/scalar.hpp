#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tolpoly {

/// Exact rational number. mpq_class keeps values canonical (den > 0, reduced)
/// as long as every mutation goes through its arithmetic operators.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// Parses "p/q", an integer, or a decimal literal such as "-0.25" or "1.5e-3".
/// Throws std::invalid_argument on malformed input.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& value);

/// Fixed-point decimal with `digits` fractional digits, rounded half away from zero.
std::string to_decimal(const Scalar& value, int digits);

/// Six significant digits, for human-facing reports only.
std::string to_display(const Scalar& value);

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t axis);

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
Vec add(std::span<const Scalar> a, std::span<const Scalar> b);
Vec sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vec scale(std::span<const Scalar> a, const Scalar& factor);
Vec negate(std::span<const Scalar> a);
bool is_zero(std::span<const Scalar> a);

/// Positive factor f such that f * a is a primitive integer vector.
/// Requires a != 0.
Scalar primitive_factor(std::span<const Scalar> a);

/// f * a for the factor above.
Vec primitive(std::span<const Scalar> a);

std::string to_string(std::span<const Scalar> v);

}  // namespace tolpoly
