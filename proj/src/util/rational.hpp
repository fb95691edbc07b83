#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace recipe {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts integers ("-9"), fractions ("1/3") and finite decimals ("-32.1").
// Returns nullopt when `text` is not a number literal at all; throws
// std::invalid_argument for a zero denominator.
std::optional<Rational> parse_number(std::string_view text);

// True when `text` starts like a number (digit, or sign/dot followed by digit).
bool looks_numeric(std::string_view text);

// Decimal form when the value has a finite expansion, "n/d" otherwise.
std::string format_number(const Rational& value);

// Integer or "n/d"; the wire form used in JSON documents.
std::string format_fraction(const Rational& value);

// Parses the wire form produced by format_fraction (also accepts decimals).
std::optional<Rational> parse_fraction(std::string_view text);

bool is_integer(const Rational& value);
double to_double(const Rational& value);

}  // namespace recipe
