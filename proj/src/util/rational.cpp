#include "util/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace recipe {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt digits(std::string_view s) { return BigInt(std::string(s)); }

BigInt pow10(std::size_t n) {
  BigInt result = 1;
  for (std::size_t i = 0; i < n; ++i) result *= 10;
  return result;
}

}  // namespace

bool looks_numeric(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i < text.size() && text[i] == '.') ++i;
  return i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]));
}

std::optional<Rational> parse_number(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigInt d = digits(den);
    if (d == 0) throw std::invalid_argument("division by zero in number literal");
    value = Rational(digits(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!all_digits(frac)) return std::nullopt;
    BigInt w = whole.empty() ? BigInt(0) : digits(whole);
    BigInt scale = pow10(frac.size());
    value = Rational(w * scale + digits(frac), scale);
  } else {
    if (!all_digits(body)) return std::nullopt;
    value = Rational(digits(body));
  }
  return negative ? Rational(-value) : value;
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string format_fraction(const Rational& value) {
  if (is_integer(value)) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::string format_number(const Rational& value) {
  if (is_integer(value)) return format_fraction(value);
  BigInt den = boost::multiprecision::denominator(value);
  std::size_t twos = 0, fives = 0;
  BigInt rest = den;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return format_fraction(value);

  std::size_t digits = std::max(twos, fives);
  BigInt num = boost::multiprecision::numerator(value);
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt scaled = num * (pow10(digits) / den);
  std::string text = scaled.str();
  if (text.size() <= digits) text.insert(0, digits - text.size() + 1, '0');
  text.insert(text.size() - digits, ".");
  return negative ? "-" + text : text;
}

std::optional<Rational> parse_fraction(std::string_view text) {
  try {
    return parse_number(text);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace recipe
