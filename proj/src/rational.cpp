#include "mdx/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace mdx {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(trim(s.substr(0, slash)), s);
    const auto den = parse_int(trim(s.substr(slash + 1)), s);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (frac_part.size() > 17) throw std::invalid_argument("too many decimal digits in '" + std::string(s) + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, s);
    const std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, s);
    if (whole < 0 || frac < 0) throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    if (whole > std::numeric_limits<std::int64_t>::max() / den) {
      throw std::invalid_argument("rational out of range '" + std::string(s) + "'");
    }
    Rational r(whole * den + frac, den);
    return negative ? -r : r;
  }

  return Rational(parse_int(s, s));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace mdx
