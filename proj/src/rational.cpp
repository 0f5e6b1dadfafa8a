#include "covertor/rational.hpp"

#include <cctype>

#include "covertor/error.hpp"

namespace covertor {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::ValidationError, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string original(text);
  bool negative = false;
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (text.substr(0, kUnicodeMinus.size()) == kUnicodeMinus) {
    negative = true;
    text.remove_prefix(kUnicodeMinus.size());
  } else if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw Error(ErrorCode::ParseError, "not a rational: '" + original + "'");
  const Integer n{std::string(num)};
  const Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + original + "'");
  return make_rational(negative ? Integer(-n) : n, d);
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace covertor
