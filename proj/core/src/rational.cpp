#include "cohere/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cohere {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer to_integer(std::string_view digits) {
  Integer value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed fraction '" + original + "'");
    }
    Integer d = to_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
    value = Rational(to_integer(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal '" + original + "'");
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer num = (whole.empty() ? Integer(0) : to_integer(whole)) * scale +
                  (frac.empty() ? Integer(0) : to_integer(frac));
    value = Rational(num, scale);
  } else {
    if (!all_digits(text)) throw std::invalid_argument("malformed number '" + original + "'");
    value = Rational(to_integer(text));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  return value.str();
}

}  // namespace cohere
