#include "logsurf/rational.hpp"

#include "logsurf/error.hpp"

#include <algorithm>
#include <cctype>

namespace logsurf {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw InputError("not a fraction: \"" + std::string(text) + "\"");
  const Integer d{std::string(den)};
  if (d == 0) throw InputError("zero denominator: \"" + std::string(text) + "\"");
  Rational q(Integer(std::string(num)), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

} // namespace logsurf
