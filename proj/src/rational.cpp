#include "eds/rational.hpp"

#include <cctype>

namespace eds {

std::string rational_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool plain_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  if (!plain_integer(num)) throw error("malformed rational literal '" + text + "'");
  if (slash == std::string::npos) return Rational(mpz_class(num));
  const std::string den = text.substr(slash + 1);
  if (!plain_integer(den)) throw error("malformed rational literal '" + text + "'");
  mpz_class d(den);
  if (d == 0) throw error("zero denominator in rational literal '" + text + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

}  // namespace eds
