#include "ckn/rational.hpp"

#include <cctype>

namespace ckn {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw Error("empty rational literal");
  const std::size_t slash = t.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(t))
      throw Error("malformed rational \"" + text + "\": expected integer or num/den");
    return Rational(boost::multiprecision::cpp_int(t));
  }
  const std::string num = trim(t.substr(0, slash));
  const std::string den = trim(t.substr(slash + 1));
  if (!is_integer_token(num) || !is_integer_token(den))
    throw Error("malformed rational \"" + text + "\": expected integer or num/den");
  boost::multiprecision::cpp_int n(num), d(den);
  if (d == 0) throw Error("malformed rational \"" + text + "\": zero denominator");
  return Rational(n, d);
}

std::string format_rational(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace ckn
