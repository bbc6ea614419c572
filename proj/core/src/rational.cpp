#include "syz/rational.hpp"

#include <stdexcept>

namespace syz {

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw std::invalid_argument("rational: zero denominator");
  // cpp_rational's two-argument constructor insists on a positive denominator.
  if (q < 0) return Rational(-p, -q);
  return Rational(p, q);
}

Rational make_rational(std::int64_t p, std::int64_t q) {
  return make_rational(Integer(p), Integer(q));
}

Integer floor_rational(const Rational& x) {
  Integer num = numerator(x);
  Integer den = denominator(x); // cpp_rational keeps den > 0
  Integer q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

std::string to_pq_string(const Rational& x) {
  Integer den = denominator(x);
  std::string s = numerator(x).str();
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

Rational parse_pq_string(const std::string& text) {
  const auto slash = text.find('/');
  // cpp_int's string constructor accepts "" as zero; reject empty parts here.
  if (text.empty() || slash == 0 || slash == text.size() - 1)
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer p(text.substr(0, slash));
    Integer q(text.substr(slash + 1));
    return make_rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
}

double approx(const Rational& x) { return static_cast<double>(x); }

} // namespace syz
