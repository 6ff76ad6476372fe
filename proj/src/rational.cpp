#include "homat/rational.hpp"

#include <cctype>

#include "homat/errors.hpp"

namespace homat {

namespace {

bool looks_like_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos > start;
  };
  if (s[i] == '+' || s[i] == '-') ++i;
  if (!digits(i)) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (!digits(i)) return false;
  return i == s.size();
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (!looks_like_rational(text))
    throw input_error("invalid rational literal: \"" + text + "\" (expected \"p\" or \"p/q\")");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw input_error("invalid rational literal: \"" + text + "\"");
  if (q.get_den() == 0)
    throw input_error("invalid rational literal: \"" + text + "\" (zero denominator)");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw input_error("rational_pow: 0 raised to a negative power");
    return Rational(0);
  }
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  // num/den of a canonical base stay coprime under powering; only the sign
  // of the denominator needs no fixing since den > 0.
  if (exp < 0) {
    out = Rational(1) / out;
  }
  return out;
}

Integer integer_pow(long base, unsigned long exp) {
  Integer out;
  Integer b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

}  // namespace homat
