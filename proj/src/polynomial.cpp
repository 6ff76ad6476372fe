#include "homat/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace homat {

BivariatePoly BivariatePoly::constant(Rational c) { return monomial(0, 0, std::move(c)); }

BivariatePoly BivariatePoly::monomial(int deg_x, int deg_y, Rational c) {
  BivariatePoly p;
  if (c != 0) p.terms_.emplace(Key{deg_x, deg_y}, std::move(c));
  return p;
}

void BivariatePoly::add_term(int deg_x, int deg_y, const Rational& c) {
  if (c == 0) return;
  Key key{deg_x, deg_y};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scale;
  return *this;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& other) const {
  BivariatePoly out = *this;
  out += other;
  return out;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& other) const {
  BivariatePoly out = *this;
  out -= other;
  return out;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& other) const {
  BivariatePoly out;
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : other.terms_) {
      out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    }
  }
  return out;
}

BivariatePoly BivariatePoly::operator*(const Rational& scale) const {
  BivariatePoly out = *this;
  out *= scale;
  return out;
}

Rational BivariatePoly::eval(const Rational& x, const Rational& y) const {
  int max_x = 0, max_y = 0;
  for (const auto& [key, c] : terms_) {
    max_x = std::max(max_x, key.first);
    max_y = std::max(max_y, key.second);
  }
  std::vector<Rational> xp(max_x + 1), yp(max_y + 1);
  xp[0] = 1;
  for (int i = 1; i <= max_x; ++i) xp[i] = xp[i - 1] * x;
  yp[0] = 1;
  for (int j = 1; j <= max_y; ++j) yp[j] = yp[j - 1] * y;
  Rational total = 0;
  for (const auto& [key, c] : terms_) total += c * xp[key.first] * yp[key.second];
  return total;
}

}  // namespace homat
