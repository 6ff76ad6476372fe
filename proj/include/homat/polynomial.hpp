#pragma once

#include <map>
#include <utility>

#include "homat/rational.hpp"

namespace homat {

// Sparse bivariate polynomial over the rationals. Zero coefficients are
// never stored; the default-constructed value is the zero polynomial.
class BivariatePoly {
public:
  using Key = std::pair<int, int>;  // (deg_x, deg_y)

  BivariatePoly() = default;
  static BivariatePoly constant(Rational c);
  static BivariatePoly monomial(int deg_x, int deg_y, Rational c);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly& operator-=(const BivariatePoly& other);
  BivariatePoly& operator*=(const Rational& scale);
  BivariatePoly operator+(const BivariatePoly& other) const;
  BivariatePoly operator-(const BivariatePoly& other) const;
  BivariatePoly operator*(const BivariatePoly& other) const;
  BivariatePoly operator*(const Rational& scale) const;

  bool operator==(const BivariatePoly& other) const = default;

  Rational eval(const Rational& x, const Rational& y) const;

private:
  void add_term(int deg_x, int deg_y, const Rational& c);

  std::map<Key, Rational> terms_;
};

}  // namespace homat
