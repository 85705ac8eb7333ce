#pragma once

#include "cremona/rational.hpp"

#include <vector>

namespace cremona {

// Dense univariate polynomial over Q, coefficient of t^i at index i.
// Invariant: empty coefficient vector means the zero polynomial; otherwise
// the last coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(int degree, const Rational& c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  // Quotient/remainder with exactness checks where promised.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
  UniPoly div_exact(const UniPoly& b) const;  // throws if remainder nonzero

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  // gcd over Q, returned monic (or zero when both inputs are zero).
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);

  // Pretty form like "t^4 - t^2 + 1"; variable name configurable.
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// n-th cyclotomic polynomial, memoized.
const UniPoly& cyclotomic_polynomial(int n);

int euler_phi(int n);

}  // namespace cremona
