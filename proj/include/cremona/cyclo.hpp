#pragma once

#include "cremona/rational.hpp"
#include "cremona/unipoly.hpp"

#include <string>
#include <vector>

namespace cremona {

// Element of the cyclotomic field Q(zeta_n), stored on the power basis
// zeta^0, ..., zeta^{phi(n)-1} modulo the n-th cyclotomic polynomial.
//
// Canonical form: the conductor n is minimal for the element (in particular
// rationals always have n = 1) and is never congruent to 2 mod 4. Equality
// is therefore plain component comparison.
class CycloNumber {
 public:
  CycloNumber() : n_(1), c_{Rational(0)} {}
  CycloNumber(const Rational& r) : n_(1), c_{r} {}
  CycloNumber(long v) : n_(1), c_{Rational(v)} {}
  CycloNumber(int v) : n_(1), c_{Rational(v)} {}

  // zeta_n^k
  static CycloNumber root_of_unity(int n, long k = 1);
  static CycloNumber i();
  static CycloNumber sqrt2();
  static CycloNumber sqrt5();
  static CycloNumber sqrt_minus3();
  // Exact square root of an integer, as a cyclotomic number (Gauss sums).
  static CycloNumber sqrt_integer(long k);

  int conductor() const { return n_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const { return n_ == 1 && c_[0] == 0; }
  bool is_rational() const { return n_ == 1; }
  const Rational& rational_value() const;  // throws unless is_rational()

  CycloNumber operator+(const CycloNumber& o) const;
  CycloNumber operator-(const CycloNumber& o) const;
  CycloNumber operator-() const;
  CycloNumber operator*(const CycloNumber& o) const;
  CycloNumber operator/(const CycloNumber& o) const;
  CycloNumber inverse() const;
  CycloNumber pow(long e) const;
  // Complex conjugation (the Galois automorphism zeta -> zeta^{-1}).
  CycloNumber conj() const;

  CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
  CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

  bool operator==(const CycloNumber& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const CycloNumber& o) const { return !(*this == o); }
  // Total order for use as container key (conductor, then coords).
  bool operator<(const CycloNumber& o) const;

  // Pretty form, e.g. "1/2 + z8 - z8^3" (z{n} denotes a primitive n-th root).
  std::string str() const;
  // Compact unambiguous key "n:c0,c1,...".
  std::string key() const;

  // Multiplicative order if the element is a root of unity, else 0.
  long root_of_unity_order() const;

 private:
  CycloNumber(int n, std::vector<Rational> c, bool canonical);
  void canonicalize();
  static std::vector<Rational> embed(const CycloNumber& x, int m);

  int n_;
  std::vector<Rational> c_;
};

inline CycloNumber operator*(const Rational& r, const CycloNumber& x) {
  return CycloNumber(r) * x;
}

}  // namespace cremona
