#pragma once

#include "cremona/cyclo.hpp"

#include <map>
#include <string>
#include <vector>

namespace cremona {

// Exponent vector; length = number of variables of the ambient ring.
using Monomial = std::vector<int>;

// Graded lexicographic order (total degree first, then lex).
struct GrLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial over the union of cyclotomic fields.
class MultiPoly {
 public:
  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const CycloNumber& c);
  static MultiPoly variable(int nvars, int index);
  static MultiPoly monomial(Monomial m, const CycloNumber& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const CycloNumber& constant_value() const;  // throws unless constant
  int total_degree() const;                   // -1 for zero
  int degree_in(int var) const;
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, CycloNumber, GrLexLess>& terms() const { return terms_; }

  // Leading term in grlex order; throws on zero.
  const Monomial& leading_monomial() const;
  const CycloNumber& leading_coeff() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const CycloNumber& s) const;
  MultiPoly pow(int e) const;
  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  CycloNumber coeff(const Monomial& m) const;
  void set_coeff(const Monomial& m, const CycloNumber& c);

  // Substitute each variable by the given polynomial (all in the same target
  // ring). images.size() must equal nvars().
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  // Evaluate at scalar values.
  CycloNumber eval(const std::vector<CycloNumber>& values) const;
  MultiPoly derivative(int var) const;
  // Divide by the leading coefficient.
  MultiPoly normalized() const;
  // Extend/embed into a ring with more variables (existing vars keep index).
  MultiPoly widen(int new_nvars) const;

  // True if o == c * this for a scalar c (reported in factor); zero handled.
  bool proportional(const MultiPoly& o, CycloNumber& factor) const;

  // Multivariate gcd (primitive PRS over the main variable, Euclid at the
  // univariate base). Result normalized to leading coefficient 1.
  static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

  std::string str(const std::vector<std::string>& names) const;

 private:
  void strip();
  int nvars_;
  std::map<Monomial, CycloNumber, GrLexLess> terms_;
};

// Exact division: throws if b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

}  // namespace cremona
