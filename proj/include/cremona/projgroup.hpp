#pragma once

#include <array>
#include <string>
#include <vector>

#include "cremona/cyclo.hpp"
#include "cremona/group.hpp"

namespace cremona {

// Square matrix over the exact cyclotomic field.
struct CycloMat {
  int m = 0;
  std::vector<CycloNumber> a;  // m*m row-major

  CycloMat() = default;
  explicit CycloMat(int mm) : m(mm), a(static_cast<size_t>(mm) * mm, CycloNumber(0)) {}
  static CycloMat identity(int mm);

  CycloNumber& at(int i, int j) { return a[static_cast<size_t>(i) * m + j]; }
  const CycloNumber& at(int i, int j) const { return a[static_cast<size_t>(i) * m + j]; }

  CycloMat operator*(const CycloMat& o) const;
  bool operator==(const CycloMat& o) const { return m == o.m && a == o.a; }
  std::string key() const;
  std::string str() const;
};

// An element of the automorphism group of a (weighted) projective space,
// stored as a weight-block matrix modulo the scaling kernel diag(l^{w_i}).
// Coordinates must be ordered by non-decreasing weight with weight 1 first.
// Entries may only connect coordinates of equal weight. With empty weights the
// element is an honest linear map (no projective quotient) — used for the
// binary polyhedral SL(2) models.
struct ProjElem {
  CycloMat mat;
  std::vector<int> weights;  // empty: no quotient; else size == mat.m

  ProjElem() = default;
  ProjElem(CycloMat m_, std::vector<int> w);  // normalizes

  ProjElem operator*(const ProjElem& o) const;
  std::string key() const { return mat.key(); }
  std::string str() const { return mat.str(); }
};

// A monomial projective transformation of P^2: x_i -> scalars[i] * x_{perm[i]},
// normalized projectively so scalars[0] == 1.
struct MonomialElement {
  std::array<int, 3> perm{{0, 1, 2}};
  std::array<CycloNumber, 3> scalars{{CycloNumber(1), CycloNumber(1), CycloNumber(1)}};

  MonomialElement() = default;
  MonomialElement(std::array<int, 3> p, std::array<CycloNumber, 3> s);  // normalizes

  MonomialElement operator*(const MonomialElement& o) const;  // composition this∘o
  std::string key() const;
  std::string str() const;
};

// The transitive imprimitive subgroups of PGL(3): for k == 1 the groups n^2:3
// (or n^2:S_3 with with_s3), for k > 1 with s^2-s+1 = 0 mod k the groups
// G_{n,k,s} = (n x n/k):3, and for k == 3, s = 2 the variant (n x n/3):S_3.
// Returns the group together with its monomial elements via elements_out.
FiniteGroup build_imprimitive(int n, int k, int s, bool with_s3,
                              std::vector<MonomialElement>* elements_out = nullptr);

}  // namespace cremona
