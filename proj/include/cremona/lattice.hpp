#pragma once

#include <string>
#include <vector>

namespace cremona {

// Vector in the hyperbolic lattice Z^{1,N}: coordinates (a0; a1, ..., aN)
// with intersection form a0*b0 - sum ai*bi.
using LatticeVec = std::vector<long>;

// Square integer matrix acting on lattice vectors (column convention).
struct IntMat {
  int n = 0;
  std::vector<int> a;  // row-major, n*n

  static IntMat identity(int n);
  int at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }
  int& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  IntMat operator*(const IntMat& o) const;
  bool operator==(const IntMat& o) const { return n == o.n && a == o.a; }
  bool operator<(const IntMat& o) const { return a < o.a; }
  LatticeVec apply(const LatticeVec& v) const;
  IntMat transpose() const;
  long trace() const;
  std::string key() const;  // compact bytewise key for hashing
  std::string str() const;  // rows like [a b c; d e f; ...]
};

long inner_product(const LatticeVec& x, const LatticeVec& y);

// Canonical class coordinates: k_N = (-3; 1, ..., 1).
LatticeVec canonical_class(int N);

// Simple roots of the sublattice orthogonal to k_N:
// alpha_1 = e0 - e1 - e2 - e3, alpha_i = e_{i-1} - e_i for 2 <= i <= N.
std::vector<LatticeVec> simple_roots(int N);

// Reflection in a (-2)-vector: x -> x + (x, alpha) alpha, as a matrix.
IntMat reflection_matrix(const LatticeVec& alpha);

// All roots {a : (a,a) = -2, (a,k) = 0}, lexicographically sorted.
// Route "scan": bounded coefficient search. Route "orbit": closure of the
// simple roots under the simple reflections. Both agree; tests enforce it.
std::vector<LatticeVec> enumerate_roots_scan(int N);
std::vector<LatticeVec> enumerate_roots_orbit(int N);

// Exceptional classes {v : (v,v) = -1, (v,k) = -1}, sorted.
std::vector<LatticeVec> exceptional_classes(int N);

// Notation "a0;a1,a2,..." used in data files and CLI output.
std::string vec_str(const LatticeVec& v);
LatticeVec vec_parse(const std::string& s);

}  // namespace cremona
