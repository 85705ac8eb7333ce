#pragma once

#include "cremona/lattice.hpp"
#include "cremona/unipoly.hpp"

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

namespace cremona {

// The Weyl group W_N acting on Z^{1,N}, generated by the simple reflections.
struct WeylGroup {
  int N = 0;
  std::vector<IntMat> generators;
  std::vector<IntMat> elements;       // BFS order; elements[0] = identity
  std::unordered_map<std::string, int> index;
  // BFS word data: element i is elements[parent[i]] * generators[gen[i]].
  std::vector<int> parent, gen;

  size_t order() const { return elements.size(); }
  int find(const IntMat& m) const;
  // Word in the simple reflections (1-based generator numbers), id -> {}.
  std::vector<int> word(int i) const;
  std::string word_str(int i) const;
};

// Generate W_N by closure. N in [3,6] is cheap; N = 7 takes ~1.5 GB and a
// few minutes and is only reachable behind the CLI --large flag; N = 8 is
// refused (order 696729600).
WeylGroup generate_weyl(int N);

struct ConjClass {
  int rep = 0;                 // index of the lexicographically least member
  std::vector<int> members;    // ascending element indices
  size_t size() const { return members.size(); }
};

// Conjugacy classes via conjugation-orbit search under the generators,
// returned sorted by (size, rep matrix) for determinism.
std::vector<ConjClass> conjugacy_classes(const WeylGroup& W);

UniPoly char_poly(const IntMat& m);
// w fixes k_N, so (t-1) divides the full characteristic polynomial; this is
// the quotient, i.e. the characteristic polynomial on the root sublattice.
UniPoly char_poly_on_root_lattice(const IntMat& m);
long trace_on_root_lattice(const IntMat& m);
long element_order(const IntMat& m);

// ---- signed permutation model of W(D5) ----
//
// W(D5) = permutations of the five pencil classes u_0..u_4 together with an
// even number of sign switches; allowing odd switch sets as well gives the
// ambient group W(B5) = W(D5) x {±1}.
struct SignedPerm {
  std::array<uint8_t, 5> p{0, 1, 2, 3, 4};
  uint8_t flips = 0;  // bit i set: u_i -> -u_{p[i]}

  static SignedPerm identity() { return SignedPerm{}; }
  SignedPerm operator*(const SignedPerm& o) const;  // this after o
  SignedPerm inverse() const;
  bool operator==(const SignedPerm& o) const { return p == o.p && flips == o.flips; }
  bool operator<(const SignedPerm& o) const;
  uint64_t key() const;
  bool even_flip() const { return __builtin_popcount(flips) % 2 == 0; }
  int trace() const;  // trace of the 5x5 signed permutation matrix
  std::string str() const;  // cycle notation like "(01)(234) i_{03}"
};

std::vector<SignedPerm> signed_weyl_d5();  // order 1920
std::vector<SignedPerm> signed_weyl_b5();  // order 3840

// Lattice side of the model: u_i = e_0 - e_{i+1} + k/2 are orthogonal
// (-1)-vectors spanning (k_5)-perp over Q.
IntMat signed_to_lattice(const SignedPerm& w);
SignedPerm lattice_to_signed(const IntMat& m);

// Signed cycle type: lengths of positive and negative cycles, descending.
struct SignedCycleType {
  std::vector<int> pos, neg;
  bool operator==(const SignedCycleType& o) const { return pos == o.pos && neg == o.neg; }
  std::string str() const;
};
SignedCycleType signed_cycle_type(const SignedPerm& w);

// Carter graph label from the signed cycle type: positive k-cycles give
// A_{k-1}; negative cycles pair up (descending, consecutive) as (i,j) ->
// D_{i+1} if j == 1 else D_{i+j}(a_{j-1}), with D_2 = 2A_1 and D_3 = A_3.
// The toral class with two sign switches is distinguished as "2A_1*".
std::string carter_label_d5(const SignedCycleType& t);

// Characteristic polynomial on C^5 from the cycle type:
// prod (t^k - 1) over positive cycles, prod (t^k + 1) over negative ones.
UniPoly signed_char_poly(const SignedCycleType& t);

}  // namespace cremona
