#pragma once

#include <string>
#include <vector>

#include "group.hpp"

namespace cremona {

// --- Reference model builders -------------------------------------------------
//
// Small groups materialized as multiplication tables, used both directly in
// tests and as the comparison registry for structure recognition. Labels follow
// the conventions used throughout this project: cyclic groups by their order,
// direct products with 'x', split extensions with ':', non-split with '.',
// dihedral groups D_{2m} by their order, binary dihedral (dicyclic) groups
// Q_{4m} by their order, and binary polyhedral groups 2T, 2O, 2I.

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
// Direct product of cyclic groups of the given orders (all >= 1).
FiniteGroup abelian_group(const std::vector<int>& cyclic_orders);
// Dihedral group of order 2m (m >= 1): <r, s | r^m, s^2, srs = r^-1>.
FiniteGroup dihedral_group(int m);
// Dicyclic (binary dihedral) group of order 4m (m >= 1):
// <a, b | a^{2m} = 1, b^2 = a^m, b^-1 a b = a^-1>.
FiniteGroup dicyclic_group(int m);
FiniteGroup symmetric_group(int n);    // 2 <= n <= 7
FiniteGroup alternating_group(int n);  // 3 <= n <= 7
// The simple group of order 168 acting on the projective line over F_7.
FiniteGroup psl2_7();
// Binary polyhedral groups as closures of explicit SL(2) matrices over
// cyclotomic numbers.
FiniteGroup binary_tetrahedral_group();   // order 24
FiniteGroup binary_octahedral_group();    // order 48
FiniteGroup binary_icosahedral_group();   // order 120
// The Heisenberg group of unipotent 3x3 matrices over F_3 (order 27,
// exponent 3), realized as a monomial projective group.
FiniteGroup heisenberg3_group();

// The nine nonabelian groups of order 16, by label:
//   2xD_8, 2xQ_8, D_16, SD_16, Q_16, M_16, K_16, AS_16, L_16
// where SD_16 is semidihedral, M_16 = <a,b | a^8, b^2, bab^-1 = a^5>,
// K_16 = <a,b | a^4, b^4, b^-1ab = a^-1>, and AS_16 / L_16 are the two
// extensions of 4x2 by an involution acting by b -> a^2 b (a central),
// respectively a -> ab.
const std::vector<std::string>& order16_labels();
FiniteGroup order16_model(const std::string& label);
// Verifies that the invariant key used for order-16 recognition (center
// order, lower central series, element-order histogram, abelianization)
// separates all nine models pairwise. Cheap; run once in tests.
bool order16_key_selftest();

// --- Structure recognition ----------------------------------------------------

struct RecognitionReport {
  std::string label;   // e.g. "2^2x3", "S_4", "2^4:S_3", "unknown(96)"
  std::string method;  // which stage produced the label
  GroupFingerprint fp;
};

// Names the isomorphism type of G where this can be certified:
//   1. the trivial group -> "1"
//   2. abelian groups -> canonical elementary-divisor label
//   3. nonabelian order 16 -> table lookup keyed on invariants that separate
//      all nine isomorphism types
//   4. registry scan: fingerprint filter, then an exact isomorphism search
//      against the reference models above
//   5. direct-product splitting over pairs of normal subgroups (order <= 512)
//   6. extension labeling N:Q (split) or N.Q (non-split) over normal
//      subgroups with recognizable kernel and quotient (order <= 512)
//   7. otherwise "unknown(order)"
// Wrong positives are never produced: every label is backed by an exact
// isomorphism argument (table lookup soundness rests on the order-16
// classification plus the key self-test).
RecognitionReport recognize_full(const FiniteGroup& G);
std::string recognize(const FiniteGroup& G);

// Canonical label of an abelian group from its elementary divisors: divisors
// are grouped into prime-power classes value^multiplicity, printed with
// multiplicities descending (ties broken by ascending value), joined by 'x';
// e.g. [2,2,3] -> "2^2x3", [2,4] -> "2x4", [3,3,2] -> "3^2x2".
std::string abelian_label(const std::vector<long>& elementary_divisors);

}  // namespace cremona
