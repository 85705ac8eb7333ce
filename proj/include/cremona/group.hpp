#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

namespace cremona {

// A finite group materialized as a multiplication table over element indices.
// Index 0 is the identity. Element semantics (matrices, signed permutations,
// monomial maps, ...) live with the caller; the table is the group.
struct FiniteGroup {
  int n = 0;
  std::vector<uint16_t> mul;       // n*n row-major: mul[a*n+b] = a*b
  std::vector<uint16_t> invs;      // precomputed inverses
  std::vector<int> gens;           // indices of a generating set (identity excluded)
  std::vector<std::string> names;  // optional element names (empty or size n)

  int op(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }
  int inv(int a) const { return invs[a]; }
  int conj(int g, int h) const { return op(op(inv(g), h), g); }  // h^g = g^-1 h g
  long element_order(int a) const;
  bool is_abelian() const;

  // Validates table axioms (identity row/column, inverses, associativity spot
  // checks are implied by construction; this checks closure bounds + identity).
  void finalize();
};

// --- Closure of concrete element types -------------------------------------

// Builds the full group generated by `gens` by breadth-first closure and
// materializes the multiplication table. E needs nothing but the two callables:
// mulf(a, b) -> E and keyf(a) -> hashable key (uniquely identifying the value).
// Throws std::runtime_error mentioning the partial size if `bound` is exceeded.
template <class E, class MulFn, class KeyFn>
FiniteGroup build_group(const E& id, const std::vector<E>& gens, MulFn mulf, KeyFn keyf,
                        std::type_identity_t<std::vector<E>*> elements_out = nullptr,
                        size_t bound = 1000000) {
  using Key = decltype(keyf(id));
  std::vector<E> elems;
  std::unordered_map<Key, int> idx;
  elems.push_back(id);
  idx.emplace(keyf(id), 0);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      E p = mulf(elems[i], g);  // copy elems[i] reference may dangle after push_back
      Key k = keyf(p);
      auto it = idx.find(k);
      if (it == idx.end()) {
        if (elems.size() >= bound)
          throw std::runtime_error("closure bound exceeded; partial size " +
                                   std::to_string(elems.size()));
        idx.emplace(std::move(k), static_cast<int>(elems.size()));
        elems.push_back(std::move(p));
      }
    }
  }
  const size_t n = elems.size();
  if (n > 65535)
    throw std::runtime_error("group too large for a multiplication table: " +
                             std::to_string(n));
  FiniteGroup G;
  G.n = static_cast<int>(n);
  G.mul.resize(n * n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      G.mul[a * n + b] = static_cast<uint16_t>(idx.at(keyf(mulf(elems[a], elems[b]))));
  for (const auto& g : gens) {
    int gi = idx.at(keyf(g));
    bool seen = gi == 0;
    for (int e : G.gens) seen = seen || e == gi;
    if (!seen) G.gens.push_back(gi);
  }
  G.finalize();
  if (elements_out) *elements_out = std::move(elems);
  return G;
}

// --- Subgroup machinery ------------------------------------------------------

// Closure of a seed set inside the ambient table group; sorted element indices.
std::vector<int> closed_subgroup(const FiniteGroup& G, const std::vector<int>& seed,
                                 int abort_above = -1);

// One conjugacy class of subgroups: the lexicographically least conjugate is
// the representative.
struct SubgroupClass {
  std::vector<int> elems;  // sorted element indices of the representative
  std::vector<int> gens;   // a generating set of the representative
  long class_size = 1;     // number of distinct conjugate subgroups
};

// Every subgroup of order <= max_order, one representative per conjugacy
// class, by layered closure over cyclic extensions. Hard order cap 2000.
std::vector<SubgroupClass> subgroups_up_to_conjugacy(const FiniteGroup& G, int max_order);

// All index-2 subgroups, via the closure of squares (the quotient by it is the
// largest elementary-abelian-2 quotient) and its F_2 hyperplanes.
std::vector<std::vector<int>> index2_subgroups(const FiniteGroup& G);

// Reindexes a subgroup (sorted element indices, containing 0) as a standalone
// group; names carried over when present.
FiniteGroup subgroup_as_group(const FiniteGroup& G, const std::vector<int>& elems);

// Quotient by a normal subgroup (verified); elements are cosets.
FiniteGroup quotient_group(const FiniteGroup& G, const std::vector<int>& normal_elems);

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);

// Goursat (fibered) product: {(a,b) : alpha[a] = beta[b]} inside A x B, where
// alpha: A -> D and beta: B -> D are surjective homomorphisms given by image
// index tables. Verifies both maps and the order formula |A||B|/|D|.
FiniteGroup goursat_product(const FiniteGroup& A, const FiniteGroup& B,
                            const std::vector<int>& alpha, const std::vector<int>& beta,
                            const FiniteGroup& D);

// Semidirect product N x| H. aut_for_hgen[i] is the automorphism of N (as an
// index permutation) implemented by H's generator gens[i]; the action of every
// H element is derived by composition and checked for consistency.
FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& H,
                               const std::vector<std::vector<int>>& aut_for_hgen);

// The automorphism of G sending gens[i] to images[i]; throws if that map does
// not extend to an automorphism.
std::vector<int> automorphism_from_gen_images(const FiniteGroup& G,
                                              const std::vector<int>& gen_from,
                                              const std::vector<int>& gen_to);

// --- Invariants and isomorphism ---------------------------------------------

struct GroupFingerprint {
  long order = 1;
  std::map<long, long> order_histogram;    // element order -> count
  long center_order = 1;
  std::vector<long> abelianization;        // elementary divisors, sorted
  std::vector<long> derived_series;        // orders, starting at |G|
  std::vector<long> lower_central_series;  // orders, starting at |G|
  long exponent = 1;

  bool operator==(const GroupFingerprint&) const = default;
  std::string str() const;
};

GroupFingerprint fingerprint(const FiniteGroup& G);

// Small deterministic generating sequence (greedy, high element order first).
std::vector<int> greedy_generators(const FiniteGroup& G);

// Exact isomorphism test: fingerprint filter, then backtracking on generator
// images with breadth-first consistency propagation.
bool is_isomorphic(const FiniteGroup& A, const FiniteGroup& B);

// Elementary divisors of a finite abelian group (its primary decomposition),
// sorted ascending. Throws on non-abelian input.
std::vector<long> abelian_elementary_divisors(const FiniteGroup& G);

}  // namespace cremona
