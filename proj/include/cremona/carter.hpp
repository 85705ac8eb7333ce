#pragma once

#include "cremona/lattice.hpp"
#include "cremona/unipoly.hpp"

#include <string>
#include <vector>

namespace cremona {

// Vocabulary of Carter graphs (connected admissible diagrams) up to rank 8,
// with element order and characteristic polynomial on the span.
struct CarterComponent {
  std::string name;
  int rank;
  long order;
  UniPoly poly;
};

const std::vector<CarterComponent>& carter_components();

// Parse a sum label like "A_5+A_1", "3A_2", "A_3+2A_1", "D_4(a_1)".
// Returns the component names with multiplicity, descending rank.
std::vector<std::string> split_label(const std::string& label);

// Product of the component polynomials of a sum label.
UniPoly label_char_poly(const std::string& label);

// lcm of the component orders of a sum label.
long label_order(const std::string& label);

// Canonical formatting of a multiset of component names.
std::string join_label(std::vector<std::string> parts);

// All sum labels (multisets of components) whose characteristic polynomial
// equals the given one. max_rank bounds the component rank considered.
std::vector<std::string> carter_candidates(const UniPoly& char_on_roots, int max_rank);

// A label is realizable in a root system if the plain hull of its graph
// (A_k for A_k, D_k for D_k(a_j), E_k for E_k(a_j)) embeds as a set of roots
// with the corresponding Dynkin Gram matrix, components mutually orthogonal.
bool label_realizable(const std::string& label, const std::vector<LatticeVec>& roots);

// carter_candidates filtered by realizability in the given root system.
std::vector<std::string> carter_candidates_realizable(
    const UniPoly& char_on_roots, int max_rank, const std::vector<LatticeVec>& roots);

}  // namespace cremona
