#include "cremona/carter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cremona {

namespace {

UniPoly tk_plus_1(int k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[0] = 1;
  v[k] = 1;
  return UniPoly(std::move(v));
}

UniPoly a_poly(int k) {
  // t^k + ... + 1 = (t^{k+1} - 1)/(t - 1)
  std::vector<Rational> v(k + 1, Rational(1));
  return UniPoly(std::move(v));
}

std::vector<CarterComponent> build_components() {
  std::vector<CarterComponent> t;
  for (int k = 1; k <= 8; ++k)
    t.push_back({"A_" + std::to_string(k), k, k + 1, a_poly(k)});
  for (int k = 4; k <= 8; ++k)
    t.push_back({"D_" + std::to_string(k), k, 2L * k - 2, tk_plus_1(k - 1) * tk_plus_1(1)});
  for (int k = 4; k <= 8; ++k)
    t.push_back({"D_" + std::to_string(k) + "(a_1)", k, std::lcm(2L * k - 4, 4L),
                 tk_plus_1(k - 2) * tk_plus_1(2)});
  for (int k = 6; k <= 8; ++k)
    t.push_back({"D_" + std::to_string(k) + "(a_2)", k, std::lcm(2L * k - 6, 6L),
                 tk_plus_1(k - 3) * tk_plus_1(3)});
  t.push_back({"D_8(a_3)", 8, 8, tk_plus_1(4) * tk_plus_1(4)});

  const UniPoly& phi3 = cyclotomic_polynomial(3);
  const UniPoly& phi6 = cyclotomic_polynomial(6);
  t.push_back({"E_6", 6, 12, cyclotomic_polynomial(12) * phi3});
  t.push_back({"E_6(a_1)", 6, 9, cyclotomic_polynomial(9)});
  t.push_back({"E_6(a_2)", 6, 6, phi6 * phi6 * phi3});
  t.push_back({"E_7", 7, 18, cyclotomic_polynomial(18) * tk_plus_1(1)});
  t.push_back({"E_7(a_1)", 7, 14, tk_plus_1(7)});
  t.push_back({"E_7(a_2)", 7, 12, cyclotomic_polynomial(12) * tk_plus_1(3)});
  t.push_back({"E_7(a_3)", 7, 30, tk_plus_1(5) * phi6});
  t.push_back({"E_7(a_4)", 7, 6, phi6 * phi6 * tk_plus_1(3)});
  t.push_back({"E_8", 8, 30, cyclotomic_polynomial(30)});
  t.push_back({"E_8(a_1)", 8, 24, cyclotomic_polynomial(24)});
  t.push_back({"E_8(a_2)", 8, 20, cyclotomic_polynomial(20)});
  t.push_back({"E_8(a_3)", 8, 12,
               cyclotomic_polynomial(12) * cyclotomic_polynomial(12)});
  t.push_back({"E_8(a_4)", 8, 18, cyclotomic_polynomial(18) * phi6});
  t.push_back({"E_8(a_5)", 8, 15, cyclotomic_polynomial(15)});
  t.push_back({"E_8(a_6)", 8, 10, cyclotomic_polynomial(10) * cyclotomic_polynomial(10)});
  t.push_back({"E_8(a_7)", 8, 12, cyclotomic_polynomial(12) * phi6 * phi6});
  t.push_back({"E_8(a_8)", 8, 6, phi6 * phi6 * phi6 * phi6});
  return t;
}

const CarterComponent& find_component(const std::string& name) {
  for (const auto& c : carter_components())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown Carter graph: " + name);
}

}  // namespace

const std::vector<CarterComponent>& carter_components() {
  static const std::vector<CarterComponent> table = build_components();
  return table;
}

std::vector<std::string> split_label(const std::string& label) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < label.size()) {
    size_t plus = label.find('+', pos);
    std::string part = label.substr(pos, plus == std::string::npos ? std::string::npos
                                                                   : plus - pos);
    // Strip decorations and whitespace.
    std::string clean;
    for (char c : part)
      if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') clean += c;
    if (clean.empty()) throw std::invalid_argument("empty label part in: " + label);
    int mult = 1;
    size_t i = 0;
    if (std::isdigit(static_cast<unsigned char>(clean[0]))) {
      size_t j = 0;
      while (j < clean.size() && std::isdigit(static_cast<unsigned char>(clean[j]))) ++j;
      mult = std::stoi(clean.substr(0, j));
      i = j;
    }
    std::string name = clean.substr(i);
    if (name.empty() || mult < 1)
      throw std::invalid_argument("bad label part: " + part);
    for (int m = 0; m < mult; ++m) out.push_back(name);
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  // Descending rank, then name, for canonical order.
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    const auto& ca = find_component(a);
    const auto& cb = find_component(b);
    if (ca.rank != cb.rank) return ca.rank > cb.rank;
    return a < b;
  });
  return out;
}

UniPoly label_char_poly(const std::string& label) {
  UniPoly p = UniPoly::constant(1);
  for (const auto& name : split_label(label)) p = p * find_component(name).poly;
  return p;
}

long label_order(const std::string& label) {
  long o = 1;
  for (const auto& name : split_label(label)) o = std::lcm(o, find_component(name).order);
  return o;
}

std::string join_label(std::vector<std::string> parts) {
  if (parts.empty()) return "1";
  std::sort(parts.begin(), parts.end(), [](const std::string& a, const std::string& b) {
    const auto& ca = find_component(a);
    const auto& cb = find_component(b);
    if (ca.rank != cb.rank) return ca.rank > cb.rank;
    return a < b;
  });
  std::string out;
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += parts[i];
    i = j;
  }
  return out;
}

namespace {

void candidates_dfs(const UniPoly& target, size_t from, std::vector<std::string>& cur,
                    int rank_left, std::vector<std::string>& out) {
  if (target.degree() == 0) {
    out.push_back(join_label(cur));
    return;
  }
  const auto& comps = carter_components();
  for (size_t i = from; i < comps.size(); ++i) {
    const auto& c = comps[i];
    if (c.rank > rank_left) continue;
    UniPoly q, r;
    UniPoly::divmod(target, c.poly, q, r);
    if (!r.is_zero()) continue;
    cur.push_back(c.name);
    candidates_dfs(q, i, cur, rank_left - c.rank, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::string> carter_candidates(const UniPoly& char_on_roots, int max_rank) {
  if (char_on_roots.is_zero()) throw std::invalid_argument("zero characteristic polynomial");
  // Strip the fixed part (t-1)^m; Carter graphs carry the moving part only.
  UniPoly target = char_on_roots;
  UniPoly tminus1({-1, 1});
  while (true) {
    UniPoly q, r;
    UniPoly::divmod(target, tminus1, q, r);
    if (!r.is_zero()) break;
    target = q;
  }
  std::vector<std::string> cur, out;
  candidates_dfs(target.monic(), 0, cur, max_rank, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Adjacency lists of the plain Dynkin graphs.
std::vector<std::pair<int, int>> dynkin_edges(char letter, int k) {
  std::vector<std::pair<int, int>> e;
  switch (letter) {
    case 'A':
      for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
      break;
    case 'D':
      for (int i = 0; i + 2 < k; ++i) e.emplace_back(i, i + 1);
      if (k >= 3) e.emplace_back(k - 1, k - 3);
      break;
    case 'E':
      for (int i = 0; i + 2 < k; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(k - 1, 2);
      break;
    default:
      throw std::invalid_argument("unknown Dynkin letter");
  }
  return e;
}

struct EmbedSearch {
  const std::vector<LatticeVec>& roots;
  std::vector<std::vector<long>> gram;         // target Gram (-2 diag, 1 edges, 0 else)
  std::vector<int> comp_of;                    // node -> component id
  std::vector<int> comp_first;                 // component id -> first node
  std::vector<std::string> comp_name;          // for the identical-copy symmetry cut
  std::vector<int> chosen;

  bool ok(int node, int root_idx) const {
    for (int j = 0; j < node; ++j) {
      long ip = inner_product(roots[chosen[j]], roots[root_idx]);
      if (ip != gram[j][node]) return false;
    }
    return true;
  }

  bool dfs(int node) {
    if (node == static_cast<int>(gram.size())) return true;
    int lo = 0;
    int c = comp_of[node];
    if (node == comp_first[c] && c > 0 && comp_name[c] == comp_name[c - 1])
      lo = chosen[comp_first[c - 1]] + 1;  // identical components: force order
    for (int r = lo; r < static_cast<int>(roots.size()); ++r) {
      if (!ok(node, r)) continue;
      chosen[node] = r;
      if (dfs(node + 1)) return true;
    }
    return false;
  }
};

std::string plain_hull(const std::string& name) {
  size_t paren = name.find('(');
  return paren == std::string::npos ? name : name.substr(0, paren);
}

}  // namespace

bool label_realizable(const std::string& label, const std::vector<LatticeVec>& roots) {
  if (label == "1") return true;  // empty graph embeds trivially
  std::vector<std::string> parts = split_label(label);
  EmbedSearch s{roots, {}, {}, {}, {}, {}};
  int total = 0;
  std::vector<std::pair<char, int>> comps;
  for (const auto& p : parts) {
    std::string hull = plain_hull(p);
    char letter = hull[0];
    int k = std::stoi(hull.substr(2));
    comps.emplace_back(letter, k);
    s.comp_first.push_back(total);
    s.comp_name.push_back(hull);
    total += k;
  }
  s.gram.assign(total, std::vector<long>(total, 0));
  for (int i = 0; i < total; ++i) s.gram[i][i] = -2;
  int base = 0;
  for (size_t c = 0; c < comps.size(); ++c) {
    for (auto [x, y] : dynkin_edges(comps[c].first, comps[c].second)) {
      s.gram[base + x][base + y] = 1;
      s.gram[base + y][base + x] = 1;
    }
    for (int i = 0; i < comps[c].second; ++i) s.comp_of.push_back(static_cast<int>(c));
    base += comps[c].second;
  }
  s.chosen.assign(total, -1);
  return s.dfs(0);
}

std::vector<std::string> carter_candidates_realizable(
    const UniPoly& char_on_roots, int max_rank, const std::vector<LatticeVec>& roots) {
  std::vector<std::string> out;
  for (const auto& cand : carter_candidates(char_on_roots, max_rank))
    if (label_realizable(cand, roots)) out.push_back(cand);
  return out;
}

}  // namespace cremona
