#include "cremona/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cremona {

IntMat IntMat::identity(int n) {
  IntMat m;
  m.n = n;
  m.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  IntMat out;
  out.n = n;
  out.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

LatticeVec IntMat::apply(const LatticeVec& v) const {
  LatticeVec out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += at(i, j) * v[j];
  return out;
}

IntMat IntMat::transpose() const {
  IntMat out = *this;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = at(j, i);
  return out;
}

long IntMat::trace() const {
  long t = 0;
  for (int i = 0; i < n; ++i) t += at(i, i);
  return t;
}

std::string IntMat::key() const {
  return std::string(reinterpret_cast<const char*>(a.data()), a.size() * sizeof(int));
}

std::string IntMat::str() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < n; ++i) {
    if (i) out << "; ";
    for (int j = 0; j < n; ++j) {
      if (j) out << " ";
      out << at(i, j);
    }
  }
  out << "]";
  return out.str();
}

long inner_product(const LatticeVec& x, const LatticeVec& y) {
  if (x.size() != y.size()) throw std::logic_error("lattice vector size mismatch");
  long s = x[0] * y[0];
  for (size_t i = 1; i < x.size(); ++i) s -= x[i] * y[i];
  return s;
}

LatticeVec canonical_class(int N) {
  LatticeVec k(N + 1, 1);
  k[0] = -3;
  return k;
}

std::vector<LatticeVec> simple_roots(int N) {
  if (N < 3) throw std::invalid_argument("need at least 3 blown-up points");
  std::vector<LatticeVec> roots;
  LatticeVec a1(N + 1, 0);
  a1[0] = 1;
  a1[1] = a1[2] = a1[3] = -1;
  roots.push_back(a1);
  for (int i = 2; i <= N; ++i) {
    LatticeVec ai(N + 1, 0);
    ai[i - 1] = 1;
    ai[i] = -1;
    roots.push_back(ai);
  }
  return roots;
}

IntMat reflection_matrix(const LatticeVec& alpha) {
  if (inner_product(alpha, alpha) != -2)
    throw std::invalid_argument("reflection vector must have self-intersection -2");
  int n = static_cast<int>(alpha.size());
  IntMat m = IntMat::identity(n);
  // s(x) = x + (x, alpha) alpha = (I + alpha * (G alpha)^T) x, G = diag(1,-1,...,-1).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long g = (j == 0) ? alpha[j] : -alpha[j];
      m.at(i, j) += static_cast<int>(alpha[i] * g);
    }
  return m;
}

namespace {

// Enumerate integer vectors with prescribed values of (v,v) and (v,k).
// From (v,k) = -3 a0 - sum ai and (v,v) = a0^2 - sum ai^2 we scan a0 in a
// Cauchy-Schwarz window and then fill a1..aN by DFS with sum/square budgets.
void dfs_fill(int N, int idx, long sum_left, long sq_left, LatticeVec& cur,
              std::vector<LatticeVec>& out) {
  if (idx > N) {
    if (sum_left == 0 && sq_left == 0) out.push_back(cur);
    return;
  }
  int remaining = N - idx + 1;
  // |ai| <= sqrt(sq_left); and the rest must reach sum_left.
  long bound = static_cast<long>(std::sqrt(static_cast<double>(sq_left))) + 1;
  for (long v = -bound; v <= bound; ++v) {
    long sq = v * v;
    if (sq > sq_left) continue;
    long sl = sum_left - v, ql = sq_left - sq;
    // Cauchy-Schwarz feasibility for the remaining slots.
    long rem = remaining - 1;
    if (rem == 0) {
      if (sl != 0 || ql != 0) continue;
    } else if (sl * sl > rem * ql) {
      continue;
    }
    cur[idx] = v;
    dfs_fill(N, idx + 1, sl, ql, cur, out);
    cur[idx] = 0;
  }
}

std::vector<LatticeVec> enumerate_by_invariants(int N, long self, long with_k) {
  std::vector<LatticeVec> out;
  // (v,k) = with_k  =>  sum ai = -3 a0 - with_k
  // (v,v) = self    =>  sum ai^2 = a0^2 - self
  for (long a0 = -12; a0 <= 12; ++a0) {
    long sum = -3 * a0 - with_k;
    long sq = a0 * a0 - self;
    if (sq < 0) continue;
    if (sum * sum > static_cast<long>(N) * sq) continue;
    LatticeVec cur(N + 1, 0);
    cur[0] = a0;
    dfs_fill(N, 1, sum, sq, cur, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LatticeVec> enumerate_roots_scan(int N) {
  return enumerate_by_invariants(N, -2, 0);
}

std::vector<LatticeVec> enumerate_roots_orbit(int N) {
  std::vector<LatticeVec> simples = simple_roots(N);
  std::vector<IntMat> refl;
  for (const auto& a : simples) refl.push_back(reflection_matrix(a));
  std::set<LatticeVec> seen(simples.begin(), simples.end());
  std::vector<LatticeVec> frontier(simples);
  while (!frontier.empty()) {
    std::vector<LatticeVec> next;
    for (const auto& v : frontier)
      for (const auto& m : refl) {
        LatticeVec w = m.apply(v);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  // Roots come in +/- pairs; the orbit of the simples under the full set of
  // simple reflections already contains both signs.
  std::vector<LatticeVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVec> exceptional_classes(int N) {
  return enumerate_by_invariants(N, -1, -1);
}

std::string vec_str(const LatticeVec& v) {
  std::ostringstream out;
  out << v[0] << ";";
  for (size_t i = 1; i < v.size(); ++i) {
    if (i > 1) out << ",";
    out << v[i];
  }
  return out.str();
}

LatticeVec vec_parse(const std::string& s) {
  LatticeVec v;
  size_t semi = s.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("missing ';' in vector: " + s);
  v.push_back(std::stol(s.substr(0, semi)));
  size_t pos = semi + 1;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
    if (!tok.empty()) v.push_back(std::stol(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return v;
}

}  // namespace cremona
