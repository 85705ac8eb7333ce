#include "cremona/weyl.hpp"

#include "cremona/carter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cremona {

int WeylGroup::find(const IntMat& m) const {
  auto it = index.find(m.key());
  return it == index.end() ? -1 : it->second;
}

std::vector<int> WeylGroup::word(int i) const {
  std::vector<int> w;
  while (i != 0) {
    w.push_back(gen[i] + 1);
    i = parent[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::string WeylGroup::word_str(int i) const {
  std::vector<int> w = word(i);
  if (w.empty()) return "e";
  std::ostringstream out;
  for (size_t j = 0; j < w.size(); ++j) {
    if (j) out << "*";
    out << "s" << w[j];
  }
  return out.str();
}

WeylGroup generate_weyl(int N) {
  if (N < 3 || N > 7)
    throw std::invalid_argument("Weyl group generation supported for 3 <= N <= 7");
  WeylGroup W;
  W.N = N;
  for (const auto& a : simple_roots(N)) W.generators.push_back(reflection_matrix(a));
  IntMat id = IntMat::identity(N + 1);
  W.elements.push_back(id);
  W.parent.push_back(0);
  W.gen.push_back(-1);
  W.index.emplace(id.key(), 0);
  size_t head = 0;
  while (head < W.elements.size()) {
    // Copy, not reference: the vector may reallocate as we append.
    IntMat cur = W.elements[head];
    for (size_t g = 0; g < W.generators.size(); ++g) {
      IntMat nxt = cur * W.generators[g];
      std::string k = nxt.key();
      if (W.index.emplace(k, static_cast<int>(W.elements.size())).second) {
        W.elements.push_back(std::move(nxt));
        W.parent.push_back(static_cast<int>(head));
        W.gen.push_back(static_cast<int>(g));
      }
    }
    ++head;
  }
  return W;
}

std::vector<ConjClass> conjugacy_classes(const WeylGroup& W) {
  size_t n = W.order();
  std::vector<int> cls(n, -1);
  std::vector<ConjClass> classes;
  std::vector<IntMat> geninv;
  for (const auto& g : W.generators) geninv.push_back(g);  // reflections are involutions
  for (size_t start = 0; start < n; ++start) {
    if (cls[start] != -1) continue;
    int id = static_cast<int>(classes.size());
    ConjClass c;
    std::deque<int> queue{static_cast<int>(start)};
    cls[start] = id;
    c.members.push_back(static_cast<int>(start));
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (size_t g = 0; g < W.generators.size(); ++g) {
        IntMat y = W.generators[g] * W.elements[x] * geninv[g];
        int yi = W.find(y);
        if (yi < 0) throw std::logic_error("conjugate escaped the group");
        if (cls[yi] == -1) {
          cls[yi] = id;
          c.members.push_back(yi);
          queue.push_back(yi);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.rep = *std::min_element(c.members.begin(), c.members.end(), [&](int a, int b) {
      return W.elements[a].a < W.elements[b].a;
    });
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [&](const ConjClass& a, const ConjClass& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return W.elements[a.rep].a < W.elements[b.rep].a;
  });
  return classes;
}

UniPoly char_poly(const IntMat& m) {
  // Faddeev-LeVerrier: exact over Q.
  int n = m.n;
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = Rational(m.at(i, j));
  for (int k = 1; k <= n; ++k) {
    // M <- A * (M + c_{n-k+1} I)
    std::vector<std::vector<Rational>> T = M;
    if (k > 1)
      for (int i = 0; i < n; ++i) T[i][i] += coeffs[n - k + 1];
    else
      for (int i = 0; i < n; ++i) T[i][i] = Rational(1);
    std::vector<std::vector<Rational>> MA(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (A[i][l] == 0) continue;
        for (int j = 0; j < n; ++j) MA[i][j] += A[i][l] * T[l][j];
      }
    M = std::move(MA);
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += M[i][i];
    coeffs[n - k] = -tr / Rational(k);
  }
  return UniPoly(std::move(coeffs));
}

UniPoly char_poly_on_root_lattice(const IntMat& m) {
  UniPoly full = char_poly(m);
  UniPoly q, r;
  UniPoly::divmod(full, UniPoly({-1, 1}), q, r);
  if (!r.is_zero())
    throw std::logic_error("matrix does not fix the canonical class (t-1 not a factor)");
  return q;
}

long trace_on_root_lattice(const IntMat& m) { return m.trace() - 1; }

long element_order(const IntMat& m) {
  IntMat id = IntMat::identity(m.n), p = m;
  for (long k = 1; k <= 10000; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  throw std::logic_error("element order exceeds bound");
}

// ---- signed permutation model ----

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  // (this * o)(u_i): apply o first, then this.
  SignedPerm r;
  for (int i = 0; i < 5; ++i) {
    r.p[i] = p[o.p[i]];
    bool neg = ((o.flips >> i) & 1) ^ ((flips >> o.p[i]) & 1);
    if (neg)
      r.flips |= static_cast<uint8_t>(1u << i);
    else
      r.flips &= static_cast<uint8_t>(~(1u << i));
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  for (int i = 0; i < 5; ++i) {
    r.p[p[i]] = static_cast<uint8_t>(i);
    if ((flips >> i) & 1) r.flips |= static_cast<uint8_t>(1u << p[i]);
  }
  return r;
}

bool SignedPerm::operator<(const SignedPerm& o) const {
  if (p != o.p) return p < o.p;
  return flips < o.flips;
}

uint64_t SignedPerm::key() const {
  uint64_t k = flips;
  for (int i = 0; i < 5; ++i) k = k * 8 + p[i];
  return k;
}

int SignedPerm::trace() const {
  int t = 0;
  for (int i = 0; i < 5; ++i)
    if (p[i] == i) t += ((flips >> i) & 1) ? -1 : 1;
  return t;
}

std::string SignedPerm::str() const {
  std::ostringstream out;
  std::array<bool, 5> seen{};
  bool any = false;
  for (int i = 0; i < 5; ++i) {
    if (seen[i] || p[i] == i) continue;
    out << "(";
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      out << j;
      j = p[j];
    }
    out << ")";
    any = true;
  }
  if (!any) out << "e";
  if (flips) {
    out << " i_{";
    for (int i = 0; i < 5; ++i)
      if ((flips >> i) & 1) out << i;
    out << "}";
  }
  return out.str();
}

namespace {
std::vector<SignedPerm> signed_group(bool even_only) {
  std::vector<SignedPerm> out;
  std::array<uint8_t, 5> perm{0, 1, 2, 3, 4};
  do {
    for (uint8_t f = 0; f < 32; ++f) {
      if (even_only && __builtin_popcount(f) % 2 != 0) continue;
      SignedPerm w;
      w.p = perm;
      w.flips = f;
      out.push_back(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}
}  // namespace

std::vector<SignedPerm> signed_weyl_d5() { return signed_group(true); }
std::vector<SignedPerm> signed_weyl_b5() { return signed_group(false); }

namespace {

using RatMat = std::vector<std::vector<Rational>>;

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size();
  RatMat c(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RatMat rat_inverse(RatMat a) {
  size_t n = a.size();
  RatMat inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular change-of-basis matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational f = Rational(1) / a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational g = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= g * a[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

// Columns: u_0..u_4, k, written in the e-basis of Z^{1,5}.
// u_i = e_0 - e_{i+1} + k/2 with k = (-3; 1, 1, 1, 1, 1).
const RatMat& basis_to_e() {
  static const RatMat C = [] {
    RatMat c(6, std::vector<Rational>(6, Rational(0)));
    for (int i = 0; i < 5; ++i) {
      c[0][i] = Rational(-1, 2);
      for (int r = 1; r <= 5; ++r) c[r][i] = (r == i + 1) ? Rational(-1, 2) : Rational(1, 2);
    }
    c[0][5] = -3;
    for (int r = 1; r <= 5; ++r) c[r][5] = 1;
    return c;
  }();
  return C;
}

const RatMat& e_to_basis() {
  static const RatMat Cinv = rat_inverse(basis_to_e());
  return Cinv;
}

}  // namespace

IntMat signed_to_lattice(const SignedPerm& w) {
  RatMat D(6, std::vector<Rational>(6, Rational(0)));
  for (int i = 0; i < 5; ++i) D[w.p[i]][i] = ((w.flips >> i) & 1) ? -1 : 1;
  D[5][5] = 1;
  RatMat M = rat_mul(basis_to_e(), rat_mul(D, e_to_basis()));
  IntMat out;
  out.n = 6;
  out.a.assign(36, 0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const Rational& v = M[i][j];
      if (denominator(v) != 1)
        throw std::logic_error("signed permutation image is not integral");
      out.at(i, j) = static_cast<int>(to_long_checked(numerator(v)));
    }
  return out;
}

SignedPerm lattice_to_signed(const IntMat& m) {
  if (m.n != 6) throw std::invalid_argument("expected a 6x6 matrix");
  RatMat Me(6, std::vector<Rational>(6, Rational(0)));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) Me[i][j] = Rational(m.at(i, j));
  RatMat D = rat_mul(e_to_basis(), rat_mul(Me, basis_to_e()));
  SignedPerm w;
  for (int j = 0; j < 5; ++j) {
    int hits = 0;
    for (int i = 0; i < 5; ++i) {
      if (D[i][j] == 0) continue;
      if (D[i][j] == 1) {
        w.p[j] = static_cast<uint8_t>(i);
      } else if (D[i][j] == -1) {
        w.p[j] = static_cast<uint8_t>(i);
        w.flips |= static_cast<uint8_t>(1u << j);
      } else {
        throw std::logic_error("matrix is not a signed permutation on the pencil basis");
      }
      ++hits;
    }
    if (hits != 1 || D[5][j] != 0)
      throw std::logic_error("matrix is not a signed permutation on the pencil basis");
  }
  if (D[5][5] != 1) throw std::logic_error("matrix does not fix the canonical class");
  return w;
}

SignedCycleType signed_cycle_type(const SignedPerm& w) {
  SignedCycleType t;
  std::array<bool, 5> seen{};
  for (int i = 0; i < 5; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i, sign = 1;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      if ((w.flips >> j) & 1) sign = -sign;
      j = w.p[j];
    }
    (sign > 0 ? t.pos : t.neg).push_back(len);
  }
  std::sort(t.pos.rbegin(), t.pos.rend());
  std::sort(t.neg.rbegin(), t.neg.rend());
  return t;
}

std::string SignedCycleType::str() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < pos.size(); ++i) {
    if (i) out << ",";
    out << pos[i];
  }
  out << ";";
  for (size_t i = 0; i < neg.size(); ++i) {
    if (i) out << ",";
    out << neg[i];
  }
  out << ")";
  return out.str();
}

std::string carter_label_d5(const SignedCycleType& t) {
  std::vector<std::string> parts;
  for (int k : t.pos)
    if (k >= 2) parts.push_back("A_" + std::to_string(k - 1));
  if (t.neg.size() % 2 != 0)
    throw std::invalid_argument("odd number of negative cycles outside W(D5)");
  bool has_neg = !t.neg.empty();
  for (size_t i = 0; i + 1 < t.neg.size(); i += 2) {
    int a = t.neg[i], b = t.neg[i + 1];  // a >= b
    int sum = a + b;
    if (b == 1) {
      // D_{a+1}, with D_2 = 2A_1 and D_3 = A_3.
      if (a == 1) {
        parts.push_back("A_1");
        parts.push_back("A_1");
      } else if (a == 2) {
        parts.push_back("A_3");
      } else {
        parts.push_back("D_" + std::to_string(a + 1));
      }
    } else {
      parts.push_back("D_" + std::to_string(sum) + "(a_" + std::to_string(b - 1) + ")");
    }
  }
  if (parts.empty()) return "1";
  std::string label = join_label(parts);
  // The two commuting sign switches form a toral 2A_1 class distinct from the
  // (ab)(cd) one; it is starred in the tables.
  if (label == "2A_1" && has_neg) label += "*";
  return label;
}

UniPoly signed_char_poly(const SignedCycleType& t) {
  UniPoly p = UniPoly::constant(1);
  for (int k : t.pos) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[0] = -1;
    v[k] = 1;
    p = p * UniPoly(std::move(v));
  }
  for (int k : t.neg) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[0] = 1;
    v[k] = 1;
    p = p * UniPoly(std::move(v));
  }
  return p;
}

}  // namespace cremona
