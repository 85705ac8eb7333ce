#include "cremona/recognize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cremona/cyclo.hpp"
#include "cremona/projgroup.hpp"
#include "cremona/weyl.hpp"

namespace cremona {

namespace {

FiniteGroup from_table(int n, std::vector<uint16_t> mul, std::vector<int> gens) {
  FiniteGroup G;
  G.n = n;
  G.mul = std::move(mul);
  G.gens = std::move(gens);
  G.finalize();
  return G;
}

void expect_order(const FiniteGroup& G, long order, const char* what) {
  if (G.n != order)
    throw std::logic_error(std::string("reference model ") + what + " has order " +
                           std::to_string(G.n) + ", expected " + std::to_string(order));
}

// --- permutation closures ---

using Perm = std::vector<uint8_t>;

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), static_cast<uint8_t>(0));
  return p;
}

FiniteGroup perm_closure(int n, const std::vector<Perm>& gens) {
  auto mulf = [](const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
  };
  auto keyf = [](const Perm& a) { return std::string(a.begin(), a.end()); };
  return build_group(perm_identity(n), gens, mulf, keyf);
}

// --- exact matrix closures ---

CycloMat mat2(const CycloNumber& a, const CycloNumber& b, const CycloNumber& c,
              const CycloNumber& d) {
  CycloMat m(2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

FiniteGroup mat_closure(const std::vector<CycloMat>& gens, long order, const char* what) {
  auto mulf = [](const CycloMat& a, const CycloMat& b) { return a * b; };
  auto keyf = [](const CycloMat& a) { return a.key(); };
  FiniteGroup G = build_group(CycloMat::identity(2), gens, mulf, keyf);
  expect_order(G, order, what);
  return G;
}

// --- signed permutation closures (subgroups of the hyperoctahedral group) ---

SignedPerm sflip(uint8_t mask) {
  SignedPerm w;
  w.flips = mask;
  return w;
}

SignedPerm sperm(const std::array<uint8_t, 5>& p) {
  SignedPerm w;
  w.p = p;
  return w;
}

FiniteGroup signed_closure(const std::vector<SignedPerm>& gens, long order, const char* what) {
  auto mulf = [](const SignedPerm& a, const SignedPerm& b) { return a * b; };
  auto keyf = [](const SignedPerm& a) { return a.key(); };
  FiniteGroup G = build_group(SignedPerm::identity(), gens, mulf, keyf);
  expect_order(G, order, what);
  return G;
}

}  // namespace

// --- elementary builders -------------------------------------------------------

FiniteGroup trivial_group() { return from_table(1, {0}, {}); }

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
  std::vector<int> gens;
  if (n > 1) gens.push_back(1);
  return from_table(n, std::move(mul), std::move(gens));
}

FiniteGroup abelian_group(const std::vector<int>& cyclic_orders) {
  FiniteGroup G = trivial_group();
  for (int o : cyclic_orders) G = direct_product(G, cyclic_group(o));
  return G;
}

FiniteGroup dihedral_group(int m) {
  if (m < 1) throw std::invalid_argument("dihedral_group: m must be positive");
  const int n = 2 * m;
  auto id = [m](int i, int j) { return i + m * j; };
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n);
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 == 0 ? (i1 + i2) % m : ((i1 - i2) % m + m) % m;
          mul[static_cast<size_t>(id(i1, j1)) * n + id(i2, j2)] =
              static_cast<uint16_t>(id(i, j1 ^ j2));
        }
  std::vector<int> gens{id(0, 1)};
  if (m > 1) gens.insert(gens.begin(), id(1, 0));
  return from_table(n, std::move(mul), std::move(gens));
}

FiniteGroup dicyclic_group(int m) {
  if (m < 1) throw std::invalid_argument("dicyclic_group: m must be positive");
  const int n = 4 * m;
  const int c = 2 * m;  // order of the cyclic part <a>
  auto id = [c](int i, int j) { return i + c * j; };
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n);
  for (int i1 = 0; i1 < c; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < c; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // a^i1 b^j1 a^i2 b^j2 with b a = a^-1 b and b^2 = a^m.
          int i, j;
          if (j1 == 0) {
            i = (i1 + i2) % c;
            j = j2;
          } else if (j2 == 0) {
            i = ((i1 - i2) % c + c) % c;
            j = 1;
          } else {
            i = ((i1 - i2 + m) % c + c) % c;
            j = 0;
          }
          mul[static_cast<size_t>(id(i1, j1)) * n + id(i2, j2)] =
              static_cast<uint16_t>(id(i, j));
        }
  return from_table(n, std::move(mul), {1, id(0, 1)});
}

FiniteGroup symmetric_group(int n) {
  if (n < 2 || n > 7) throw std::invalid_argument("symmetric_group: need 2 <= n <= 7");
  Perm t = perm_identity(n);
  std::swap(t[0], t[1]);
  Perm c(n);
  for (int i = 0; i < n; ++i) c[i] = static_cast<uint8_t>((i + 1) % n);
  FiniteGroup G = perm_closure(n, {t, c});
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  expect_order(G, f, "symmetric group");
  return G;
}

FiniteGroup alternating_group(int n) {
  if (n < 3 || n > 7) throw std::invalid_argument("alternating_group: need 3 <= n <= 7");
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < n; ++i) {
    Perm g = perm_identity(n);
    g[i] = static_cast<uint8_t>(i + 1);
    g[i + 1] = static_cast<uint8_t>(i + 2);
    g[i + 2] = static_cast<uint8_t>(i);
    gens.push_back(g);
  }
  FiniteGroup G = perm_closure(n, gens);
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  expect_order(G, f / 2, "alternating group");
  return G;
}

FiniteGroup psl2_7() {
  // Action on the projective line over F_7: points 0..6 and 7 = infinity,
  // generated by z -> z+1 and z -> -1/z.
  Perm s{1, 2, 3, 4, 5, 6, 0, 7};
  Perm t{7, 6, 3, 2, 5, 4, 1, 0};
  FiniteGroup G = perm_closure(8, {s, t});
  expect_order(G, 168, "PSL(2,7)");
  return G;
}

FiniteGroup binary_tetrahedral_group() {
  CycloNumber i = CycloNumber::i();
  CycloNumber c = (i - CycloNumber(1)).inverse();
  CycloMat g1 = mat2(i, CycloNumber(0), CycloNumber(0), -i);
  CycloMat g2 = mat2(CycloNumber(0), i, i, CycloNumber(0));
  CycloMat g3 = mat2(c * i, c * i, c, -c);
  return mat_closure({g1, g2, g3}, 24, "binary tetrahedral group");
}

FiniteGroup binary_octahedral_group() {
  CycloNumber i = CycloNumber::i();
  CycloNumber e8 = CycloNumber::root_of_unity(8);
  CycloNumber c = (i - CycloNumber(1)).inverse();
  CycloMat g1 = mat2(e8, CycloNumber(0), CycloNumber(0), CycloNumber::root_of_unity(8, 7));
  CycloMat g2 = mat2(CycloNumber(0), i, i, CycloNumber(0));
  CycloMat g3 = mat2(c * i, c * i, c, -c);
  return mat_closure({g1, g2, g3}, 48, "binary octahedral group");
}

FiniteGroup binary_icosahedral_group() {
  // Two generators suffice: the order-10 diagonal rotation and the standard
  // icosahedral involution-lift. (The antidiagonal matrix [[0,i],[i,0]] used
  // for the dihedral, tetrahedral, and octahedral groups is NOT an element of
  // this group — its product with g3 has trace outside the allowed trace set
  // {0, +-1, +-2, +-golden ratios} — so it must not be added here.)
  auto e5 = [](long k) { return CycloNumber::root_of_unity(5, k); };
  CycloNumber r = CycloNumber::sqrt5().inverse();
  CycloMat g1 = mat2(CycloNumber::root_of_unity(10), CycloNumber(0), CycloNumber(0),
                     CycloNumber::root_of_unity(10, 9));
  CycloMat g3 = mat2(r * (e5(1) - e5(4)), r * (e5(2) - e5(3)), r * (e5(2) - e5(3)),
                     r * (e5(4) - e5(1)));
  return mat_closure({g1, g3}, 120, "binary icosahedral group");
}

FiniteGroup heisenberg3_group() {
  FiniteGroup G = build_imprimitive(3, 1, 1, false);
  expect_order(G, 27, "Heisenberg group over F_3");
  return G;
}

// --- the nine nonabelian groups of order 16 -------------------------------------

const std::vector<std::string>& order16_labels() {
  static const std::vector<std::string> labels{"2xD_8", "2xQ_8", "D_16", "SD_16", "Q_16",
                                               "M_16",  "K_16",  "AS_16", "L_16"};
  return labels;
}

FiniteGroup order16_model(const std::string& label) {
  if (label == "2xD_8") return direct_product(cyclic_group(2), dihedral_group(4));
  if (label == "2xQ_8") return direct_product(cyclic_group(2), dicyclic_group(2));
  if (label == "D_16") return dihedral_group(8);
  if (label == "Q_16") return dicyclic_group(4);
  if (label == "SD_16" || label == "M_16") {
    FiniteGroup c8 = cyclic_group(8);
    int img = label == "SD_16" ? 3 : 5;  // a -> a^3 (semidihedral) or a -> a^5
    auto aut = automorphism_from_gen_images(c8, {1}, {img});
    return semidirect_product(c8, cyclic_group(2), {aut});
  }
  if (label == "K_16") {
    FiniteGroup c4 = cyclic_group(4);
    auto inv = automorphism_from_gen_images(c4, {1}, {3});
    return semidirect_product(c4, cyclic_group(4), {inv});
  }
  if (label == "AS_16" || label == "L_16") {
    // N = 4 x 2 with a = (1,0), b = (0,1); the involution acts by b -> a^2 b
    // (a fixed, AS_16) or by a -> ab (b fixed, L_16).
    FiniteGroup N = direct_product(cyclic_group(4), cyclic_group(2));
    const int a = 2, b = 1, a2b = 5, ab = 3;
    std::vector<int> aut = label == "AS_16"
                               ? automorphism_from_gen_images(N, {a, b}, {a, a2b})
                               : automorphism_from_gen_images(N, {a, b}, {ab, b});
    return semidirect_product(N, cyclic_group(2), {aut});
  }
  throw std::invalid_argument("order16_model: unknown label " + label);
}

namespace {

// The invariant key used to separate the nine nonabelian groups of order 16:
// center order, lower central series, element-order histogram, and
// abelianization. (The first three alone leave K_16 and 2xQ_8 in collision;
// the abelianization — [2,4] against [2,2,2] — resolves it.)
std::string order16_key(const GroupFingerprint& fp) {
  std::ostringstream os;
  os << fp.center_order << "|";
  for (long v : fp.lower_central_series) os << v << ",";
  os << "|";
  for (const auto& [o, c] : fp.order_histogram) os << o << ":" << c << ",";
  os << "|";
  for (long v : fp.abelianization) os << v << ",";
  return os.str();
}

const std::vector<std::pair<std::string, std::string>>& order16_keys() {
  static const std::vector<std::pair<std::string, std::string>> keys = [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& label : order16_labels()) {
      FiniteGroup G = order16_model(label);
      expect_order(G, 16, label.c_str());
      if (G.is_abelian()) throw std::logic_error("order16 model is abelian: " + label);
      out.emplace_back(label, order16_key(fingerprint(G)));
    }
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = i + 1; j < out.size(); ++j)
        if (out[i].second == out[j].second)
          throw std::logic_error("order16 key collision: " + out[i].first + " vs " +
                                 out[j].first);
    return out;
  }();
  return keys;
}

}  // namespace

bool order16_key_selftest() {
  try {
    return order16_keys().size() == 9;
  } catch (const std::logic_error&) {
    return false;
  }
}

// --- recognition registry --------------------------------------------------------

namespace {

struct RefEntry {
  std::string label;
  FiniteGroup G;
  GroupFingerprint fp;
};

// Flip masks for sign-switch subsets of {0..4}.
constexpr uint8_t F01 = 0x03, F12 = 0x06, F23 = 0x0c, F34 = 0x18;
constexpr uint8_t F02 = 0x05, F03 = 0x09, F04 = 0x11;

const std::vector<RefEntry>& registry() {
  static const std::vector<RefEntry> entries = [] {
    std::vector<std::pair<std::string, FiniteGroup>> models;
    models.emplace_back("S_3", symmetric_group(3));
    models.emplace_back("S_4", symmetric_group(4));
    models.emplace_back("S_5", symmetric_group(5));
    models.emplace_back("A_4", alternating_group(4));
    models.emplace_back("A_5", alternating_group(5));
    models.emplace_back("L_2(7)", psl2_7());
    models.emplace_back("2T", binary_tetrahedral_group());
    models.emplace_back("2O", binary_octahedral_group());
    models.emplace_back("2I", binary_icosahedral_group());
    models.emplace_back("H_3(3)", heisenberg3_group());
    models.emplace_back("D_8", dihedral_group(4));
    models.emplace_back("D_10", dihedral_group(5));
    models.emplace_back("D_12", dihedral_group(6));
    models.emplace_back("Q_8", dicyclic_group(2));
    models.emplace_back("Q_12", dicyclic_group(3));

    // Sign-switch models on five letters: the even switch group 2^4 extended
    // by permutation parts.
    const std::vector<SignedPerm> even = {sflip(F01), sflip(F12), sflip(F23), sflip(F34)};
    const SignedPerm c2 = sperm({2, 3, 0, 1, 4});    // (02)(13)
    const SignedPerm c3 = sperm({1, 2, 0, 3, 4});    // (012)
    const SignedPerm c4 = sperm({1, 2, 3, 0, 4});    // (0123)
    const SignedPerm c5 = sperm({1, 2, 3, 4, 0});    // (01234)
    const SignedPerm t2 = sperm({0, 2, 1, 4, 3});    // (12)(34)
    const SignedPerm t5 = sperm({0, 4, 3, 2, 1});    // (14)(23)
    auto with = [&](std::initializer_list<SignedPerm> extra) {
      std::vector<SignedPerm> gens = even;
      gens.insert(gens.end(), extra);
      return gens;
    };
    models.emplace_back("2^4:2", signed_closure(with({c2}), 32, "2^4:2"));
    models.emplace_back("2^4:3", signed_closure(with({c3}), 48, "2^4:3"));
    models.emplace_back("2^4:4", signed_closure(with({c4}), 64, "2^4:4"));
    models.emplace_back("2^4:5", signed_closure(with({c5}), 80, "2^4:5"));
    models.emplace_back("2^4:S_3", signed_closure(with({c3, t2}), 96, "2^4:S_3"));
    models.emplace_back("2^4:D_10", signed_closure(with({c5, t5}), 160, "2^4:D_10"));
    models.emplace_back(
        "2^2:8", signed_closure({sflip(F01), sflip(F02), sflip(F03), c4 * sflip(F04)}, 32,
                                "2^2:8"));
    models.emplace_back(
        "2xA_4", signed_closure({sflip(F01), sflip(F02), sflip(F34), c3}, 24, "2xA_4"));

    std::vector<RefEntry> out;
    out.reserve(models.size());
    for (auto& [label, G] : models) {
      RefEntry e;
      e.label = label;
      e.fp = fingerprint(G);
      e.G = std::move(G);
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

// Wraps a component label when embedding it would make the operator structure
// ambiguous.
std::string wrap_for_product(const std::string& s) {
  if (s.find(':') != std::string::npos || s.find('.') != std::string::npos)
    return "(" + s + ")";
  return s;
}

std::string wrap_for_extension(const std::string& s) {
  if (s.find_first_of(":.x") != std::string::npos) return "(" + s + ")";
  return s;
}

std::string join_direct(long order_a, const std::string& a, long order_b,
                        const std::string& b) {
  std::string pa = wrap_for_product(a), pb = wrap_for_product(b);
  if (order_a > order_b || (order_a == order_b && pa > pb)) std::swap(pa, pb);
  return pa + "x" + pb;
}

bool label_known(const std::string& s) { return s.rfind("unknown(", 0) != 0; }

// Number of common elements of two sorted index lists.
size_t intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0, c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else
      ++c, ++i, ++j;
  }
  return c;
}

}  // namespace

// --- recognition ------------------------------------------------------------------

std::string abelian_label(const std::vector<long>& elementary_divisors) {
  std::map<long, long> count;
  for (long d : elementary_divisors) ++count[d];
  std::vector<std::pair<long, long>> parts(count.begin(), count.end());  // (value, mult)
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << "x";
    os << parts[i].first;
    if (parts[i].second > 1) os << "^" << parts[i].second;
  }
  return os.str();
}

RecognitionReport recognize_full(const FiniteGroup& G) {
  if (G.n > 2000)
    throw std::invalid_argument("recognition is capped at order 2000, got " +
                                std::to_string(G.n));
  RecognitionReport rep;
  rep.fp = fingerprint(G);
  const long n = G.n;

  if (n == 1) {
    rep.label = "1";
    rep.method = "trivial";
    return rep;
  }

  if (G.is_abelian()) {
    rep.label =
        rep.fp.exponent == n ? std::to_string(n) : abelian_label(rep.fp.abelianization);
    rep.method = "abelian";
    return rep;
  }

  if (n == 16) {
    const std::string key = order16_key(rep.fp);
    for (const auto& [label, refkey] : order16_keys())
      if (key == refkey) {
        rep.label = label;
        rep.method = "order-16 table";
        return rep;
      }
    // Unreachable for an actual group of order 16; fall through defensively.
  }

  for (const auto& e : registry()) {
    if (e.G.n != n || !(e.fp == rep.fp)) continue;
    if (is_isomorphic(e.G, G)) {
      rep.label = e.label;
      rep.method = "registry";
      return rep;
    }
  }

  if (n <= 512) {
    auto subs = subgroups_up_to_conjugacy(G, G.n);
    std::vector<const SubgroupClass*> normals;
    for (const auto& s : subs) {
      long m = static_cast<long>(s.elems.size());
      if (s.class_size == 1 && m > 1 && m < n) normals.push_back(&s);
    }
    std::sort(normals.begin(), normals.end(),
              [](const SubgroupClass* a, const SubgroupClass* b) {
                if (a->elems.size() != b->elems.size())
                  return a->elems.size() > b->elems.size();
                return a->elems < b->elems;
              });
    auto sub_abelian = [&](const std::vector<int>& el) {
      for (int a : el)
        for (int b : el)
          if (G.op(a, b) != G.op(b, a)) return false;
      return true;
    };

    // Direct products: N x M with both factors normal and trivially meeting.
    // Prefer pulling out the largest abelian factor.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto* N : normals) {
        if (pass == 0 && !sub_abelian(N->elems)) continue;
        for (const auto* M : normals) {
          if (static_cast<long>(N->elems.size()) * static_cast<long>(M->elems.size()) != n)
            continue;
          if (intersection_size(N->elems, M->elems) != 1) continue;
          std::string la = recognize(subgroup_as_group(G, N->elems));
          std::string lb = recognize(subgroup_as_group(G, M->elems));
          if (!label_known(la) || !label_known(lb)) continue;
          rep.label = join_direct(static_cast<long>(N->elems.size()), la,
                                  static_cast<long>(M->elems.size()), lb);
          rep.method = "direct product";
          return rep;
        }
      }
    }

    // Extensions 1 -> N -> G -> Q -> 1 with recognizable ends; ':' when a
    // complement exists (checked exhaustively across subgroup classes — the
    // intersection size with a normal subgroup is conjugation-invariant).
    std::vector<const SubgroupClass*> ext = normals;
    std::stable_sort(ext.begin(), ext.end(),
                     [&](const SubgroupClass* a, const SubgroupClass* b) {
                       bool aa = sub_abelian(a->elems), bb = sub_abelian(b->elems);
                       if (aa != bb) return aa;
                       return a->elems.size() > b->elems.size();
                     });
    for (const auto* N : ext) {
      std::string ln = recognize(subgroup_as_group(G, N->elems));
      if (!label_known(ln)) continue;
      std::string lq = recognize(quotient_group(G, N->elems));
      if (!label_known(lq)) continue;
      bool split = false;
      for (const auto& h : subs) {
        if (static_cast<long>(h.elems.size()) * static_cast<long>(N->elems.size()) != n)
          continue;
        if (intersection_size(h.elems, N->elems) == 1) {
          split = true;
          break;
        }
      }
      rep.label = wrap_for_extension(ln) + (split ? ":" : ".") + wrap_for_extension(lq);
      rep.method = split ? "split extension" : "non-split extension";
      return rep;
    }
  }

  rep.label = "unknown(" + std::to_string(n) + ")";
  rep.method = "unknown";
  return rep;
}

std::string recognize(const FiniteGroup& G) { return recognize_full(G).label; }

}  // namespace cremona
