#include "cremona/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace cremona {

void FiniteGroup::finalize() {
  if (n <= 0 || mul.size() != static_cast<size_t>(n) * n)
    throw std::logic_error("malformed multiplication table");
  for (int a = 0; a < n; ++a)
    if (op(0, a) != a || op(a, 0) != a)
      throw std::logic_error("index 0 is not an identity");
  invs.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b)
      if (op(a, b) == 0) {
        if (op(b, a) != 0) throw std::logic_error("one-sided inverse");
        invs[a] = static_cast<uint16_t>(b);
        found = true;
        break;
      }
    if (!found) throw std::logic_error("element without inverse");
  }
}

long FiniteGroup::element_order(int a) const {
  long k = 1;
  int x = a;
  while (x != 0) {
    x = op(x, a);
    ++k;
    if (k > n) throw std::logic_error("element order exceeds group order");
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int g : gens)
    for (int h : gens)
      if (op(g, h) != op(h, g)) return false;
  // When gens is empty or not actually generating, fall back to the full test.
  if (gens.empty()) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (op(a, b) != op(b, a)) return false;
  }
  return true;
}

std::vector<int> closed_subgroup(const FiniteGroup& G, const std::vector<int>& seed,
                                 int abort_above) {
  std::vector<char> in(G.n, 0);
  std::vector<int> out;
  std::vector<int> queue;
  in[0] = 1;
  out.push_back(0);
  queue.push_back(0);
  std::vector<int> gens;
  for (int s : seed)
    if (s != 0 && !std::count(gens.begin(), gens.end(), s)) gens.push_back(s);
  // Seed elements first so the generating set itself is in the subgroup.
  for (int s : gens)
    if (!in[s]) {
      in[s] = 1;
      out.push_back(s);
      queue.push_back(s);
    }
  for (size_t i = 0; i < queue.size(); ++i) {
    for (int g : gens) {
      int y = G.op(queue[i], g);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
        queue.push_back(y);
        if (abort_above >= 0 && static_cast<int>(out.size()) > abort_above) return {};
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Bits = std::vector<uint64_t>;

Bits to_bits(const std::vector<int>& elems, int n) {
  Bits b((n + 63) / 64, 0);
  for (int e : elems) b[e >> 6] |= uint64_t(1) << (e & 63);
  return b;
}

std::string bits_key(const Bits& b) {
  return std::string(reinterpret_cast<const char*>(b.data()), b.size() * sizeof(uint64_t));
}

}  // namespace

std::vector<SubgroupClass> subgroups_up_to_conjugacy(const FiniteGroup& G, int max_order) {
  if (G.n > 2000) throw std::invalid_argument("subgroup enumeration capped at order 2000");
  if (max_order < 1) return {};

  struct Rec {
    std::vector<int> elems, gens;
    long orbit = 1;
  };
  std::vector<Rec> classes;
  std::unordered_map<std::string, int> raw2class;

  std::vector<int> conjgens;  // conjugation generators: G.gens and inverses
  for (int g : G.gens) {
    conjgens.push_back(g);
    conjgens.push_back(G.inv(g));
  }
  if (conjgens.empty())
    for (int a = 1; a < G.n; ++a) conjgens.push_back(a);

  auto conj_sorted = [&](const std::vector<int>& elems, int g) {
    std::vector<int> out(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) out[i] = G.conj(g, elems[i]);
    std::sort(out.begin(), out.end());
    return out;
  };

  // Registers the conjugation orbit of a subgroup; returns true if new.
  auto register_class = [&](std::vector<int> elems, std::vector<int> gens) {
    std::string k0 = bits_key(to_bits(elems, G.n));
    if (raw2class.count(k0)) return false;
    int id = static_cast<int>(classes.size());
    classes.push_back({});
    // Orbit BFS over conjugation by group generators.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> orbit;
    orbit.emplace_back(std::move(elems), std::move(gens));
    raw2class.emplace(k0, id);
    size_t best = 0;
    std::string bestkey = k0;
    for (size_t i = 0; i < orbit.size(); ++i) {
      for (int g : conjgens) {
        std::vector<int> ce = conj_sorted(orbit[i].first, g);
        std::string ck = bits_key(to_bits(ce, G.n));
        if (raw2class.count(ck)) continue;
        raw2class.emplace(ck, id);
        std::vector<int> cg(orbit[i].second.size());
        for (size_t t = 0; t < cg.size(); ++t) cg[t] = G.conj(g, orbit[i].second[t]);
        orbit.emplace_back(std::move(ce), std::move(cg));
        if (ck < bestkey) {
          bestkey = ck;
          best = orbit.size() - 1;
        }
      }
    }
    classes[id].elems = orbit[best].first;
    classes[id].gens = orbit[best].second;
    classes[id].orbit = static_cast<long>(orbit.size());
    return true;
  };

  register_class({0}, {});
  // Layered cyclic extension: every subgroup chain passes through one-element
  // extensions, so processing each class once reaches everything.
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    std::vector<int> helems = classes[ci].elems;  // copy: classes vector grows
    std::vector<int> hgens = classes[ci].gens;
    if (static_cast<int>(helems.size()) >= max_order) continue;
    std::vector<char> visited(G.n, 0);
    for (int e : helems) visited[e] = 1;
    for (int x = 0; x < G.n; ++x) {
      if (visited[x]) continue;
      for (int h : helems) visited[G.op(h, x)] = 1;  // whole coset Hx gives <H,x>
      std::vector<int> seed = hgens;
      seed.push_back(x);
      std::vector<int> s = closed_subgroup(G, seed, max_order);
      if (s.empty()) continue;  // exceeded max_order
      register_class(std::move(s), std::move(seed));
    }
  }

  std::vector<SubgroupClass> out;
  out.reserve(classes.size());
  for (auto& r : classes) out.push_back({r.elems, r.gens, r.orbit});
  std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

std::vector<std::vector<int>> index2_subgroups(const FiniteGroup& G) {
  std::vector<int> squares;
  for (int a = 0; a < G.n; ++a) squares.push_back(G.op(a, a));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  // <squares> contains the derived subgroup (a quotient of exponent 2 is
  // abelian), so G / <squares> is the largest elementary abelian 2-quotient.
  std::vector<int> K = closed_subgroup(G, squares);
  if (static_cast<int>(K.size()) == G.n) return {};

  std::vector<int> coset(G.n, -1);
  std::vector<int> reps;
  for (int x = 0; x < G.n; ++x) {
    if (coset[x] >= 0) continue;
    int cid = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int k : K) coset[G.op(x, k)] = cid;
  }
  int q = static_cast<int>(reps.size());
  if ((q & (q - 1)) != 0) throw std::logic_error("quotient by squares not a 2-group");

  auto cmul = [&](int c1, int c2) { return coset[G.op(reps[c1], reps[c2])]; };
  // F_2 coordinates on the quotient via a greedy basis.
  std::vector<uint32_t> coords(q, 0);
  std::vector<char> spanned(q, 0);
  spanned[coset[0]] = 1;
  std::vector<int> span_list{coset[0]};
  int r = 0;
  for (int c = 0; c < q; ++c) {
    if (spanned[c]) continue;
    uint32_t bit = uint32_t(1) << r++;
    std::vector<int> cur = span_list;
    for (int s : cur) {
      int t = cmul(s, c);
      if (!spanned[t]) {
        spanned[t] = 1;
        coords[t] = coords[s] | bit;
        span_list.push_back(t);
      }
    }
  }
  if ((1 << r) != q) throw std::logic_error("quotient coordinatization failed");

  std::vector<std::vector<int>> out;
  for (uint32_t mask = 1; mask < (uint32_t(1) << r); ++mask) {
    std::vector<int> h;
    for (int x = 0; x < G.n; ++x)
      if (__builtin_parity(coords[coset[x]] & mask) == 0) h.push_back(x);
    out.push_back(std::move(h));
  }
  return out;
}

FiniteGroup subgroup_as_group(const FiniteGroup& G, const std::vector<int>& elems) {
  std::vector<int> pos(G.n, -1);
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  if (elems.empty() || elems[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity (sorted input)");
  FiniteGroup H;
  H.n = static_cast<int>(elems.size());
  H.mul.resize(static_cast<size_t>(H.n) * H.n);
  for (int a = 0; a < H.n; ++a)
    for (int b = 0; b < H.n; ++b) {
      int p = pos[G.op(elems[a], elems[b])];
      if (p < 0) throw std::invalid_argument("element set is not closed");
      H.mul[static_cast<size_t>(a) * H.n + b] = static_cast<uint16_t>(p);
    }
  if (!G.names.empty())
    for (int e : elems) H.names.push_back(G.names[e]);
  H.finalize();
  H.gens = greedy_generators(H);
  return H;
}

FiniteGroup quotient_group(const FiniteGroup& G, const std::vector<int>& normal_elems) {
  std::vector<char> in(G.n, 0);
  for (int e : normal_elems) in[e] = 1;
  if (normal_elems.empty() || !in[0]) throw std::invalid_argument("normal subgroup must contain identity");
  for (int g = 0; g < G.n; ++g)
    for (int e : normal_elems)
      if (!in[G.conj(g, e)]) throw std::invalid_argument("subgroup is not normal");
  std::vector<int> coset(G.n, -1);
  std::vector<int> reps;
  for (int x = 0; x < G.n; ++x) {
    if (coset[x] >= 0) continue;
    int cid = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int e : normal_elems) coset[G.op(x, e)] = cid;
  }
  FiniteGroup Q;
  Q.n = static_cast<int>(reps.size());
  Q.mul.resize(static_cast<size_t>(Q.n) * Q.n);
  for (int a = 0; a < Q.n; ++a)
    for (int b = 0; b < Q.n; ++b)
      Q.mul[static_cast<size_t>(a) * Q.n + b] =
          static_cast<uint16_t>(coset[G.op(reps[a], reps[b])]);
  Q.finalize();
  Q.gens = greedy_generators(Q);
  return Q;
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  size_t n = static_cast<size_t>(A.n) * B.n;
  if (n > 65535) throw std::invalid_argument("direct product too large");
  FiniteGroup G;
  G.n = static_cast<int>(n);
  G.mul.resize(n * n);
  auto id2 = [&](int a, int b) { return a * B.n + b; };
  for (int a1 = 0; a1 < A.n; ++a1)
    for (int b1 = 0; b1 < B.n; ++b1)
      for (int a2 = 0; a2 < A.n; ++a2)
        for (int b2 = 0; b2 < B.n; ++b2)
          G.mul[static_cast<size_t>(id2(a1, b1)) * n + id2(a2, b2)] =
              static_cast<uint16_t>(id2(A.op(a1, a2), B.op(b1, b2)));
  for (int g : A.gens) G.gens.push_back(id2(g, 0));
  for (int g : B.gens) G.gens.push_back(id2(0, g));
  G.finalize();
  return G;
}

namespace {

void check_homomorphism(const FiniteGroup& A, const FiniteGroup& D,
                        const std::vector<int>& alpha, const char* who) {
  if (static_cast<int>(alpha.size()) != A.n)
    throw std::invalid_argument(std::string(who) + ": wrong map size");
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b)
      if (alpha[A.op(a, b)] != D.op(alpha[a], alpha[b]))
        throw std::invalid_argument(std::string(who) + ": not a homomorphism");
  std::vector<char> hit(D.n, 0);
  int cnt = 0;
  for (int a = 0; a < A.n; ++a)
    if (!hit[alpha[a]]) {
      hit[alpha[a]] = 1;
      ++cnt;
    }
  if (cnt != D.n) throw std::invalid_argument(std::string(who) + ": not surjective");
}

}  // namespace

FiniteGroup goursat_product(const FiniteGroup& A, const FiniteGroup& B,
                            const std::vector<int>& alpha, const std::vector<int>& beta,
                            const FiniteGroup& D) {
  check_homomorphism(A, D, alpha, "alpha");
  check_homomorphism(B, D, beta, "beta");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < B.n; ++b)
      if (alpha[a] == beta[b]) pairs.emplace_back(a, b);
  long expected = static_cast<long>(A.n) * B.n / D.n;
  if (static_cast<long>(pairs.size()) != expected)
    throw std::logic_error("goursat order formula violated");
  std::sort(pairs.begin(), pairs.end());  // (0,0) first
  std::map<std::pair<int, int>, int> pos;
  for (size_t i = 0; i < pairs.size(); ++i) pos[pairs[i]] = static_cast<int>(i);
  FiniteGroup G;
  G.n = static_cast<int>(pairs.size());
  if (static_cast<size_t>(G.n) * G.n > 65535ull * 65535ull)
    throw std::invalid_argument("goursat product too large");
  G.mul.resize(static_cast<size_t>(G.n) * G.n);
  for (int i = 0; i < G.n; ++i)
    for (int j = 0; j < G.n; ++j)
      G.mul[static_cast<size_t>(i) * G.n + j] = static_cast<uint16_t>(
          pos.at({A.op(pairs[i].first, pairs[j].first), B.op(pairs[i].second, pairs[j].second)}));
  G.finalize();
  G.gens = greedy_generators(G);
  return G;
}

std::vector<int> automorphism_from_gen_images(const FiniteGroup& G,
                                              const std::vector<int>& gen_from,
                                              const std::vector<int>& gen_to) {
  if (gen_from.size() != gen_to.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> phi(G.n, -1);
  phi[0] = 0;
  std::vector<int> list{0};
  std::vector<char> used(G.n, 0);
  used[0] = 1;
  for (size_t i = 0; i < list.size(); ++i) {
    int x = list[i];
    for (size_t j = 0; j < gen_from.size(); ++j) {
      int y = G.op(x, gen_from[j]);
      int im = G.op(phi[x], gen_to[j]);
      if (phi[y] == -1) {
        if (used[im]) throw std::invalid_argument("gen images do not define an automorphism");
        phi[y] = im;
        used[im] = 1;
        list.push_back(y);
      } else if (phi[y] != im) {
        throw std::invalid_argument("gen images do not define an automorphism");
      }
    }
  }
  if (static_cast<int>(list.size()) != G.n)
    throw std::invalid_argument("gen_from does not generate the group");
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      if (phi[G.op(a, b)] != G.op(phi[a], phi[b]))
        throw std::invalid_argument("gen images do not define an automorphism");
  return phi;
}

FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& H,
                               const std::vector<std::vector<int>>& aut_for_hgen) {
  if (aut_for_hgen.size() != H.gens.size())
    throw std::invalid_argument("need one automorphism per H generator");
  // Extend the action to all of H along its Cayley graph, checking consistency.
  std::vector<std::vector<int>> act(H.n);
  std::vector<int> idperm(N.n);
  std::iota(idperm.begin(), idperm.end(), 0);
  act[0] = idperm;
  std::vector<int> list{0};
  for (size_t i = 0; i < list.size(); ++i) {
    int h = list[i];
    for (size_t j = 0; j < H.gens.size(); ++j) {
      int y = H.op(h, H.gens[j]);
      // phi_{h*g} = phi_h o phi_g (action convention: phi_h(n) = h n h^-1).
      std::vector<int> composed(N.n);
      for (int t = 0; t < N.n; ++t) composed[t] = act[h][aut_for_hgen[j][t]];
      if (act[y].empty()) {
        act[y] = std::move(composed);
        list.push_back(y);
      } else if (act[y] != composed) {
        throw std::invalid_argument("automorphisms do not respect H relations");
      }
    }
  }
  if (static_cast<int>(list.size()) != H.n)
    throw std::invalid_argument("H.gens does not generate H");
  size_t n = static_cast<size_t>(N.n) * H.n;
  if (n > 65535) throw std::invalid_argument("semidirect product too large");
  FiniteGroup G;
  G.n = static_cast<int>(n);
  G.mul.resize(n * n);
  auto id2 = [&](int nn, int hh) { return nn * H.n + hh; };
  // (n1,h1)(n2,h2) = (n1 * phi_{h1}(n2), h1 h2)
  for (int n1 = 0; n1 < N.n; ++n1)
    for (int h1 = 0; h1 < H.n; ++h1)
      for (int n2 = 0; n2 < N.n; ++n2)
        for (int h2 = 0; h2 < H.n; ++h2)
          G.mul[static_cast<size_t>(id2(n1, h1)) * n + id2(n2, h2)] =
              static_cast<uint16_t>(id2(N.op(n1, act[h1][n2]), H.op(h1, h2)));
  for (int g : N.gens) G.gens.push_back(id2(g, 0));
  for (int g : H.gens) G.gens.push_back(id2(0, g));
  G.finalize();
  return G;
}

std::vector<int> greedy_generators(const FiniteGroup& G) {
  std::vector<int> order_of(G.n);
  for (int a = 0; a < G.n; ++a) order_of[a] = static_cast<int>(G.element_order(a));
  std::vector<int> by_order(G.n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    if (order_of[a] != order_of[b]) return order_of[a] > order_of[b];
    return a < b;
  });
  std::vector<int> gens;
  std::vector<int> span{0};
  for (int x : by_order) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    std::vector<int> seed = gens;
    span = closed_subgroup(G, seed);
    if (static_cast<int>(span.size()) == G.n) break;
  }
  return gens;
}

namespace {

std::vector<int> derived_subgroup_elems(const FiniteGroup& G, const std::vector<int>& of) {
  std::vector<int> comms;
  for (int a : of)
    for (int b : of) comms.push_back(G.op(G.op(G.inv(a), G.inv(b)), G.op(a, b)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return closed_subgroup(G, comms);
}

std::vector<int> commutator_with_group(const FiniteGroup& G, const std::vector<int>& layer) {
  std::vector<int> comms;
  for (int a = 0; a < G.n; ++a)
    for (int b : layer) comms.push_back(G.op(G.op(G.inv(a), G.inv(b)), G.op(a, b)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return closed_subgroup(G, comms);
}

}  // namespace

std::vector<long> abelian_elementary_divisors(const FiniteGroup& G) {
  if (!G.is_abelian()) throw std::invalid_argument("group is not abelian");
  std::vector<long> invariant_factors;
  FiniteGroup cur = G;
  while (cur.n > 1) {
    int best = 1;
    long bestord = cur.element_order(1);
    for (int a = 2; a < cur.n; ++a) {
      long o = cur.element_order(a);
      if (o > bestord) {
        bestord = o;
        best = a;
      }
    }
    invariant_factors.push_back(bestord);
    std::vector<int> cyc = closed_subgroup(cur, {best});
    cur = quotient_group(cur, cyc);
  }
  std::vector<long> divisors;
  for (long f : invariant_factors) {
    for (long p = 2; p * p <= f; ++p)
      if (f % p == 0) {
        long pk = 1;
        while (f % p == 0) {
          pk *= p;
          f /= p;
        }
        divisors.push_back(pk);
      }
    if (f > 1) divisors.push_back(f);
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

GroupFingerprint fingerprint(const FiniteGroup& G) {
  GroupFingerprint fp;
  fp.order = G.n;
  fp.exponent = 1;
  for (int a = 0; a < G.n; ++a) {
    long o = G.element_order(a);
    fp.order_histogram[o]++;
    fp.exponent = std::lcm(fp.exponent, o);
  }
  // Center: commute with a generating set (or everything when gens are absent).
  std::vector<int> testers = G.gens;
  if (testers.empty())
    for (int a = 1; a < G.n; ++a) testers.push_back(a);
  long center = 0;
  for (int a = 0; a < G.n; ++a) {
    bool ok = true;
    for (int t : testers)
      if (G.op(a, t) != G.op(t, a)) {
        ok = false;
        break;
      }
    if (ok) ++center;
  }
  fp.center_order = center;
  // Derived series.
  std::vector<int> all(G.n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> layer = all;
  fp.derived_series.push_back(G.n);
  while (true) {
    std::vector<int> next = derived_subgroup_elems(G, layer);
    if (next.size() == layer.size()) break;
    fp.derived_series.push_back(static_cast<long>(next.size()));
    layer = std::move(next);
    if (layer.size() == 1) break;
  }
  // Lower central series.
  layer = all;
  fp.lower_central_series.push_back(G.n);
  while (true) {
    std::vector<int> next = commutator_with_group(G, layer);
    if (next.size() == layer.size()) break;
    fp.lower_central_series.push_back(static_cast<long>(next.size()));
    layer = std::move(next);
    if (layer.size() == 1) break;
  }
  // Abelianization = G / G'.
  std::vector<int> der = derived_subgroup_elems(G, all);
  FiniteGroup ab = quotient_group(G, der);
  fp.abelianization = abelian_elementary_divisors(ab);
  return fp;
}

std::string GroupFingerprint::str() const {
  std::ostringstream os;
  os << "order=" << order << " center=" << center_order << " exponent=" << exponent;
  os << " orders={";
  bool first = true;
  for (auto& [o, c] : order_histogram) {
    if (!first) os << ",";
    first = false;
    os << o << ":" << c;
  }
  os << "} ab=[";
  for (size_t i = 0; i < abelianization.size(); ++i)
    os << (i ? "," : "") << abelianization[i];
  os << "] derived=[";
  for (size_t i = 0; i < derived_series.size(); ++i) os << (i ? "," : "") << derived_series[i];
  os << "] lcs=[";
  for (size_t i = 0; i < lower_central_series.size(); ++i)
    os << (i ? "," : "") << lower_central_series[i];
  os << "]";
  return os.str();
}

namespace {

// Tries to extend gensA -> imgs to a homomorphism on <gensA>; returns its size
// (0 on failure). Injectivity enforced; on full success phi is a monomorphism.
int try_map(const FiniteGroup& A, const FiniteGroup& B, const std::vector<int>& gensA,
            const std::vector<int>& imgs) {
  std::vector<int> phi(A.n, -1);
  std::vector<char> used(B.n, 0);
  phi[0] = 0;
  used[0] = 1;
  std::vector<int> list{0};
  for (size_t i = 0; i < list.size(); ++i) {
    int x = list[i];
    for (size_t j = 0; j < gensA.size(); ++j) {
      int y = A.op(x, gensA[j]);
      int im = B.op(phi[x], imgs[j]);
      if (phi[y] == -1) {
        if (used[im]) return 0;
        phi[y] = im;
        used[im] = 1;
        list.push_back(y);
      } else if (phi[y] != im) {
        return 0;
      }
    }
  }
  return static_cast<int>(list.size());
}

bool iso_search(const FiniteGroup& A, const FiniteGroup& B, const std::vector<int>& gensA,
                const std::vector<long>& gen_orders, std::vector<int>& imgs, size_t depth) {
  if (depth == gensA.size()) return try_map(A, B, gensA, imgs) == A.n;
  for (int b = 0; b < B.n; ++b) {
    if (B.element_order(b) != gen_orders[depth]) continue;
    imgs[depth] = b;
    // Prefix consistency: the partial assignment must extend to <prefix>.
    std::vector<int> pg(gensA.begin(), gensA.begin() + depth + 1);
    std::vector<int> pi(imgs.begin(), imgs.begin() + depth + 1);
    if (try_map(A, B, pg, pi) == 0) continue;
    if (iso_search(A, B, gensA, gen_orders, imgs, depth + 1)) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FiniteGroup& A, const FiniteGroup& B) {
  if (A.n != B.n) return false;
  if (A.n == 1) return true;
  if (!(fingerprint(A) == fingerprint(B))) return false;
  std::vector<int> gensA = greedy_generators(A);
  std::vector<long> gord;
  for (int g : gensA) gord.push_back(A.element_order(g));
  std::vector<int> imgs(gensA.size(), 0);
  return iso_search(A, B, gensA, gord, imgs, 0);
}

}  // namespace cremona
