#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cremona/group.hpp"
#include "cremona/projgroup.hpp"
#include "cremona/recognize.hpp"
#include "cremona/weyl.hpp"

using namespace cremona;

namespace {

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

FiniteGroup signed_closure(const std::vector<SignedPerm>& gens) {
  auto mulf = [](const SignedPerm& a, const SignedPerm& b) { return a * b; };
  auto keyf = [](const SignedPerm& a) { return a.key(); };
  return build_group(SignedPerm::identity(), gens, mulf, keyf);
}

// Adjacent transpositions of the five letters.
std::vector<SignedPerm> transposition_gens() {
  std::vector<SignedPerm> gens;
  for (int i = 0; i + 1 < 5; ++i) {
    std::array<uint8_t, 5> p{0, 1, 2, 3, 4};
    std::swap(p[i], p[i + 1]);
    gens.push_back(sperm(p));
  }
  return gens;
}

std::map<size_t, long> subgroup_census(const std::vector<SubgroupClass>& classes) {
  std::map<size_t, long> by_order;  // order -> number of subgroups (not classes)
  for (const auto& c : classes) by_order[c.elems.size()] += c.class_size;
  return by_order;
}

}  // namespace

TEST_CASE("multiplication-table closure of the signed permutation groups") {
  auto gens = transposition_gens();
  gens.push_back(sflip(0x18));  // sign switch on the last two letters
  FiniteGroup d5 = signed_closure(gens);
  CHECK(d5.n == 1920);

  // Identity sits at index 0; inverses and conjugation behave.
  for (int a = 0; a < 50; ++a) {
    CHECK(d5.op(0, a) == a);
    CHECK(d5.op(a, 0) == a);
    CHECK(d5.op(a, d5.inv(a)) == 0);
    CHECK(d5.conj(0, a) == a);
  }
  CHECK(d5.element_order(0) == 1);

  // Adding a single sign switch doubles the group.
  gens.push_back(sflip(0x10));
  FiniteGroup b5 = signed_closure(gens);
  CHECK(b5.n == 3840);
}

TEST_CASE("closure bound is enforced with a partial-size diagnostic") {
  auto gens = transposition_gens();
  auto mulf = [](const SignedPerm& a, const SignedPerm& b) { return a * b; };
  auto keyf = [](const SignedPerm& a) { return a.key(); };
  CHECK_THROWS_WITH_AS(build_group(SignedPerm::identity(), gens, mulf, keyf, nullptr, 50),
                       doctest::Contains("partial size"), std::runtime_error);
}

TEST_CASE("imprimitive monomial groups have the predicted orders") {
  CHECK(build_imprimitive(3, 1, 1, false).n == 27);
  CHECK(build_imprimitive(3, 1, 1, true).n == 54);
  CHECK(build_imprimitive(4, 1, 1, false).n == 48);
  // (6 x 2):3 with s = 2: s^2 - s + 1 = 3 = 0 mod 3.
  CHECK(build_imprimitive(6, 3, 2, false).n == 36);
  CHECK(build_imprimitive(6, 3, 2, true).n == 72);
  // (7 x 1):3 with s = 3: 9 - 3 + 1 = 7 = 0 mod 7.
  CHECK(build_imprimitive(7, 7, 3, false).n == 21);

  // k must divide n, s must solve s^2 - s + 1 = 0 mod k, and the S_3 variant
  // only exists for k = 1 or k = 3.
  CHECK_THROWS_AS(build_imprimitive(5, 3, 2, false), std::invalid_argument);
  CHECK_THROWS_AS(build_imprimitive(6, 2, 1, false), std::invalid_argument);
  CHECK_THROWS_AS(build_imprimitive(7, 7, 2, false), std::invalid_argument);
  CHECK_THROWS_AS(build_imprimitive(7, 7, 3, true), std::invalid_argument);
}

TEST_CASE("subgroup classification by conjugacy") {
  SUBCASE("symmetric group on three letters") {
    auto classes = subgroups_up_to_conjugacy(symmetric_group(3), 6);
    CHECK(classes.size() == 4);
    auto census = subgroup_census(classes);
    CHECK(census[1] == 1);
    CHECK(census[2] == 3);
    CHECK(census[3] == 1);
    CHECK(census[6] == 1);
  }

  SUBCASE("elementary abelian group of order sixteen") {
    auto classes = subgroups_up_to_conjugacy(abelian_group({2, 2, 2, 2}), 16);
    // Abelian: every class is a single subgroup; Gaussian binomials
    // [4 choose k]_2 = 1, 15, 35, 15, 1.
    CHECK(classes.size() == 67);
    for (const auto& c : classes) CHECK(c.class_size == 1);
    auto census = subgroup_census(classes);
    CHECK(census[1] == 1);
    CHECK(census[2] == 15);
    CHECK(census[4] == 35);
    CHECK(census[8] == 15);
    CHECK(census[16] == 1);
  }

  SUBCASE("quaternion group: every subgroup is normal") {
    auto classes = subgroups_up_to_conjugacy(dicyclic_group(2), 8);
    CHECK(classes.size() == 6);
    for (const auto& c : classes) CHECK(c.class_size == 1);
  }

  SUBCASE("order cap prunes the search") {
    auto classes = subgroups_up_to_conjugacy(symmetric_group(4), 4);
    for (const auto& c : classes) CHECK(c.elems.size() <= 4);
    // 1, three C_2 classes (6 transposition + 3 double-transposition
    // involutions), C_3, C_4, and two Klein four classes.
    auto census = subgroup_census(classes);
    CHECK(census[1] == 1);
    CHECK(census[2] == 9);
    CHECK(census[3] == 4);
    CHECK(census[4] == 7);
  }

  SUBCASE("generators returned with each class regenerate it") {
    FiniteGroup G = symmetric_group(4);
    for (const auto& c : subgroups_up_to_conjugacy(G, 24)) {
      auto closure = closed_subgroup(G, c.gens);
      CHECK(closure == c.elems);
    }
  }
}

TEST_CASE("index-two subgroups via the square closure") {
  CHECK(index2_subgroups(symmetric_group(3)).size() == 1);
  CHECK(index2_subgroups(symmetric_group(4)).size() == 1);
  CHECK(index2_subgroups(alternating_group(4)).size() == 0);
  CHECK(index2_subgroups(cyclic_group(12)).size() == 1);
  CHECK(index2_subgroups(dicyclic_group(2)).size() == 3);
  CHECK(index2_subgroups(abelian_group({2, 2, 2, 2})).size() == 15);

  // The alternating subgroup is the one index-2 subgroup of S_3.
  FiniteGroup s3 = symmetric_group(3);
  auto subs = index2_subgroups(s3);
  REQUIRE(subs.size() == 1);
  REQUIRE(subs[0].size() == 3);
  for (int g : subs[0]) CHECK(s3.element_order(g) != 2);
}

TEST_CASE("quotients, products, and semidirect products") {
  SUBCASE("S_4 modulo the Klein four group is S_3") {
    FiniteGroup s4 = symmetric_group(4);
    // Pick out the normal Klein subgroup: identity plus the three
    // double transpositions (the only order-2 elements commuting pairwise
    // and forming a subgroup of order 4 with class size 1).
    for (const auto& c : subgroups_up_to_conjugacy(s4, 4)) {
      if (c.elems.size() == 4 && c.class_size == 1) {
        FiniteGroup q = quotient_group(s4, c.elems);
        CHECK(q.n == 6);
        CHECK(recognize(q) == "S_3");
      }
    }
  }

  SUBCASE("quotient by a non-normal subgroup is rejected") {
    FiniteGroup s3 = symmetric_group(3);
    // Any order-2 subgroup of S_3 is non-normal.
    for (const auto& c : subgroups_up_to_conjugacy(s3, 2)) {
      if (c.elems.size() == 2) {
        CHECK(c.class_size == 3);
        CHECK_THROWS_AS(quotient_group(s3, c.elems), std::invalid_argument);
      }
    }
  }

  SUBCASE("direct products") {
    FiniteGroup g = direct_product(cyclic_group(3), symmetric_group(3));
    CHECK(g.n == 18);
    CHECK(!g.is_abelian());
    CHECK(direct_product(cyclic_group(4), cyclic_group(6)).is_abelian());
  }

  SUBCASE("fibered products via Goursat data") {
    FiniteGroup c4 = cyclic_group(4);
    FiniteGroup q8 = dicyclic_group(2);
    FiniteGroup c2 = cyclic_group(2);

    // Trivial fibering: the full direct product.
    std::vector<int> alpha_triv(c4.n, 0), beta_triv(q8.n, 0);
    FiniteGroup full = goursat_product(c4, q8, alpha_triv, beta_triv, trivial_group());
    CHECK(full.n == 32);

    // Diagonal fibering of S_3 with itself.
    FiniteGroup s3 = symmetric_group(3);
    std::vector<int> id6(6);
    for (int i = 0; i < 6; ++i) id6[i] = i;
    FiniteGroup diag = goursat_product(s3, s3, id6, id6, s3);
    CHECK(diag.n == 6);
    CHECK(recognize(diag) == "S_3");

    // The half product of C_4 and Q_8 over their sign quotients.
    std::vector<int> alpha(c4.n), beta(q8.n);
    for (int i = 0; i < c4.n; ++i) alpha[i] = i % 2;
    for (int i = 0; i < q8.n; ++i) beta[i] = i / 4;  // a^i b^j -> j
    FiniteGroup half = goursat_product(c4, q8, alpha, beta, c2);
    CHECK(half.n == 16);
    CHECK(recognize(half) == "K_16");

    // A non-homomorphism is rejected.
    std::vector<int> bad(c4.n, 0);
    bad[1] = 1;
    CHECK_THROWS_AS(goursat_product(c4, q8, bad, beta, c2), std::invalid_argument);
  }

  SUBCASE("semidirect products and generator-image automorphisms") {
    FiniteGroup c4 = cyclic_group(4);
    auto inv = automorphism_from_gen_images(c4, {1}, {3});
    FiniteGroup d8 = semidirect_product(c4, cyclic_group(2), {inv});
    CHECK(d8.n == 8);
    CHECK(recognize(d8) == "D_8");
    CHECK(is_isomorphic(d8, dihedral_group(4)));

    // x -> x^2 kills the generator order: not an automorphism.
    CHECK_THROWS_AS(automorphism_from_gen_images(c4, {1}, {2}), std::invalid_argument);
  }
}

TEST_CASE("fingerprints and exact isomorphism") {
  GroupFingerprint fp = fingerprint(symmetric_group(3));
  CHECK(fp.order == 6);
  CHECK(fp.center_order == 1);
  CHECK(fp.exponent == 6);
  CHECK(fp.abelianization == std::vector<long>{2});
  CHECK(fp.order_histogram == std::map<long, long>{{1, 1}, {2, 3}, {3, 2}});
  CHECK(fp.derived_series == std::vector<long>{6, 3, 1});

  CHECK(is_isomorphic(symmetric_group(3), dihedral_group(3)));
  CHECK(is_isomorphic(cyclic_group(4), dicyclic_group(1)));
  CHECK(!is_isomorphic(dihedral_group(4), dicyclic_group(2)));
  CHECK(!is_isomorphic(cyclic_group(8), abelian_group({2, 4})));
  CHECK(!is_isomorphic(binary_tetrahedral_group(),
                       direct_product(cyclic_group(3), dicyclic_group(2))));

  CHECK(abelian_elementary_divisors(abelian_group({4, 6})) ==
        std::vector<long>{2, 3, 4});
  CHECK(abelian_elementary_divisors(cyclic_group(12)) == std::vector<long>{3, 4});
  CHECK_THROWS_AS(abelian_elementary_divisors(symmetric_group(3)), std::invalid_argument);

  FiniteGroup s4 = symmetric_group(4);
  CHECK(closed_subgroup(s4, greedy_generators(s4)).size() == 24);
}

TEST_CASE("reference models have their defining orders and structures") {
  CHECK(trivial_group().n == 1);
  CHECK(symmetric_group(5).n == 120);
  CHECK(alternating_group(5).n == 60);
  CHECK(psl2_7().n == 168);
  CHECK(binary_tetrahedral_group().n == 24);
  CHECK(binary_octahedral_group().n == 48);
  CHECK(binary_icosahedral_group().n == 120);
  CHECK(heisenberg3_group().n == 27);

  // Binary polyhedral groups have a unique involution (the central -id).
  for (const FiniteGroup& g :
       {binary_tetrahedral_group(), binary_octahedral_group(), binary_icosahedral_group()}) {
    long involutions = 0;
    for (int a = 1; a < g.n; ++a)
      if (g.element_order(a) == 2) ++involutions;
    CHECK(involutions == 1);
  }

  // The Heisenberg group has exponent 3.
  CHECK(fingerprint(heisenberg3_group()).exponent == 3);
}

TEST_CASE("the nine nonabelian groups of order sixteen are separated") {
  CHECK(order16_key_selftest());
  for (const auto& label : order16_labels()) {
    FiniteGroup g = order16_model(label);
    CHECK(g.n == 16);
    CHECK(!g.is_abelian());
    CHECK(recognize(g) == label);
  }
  // Spot checks of the structure constants behind the table.
  CHECK(fingerprint(order16_model("Q_16")).order_histogram[2] == 1);
  CHECK(fingerprint(order16_model("D_16")).order_histogram[2] == 9);
  CHECK(fingerprint(order16_model("SD_16")).order_histogram[2] == 5);
  CHECK(fingerprint(order16_model("M_16")).order_histogram[2] == 3);
  CHECK(fingerprint(order16_model("2xD_8")).order_histogram[2] == 11);
  CHECK(fingerprint(order16_model("AS_16")).order_histogram[2] == 7);
  // L_16 matches AS_16 on the involution count and the center order; the
  // abelianization ([2,4] against [2,2,2]) tells them apart.
  CHECK(fingerprint(order16_model("L_16")).order_histogram[2] == 7);
  CHECK(fingerprint(order16_model("AS_16")).center_order == 4);
  CHECK(fingerprint(order16_model("L_16")).center_order == 4);
  CHECK(fingerprint(order16_model("AS_16")).abelianization == std::vector<long>{2, 2, 2});
  CHECK(fingerprint(order16_model("L_16")).abelianization == std::vector<long>{2, 4});
  // K_16 and 2xQ_8 agree on center, lower central series, and the order
  // histogram; the abelianization tells them apart.
  GroupFingerprint k = fingerprint(order16_model("K_16"));
  GroupFingerprint q = fingerprint(order16_model("2xQ_8"));
  CHECK(k.center_order == q.center_order);
  CHECK(k.lower_central_series == q.lower_central_series);
  CHECK(k.order_histogram == q.order_histogram);
  CHECK(k.abelianization != q.abelianization);
  CHECK(k.abelianization == std::vector<long>{2, 4});
  CHECK(q.abelianization == std::vector<long>{2, 2, 2});
}

TEST_CASE("structure recognition") {
  SUBCASE("trivial and abelian labels") {
    CHECK(recognize(trivial_group()) == "1");
    CHECK(recognize(cyclic_group(6)) == "6");
    CHECK(recognize(cyclic_group(8)) == "8");
    CHECK(recognize(abelian_group({2, 4})) == "2x4");
    CHECK(recognize(abelian_group({2, 2, 3})) == "2^2x3");
    CHECK(recognize(abelian_group({3, 3, 2})) == "3^2x2");
    CHECK(recognize(abelian_group({2, 2, 2, 2})) == "2^4");
    CHECK(recognize(abelian_group({2, 6})) == "2^2x3");
    CHECK(recognize(abelian_group({3, 4})) == "12");
  }

  SUBCASE("registry models are named by exact isomorphism") {
    CHECK(recognize(symmetric_group(4)) == "S_4");
    CHECK(recognize(symmetric_group(5)) == "S_5");
    CHECK(recognize(alternating_group(4)) == "A_4");
    CHECK(recognize(alternating_group(5)) == "A_5");
    CHECK(recognize(psl2_7()) == "L_2(7)");
    CHECK(recognize(binary_tetrahedral_group()) == "2T");
    CHECK(recognize(binary_octahedral_group()) == "2O");
    CHECK(recognize(binary_icosahedral_group()) == "2I");
    CHECK(recognize(heisenberg3_group()) == "H_3(3)");
    CHECK(recognize(dihedral_group(5)) == "D_10");
    CHECK(recognize(dihedral_group(6)) == "D_12");
    CHECK(recognize(dicyclic_group(2)) == "Q_8");
    CHECK(recognize(dicyclic_group(3)) == "Q_12");
  }

  SUBCASE("sign-switch extension models") {
    const std::vector<SignedPerm> even = {sflip(0x03), sflip(0x06), sflip(0x0c),
                                          sflip(0x18)};
    auto with = [&](std::initializer_list<SignedPerm> extra) {
      std::vector<SignedPerm> gens = even;
      gens.insert(gens.end(), extra);
      return gens;
    };
    CHECK(recognize(signed_closure(with({sperm({2, 3, 0, 1, 4})}))) == "2^4:2");
    CHECK(recognize(signed_closure(with({sperm({1, 2, 0, 3, 4})}))) == "2^4:3");
    CHECK(recognize(signed_closure(with({sperm({1, 2, 3, 0, 4})}))) == "2^4:4");
    CHECK(recognize(signed_closure(with({sperm({1, 2, 3, 4, 0})}))) == "2^4:5");
    CHECK(recognize(signed_closure(
              with({sperm({1, 2, 0, 3, 4}), sperm({0, 2, 1, 4, 3})}))) == "2^4:S_3");
    CHECK(recognize(signed_closure(
              with({sperm({1, 2, 3, 4, 0}), sperm({0, 4, 3, 2, 1})}))) == "2^4:D_10");
    CHECK(recognize(signed_closure({sflip(0x03), sflip(0x05), sflip(0x09),
                                    sperm({1, 2, 3, 0, 4}) * sflip(0x11)})) == "2^2:8");
    CHECK(recognize(signed_closure({sflip(0x03), sflip(0x05), sflip(0x18),
                                    sperm({1, 2, 0, 3, 4})})) == "2xA_4");
  }

  SUBCASE("direct products are split off recursively") {
    CHECK(recognize(direct_product(cyclic_group(3), binary_octahedral_group())) ==
          "3x2O");
    CHECK(recognize(direct_product(cyclic_group(2), symmetric_group(4))) == "2xS_4");
    CHECK(recognize(direct_product(symmetric_group(3), symmetric_group(3))) ==
          "S_3xS_3");
    CHECK(recognize(direct_product(cyclic_group(2),
                                   direct_product(cyclic_group(2), symmetric_group(3)))) ==
          "2^2xS_3");
  }

  SUBCASE("split and non-split extensions") {
    // The Frobenius group of order 20 (a 5-cycle and the doubling map): 5:4.
    FiniteGroup f20 =
        signed_closure({sperm({1, 2, 3, 4, 0}), sperm({0, 2, 4, 1, 3})});
    REQUIRE(f20.n == 20);
    CHECK(recognize(f20) == "5:4");
    // The dicyclic group of order 20 is a non-split extension of C_2 by C_10.
    CHECK(recognize(dicyclic_group(5)) == "10.2");
  }

  SUBCASE("unknown groups are reported, never mislabeled") {
    FiniteGroup big = direct_product(cyclic_group(2), alternating_group(6));
    CHECK(recognize(big) == "unknown(720)");
    CHECK(recognize_full(big).method == "unknown");
  }

  SUBCASE("the recognition cap") {
    auto gens = transposition_gens();
    gens.push_back(sflip(0x18));
    gens.push_back(sflip(0x10));
    FiniteGroup b5 = signed_closure(gens);
    REQUIRE(b5.n == 3840);
    CHECK_THROWS_AS(recognize(b5), std::invalid_argument);
  }
}
