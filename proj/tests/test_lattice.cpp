#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/lattice.hpp"

using namespace cremona;

TEST_CASE("inner product and canonical class") {
  LatticeVec k = canonical_class(6);
  CHECK(inner_product(k, k) == 3);  // K^2 = 9 - N
  CHECK(inner_product(canonical_class(5), canonical_class(5)) == 4);
  CHECK(inner_product(canonical_class(8), canonical_class(8)) == 1);
  LatticeVec e0{1, 0, 0, 0, 0, 0, 0};
  CHECK(inner_product(e0, e0) == 1);
  LatticeVec e1{0, 1, 0, 0, 0, 0, 0};
  CHECK(inner_product(e1, e1) == -1);
  CHECK(inner_product(e0, e1) == 0);
}

TEST_CASE("simple roots pair with the canonical class") {
  for (int N = 3; N <= 8; ++N) {
    LatticeVec k = canonical_class(N);
    auto simples = simple_roots(N);
    CHECK(simples.size() == static_cast<size_t>(N));
    for (const auto& a : simples) {
      CHECK(inner_product(a, a) == -2);
      CHECK(inner_product(a, k) == 0);
    }
  }
}

TEST_CASE("reflection matrices are involutive isometries") {
  for (int N = 3; N <= 6; ++N) {
    auto simples = simple_roots(N);
    for (const auto& a : simples) {
      IntMat s = reflection_matrix(a);
      CHECK(s * s == IntMat::identity(N + 1));
      // Fixes k, negates alpha.
      CHECK(s.apply(canonical_class(N)) == canonical_class(N));
      LatticeVec ma = a;
      for (auto& x : ma) x = -x;
      CHECK(s.apply(a) == ma);
      // Isometry on a sample of vectors.
      LatticeVec v(N + 1, 0);
      v[0] = 2;
      v[1] = 1;
      LatticeVec w(N + 1, 1);
      w[0] = -1;
      CHECK(inner_product(s.apply(v), s.apply(w)) == inner_product(v, w));
    }
  }
}

TEST_CASE("root systems have the expected sizes") {
  // A2+A1, A4, D5, E6, E7, E8
  int expected[] = {8, 20, 40, 72, 126, 240};
  for (int N = 3; N <= 8; ++N) {
    auto scan = enumerate_roots_scan(N);
    CHECK(scan.size() == static_cast<size_t>(expected[N - 3]));
    auto orbit = enumerate_roots_orbit(N);
    CHECK(scan == orbit);
  }
}

TEST_CASE("exceptional class counts") {
  int expected[] = {6, 10, 16, 27, 56, 240};
  for (int N = 3; N <= 8; ++N) {
    auto exc = exceptional_classes(N);
    CHECK(exc.size() == static_cast<size_t>(expected[N - 3]));
    LatticeVec k = canonical_class(N);
    for (const auto& v : exc) {
      CHECK(inner_product(v, v) == -1);
      CHECK(inner_product(v, k) == -1);
    }
  }
}

TEST_CASE("roots of D5 include both kinds") {
  auto roots = enumerate_roots_scan(5);
  // e_i - e_j kind: 5*4 = 20; e_0 - e_i - e_j - e_k kind: 2 * C(5,3) = 20.
  int diff = 0, triple = 0;
  for (const auto& r : roots) {
    if (r[0] == 0)
      ++diff;
    else
      ++triple;
  }
  CHECK(diff == 20);
  CHECK(triple == 20);
}

TEST_CASE("vector notation round trip") {
  LatticeVec v{2, 1, 1, 0, -1, 1};
  CHECK(vec_str(v) == "2;1,1,0,-1,1");
  CHECK(vec_parse("2;1,1,0,-1,1") == v);
  CHECK(vec_parse("-3;1,1,1") == LatticeVec{-3, 1, 1, 1});
  CHECK_THROWS(vec_parse("no-semicolon"));
}

TEST_CASE("matrix helpers") {
  IntMat id = IntMat::identity(3);
  CHECK(id.trace() == 3);
  IntMat m = id;
  m.at(0, 1) = 2;
  CHECK((m * m).at(0, 1) == 4);
  CHECK(m.transpose().at(1, 0) == 2);
  CHECK(m.key() != id.key());
  CHECK(id.str() == "[1 0 0; 0 1 0; 0 0 1]");
}
