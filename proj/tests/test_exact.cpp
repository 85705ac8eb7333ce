#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/cyclo.hpp"
#include "cremona/expr.hpp"
#include "cremona/multipoly.hpp"
#include "cremona/unipoly.hpp"

#include <random>

using namespace cremona;

static CycloNumber zeta(int n, long k = 1) { return CycloNumber::root_of_unity(n, k); }

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1).str() == "t - 1");
  CHECK(cyclotomic_polynomial(2).str() == "t + 1");
  CHECK(cyclotomic_polynomial(4).str() == "t^2 + 1");
  CHECK(cyclotomic_polynomial(5).str() == "t^4 + t^3 + t^2 + t + 1");
  CHECK(cyclotomic_polynomial(8).str() == "t^4 + 1");
  CHECK(cyclotomic_polynomial(9).str() == "t^6 + t^3 + 1");
  CHECK(cyclotomic_polynomial(12).str() == "t^4 - t^2 + 1");
  CHECK(cyclotomic_polynomial(15).degree() == 8);
  CHECK(cyclotomic_polynomial(105).degree() == 48);  // first with coefficient -2
}

TEST_CASE("unipoly gcd and division") {
  // (t^2-1)(t^3+1) vs (t^2-1)(t-2): the cubic and linear parts are coprime.
  UniPoly a({-1, 0, 1});                         // t^2 - 1
  UniPoly b({1, 0, 0, 1});                       // t^3 + 1
  UniPoly c({-2, 1});                            // t - 2
  CHECK(UniPoly::gcd(a * b, a * c).str() == "t^2 - 1");
  CHECK((a * b).div_exact(b) == a);
  CHECK_THROWS(a.div_exact(c));
  UniPoly q, r;
  UniPoly::divmod(a * b + c, a, q, r);
  CHECK(q == b);
  CHECK(r == c);
}

TEST_CASE("roots of unity basics") {
  CHECK((zeta(8) + zeta(8, 7)).pow(2) == CycloNumber(2));
  CHECK(zeta(12).pow(4) == zeta(3));
  CHECK(zeta(6) == CycloNumber(1) + zeta(3));
  CHECK(zeta(6).conductor() == 3);  // zeta_6 = -zeta_3^2
  CHECK(zeta(2) == CycloNumber(-1));
  CHECK(zeta(1) == CycloNumber(1));
  CHECK(zeta(5).pow(5) == CycloNumber(1));
  CHECK(zeta(5) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4) == CycloNumber(-1));
  CHECK(zeta(15).pow(3) == zeta(5));
  CHECK(zeta(15).pow(5) == zeta(3));
  CHECK(zeta(8).pow(2) == CycloNumber::i());
  CHECK(CycloNumber::i().pow(2) == CycloNumber(-1));
}

TEST_CASE("conductor minimization") {
  CHECK(zeta(12).conductor() == 12);
  CHECK((zeta(12) * zeta(12).conj()).conductor() == 1);
  CHECK((zeta(8) + zeta(8, 7)).conductor() == 8);   // sqrt 2
  CHECK((zeta(5) + zeta(5, 4)).conductor() == 5);   // 2 cos 72
  CHECK((zeta(7) + zeta(7, 2) + zeta(7, 4)).conductor() == 7);  // Gauss period
  CHECK((zeta(9).pow(3)).conductor() == 3);
  // An element written at conductor 24 that actually lives at 8.
  CycloNumber x = zeta(24).pow(3);
  CHECK(x.conductor() == 8);
  CHECK(x == zeta(8));
}

TEST_CASE("named surds") {
  CHECK(CycloNumber::sqrt2() * CycloNumber::sqrt2() == CycloNumber(2));
  CHECK(CycloNumber::sqrt5() * CycloNumber::sqrt5() == CycloNumber(5));
  CHECK(CycloNumber::sqrt_minus3() * CycloNumber::sqrt_minus3() == CycloNumber(-3));
  CHECK(CycloNumber::sqrt_integer(-7).pow(2) == CycloNumber(-7));
  CHECK(CycloNumber::sqrt_integer(12) == CycloNumber(2) * CycloNumber::sqrt_integer(3));
  CHECK(CycloNumber::sqrt_integer(49) == CycloNumber(7));
  CHECK(CycloNumber::sqrt_integer(-1) == CycloNumber::i());
  CHECK(CycloNumber::sqrt_integer(5) == CycloNumber::sqrt5());
  CHECK(CycloNumber::sqrt_integer(-3) == CycloNumber::sqrt_minus3());
  CHECK(CycloNumber::sqrt_integer(0).is_zero());
}

TEST_CASE("field axioms on sampled elements") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto sample = [&](int n) {
    CycloNumber x(0);
    for (int j = 0; j < euler_phi(n); ++j)
      x += CycloNumber(Rational(coeff(rng))) * zeta(n, j);
    return x;
  };
  for (int trial = 0; trial < 40; ++trial) {
    int ns[3] = {8, 12, 5};
    CycloNumber a = sample(ns[trial % 3]);
    CycloNumber b = sample(ns[(trial + 1) % 3]);
    CycloNumber c = sample(ns[(trial + 2) % 3]);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == CycloNumber(1));
      CHECK(a / a == CycloNumber(1));
    }
    CHECK((a.conj().conj()) == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("root of unity order detection") {
  CHECK(CycloNumber(1).root_of_unity_order() == 1);
  CHECK(CycloNumber(-1).root_of_unity_order() == 2);
  CHECK(zeta(8).root_of_unity_order() == 8);
  CHECK((-zeta(5)).root_of_unity_order() == 10);
  CHECK(zeta(12, 2).root_of_unity_order() == 6);
  CHECK(CycloNumber(2).root_of_unity_order() == 0);
  CHECK((CycloNumber(1) + zeta(5)).root_of_unity_order() == 0);
}

TEST_CASE("serialization keys round out") {
  CHECK(CycloNumber(Rational(-7, 2)).str() == "-7/2");
  CHECK(zeta(8).key() == "8:0,1,0,0");
  CHECK((zeta(3) * CycloNumber(2) + CycloNumber(1)).key() == "3:1,2");
}

TEST_CASE("multipoly arithmetic") {
  int n = 2;
  MultiPoly x = MultiPoly::variable(n, 0), y = MultiPoly::variable(n, 1);
  MultiPoly p = (x + y).pow(3);
  CHECK(p.term_count() == 4);
  CHECK(p.coeff({2, 1}) == CycloNumber(3));
  CHECK(p.total_degree() == 3);
  MultiPoly q = p.substitute({x - y, y});
  CHECK(q == x.pow(3));
  CHECK(p.derivative(0) == (x + y).pow(2) * CycloNumber(3));
  CHECK(divide_exact(p, x + y) == (x + y).pow(2));
  CHECK_THROWS(divide_exact(x * x + y, x + y));
  CHECK(p.eval({CycloNumber(1), CycloNumber(2)}) == CycloNumber(27));
}

TEST_CASE("multipoly gcd") {
  int n = 3;
  MultiPoly x = MultiPoly::variable(n, 0), y = MultiPoly::variable(n, 1),
            z = MultiPoly::variable(n, 2);
  MultiPoly g = x + y + z;
  MultiPoly a = g.pow(2) * (x - y);
  MultiPoly b = g * (x.pow(2) + y * z);
  MultiPoly d = MultiPoly::gcd(a, b);
  CHECK(d == g.normalized());
  // Coprime pair.
  CHECK(MultiPoly::gcd(x + y, x - y).is_constant());
  // Univariate inside the multivariate ring.
  MultiPoly u = (x.pow(2) - MultiPoly::constant(n, CycloNumber(1)));
  MultiPoly v = (x - MultiPoly::constant(n, CycloNumber(1))) * y;
  MultiPoly w = MultiPoly::gcd(u, v);
  CHECK(w == (x - MultiPoly::constant(n, CycloNumber(1))));
  // Scalars from extensions: gcd((x + i y)(x - i y), (x + i y) y).
  MultiPoly xi = x + y * CycloNumber::i();
  CHECK(MultiPoly::gcd(xi * (x - y * CycloNumber::i()), xi * y) == xi.normalized());
}

TEST_CASE("proportionality detection") {
  int n = 2;
  MultiPoly x = MultiPoly::variable(n, 0), y = MultiPoly::variable(n, 1);
  CycloNumber f;
  MultiPoly p = x.pow(2) + y * CycloNumber(2);
  CHECK(p.proportional(p * zeta(3), f));
  CHECK(f == zeta(3));
  CHECK_FALSE(p.proportional(p + x, f));
  CHECK(MultiPoly(2).proportional(MultiPoly(2), f));
  CHECK_FALSE(p.proportional(MultiPoly(2), f));
}

TEST_CASE("expression parser") {
  std::map<std::string, int> vars{{"T0", 0}, {"T1", 1}, {"a", 2}};
  MultiPoly p = parse_poly("T0^3 + 6*a*T0*T1 - T1^3/2", vars, 3);
  CHECK(p.coeff({3, 0, 0}) == CycloNumber(1));
  CHECK(p.coeff({1, 1, 1}) == CycloNumber(6));
  CHECK(p.coeff({0, 3, 0}) == CycloNumber(Rational(-1, 2)));
  CHECK(parse_scalar("eps3^2 + eps3 + 1").is_zero());
  CHECK(parse_scalar("sqrt(-3)") == CycloNumber::sqrt_minus3());
  CHECK(parse_scalar("(1+sqrt(5))/2 * (1-sqrt(5))/2") == CycloNumber(-1));
  CHECK(parse_scalar("i*i") == CycloNumber(-1));
  CHECK(parse_scalar("zeta8") == zeta(8));
  CHECK(parse_scalar("-2^3") == CycloNumber(-8));
  CHECK_THROWS(parse_poly("T0 + b", vars, 3));
  CHECK_THROWS(parse_poly("T0 / T1", vars, 3));
  CHECK_THROWS(parse_poly("T0 +", vars, 3));
}

TEST_CASE("linear map extraction") {
  auto M = linear_map_matrix({"t1", "-t0"}, {"t0", "t1"});
  CHECK(M[0][0].is_zero());
  CHECK(M[0][1] == CycloNumber(1));
  CHECK(M[1][0] == CycloNumber(-1));
  auto H = linear_map_matrix({"(t0+t1)/sqrt(2)", "eps8*t1"}, {"t0", "t1"});
  CHECK(H[0][0] * CycloNumber::sqrt2() == CycloNumber(1));
  CHECK(H[1][1] == zeta(8));
  CHECK_THROWS(linear_map_matrix({"t0*t1"}, {"t0", "t1"}));
  CHECK_THROWS(linear_map_matrix({"t0+1"}, {"t0", "t1"}));
}
