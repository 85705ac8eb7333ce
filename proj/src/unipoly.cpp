#include "cremona/unipoly.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cremona {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UniPoly::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& s) const {
  if (s == 0) return UniPoly();
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= s;
  return UniPoly(std::move(v));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo;
  int db = b.degree();
  if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rational(0));
  while (static_cast<int>(rem.size()) - 1 >= db) {
    int dr = static_cast<int>(rem.size()) - 1;
    Rational f = rem.back() / b.leading();
    quo[dr - db] = f;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.c_[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  q = UniPoly(std::move(quo));
  r = UniPoly(std::move(rem));
}

UniPoly UniPoly::div_exact(const UniPoly& b) const {
  UniPoly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw std::logic_error("polynomial division not exact");
  return q;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool unit = (a == 1);
    if (i == 0) {
      out << a.str();
    } else {
      if (!unit) out << a.str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const UniPoly& cyclotomic_polynomial(int n) {
  static std::map<int, UniPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  // t^n - 1 divided by the product of Phi_d over proper divisors d of n.
  std::vector<Rational> tn(n + 1, Rational(0));
  tn[0] = -1;
  tn[n] = 1;
  UniPoly p{std::move(tn)};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = p.div_exact(cyclotomic_polynomial(d));
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace cremona
