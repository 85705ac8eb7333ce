#include "cremona/cyclo.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cremona {

namespace {

// Extended Euclid over Q[t]: returns g (monic gcd) with u*a + v*b = g.
UniPoly ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& u, UniPoly& v) {
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = UniPoly::constant(1), u1;
  UniPoly v0, v1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    UniPoly q, r;
    UniPoly::divmod(r0, r1, q, r);
    r0 = r1;
    r1 = r;
    UniPoly u2 = u0 - q * u1;
    u0 = u1;
    u1 = u2;
    UniPoly v2 = v0 - q * v1;
    v0 = v1;
    v1 = v2;
  }
  if (r0.is_zero()) { u = u0; v = v0; return r0; }
  Rational lc = r0.leading();
  UniPoly scale = UniPoly::constant(Rational(1) / lc);
  u = u0 * scale;
  v = v0 * scale;
  return r0.monic();
}

std::vector<Rational> reduce_mod_phi(int n, const std::vector<Rational>& dense) {
  const UniPoly& phi = cyclotomic_polynomial(n);
  UniPoly q, r;
  UniPoly::divmod(UniPoly(std::vector<Rational>(dense)), phi, q, r);
  std::vector<Rational> out(euler_phi(n), Rational(0));
  for (int i = 0; i <= r.degree(); ++i) out[i] = r.coeff(i);
  return out;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Coordinates of zeta_n^k (k reduced mod n) on the power basis mod Phi_n.
std::vector<Rational> power_coords(int n, long k) {
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> dense(static_cast<size_t>(k) + 1, Rational(0));
  dense[k] = 1;
  return reduce_mod_phi(n, dense);
}

// Solve A y = rhs exactly (columns of A given); returns true + y on success.
bool solve_exact(std::vector<std::vector<Rational>> cols,
                 std::vector<Rational> rhs, std::vector<Rational>& y) {
  size_t m = rhs.size(), k = cols.size();
  // Gaussian elimination on the augmented column set.
  std::vector<size_t> pivot_row(k);
  size_t row = 0;
  std::vector<size_t> used;
  for (size_t col = 0; col < k && row < m; ++col) {
    size_t sel = m;
    for (size_t r = row; r < m; ++r)
      if (cols[col][r] != 0) { sel = r; break; }
    if (sel == m) { pivot_row[col] = SIZE_MAX; continue; }
    for (size_t c = col; c < k; ++c) std::swap(cols[c][sel], cols[c][row]);
    std::swap(rhs[sel], rhs[row]);
    Rational inv = Rational(1) / cols[col][row];
    for (size_t c = col; c < k; ++c) cols[c][row] *= inv;
    rhs[row] *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == row || cols[col][r] == 0) continue;
      Rational f = cols[col][r];
      for (size_t c = col; c < k; ++c) cols[c][r] -= f * cols[c][row];
      rhs[r] -= f * rhs[row];
    }
    pivot_row[col] = row;
    ++row;
  }
  // Consistency: rows past the pivot block must have zero rhs.
  for (size_t r = row; r < m; ++r)
    if (rhs[r] != 0) return false;
  y.assign(k, Rational(0));
  for (size_t col = 0; col < k; ++col)
    if (pivot_row[col] != SIZE_MAX) y[col] = rhs[pivot_row[col]];
  // Columns without pivots get 0; verify the candidate actually solves.
  return true;
}

}  // namespace

CycloNumber::CycloNumber(int n, std::vector<Rational> c, bool canonical)
    : n_(n), c_(std::move(c)) {
  if (!canonical) canonicalize();
}

const Rational& CycloNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("cyclotomic number is not rational: " + str());
  return c_[0];
}

void CycloNumber::canonicalize() {
  if (static_cast<int>(c_.size()) != euler_phi(n_))
    throw std::logic_error("cyclotomic coordinate size mismatch");
  // Step 1: n = 2m with m odd collapses to conductor m via zeta_2m = -zeta_m^{(m+1)/2}.
  while (n_ % 2 == 0 && (n_ / 2) % 2 == 1 && n_ > 2) {
    int m = n_ / 2;
    std::vector<Rational> dense(m, Rational(0));
    std::vector<Rational> tmp(2 * static_cast<size_t>(m), Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      long e = (static_cast<long>(j) * ((m + 1) / 2)) % m;
      Rational val = (j % 2 == 0) ? c_[j] : -c_[j];
      tmp[e] += val;
    }
    tmp.resize(m);
    c_ = reduce_mod_phi(m, tmp);
    n_ = m;
  }
  // phi(2) = 1: a conductor-2 element is stored on the basis {1}, so the
  // coordinate is already the rational value.
  if (n_ == 2) n_ = 1;
  if (n_ == 1) return;
  // Step 2: rational shortcut.
  bool rat = true;
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) { rat = false; break; }
  if (rat) {
    c_ = {c_[0]};
    n_ = 1;
    return;
  }
  // Step 3: prime-by-prime conductor descent.
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    for (int p : prime_factors(n_)) {
      int d = n_ / p;
      if (d == 1) {
        continue;  // rational case already excluded above
      }
      int phid = euler_phi(d);
      std::vector<std::vector<Rational>> cols(phid);
      for (int j = 0; j < phid; ++j)
        cols[j] = power_coords(n_, static_cast<long>(j) * (n_ / d));
      std::vector<Rational> y;
      if (!solve_exact(cols, c_, y)) continue;
      // Verify (solve_exact trusts pivot structure; cheap recheck).
      std::vector<Rational> chk(c_.size(), Rational(0));
      for (int j = 0; j < phid; ++j)
        for (size_t r = 0; r < chk.size(); ++r) chk[r] += y[j] * cols[j][r];
      // cols were destroyed by elimination inside solve_exact? No: passed by value.
      bool ok = true;
      for (size_t r = 0; r < chk.size(); ++r)
        if (chk[r] != c_[r]) { ok = false; break; }
      if (!ok) continue;
      n_ = d;
      c_ = std::move(y);
      // Re-normalize the 2*odd case, then keep descending.
      while (n_ % 2 == 0 && (n_ / 2) % 2 == 1 && n_ > 2) {
        int m = n_ / 2;
        std::vector<Rational> tmp(2 * static_cast<size_t>(m), Rational(0));
        for (size_t j = 0; j < c_.size(); ++j) {
          if (c_[j] == 0) continue;
          long e = (static_cast<long>(j) * ((m + 1) / 2)) % m;
          tmp[e] += (j % 2 == 0) ? c_[j] : -c_[j];
        }
        tmp.resize(m);
        c_ = reduce_mod_phi(m, tmp);
        n_ = m;
      }
      if (n_ == 2) n_ = 1;
      if (n_ == 1) return;
      bool rat2 = true;
      for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) { rat2 = false; break; }
      if (rat2) { c_ = {c_[0]}; n_ = 1; return; }
      changed = true;
      break;
    }
  }
}

std::vector<Rational> CycloNumber::embed(const CycloNumber& x, int m) {
  if (m % x.n_ != 0) throw std::logic_error("embed target is not a multiple of conductor");
  if (m == x.n_) return x.c_;
  int stride = m / x.n_;
  std::vector<Rational> dense(static_cast<size_t>(m), Rational(0));
  for (size_t j = 0; j < x.c_.size(); ++j) dense[j * stride] = x.c_[j];
  return reduce_mod_phi(m, dense);
}

CycloNumber CycloNumber::root_of_unity(int n, long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: order must be positive");
  return CycloNumber(n, power_coords(n, k), false);
}

CycloNumber CycloNumber::i() { return root_of_unity(4, 1); }

CycloNumber CycloNumber::sqrt2() {
  return root_of_unity(8, 1) + root_of_unity(8, 7);
}

CycloNumber CycloNumber::sqrt5() {
  return CycloNumber(2) * (root_of_unity(5, 1) + root_of_unity(5, 4)) + CycloNumber(1);
}

CycloNumber CycloNumber::sqrt_minus3() {
  return CycloNumber(2) * root_of_unity(3, 1) + CycloNumber(1);
}

namespace {
int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long r = 1, base = a, e = (p - 1) / 2, mod = p;
  while (e) {
    if (e & 1) r = r * base % mod;
    base = base * base % mod;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}
}  // namespace

CycloNumber CycloNumber::sqrt_integer(long k) {
  if (k == 0) return CycloNumber(0);
  CycloNumber out(1);
  if (k < 0) {
    out = i();
    k = -k;
  }
  long s = 1;
  for (long p = 2; p * p <= k; ++p) {
    while (k % (p * p) == 0) {
      s *= p;
      k /= p * p;
    }
  }
  out = out * CycloNumber(s);
  // k is now square-free; take square roots prime by prime.
  for (long p = 2; p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (p == 2) {
      out = out * sqrt2();
      continue;
    }
    CycloNumber g(0);  // Gauss sum: sqrt(p) for p=1 mod 4, i*sqrt(p) for p=3 mod 4
    for (long a = 1; a < p; ++a)
      g += CycloNumber(legendre(a, p)) * root_of_unity(static_cast<int>(p), a);
    if (p % 4 == 1)
      out = out * g;
    else
      out = out * g * i().inverse();
  }
  return out;
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
  if (n_ == 1 && o.n_ == 1) return CycloNumber(c_[0] + o.c_[0]);
  int m = std::lcm(n_, o.n_);
  if (m % 4 == 2) m /= 2;  // same field, smaller basis
  std::vector<Rational> a = embed(*this, m), b = embed(o, m);
  for (size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  return CycloNumber(m, std::move(a), false);
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const { return *this + (-o); }

CycloNumber CycloNumber::operator-() const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x = -x;
  return CycloNumber(n_, std::move(v), true);
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
  if (n_ == 1 && o.n_ == 1) return CycloNumber(c_[0] * o.c_[0]);
  if (n_ == 1) {
    if (c_[0] == 0) return CycloNumber(0);
    std::vector<Rational> v(o.c_);
    for (auto& x : v) x *= c_[0];
    // Scalar multiple cannot shrink the conductor unless it is zero.
    return CycloNumber(o.n_, std::move(v), true);
  }
  if (o.n_ == 1) return o * *this;
  int m = std::lcm(n_, o.n_);
  if (m % 4 == 2) m /= 2;
  std::vector<Rational> a = embed(*this, m), b = embed(o, m);
  std::vector<Rational> conv(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      conv[i + j] += a[i] * b[j];
    }
  }
  return CycloNumber(m, reduce_mod_phi(m, conv), false);
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (n_ == 1) return CycloNumber(Rational(1) / c_[0]);
  UniPoly p{std::vector<Rational>(c_)};
  UniPoly u, v;
  UniPoly g = ext_gcd(p, cyclotomic_polynomial(n_), u, v);
  if (g.degree() != 0)
    throw std::logic_error("element not invertible in cyclotomic field");
  std::vector<Rational> dense(u.coeffs());
  dense.resize(std::max<size_t>(dense.size(), 1), Rational(0));
  return CycloNumber(n_, reduce_mod_phi(n_, dense), false);
}

CycloNumber CycloNumber::operator/(const CycloNumber& o) const { return *this * o.inverse(); }

CycloNumber CycloNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNumber base = *this, acc(1);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycloNumber CycloNumber::conj() const {
  if (n_ == 1) return *this;
  std::vector<Rational> dense(static_cast<size_t>(n_), Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    long e = (n_ - static_cast<long>(j)) % n_;
    dense[e] += c_[j];
  }
  return CycloNumber(n_, reduce_mod_phi(n_, dense), false);
}

bool CycloNumber::operator<(const CycloNumber& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] != o.c_[j]) return c_[j] < o.c_[j];
  }
  return false;
}

std::string CycloNumber::str() const {
  if (n_ == 1) return c_[0].str();
  std::ostringstream out;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    const Rational& a = c_[j];
    if (a == 0) continue;
    Rational v = a;
    if (first) {
      if (v < 0) { out << "-"; v = -v; }
    } else {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (j == 0) {
      out << v.str();
    } else {
      if (v != 1) out << v.str() << "*";
      out << "z" << n_;
      if (j > 1) out << "^" << j;
    }
    first = false;
  }
  return out.str();
}

std::string CycloNumber::key() const {
  std::ostringstream out;
  out << n_ << ":";
  for (size_t j = 0; j < c_.size(); ++j) {
    if (j) out << ",";
    out << c_[j].str();
  }
  return out.str();
}

long CycloNumber::root_of_unity_order() const {
  if (is_zero()) return 0;
  long m0 = (n_ % 2 == 0) ? n_ : 2L * n_;
  if (n_ == 1) {
    if (c_[0] == 1) return 1;
    if (c_[0] == -1) return 2;
    return 0;
  }
  CycloNumber one(1);
  if (pow(m0) != one) return 0;
  long o = m0;
  for (long p = 2; p <= o; ++p) {
    if (o % p != 0) continue;
    while (o % p == 0 && pow(o / p) == one) o /= p;
  }
  return o;
}

}  // namespace cremona
