#include "cremona/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cremona {

bool GrLexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  // Same total degree: lex with earlier variables more significant.
  for (size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

void MultiPoly::strip() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

MultiPoly MultiPoly::constant(int nvars, const CycloNumber& c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  MultiPoly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.terms_[m] = CycloNumber(1);
  return p;
}

MultiPoly MultiPoly::monomial(Monomial m, const CycloNumber& c) {
  MultiPoly p(static_cast<int>(m.size()));
  if (!c.is_zero()) p.terms_[std::move(m)] = c;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

const CycloNumber& MultiPoly::constant_value() const {
  static const CycloNumber zero(0);
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  if (terms_.empty()) return zero;
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.rbegin()->first) d += e;
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return terms_.empty() ? -1 : std::max(d, 0);
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const CycloNumber& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::logic_error("variable count mismatch");
  MultiPoly out = *this;
  for (const auto& [m, c] : o.terms_) {
    auto it = out.terms_.find(m);
    if (it == out.terms_.end())
      out.terms_[m] = c;
    else
      it->second += c;
  }
  out.strip();
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::logic_error("variable count mismatch");
  MultiPoly out(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      CycloNumber prod = ca * cb;
      auto it = out.terms_.find(m);
      if (it == out.terms_.end())
        out.terms_[std::move(m)] = prod;
      else
        it->second += prod;
    }
  }
  out.strip();
  return out;
}

MultiPoly MultiPoly::operator*(const CycloNumber& s) const {
  if (s.is_zero()) return MultiPoly(nvars_);
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c *= s;
  out.strip();
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  MultiPoly acc = constant(nvars_, CycloNumber(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycloNumber MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycloNumber(0) : it->second;
}

void MultiPoly::set_coeff(const Monomial& m, const CycloNumber& c) {
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = c;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::logic_error("substitute: image count mismatch");
  int target_vars = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != target_vars) throw std::logic_error("substitute: mixed rings");
  // Power cache per variable.
  std::vector<std::vector<MultiPoly>> pw(nvars_);
  for (int v = 0; v < nvars_; ++v)
    pw[v].push_back(MultiPoly::constant(target_vars, CycloNumber(1)));
  MultiPoly out(target_vars);
  for (const auto& [m, c] : terms_) {
    MultiPoly term = MultiPoly::constant(target_vars, c);
    for (int v = 0; v < nvars_; ++v) {
      while (static_cast<int>(pw[v].size()) <= m[v])
        pw[v].push_back(pw[v].back() * images[v]);
      if (m[v] > 0) term = term * pw[v][m[v]];
    }
    out = out + term;
  }
  return out;
}

CycloNumber MultiPoly::eval(const std::vector<CycloNumber>& values) const {
  if (static_cast<int>(values.size()) != nvars_)
    throw std::logic_error("eval: value count mismatch");
  CycloNumber out(0);
  for (const auto& [m, c] : terms_) {
    CycloNumber t = c;
    for (int v = 0; v < nvars_; ++v)
      if (m[v] > 0) t *= values[v].pow(m[v]);
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    out.terms_[d] = c * CycloNumber(m[var]);
  }
  out.strip();
  return out;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  return *this * leading_coeff().inverse();
}

MultiPoly MultiPoly::widen(int new_nvars) const {
  if (new_nvars < nvars_) throw std::logic_error("widen: cannot drop variables");
  MultiPoly out(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial w = m;
    w.resize(new_nvars, 0);
    out.terms_[std::move(w)] = c;
  }
  return out;
}

bool MultiPoly::proportional(const MultiPoly& o, CycloNumber& factor) const {
  if (is_zero() && o.is_zero()) {
    factor = CycloNumber(1);
    return true;
  }
  if (is_zero() || o.is_zero()) return false;
  if (terms_.size() != o.terms_.size()) return false;
  factor = o.leading_coeff() / leading_coeff();
  return o == *this * factor;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  MultiPoly rem = a, quo(a.nvars());
  const Monomial& lb = b.leading_monomial();
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    Monomial q(rem.nvars());
    for (int i = 0; i < rem.nvars(); ++i) {
      q[i] = lr[i] - lb[i];
      if (q[i] < 0) throw std::logic_error("polynomial division not exact");
    }
    CycloNumber f = rem.leading_coeff() / b.leading_coeff();
    MultiPoly t = MultiPoly::monomial(q, f);
    quo = quo + t;
    rem = rem - t * b;
  }
  return quo;
}

namespace {

// Coefficient of v^k, as a polynomial with the v-exponent zeroed out.
MultiPoly coeff_in_var(const MultiPoly& p, int v, int k) {
  MultiPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[v] != k) continue;
    Monomial q = m;
    q[v] = 0;
    out.set_coeff(q, c);
  }
  return out;
}

MultiPoly times_var_power(const MultiPoly& p, int v, int k) {
  MultiPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial q = m;
    q[v] += k;
    out.set_coeff(q, c);
  }
  return out;
}

// Pseudo-remainder of f by g with respect to variable v.
MultiPoly prem(MultiPoly f, const MultiPoly& g, int v) {
  int dg = g.degree_in(v);
  MultiPoly lcg = coeff_in_var(g, v, dg);
  int e = f.degree_in(v) - dg + 1;
  while (!f.is_zero() && f.degree_in(v) >= dg) {
    int df = f.degree_in(v);
    MultiPoly lcf = coeff_in_var(f, v, df);
    f = lcg * f - times_var_power(lcf * g, v, df - dg);
    --e;
  }
  if (e > 0) {
    MultiPoly scale = lcg.pow(e);
    f = scale * f;
  }
  return f;
}

MultiPoly content_in_var(const MultiPoly& p, int v) {
  MultiPoly c(p.nvars());
  for (int k = 0; k <= p.degree_in(v); ++k) {
    MultiPoly ck = coeff_in_var(p, v, k);
    if (ck.is_zero()) continue;
    c = c.is_zero() ? ck : MultiPoly::gcd(c, ck);
  }
  return c;
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant())
    return constant(a.nvars(), CycloNumber(1));
  // Main variable: smallest index occurring in either operand.
  int v = -1;
  for (int i = 0; i < a.nvars() && v < 0; ++i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) v = i;
  if (a.degree_in(v) == 0) return gcd(content_in_var(b, v), a);
  if (b.degree_in(v) == 0) return gcd(content_in_var(a, v), b);

  MultiPoly ca = content_in_var(a, v), cb = content_in_var(b, v);
  MultiPoly c = gcd(ca, cb);
  MultiPoly f = divide_exact(a, ca), g = divide_exact(b, cb);
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  while (true) {
    MultiPoly r = prem(f, g, v);
    if (r.is_zero()) return (c * g).normalized();
    if (r.degree_in(v) == 0) return c.normalized();
    f = g;
    g = divide_exact(r, content_in_var(r, v));
  }
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    const CycloNumber& c = it->second;
    bool has_vars = false;
    for (int e : m)
      if (e) has_vars = true;
    std::string cs = c.str();
    bool simple = c.is_rational();
    if (!first) out << " + ";
    if (!has_vars) {
      out << (simple ? cs : "(" + cs + ")");
    } else {
      if (!simple) {
        out << "(" << cs << ")*";
      } else if (c.rational_value() == -1) {
        out << "-";
      } else if (c.rational_value() != 1) {
        out << cs << "*";
      }
      bool firstv = true;
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!firstv) out << "*";
        out << (i < names.size() ? names[i] : "x" + std::to_string(i));
        if (m[i] > 1) out << "^" << m[i];
        firstv = false;
      }
    }
    first = false;
  }
  return out.str();
}

}  // namespace cremona
