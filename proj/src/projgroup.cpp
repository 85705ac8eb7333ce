#include "cremona/projgroup.hpp"

#include <sstream>
#include <stdexcept>

namespace cremona {

CycloMat CycloMat::identity(int mm) {
  CycloMat r(mm);
  for (int i = 0; i < mm; ++i) r.at(i, i) = CycloNumber(1);
  return r;
}

CycloMat CycloMat::operator*(const CycloMat& o) const {
  if (m != o.m) throw std::invalid_argument("matrix size mismatch");
  CycloMat r(m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      const CycloNumber& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        const CycloNumber& w = o.at(k, j);
        if (w.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + v * w;
      }
    }
  return r;
}

std::string CycloMat::key() const {
  std::string s;
  for (const auto& v : a) {
    s += v.key();
    s += '|';
  }
  return s;
}

std::string CycloMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < m; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

namespace {

// Scales a weight-block matrix to its canonical representative modulo the
// kernel diag(l^{w_j}) (which multiplies column j by l^{w_j}): the first
// nonzero weight-1 entry becomes 1.
void weighted_normalize(CycloMat& m, const std::vector<int>& w) {
  if (w.empty()) return;
  if (static_cast<int>(w.size()) != m.m) throw std::invalid_argument("weight size mismatch");
  for (int i = 0; i < m.m; ++i)
    for (int j = 0; j < m.m; ++j)
      if (w[i] != w[j] && !m.at(i, j).is_zero())
        throw std::invalid_argument("matrix mixes coordinates of different weights");
  CycloNumber lambda(0);
  for (int i = 0; i < m.m && lambda.is_zero(); ++i)
    for (int j = 0; j < m.m && lambda.is_zero(); ++j)
      if (w[i] == 1 && w[j] == 1 && !m.at(i, j).is_zero()) lambda = m.at(i, j).inverse();
  if (lambda.is_zero())
    throw std::invalid_argument("weight-1 block vanishes; cannot normalize");
  for (int i = 0; i < m.m; ++i)
    for (int j = 0; j < m.m; ++j)
      if (!m.at(i, j).is_zero()) m.at(i, j) = m.at(i, j) * lambda.pow(w[j]);
}

}  // namespace

ProjElem::ProjElem(CycloMat m_, std::vector<int> w) : mat(std::move(m_)), weights(std::move(w)) {
  if (!weights.empty()) {
    for (size_t i = 1; i < weights.size(); ++i)
      if (weights[i] < weights[i - 1])
        throw std::invalid_argument("weights must be non-decreasing");
    if (weights[0] != 1) throw std::invalid_argument("weight-1 coordinates required first");
    weighted_normalize(mat, weights);
  }
}

ProjElem ProjElem::operator*(const ProjElem& o) const {
  if (weights != o.weights) throw std::invalid_argument("weight mismatch");
  return ProjElem(mat * o.mat, weights);
}

MonomialElement::MonomialElement(std::array<int, 3> p, std::array<CycloNumber, 3> s)
    : perm(p), scalars(std::move(s)) {
  for (const auto& v : scalars)
    if (v.is_zero()) throw std::invalid_argument("monomial scalar must be nonzero");
  CycloNumber inv0 = scalars[0].inverse();
  for (auto& v : scalars) v = v * inv0;
}

MonomialElement MonomialElement::operator*(const MonomialElement& o) const {
  // (this∘o): x_i -> s_i x_{p(i)} after o gives s_i * t_{p(i)} * x_{q(p(i))}.
  std::array<int, 3> p;
  std::array<CycloNumber, 3> s{{CycloNumber(1), CycloNumber(1), CycloNumber(1)}};
  for (int i = 0; i < 3; ++i) {
    p[i] = o.perm[perm[i]];
    s[i] = scalars[i] * o.scalars[perm[i]];
  }
  return MonomialElement(p, std::move(s));
}

std::string MonomialElement::key() const {
  std::string k;
  for (int i = 0; i < 3; ++i) {
    k += static_cast<char>('0' + perm[i]);
    k += scalars[i].key();
    k += '|';
  }
  return k;
}

std::string MonomialElement::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    if (i) os << ", ";
    if (!(scalars[i] == CycloNumber(1))) os << "(" << scalars[i].str() << ")*";
    os << "x" << perm[i];
  }
  os << "]";
  return os.str();
}

FiniteGroup build_imprimitive(int n, int k, int s, bool with_s3,
                              std::vector<MonomialElement>* elements_out) {
  if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1, k >= 1");
  if (n % k != 0) throw std::invalid_argument("k must divide n");
  if (k > 1 && ((static_cast<long>(s) * s - s + 1) % k) != 0)
    throw std::invalid_argument("s^2-s+1 != 0 (mod " + std::to_string(k) + ")");
  if (with_s3 && !(k == 1 || (k == 3 && ((s % 3) + 3) % 3 == 2)))
    throw std::invalid_argument("S_3 variant needs k = 1, or k = 3 with s = 2 mod 3");

  auto diag = [&](CycloNumber a, CycloNumber b, CycloNumber c) {
    return MonomialElement({0, 1, 2}, {std::move(a), std::move(b), std::move(c)});
  };
  const CycloNumber one(1);
  std::vector<MonomialElement> gens;
  if (k == 1) {
    gens.push_back(diag(CycloNumber::root_of_unity(n, 1), one, one));
    gens.push_back(diag(one, CycloNumber::root_of_unity(n, 1), one));
  } else {
    gens.push_back(diag(CycloNumber::root_of_unity(n / k, 1), one, one));
    gens.push_back(diag(CycloNumber::root_of_unity(n, s), CycloNumber::root_of_unity(n, 1), one));
  }
  // Coordinate 3-cycle x_i -> x_{i+1 mod 3} as a map: [x_2, x_0, x_1].
  gens.push_back(MonomialElement({2, 0, 1}, {one, one, one}));
  if (with_s3) gens.push_back(MonomialElement({0, 2, 1}, {one, one, one}));

  auto mulf = [](const MonomialElement& a, const MonomialElement& b) { return a * b; };
  auto keyf = [](const MonomialElement& a) { return a.key(); };
  FiniteGroup G = build_group(MonomialElement(), gens, mulf, keyf, elements_out);
  long expected = (with_s3 ? 6L : 3L) * n * n / k;
  if (G.n != expected)
    throw std::logic_error("imprimitive group order " + std::to_string(G.n) +
                           " != expected " + std::to_string(expected));
  return G;
}

}  // namespace cremona
