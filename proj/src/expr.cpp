#include "cremona/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace cremona {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const std::map<std::string, int>& vars;
  int nvars;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) +
                                " in \"" + s + "\": " + msg);
  }

  long read_integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = acc * d.constant_value().inverse();
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    MultiPoly base = primary();
    skip_ws();
    if (eat('^')) {
      long e = read_integer();
      if (e < 0) fail("negative exponent");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  MultiPoly primary() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      MultiPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = read_integer();
      return MultiPoly::constant(nvars, CycloNumber(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (name == "sqrt") {
        if (!eat('(')) fail("sqrt requires parenthesized integer");
        long k = read_integer();
        if (!eat(')')) fail("expected ')' after sqrt argument");
        return MultiPoly::constant(nvars, CycloNumber::sqrt_integer(k));
      }
      if (name == "i") return MultiPoly::constant(nvars, CycloNumber::i());
      for (const std::string& prefix : {std::string("eps"), std::string("zeta")}) {
        if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0 &&
            std::isdigit(static_cast<unsigned char>(name[prefix.size()]))) {
          int n = std::stoi(name.substr(prefix.size()));
          return MultiPoly::constant(nvars, CycloNumber::root_of_unity(n, 1));
        }
      }
      auto it = vars.find(name);
      if (it == vars.end()) fail("unknown symbol: " + name);
      return MultiPoly::variable(nvars, it->second);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::map<std::string, int>& vars,
                     int nvars) {
  Parser p{text, 0, vars, nvars};
  MultiPoly out = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

CycloNumber parse_scalar(const std::string& text) {
  MultiPoly p = parse_poly(text, {}, 0);
  return p.constant_value();
}

std::vector<std::vector<CycloNumber>> linear_map_matrix(
    const std::vector<std::string>& slots, const std::vector<std::string>& var_names) {
  std::map<std::string, int> vars;
  for (size_t i = 0; i < var_names.size(); ++i)
    vars[var_names[i]] = static_cast<int>(i);
  int n = static_cast<int>(var_names.size());
  std::vector<std::vector<CycloNumber>> M(slots.size(),
                                          std::vector<CycloNumber>(n, CycloNumber(0)));
  for (size_t r = 0; r < slots.size(); ++r) {
    MultiPoly p = parse_poly(slots[r], vars, n);
    for (const auto& [m, c] : p.terms()) {
      int deg = 0, var = -1;
      for (int v = 0; v < n; ++v) {
        deg += m[v];
        if (m[v] > 0) var = v;
      }
      if (deg != 1)
        throw std::invalid_argument("slot expression is not homogeneous linear: " +
                                    slots[r]);
      M[r][var] = c;
    }
  }
  return M;
}

}  // namespace cremona
