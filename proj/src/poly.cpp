#include "ellq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace ellq {

bool GradedLexDesc::operator()(const std::vector<int>& a,
                               const std::vector<int>& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() > b.size();  // only hit by mismatched contexts
}

MultiPoly MultiPoly::constant(const Rat& value, VarList vars) {
  MultiPoly p(std::move(vars));
  if (value != 0) p.terms_[std::vector<int>(p.vars_.size(), 0)] = value;
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name, VarList vars) {
  if (std::find(vars.begin(), vars.end(), name) == vars.end())
    vars.push_back(name);
  MultiPoly p(std::move(vars));
  std::vector<int> e(p.vars_.size(), 0);
  e[static_cast<size_t>(p.var_index(name))] = 1;
  p.terms_[e] = 1;
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first ==
                                    std::vector<int>(vars_.size(), 0));
}

Rat MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw math_error("constant_value of a nonconstant polynomial");
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;  // leading term has maximal degree
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0L));
}

int MultiPoly::degree_in(const std::string& var) const {
  int idx = var_index(var);
  if (idx < 0) return terms_.empty() ? -1 : 0;
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(idx)]);
  return d;
}

void MultiPoly::insert_term(const std::vector<int>& exps, const Rat& coef) {
  if (coef == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coef);
  } else {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::var_index(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

VarList merge_contexts(const VarList& a, const VarList& b) {
  auto contains = [](const VarList& v, const std::string& n) {
    return std::find(v.begin(), v.end(), n) != v.end();
  };
  VarList out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && !contains(b, a[i])) {
      out.push_back(a[i++]);
      continue;
    }
    if (j < b.size() && !contains(a, b[j])) {
      out.push_back(b[j++]);
      continue;
    }
    if (i < a.size() && j < b.size() && a[i] == b[j]) {
      out.push_back(a[i]);
      ++i;
      ++j;
      continue;
    }
    // Both heads are shared names but they differ, or one side ran out while
    // the other still holds a shared name: the relative orders conflict.
    throw math_error("variable contexts order shared names inconsistently");
  }
  return out;
}

MultiPoly merge_align(const MultiPoly& p, const VarList& merged) {
  if (p.vars_ == merged) return p;
  std::vector<size_t> where(p.vars_.size());
  for (size_t k = 0; k < p.vars_.size(); ++k) {
    auto it = std::find(merged.begin(), merged.end(), p.vars_[k]);
    if (it == merged.end()) throw math_error("context merge lost a variable");
    where[k] = static_cast<size_t>(it - merged.begin());
  }
  MultiPoly out(merged);
  for (const auto& [e, c] : p.terms_) {
    std::vector<int> ne(merged.size(), 0);
    for (size_t k = 0; k < e.size(); ++k) ne[where[k]] = e[k];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly MultiPoly::with_vars(const VarList& vars) const {
  return merge_align(*this, merge_contexts(vars_, vars));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  VarList merged = merge_contexts(vars_, rhs.vars_);
  MultiPoly a = merge_align(*this, merged);
  MultiPoly b = merge_align(rhs, merged);
  for (const auto& [e, c] : b.terms_) a.insert_term(e, c);
  return a;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
  return *this + (-rhs);
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  VarList merged = merge_contexts(vars_, rhs.vars_);
  MultiPoly a = merge_align(*this, merged);
  MultiPoly b = merge_align(rhs, merged);
  MultiPoly out(merged);
  std::vector<int> e(merged.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.insert_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly out(vars_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

MultiPoly operator+(const MultiPoly& p, const Rat& c) {
  return p + MultiPoly::constant(c, p.vars());
}
MultiPoly operator+(const Rat& c, const MultiPoly& p) { return p + c; }
MultiPoly operator-(const MultiPoly& p, const Rat& c) {
  return p - MultiPoly::constant(c, p.vars());
}
MultiPoly operator-(const Rat& c, const MultiPoly& p) {
  return MultiPoly::constant(c, p.vars()) - p;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw math_error("negative polynomial power");
  MultiPoly acc = MultiPoly::constant(1, vars_);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  if (vars_ == rhs.vars_) return terms_ == rhs.terms_;
  VarList merged = merge_contexts(vars_, rhs.vars_);
  return merge_align(*this, merged).terms_ == merge_align(rhs, merged).terms_;
}

std::optional<MultiPoly> MultiPoly::try_exact_div(const MultiPoly& d) const {
  if (d.is_zero()) throw math_error("division by the zero polynomial");
  VarList merged = merge_contexts(vars_, d.vars_);
  MultiPoly r = merge_align(*this, merged);
  MultiPoly dd = merge_align(d, merged);
  MultiPoly q(merged);
  const auto& ltd = *dd.terms_.begin();
  while (!r.terms_.empty()) {
    const auto& ltr = *r.terms_.begin();
    std::vector<int> e(merged.size());
    for (size_t k = 0; k < e.size(); ++k) {
      e[k] = ltr.first[k] - ltd.first[k];
      if (e[k] < 0) return std::nullopt;
    }
    Rat c = ltr.second / ltd.second;
    // If the quotient exists its leading term is LT(r)/LT(d), so peeling it
    // off greedily succeeds exactly when the division is exact.
    q.insert_term(e, c);
    MultiPoly mono(merged);
    mono.terms_.emplace(std::move(e), c);
    r = r - mono * dd;
  }
  return q;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& d) const {
  auto q = try_exact_div(d);
  if (!q) throw math_error("polynomial division is not exact");
  return *q;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  int idx = var_index(var);
  MultiPoly out(vars_);
  if (idx < 0) return out;
  size_t i = static_cast<size_t>(idx);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    std::vector<int> ne = e;
    --ne[i];
    out.insert_term(ne, c * e[i]);
  }
  return out;
}

MultiPoly MultiPoly::specialize(const std::map<std::string, Rat>& values) const {
  std::vector<int> which(vars_.size(), 0);
  std::vector<Rat> vals(vars_.size());
  for (const auto& [name, v] : values) {
    int idx = var_index(name);
    if (idx < 0) continue;
    which[static_cast<size_t>(idx)] = 1;
    vals[static_cast<size_t>(idx)] = v;
  }
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Rat nc = c;
    std::vector<int> ne = e;
    for (size_t k = 0; k < e.size(); ++k) {
      if (which[k] && e[k] > 0) {
        nc *= rat_pow(vals[k], e[k]);
        ne[k] = 0;
      }
    }
    out.insert_term(ne, nc);
  }
  return out;
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& values) const {
  MultiPoly s = specialize(values);
  if (!s.is_constant()) throw input_error("evaluation is missing variable values");
  return s.constant_value();
}

MultiPoly MultiPoly::substitute_power(const std::string& var, int k) const {
  if (k < 1) throw math_error("substitute_power requires exponent >= 1");
  int idx = var_index(var);
  if (idx < 0) return *this;
  size_t i = static_cast<size_t>(idx);
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne = e;
    ne[i] *= k;
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly MultiPoly::substitute_rational(
    const std::map<std::string, std::pair<MultiPoly, MultiPoly>>& images) const {
  // Collect per-variable degree bounds so denominators can be cleared by a
  // uniform power den_v^{deg_v(p)}.
  std::map<size_t, std::pair<const MultiPoly*, const MultiPoly*>> slots;
  std::map<size_t, int> bound;
  for (const auto& [name, nd] : images) {
    int idx = var_index(name);
    if (idx < 0) continue;
    size_t i = static_cast<size_t>(idx);
    slots[i] = {&nd.first, &nd.second};
    bound[i] = std::max(0, degree_in(name));
  }
  MultiPoly acc;
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(c);
    std::vector<int> rest(vars_.size(), 0);
    for (size_t k = 0; k < e.size(); ++k) {
      auto it = slots.find(k);
      if (it == slots.end()) {
        rest[k] = e[k];
      } else {
        term = term * it->second.first->pow(e[k]);
        term = term * it->second.second->pow(bound[k] - e[k]);
      }
    }
    MultiPoly mono(vars_);
    mono.terms_.emplace(std::move(rest), Rat(1));
    acc = acc + term * mono;
  }
  return acc;
}

MultiPoly MultiPoly::reduce_power_relation(const std::string& var, int n,
                                           const MultiPoly& replacement) const {
  if (n < 1) throw math_error("power relation requires exponent >= 1");
  if (replacement.degree_in(var) > 0)
    throw math_error("power relation replacement must not involve the variable");
  int idx = var_index(var);
  if (idx < 0) return *this;
  size_t i = static_cast<size_t>(idx);
  std::vector<MultiPoly> powers = {MultiPoly::constant(1)};
  MultiPoly acc;
  for (const auto& [e, c] : terms_) {
    int k = e[i] / n, r = e[i] % n;
    while (static_cast<int>(powers.size()) <= k)
      powers.push_back(powers.back() * replacement);
    std::vector<int> ne = e;
    ne[i] = r;
    MultiPoly mono(vars_);
    mono.terms_.emplace(std::move(ne), c);
    acc = acc + mono * powers[static_cast<size_t>(k)];
  }
  return acc;
}

Rat MultiPoly::coeff(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rat(0) : it->second;
}

MultiPoly MultiPoly::coeff_of(const std::string& var, int k) const {
  int idx = var_index(var);
  MultiPoly out(vars_);
  if (idx < 0) {
    if (k == 0) return *this;
    return out;
  }
  size_t i = static_cast<size_t>(idx);
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    std::vector<int> ne = e;
    ne[i] = 0;
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += rat_str(a);
    } else {
      if (a != 1) out += rat_str(a) + "*";
      out += mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  const VarList& vars;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw input_error(msg + " at position " + std::to_string(pos) + " in '" + s +
                      "'");
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string read_digits() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected an integer");
    return s.substr(start, pos - start);
  }

  MultiPoly parse_expr() {
    bool neg = false;
    char c = peek();
    if (c == '-') {
      neg = true;
      ++pos;
    } else if (c == '+') {
      ++pos;
    }
    MultiPoly acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      char op = peek();
      if (op == '+') {
        ++pos;
        acc = acc + parse_term();
      } else if (op == '-') {
        ++pos;
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly parse_term() {
    MultiPoly acc = parse_factor();
    while (peek() == '*') {
      ++pos;
      acc = acc * parse_factor();
    }
    return acc;
  }

  MultiPoly parse_factor() {
    MultiPoly base = parse_primary();
    if (peek() == '^') {
      ++pos;
      if (peek() == '-') fail("negative exponents are not allowed");
      std::string digits = read_digits();
      Int e(digits);
      if (!e.fits_sint_p()) fail("exponent is too large");
      return base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }

  MultiPoly parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos;
      MultiPoly inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den = read_digits();
        if (Int(den) == 0) fail("zero denominator");
        return MultiPoly::constant(make_rat(Int(num), Int(den)), vars);
      }
      return MultiPoly::constant(Rat(Int(num)), vars);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
        pos = start;
        fail("unknown variable '" + name + "'");
      }
      return MultiPoly::variable(name, vars);
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const VarList& vars) {
  {
    std::set<std::string> seen;
    for (const auto& v : vars)
      if (!seen.insert(v).second)
        throw input_error("duplicate variable name '" + v + "'");
  }
  Parser p{text, vars};
  MultiPoly result = p.parse_expr();
  if (p.peek() != '\0') p.fail("trailing input");
  return result.with_vars(vars);
}

std::vector<std::string> scan_identifiers(const std::string& text) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || text[i] == '_') {
      size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      std::string name = text.substr(start, i - start);
      if (seen.insert(name).second) out.push_back(name);
    } else if (std::isdigit(c)) {
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace ellq
