#include "ybeacc/constraints.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace ybeacc {

namespace {

const char* const kTable =
#include "constraint_table.inc"
    ;

using Powers = std::array<std::uint8_t, AccParams::kCount>;
using Poly = std::map<Powers, double>;

Poly constant(double c) {
  Poly p;
  if (c != 0.0) p[Powers{}] = c;
  return p;
}

Poly add(const Poly& a, const Poly& b, double sign) {
  Poly r = a;
  for (const auto& [k, v] : b) {
    r[k] += sign * v;
    if (r[k] == 0.0) r.erase(k);
  }
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      Powers k;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = static_cast<std::uint8_t>(ka[i] + kb[i]);
      r[k] += va * vb;
      if (r[k] == 0.0) r.erase(k);
    }
  return r;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::InvalidInput,
                "polynomial parse error at " + std::to_string(pos_) + ": " + why + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+')) p = add(p, term(), 1.0);
      else if (eat('-')) p = add(p, term(), -1.0);
      else return p;
    }
  }

  Poly term() {
    Poly p = unary();
    while (eat('*')) p = mul(p, unary());
    return p;
  }

  Poly unary() {
    if (eat('-')) return mul(constant(-1.0), unary());
    if (eat('+')) return unary();
    Poly base = primary();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(s_.substr(start, pos_ - start));
      Poly r = constant(1.0);
      for (int k = 0; k < e; ++k) r = mul(r, base);
      return r;
    }
    return base;
  }

  Poly primary() {
    skip();
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
        ++pos_;
      return constant(std::stod(s_.substr(start, pos_ - start)));
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected operand");
    Powers k{};
    k[field_index(s_.substr(start, pos_ - start))] = 1;
    Poly p;
    p[k] = 1.0;
    return p;
  }
};

std::vector<Equation> load_table() {
  std::vector<Equation> out;
  std::istringstream in(kTable);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto bar = line.find('|');
    Equation eq;
    eq.label = line.substr(0, bar);
    eq.printed = line.substr(bar + 1);
    eq.terms = parse_polynomial(eq.printed);
    out.push_back(std::move(eq));
  }
  return out;
}

}  // namespace

int Monomial::degree() const {
  int d = 0;
  for (auto e : powers) d += e;
  return d;
}

std::vector<Monomial> parse_polynomial(const std::string& expr) {
  const Poly p = Parser(expr).parse();
  std::vector<Monomial> terms;
  for (const auto& [k, v] : p) terms.push_back({v, k});
  return terms;
}

const std::vector<Equation>& constraint_table() {
  static const std::vector<Equation> table = load_table();
  return table;
}

Complex evaluate(const Equation& eq, const AccParams& p) {
  Complex sum{};
  for (const auto& t : eq.terms) {
    Complex m = t.coefficient;
    for (std::size_t i = 0; i < t.powers.size(); ++i)
      for (int e = 0; e < t.powers[i]; ++e) m *= p[i];
    sum += m;
  }
  return sum;
}

ConstraintResiduals constraint_residuals(const AccParams& p) {
  ConstraintResiduals r;
  const auto& table = constraint_table();
  r.values.reserve(table.size());
  for (const auto& eq : table) {
    r.values.push_back(evaluate(eq, p));
    r.max_abs = std::max(r.max_abs, std::abs(r.values.back()));
  }
  return r;
}

double constraint_scale(const AccParams& p) {
  const double s = max_abs(p);
  return s * s * s;
}

bool anomaly_equivalence_check(const AccParams& p, double tol) {
  const double scale = constraint_scale(p);
  const bool constraints_vanish = constraint_residuals(p).max_abs <= tol * scale;
  const Matrix rc = assemble_check_r(p);
  const bool anomaly_vanishes = max_abs(braid_anomaly(rc)) <= tol * cubic_scale(rc);
  return constraints_vanish == anomaly_vanishes;
}

}  // namespace ybeacc
