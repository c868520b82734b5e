#include "ybeacc/catalog.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace ybeacc {

namespace {

struct FamilySpec {
  FamilyId id;
  std::string_view name;
  std::vector<std::string> continuous;
};

const std::vector<FamilySpec>& family_specs() {
  static const std::vector<FamilySpec> specs{
      {FamilyId::Case1, "Case1", {"a", "x1", "x3"}},
      {FamilyId::Case3_1_1, "Case3_1_1", {"a", "c", "x4"}},
      {FamilyId::Case3_1_2, "Case3_1_2", {"a", "c", "x4"}},
      {FamilyId::Case5_2_1, "Case5_2_1", {"b", "c", "x3"}},
      {FamilyId::Case5_2_2, "Case5_2_2", {"b", "c", "x3"}},
      {FamilyId::Case5_4_a, "Case5_4_a", {"b", "c", "x3"}},
      {FamilyId::Case5_4_b, "Case5_4_b", {"b", "c", "x3"}},
      {FamilyId::Case5_5_1_1, "Case5_5_1_1", {"c", "x2"}},
      {FamilyId::Case5_5_1_2, "Case5_5_1_2", {"c", "x2"}},
      {FamilyId::Case5_7, "Case5_7", {"b", "x2", "x3"}},
      {FamilyId::Case6_2_1, "Case6_2_1", {"c", "x4"}},
      {FamilyId::Case6_2_1p, "Case6_2_1p", {"c", "x4"}},
      {FamilyId::Case6_2_2, "Case6_2_2", {"c", "x4"}},
      {FamilyId::FixtureP, "FixtureP", {}},
      {FamilyId::FixtureIdentity, "FixtureIdentity", {}},
  };
  return specs;
}

const FamilySpec& spec_of(FamilyId id) { return family_specs().at(static_cast<std::size_t>(id)); }

[[noreturn]] void violation(FamilyId id, const std::string& what) {
  throw Error(ErrorCode::DomainViolation, std::string(to_string(id)) + ": " + what);
}

constexpr double kZero = 1e-12;

Complex get(const FamilyInstance& inst, const std::string& name) {
  auto it = inst.continuous.find(name);
  if (it == inst.continuous.end()) violation(inst.id, "missing parameter " + name);
  return it->second;
}

// Domain points excluded for parameter `name`, beyond zero.
std::vector<Complex> excluded_points(FamilyId id, const std::string& name) {
  if (name != "a") return {0.0};
  if (id == FamilyId::Case3_1_1) return {0.0, 1.0, -1.0};
  return {0.0, 1.0};
}

void check_domain(const FamilyInstance& inst) {
  const auto& spec = spec_of(inst.id);
  for (const auto& [k, v] : inst.continuous) {
    bool known = false;
    for (const auto& n : spec.continuous) known |= (n == k);
    if (!known) violation(inst.id, "unexpected parameter " + k);
  }
  for (const auto& name : spec.continuous) {
    const Complex v = get(inst, name);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) violation(inst.id, name + " is not finite");
    for (const Complex& e : excluded_points(inst.id, name)) {
      if (std::abs(v - e) <= kZero * std::max(1.0, std::abs(e))) {
        violation(inst.id, name + " must differ from " + std::to_string(e.real()));
      }
    }
  }
  if (inst.epsilon != 1 && inst.epsilon != -1) violation(inst.id, "epsilon must be +1 or -1");
  if (inst.omega != 1 && inst.omega != 2) violation(inst.id, "omega must be power 1 or 2");
  if (inst.varsigma != 1 && inst.varsigma != -1) violation(inst.id, "varsigma must be +1 or -1");
  if (std::abs(inst.scale) <= kZero) violation(inst.id, "scale must be nonzero");
  if (inst.b_override) {
    if (inst.id != FamilyId::Case1) violation(inst.id, "b override applies to Case1 only");
    if (std::abs(*inst.b_override) <= kZero) violation(inst.id, "b must be nonzero");
  }
}

Matrix m1(Complex a) { return Matrix(1, {a}); }
Matrix m2(Complex a, Complex b, Complex c, Complex d) { return Matrix(2, {a, b, c, d}); }
Matrix m3(Complex a, Complex b, Complex c, Complex d, Complex e, Complex f, Complex g, Complex h,
          Complex i) {
  return Matrix(3, {a, b, c, d, e, f, g, h, i});
}

Complex case1_b(const FamilyInstance& inst) {
  if (inst.b_override) return *inst.b_override;
  return case1_solve_b(get(inst, "a"), get(inst, "x1"), get(inst, "x3"), inst.branch).b;
}

}  // namespace

std::string_view to_string(FamilyId id) { return spec_of(id).name; }

FamilyId parse_family(std::string_view s) {
  for (const auto& f : family_specs())
    if (f.name == s) return f.id;
  throw Error(ErrorCode::InvalidInput, "unknown family '" + std::string(s) + "'");
}

std::string_view to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

Complex omega_root(int power) {
  const double t = 2.0 * std::numbers::pi * power / 3.0;
  return {std::cos(t), std::sin(t)};
}

Case1Root case1_solve_b(Complex a, Complex x1, Complex x3, Branch branch) {
  if (std::abs(a) <= kZero || std::abs(a - 1.0) <= kZero) {
    throw Error(ErrorCode::DegenerateDomain, "Case1 requires a outside {0, 1}");
  }
  const Complex am1 = a - 1.0;
  const Complex disc = am1 * am1 - 4.0 * a * a * am1;
  const Complex root = std::sqrt(disc);
  const Complex sr = branch == Branch::plus ? root : -root;
  Case1Root out;
  out.beta = (-am1 + sr) / (2.0 * a * am1);
  out.b = x1 * x3 * out.beta;
  out.double_root = std::abs(disc) < 1e-12 * std::norm(am1);
  const Complex t2 = out.beta * out.beta * a * am1, t1 = out.beta * am1;
  out.residual = std::abs(t2 + t1 + a) / (std::abs(t2) + std::abs(t1) + std::abs(a));
  return out;
}

BlockForm instantiate_blocks(const FamilyInstance& inst) {
  check_domain(inst);
  const Complex w = omega_root(inst.omega);
  const Complex w2 = w * w;
  const Complex eps = static_cast<double>(inst.epsilon);
  const Complex vs = Complex(0.0, static_cast<double>(inst.varsigma));
  auto p = [&](const char* n) { return get(inst, n); };
  BlockForm f;
  switch (inst.id) {
    case FamilyId::Case1: {
      const Complex a = p("a"), x1 = p("x1"), x3 = p("x3"), b = case1_b(inst);
      f.b1 = m1(1.0);
      f.b2 = m2(1.0, 0.0, 0.0, 1.0);
      f.b3 = m3(a, x1, b,                                                    //
                x3 * (a - 1.0) / b, (x1 * x3 + b) / b, x3,                   //
                x1 * x1 * x3 * x3 / (b * b * b), -x1 * (a * b + x1 * x3) / (a * b * b),
                -x1 * x3 / (a * b));
      f.b4 = m2(1.0, 0.0, 0.0, 1.0);
      f.b5 = m1(1.0);
      break;
    }
    case FamilyId::Case3_1_1: {
      const Complex a = p("a"), c = p("c"), x4 = p("x4");
      const Complex a2m1 = a * a - 1.0;
      f.b1 = m1(1.0);
      f.b2 = m2(0.0, a * a / c, c, 1.0 - a * a);
      f.b3 = m3(0.0, 0.0, std::pow(a, 4) / (c * c),  //
                0.0, a, a * a2m1 * a2m1 / x4,        //
                c * c, x4, (a + 1.0) * (a - 1.0) * (a - 1.0));
      f.b4 = m2(0.0, a * a / c, c, 1.0 - a * a);
      f.b5 = m1(1.0);
      break;
    }
    case FamilyId::Case3_1_2: {
      const Complex a = p("a"), c = p("c"), x4 = p("x4");
      f.b1 = m1(1.0);
      f.b2 = m2(0.0, w * a / c, c, 1.0 - w * a);
      f.b3 = m3(0.0, 0.0, w2 * a * a / (c * c),                 //
                0.0, a, (w2 - a) * (a - 1.0) * a / x4,          //
                c * c, x4, (1.0 - w * a) * (1.0 - a));
      f.b4 = m2(0.0, a * a / c, w2 * a * c, w * a * (a - 1.0));
      f.b5 = m1(w * a * a);
      break;
    }
    case FamilyId::Case5_2_1: {
      const Complex b = p("b"), c = p("c"), x3 = p("x3");
      f.b1 = m1(1.0);
      f.b2 = m2(1.0, 0.0, 0.0, 1.0);
      f.b3 = m3(1.0 - b * c, 0.0, b / c, -x3 * c * c, 1.0, x3, c * c, 0.0, 0.0);
      f.b4 = m2(1.0 - b * c, b, c, 0.0);
      f.b5 = m1(1.0);
      break;
    }
    case FamilyId::Case5_2_2: {
      const Complex b = p("b"), c = p("c"), x3 = p("x3");
      f.b1 = m1(1.0);
      f.b2 = m2(1.0, 0.0, 0.0, 1.0);
      f.b3 = m3(1.0 - b * c, 0.0, -b * b, x3 * c / b, 1.0, x3, -c / b, 0.0, 0.0);
      f.b4 = m2(1.0 - b * c, b, c, 0.0);
      f.b5 = m1(-b * c);
      break;
    }
    case FamilyId::Case5_4_a: {
      const Complex b = p("b"), c = p("c"), x3 = p("x3");
      f.b1 = m1(1.0);
      f.b2 = m2(1.0 - b * c, b, c, 0.0);
      f.b3 = m3(1.0 - b * c, 0.0, b / c, -x3 * c * c, 1.0, x3, c * c, 0.0, 0.0);
      f.b4 = m2(1.0 - b * c, b, c, 0.0);
      f.b5 = m1(1.0);
      break;
    }
    case FamilyId::Case5_4_b: {
      const Complex b = p("b"), c = p("c"), x3 = p("x3");
      f.b1 = m1(1.0);
      f.b2 = m2(1.0 - b * c, b, c, 0.0);
      f.b3 = m3(1.0 - b * c, 0.0, b / c, x3 * c / b, -b * c, x3, c * c, 0.0, 0.0);
      f.b4 = m2(1.0 - b * c, b, c, 0.0);
      f.b5 = m1(1.0);
      break;
    }
    case FamilyId::Case5_5_1_1: {
      const Complex c = p("c"), x2 = p("x2");
      f.b1 = m1(1.0);
      f.b2 = m2(1.0 - w, w / c, c, 0.0);
      f.b3 = m3(0.0, 0.0, w / (c * c), x2, 1.0, -x2 * w / (c * c), c * c, 0.0, 1.0 - w);
      f.b4 = m2(0.0, w2 / c, c * w2, 1.0 - w);
      f.b5 = m1(1.0);
      break;
    }
    case FamilyId::Case5_5_1_2: {
      const Complex c = p("c"), x2 = p("x2");
      f.b1 = m1(1.0);
      f.b2 = m2(vs + 1.0, -vs / c, c, 0.0);
      f.b3 = m3(0.0, 0.0, -vs / (c * c), x2, 1.0, x2 * vs / (c * c), c * c, 0.0, vs + 1.0);
      f.b4 = m2(0.0, -1.0 / c, vs * c, vs + 1.0);
      f.b5 = m1(vs);
      break;
    }
    case FamilyId::Case5_7: {
      const Complex b = p("b"), x2 = p("x2"), x3 = p("x3");
      f.b1 = m1(1.0);
      f.b2 = m2(0.0, b, 1.0 / b, 0.0);
      f.b3 = m3(0.0, 0.0, b * b, x2, eps, x3, 1.0 / (b * b), 0.0, 0.0);
      f.b4 = m2(0.0, b, 1.0 / b, 0.0);
      f.b5 = m1(1.0);
      break;
    }
    case FamilyId::Case6_2_1: {
      const Complex c = p("c"), x4 = p("x4");
      f.b1 = m1(1.0);
      f.b2 = m2(0.0, 1.0 / c, c, 0.0);
      f.b3 = m3(0.0, 0.0, 1.0 / (c * c), 0.0, eps, 0.0, c * c, x4, 0.0);
      f.b4 = m2(0.0, 1.0 / c, c, 0.0);
      f.b5 = m1(1.0);
      break;
    }
    case FamilyId::Case6_2_1p: {
      const Complex c = p("c"), x4 = p("x4");
      f.b1 = m1(1.0);
      f.b2 = m2(0.0, 1.0 / c, c, 0.0);
      f.b3 = m3(0.0, 0.0, 1.0 / (c * c), 0.0, w, 0.0, c * c, x4, 0.0);
      f.b4 = m2(0.0, w2 / c, w2 * c, w - 1.0);
      f.b5 = m1(w);
      break;
    }
    case FamilyId::Case6_2_2: {
      const Complex c = p("c"), x4 = p("x4");
      f.b1 = m1(1.0);
      f.b2 = m2(0.0, 1.0 / (c * w), c, w + 2.0);
      f.b3 = m3(0.0, 0.0, 1.0 / (c * c * w2), 0.0, 1.0, 0.0, c * c, x4, 0.0);
      f.b4 = m2(0.0, 1.0 / c, w * c, 0.0);
      f.b5 = m1(w2);
      break;
    }
    case FamilyId::FixtureP:
      f.b1 = m1(1.0);
      f.b2 = m2(0.0, 1.0, 1.0, 0.0);
      f.b3 = m3(0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0);
      f.b4 = m2(0.0, 1.0, 1.0, 0.0);
      f.b5 = m1(1.0);
      break;
    case FamilyId::FixtureIdentity:
      f = to_blocks(Matrix::identity(9));
      break;
  }
  if (inst.scale != Complex(1.0, 0.0)) {
    for (Matrix* m : {&f.b1, &f.b2, &f.b3, &f.b4, &f.b5}) *m *= inst.scale;
  }
  return f;
}

AccParams instantiate(const FamilyInstance& inst) {
  return extract_params(from_blocks(instantiate_blocks(inst)), Ordering::grlex);
}

SpectrumTemplate expected_spectrum(const FamilyInstance& inst, double merge_tol) {
  check_domain(inst);
  const Complex w = omega_root(inst.omega);
  const Complex w2 = w * w;
  auto p = [&](const char* n) { return get(inst, n); };
  std::vector<std::pair<Complex, int>> raw;
  switch (inst.id) {
    case FamilyId::Case1: {
      const Complex r = p("x1") * p("x3") / case1_b(inst);
      raw = {{1.0, 8}, {-r * r, 1}};
      break;
    }
    case FamilyId::Case3_1_1: {
      const Complex a = p("a");
      raw = {{1.0, 5}, {-a * a, 3}, {a * a * a, 1}};
      break;
    }
    case FamilyId::Case3_1_2: {
      const Complex a = p("a");
      raw = {{1.0, 3}, {-w * a, 3}, {w * a * a, 3}};
      break;
    }
    case FamilyId::Case5_2_1: raw = {{1.0, 7}, {-p("b") * p("c"), 2}}; break;
    case FamilyId::Case5_2_2: raw = {{1.0, 6}, {-p("b") * p("c"), 3}}; break;
    case FamilyId::Case5_4_a: raw = {{1.0, 6}, {-p("b") * p("c"), 3}}; break;
    case FamilyId::Case5_4_b: raw = {{1.0, 5}, {-p("b") * p("c"), 4}}; break;
    case FamilyId::Case5_5_1_1: raw = {{1.0, 6}, {-w, 3}}; break;
    case FamilyId::Case5_5_1_2: raw = {{1.0, 5}, {Complex(0.0, inst.varsigma), 4}}; break;
    case FamilyId::Case5_7:
    case FamilyId::Case6_2_1:
      raw = inst.epsilon == -1 ? std::vector<std::pair<Complex, int>>{{1.0, 5}, {-1.0, 4}}
                               : std::vector<std::pair<Complex, int>>{{1.0, 6}, {-1.0, 3}};
      break;
    case FamilyId::Case6_2_1p: raw = {{1.0, 3}, {w, 3}, {-1.0, 3}}; break;
    case FamilyId::Case6_2_2: raw = {{1.0, 3}, {w2, 3}, {-w2, 3}}; break;
    case FamilyId::FixtureP: raw = {{1.0, 6}, {-1.0, 3}}; break;
    case FamilyId::FixtureIdentity: raw = {{1.0, 9}}; break;
  }
  SpectrumTemplate t;
  for (auto& [v0, m0] : raw) {
    const Complex v = v0 * inst.scale;
    bool merged = false;
    for (auto& [v1, m1] : t.entries) {
      if (std::abs(v - v1) <= merge_tol * std::max(1.0, std::abs(v1))) {
        m1 += m0;
        merged = true;
        t.coincident = true;
      }
    }
    if (!merged) t.entries.emplace_back(v, m0);
  }
  return t;
}

namespace {

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double operator()() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  bool coin() { return (rng_() >> 63) != 0; }

 private:
  std::mt19937_64 rng_;
};

constexpr double kRMin = 0.2, kRMax = 5.0, kAvoid = 0.05;

Complex draw_annulus(Uniform& u) {
  const double r = kRMin + (kRMax - kRMin) * u();
  const double t = 2.0 * std::numbers::pi * u();
  return std::polar(r, t);
}

}  // namespace

FamilyInstance random_instance(FamilyId id, std::uint64_t seed) {
  const auto& spec = spec_of(id);
  Uniform u(seed);
  for (;;) {
    FamilyInstance inst;
    inst.id = id;
    for (const auto& name : spec.continuous) {
      Complex z;
      bool ok;
      do {
        z = draw_annulus(u);
        ok = true;
        for (const Complex& e : excluded_points(id, name)) ok &= std::abs(z - e) >= kAvoid;
      } while (!ok);
      inst.continuous[name] = z;
    }
    for (const auto& d : family_info(id).discrete) {
      const bool c = u.coin();
      if (d == "branch") inst.branch = c ? Branch::plus : Branch::minus;
      if (d == "epsilon") inst.epsilon = c ? 1 : -1;
      if (d == "omega") inst.omega = c ? 1 : 2;
      if (d == "varsigma") inst.varsigma = c ? 1 : -1;
    }

    const SpectrumTemplate t = expected_spectrum(inst, kAvoid);
    if (!t.coincident) return inst;
  }
}

const std::vector<CatalogEntry>& list_families() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    auto add = [&](FamilyId id, std::vector<std::string> xs, int nc, int nd,
                   std::vector<std::string> disc, std::string domain, std::string spectrum,
                   bool hecke, std::string note) {
      CatalogEntry e;
      e.name = std::string(to_string(id));
      e.x_pattern = std::move(xs);
      e.continuous_count = nc;
      e.discrete_count = nd;
      e.continuous = spec_of(id).continuous;
      e.discrete = std::move(disc);
      e.domain = std::move(domain);
      e.spectrum = std::move(spectrum);
      e.hecke = hecke;
      e.note = std::move(note);
      v.push_back(std::move(e));
    };
    const std::vector<std::string> all_x{"x1", "x2", "x3", "x4"};
    const std::vector<std::string> x34{"x3", "x4"}, x23{"x2", "x3"}, x4{"x4"};
    add(FamilyId::Case1, all_x, 3, 0, {"branch"}, "a not in {0,1}; x1, x3 nonzero",
        "1 x8, -(x1*x3/b)^2 x1", true,
        "b = x1*x3*beta with beta^2*a*(a-1) + beta*(a-1) + a = 0; branch picks the root");
    add(FamilyId::Case3_1_1, x34, 3, 0, {}, "a not in {0,1,-1}; c, x4 nonzero",
        "1 x5, -a^2 x3, a^3 x1", false, "x3 = a*(a^2-1)^2/x4");
    add(FamilyId::Case3_1_2, x34, 3, 1, {"omega"}, "a not in {0,1}; c, x4 nonzero",
        "1 x3, -omega*a x3, omega*a^2 x3", false, "at a = -1 only two eigenvalues remain");
    add(FamilyId::Case5_2_1, x23, 3, 0, {}, "b, c, x3 nonzero", "1 x7, -b*c x2", true,
        "also covers the discarded Case 5.3 at b = c = 1");
    add(FamilyId::Case5_2_2, x23, 3, 0, {}, "b, c, x3 nonzero", "1 x6, -b*c x3", true,
        "also covers the discarded Case 5.3 at b = c = -1");
    add(FamilyId::Case5_4_a, x23, 3, 0, {}, "b, c, x3 nonzero", "1 x6, -b*c x3", true, "");
    add(FamilyId::Case5_4_b, x23, 3, 0, {}, "b, c, x3 nonzero", "1 x5, -b*c x4", true, "");
    add(FamilyId::Case5_5_1_1, x23, 2, 1, {"omega"}, "c, x2 nonzero", "1 x6, -omega x3", true,
        "non-unit eigenvalue is -omega for the displayed matrix");
    add(FamilyId::Case5_5_1_2, x23, 2, 1, {"varsigma"}, "c, x2 nonzero", "1 x5, varsigma x4",
        true, "varsigma = +i or -i");
    add(FamilyId::Case5_7, x23, 3, 1, {"epsilon"}, "b, x2, x3 nonzero",
        "epsilon=-1: 1 x5, -1 x4; epsilon=+1: 1 x6, -1 x3", true,
        "not diagonalizable unless x2 + epsilon*x3/b^2 = 0");
    add(FamilyId::Case6_2_1, x4, 2, 1, {"epsilon"}, "c, x4 nonzero",
        "epsilon=-1: 1 x5, -1 x4; epsilon=+1: 1 x6, -1 x3", true,
        "transpose of Case5_7 at x2 = 0; not diagonalizable");
    add(FamilyId::Case6_2_1p, x4, 2, 1, {"omega"}, "c, x4 nonzero", "1 x3, omega x3, -1 x3",
        false, "");
    add(FamilyId::Case6_2_2, x4, 2, 1, {"omega"}, "c, x4 nonzero",
        "1 x3, omega^2 x3, -omega^2 x3", false, "");
    add(FamilyId::FixtureP, {}, 0, 0, {}, "", "1 x6, -1 x3", true, "the swap operator");
    add(FamilyId::FixtureIdentity, {}, 0, 0, {}, "", "1 x9", false, "the identity");

    auto none = [&](std::string name, std::vector<std::string> xs, std::string why) {
      CatalogEntry e;
      e.name = std::move(name);
      e.no_solution = true;
      e.x_pattern = std::move(xs);
      e.note = std::move(why);
      v.push_back(std::move(e));
    };
    none("Case2", {"x1", "x2", "x3"}, "no solution: x1*x3 != 0 with one x zero forces a contradiction");
    none("Case3_2", x34, "no solution: b12 = c12 = 0 leads to a contradiction");
    none("Case4", {"x1", "x3"}, "no solution: same argument as Case2 with x2 = x4 = 0");
    none("Case5_1", x23, "no solution: the 3x3 block is forced singular");
    none("Case5_3", x23, "subsumed by Case5_2_1 and Case5_2_2");
    none("Case5_6", x23, "no solution: forces a12 = 0 against a12 != 0");
    none("Case6_1", x4, "no solution: b12 = 0 leads to a contradiction");
    return v;
  }();
  return entries;
}

const CatalogEntry& family_info(FamilyId id) { return list_families().at(static_cast<std::size_t>(id)); }

}  // namespace ybeacc
