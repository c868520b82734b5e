// Command-line front end: list, verify, sweep, orbit, hecke, constraints, instantiate.
// Exit codes: 0 pass, 1 verification failure, 2 invalid input.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ybeacc/constraints.hpp"
#include "ybeacc/report.hpp"
#include "ybeacc/symmetry.hpp"

using namespace ybeacc;

namespace {

struct Common {
  std::string family;
  std::vector<std::string> params;
  std::optional<std::uint64_t> seed;
  double tol = 1e-9;
  int n_max = 5;
  std::string format = "json";
  std::string ordering = "grlex";
  std::string params_file;
  std::string matrix_file;
  std::string instance_file;
  std::size_t count = 100;
  bool random_acc = false;
};

struct InvalidUsage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_instance_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--family", c.family, "solution family, see `list`");
  cmd->add_option("--param", c.params, "name=value; complex as re or re+imi")->take_all();
  cmd->add_option("--seed", c.seed, "draw a random instance from this seed");
  cmd->add_option("--instance-file", c.instance_file, "instance document");
}

void add_tol(CLI::App* cmd, Common& c) {
  cmd->add_option("--tol", c.tol, "relative tolerance")->check(CLI::PositiveNumber);
}

FamilyInstance build_instance(const Common& c) {
  if (!c.instance_file.empty()) return instance_from_json(read_json_file(c.instance_file));
  if (c.family.empty()) throw InvalidUsage("--family or --instance-file is required");
  const FamilyId id = parse_family(c.family);
  FamilyInstance inst;
  if (c.params.empty() && c.seed) {
    inst = random_instance(id, *c.seed);
  } else {
    inst.id = id;
  }
  for (const auto& kv : c.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw InvalidUsage("--param expects name=value, got '" + kv + "'");
    const std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
    if (k == "branch") {
      if (v != "plus" && v != "minus") throw InvalidUsage("branch is plus or minus");
      inst.branch = v == "plus" ? Branch::plus : Branch::minus;
    } else if (k == "epsilon" || k == "omega" || k == "varsigma") {
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
      } catch (const std::exception&) {
        throw InvalidUsage(k + " expects an integer");
      }
      (k == "epsilon" ? inst.epsilon : k == "omega" ? inst.omega : inst.varsigma) = n;
    } else if (k == "scale") {
      inst.scale = parse_complex(v);
    } else if (k == "b" && id == FamilyId::Case1) {
      // Case1 has no continuous b; this bypasses the quadratic
      inst.b_override = parse_complex(v);
    } else {
      inst.continuous[k] = parse_complex(v);
    }
  }
  return inst;
}

Matrix load_matrix(const Common& c) {
  if (c.random_acc) {
    if (!c.seed) throw InvalidUsage("--random-acc needs --seed");
    std::mt19937_64 rng(*c.seed);
    auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    AccParams p;
    for (std::size_t k = 0; k < AccParams::kCount; ++k) p[k] = Complex(2 * u() - 1, 2 * u() - 1);
    return assemble_check_r(p);
  }
  if (!c.matrix_file.empty()) {
    auto [m, ord] = matrix_from_json(read_json_file(c.matrix_file));
    if (m.side() != 9) throw InvalidUsage("matrix must be 9x9");
    return convert_ordering(m, ord, Ordering::rlex);
  }
  if (!c.params_file.empty()) return assemble_check_r(params_from_json(read_json_file(c.params_file)));
  return assemble_check_r(instantiate(build_instance(c)));
}

void print_json(const Json& j) { std::cout << dump(j) << '\n'; }

void require_json(const Common& c) {
  if (c.format != "json") throw InvalidUsage("--format csv is available for list and sweep only");
}

int run(int argc, char** argv) {
  CLI::App app{"Constant Yang-Baxter solutions in dimension 3 with additive charge conservation"};
  app.require_subcommand(1);
  Common c;
  const auto fmt = CLI::IsMember({"json", "csv"});
  const auto ord = CLI::IsMember({"lex", "rlex", "grlex"});

  auto* list = app.add_subcommand("list", "catalog of solution families");
  list->add_option("--format", c.format)->check(fmt);

  auto* verify = app.add_subcommand("verify", "certify one instance");
  add_instance_flags(verify, c);
  add_tol(verify, c);
  verify->add_option("--n-max", c.n_max, "highest tower level")->check(CLI::Range(2, 6));
  verify->add_option("--format", c.format)->check(fmt);
  verify->add_option("--ordering", c.ordering, "presentation of the reported matrix")->check(ord);

  auto* sweep = app.add_subcommand("sweep", "certify seeded random instances");
  sweep->add_option("--family", c.family)->required();
  sweep->add_option("--count", c.count)->check(CLI::Range(1, 1000000));
  sweep->add_option("--seed", c.seed);
  add_tol(sweep, c);
  sweep->add_option("--n-max", c.n_max)->check(CLI::Range(2, 6));
  sweep->add_option("--format", c.format)->check(fmt);

  auto* orb = app.add_subcommand("orbit", "images under transpose, left-right and 0<->2");
  add_instance_flags(orb, c);
  add_tol(orb, c);
  orb->add_option("--matrix-file", c.matrix_file);
  orb->add_option("--params-file", c.params_file);
  orb->add_flag("--random-acc", c.random_acc, "use a random ACC matrix drawn from --seed");
  orb->add_option("--format", c.format)->check(fmt);

  auto* hecke = app.add_subcommand("hecke", "Hecke/Temperley-Lieb analysis and multiplicities");
  add_instance_flags(hecke, c);
  add_tol(hecke, c);
  hecke->add_option("--matrix-file", c.matrix_file);
  hecke->add_option("--params-file", c.params_file);
  hecke->add_option("--n-max", c.n_max)->check(CLI::Range(2, 6));
  hecke->add_option("--format", c.format)->check(fmt);

  auto* cons = app.add_subcommand("constraints", "all 109 constraint residuals");
  add_instance_flags(cons, c);
  add_tol(cons, c);
  cons->add_option("--params-file", c.params_file);
  cons->add_option("--format", c.format)->check(fmt);
  auto* export_table = cons->add_flag("--export-table", "print the monomial table instead");

  auto* inst_cmd = app.add_subcommand("instantiate", "print parameters and matrix of an instance");
  add_instance_flags(inst_cmd, c);
  inst_cmd->add_option("--ordering", c.ordering)->check(ord);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (list->parsed()) {
    if (c.format == "csv") std::cout << list_csv();
    else print_json(list_document());
    return 0;
  }
  if (verify->parsed()) {
    VerifyOptions o;
    o.tol = c.tol;
    o.n_max = c.n_max;
    o.ordering = parse_ordering(c.ordering);
    o.seed = c.seed;
    require_json(c);
    const VerificationReport r = verify_instance(build_instance(c), o);
    print_json(to_json(r));
    return r.pass ? 0 : 1;
  }
  if (sweep->parsed()) {
    VerifyOptions o;
    o.tol = c.tol;
    o.n_max = c.n_max;
    const SweepSummary s = run_sweep(parse_family(c.family), c.count, c.seed.value_or(0), o);
    if (c.format == "csv") std::cout << to_csv(s);
    else print_json(to_json(s));
    for (const auto& r : s.reports)
      if (!r.pass) return 1;
    return 0;
  }
  if (orb->parsed()) {
    require_json(c);
    const Json j = orbit_document(load_matrix(c), c.tol);
    print_json(j);
    return j["pass"].get<bool>() ? 0 : 1;
  }
  if (hecke->parsed()) {
    require_json(c);
    const Json j = hecke_document(load_matrix(c), c.n_max, c.tol);
    print_json(j);
    return j["pass"].get<bool>() ? 0 : 1;
  }
  if (cons->parsed()) {
    require_json(c);
    if (*export_table) {
      print_json(constraint_table_json());
      return 0;
    }
    const AccParams p = !c.params_file.empty() ? params_from_json(read_json_file(c.params_file))
                                               : instantiate(build_instance(c));
    const Json j = constraints_document(p, c.tol);
    print_json(j);
    return j["pass"].get<bool>() ? 0 : 1;
  }
  if (inst_cmd->parsed()) {
    const FamilyInstance inst = build_instance(c);
    const AccParams p = instantiate(inst);
    const Ordering o = parse_ordering(c.ordering);
    print_json(Json{{"instance", instance_to_json(inst)},
                    {"params", params_to_json(p)},
                    {"matrix", matrix_to_json(assemble_check_r(p, o), o)}});
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    print_json(Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
    return 2;
  } catch (const InvalidUsage& e) {
    print_json(Json{{"error", "InvalidUsage"}, {"message", e.what()}});
    return 2;
  } catch (const nlohmann::json::exception& e) {
    print_json(Json{{"error", "InvalidInput"}, {"message", e.what()}});
    return 2;
  } catch (const std::exception& e) {
    print_json(Json{{"error", "Internal"}, {"message", e.what()}});
    return 2;
  }
}
