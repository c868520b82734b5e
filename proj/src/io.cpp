#include "ybeacc/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ybeacc/constraints.hpp"

namespace ybeacc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

double parse_real(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  const std::string tmp(s);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(tmp.c_str(), &end);
  if (end != tmp.c_str() + tmp.size() || errno == ERANGE || !std::isfinite(v)) {
    bad("cannot parse number '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad("complex values are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Complex parse_complex(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) bad("empty complex literal");
  if (s.back() != 'i') return {parse_real(s, s), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  // split at the last sign that is not leading and not an exponent sign
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_real(body, s)};
  const std::string_view re = body.substr(0, split);
  if (re.empty()) bad("cannot parse number '" + std::string(s) + "'");
  return {parse_real(re, s), parse_real(body.substr(split), s)};
}

Json matrix_to_json(const Matrix& m, Ordering ord) {
  Json j;
  j["ordering"] = std::string(to_string(ord));
  j["side"] = m.side();
  Json entries = Json::array();
  for (const auto& z : m.data()) entries.push_back(to_json(z));
  j["entries"] = std::move(entries);
  return j;
}

std::pair<Matrix, Ordering> matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("side") || !j.contains("entries")) {
    bad("matrix document needs 'side' and 'entries'");
  }
  const Ordering ord = j.contains("ordering") ? parse_ordering(j["ordering"].get<std::string>())
                                              : Ordering::rlex;
  if (!j["side"].is_number_unsigned()) bad("'side' must be a positive integer");
  const std::size_t side = j["side"].get<std::size_t>();
  const Json& e = j["entries"];
  if (!e.is_array() || e.size() != side * side) bad("'entries' must hold side^2 values");
  std::vector<Complex> v;
  v.reserve(e.size());
  for (const auto& z : e) v.push_back(complex_from_json(z));
  return {Matrix(side, std::move(v)), ord};
}

Json params_to_json(const AccParams& p) {
  Json j;
  for (const auto& f : acc_fields()) j[std::string(f.name)] = to_json(p.*(f.member));
  return j;
}

AccParams params_from_json(const Json& j) {
  if (!j.is_object()) bad("parameter document must be an object");
  AccParams p;
  for (auto it = j.begin(); it != j.end(); ++it) p[field_index(it.key())] = complex_from_json(it.value());
  return p;
}

Json instance_to_json(const FamilyInstance& inst) {
  Json j;
  j["family"] = std::string(to_string(inst.id));
  Json cont = Json::object();
  for (const auto& [k, v] : inst.continuous) cont[k] = to_json(v);
  j["continuous"] = std::move(cont);
  Json disc = Json::object();
  for (const auto& d : family_info(inst.id).discrete) {
    if (d == "branch") disc["branch"] = std::string(to_string(inst.branch));
    if (d == "epsilon") disc["epsilon"] = inst.epsilon;
    if (d == "omega") disc["omega"] = inst.omega;
    if (d == "varsigma") disc["varsigma"] = inst.varsigma;
  }
  j["discrete"] = std::move(disc);
  j["scale"] = to_json(inst.scale);
  if (inst.b_override) j["b"] = to_json(*inst.b_override);
  return j;
}

FamilyInstance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family")) bad("instance document needs 'family'");
  FamilyInstance inst;
  inst.id = parse_family(j["family"].get<std::string>());
  if (j.contains("continuous")) {
    for (auto it = j["continuous"].begin(); it != j["continuous"].end(); ++it)
      inst.continuous[it.key()] = complex_from_json(it.value());
  }
  if (j.contains("discrete")) {
    const Json& d = j["discrete"];
    if (d.contains("branch")) {
      const auto b = d["branch"].get<std::string>();
      if (b != "plus" && b != "minus") bad("branch is 'plus' or 'minus'");
      inst.branch = b == "plus" ? Branch::plus : Branch::minus;
    }
    if (d.contains("epsilon")) inst.epsilon = d["epsilon"].get<int>();
    if (d.contains("omega")) inst.omega = d["omega"].get<int>();
    if (d.contains("varsigma")) inst.varsigma = d["varsigma"].get<int>();
  }
  if (j.contains("scale")) inst.scale = complex_from_json(j["scale"]);
  if (j.contains("b")) inst.b_override = complex_from_json(j["b"]);
  return inst;
}

Json constraint_table_json() {
  Json out = Json::array();
  for (const auto& eq : constraint_table()) {
    Json terms = Json::array();
    for (const auto& t : eq.terms) {
      Json powers = Json::object();
      for (std::size_t k = 0; k < t.powers.size(); ++k)
        if (t.powers[k] != 0) powers[std::string(acc_fields()[k].name)] = t.powers[k];
      terms.push_back(Json{{"coefficient", t.coefficient}, {"powers", std::move(powers)}});
    }
    out.push_back(Json{{"label", eq.label}, {"expression", eq.printed}, {"terms", std::move(terms)}});
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace ybeacc
