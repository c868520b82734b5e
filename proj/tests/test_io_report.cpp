#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "test_util.hpp"
#include "ybeacc/io.hpp"
#include "ybeacc/report.hpp"

using namespace ybeacc;
using ybeacc::testing::Gen;

namespace {

// Enough of JSON Schema for the report schema: type, enum, required,
// properties, additionalProperties, items, minItems, maxItems, local $ref.
class MiniValidator {
 public:
  explicit MiniValidator(Json root) : root_(std::move(root)) {}

  std::vector<std::string> validate(const Json& doc) {
    errors_.clear();
    check(doc, root_, "$");
    return errors_;
  }

 private:
  const Json& resolve(const Json& s) const {
    if (!s.contains("$ref")) return s;
    const std::string ref = s["$ref"];
    const std::string prefix = "#/$defs/";
    return root_["$defs"][ref.substr(prefix.size())];
  }

  static bool has_type(const Json& v, const std::string& t) {
    if (t == "null") return v.is_null();
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    return false;
  }

  void check(const Json& v, const Json& schema_in, const std::string& path) {
    const Json& s = resolve(schema_in);
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t);
      } else {
        ok = has_type(v, s["type"]);
      }
      if (!ok) return errors_.push_back(path + ": wrong type");
    }
    if (s.contains("enum")) {
      bool ok = false;
      for (const auto& e : s["enum"]) ok = ok || e == v;
      if (!ok) errors_.push_back(path + ": not in enum");
    }
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& k : s["required"])
          if (!v.contains(k.get<std::string>())) errors_.push_back(path + ": missing " + k.get<std::string>());
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (s.contains("properties") && s["properties"].contains(it.key())) {
          check(it.value(), s["properties"][it.key()], path + "." + it.key());
        } else if (s.contains("additionalProperties")) {
          const Json& ap = s["additionalProperties"];
          if (ap.is_boolean()) {
            if (!ap.get<bool>()) errors_.push_back(path + ": unexpected " + it.key());
          } else {
            check(it.value(), ap, path + "." + it.key());
          }
        }
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) errors_.push_back(path + ": too short");
      if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) errors_.push_back(path + ": too long");
      if (s.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], path + "[" + std::to_string(i) + "]");
    }
  }

  Json root_;
  std::vector<std::string> errors_;
};

MiniValidator& report_validator() {
  static MiniValidator v(read_json_file(std::string(YBEACC_SOURCE_DIR) + "/schema/report.schema.json"));
  return v;
}

}  // namespace

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("1.5"), Complex(1.5, 0.0));
  EXPECT_EQ(parse_complex("-2+3i"), Complex(-2.0, 3.0));
  EXPECT_EQ(parse_complex("1e-3-2.5i"), Complex(1e-3, -2.5));
  EXPECT_EQ(parse_complex("2i"), Complex(0.0, 2.0));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
  for (const char* bad : {"", "abc", "1+", "1+2", "2ii", "1..2"}) {
    try {
      parse_complex(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
    }
  }
}

TEST(ComplexJson, RoundTripIsExact) {
  Gen g(71);
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex z(g.uniform(-1e6, 1e6) * g.unit(), std::ldexp(g.unit(), static_cast<int>(g.below(200)) - 100));
    const Json j = Json::parse(dump(to_json(z)));
    EXPECT_EQ(complex_from_json(j), z);
  }
  EXPECT_THROW(complex_from_json(Json::parse("[1]")), Error);
  EXPECT_THROW(complex_from_json(Json::parse("\"x\"")), Error);
}

TEST(MatrixJsonProperty, RoundTripIsExact) {
  Gen g(72);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = g.matrix(9, 0.7);
    for (Ordering o : {Ordering::lex, Ordering::rlex, Ordering::grlex}) {
      const auto [back, ord] = matrix_from_json(Json::parse(dump(matrix_to_json(m, o))));
      EXPECT_EQ(back, m);
      EXPECT_EQ(ord, o);
    }
  }
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"side": 2, "entries": [[1,0]]})")), Error);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"entries": []})")), Error);
}

TEST(ParamsJsonProperty, RoundTripIsExact) {
  Gen g(73);
  for (int trial = 0; trial < 100; ++trial) {
    const AccParams p = g.params(0.3);
    EXPECT_EQ(params_from_json(Json::parse(dump(params_to_json(p)))), p);
  }
  EXPECT_THROW(params_from_json(Json::parse(R"({"q1": [1, 0]})")), Error);
}

TEST(InstanceJsonProperty, RoundTripIsExact) {
  for (FamilyId id : kAllFamilies)
    for (std::uint64_t s = 0; s < 10; ++s) {
      FamilyInstance inst = random_instance(id, s);
      if (id == FamilyId::Case1 && s == 3) inst.b_override = Complex(0.25, -1.0);
      EXPECT_EQ(instance_from_json(Json::parse(dump(instance_to_json(inst)))), inst) << to_string(id);
    }
  EXPECT_THROW(instance_from_json(Json::parse(R"({"family": "Nope"})")), Error);
}

TEST(ConstraintTableJson, Shape) {
  const Json t = constraint_table_json();
  ASSERT_EQ(t.size(), 109u);
  EXPECT_EQ(t[0]["label"], "A1");
  EXPECT_EQ(t[0]["terms"].size(), 1u);
}

TEST(Verify, Case57ExampleReport) {
  FamilyInstance inst;
  inst.id = FamilyId::Case5_7;
  inst.continuous = {{"b", 1.0}, {"x2", 1.0}, {"x3", 1.0}};
  inst.epsilon = -1;
  const VerificationReport r = verify_instance(inst, {});
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.spectrum.size(), 2u);
  EXPECT_EQ(r.spectrum[0].observed, r.spectrum[0].expected);
  EXPECT_TRUE(report_validator().validate(to_json(r)).empty());
}

TEST(Verify, OffRootCase1Fails) {
  FamilyInstance inst;
  inst.id = FamilyId::Case1;
  inst.continuous = {{"a", -1.0}, {"x1", 1.0}, {"x3", 1.0}};
  inst.b_override = 0.5;
  const VerificationReport r = verify_instance(inst, {});
  EXPECT_FALSE(r.pass);
  EXPECT_NE(std::find(r.failures.begin(), r.failures.end(), "anomaly"), r.failures.end());
  EXPECT_TRUE(report_validator().validate(to_json(r)).empty());
}

TEST(Verify, Case1CarriesHeckeAndTable) {
  VerifyOptions o;
  o.n_max = 5;
  const VerificationReport r = verify_instance(random_instance(FamilyId::Case1, 2), o);
  ASSERT_TRUE(r.pass);
  ASSERT_TRUE(r.hecke && r.hecke->ok);
  ASSERT_TRUE(r.hecke->table.has_value());
  EXPECT_EQ(r.hecke->table->levels.at(5).at({5, 0}), 144);
  EXPECT_EQ(r.hecke->tl_residuals.size(), 3u);
}

TEST(ReportProperty, SchemaValidForEveryFamilyAndOrdering) {
  for (FamilyId id : kAllFamilies)
    for (Ordering o : {Ordering::lex, Ordering::rlex, Ordering::grlex}) {
      VerifyOptions opt;
      opt.ordering = o;
      opt.seed = 4;
      const Json j = to_json(verify_instance(random_instance(id, 4), opt));
      const auto errs = report_validator().validate(j);
      EXPECT_TRUE(errs.empty()) << to_string(id) << ": " << (errs.empty() ? "" : errs[0]);
    }
}

TEST(ReportProperty, ReportedMatrixMatchesOrdering) {
  const FamilyInstance inst = random_instance(FamilyId::Case3_1_2, 8);
  for (Ordering o : {Ordering::lex, Ordering::rlex, Ordering::grlex}) {
    VerifyOptions opt;
    opt.ordering = o;
    const auto [m, ord] = matrix_from_json(to_json(verify_instance(inst, opt))["matrix"]);
    EXPECT_EQ(ord, o);
    EXPECT_EQ(m, assemble_check_r(instantiate(inst), o));
  }
}

TEST(ReportProperty, RepeatedRunsAreByteIdentical) {
  for (FamilyId id : kAllFamilies) {
    VerifyOptions o;
    o.seed = 11;
    const std::string a = dump(strip_timing(to_json(verify_instance(random_instance(id, 11), o))));
    const std::string b = dump(strip_timing(to_json(verify_instance(random_instance(id, 11), o))));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.find("wall_time_ms"), std::string::npos);
  }
}

TEST(Sweep, DeterministicAcrossRunsAndThreads) {
  VerifyOptions o;
  o.n_max = 3;
  const SweepSummary a = run_sweep(FamilyId::Case6_2_2, 20, 7, o);
  const SweepSummary b = run_sweep(FamilyId::Case6_2_2, 20, 7, o);
  EXPECT_EQ(dump(strip_timing(to_json(a))), dump(strip_timing(to_json(b))));
  EXPECT_EQ(to_csv(a), to_csv(b));
  ASSERT_EQ(a.reports.size(), 20u);
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    EXPECT_TRUE(a.reports[i].pass);
    EXPECT_EQ(*a.reports[i].seed, derive_seed(7, i));
    EXPECT_EQ(a.reports[i].instance, random_instance(FamilyId::Case6_2_2, derive_seed(7, i)));
  }
  const Json j = to_json(a);
  EXPECT_EQ(j["passed"], 20);
  EXPECT_NE(derive_seed(7, 0), derive_seed(7, 1));
  EXPECT_NE(derive_seed(7, 0), derive_seed(8, 0));
}

TEST(Documents, ListOrbitHeckeConstraints) {
  const Json l = list_document();
  EXPECT_EQ(l["families"].size(), 22u);
  EXPECT_NE(list_csv().find("Case1"), std::string::npos);

  Gen g(74);
  const Json o = orbit_document(assemble_check_r(g.params()), 1e-9);
  EXPECT_EQ(o["distinct"], 8);
  EXPECT_EQ(o["summary"], "8 distinct elements");
  EXPECT_FALSE(o["input_solves_braid_relation"].get<bool>());
  EXPECT_TRUE(o["pass"].get<bool>());

  const Json h = hecke_document(assemble_check_r(instantiate(random_instance(FamilyId::Case1, 1))), 5, 1e-9);
  EXPECT_TRUE(h["pass"].get<bool>());
  const Json c = constraints_document(identity_params(), 1e-9);
  EXPECT_TRUE(c["pass"].get<bool>());
  EXPECT_EQ(c["residuals"].size(), 109u);
  const Json bad = constraints_document(g.params(), 1e-9);
  EXPECT_FALSE(bad["pass"].get<bool>());
  EXPECT_TRUE(bad["equivalent"].get<bool>());
  // sorted by magnitude
  for (std::size_t k = 1; k < bad["residuals"].size(); ++k)
    EXPECT_GE(bad["residuals"][k - 1]["abs"].get<double>(), bad["residuals"][k]["abs"].get<double>());
}

TEST(StripTiming, RemovesNestedKeys) {
  const Json j = Json::parse(R"({"a": 1, "wall_time_ms": 3, "b": [{"wall_time_ms": 1, "c": 2}]})");
  EXPECT_EQ(dump(strip_timing(j)), dump(Json::parse(R"({"a": 1, "b": [{"c": 2}]})")));
}
