#include "ybeacc/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include "ybeacc/constraints.hpp"
#include "ybeacc/symmetry.hpp"

namespace ybeacc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string shortest(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

Json table_json(const MultiplicityTable& t) {
  Json levels = Json::array();
  for (const auto& [n, parts] : t.levels) {
    if (n == 0) continue;
    Json ms = Json::array();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      Json part = Json::array({it->first.first});
      if (it->first.second > 0) part.push_back(it->first.second);
      ms.push_back(Json{{"partition", part}, {"multiplicity", it->second}});
    }
    Json lvl{{"n", n}, {"multiplicities", ms}};
    for (const auto& d : t.diagnostics) {
      if (d.n != n) continue;
      Json diag{{"symmetrizer_trace", to_json(d.symmetrizer_trace)},
                {"symmetrizer_scalar", to_json(d.symmetrizer_scalar)},
                {"integer_residual", d.integer_residual},
                {"dimension_sum", d.dimension_sum},
                {"t1_residual", d.t1_residual}};
      if (d.direct_two_row) {
        diag["direct_two_row"] = Json::array({d.direct_two_row->first, d.direct_two_row->second});
      } else {
        diag["direct_two_row"] = nullptr;
      }
      diag["stability_consistent"] = d.stability_consistent;
      lvl["diagnostics"] = std::move(diag);
    }
    levels.push_back(std::move(lvl));
  }
  Json seq = Json::array();
  for (const auto& [n, parts] : t.levels)
    if (n >= 1) seq.push_back(parts.at({n, 0}));
  bool recurrence = true;
  for (std::size_t k = 2; k < seq.size(); ++k)
    recurrence &= seq[k].get<long long>() == 3 * seq[k - 1].get<long long>() - seq[k - 2].get<long long>();
  return Json{{"lambda2", to_json(t.lambda2)},
              {"levels", levels},
              {"top_sequence", seq},
              {"recurrence_holds", recurrence}};
}

bool table_consistent(const MultiplicityTable& t) {
  for (const auto& d : t.diagnostics)
    if (!d.stability_consistent) return false;
  return true;
}

HeckeSummary hecke_summary(const Matrix& rc, int n_max, double tol) {
  HeckeSummary h;
  try {
    h.data = hecke_extract(rc, tol);
    h.ok = true;
  } catch (const Error& e) {
    h.error = std::string(to_string(e.code())) + ": " + e.what();
    return h;
  }
  const double ts = tower_scale(rc);
  for (int n = 3; n <= std::min(n_max, 6); ++n) h.tl_residuals.emplace_back(n, tl_projector_residual(rc, n) / ts);
  try {
    h.loop_parameter = loop_parameter(rc, tol);
  } catch (const Error&) {
  }
  // The stability recursion is anchored on a rank-one Ř - 1; other TL
  // representations have different base multiplicities.
  if (h.loop_parameter && !h.tl_residuals.empty() && h.tl_residuals.front().second <= tol) {
    try {
      h.table = multiplicity_table(rc, n_max, tol);
    } catch (const Error& e) {
      h.table_error = std::string(to_string(e.code())) + ": " + e.what();
    }
  }
  return h;
}

Json hecke_json(const HeckeSummary& h) {
  Json j{{"ok", h.ok}};
  if (!h.ok) {
    j["error"] = h.error;
    return j;
  }
  j["lambda2"] = to_json(h.data.lambda2);
  j["multiplicity"] = h.data.multiplicity;
  j["q"] = to_json(h.data.q);
  j["alpha"] = to_json(h.data.alpha);
  j["relation_residual"] = h.data.residual / h.data.scale;
  Json tl = Json::array();
  for (const auto& [n, r] : h.tl_residuals) tl.push_back(Json{{"n", n}, {"residual", r}});
  j["tl_residuals"] = tl;
  j["loop_parameter"] = h.loop_parameter ? to_json(*h.loop_parameter) : Json(nullptr);
  j["multiplicities"] = h.table ? table_json(*h.table) : Json(nullptr);
  if (!h.table_error.empty()) j["table_error"] = h.table_error;
  return j;
}

}  // namespace

VerificationReport verify_instance(const FamilyInstance& inst, const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.instance = inst;
  r.seed = opt.seed;
  r.tol = opt.tol;
  r.ordering = opt.ordering;
  r.params = instantiate(inst);
  const Matrix rc = assemble_check_r(r.params, Ordering::rlex);
  r.check_r = convert_ordering(rc, Ordering::rlex, opt.ordering);
  r.scale = cubic_scale(rc);
  r.anomaly_max = max_abs(braid_anomaly(rc));
  r.ybe_max = max_abs(ybe_residual(to_r(rc)));
  r.constraint_max = constraint_residuals(r.params).max_abs;
  const double bound = opt.tol * r.scale;
  if (r.anomaly_max > bound) r.failures.push_back("anomaly");
  if (r.ybe_max > bound) r.failures.push_back("ybe");
  if (r.constraint_max > bound) r.failures.push_back("constraints");

  const SpectrumTemplate tmpl = expected_spectrum(inst);
  r.spectrum_coincident = tmpl.coincident;
  std::vector<Complex> cands;
  for (const auto& [v, m] : tmpl.entries) {
    cands.push_back(v);
    r.spectrum.push_back({v, m, -1, 0});
  }
  try {
    const SpectrumReport sr = multiplicities_from_traces(rc, cands, opt.tol);
    r.semisimple = sr.semisimple;
    r.certificate_residual = sr.residual / sr.scale;
    for (std::size_t k = 0; k < sr.entries.size(); ++k) {
      r.spectrum[k].observed = sr.entries[k].multiplicity;
      r.spectrum[k].exponent = sr.entries[k].exponent;
      if (r.spectrum[k].observed != r.spectrum[k].expected) r.failures.push_back("spectrum");
    }
  } catch (const Error& e) {
    r.spectrum_error = std::string(to_string(e.code())) + ": " + e.what();
    r.failures.push_back("spectrum");
  }
  r.failures.erase(std::unique(r.failures.begin(), r.failures.end()), r.failures.end());

  if (family_info(inst.id).hecke) {
    r.hecke = hecke_summary(rc, opt.n_max, opt.tol);
    if (!r.hecke->table_error.empty() || (r.hecke->table && !table_consistent(*r.hecke->table))) {
      r.failures.push_back("multiplicities");
    }
  }
  r.pass = r.failures.empty();
  r.wall_time_ms = elapsed_ms(t0);
  return r;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["command"] = "verify";
  j["family"] = std::string(to_string(r.instance.id));
  j["instance"] = instance_to_json(r.instance);
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["tolerance"] = r.tol;
  j["params"] = params_to_json(r.params);
  j["matrix"] = matrix_to_json(r.check_r, r.ordering);
  j["residuals"] = Json{{"scale", r.scale},
                        {"anomaly_max", r.anomaly_max},
                        {"ybe_max", r.ybe_max},
                        {"constraint_max", r.constraint_max}};
  Json entries = Json::array();
  for (const auto& s : r.spectrum) {
    entries.push_back(Json{{"value", to_json(s.value)},
                           {"expected", s.expected},
                           {"observed", s.observed},
                           {"exponent", s.exponent}});
  }
  Json spectrum{{"entries", entries},
                {"coincident", r.spectrum_coincident},
                {"semisimple", r.semisimple},
                {"certificate_residual", r.certificate_residual}};
  if (!r.spectrum_error.empty()) spectrum["error"] = r.spectrum_error;
  j["spectrum"] = std::move(spectrum);
  j["hecke"] = r.hecke ? hecke_json(*r.hecke) : Json(nullptr);
  j["failures"] = r.failures;
  j["pass"] = r.pass;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SweepSummary run_sweep(FamilyId id, std::size_t count, std::uint64_t seed, const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  SweepSummary s;
  s.family = id;
  s.count = count;
  s.seed = seed;
  s.tol = opt.tol;
  s.reports.resize(count);
  std::vector<std::string> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const std::uint64_t si = derive_seed(seed, i);
      VerifyOptions o = opt;
      o.seed = si;
      try {
        s.reports[i] = verify_instance(random_instance(id, si), o);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t nthreads = std::min<std::size_t>(hw, std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < count; ++i)
    if (!errors[i].empty()) throw Error(ErrorCode::InvalidInput, "instance " + std::to_string(i) + ": " + errors[i]);
  s.wall_time_ms = elapsed_ms(t0);
  return s;
}

namespace {

std::vector<int> observed_pattern(const VerificationReport& r) {
  std::vector<int> p;
  for (const auto& l : r.spectrum) p.push_back(l.observed);
  return p;
}

}  // namespace

Json to_json(const SweepSummary& s) {
  Json j;
  j["command"] = "sweep";
  j["family"] = std::string(to_string(s.family));
  j["count"] = s.count;
  j["seed"] = s.seed;
  j["tolerance"] = s.tol;
  std::size_t passed = 0;
  Json failed = Json::array();
  double worst_a = 0, worst_y = 0, worst_c = 0;
  std::map<std::vector<int>, std::size_t> patterns;
  Json instances = Json::array();
  for (std::size_t i = 0; i < s.reports.size(); ++i) {
    const auto& r = s.reports[i];
    if (r.pass) ++passed;
    else failed.push_back(i);
    worst_a = std::max(worst_a, r.anomaly_max / r.scale);
    worst_y = std::max(worst_y, r.ybe_max / r.scale);
    worst_c = std::max(worst_c, r.constraint_max / r.scale);
    ++patterns[observed_pattern(r)];
    instances.push_back(Json{{"index", i},
                             {"seed", *r.seed},
                             {"pass", r.pass},
                             {"anomaly_rel", r.anomaly_max / r.scale},
                             {"ybe_rel", r.ybe_max / r.scale},
                             {"constraint_rel", r.constraint_max / r.scale},
                             {"multiplicities", observed_pattern(r)},
                             {"failures", r.failures}});
  }
  j["passed"] = passed;
  j["failed"] = failed;
  j["max_relative"] = Json{{"anomaly", worst_a}, {"ybe", worst_y}, {"constraint", worst_c}};
  Json pat = Json::array();
  for (const auto& [p, n] : patterns) pat.push_back(Json{{"multiplicities", p}, {"count", n}});
  j["spectra"] = pat;
  j["instances"] = instances;
  j["wall_time_ms"] = s.wall_time_ms;
  return j;
}

std::string to_csv(const SweepSummary& s) {
  std::ostringstream out;
  out << "index,seed,pass,anomaly_rel,ybe_rel,constraint_rel,multiplicities\n";
  for (std::size_t i = 0; i < s.reports.size(); ++i) {
    const auto& r = s.reports[i];
    out << i << ',' << *r.seed << ',' << (r.pass ? "true" : "false") << ','
        << shortest(r.anomaly_max / r.scale) << ',' << shortest(r.ybe_max / r.scale) << ','
        << shortest(r.constraint_max / r.scale) << ',';
    const auto p = observed_pattern(r);
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? ";" : "") << p[k];
    out << '\n';
  }
  return out.str();
}

Json list_document() {
  Json fams = Json::array();
  for (const auto& e : list_families()) {
    Json j;
    j["name"] = e.name;
    j["no_solution"] = e.no_solution;
    j["x_pattern"] = e.x_pattern;
    if (!e.no_solution) {
      j["parameters"] = std::to_string(e.continuous_count) + "/" + std::to_string(e.discrete_count);
      j["continuous"] = e.continuous;
      j["discrete"] = e.discrete;
      j["domain"] = e.domain;
      j["spectrum"] = e.spectrum;
      j["hecke"] = e.hecke;
    }
    j["note"] = e.note;
    fams.push_back(std::move(j));
  }
  return Json{{"command", "list"}, {"families", fams}};
}

std::string list_csv() {
  std::ostringstream out;
  out << "name,no_solution,x_pattern,parameters,spectrum,hecke,note\n";
  for (const auto& e : list_families()) {
    std::string xs;
    for (std::size_t k = 0; k < e.x_pattern.size(); ++k) xs += (k ? ";" : "") + e.x_pattern[k];
    out << e.name << ',' << (e.no_solution ? "true" : "false") << ',' << xs << ',';
    if (!e.no_solution) out << e.continuous_count << '/' << e.discrete_count;
    out << ",\"" << e.spectrum << "\"," << (e.hecke ? "true" : "false") << ",\"" << e.note << "\"\n";
  }
  return out.str();
}

Json orbit_document(const Matrix& rc, double tol) {
  const auto elems = orbit(rc, tol);
  const bool input_solves = max_abs(braid_anomaly(rc)) <= tol * cubic_scale(rc);
  bool pass = true;
  Json list = Json::array();
  for (const auto& e : elems) {
    Json j;
    j["word"] = e.word.to_string();
    j["acc_shaped"] = is_acc_shaped(e.matrix, Ordering::rlex, 0.0);
    j["anomaly_rel"] = max_abs(braid_anomaly(e.matrix)) / cubic_scale(e.matrix);
    j["params"] = j["acc_shaped"].get<bool>() ? params_to_json(extract_params(e.matrix)) : Json(nullptr);
    pass &= j["acc_shaped"].get<bool>();
    if (input_solves) pass &= j["anomaly_rel"].get<double>() <= tol;
    list.push_back(std::move(j));
  }
  return Json{{"command", "orbit"},
              {"tolerance", tol},
              {"input_solves_braid_relation", input_solves},
              {"distinct", elems.size()},
              {"summary", std::to_string(elems.size()) + " distinct elements"},
              {"elements", list},
              {"pass", pass}};
}

Json hecke_document(const Matrix& rc, int n_max, double tol) {
  const auto t0 = Clock::now();
  Json j{{"command", "hecke"}, {"tolerance", tol}, {"n_max", n_max}};
  const HeckeSummary h = hecke_summary(rc, n_max, tol);
  j["hecke"] = hecke_json(h);
  bool pass = h.ok;
  if (h.ok) {
    try {
      const RankOneFactor f = rank_one_factor(rc, tol);
      Json u = Json::array(), v = Json::array();
      for (const auto& z : f.u) u.push_back(to_json(z));
      for (const auto& z : f.v) v.push_back(to_json(z));
      j["rank_one_factor"] = Json{{"u", u}, {"v", v}, {"residual", f.residual}};
    } catch (const Error& e) {
      j["rank_one_factor"] = nullptr;
    }
    Json rescale = Json::array();
    for (int sign : {1, -1}) {
      const Complex alpha = static_cast<double>(sign) * h.data.alpha;
      const TlRescaleResiduals t = tl_rescale_residuals(rc, h.data.q, alpha);
      rescale.push_back(Json{{"alpha", to_json(alpha)},
                             {"braid_like", t.braid_like / t.scale},
                             {"quadratic", t.quadratic / t.scale}});
    }
    j["tl_rescale"] = rescale;
    for (const auto& [n, r] : h.tl_residuals) pass &= r <= tol;
    pass &= h.table.has_value() && table_consistent(*h.table);
    if (h.table) pass &= j["hecke"]["multiplicities"]["recurrence_holds"].get<bool>();
  }
  j["pass"] = pass;
  j["wall_time_ms"] = elapsed_ms(t0);
  return j;
}

Json constraints_document(const AccParams& p, double tol) {
  const ConstraintResiduals r = constraint_residuals(p);
  const auto& table = constraint_table();
  std::vector<std::size_t> order(r.values.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(r.values[a]) > std::abs(r.values[b]);
  });
  Json list = Json::array();
  for (std::size_t k : order) {
    list.push_back(Json{{"label", table[k].label},
                        {"value", to_json(r.values[k])},
                        {"abs", std::abs(r.values[k])}});
  }
  const Matrix rc = assemble_check_r(p);
  const double scale = constraint_scale(p);
  const double anomaly = max_abs(braid_anomaly(rc));
  return Json{{"command", "constraints"},
              {"tolerance", tol},
              {"params", params_to_json(p)},
              {"scale", scale},
              {"max_abs", r.max_abs},
              {"anomaly_max", anomaly},
              {"all_vanish", r.max_abs <= tol * scale},
              {"equivalent", anomaly_equivalence_check(p, tol)},
              {"residuals", list},
              {"pass", r.max_abs <= tol * scale}};
}

Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("wall_time_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

}  // namespace ybeacc
