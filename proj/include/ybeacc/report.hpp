#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybeacc/catalog.hpp"
#include "ybeacc/hecke.hpp"
#include "ybeacc/io.hpp"

namespace ybeacc {

struct VerifyOptions {
  double tol = 1e-9;
  int n_max = 5;
  Ordering ordering = Ordering::grlex;
  std::optional<std::uint64_t> seed;
};

struct SpectrumLine {
  Complex value;
  int expected = 0;
  int observed = -1;  // -1 when extraction failed
  int exponent = 0;
};

struct HeckeSummary {
  bool ok = false;
  std::string error;
  HeckeData data;
  std::vector<std::pair<int, double>> tl_residuals;  // level -> relative residual
  std::optional<Complex> loop_parameter;
  std::optional<MultiplicityTable> table;
  std::string table_error;
};

struct VerificationReport {
  FamilyInstance instance;
  AccParams params;
  Matrix check_r;  // in options.ordering
  Ordering ordering = Ordering::grlex;
  double scale = 0.0;
  double anomaly_max = 0.0;
  double ybe_max = 0.0;
  double constraint_max = 0.0;
  std::vector<SpectrumLine> spectrum;
  bool spectrum_coincident = false;
  bool semisimple = true;
  double certificate_residual = 0.0;
  std::string spectrum_error;
  std::optional<HeckeSummary> hecke;
  std::vector<std::string> failures;
  bool pass = false;
  std::optional<std::uint64_t> seed;
  double tol = 1e-9;
  double wall_time_ms = 0.0;
};

VerificationReport verify_instance(const FamilyInstance& inst, const VerifyOptions& opt);
Json to_json(const VerificationReport& r);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct SweepSummary {
  FamilyId family;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::vector<VerificationReport> reports;  // by instance index
  double wall_time_ms = 0.0;
};

SweepSummary run_sweep(FamilyId id, std::size_t count, std::uint64_t seed, const VerifyOptions& opt);
Json to_json(const SweepSummary& s);
std::string to_csv(const SweepSummary& s);

Json list_document();
std::string list_csv();
Json orbit_document(const Matrix& rcheck, double tol);
Json hecke_document(const Matrix& rcheck, int n_max, double tol);
Json constraints_document(const AccParams& p, double tol);

// Drops every "wall_time_ms" member, recursively.
Json strip_timing(Json j);

}  // namespace ybeacc
