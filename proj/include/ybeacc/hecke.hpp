#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ybeacc/acc.hpp"

namespace ybeacc {

struct HeckeData {
  Complex lambda2;     // the eigenvalue other than 1
  int multiplicity = 0;  // of lambda2
  Complex q;           // -lambda2
  Complex alpha;       // principal sqrt(q); -alpha is equally valid
  double residual = 0.0;  // |(Ř - 1)(Ř - λ2)|_max
  double scale = 1.0;
};

HeckeData hecke_extract(const Matrix& rcheck, double tol = 1e-9);

// max(1, |Ř|_max)^3, the scale for tower identities of degree up to 3.
double tower_scale(const Matrix& rcheck);

// Max over i of the image of the three-strand q-antisymmetrizer on (i, i+1).
double tl_projector_residual(const Matrix& rcheck, int n);

struct TlRescaleResiduals {
  double braid_like = 0.0;  // max |U_i U_j U_i - U_i| over |i-j| = 1, at n = 3
  double quadratic = 0.0;   // |alpha U^2 + (1+q) U|
  double scale = 1.0;
};

TlRescaleResiduals tl_rescale_residuals(const Matrix& rcheck, Complex q, Complex alpha);

struct RankOneFactor {
  std::vector<Complex> u, v;  // Ř - 1 = u vᵀ, rlex indexing
  double residual = 0.0;      // relative reconstruction error
};

RankOneFactor rank_one_factor(const Matrix& rcheck, double tol = 1e-9);
Complex loop_parameter(const Matrix& rcheck, double tol = 1e-9);

// Σ_w q^{-ℓ(w)} ρ_n(T_w) via the coset recursion.
Matrix q_symmetrizer(const Matrix& rcheck, int n, Complex q);
// The same recursion on the trivial representation.
Complex q_symmetrizer_scalar(int n, Complex q);

using Partition2 = std::pair<int, int>;  // (p, r), p >= r >= 0

struct LevelDiagnostics {
  int n = 0;
  Complex symmetrizer_trace;
  Complex symmetrizer_scalar;
  double integer_residual = 0.0;  // |trace/scalar - nearest integer|
  long long dimension_sum = 0;
  double t1_residual = 0.0;
  // Independent solve of (m_(n), m_(n-1,1)) from the dimension identity and
  // the t1 trace, given the r >= 2 entries; present at levels 3..5.
  std::optional<std::pair<double, double>> direct_two_row;
  bool stability_consistent = true;
};

struct MultiplicityTable {
  Complex lambda2;
  std::map<int, std::map<Partition2, long long>> levels;  // n -> partition -> multiplicity
  std::vector<LevelDiagnostics> diagnostics;
};

MultiplicityTable multiplicity_table(const Matrix& rcheck, int n_max = 6, double tol = 1e-9);

long long syt_count(const std::vector<int>& partition);

struct SytSplit {
  long long total = 0;
  long long same_row = 0;     // 2 to the right of 1
  long long same_column = 0;  // 2 below 1
};

SytSplit syt_split(const std::vector<int>& partition);

}  // namespace ybeacc
