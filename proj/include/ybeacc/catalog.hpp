#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybeacc/acc.hpp"

namespace ybeacc {

enum class FamilyId {
  Case1,
  Case3_1_1,
  Case3_1_2,
  Case5_2_1,
  Case5_2_2,
  Case5_4_a,
  Case5_4_b,
  Case5_5_1_1,
  Case5_5_1_2,
  Case5_7,
  Case6_2_1,
  Case6_2_1p,
  Case6_2_2,
  FixtureP,
  FixtureIdentity,
};

inline constexpr std::array<FamilyId, 15> kAllFamilies{
    FamilyId::Case1,       FamilyId::Case3_1_1,  FamilyId::Case3_1_2,   FamilyId::Case5_2_1,
    FamilyId::Case5_2_2,   FamilyId::Case5_4_a,  FamilyId::Case5_4_b,   FamilyId::Case5_5_1_1,
    FamilyId::Case5_5_1_2, FamilyId::Case5_7,    FamilyId::Case6_2_1,   FamilyId::Case6_2_1p,
    FamilyId::Case6_2_2,   FamilyId::FixtureP,   FamilyId::FixtureIdentity};

// The thirteen solution families, without the two fixtures.
inline constexpr std::array<FamilyId, 13> kSolutionFamilies{
    FamilyId::Case1,       FamilyId::Case3_1_1, FamilyId::Case3_1_2, FamilyId::Case5_2_1,
    FamilyId::Case5_2_2,   FamilyId::Case5_4_a, FamilyId::Case5_4_b, FamilyId::Case5_5_1_1,
    FamilyId::Case5_5_1_2, FamilyId::Case5_7,   FamilyId::Case6_2_1, FamilyId::Case6_2_1p,
    FamilyId::Case6_2_2};

std::string_view to_string(FamilyId id);
FamilyId parse_family(std::string_view s);

enum class Branch { plus, minus };
std::string_view to_string(Branch b);

struct FamilyInstance {
  FamilyId id = FamilyId::FixtureIdentity;
  std::map<std::string, Complex> continuous;
  Branch branch = Branch::plus;  // Case1 root of the quadratic
  int epsilon = 1;               // Case5_7, Case6_2_1
  int omega = 1;                 // power of exp(2πi/3): 1 or 2
  int varsigma = 1;              // ς = varsigma·i
  Complex scale{1.0, 0.0};
  std::optional<Complex> b_override;  // Case1 only; bypasses the quadratic

  bool operator==(const FamilyInstance&) const = default;
};

Complex omega_root(int power);

struct Case1Root {
  Complex b;
  Complex beta;
  bool double_root = false;
  double residual = 0.0;  // |β²a(a−1) + β(a−1) + a| relative to its terms
};

Case1Root case1_solve_b(Complex a, Complex x1, Complex x3, Branch branch);

// Validates the family domain and returns the printed block matrix as
// parameters (times inst.scale). Throws DomainViolation.
AccParams instantiate(const FamilyInstance& inst);
BlockForm instantiate_blocks(const FamilyInstance& inst);

struct SpectrumTemplate {
  std::vector<std::pair<Complex, int>> entries;
  bool coincident = false;  // entries were merged because values collided
};

SpectrumTemplate expected_spectrum(const FamilyInstance& inst, double merge_tol = 1e-9);

FamilyInstance random_instance(FamilyId id, std::uint64_t seed);

struct CatalogEntry {
  std::string name;
  bool no_solution = false;
  std::vector<std::string> x_pattern;   // nonzero x parameters
  int continuous_count = 0;
  int discrete_count = 0;
  std::vector<std::string> continuous;  // parameter names
  std::vector<std::string> discrete;
  std::string domain;
  std::string spectrum;                 // human-readable template
  bool hecke = false;                   // two distinct eigenvalues
  std::string note;
};

// Solution families first (FamilyId order), then the no-solution branches.
const std::vector<CatalogEntry>& list_families();
const CatalogEntry& family_info(FamilyId id);

}  // namespace ybeacc
