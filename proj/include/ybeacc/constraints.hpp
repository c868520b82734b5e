#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ybeacc/acc.hpp"

namespace ybeacc {

struct Monomial {
  double coefficient = 0.0;
  std::array<std::uint8_t, AccParams::kCount> powers{};  // indexed like acc_fields()
  int degree() const;
};

struct Equation {
  std::string label;    // "A1" .. "A109"
  std::string printed;  // source expression, as transcribed
  std::vector<Monomial> terms;
};

// Parsed once from the embedded text table; immutable afterwards.
const std::vector<Equation>& constraint_table();

Complex evaluate(const Equation& eq, const AccParams& p);

struct ConstraintResiduals {
  std::vector<Complex> values;  // same order as constraint_table()
  double max_abs = 0.0;
};

ConstraintResiduals constraint_residuals(const AccParams& p);

// Every equation is cubic, as is every anomaly entry, so both sides share
// the scale max|p|^3.
double constraint_scale(const AccParams& p);

bool anomaly_equivalence_check(const AccParams& p, double tol = 1e-9);

// Polynomial parser used for the table; exposed for tests.
std::vector<Monomial> parse_polynomial(const std::string& expr);

}  // namespace ybeacc
