#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ybeacc/acc.hpp"

namespace ybeacc {

// T: transpose. L: left-right relabeling, P·Ř·P. Z: the basis change
// |j> -> |2-j> on both factors. Matrices are in the rlex presentation.
enum class Letter { T, L, Z };

struct SymmetryWord {
  std::vector<Letter> letters;  // applied right-to-left
  Complex scale{1.0, 0.0};

  std::string to_string() const;  // e.g. "ZL", "e" for the empty word
  static SymmetryWord parse(std::string_view s);
};

Matrix apply(Letter l, const Matrix& rcheck);
Matrix apply(const SymmetryWord& w, const Matrix& rcheck);

// The same actions written as field relabelings.
AccParams apply(Letter l, const AccParams& p);
AccParams apply(const SymmetryWord& w, const AccParams& p);

// Rescale so the first entry (grlex scan order) above tol·max is 1.
Matrix normalize_scale(const Matrix& rcheck, double tol = 1e-9);

struct OrbitElement {
  SymmetryWord word;
  Matrix matrix;  // normalized by normalize_scale
};

std::vector<OrbitElement> orbit(const Matrix& rcheck, double tol = 1e-9);

std::set<std::string> xpattern_action(const SymmetryWord& w, const std::set<std::string>& pattern);

}  // namespace ybeacc
