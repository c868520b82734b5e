#pragma once

#include <array>
#include <string>
#include <string_view>

#include "ybeacc/numerics.hpp"

namespace ybeacc {

// Basis orderings of V⊗V, V = C^3. `rlex` is the presentation the braid
// tower consumes: its matrix is used directly as the Kronecker operand.
// grlex makes the ansatz block diagonal (1,2,3,2,1); lex = P·rlex·P.
enum class Ordering { lex, rlex, grlex };

std::string_view to_string(Ordering o);
Ordering parse_ordering(std::string_view s);

struct AccParams {
  Complex a1, a2, a3;
  Complex a12, b12, c12, d12;
  Complex a13, b13, c13, d13;
  Complex a23, b23, c23, d23;
  Complex x1, x2, x3, x4;

  static constexpr std::size_t kCount = 19;
  Complex& operator[](std::size_t k);
  const Complex& operator[](std::size_t k) const;
  bool operator==(const AccParams&) const = default;
};

struct AccField {
  std::string_view name;
  Complex AccParams::*member;
  int row;  // position in the rlex presentation
  int col;
};

const std::array<AccField, AccParams::kCount>& acc_fields();
std::size_t field_index(std::string_view name);  // throws InvalidInput

AccParams identity_params();
AccParams scaled(const AccParams& p, Complex s);
double max_abs(const AccParams& p);

struct BlockForm {
  Matrix b1{1}, b2{2}, b3{3}, b4{2}, b5{1};
};

BlockForm to_blocks(const Matrix& grlex);
Matrix from_blocks(const BlockForm& b);

Matrix assemble_check_r(const AccParams& p, Ordering ord = Ordering::rlex);
// Requires exact zeros outside the pattern; throws NotAccShaped otherwise.
AccParams extract_params(const Matrix& m, Ordering ord = Ordering::rlex);
bool is_acc_shaped(const Matrix& m, Ordering ord, double tol);

Matrix swap_operator();
Matrix grlex_permutation();
Matrix convert_ordering(const Matrix& m, Ordering from, Ordering to);

Matrix to_r(const Matrix& rcheck);
Matrix to_check(const Matrix& r);

inline constexpr int kDefaultMaxLevel = 6;

Matrix braid_embed(const Matrix& rcheck, int n, int i, int max_level = kDefaultMaxLevel);
Matrix braid_anomaly(const Matrix& rcheck);
Matrix ybe_residual(const Matrix& r);

// Cube of the largest entry: the natural scale of anything cubic in Ř.
double cubic_scale(const Matrix& m);

}  // namespace ybeacc
