#include "ybeacc/acc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ybeacc {

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::lex: return "lex";
    case Ordering::rlex: return "rlex";
    case Ordering::grlex: return "grlex";
  }
  return "?";
}

Ordering parse_ordering(std::string_view s) {
  if (s == "lex") return Ordering::lex;
  if (s == "rlex") return Ordering::rlex;
  if (s == "grlex") return Ordering::grlex;
  throw Error(ErrorCode::InvalidInput, "unknown ordering '" + std::string(s) + "'");
}

const std::array<AccField, AccParams::kCount>& acc_fields() {
  static const std::array<AccField, AccParams::kCount> table{{
      {"a1", &AccParams::a1, 0, 0},    {"a2", &AccParams::a2, 4, 4},
      {"a3", &AccParams::a3, 8, 8},    {"a12", &AccParams::a12, 1, 1},
      {"b12", &AccParams::b12, 1, 3},  {"c12", &AccParams::c12, 3, 1},
      {"d12", &AccParams::d12, 3, 3},  {"a13", &AccParams::a13, 2, 2},
      {"b13", &AccParams::b13, 2, 6},  {"c13", &AccParams::c13, 6, 2},
      {"d13", &AccParams::d13, 6, 6},  {"a23", &AccParams::a23, 5, 5},
      {"b23", &AccParams::b23, 5, 7},  {"c23", &AccParams::c23, 7, 5},
      {"d23", &AccParams::d23, 7, 7},  {"x1", &AccParams::x1, 2, 4},
      {"x2", &AccParams::x2, 4, 2},    {"x3", &AccParams::x3, 4, 6},
      {"x4", &AccParams::x4, 6, 4},
  }};
  return table;
}

Complex& AccParams::operator[](std::size_t k) { return this->*(acc_fields().at(k).member); }
const Complex& AccParams::operator[](std::size_t k) const {
  return this->*(acc_fields().at(k).member);
}

std::size_t field_index(std::string_view name) {
  const auto& f = acc_fields();
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k].name == name) return k;
  throw Error(ErrorCode::InvalidInput, "unknown parameter '" + std::string(name) + "'");
}

AccParams identity_params() {
  AccParams p;
  p.a1 = p.a2 = p.a3 = 1.0;
  p.a12 = p.d12 = p.a13 = p.d13 = p.a23 = p.d23 = 1.0;
  return p;
}

AccParams scaled(const AccParams& p, Complex s) {
  AccParams q = p;
  for (std::size_t k = 0; k < AccParams::kCount; ++k) q[k] *= s;
  return q;
}

double max_abs(const AccParams& p) {
  double r = 0.0;
  for (std::size_t k = 0; k < AccParams::kCount; ++k) r = std::max(r, std::abs(p[k]));
  return r;
}

namespace {

// grlex position g holds rlex index kGrlex[g]; the map is an involution.
constexpr std::array<std::size_t, 9> kGrlex{0, 1, 3, 2, 4, 6, 5, 7, 8};
// lex position of rlex index k: |ij> sits at i+3j in rlex, 3i+j in lex.
constexpr std::array<std::size_t, 9> kLex{0, 3, 6, 1, 4, 7, 2, 5, 8};

std::vector<std::size_t> to_rlex_perm(Ordering o) {
  std::vector<std::size_t> p(9);
  for (std::size_t k = 0; k < 9; ++k) {
    switch (o) {
      case Ordering::rlex: p[k] = k; break;
      case Ordering::grlex: p[k] = kGrlex[k]; break;
      case Ordering::lex: p[k] = kLex[k]; break;
    }
  }
  return p;
}

void require_nine(const Matrix& m) {
  if (m.side() != 9) throw Error(ErrorCode::DimensionMismatch, "expected a 9x9 matrix");
}

std::array<std::array<bool, 9>, 9> rlex_pattern() {
  std::array<std::array<bool, 9>, 9> mask{};
  for (const auto& f : acc_fields()) mask[f.row][f.col] = true;
  return mask;
}

constexpr std::array<std::size_t, 5> kBlockStart{0, 1, 3, 6, 8};
constexpr std::array<std::size_t, 5> kBlockSide{1, 2, 3, 2, 1};

}  // namespace

Matrix convert_ordering(const Matrix& m, Ordering from, Ordering to) {
  require_nine(m);
  if (from == to) return m;
  // Both maps are involutions, so the same vector sends rlex -> o and o -> rlex.
  Matrix r = from == Ordering::rlex ? m : permute(m, to_rlex_perm(from));
  return to == Ordering::rlex ? r : permute(r, to_rlex_perm(to));
}

Matrix assemble_check_r(const AccParams& p, Ordering ord) {
  Matrix m(9);
  for (const auto& f : acc_fields()) m(f.row, f.col) = p.*(f.member);
  return convert_ordering(m, Ordering::rlex, ord);
}

AccParams extract_params(const Matrix& m, Ordering ord) {
  require_nine(m);
  const Matrix r = convert_ordering(m, ord, Ordering::rlex);
  const auto mask = rlex_pattern();
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      if (!mask[i][j] && r(i, j) != Complex{}) {
        throw Error(ErrorCode::NotAccShaped, "nonzero entry outside the ACC pattern at (" +
                                                 std::to_string(i) + "," + std::to_string(j) +
                                                 ") in rlex order");
      }
  AccParams p;
  for (const auto& f : acc_fields()) p.*(f.member) = r(f.row, f.col);
  return p;
}

bool is_acc_shaped(const Matrix& m, Ordering ord, double tol) {
  require_nine(m);
  const Matrix r = convert_ordering(m, ord, Ordering::rlex);
  const auto mask = rlex_pattern();
  const double thresh = tol * max_abs(r);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      if (!mask[i][j] && std::abs(r(i, j)) > thresh) return false;
  return true;
}

BlockForm to_blocks(const Matrix& g) {
  require_nine(g);
  BlockForm b;
  Matrix* blocks[5] = {&b.b1, &b.b2, &b.b3, &b.b4, &b.b5};
  for (std::size_t k = 0; k < 5; ++k)
    for (std::size_t i = 0; i < kBlockSide[k]; ++i)
      for (std::size_t j = 0; j < kBlockSide[k]; ++j)
        (*blocks[k])(i, j) = g(kBlockStart[k] + i, kBlockStart[k] + j);
  return b;
}

Matrix from_blocks(const BlockForm& b) {
  const Matrix* blocks[5] = {&b.b1, &b.b2, &b.b3, &b.b4, &b.b5};
  Matrix g(9);
  for (std::size_t k = 0; k < 5; ++k) {
    if (blocks[k]->side() != kBlockSide[k])
      throw Error(ErrorCode::DimensionMismatch, "block " + std::to_string(k + 1) + " has wrong side");
    for (std::size_t i = 0; i < kBlockSide[k]; ++i)
      for (std::size_t j = 0; j < kBlockSide[k]; ++j)
        g(kBlockStart[k] + i, kBlockStart[k] + j) = (*blocks[k])(i, j);
  }
  return g;
}

Matrix swap_operator() {
  Matrix p(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) p(3 * j + i, 3 * i + j) = 1.0;
  return p;
}

Matrix grlex_permutation() {
  Matrix p(9);
  for (std::size_t g = 0; g < 9; ++g) p(g, kGrlex[g]) = 1.0;
  return p;
}

Matrix to_r(const Matrix& rcheck) {
  require_nine(rcheck);
  return mat_mul(swap_operator(), rcheck);
}

Matrix to_check(const Matrix& r) {
  require_nine(r);
  return mat_mul(swap_operator(), r);
}

Matrix braid_embed(const Matrix& rcheck, int n, int i, int max_level) {
  require_nine(rcheck);
  if (n < 2 || n > max_level) {
    throw Error(ErrorCode::SizeOverflow, "tower level " + std::to_string(n) + " outside [2, " +
                                             std::to_string(max_level) + "]");
  }
  if (i < 1 || i > n - 1) throw Error(ErrorCode::InvalidInput, "generator index out of range");
  std::size_t left = 1, right = 1;
  for (int k = 1; k < i; ++k) left *= 3;
  for (int k = i + 1; k < n; ++k) right *= 3;
  std::size_t max_side = 1;
  for (int k = 0; k < max_level; ++k) max_side *= 3;
  return kron(kron(Matrix::identity(left), rcheck, max_side), Matrix::identity(right), max_side);
}

Matrix braid_anomaly(const Matrix& rcheck) {
  const Matrix r1 = braid_embed(rcheck, 3, 1);
  const Matrix r2 = braid_embed(rcheck, 3, 2);
  return mat_mul(mat_mul(r1, r2), r1) - mat_mul(mat_mul(r2, r1), r2);
}

Matrix ybe_residual(const Matrix& r) {
  require_nine(r);
  const Matrix i3 = Matrix::identity(3);
  const Matrix r12 = kron(r, i3);
  const Matrix r23 = kron(i3, r);
  const Matrix p23 = kron(i3, swap_operator());
  const Matrix r13 = mat_mul(mat_mul(p23, r12), p23);
  return mat_mul(mat_mul(r12, r13), r23) - mat_mul(mat_mul(r23, r13), r12);
}

double cubic_scale(const Matrix& m) {
  const double s = max_abs(m);
  return s * s * s;
}

}  // namespace ybeacc
