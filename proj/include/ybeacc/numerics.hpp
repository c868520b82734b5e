#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ybeacc/errors.hpp"

namespace ybeacc {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultMaxSide = 729;

// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t side) : side_(side), a_(side * side) {}
  Matrix(std::size_t side, std::vector<Complex> entries);

  static Matrix identity(std::size_t side);

  std::size_t side() const { return side_; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * side_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * side_ + j]; }
  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

  bool operator==(const Matrix& o) const { return side_ == o.side_ && a_ == o.a_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(Complex s);

 private:
  std::size_t side_ = 0;
  std::vector<Complex> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Complex s, Matrix a);

// Zero entries of `a` are skipped; when `b` is sparse its rows are compressed
// first, so products of charge-conserving tower matrices stay cheap at 729.
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix kron(const Matrix& a, const Matrix& b, std::size_t max_side = kDefaultMaxSide);
Matrix transpose(const Matrix& m);
Matrix permute(const Matrix& m, const std::vector<std::size_t>& perm);  // out(p[i],p[j]) = m(i,j)
Complex trace(const Matrix& m);
double max_abs(const Matrix& m);
bool all_finite(const Matrix& m);

int rank(const Matrix& m, double tol);

// Gaussian elimination with partial pivoting; throws SingularSystem.
std::vector<Complex> solve(std::vector<Complex> a, std::vector<Complex> b, std::size_t n);

struct SpectrumEntry {
  Complex value;
  int multiplicity = 0;
  int exponent = 1;  // power of (m - value) in the certified minimal polynomial
};

struct SpectrumReport {
  std::vector<SpectrumEntry> entries;
  std::vector<Complex> solved;  // raw Vandermonde solution before rounding
  double residual = 0.0;
  double scale = 1.0;
  bool semisimple = true;
};

// tol_int < 0 selects the default 1e-6 * side.
SpectrumReport multiplicities_from_traces(const Matrix& m, const std::vector<Complex>& candidates,
                                          double tol = 1e-9, double tol_int = -1.0);

}  // namespace ybeacc
