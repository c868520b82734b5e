#include "ybeacc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ybeacc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::CandidatesNotDistinct: return "CandidatesNotDistinct";
    case ErrorCode::MinimalPolynomialMismatch: return "MinimalPolynomialMismatch";
    case ErrorCode::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
    case ErrorCode::NotAccShaped: return "NotAccShaped";
    case ErrorCode::DegenerateDomain: return "DegenerateDomain";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NotHecke: return "NotHecke";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::ZeroQ: return "ZeroQ";
    case ErrorCode::NonIntegerTrace: return "NonIntegerTrace";
    case ErrorCode::DimensionIdentityFailure: return "DimensionIdentityFailure";
    case ErrorCode::CharacterCrosscheckFailure: return "CharacterCrosscheckFailure";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Matrix::Matrix(std::size_t side, std::vector<Complex> entries) : side_(side), a_(std::move(entries)) {
  if (a_.size() != side * side) {
    throw Error(ErrorCode::DimensionMismatch, "entry count " + std::to_string(a_.size()) +
                                                  " does not match side " + std::to_string(side));
  }
}

Matrix Matrix::identity(std::size_t side) {
  Matrix m(side);
  for (std::size_t i = 0; i < side; ++i) m(i, i) = 1.0;
  return m;
}

static void require_same_side(const Matrix& a, const Matrix& b) {
  if (a.side() != b.side()) {
    throw Error(ErrorCode::DimensionMismatch,
                "side " + std::to_string(a.side()) + " vs " + std::to_string(b.side()));
  }
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_side(*this, o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_side(*this, o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Complex s, Matrix a) { return a *= s; }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_side(a, b);
  const std::size_t n = a.side();
  const Complex zero{};
  Matrix c(n);

  std::size_t nnz_b = 0;
  for (const auto& x : b.data()) nnz_b += (x != zero);

  if (4 * nnz_b < n * n) {
    std::vector<std::size_t> start(n + 1, 0), col;
    std::vector<Complex> val;
    col.reserve(nnz_b);
    val.reserve(nnz_b);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (b(k, j) != zero) {
          col.push_back(j);
          val.push_back(b(k, j));
        }
      }
      start[k + 1] = col.size();
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex* ci = &c(i, 0);
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == zero) continue;
        for (std::size_t t = start[k]; t < start[k + 1]; ++t) ci[col[t]] += aik * val[t];
      }
    }
    return c;
  }

  for (std::size_t i = 0; i < n; ++i) {
    Complex* ci = &c(i, 0);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == zero) continue;
      const Complex* bk = &b(k, 0);
      for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b, std::size_t max_side) {
  const std::size_t na = a.side(), nb = b.side(), n = na * nb;
  if (n > max_side) {
    throw Error(ErrorCode::SizeOverflow,
                "kron side " + std::to_string(n) + " exceeds " + std::to_string(max_side));
  }
  Matrix c(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return c;
}

Matrix transpose(const Matrix& m) {
  const std::size_t n = m.side();
  Matrix t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(j, i) = m(i, j);
  return t;
}

Matrix permute(const Matrix& m, const std::vector<std::size_t>& perm) {
  const std::size_t n = m.side();
  if (perm.size() != n) throw Error(ErrorCode::DimensionMismatch, "permutation length");
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(perm[i], perm[j]) = m(i, j);
  return out;
}

Complex trace(const Matrix& m) {
  Complex t{};
  for (std::size_t i = 0; i < m.side(); ++i) t += m(i, i);
  return t;
}

double max_abs(const Matrix& m) {
  double r = 0.0;
  for (const auto& x : m.data()) r = std::max(r, std::abs(x));
  return r;
}

bool all_finite(const Matrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Complex& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

int rank(const Matrix& m, double tol) {
  const std::size_t n = m.side();
  const double big = max_abs(m);
  if (big == 0.0) return 0;
  const double thresh = tol * big;
  Matrix w = m;
  int r = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    for (std::size_t i = row + 1; i < n; ++i)
      if (std::abs(w(i, col)) > std::abs(w(piv, col))) piv = i;
    if (std::abs(w(piv, col)) <= thresh) continue;
    if (piv != row)
      for (std::size_t j = 0; j < n; ++j) std::swap(w(piv, j), w(row, j));
    for (std::size_t i = row + 1; i < n; ++i) {
      const Complex f = w(i, col) / w(row, col);
      if (f == Complex{}) continue;
      for (std::size_t j = col; j < n; ++j) w(i, j) -= f * w(row, j);
    }
    ++row;
    ++r;
  }
  return r;
}

std::vector<Complex> solve(std::vector<Complex> a, std::vector<Complex> b, std::size_t n) {
  if (a.size() != n * n || b.size() != n) throw Error(ErrorCode::DimensionMismatch, "solve shape");
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * n + j]; };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(at(i, col)) > std::abs(at(piv, col))) piv = i;
    if (at(piv, col) == Complex{}) throw Error(ErrorCode::SingularSystem, "singular linear system");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(col, j));
      std::swap(b[piv], b[col]);
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      const Complex f = at(i, col) / at(col, col);
      for (std::size_t j = col; j < n; ++j) at(i, j) -= f * at(col, j);
      b[i] -= f * b[col];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= at(i, j) * x[j];
    x[i] = s / at(i, i);
  }
  return x;
}

namespace {

struct Certificate {
  double residual;
  double scale;
};

Certificate min_poly_certificate(const Matrix& m, const std::vector<Complex>& cands,
                                 const std::vector<int>& exps) {
  const std::size_t n = m.side();
  Matrix prod = Matrix::identity(n);
  double scale = 1.0;
  for (std::size_t c = 0; c < cands.size(); ++c) {
    Matrix shifted = m - cands[c] * Matrix::identity(n);
    const double s = std::max(1.0, max_abs(shifted));
    for (int e = 0; e < exps[c]; ++e) {
      prod = mat_mul(prod, shifted);
      scale *= s;
    }
  }
  return {max_abs(prod), scale};
}

}  // namespace

SpectrumReport multiplicities_from_traces(const Matrix& m, const std::vector<Complex>& candidates,
                                          double tol, double tol_int) {
  const std::size_t n = m.side();
  const std::size_t k = candidates.size();
  if (k == 0) throw Error(ErrorCode::MinimalPolynomialMismatch, "empty candidate set");
  if (tol_int < 0) tol_int = 1e-6 * static_cast<double>(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (std::abs(candidates[i] - candidates[j]) <= tol) {
        throw Error(ErrorCode::CandidatesNotDistinct, "candidates " + std::to_string(i) + " and " +
                                                          std::to_string(j) + " coincide");
      }

  SpectrumReport rep;
  std::vector<int> exps(k, 1);
  Certificate cert = min_poly_certificate(m, candidates, exps);
  const bool squarefree_ok = cert.residual <= tol * cert.scale;

  std::vector<Complex> vand(k * k), traces(k);
  Matrix power = Matrix::identity(n);
  for (std::size_t p = 0; p < k; ++p) {
    traces[p] = trace(power);
    for (std::size_t c = 0; c < k; ++c) vand[p * k + c] = std::pow(candidates[c], static_cast<int>(p));
    if (p + 1 < k) power = mat_mul(power, m);
  }
  rep.solved = solve(vand, traces, k);

  std::vector<int> mult(k);
  bool integral = true;
  long total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const double r = std::round(rep.solved[c].real());
    if (std::abs(rep.solved[c] - Complex(r, 0.0)) > tol_int || r < 0) integral = false;
    mult[c] = static_cast<int>(r);
    total += mult[c];
  }
  if (!integral || total != static_cast<long>(n)) {
    if (!squarefree_ok) {
      throw Error(ErrorCode::MinimalPolynomialMismatch,
                  "candidate spectrum does not annihilate the matrix (residual " +
                      std::to_string(cert.residual / cert.scale) + " relative)");
    }
    throw Error(ErrorCode::NonIntegerMultiplicity, "Vandermonde solution is not a nonnegative "
                                                   "integer vector summing to the side");
  }

  if (!squarefree_ok) {
    // Non-semisimple: raise exponents in order of total degree, each bounded
    // by the algebraic multiplicity, until the product vanishes.
    std::vector<int> bound(k);
    for (std::size_t c = 0; c < k; ++c) bound[c] = std::max(1, mult[c]);
    const int max_extra = std::accumulate(bound.begin(), bound.end(), 0) - static_cast<int>(k);
    bool found = false;
    int tried = 0;
    for (int extra = 1; extra <= max_extra && !found && tried < 4096; ++extra) {
      std::vector<int> e(k, 1);
      // enumerate compositions of `extra` into k parts within bounds
      std::vector<int> add(k, 0);
      auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
        if (found || tried >= 4096) return;
        if (idx + 1 == k) {
          if (1 + left > bound[idx]) return;
          add[idx] = left;
          for (std::size_t c = 0; c < k; ++c) e[c] = 1 + add[c];
          ++tried;
          Certificate cc = min_poly_certificate(m, candidates, e);
          if (cc.residual <= tol * cc.scale) {
            found = true;
            exps = e;
            cert = cc;
          }
          return;
        }
        for (int a = 0; a <= left && 1 + a <= bound[idx]; ++a) {
          add[idx] = a;
          self(self, idx + 1, left - a);
          if (found) return;
        }
      };
      rec(rec, 0, extra);
    }
    if (!found) {
      throw Error(ErrorCode::MinimalPolynomialMismatch,
                  "no minimal polynomial over the candidate set annihilates the matrix");
    }
    rep.semisimple = false;
  }

  rep.residual = cert.residual;
  rep.scale = cert.scale;
  for (std::size_t c = 0; c < k; ++c) rep.entries.push_back({candidates[c], mult[c], exps[c]});
  return rep;
}

}  // namespace ybeacc
