#include "ybeacc/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace ybeacc {

double tower_scale(const Matrix& rcheck) {
  const double s = std::max(1.0, max_abs(rcheck));
  return s * s * s;
}

HeckeData hecke_extract(const Matrix& rcheck, double tol) {
  if (rcheck.side() != 9) throw Error(ErrorCode::DimensionMismatch, "expected a 9x9 matrix");
  const Matrix id = Matrix::identity(9);
  const Matrix shifted = rcheck - id;
  if (max_abs(shifted) <= tol * std::max(1.0, max_abs(rcheck))) {
    throw Error(ErrorCode::DegenerateSpectrum, "matrix is the identity; no second eigenvalue");
  }
  const Complex tr = trace(rcheck);
  std::optional<HeckeData> best;
  for (int k = 1; k <= 8; ++k) {
    const Complex l2 = (tr - static_cast<double>(9 - k)) / static_cast<double>(k);
    if (std::abs(l2 - 1.0) <= tol) continue;
    const Matrix other = rcheck - l2 * id;
    const double res = max_abs(mat_mul(shifted, other));
    const double scale = std::max(1.0, max_abs(shifted)) * std::max(1.0, max_abs(other));
    if (res <= tol * scale && (!best || res / scale < best->residual / best->scale)) {
      HeckeData h;
      h.lambda2 = l2;
      h.multiplicity = k;
      h.q = -l2;
      h.alpha = std::sqrt(h.q);
      h.residual = res;
      h.scale = scale;
      best = h;
    }
  }
  if (!best) {
    throw Error(ErrorCode::NotHecke, "no two-eigenvalue spectrum {1, lambda2} annihilates the matrix");
  }
  return *best;
}

namespace {

std::vector<Matrix> generators(const Matrix& rcheck, int n) {
  std::vector<Matrix> r;
  for (int i = 1; i < n; ++i) r.push_back(braid_embed(rcheck, n, i));
  return r;
}

}  // namespace

double tl_projector_residual(const Matrix& rcheck, int n) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "antisymmetrizer needs n >= 3");
  const auto r = generators(rcheck, n);
  const std::size_t side = r[0].side();
  const Matrix id = Matrix::identity(side);
  double worst = 0.0;
  for (int i = 0; i + 1 < n - 1; ++i) {
    const Matrix& a = r[i];
    const Matrix& b = r[i + 1];
    const Matrix ab = mat_mul(a, b);
    Matrix e = id - a - b + ab + mat_mul(b, a) - mat_mul(ab, a);
    worst = std::max(worst, max_abs(e));
  }
  return worst;
}

TlRescaleResiduals tl_rescale_residuals(const Matrix& rcheck, Complex q, Complex alpha) {
  const auto r = generators(rcheck, 3);
  const Matrix id = Matrix::identity(27);
  const Matrix u1 = (1.0 / alpha) * (r[0] - id);
  const Matrix u2 = (1.0 / alpha) * (r[1] - id);
  TlRescaleResiduals out;
  out.braid_like = std::max(max_abs(mat_mul(mat_mul(u1, u2), u1) - u1),
                            max_abs(mat_mul(mat_mul(u2, u1), u2) - u2));
  out.quadratic = std::max(max_abs(alpha * mat_mul(u1, u1) + (1.0 + q) * u1),
                           max_abs(alpha * mat_mul(u2, u2) + (1.0 + q) * u2));
  const double s = std::max(1.0, max_abs(u1));
  out.scale = s * s * s * std::max(1.0, std::abs(alpha));
  return out;
}

RankOneFactor rank_one_factor(const Matrix& rcheck, double tol) {
  const Matrix m = rcheck - Matrix::identity(rcheck.side());
  const int rk = rank(m, tol);
  if (rk != 1) throw Error(ErrorCode::RankMismatch, "rank(R - 1) is " + std::to_string(rk) + ", not 1");
  const std::size_t n = m.side();
  std::size_t jmax = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(m(i, j)) > best) {
        best = std::abs(m(i, j));
        jmax = j;
      }
  // Pivot row: first nonzero of the column in grlex scan order.
  static const std::size_t grlex_scan[9] = {0, 1, 3, 2, 4, 6, 5, 7, 8};
  std::size_t i0 = n;
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t i = n == 9 ? grlex_scan[g] : g;
    if (std::abs(m(i, jmax)) > tol * best) {
      i0 = i;
      break;
    }
  }
  RankOneFactor f;
  f.u.resize(n);
  f.v.resize(n);
  const Complex piv = m(i0, jmax);
  for (std::size_t i = 0; i < n; ++i) f.u[i] = m(i, jmax) / piv;
  for (std::size_t j = 0; j < n; ++j) f.v[j] = m(i0, j);
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) err = std::max(err, std::abs(m(i, j) - f.u[i] * f.v[j]));
  f.residual = err / best;
  return f;
}

Complex loop_parameter(const Matrix& rcheck, double tol) {
  const RankOneFactor f = rank_one_factor(rcheck, tol);
  Complex s{};
  for (std::size_t k = 0; k < f.u.size(); ++k) s += f.v[k] * f.u[k];
  return s;
}

namespace {

void require_q(Complex q) {
  if (std::abs(q) < 1e-12) throw Error(ErrorCode::ZeroQ, "q must be nonzero");
}

// Calls visit(n, e'_n) for n = 2..n_max, each level built from the previous.
void symmetrizer_levels(const Matrix& rcheck, int n_max, Complex q,
                        const std::function<void(int, const Matrix&)>& visit) {
  require_q(q);
  const Complex qi = 1.0 / q;
  const Matrix i3 = Matrix::identity(3);
  Matrix e = i3;
  for (int n = 2; n <= n_max; ++n) {
    std::size_t side = 1;
    for (int k = 0; k < n; ++k) side *= 3;
    const Matrix id = Matrix::identity(side);
    // coset sum I + q⁻¹R_{n−1}(I + q⁻¹R_{n−2}(… (I + q⁻¹R_1)))
    Matrix c = id;
    for (int i = 1; i <= n - 1; ++i) {
      c = id + qi * mat_mul(braid_embed(rcheck, n, i), c);
    }
    e = mat_mul(kron(e, i3), c);
    visit(n, e);
  }
}

}  // namespace

Matrix q_symmetrizer(const Matrix& rcheck, int n, Complex q) {
  if (n < 2 || n > kDefaultMaxLevel) throw Error(ErrorCode::SizeOverflow, "level outside [2, 6]");
  Matrix out;
  symmetrizer_levels(rcheck, n, q, [&](int k, const Matrix& e) {
    if (k == n) out = e;
  });
  return out;
}

Complex q_symmetrizer_scalar(int n, Complex q) {
  require_q(q);
  const Complex qi = 1.0 / q;
  Complex e = 1.0;
  for (int k = 2; k <= n; ++k) {
    Complex c = 1.0;
    for (int i = 1; i <= k - 1; ++i) c = 1.0 + qi * c;
    e *= c;
  }
  return e;
}

long long syt_count(const std::vector<int>& lambda) {
  int n = 0;
  for (int part : lambda) {
    if (part < 0) throw Error(ErrorCode::InvalidInput, "negative part");
    n += part;
  }
  for (std::size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i] > lambda[i - 1]) throw Error(ErrorCode::InvalidInput, "parts must be non-increasing");
  // n! / prod(hooks), accumulated as a ratio of exact integers
  long double num = 1.0L;
  for (int k = 2; k <= n; ++k) num *= k;
  long double den = 1.0L;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < lambda.size(); ++k) below += lambda[k] > j;
      den *= static_cast<long double>(lambda[i] - j - 1 + below + 1);
    }
  return std::llround(num / den);
}

SytSplit syt_split(const std::vector<int>& lambda) {
  SytSplit s;
  int n = 0;
  for (int part : lambda) n += part;
  std::vector<int> filled(lambda.size(), 0);
  int where2_row = -1, where2_col = -1;
  std::function<void(int)> fill = [&](int k) {
    if (k > n) {
      ++s.total;
      if (n >= 2) {
        if (where2_row == 0 && where2_col == 1) ++s.same_row;
        if (where2_row == 1 && where2_col == 0) ++s.same_column;
      }
      return;
    }
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      if (filled[r] >= lambda[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      if (k == 2) {
        where2_row = static_cast<int>(r);
        where2_col = filled[r];
      }
      ++filled[r];
      fill(k + 1);
      --filled[r];
    }
  };
  fill(1);
  return s;
}

MultiplicityTable multiplicity_table(const Matrix& rcheck, int n_max, double tol) {
  if (n_max < 2 || n_max > kDefaultMaxLevel) throw Error(ErrorCode::SizeOverflow, "n_max outside [2, 6]");
  const HeckeData h = hecke_extract(rcheck, tol);
  MultiplicityTable t;
  t.lambda2 = h.lambda2;
  t.levels[0][{0, 0}] = 1;
  t.levels[1][{1, 0}] = 3;
  const Complex tr1 = trace(rcheck);

  symmetrizer_levels(rcheck, n_max, h.q, [&](int n, const Matrix& e) {
    LevelDiagnostics d;
    d.n = n;
    d.symmetrizer_trace = trace(e);
    d.symmetrizer_scalar = q_symmetrizer_scalar(n, h.q);
    const double side = std::pow(3.0, n);
    const Complex ratio = d.symmetrizer_trace / d.symmetrizer_scalar;
    const double rounded = std::round(ratio.real());
    d.integer_residual = std::abs(ratio - Complex(rounded, 0.0));
    if (d.integer_residual > 1e-6 * side || rounded < 0) {
      throw Error(ErrorCode::NonIntegerTrace, "level " + std::to_string(n) +
                                                  ": symmetrizer trace ratio is not an integer");
    }
    auto& level = t.levels[n];
    level[{n, 0}] = static_cast<long long>(rounded);
    for (const auto& [part, m] : t.levels[n - 2]) {
      const Partition2 up{part.first + 1, part.second + 1};
      level[up] = m;
    }

    long long dim = 0;
    Complex chi{};
    for (const auto& [part, m] : level) {
      std::vector<int> lam{part.first};
      if (part.second > 0) lam.push_back(part.second);
      const SytSplit s = syt_split(lam);
      dim += m * s.total;
      chi += static_cast<double>(m) * (static_cast<double>(s.same_row) +
                                       static_cast<double>(s.same_column) * h.lambda2);
    }
    d.dimension_sum = dim;
    if (dim != std::llround(side)) {
      throw Error(ErrorCode::DimensionIdentityFailure,
                  "level " + std::to_string(n) + ": sum m*f = " + std::to_string(dim));
    }
    const Complex t1 = tr1 * std::pow(3.0, n - 2);
    d.t1_residual = std::abs(t1 - chi);
    if (d.t1_residual > 1e-6 * side) {
      throw Error(ErrorCode::CharacterCrosscheckFailure,
                  "level " + std::to_string(n) + ": t1 trace disagrees with the characters");
    }

    if (n >= 3 && n <= 5) {
      // Unknowns m_(n), m_(n-1,1); rows are the dimension identity and t1 trace.
      Complex rhs_dim = side, rhs_t1 = t1;
      for (const auto& [part, m] : level) {
        if (part.second < 2) continue;
        const SytSplit s = syt_split({part.first, part.second});
        rhs_dim -= static_cast<double>(m * s.total);
        rhs_t1 -= static_cast<double>(m) * (static_cast<double>(s.same_row) +
                                            static_cast<double>(s.same_column) * h.lambda2);
      }
      const SytSplit hook = syt_split({n - 1, 1});
      const std::vector<Complex> a{1.0, static_cast<double>(hook.total), 1.0,
                                   static_cast<double>(hook.same_row) +
                                       static_cast<double>(hook.same_column) * h.lambda2};
      const auto x = solve(a, {rhs_dim, rhs_t1}, 2);
      d.direct_two_row = std::make_pair(x[0].real(), x[1].real());
      d.stability_consistent =
          std::abs(x[0] - static_cast<double>(level[{n, 0}])) <= 1e-6 * side &&
          std::abs(x[1] - static_cast<double>(level[{n - 1, 1}])) <= 1e-6 * side;
    }
    t.diagnostics.push_back(d);
  });
  return t;
}

}  // namespace ybeacc
