#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "test_util.hpp"
#include "ybeacc/catalog.hpp"
#include "ybeacc/hecke.hpp"

using namespace ybeacc;
using ybeacc::testing::Gen;
using ybeacc::testing::rel_diff;

namespace {

FamilyInstance case1(Complex a, Complex x1, Complex x3, Branch br = Branch::plus) {
  FamilyInstance inst;
  inst.id = FamilyId::Case1;
  inst.continuous = {{"a", a}, {"x1", x1}, {"x3", x3}};
  inst.branch = br;
  return inst;
}

Matrix rc_of(const FamilyInstance& inst) { return assemble_check_r(instantiate(inst)); }

// Standard tableaux by brute force over all fillings, as an oracle for the
// hook-length count.
long long count_tableaux(const std::vector<int>& lambda) {
  std::vector<int> filled(lambda.size(), 0);
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  std::function<long long(int)> go = [&](int k) -> long long {
    if (k > n) return 1;
    long long total = 0;
    for (std::size_t r = 0; r < lambda.size(); ++r)
      if (filled[r] < lambda[r] && (r == 0 || filled[r - 1] > filled[r])) {
        ++filled[r];
        total += go(k + 1);
        --filled[r];
      }
    return total;
  };
  return go(1);
}

}  // namespace

TEST(Extract, IdentityIsDegenerate) {
  try {
    hecke_extract(Matrix::identity(9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateSpectrum);
  }
}

TEST(Extract, Case1Eigenvalue) {
  const FamilyInstance inst = case1(-1.0, 2.0, 3.0);
  const Complex b = case1_solve_b(-1.0, 2.0, 3.0, Branch::plus).b;
  const HeckeData h = hecke_extract(rc_of(inst));
  EXPECT_EQ(h.multiplicity, 1);
  EXPECT_LE(std::abs(h.lambda2 + (6.0 / b) * (6.0 / b)), 1e-12);
  EXPECT_LE(std::abs(h.q + h.lambda2), 0.0);
  EXPECT_LE(std::abs(h.alpha * h.alpha - h.q), 1e-14);
}

TEST(Extract, Case54bAndSwap) {
  FamilyInstance inst;
  inst.id = FamilyId::Case5_4_b;
  inst.continuous = {{"b", 2.0}, {"c", Complex(0.5, 1.0)}, {"x3", 1.5}};
  const HeckeData h = hecke_extract(rc_of(inst));
  EXPECT_EQ(h.multiplicity, 4);
  EXPECT_LE(std::abs(h.lambda2 + Complex(2.0) * Complex(0.5, 1.0)), 1e-12);
  const HeckeData p = hecke_extract(swap_operator());
  EXPECT_EQ(p.lambda2, Complex(-1.0));
  EXPECT_EQ(p.multiplicity, 3);
}

TEST(Extract, ThreeValueSpectrumIsNotHecke) {
  FamilyInstance inst;
  inst.id = FamilyId::Case6_2_2;
  inst.continuous = {{"c", 1.0}, {"x4", 1.0}};
  try {
    hecke_extract(rc_of(inst));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHecke);
  }
}

TEST(Extract, Case57SpecialPointIsHecke) {
  FamilyInstance inst;
  inst.id = FamilyId::Case5_7;
  inst.continuous = {{"b", 1.0}, {"x2", 1.0}, {"x3", 1.0}};
  inst.epsilon = -1;
  const HeckeData h = hecke_extract(rc_of(inst));
  EXPECT_LE(h.residual, 1e-12);
}

TEST(HeckeProperty, RelationOnDiagonalizableTwoValueFamilies) {
  const FamilyId ids[] = {FamilyId::Case1,       FamilyId::Case5_2_1,   FamilyId::Case5_2_2,
                          FamilyId::Case5_4_a,   FamilyId::Case5_4_b,   FamilyId::Case5_5_1_1,
                          FamilyId::Case5_5_1_2, FamilyId::FixtureP};
  for (FamilyId id : ids)
    for (std::uint64_t s = 0; s < 30; ++s) {
      const Matrix r = rc_of(random_instance(id, s));
      const HeckeData h = hecke_extract(r);
      const Matrix rel = mat_mul(r - Matrix::identity(9), r + h.q * Matrix::identity(9));
      EXPECT_LE(max_abs(rel), 1e-9 * h.scale) << to_string(id) << " seed " << s;
    }
}

TEST(TowerProperty, GeneratorTracesScaleWithLevel) {
  Gen g(61);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix r = assemble_check_r(g.params());
    for (int n = 2; n <= 5; ++n)
      for (int i = 1; i < n; ++i) {
        const Complex t = trace(braid_embed(r, n, i));
        const Complex want = std::pow(3.0, n - 2) * trace(r);
        EXPECT_LE(std::abs(t - want), 1e-12 * std::abs(want) + 1e-12);
      }
  }
}

TEST(Tower, Case1LevelThreeTrace) {
  const Matrix r = rc_of(case1(Complex(0.3, -0.7), 1.0, 2.0));
  const HeckeData h = hecke_extract(r);
  EXPECT_LE(std::abs(trace(braid_embed(r, 3, 2)) - (24.0 + 3.0 * h.lambda2)), 1e-12);
}

TEST(TemperleyLieb, Case1ProjectorVanishes) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Matrix r = rc_of(random_instance(FamilyId::Case1, s));
    for (int n : {3, 4, 5}) EXPECT_LE(tl_projector_residual(r, n), 1e-9 * tower_scale(r)) << n;
  }
}

TEST(TemperleyLieb, SwapProjectorDoesNotVanish) {
  EXPECT_GT(tl_projector_residual(swap_operator(), 3), 0.1);
}

TEST(TemperleyLieb, RescaledGeneratorsWithEitherRoot) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Matrix r = rc_of(random_instance(FamilyId::Case1, s));
    const HeckeData h = hecke_extract(r);
    for (Complex alpha : {h.alpha, -h.alpha}) {
      const TlRescaleResiduals t = tl_rescale_residuals(r, h.q, alpha);
      EXPECT_LE(t.braid_like, 1e-8 * t.scale);
      EXPECT_LE(t.quadratic, 1e-8 * t.scale);
    }
  }
}

TEST(RankOne, Case1Factor) {
  const Complex a(-1.0), x1(2.0), x3(3.0);
  const Complex b = case1_solve_b(a, x1, x3, Branch::plus).b;
  const Matrix r = rc_of(case1(a, x1, x3));
  const RankOneFactor f = rank_one_factor(r);
  const Complex v[9] = {0.0, 0.0, a - 1.0, 0.0, x1, 0.0, b, 0.0, 0.0};
  for (std::size_t k = 0; k < 9; ++k) EXPECT_LE(std::abs(f.v[k] - v[k]), 1e-12 * std::abs(b)) << k;
  EXPECT_EQ(f.u[2], Complex(1.0));
  EXPECT_LE(std::abs(f.u[4] - x3 / b), 1e-14);
  EXPECT_LE(f.residual, 1e-10);
  const HeckeData h = hecke_extract(r);
  EXPECT_LE(std::abs(loop_parameter(r) - (h.lambda2 - 1.0)), 1e-9);
}

TEST(RankOne, RankMismatch) {
  for (const Matrix& m : {Matrix::identity(9), swap_operator()}) {
    try {
      rank_one_factor(m);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
    }
  }
}

TEST(RankOneProperty, LoopParameterDependsOnlyOnA) {
  Gen g(62);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex a = g.complex(2) + 2.0;
    for (Branch br : {Branch::plus, Branch::minus}) {
      const Complex ref = loop_parameter(rc_of(case1(a, 1.0, 1.0, br)));
      for (int k = 0; k < 20; ++k) {
        const Complex d = loop_parameter(rc_of(case1(a, g.complex() + 1.5, g.complex() - 1.5, br)));
        EXPECT_LE(std::abs(d - ref), 1e-9);
      }
    }
  }
}

TEST(Symmetrizer, LevelThreeMatchesSixTermExpansion) {
  const Matrix r = rc_of(case1(Complex(-0.4, 0.9), 1.2, -0.7));
  const Complex q = hecke_extract(r).q;
  const Matrix r1 = braid_embed(r, 3, 1), r2 = braid_embed(r, 3, 2);
  const Matrix r12 = mat_mul(r1, r2), r21 = mat_mul(r2, r1);
  const Complex qi = 1.0 / q;
  const Matrix want = Matrix::identity(27) + qi * (r1 + r2) + (qi * qi) * (r12 + r21) +
                      (qi * qi * qi) * mat_mul(r12, r1);
  EXPECT_LT(rel_diff(q_symmetrizer(r, 3, q), want), 1e-12);
}

TEST(Symmetrizer, TrivialScalar) {
  for (Complex q : {Complex(2.0), Complex(0.3, 1.1), Complex(-1.5)}) {
    const Complex want = (1.0 + q) * (1.0 + q + q * q) / (q * q * q);
    EXPECT_LE(std::abs(q_symmetrizer_scalar(3, q) - want), 1e-13 * std::abs(want));
    // Poincaré polynomial of S_n in q^{-1}: product of quantum integers
    for (int n = 2; n <= 6; ++n) {
      Complex prod = 1.0;
      for (int k = 1; k <= n; ++k) {
        Complex s = 0.0;
        for (int j = 0; j < k; ++j) s += std::pow(1.0 / q, j);
        prod *= s;
      }
      EXPECT_LE(std::abs(q_symmetrizer_scalar(n, q) - prod), 1e-12 * std::abs(prod));
    }
  }
  EXPECT_THROW(q_symmetrizer_scalar(3, 0.0), Error);
  EXPECT_THROW(q_symmetrizer(swap_operator(), 3, 0.0), Error);
}

TEST(Symmetrizer, NormalizedTracesAtLevelsThreeAndFour) {
  const Matrix r = rc_of(case1(Complex(2.5), 0.8, 1.3, Branch::minus));
  const Complex q = hecke_extract(r).q;
  for (auto [n, want] : {std::pair{3, 21.0}, std::pair{4, 55.0}}) {
    const Complex ratio = trace(q_symmetrizer(r, n, q)) / q_symmetrizer_scalar(n, q);
    EXPECT_LE(std::abs(ratio - want), 1e-8) << n;
  }
}

TEST(Table, Case1ThroughLevelSix) {
  const Matrix r = rc_of(random_instance(FamilyId::Case1, 5));
  const MultiplicityTable t = multiplicity_table(r, 6);
  using L = std::map<Partition2, long long>;
  EXPECT_EQ(t.levels.at(2), (L{{{2, 0}, 8}, {{1, 1}, 1}}));
  EXPECT_EQ(t.levels.at(3), (L{{{3, 0}, 21}, {{2, 1}, 3}}));
  EXPECT_EQ(t.levels.at(4), (L{{{4, 0}, 55}, {{3, 1}, 8}, {{2, 2}, 1}}));
  EXPECT_EQ(t.levels.at(5), (L{{{5, 0}, 144}, {{4, 1}, 21}, {{3, 2}, 3}}));
  EXPECT_EQ(t.levels.at(6), (L{{{6, 0}, 377}, {{5, 1}, 55}, {{4, 2}, 8}, {{3, 3}, 1}}));
  for (const auto& d : t.diagnostics) {
    EXPECT_EQ(d.dimension_sum, static_cast<long long>(std::pow(3, d.n)));
    EXPECT_TRUE(d.stability_consistent);
    if (d.n >= 3 && d.n <= 5) {
      ASSERT_TRUE(d.direct_two_row.has_value());
      EXPECT_NEAR(d.direct_two_row->first, t.levels.at(d.n).at({d.n, 0}), 1e-6);
    }
  }
  // m_(n+1) = 3 m_(n) - m_(n-1) on the symmetric entries
  for (int n = 2; n < 6; ++n)
    EXPECT_EQ(t.levels.at(n + 1).at({n + 1, 0}),
              3 * t.levels.at(n).at({n, 0}) - t.levels.at(n - 1).at({n - 1, 0}));
}

TEST(TableProperty, IndependentOfInstance) {
  std::map<int, std::map<Partition2, long long>> ref;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const MultiplicityTable t = multiplicity_table(rc_of(random_instance(FamilyId::Case1, 100 + s)), 5);
    if (s == 0) ref = t.levels;
    EXPECT_EQ(t.levels, ref);
  }
}

TEST(Table, RejectsNonHecke) {
  EXPECT_THROW(multiplicity_table(Matrix::identity(9), 4), Error);
  EXPECT_THROW(multiplicity_table(swap_operator(), 7), Error);
}

TEST(Tableaux, Examples) {
  EXPECT_EQ(syt_count({5}), 1);
  EXPECT_EQ(syt_count({2, 1}), 2);
  EXPECT_EQ(syt_count({3, 2}), 5);
  EXPECT_EQ(syt_count({3, 3}), 5);
  const SytSplit s21 = syt_split({2, 1});
  EXPECT_EQ(s21.same_row, 1);
  EXPECT_EQ(s21.same_column, 1);
  const SytSplit s32 = syt_split({3, 2});
  EXPECT_EQ(s32.same_row, 3);
  EXPECT_EQ(s32.same_column, 2);
}

TEST(TableauxProperty, HookLengthMatchesEnumeration) {
  for (int n = 1; n <= 8; ++n)
    for (int r = 0; 2 * r <= n; ++r)
      for (int third = 0; third <= r; ++third) {
        std::vector<int> lam{n - r, r - third};
        if (third > 0) lam.push_back(third);
        if (lam[1] < lam.back() || lam[0] < lam[1]) continue;
        while (!lam.empty() && lam.back() == 0) lam.pop_back();
        const long long brute = count_tableaux(lam);
        EXPECT_EQ(syt_count(lam), brute);
        const SytSplit s = syt_split(lam);
        EXPECT_EQ(s.total, brute);
        if (n >= 2) EXPECT_EQ(s.same_row + s.same_column, brute);
      }
}
