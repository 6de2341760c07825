#include <gtest/gtest.h>

#include <random>

#include "latk/matrix.hpp"
#include "latk/normal_forms.hpp"
#include "oracles.hpp"

using namespace latk;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long long bound) {
  std::uniform_int_distribution<long long> dist(-bound, bound);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

bool is_diagonal(const IntegerMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST(Determinant, MatchesLaplaceExpansion) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 5;
    IntegerMatrix m = random_matrix(rng, n, n, 9);
    EXPECT_EQ(determinant(m).str(), std::to_string(static_cast<long long>(oracle::det(oracle::to_mat(m)))));
    IntegerMatrix adj = adjugate(m);
    EXPECT_EQ(adj * m, [&] {
      IntegerMatrix d(n, n);
      for (std::size_t i = 0; i < n; ++i) d(i, i) = determinant(m);
      return d;
    }());
  }
}

TEST(Rank, MatchesMinorOracle) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
    IntegerMatrix m = random_matrix(rng, r, c, 2);
    if (t % 3 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Integer(2) - m(r - 2, j);
    }
    EXPECT_EQ(rank(m), oracle::rank(oracle::to_mat(m), c));
  }
}

TEST(SmithForm, FactorsAndDivisibility) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
    IntegerMatrix a = random_matrix(rng, r, c, 6);
    SmithForm f = smith_normal_form(a);
    EXPECT_EQ(f.U * a * f.V, f.S);
    EXPECT_TRUE(is_diagonal(f.S));
    EXPECT_EQ(abs(determinant(f.U)), Integer(1));
    EXPECT_EQ(abs(determinant(f.V)), Integer(1));
    const std::size_t rk = oracle::rank(oracle::to_mat(a), c);
    EXPECT_EQ(f.rank, rk);
    for (std::size_t i = 0; i + 1 < f.diag.size(); ++i) {
      if (f.diag[i + 1].is_zero()) continue;
      EXPECT_TRUE((f.diag[i + 1] % f.diag[i]).is_zero());
    }
    // the product of the first k invariant factors is the gcd of the k x k minors
    if (rk == std::min(r, c) && rk > 0) {
      Integer prod = 1;
      for (std::size_t i = 0; i < rk; ++i) prod *= f.diag[i];
      oracle::Mat rows = oracle::to_mat(r >= c ? a : a.transpose());
      EXPECT_EQ(prod.to_int64(), oracle::maximal_minor_gcd(rows, rk));
    }
  }
}

TEST(HermiteForm, EchelonAndReduced) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 4;
    IntegerMatrix a = random_matrix(rng, r, c, 5);
    HermiteForm h = hermite_normal_form(a);
    EXPECT_EQ(h.U * a, h.H);
    EXPECT_EQ(abs(determinant(h.U)), Integer(1));
    EXPECT_EQ(h.rank, oracle::rank(oracle::to_mat(a), c));
    for (std::size_t i = 0; i < h.rank; ++i) {
      std::size_t p = h.pivot_cols[i];
      EXPECT_GT(h.H(i, p), Integer(0));
      for (std::size_t j = 0; j < p; ++j) EXPECT_TRUE(h.H(i, j).is_zero());
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(h.H(k, p), Integer(0));
        EXPECT_LT(h.H(k, p), h.H(i, p));
      }
    }
    for (std::size_t i = h.rank; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) EXPECT_TRUE(h.H(i, j).is_zero());
  }
}

TEST(Kernel, SaturatedAndComplete) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + t % 2, c = 3;
    IntegerMatrix a = random_matrix(rng, r, c, 4);
    IntegerMatrix k = kernel_basis(a);
    const std::size_t rk = oracle::rank(oracle::to_mat(a), c);
    EXPECT_EQ(k.rows(), c - rk);
    for (std::size_t i = 0; i < k.rows(); ++i) EXPECT_TRUE(is_zero(a * k.row(i)));
    oracle::Mat basis = oracle::to_mat(k), am = oracle::to_mat(a);
    for (long long x = -4; x <= 4; ++x)
      for (long long y = -4; y <= 4; ++y)
        for (long long z = -4; z <= 4; ++z) {
          oracle::Vec v{x, y, z};
          bool in_kernel = true;
          for (const auto& row : am)
            if (oracle::dot(row, v) != 0) in_kernel = false;
          if (in_kernel) EXPECT_TRUE(oracle::in_integer_span(basis, v));
        }
  }
}

TEST(Diophantine, MatchesBoxEnumeration) {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<long long> coef(-3, 3), rhs(-4, 4), mod(2, 4);
  int solvable = 0, unsolvable = 0;
  for (int t = 0; t < 120; ++t) {
    const std::size_t d = 2 + t % 2;
    const std::size_t neq = t % 2, ncong = 1 + (t / 2) % 2;
    IntegerMatrix b(0, d), c(0, d);
    IntegerVector bv, cv, moduli;
    for (std::size_t i = 0; i < neq; ++i) {
      IntegerVector row;
      for (std::size_t j = 0; j < d; ++j) row.push_back(coef(rng));
      b.append_row(row);
      bv.push_back(rhs(rng));
    }
    for (std::size_t i = 0; i < ncong; ++i) {
      IntegerVector row;
      for (std::size_t j = 0; j < d; ++j) row.push_back(coef(rng));
      c.append_row(row);
      cv.push_back(rhs(rng));
      moduli.push_back(mod(rng));
    }
    auto sol = solve_diophantine(d, b, bv, c, cv, moduli);
    oracle::Mat bm = oracle::to_mat(b), cm = oracle::to_mat(c);
    oracle::Mat basis = sol ? oracle::to_mat(sol->lattice) : oracle::Mat{};
    std::vector<long long> pt(d, -5);
    bool any = false;
    for (;;) {
      bool ok = true;
      for (std::size_t i = 0; i < neq; ++i) ok = ok && oracle::dot(bm[i], pt) == bv[i].to_int64();
      for (std::size_t i = 0; i < ncong; ++i) {
        long long m = moduli[i].to_int64();
        ok = ok && (((oracle::dot(cm[i], pt) - cv[i].to_int64()) % m) + m) % m == 0;
      }
      any = any || ok;
      if (sol) {
        oracle::Vec diff(d);
        for (std::size_t j = 0; j < d; ++j) diff[j] = pt[j] - sol->particular[j].to_int64();
        EXPECT_EQ(ok, oracle::in_integer_span(basis, diff));
      } else {
        EXPECT_FALSE(ok);
      }
      std::size_t j = 0;
      while (j < d && pt[j] == 5) pt[j++] = -5;
      if (j == d) break;
      ++pt[j];
    }
    (sol ? solvable : unsolvable)++;
  }
  EXPECT_GT(solvable, 0);
  EXPECT_GT(unsolvable, 0);
}

TEST(SublatticeSplit, ProjectsAlongSubspace) {
  IntegerMatrix w{{1, -2}};
  SublatticeSplit s = split_sublattice(w, 2);
  EXPECT_EQ(s.sub_rank, 1u);
  EXPECT_TRUE(is_zero(s.project(std::vector<Integer>{1, -2})));
  IntegerVector p = s.project(std::vector<Integer>{0, 1});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(abs(p[0]), Integer(1));
  IntegerVector lifted = p * s.section;
  EXPECT_EQ(s.project(lifted), p);
}

TEST(SolveLeftRational, ConsistentAndInconsistent) {
  IntegerMatrix m{{1, 2}, {3, 4}};
  std::vector<Rational> x;
  ASSERT_TRUE(solve_left_rational(m, std::vector<Integer>{5, 6}, x));
  EXPECT_EQ(x[0] * Rational(1) + x[1] * Rational(3), Rational(5));
  EXPECT_EQ(x[0] * Rational(2) + x[1] * Rational(4), Rational(6));
  IntegerMatrix sing{{1, 2}, {2, 4}};
  EXPECT_FALSE(solve_left_rational(sing, std::vector<Integer>{1, 1}, x));
}
