#include <gtest/gtest.h>

#include <random>
#include <set>

#include "latk/simplicial.hpp"
#include "oracles.hpp"

using namespace latk;

namespace {

oracle::Mat random_basis(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<long long> dist(-5, 5);
  for (;;) {
    oracle::Mat m(d, oracle::Vec(d));
    for (auto& r : m)
      for (auto& x : r) x = dist(rng);
    if (oracle::det(m) != 0) return m;
  }
}

}  // namespace

TEST(Parallelotope, OnePointPerResidueClass) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + t % 2;
    oracle::Mat rows = random_basis(rng, d);
    std::vector<bool> excluded(d);
    for (std::size_t i = 0; i < d; ++i) excluded[i] = (t >> i) & 1;
    auto points = parallelotope_points(oracle::to_matrix(rows, d), excluded);
    long long det = static_cast<long long>(oracle::det(rows));
    det = det < 0 ? -det : det;
    ASSERT_EQ(static_cast<long long>(points.size()), det);
    std::set<oracle::Vec> seen;
    for (const auto& p : points) {
      long long den = 0;
      oracle::Vec lam = oracle::barycentric(rows, oracle::to_vec(p), den);
      EXPECT_EQ(den, det);
      for (std::size_t i = 0; i < d; ++i) {
        if (excluded[i]) {
          EXPECT_GT(lam[i], 0);
          EXPECT_LE(lam[i], den);
        } else {
          EXPECT_GE(lam[i], 0);
          EXPECT_LT(lam[i], den);
        }
      }
      oracle::Vec key;
      for (auto v : lam) key.push_back(((v % den) + den) % den);
      EXPECT_TRUE(seen.insert(key).second) << "two points in one residue class";
    }
  }
}

TEST(Parallelotope, TwoDimensionalDeterminantFive) {
  auto points = parallelotope_points(IntegerMatrix{{2, 1}, {1, 3}}, {});
  std::set<oracle::Vec> got;
  for (const auto& p : points) got.insert(oracle::to_vec(p));
  EXPECT_EQ(got, (std::set<oracle::Vec>{{0, 0}, {1, 1}, {1, 2}, {2, 2}, {2, 3}}));
}

TEST(LocalCandidates, ContainIrreduciblesOfSimplicialCone) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 40; ++t) {
    oracle::Mat rows = oracle::random_generators(rng, 2, 2);
    IntegerMatrix m = oracle::to_matrix(rows, 2);
    auto points = parallelotope_points(m, {});
    auto cand = local_candidates(points, m);
    std::set<oracle::Vec> got;
    for (const auto& c : cand) got.insert(oracle::to_vec(c));
    oracle::Mat f = oracle::facets(rows, 2);
    oracle::Mat all;
    const long long top = rows[0][0] + rows[1][0];
    for (long long k = 1; k <= top; ++k)
      for (const auto& x : oracle::slice_points(f, 2, k, 7 * k)) all.push_back(x);
    for (const auto& h : oracle::irreducibles(all, f)) EXPECT_TRUE(got.count(h)) << "missing irreducible";
    for (const auto& c : got) EXPECT_TRUE(oracle::in_cone(f, c));
  }
}

TEST(StanleyComponents, OffsetsAndRays) {
  SimplicialCone s{{0, 1}, Integer(5), {false, true}};
  std::vector<IntegerVector> points{{1, 1}, {1, 2}};
  auto comps = stanley_components(s, points);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].offset, points[0]);
  EXPECT_EQ(comps[0].rays, (std::vector<std::size_t>{0, 1}));
}
