#include <gtest/gtest.h>

#include "steiner/forms.hpp"
#include "steiner/nullspace.hpp"

namespace steiner {
namespace {

TEST(NumericSearch, FindsOddOrderNullvector) {
  SearchOptions opt;
  opt.seed = 1;
  opt.restarts = 6;
  const auto cands = numeric_search(path_tree(3), 3, opt);
  ASSERT_EQ(cands.size(), 6U);
  EXPECT_LE(cands.front().residual, 1e-10);
  for (std::size_t i = 1; i < cands.size(); ++i) EXPECT_LE(cands[i - 1].residual, cands[i].residual);
  Real norm = 0;
  for (const auto& z : cands.front().point) norm += boost::multiprecision::norm(z);
  EXPECT_LT(abs(static_cast<double>(norm) - 1.0), 1e-20);
  // The best point is a nullvector, so s and g vanish there too.
  EXPECT_LT(sg_residual(path_tree(3), cands.front().point), 1e-8);
}

TEST(NumericSearch, OrderTwoHasNoNullvector) {
  SearchOptions opt;
  opt.seed = 2;
  opt.restarts = 5;
  const auto cands = numeric_search(path_tree(3), 2, opt);
  ASSERT_FALSE(cands.empty());
  EXPECT_GT(cands.front().residual, 1e-3);
}

TEST(NumericSearch, EmptyAndDeterministic) {
  SearchOptions opt;
  opt.restarts = 0;
  EXPECT_TRUE(numeric_search(path_tree(3), 3, opt).empty());

  opt.seed = 9;
  opt.restarts = 3;
  const auto a = numeric_search(random_tree(4, 1), 4, opt);
  const auto b = numeric_search(random_tree(4, 1), 4, opt);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].restart, b[i].restart);
    EXPECT_EQ(a[i].residual, b[i].residual);
  }
}

TEST(NumericSearch, ResidualMatchesGradient) {
  SearchOptions opt;
  opt.seed = 3;
  opt.restarts = 2;
  const Tree t = random_tree(4, 8);
  for (const auto& c : numeric_search(t, 4, opt)) {
    double worst = 0;
    for (const auto& g : gradient_direct(t, 4, std::span<const CFloat>(c.point))) worst = std::max(worst, magnitude(g));
    EXPECT_NEAR(c.residual, worst, 1e-12 + 1e-9 * worst);
  }
}

}  // namespace
}  // namespace steiner
