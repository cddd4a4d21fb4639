#include <gtest/gtest.h>

#include "steiner/error.hpp"
#include "steiner/sparse_poly.hpp"
#include "test_support.hpp"

namespace steiner {
namespace {

using testing::random_rat;

SparsePoly x(int n, int i) { return SparsePoly::variable(n, i); }

SparsePoly random_poly(SplitMix64& rng, int n, int max_deg, int terms) {
  SparsePoly p(n);
  for (int t = 0; t < terms; ++t) {
    Exponent e(static_cast<std::size_t>(n));
    for (auto& a : e) a = static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    p.add_term(e, random_rat(rng));
  }
  return p;
}

TEST(SparsePoly, Basics) {
  const SparsePoly p = x(2, 0) * x(2, 1) * Rat(2);
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.coefficient({1, 1}), 2);
  EXPECT_EQ(SparsePoly(3).total_degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(SparsePoly::sum_of_variables(3), x(3, 0) + x(3, 1) + x(3, 2));
  EXPECT_FALSE((p + SparsePoly::constant(2, Rat(1))).is_homogeneous());
  EXPECT_THROW(x(2, 0) + x(3, 0), Error);
}

TEST(SparsePoly, GrlexOrder) {
  SparsePoly p = x(3, 2) + x(3, 0) * x(3, 0) + x(3, 0) * x(3, 1) + x(3, 1) * x(3, 1) * x(3, 2);
  std::vector<Exponent> order;
  for (const auto& [e, c] : p.terms()) order.push_back(e);
  EXPECT_EQ(order, (std::vector<Exponent>{{0, 2, 1}, {2, 0, 0}, {1, 1, 0}, {0, 0, 1}}));
}

TEST(Partial, Examples) {
  const SparsePoly two_x1x2 = Rat(2) * x(2, 0) * x(2, 1);
  EXPECT_EQ(partial(two_x1x2, 0), Rat(2) * x(2, 1));

  const SparsePoly p = Rat(3) * x(2, 0) * x(2, 0) * x(2, 1) + Rat(3) * x(2, 0) * x(2, 1) * x(2, 1);
  EXPECT_EQ(partial(p, 1), Rat(3) * x(2, 0) * x(2, 0) + Rat(6) * x(2, 0) * x(2, 1));

  EXPECT_TRUE(partial(x(3, 0) * x(3, 1), 2).is_zero());
}

TEST(SparsePoly, RingLaws) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const SparsePoly a = random_poly(rng, 3, 2, 4), b = random_poly(rng, 3, 2, 4), c = random_poly(rng, 3, 2, 4);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(partial(a * b, 1), partial(a, 1) * b + a * partial(b, 1));
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Evaluate, Examples) {
  const SparsePoly p = Rat(2) * x(2, 0) * x(2, 1);
  const CycNum pt[] = {CycNum::one(1), CycNum::rational(1, Rat(-1))};
  EXPECT_EQ(evaluate(p, pt), CycNum::rational(1, Rat(-2)));

  const CycNum i[] = {cyc_root_of_unity(4, 1)};
  EXPECT_EQ(evaluate(x(1, 0) * x(1, 0), i), CycNum::rational(4, Rat(-1)));

  const CycNum mixed[] = {CycNum::one(4), CycNum::one(3)};
  EXPECT_THROW(evaluate(p, mixed), Error);
}

TEST(Evaluate, HomomorphismAndHomogeneity) {
  SplitMix64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const SparsePoly a = random_poly(rng, 3, 2, 3), b = random_poly(rng, 3, 2, 3);
    std::vector<CycNum> pt;
    for (int v = 0; v < 3; ++v) pt.push_back(testing::random_cyc(rng, 8));
    EXPECT_EQ(evaluate(a * b, pt), evaluate(a, pt) * evaluate(b, pt));
    EXPECT_EQ(evaluate(a + b, pt), evaluate(a, pt) + evaluate(b, pt));

    SparsePoly h(3);
    h.add_term({2, 1, 0}, random_rat(rng));
    h.add_term({0, 1, 2}, random_rat(rng));
    h.add_term({1, 1, 1}, random_rat(rng));
    Rat lambda = random_rat(rng);
    if (lambda == 0) lambda = 2;
    std::vector<CycNum> scaled;
    for (const auto& c : pt) scaled.push_back(c * lambda);
    EXPECT_EQ(evaluate(h, scaled), evaluate(h, pt) * Rat(lambda * lambda * lambda));

    std::vector<CFloat> fpt;
    for (const auto& c : pt) fpt.push_back(cyc_embed(c));
    EXPECT_LT(magnitude(evaluate(a, fpt) - cyc_embed(evaluate(a, pt))), 1e-25);
  }
}

TEST(Substitute, MatchesEvaluation) {
  SplitMix64 rng(7);
  const SparsePoly p = random_poly(rng, 2, 3, 6);
  const SparsePoly q = p.substitute(1, Rat(3, 2));
  EXPECT_EQ(q.degree_in(1), q.is_zero() ? -1 : 0);
  const CycNum pt[] = {CycNum::rational(1, Rat(-5, 7)), CycNum::rational(1, Rat(3, 2))};
  EXPECT_EQ(evaluate(q, pt), evaluate(p, pt));
}

TEST(DivideByLinear, Examples) {
  const SparsePoly s = SparsePoly::sum_of_variables(2);
  const auto r = divide_by_linear(x(2, 0) * x(2, 0), s);
  ASSERT_TRUE(std::holds_alternative<NotDivisible>(r));
  EXPECT_EQ(std::get<NotDivisible>(r).remainder, x(2, 0) * x(2, 0));

  const auto z = divide_by_linear(SparsePoly(2), s);
  ASSERT_TRUE(std::holds_alternative<SparsePoly>(z));
  EXPECT_TRUE(std::get<SparsePoly>(z).is_zero());
}

TEST(DivideByLinear, RecoversProducts) {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    std::vector<Rat> coeffs(static_cast<std::size_t>(n));
    for (auto& c : coeffs) c = random_rat(rng);
    if (coeffs.back() == 0 && coeffs.front() == 0) coeffs.front() = 1;
    const SparsePoly s = SparsePoly::linear(n, coeffs);
    const SparsePoly q = random_poly(rng, n, 2, 5);
    const auto r = divide_by_linear(s * q, s);
    ASSERT_TRUE(std::holds_alternative<SparsePoly>(r));
    EXPECT_EQ(std::get<SparsePoly>(r), q);

    const SparsePoly off = s * q + SparsePoly::constant(n, Rat(1));
    const auto bad = divide_by_linear(off, s);
    ASSERT_TRUE(std::holds_alternative<NotDivisible>(bad));
    const auto& rem = std::get<NotDivisible>(bad).remainder;
    const auto rebuilt = divide_by_linear(off - rem, s);
    EXPECT_TRUE(std::holds_alternative<SparsePoly>(rebuilt));
  }
  EXPECT_THROW(divide_by_linear(x(2, 0), SparsePoly(2)), Error);
}

}  // namespace
}  // namespace steiner
