#include <gtest/gtest.h>

#include "steiner/error.hpp"
#include "steiner/forms.hpp"
#include "steiner/smalldet.hpp"
#include "test_support.hpp"

namespace steiner {
namespace {

TEST(Cayley, Examples) {
  const Hypermatrix k2 = build_steiner(path_tree(2), 3);
  EXPECT_EQ(testing::cayley_by_discriminant(k2), -3);
  EXPECT_EQ(cayley_222(k2), -3);
  EXPECT_EQ(cayley_222(Hypermatrix::zeros(3, 2)), 0);
  EXPECT_EQ(cayley_222(zero_degenerate(k2)), 0);
}

TEST(Cayley, AgreesWithSliceDiscriminant) {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> e(8);
    for (auto& v : e) v = rng.between(-4, 4);
    const Hypermatrix h(3, 2, e);
    ASSERT_EQ(cayley_222(h), testing::cayley_by_discriminant(h));
  }
}

TEST(Cayley, InvariantUnderAxisPermutation) {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::int64_t> e(8);
    for (auto& v : e) v = rng.between(-3, 3);
    const Hypermatrix h(3, 2, e);
    Hypermatrix swapped = Hypermatrix::zeros(3, 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          const int src[] = {a, b, c};
          const int dst[] = {c, a, b};
          swapped.at(dst) = h.at(src);
        }
    EXPECT_EQ(cayley_222(swapped), cayley_222(h));
  }
}

TEST(Cayley, WrongShape) {
  for (const Hypermatrix& h : {Hypermatrix::zeros(2, 2), Hypermatrix::zeros(3, 3), Hypermatrix::zeros(4, 2)}) {
    try {
      cayley_222(h);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::WrongShape);
    }
  }
}

// 1 + zeta is itself a root of unity only for zeta a primitive cube root,
// where it has order 6. So the two-vertex argument goes through exactly when
// 6 does not divide k - 1.
TEST(K2NoNullvector, Range) {
  for (int k = 2; k <= 14; ++k) EXPECT_EQ(verify_k2_no_nullvector(k), (k - 1) % 6 != 0) << k;
  EXPECT_THROW(verify_k2_no_nullvector(1), Error);
}

TEST(K2NoNullvector, CubeRootNullvector) {
  for (int k : {7, 13}) {
    const std::vector<CycNum> y{CycNum::one(3), cyc_root_of_unity(3, 1)};
    for (const auto& c : gradient_direct(path_tree(2), k, y)) EXPECT_TRUE(c.is_zero()) << k;
    for (const auto& c : testing::gradient_by_tuples(build_steiner(path_tree(2), k), y)) EXPECT_TRUE(c.is_zero()) << k;
  }
  const std::vector<CycNum> y{CycNum::one(3), cyc_root_of_unity(3, 1)};
  bool all_zero = true;
  for (const auto& c : gradient_direct(path_tree(2), 5, y)) all_zero = all_zero && c.is_zero();
  EXPECT_FALSE(all_zero);
}

TEST(DetOrder2, Examples) {
  EXPECT_EQ(det_order2(path_tree(2)), -1);
  EXPECT_EQ(det_order2(path_tree(3)), 4);
  EXPECT_EQ(det_order2(random_tree(10, 5)), -2304);
  EXPECT_THROW(det_order2(path_tree(1)), Error);
}

}  // namespace
}  // namespace steiner
