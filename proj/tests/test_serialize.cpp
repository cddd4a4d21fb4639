#include <gtest/gtest.h>

#include "steiner/error.hpp"
#include "steiner/forms.hpp"
#include "steiner/serialize.hpp"
#include "test_support.hpp"

namespace steiner {
namespace {

TEST(Serialize, RationalAndCyclotomicRoundTrip) {
  EXPECT_EQ(rat_to_json(make_rat(-6, 4)), Json::array({"-3", "2"}));
  EXPECT_EQ(rat_from_json(Json::array({"10", "-4"})), make_rat(-5, 2));
  EXPECT_THROW(rat_from_json(Json::array({"1", "0"})), Error);
  EXPECT_THROW(rat_from_json(Json::array({1, 2})), Error);

  SplitMix64 rng(51);
  for (unsigned m : {1U, 3U, 4U, 8U, 12U}) {
    const CycNum x = testing::random_cyc(rng, m);
    EXPECT_EQ(cyc_from_json(Json::parse(cyc_to_json(x).dump())), x);
  }
  EXPECT_THROW(cyc_from_json(Json{{"m", 4}, {"coeffs", Json::array()}}), Error);
  EXPECT_THROW(cyc_from_json(Json{{"coeffs", Json::array()}}), Error);
}

TEST(Serialize, PolynomialRoundTrip) {
  const SparsePoly p = steiner_form(build_steiner(random_tree(4, 2), 3));
  const Json j = poly_to_json(p);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(poly_from_json(Json::parse(j.dump())), p);
  EXPECT_THROW(poly_from_json(Json{{"n", 2}}), Error);
  EXPECT_THROW(poly_from_json(Json{{"n", 2}, {"terms", {{{"exp", {1}}, {"num", "1"}, {"den", "1"}}}}}), Error);
}

TEST(Serialize, TreeAndReport) {
  const Tree t = path_tree(3);
  const Json tj = tree_to_json(t);
  EXPECT_EQ(tj["edges"], Json::parse("[[1,2],[2,3]]"));
  EXPECT_EQ(tj["prufer"], Json::parse("[2]"));
  EXPECT_EQ(parse_tree(tj["edge_list"].get<std::string>()).edges(), t.edges());

  const auto report = verify_nullvector(t, 3, canonical_odd_nullvector(t, 3));
  const Json r = report_to_json(report, t, 3);
  EXPECT_EQ(r["schema"], kSchemaVersion);
  EXPECT_EQ(r["k"], 3);
  EXPECT_TRUE(r["exact_zero"].get<bool>());
  ASSERT_EQ(r["point"].size(), 3U);
  EXPECT_EQ(cyc_from_json(r["point"][2]), cyc_root_of_unity(4, 1));
}

TEST(Serialize, MatrixAndSearch) {
  const Json m = matrix_to_json(gl_inverse(path_tree(3)));
  EXPECT_EQ(m[0][0], Json::array({"-1", "4"}));
  EXPECT_EQ(search_to_json({}, 1e-10)["best_residual"], nullptr);

  const Json c = completion_to_json(complete_nullvector(star_tree(4), std::vector<CycNum>{CycNum::one(1), -CycNum::one(1)}));
  EXPECT_FALSE(c["root_in_field"].get<bool>());
  EXPECT_EQ(c["candidates"][0]["exact"], nullptr);
  EXPECT_EQ(c["candidates"][0]["numeric"].size(), 4U);
}

}  // namespace
}  // namespace steiner
