#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ontolab/checkers.hpp"
#include "ontolab/errors.hpp"
#include "ontolab/generators.hpp"
#include "ontolab/io.hpp"

namespace ontolab {
namespace {

using nlohmann::json;

TEST(Io, PointFormats) {
  EXPECT_NEAR(io::point_from_json({{"re", 0.3}, {"im", 0.4}}).radius(), 0.5, 1e-15);
  EXPECT_NEAR(io::point_from_json({{"r", 0.5}, {"theta", 1.0}}).theta(), 1.0, 1e-15);
  EXPECT_EQ(io::point_from_json({{"n", 3}, {"k", 5}}), embed(TreeNode{3, 5}));
  const DiscPoint deep = io::point_from_json({{"turns", "1/2^900"}, {"log2_depth", -2000}});
  EXPECT_EQ(deep.depth(), std::ldexp(1.0L, -2000));
  EXPECT_EQ(deep.angle(), Turns::dyadic(1, 900));
}

TEST(Io, DeepPointRoundTrip) {
  const auto seq = generate_comb(10, 0.3L);
  const Sequence back = io::sequence_from_json(io::to_json(seq));
  EXPECT_EQ(back.points(), seq.points());
  EXPECT_EQ(back.label(), seq.label());
}

TEST(Io, FieldDiagnostics) {
  const json bad = {{"points", {{{"r", 0.5}, {"theta", 0.0}}, {{"r", 1.5}, {"theta", 0.0}}}}};
  try {
    io::sequence_from_json(bad);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("points[1]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::sequence_from_json({{"label", "x"}}), InputError);
  EXPECT_THROW(io::point_from_json({{"r", "half"}, {"theta", 0}}), InputError);
  EXPECT_THROW(io::tree_node_from_json({{"n", 2}, {"k", 9}}), InputError);
}

TEST(Io, CondenserSpec) {
  const json j = {{"plate_inner", {{"center", {{"r", 0.2}, {"theta", 0.0}}}, {"radius", 1.0}}},
                  {"plate_outer", {{"arcs", {{{"center", 1.0}, {"length", 0.1}}}}}}};
  const CondenserSpec spec = io::condenser_from_json(j);
  ASSERT_TRUE(std::holds_alternative<std::vector<Arc>>(spec.plate_outer));
  const auto& arcs = std::get<std::vector<Arc>>(spec.plate_outer);
  EXPECT_NEAR(arcs[0].center_angle(), 1.0, 1e-15);
  const CondenserSpec again = io::condenser_from_json(io::to_json(spec));
  EXPECT_EQ(std::get<std::vector<Arc>>(again.plate_outer)[0].center(), arcs[0].center());
  const json boxes = {{"plate_inner", {{"center", {{"r", 0.0}, {"theta", 0.0}}}}},
                      {"plate_outer", {{"boxes", {{{"point", {{"r", 0.9}, {"theta", 2.0}}}}}}}}};
  EXPECT_TRUE(std::holds_alternative<std::vector<CarlesonBox>>(
      io::condenser_from_json(boxes).plate_outer));
  EXPECT_THROW(io::condenser_from_json({{"plate_inner", {}}}), InputError);
}

TEST(Io, ReportNonFiniteAsStrings) {
  CheckReport rep;
  rep.condition_name = "demo";
  rep.records.push_back({0, 1.0, 0.0, INFINITY, {}});
  rep.finalize();
  const json j = io::to_json(rep);
  EXPECT_EQ(j["sup_ratio"], "inf");
  EXPECT_EQ(j["records"][0]["ratio"], "inf");
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(io::number(NAN), "nan");
}

TEST(Io, RunConfigRoundTripAndValidation) {
  io::RunConfig c;
  c.check.gamma = 0.6;
  c.seed = 99;
  const auto back = io::run_config_from_json(io::to_json(c));
  EXPECT_EQ(io::to_json(back), io::to_json(c));
  EXPECT_THROW(io::run_config_from_json({{"gamma", 1.5}}), InputError);
  EXPECT_THROW(io::run_config_from_json({{"beta", 0.95}}), InputError);
  EXPECT_THROW(io::run_config_from_json({{"format", "xml"}}), InputError);
}

TEST(Io, CsvRecords) {
  const Sequence s({DiscPoint::from_polar(0.5, 0), DiscPoint::from_polar(0.5, 3)});
  std::ostringstream out;
  io::write_records_csv(check_weak_separation(s, CheckParams{}), out);
  EXPECT_EQ(out.str().substr(0, 26), "index,lhs,rhs,ratio,error\n");
}

TEST(Io, MissingFile) {
  EXPECT_THROW(io::read_json_file("/nonexistent/seq.json"), InputError);
}

}  // namespace
}  // namespace ontolab
