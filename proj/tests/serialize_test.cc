#include "modrc/serialize.h"

#include <array>

#include <gtest/gtest.h>

namespace modrc {
namespace {

template <typename T>
T round_trip(const T& value) {
  return Json::parse(Json(value).dump()).template get<T>();
}

TEST(Serialize, ParamsCarryDerivedFields) {
  const ModuliParams p = derive_params(2, 4, 2);
  const Json j = p;
  EXPECT_EQ(j.dump(), R"({"g":2,"r":4,"d":2,"h":2,"rBar":2,"dBar":1,"dimM":15,"fanoIndex":4})");
  EXPECT_EQ(params_from_json(j), p);

  Json tampered = j;
  tampered["h"] = 1;
  EXPECT_THROW(params_from_json(tampered), ParameterError);
  EXPECT_THROW(params_from_json(Json{{"g", 1}, {"r", 2}, {"d", 0}}), ParameterError);
  EXPECT_THROW(params_from_json(Json::array()), ParameterError);
}

TEST(Serialize, ReportRoundTrip) {
  ClassifyOptions opts;
  opts.include_candidates = true;
  opts.include_mixed = true;
  for (const auto& [g, r, d, k] : std::vector<std::array<int, 4>>{{2, 2, 1, 2}, {3, 2, 1, 4}, {2, 3, 1, 9}, {2, 4, 2, 3}}) {
    const ClassificationReport rep = classify(derive_params(g, r, d), k, opts);
    const Json j = report_to_json(rep);
    EXPECT_EQ(report_from_json(Json::parse(j.dump())), rep);
    EXPECT_EQ(report_to_json(report_from_json(j)).dump(), j.dump());
  }
}

TEST(Serialize, DescriptorFields) {
  const ClassificationReport rep = classify(derive_params(2, 2, 1), 2);
  const Json j = descriptor_to_json(rep.components[1]);
  EXPECT_EQ(j.at("kind"), "OBSTRUCTED_EXPECTED");
  EXPECT_EQ(j.at("datum").dump(), R"({"family":"chain","steps":[{"rank":1,"degree":0},{"rank":1,"degree":1}],"twists":[2]})");
  EXPECT_EQ(j.at("expectedDim"), 7);
  EXPECT_EQ(j.at("genericImage"), "GENERIC");

  Json bad = j;
  bad["dimension"] = 9;
  EXPECT_THROW(descriptor_from_json(bad, derive_params(2, 2, 1)), InvariantError);
  bad = j;
  bad["datum"]["family"] = "braid";
  EXPECT_THROW(descriptor_from_json(bad, derive_params(2, 2, 1)), ParameterError);
}

TEST(Serialize, VerificationReportRoundTrip) {
  const IdentityReports reps = verify_three_term_identities({}, 500, 3);
  EXPECT_EQ(round_trip(reps.minus), reps.minus);
  EXPECT_EQ(round_trip(reps.plus), reps.plus);
  Json broken = reps.minus;
  broken["pass"] = true;
  EXPECT_THROW(broken.get<VerificationReport>(), ParameterError);
}

TEST(Serialize, SegreAndConnectRoundTrip) {
  const ModuliParams p = derive_params(3, 4, 2);
  for (const SegreTableRow& row : segre_table(p)) EXPECT_EQ(round_trip(row), row);
  const ConnectingDegree c = min_connecting_degree(derive_params(2, 2, 1));
  EXPECT_EQ(round_trip(c), c);
  const Json j = c;
  EXPECT_EQ(j.at("derivedK"), 3);
  EXPECT_EQ(j.at("closedFormK"), 1);
  EXPECT_EQ(j.at("mismatch"), true);
}

TEST(Serialize, SweepAndEnvelopeRoundTrip) {
  const SweepResult s = sweep(derive_params(2, 3, 1), 1, 6);
  for (const SweepRow& row : s.rows) EXPECT_EQ(round_trip(row), row);

  OutputEnvelope env;
  env.command = "sweep";
  env.inputs = Json{{"g", 2}};
  env.results = Json{{"rows", s.rows}};
  env.warnings = {"w"};
  EXPECT_EQ(round_trip(env), env);
  const std::string text = print(env);
  EXPECT_EQ(text.rfind("{\n  \"schemaVersion\": \"1.0.0\",\n  \"command\": \"sweep\"", 0), 0u);
  EXPECT_EQ(text.back(), '\n');
}

}  // namespace
}  // namespace modrc
