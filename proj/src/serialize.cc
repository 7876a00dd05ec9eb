#include "modrc/serialize.h"

namespace modrc {
namespace {

template <typename T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::optional<Int> optional_int(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<Int>();
}

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) throw ParameterError(std::string(what) + " must be a JSON object");
}

}  // namespace

void to_json(Json& j, const Int& x) { j = x.value(); }

void from_json(const Json& j, Int& x) {
  if (!j.is_number_integer()) throw ParameterError("expected a JSON integer, got " + j.dump());
  x = Int(j.get<std::int64_t>());
}

void to_json(Json& j, const ModuliParams& p) {
  j = Json{{"g", p.g()},         {"r", p.r()},         {"d", p.d()},         {"h", p.h()},
           {"rBar", p.r_bar()},  {"dBar", p.d_bar()},  {"dimM", p.dim_m()},  {"fanoIndex", p.fano_index()}};
}

ModuliParams params_from_json(const Json& j) {
  require_object(j, "params");
  ModuliParams p = derive_params(j.at("g").get<Int>(), j.at("r").get<Int>(), j.at("d").get<Int>());
  Json derived;
  to_json(derived, p);
  for (const auto& [key, value] : j.items()) {
    if (!derived.contains(key) || derived.at(key) != value) {
      throw ParameterError("params field '" + key + "' is inconsistent with (g, r, d)");
    }
  }
  return p;
}

Json datum_to_json(const FamilyDatum& datum) {
  if (const auto* chain = std::get_if<ExtensionChain>(&datum)) {
    Json steps = Json::array();
    for (const ChainStep& s : chain->steps) steps.push_back(Json{{"rank", s.rank}, {"degree", s.degree}});
    return Json{{"family", "chain"}, {"steps", steps}, {"twists", chain->twists}};
  }
  if (const auto* td = std::get_if<TorsionDatum>(&datum)) {
    return Json{{"family", "torsion"}, {"t", td->t}, {"a", td->a}};
  }
  const auto& m = std::get<MixedDatum>(datum);
  return Json{{"family", "mixed"}, {"r1", m.r1}, {"d1", m.d1}, {"r2", m.r2}, {"d2", m.d2}, {"t", m.t}};
}

FamilyDatum datum_from_json(const Json& j, const ModuliParams& p) {
  require_object(j, "datum");
  const std::string family = j.at("family").get<std::string>();
  if (family == "chain") {
    ExtensionChain chain{p, {}, j.at("twists").get<std::vector<Int>>()};
    for (const Json& s : j.at("steps")) chain.steps.push_back({s.at("rank").get<Int>(), s.at("degree").get<Int>()});
    validate(chain);
    return chain;
  }
  if (family == "torsion") {
    TorsionDatum td{p, j.at("t").get<Int>(), j.at("a").get<Int>()};
    validate(td);
    return td;
  }
  if (family == "mixed") {
    MixedDatum m{p, j.at("r1").get<Int>(), j.at("d1").get<Int>(), j.at("r2").get<Int>(), j.at("d2").get<Int>(),
                 j.at("t").get<Int>()};
    validate(m);
    return m;
  }
  throw ParameterError("unknown family '" + family + "'");
}

Json descriptor_to_json(const ComponentDescriptor& c) {
  return Json{{"kind", to_string(c.kind)},
              {"datum", datum_to_json(c.datum)},
              {"k", c.k},
              {"dimension", c.dimension},
              {"expectedDim", c.expected_dim},
              {"obstructed", c.obstructed},
              {"genericImage", to_string(c.generic_image)},
              {"status", to_string(c.status)}};
}

ComponentDescriptor descriptor_from_json(const Json& j, const ModuliParams& p) {
  require_object(j, "component");
  ComponentDescriptor c{parse_component_kind(j.at("kind").get<std::string>()),
                        datum_from_json(j.at("datum"), p),
                        j.at("k").get<Int>(),
                        j.at("dimension").get<Int>(),
                        j.at("expectedDim").get<Int>(),
                        j.at("obstructed").get<bool>(),
                        parse_generic_image(j.at("genericImage").get<std::string>()),
                        parse_proof_status(j.at("status").get<std::string>())};
  check_invariants(c);
  return c;
}

void to_json(Json& j, const ClassifyOptions& o) {
  j = Json{{"includeCandidates", o.include_candidates},
           {"includeMixed", o.include_mixed},
           {"maxL", o.max_l},
           {"degBound", optional_to_json(o.deg_bound)}};
}

void from_json(const Json& j, ClassifyOptions& o) {
  o.include_candidates = j.at("includeCandidates").get<bool>();
  o.include_mixed = j.at("includeMixed").get<bool>();
  o.max_l = j.at("maxL").get<Int>();
  o.deg_bound = optional_int(j, "degBound");
}

void to_json(Json& j, const DivisibilityCheck& d) {
  j = Json{{"r1", d.r1},
           {"threshold", d.threshold},
           {"literalDivides", d.literal_divides},
           {"constructive", d.constructive},
           {"d1", optional_to_json(d.d1)},
           {"a", optional_to_json(d.a)},
           {"agree", d.agree()}};
}

void from_json(const Json& j, DivisibilityCheck& d) {
  d.r1 = j.at("r1").get<Int>();
  d.threshold = j.at("threshold").get<Int>();
  d.literal_divides = j.at("literalDivides").get<bool>();
  d.constructive = j.at("constructive").get<bool>();
  d.d1 = optional_int(j, "d1");
  d.a = optional_int(j, "a");
}

void to_json(Json& j, const ClassificationTotals& t) {
  j = Json{{"unobstructed", t.unobstructed},
           {"obstructedExpected", t.obstructed_expected},
           {"expectedDimensionComponents", t.expected_dimension_components},
           {"provedNonExpected", t.proved_nonexpected},
           {"candidates", t.candidates},
           {"notComponent", t.not_component}};
}

void from_json(const Json& j, ClassificationTotals& t) {
  t.unobstructed = j.at("unobstructed").get<Int>();
  t.obstructed_expected = j.at("obstructedExpected").get<Int>();
  t.expected_dimension_components = j.at("expectedDimensionComponents").get<Int>();
  t.proved_nonexpected = j.at("provedNonExpected").get<Int>();
  t.candidates = j.at("candidates").get<Int>();
  t.not_component = j.at("notComponent").get<Int>();
}

Json report_to_json(const ClassificationReport& r) {
  Json components = Json::array();
  for (const ComponentDescriptor& c : r.components) components.push_back(descriptor_to_json(c));
  return Json{{"params", r.params},   {"k", r.k},
              {"options", r.options}, {"totals", r.totals},
              {"components", components}, {"divisibility", r.divisibility},
              {"incomplete", r.incomplete}, {"warnings", r.warnings}};
}

ClassificationReport report_from_json(const Json& j) {
  require_object(j, "classification report");
  const ModuliParams p = params_from_json(j.at("params"));
  ClassificationReport r{p,
                         j.at("k").get<Int>(),
                         j.at("options").get<ClassifyOptions>(),
                         {},
                         j.at("divisibility").get<std::vector<DivisibilityCheck>>(),
                         j.at("totals").get<ClassificationTotals>(),
                         j.at("incomplete").get<bool>(),
                         j.at("warnings").get<std::vector<std::string>>()};
  for (const Json& c : j.at("components")) r.components.push_back(descriptor_from_json(c, p));
  return r;
}

void to_json(Json& j, const VerificationReport& r) {
  j = Json{{"suiteName", r.suite_name},
           {"trials", r.trials},
           {"failures", r.failures},
           {"pass", r.pass},
           {"expectFailure", r.expect_failure},
           {"asExpected", r.as_expected()},
           {"tupleLayout", r.tuple_layout},
           {"counterexamples", r.counterexamples},
           {"notes", r.notes}};
}

void from_json(const Json& j, VerificationReport& r) {
  r.suite_name = j.at("suiteName").get<std::string>();
  r.trials = j.at("trials").get<std::int64_t>();
  r.failures = j.at("failures").get<std::int64_t>();
  r.pass = j.at("pass").get<bool>();
  r.expect_failure = j.at("expectFailure").get<bool>();
  r.tuple_layout = j.at("tupleLayout").get<std::string>();
  r.counterexamples = j.at("counterexamples").get<std::vector<std::vector<std::int64_t>>>();
  r.notes = j.at("notes").get<std::string>();
  if (r.pass != (r.failures == 0)) throw ParameterError("verification report: pass must equal (failures == 0)");
}

void to_json(Json& j, const SegreStratum& s) {
  j = Json{{"rPrime", s.r_prime}, {"s", s.s}, {"codim", s.codim}, {"nextS", s.next_s}};
}

void from_json(const Json& j, SegreStratum& s) {
  s.r_prime = j.at("rPrime").get<Int>();
  s.s = j.at("s").get<Int>();
  s.codim = j.at("codim").get<Int>();
  s.next_s = j.at("nextS").get<Int>();
}

void to_json(Json& j, const SegreTableRow& r) {
  j = Json{{"rPrime", r.r_prime},
           {"bound", r.bound},
           {"genericS", r.generic_s},
           {"strata", r.strata},
           {"nonstableCodim", r.nonstable_codim},
           {"linesAvoidNonstable", r.lines_avoid_nonstable}};
}

void from_json(const Json& j, SegreTableRow& r) {
  r.r_prime = j.at("rPrime").get<Int>();
  r.bound = j.at("bound").get<Int>();
  r.generic_s = j.at("genericS").get<Int>();
  r.strata = j.at("strata").get<std::vector<SegreStratum>>();
  r.nonstable_codim = j.at("nonstableCodim").get<Int>();
  r.lines_avoid_nonstable = j.at("linesAvoidNonstable").get<bool>();
}

void to_json(Json& j, const ConnectingDegree& c) {
  j = Json{{"derivedK", c.derived_k},
           {"closedFormK", c.closed_form_k},
           {"witness", Json{{"rPrime", c.witness.r_prime}, {"dPrime", c.witness.d_prime}}},
           {"threshold", c.threshold},
           {"mismatch", c.mismatch()}};
}

void from_json(const Json& j, ConnectingDegree& c) {
  c.derived_k = j.at("derivedK").get<Int>();
  c.closed_form_k = j.at("closedFormK").get<Int>();
  c.witness = {j.at("witness").at("rPrime").get<Int>(), j.at("witness").at("dPrime").get<Int>()};
  c.threshold = j.at("threshold").get<Int>();
}

void to_json(Json& j, const SweepRow& r) {
  j = Json{{"k", r.k},
           {"unobstructed", r.unobstructed},
           {"unobstructedExt", r.unobstructed_ext},
           {"unobstructedTorsion", r.unobstructed_torsion},
           {"obstructedExpected", r.obstructed_expected},
           {"provedNonExpected", r.proved_nonexpected},
           {"candidates", r.candidates},
           {"notComponent", r.not_component},
           {"expectedDim", r.expected_dim},
           {"minDim", r.min_dim},
           {"maxDim", r.max_dim},
           {"divisibilityDisagreements", r.divisibility_disagreements},
           {"incomplete", r.incomplete}};
}

void from_json(const Json& j, SweepRow& r) {
  r.k = j.at("k").get<Int>();
  r.unobstructed = j.at("unobstructed").get<Int>();
  r.unobstructed_ext = j.at("unobstructedExt").get<Int>();
  r.unobstructed_torsion = j.at("unobstructedTorsion").get<Int>();
  r.obstructed_expected = j.at("obstructedExpected").get<Int>();
  r.proved_nonexpected = j.at("provedNonExpected").get<Int>();
  r.candidates = j.at("candidates").get<Int>();
  r.not_component = j.at("notComponent").get<Int>();
  r.expected_dim = j.at("expectedDim").get<Int>();
  r.min_dim = j.at("minDim").get<Int>();
  r.max_dim = j.at("maxDim").get<Int>();
  r.divisibility_disagreements = j.at("divisibilityDisagreements").get<Int>();
  r.incomplete = j.at("incomplete").get<bool>();
}

void to_json(Json& j, const OutputEnvelope& e) {
  j = Json{{"schemaVersion", e.schema_version},
           {"command", e.command},
           {"inputs", e.inputs},
           {"results", e.results},
           {"warnings", e.warnings}};
}

void from_json(const Json& j, OutputEnvelope& e) {
  e.schema_version = j.at("schemaVersion").get<std::string>();
  e.command = j.at("command").get<std::string>();
  e.inputs = j.at("inputs");
  e.results = j.at("results");
  e.warnings = j.at("warnings").get<std::vector<std::string>>();
}

std::string print(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace modrc
