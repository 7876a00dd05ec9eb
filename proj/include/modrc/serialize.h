#ifndef MODRC_SERIALIZE_H_
#define MODRC_SERIALIZE_H_

#include <string>
#include <vector>

#include <json.hpp>

#include "modrc/classifier.h"
#include "modrc/oracle.h"
#include "modrc/segre.h"
#include "modrc/sweep.h"

namespace modrc {

// Insertion-ordered so that printed documents follow the schema field order.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0.0";

/// Top-level document printed by every JSON-producing command.
struct OutputEnvelope {
  std::string schema_version = kSchemaVersion;
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> warnings;

  friend bool operator==(const OutputEnvelope&, const OutputEnvelope&) = default;
};

void to_json(Json& j, const Int& x);
void from_json(const Json& j, Int& x);

void to_json(Json& j, const ModuliParams& p);
/// Re-derives from (g, r, d); any derived field present must agree.
ModuliParams params_from_json(const Json& j);

Json datum_to_json(const FamilyDatum& datum);
FamilyDatum datum_from_json(const Json& j, const ModuliParams& p);

Json descriptor_to_json(const ComponentDescriptor& c);
ComponentDescriptor descriptor_from_json(const Json& j, const ModuliParams& p);

void to_json(Json& j, const ClassifyOptions& o);
void from_json(const Json& j, ClassifyOptions& o);
void to_json(Json& j, const DivisibilityCheck& d);
void from_json(const Json& j, DivisibilityCheck& d);
void to_json(Json& j, const ClassificationTotals& t);
void from_json(const Json& j, ClassificationTotals& t);

Json report_to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const Json& j);

void to_json(Json& j, const VerificationReport& r);
void from_json(const Json& j, VerificationReport& r);

void to_json(Json& j, const SegreStratum& s);
void from_json(const Json& j, SegreStratum& s);
void to_json(Json& j, const SegreTableRow& r);
void from_json(const Json& j, SegreTableRow& r);
void to_json(Json& j, const ConnectingDegree& c);
void from_json(const Json& j, ConnectingDegree& c);

void to_json(Json& j, const SweepRow& r);
void from_json(const Json& j, SweepRow& r);

void to_json(Json& j, const OutputEnvelope& e);
void from_json(const Json& j, OutputEnvelope& e);

/// Two-space indented JSON followed by a newline.
std::string print(const Json& j);

}  // namespace modrc

#endif  // MODRC_SERIALIZE_H_
