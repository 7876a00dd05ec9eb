#ifndef MODRC_CLASSIFIER_H_
#define MODRC_CLASSIFIER_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "modrc/families.h"

namespace modrc {

// Declaration order is the output sort order.
enum class ComponentKind { kUnobstructedExt, kUnobstructedTorsion, kObstructedExpected, kObstructedCandidate, kNotComponent };
enum class GenericImage { kGeneric, kNonGeneric, kUnknown };
enum class ProofStatus { kProvedComponent, kProvedNotComponent, kCandidate };

std::string_view to_string(ComponentKind k);
std::string_view to_string(GenericImage g);
std::string_view to_string(ProofStatus s);
ComponentKind parse_component_kind(std::string_view s);
GenericImage parse_generic_image(std::string_view s);
ProofStatus parse_proof_status(std::string_view s);

using FamilyDatum = std::variant<ExtensionChain, TorsionDatum, MixedDatum>;

struct ComponentDescriptor {
  ComponentKind kind;
  FamilyDatum datum;
  Int k;
  Int dimension;
  Int expected_dim;
  bool obstructed;
  GenericImage generic_image;
  ProofStatus status;

  friend bool operator==(const ComponentDescriptor&, const ComponentDescriptor&) = default;
};

/// Throws InvariantError if the descriptor's kind contradicts its dimensions.
void check_invariants(const ComponentDescriptor& c);

/// Canonical ordering: kind, family type, chain length or r1, then datum fields.
bool descriptor_less(const ComponentDescriptor& a, const ComponentDescriptor& b);

/// The h unobstructed components of degree k, one per Diophantine solution.
std::vector<ComponentDescriptor> enumerate_unobstructed(const ModuliParams& p, Int k);

/// One row per r1 in [1, r-1]: the constructive equality-case test next to
/// the literal "r1(r-r1)(g-1) divides k" reading.
struct DivisibilityCheck {
  Int r1;
  Int threshold;          // r1 (r - r1)(g - 1)
  bool literal_divides;   // threshold | k
  bool constructive;      // integral d1 and a >= 2 with hk = a * threshold
  std::optional<Int> d1;  // set when constructive
  std::optional<Int> a;   // set when constructive

  bool agree() const { return literal_divides == constructive; }
  friend bool operator==(const DivisibilityCheck&, const DivisibilityCheck&) = default;
};

std::vector<DivisibilityCheck> divisibility_table(const ModuliParams& p, Int k);

/// Obstructed components of expected dimension (the equality case of
/// r1 d - r d1 <= r1 (r - r1)(g - 1) with a >= 2); at most one per r1.
std::vector<ComponentDescriptor> enumerate_obstructed_expected(const ModuliParams& p, Int k);

struct CandidateResult {
  std::vector<ComponentDescriptor> descriptors;
  bool incomplete = false;  // some admissible datum had |d_i| > degBound
};

/// Two-step families with a >= 2 and chains with 3 <= l <= maxL of degree
/// exactly k, each labelled by comparing its dimension to the expected one.
CandidateResult enumerate_candidates(const ModuliParams& p, Int k, Int max_l, Int deg_bound);

/// Mixed families and twisted (a >= 2) torsion families of degree k.
/// These are always strictly below the expected dimension.
std::vector<ComponentDescriptor> enumerate_non_components(const ModuliParams& p, Int k);

// Raw enumerators of all data of a given degree, shared with the oracle's
// grid checks and the candidate labelling.
struct TwoStepDatum {
  Int r1, d1, a;
};
std::vector<TwoStepDatum> two_step_data_of_degree(const ModuliParams& p, Int k, Int min_twist);
std::vector<TorsionDatum> torsion_data_of_degree(const ModuliParams& p, Int k, Int min_twist);
std::vector<MixedDatum> mixed_data_of_degree(const ModuliParams& p, Int k);

struct ClassifyOptions {
  bool include_candidates = false;
  bool include_mixed = false;
  Int max_l = 3;
  std::optional<Int> deg_bound;  // default 4 r g

  Int effective_deg_bound(const ModuliParams& p) const { return deg_bound.value_or(4 * p.r() * p.g()); }
  friend bool operator==(const ClassifyOptions&, const ClassifyOptions&) = default;
};

struct ClassificationTotals {
  Int unobstructed;
  Int obstructed_expected;
  Int expected_dimension_components;
  Int proved_nonexpected;  // obstructed components above the expected dimension (proved)
  Int candidates;          // obstructed families above the expected dimension, unproved
  Int not_component;
  friend bool operator==(const ClassificationTotals&, const ClassificationTotals&) = default;
};

struct ClassificationReport {
  ModuliParams params;
  Int k;
  ClassifyOptions options;
  std::vector<ComponentDescriptor> components;
  std::vector<DivisibilityCheck> divisibility;
  ClassificationTotals totals;
  bool incomplete = false;
  std::vector<std::string> warnings;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport classify(const ModuliParams& p, Int k, const ClassifyOptions& options = {});

}  // namespace modrc

#endif  // MODRC_CLASSIFIER_H_
