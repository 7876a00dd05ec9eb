#ifndef MODRC_FAMILIES_H_
#define MODRC_FAMILIES_H_

#include <vector>

#include "modrc/params.h"

namespace modrc {

struct ChainStep {
  Int rank;
  Int degree;
  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

/// Harder-Narasimhan datum of a family of iterated extensions on C x P^1.
///
/// steps[i] = (r_i, d_i) are the graded pieces in order of strictly
/// increasing slope; twists[i] = a_{i+1} >= 1 is the relative P^1-twist
/// between consecutive pieces (the last piece is untwisted). A chain with
/// two steps is the two-step extension family.
struct ExtensionChain {
  ModuliParams params;
  std::vector<ChainStep> steps;
  std::vector<Int> twists;

  std::size_t length() const { return steps.size(); }
  friend bool operator==(const ExtensionChain&, const ExtensionChain&) = default;
};

/// Extension of O_D (deg D = t) by a rank-r bundle of degree d - t twisted by O(a).
struct TorsionDatum {
  ModuliParams params;
  Int t;
  Int a;
  friend bool operator==(const TorsionDatum&, const TorsionDatum&) = default;
};

/// Two-step extension (a = 1) followed by an elementary transformation along D.
struct MixedDatum {
  ModuliParams params;
  Int r1, d1, r2, d2;
  Int t;
  friend bool operator==(const MixedDatum&, const MixedDatum&) = default;
};

struct MixedResult {
  Int k;
  Int dimension;
};

// Validation. Each throws ParameterError describing the first violated condition.
void validate(const ExtensionChain& c);
void validate(const TorsionDatum& td);
void validate(const MixedDatum& m);

/// Builds the two-step chain [(r1, d1), (r - r1, d - d1)] with twist a and validates it.
ExtensionChain make_two_step(const ModuliParams& p, Int r1, Int d1, Int a);

/// k = a (dBar r1 - rBar d1).
Int two_step_degree(const ModuliParams& p, Int r1, Int d1, Int a);
/// dim M + hk + (a - 1) r1 r2 (g - 1) + (r1 d2 - r2 d1).
Int two_step_dimension(const ModuliParams& p, Int r1, Int d1, Int a);

Int torsion_degree(const TorsionDatum& td);
Int torsion_dimension(const TorsionDatum& td);

MixedResult mixed_dimension(const MixedDatum& m);

/// hk = sum_{i<j} (r_i d_j - r_j d_i)(a_i + ... + a_{j-1}); returns k.
Int multi_step_degree(const ExtensionChain& c);
Int multi_step_dimension(const ExtensionChain& c);

/// Whether the generic splitting type on {P} x P^1 is balanced within one,
/// i.e. the family is unobstructed.
bool is_unobstructed_splitting(const ExtensionChain& c);
bool is_unobstructed_splitting(const TorsionDatum& td);

/// A_ij = r_i d_j - r_j d_i - r_i r_j (g - 1).
Int pair_defect(const ChainStep& lo, const ChainStep& hi, Int g);

/// sum_{i<j} A_ij (a_i + ... + a_{j-1} - 1). Non-positive exactly when the
/// chain's family has at least the expected dimension.
Int chain_excess_form(const ExtensionChain& c);

}  // namespace modrc

#endif  // MODRC_FAMILIES_H_
