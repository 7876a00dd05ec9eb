#ifndef MODRC_ORACLE_H_
#define MODRC_ORACLE_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "modrc/int.h"

namespace modrc {

/// Outcome of one brute-force verification suite.
///
/// `pass` is true exactly when no instance failed. Suites that exist to
/// demonstrate a known-false statement set `expect_failure`; for those the
/// suite behaves as expected when at least one counterexample was found.
struct VerificationReport {
  std::string suite_name;
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  std::string tuple_layout;  // comma-separated names of the counterexample fields
  std::vector<std::vector<std::int64_t>> counterexamples;  // lexicographically smallest, capped
  bool pass = true;
  bool expect_failure = false;
  std::string notes;

  bool as_expected() const { return expect_failure ? failures > 0 : failures == 0; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline constexpr std::size_t kDefaultCounterexampleCap = 10;

// --- Three-term identities among A_ik = r_i d_k - r_k d_i - r_i r_k (g - 1). ---

struct ThreeTermValues {
  Int minus_lhs, minus_rhs;  // r3 A12 - r1 A23  vs  r2 A13 - r1 r2 r3 (g-1)
  Int plus_lhs, plus_rhs;    // r3 A12 + r1 A23  vs  r2 A13 - r1 r2 r3 (g-1)
};

ThreeTermValues evaluate_three_term(Int g, const std::array<Int, 3>& ranks, const std::array<Int, 3>& degrees);

struct IdentityRanges {
  Int rank_max = 6;
  Int deg_max = 10;
  Int g_max = 6;
};

struct IdentityReports {
  VerificationReport plus;   // must hold identically
  VerificationReport minus;  // known to be false
};

IdentityReports verify_three_term_identities(const IdentityRanges& ranges, std::int64_t trials, std::uint64_t seed);

// --- Claim inequality over chains satisfying the subbundle inequalities. ---

struct ClaimBounds {
  Int max_l = 4;
  Int rank_bound = 3;
  Int deg_bound = 6;
  Int g_bound = 4;
};

/// All j in [1, l-1]: R_j (d - D_j) - (r - R_j) D_j - (r - R_j) R_j (g - 1) >= 0.
bool claim_hypothesis_holds(Int g, const std::vector<Int>& ranks, const std::vector<Int>& degrees);

/// r * sum_{i<j-1} (j-i-1) A_ij  -  (g-1) * sum_{m<n<p} r_m r_n r_p   (claim: >= 0).
Int claim_margin(Int g, const std::vector<Int>& ranks, const std::vector<Int>& degrees);

VerificationReport verify_claim_inequality(const ClaimBounds& bounds);

// --- Degree telescoping: partial-sum form vs pairwise form of hk. ---

struct TelescopingBounds {
  Int max_l = 6;
  Int rank_max = 5;
  Int deg_max = 10;
  Int twist_max = 5;
};

Int degree_partial_sum_form(const std::vector<Int>& ranks, const std::vector<Int>& degrees,
                            const std::vector<Int>& twists);
Int degree_pairwise_form(const std::vector<Int>& ranks, const std::vector<Int>& degrees,
                         const std::vector<Int>& twists);

VerificationReport verify_degree_telescoping(std::int64_t trials, std::uint64_t seed, const TelescopingBounds& bounds);

// --- Dimension laws over a finite parameter grid. ---

struct DimensionGrid {
  Int g_min = 2, g_max = 5;
  Int r_min = 2, r_max = 6;
  Int d_min = -6, d_max = 6;
  Int k_max = 20;
  ClaimBounds chains;  // chain range for the multi-step equivalence
  Int twist_max = 3;
};

VerificationReport verify_dimension_laws(const DimensionGrid& grid);

// --- Unobstructed component count: exactly h, all of expected dimension. ---

struct CountGrid {
  Int g_min = 2, g_max = 5;
  Int r_min = 2, r_max = 6;
  Int d_min = -6, d_max = 6;
  Int k_max = 20;
};

VerificationReport verify_component_counts(const CountGrid& grid);

}  // namespace modrc

#endif  // MODRC_ORACLE_H_
