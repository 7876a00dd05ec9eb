#ifndef MODRC_SEGRE_H_
#define MODRC_SEGRE_H_

#include <optional>
#include <vector>

#include "modrc/params.h"

namespace modrc {

/// Locus of bundles with rank-r' Segre invariant s.
struct SegreStratum {
  Int r_prime;
  Int s;
  Int codim;   // 0 once s reaches the generic bound (the stratum is open)
  Int next_s;  // s + r: the stratum whose closure contains this one
  friend bool operator==(const SegreStratum&, const SegreStratum&) = default;
};

/// The unique s in [r'(r-r')(g-1), r'(r-r')(g-1) + r) with s = r'd (mod r).
Int generic_segre(const ModuliParams& p, Int r_prime);

/// Throws ParameterError if s <= 0 or s is not congruent to r'd modulo r.
SegreStratum stratum_codimension(const ModuliParams& p, Int r_prime, Int s);

/// Strata for s = smallest positive admissible value, ..., generic value.
std::vector<SegreStratum> segre_strata(const ModuliParams& p, Int r_prime);

/// Summary of the rank-r' stratification used by the command-line front end.
struct SegreTableRow {
  Int r_prime;
  Int bound;  // r'(r - r')(g - 1)
  Int generic_s;
  std::vector<SegreStratum> strata;
  Int nonstable_codim;  // r'(r - r')(g - 1) lower bound for the split r' + (r - r')
  bool lines_avoid_nonstable;
  friend bool operator==(const SegreTableRow&, const SegreTableRow&) = default;
};

/// One row per r' in [1, r-1], or only the given r'.
std::vector<SegreTableRow> segre_table(const ModuliParams& p, std::optional<Int> r_prime = std::nullopt);

/// Segre invariant after a generic elementary transformation: s + r1 - r.
Int elementary_transform_segre(Int s, Int r1, Int r);

/// Lower bound r1 r2 (g - 1) on the codimension of non-stable extensions.
Int nonstable_codim_bound(Int r1, Int r2, Int g);

/// Whole lines of the extension space avoid the non-stable locus once its
/// codimension is at least two.
bool lines_avoid_nonstable(Int r1, Int r2, Int g);

struct ConnectingWitness {
  Int r_prime;
  Int d_prime;
  friend bool operator==(const ConnectingWitness&, const ConnectingWitness&) = default;
};

struct ConnectingDegree {
  Int derived_k;
  Int closed_form_k;  // closed form: (r^2/2 - 1)(g-1) for even r, (3r^2 - 3)/2 (g-1) for odd r
  ConnectingWitness witness;
  Int threshold;  // (r^2 - 1 - r'(r - r'))(g - 1) for the witness r'
  bool mismatch() const { return derived_k != closed_form_k; }
  friend bool operator==(const ConnectingDegree&, const ConnectingDegree&) = default;
};

/// Smallest k such that some r' has hk = r'd - rd' >= (r^2 - 1 - r'(r-r'))(g-1).
/// Ties go to the smallest r'.
ConnectingDegree min_connecting_degree(const ModuliParams& p);

}  // namespace modrc

#endif  // MODRC_SEGRE_H_
