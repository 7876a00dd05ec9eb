#ifndef MODRC_SWEEP_H_
#define MODRC_SWEEP_H_

#include <string>
#include <vector>

#include "modrc/classifier.h"

namespace modrc {

/// Component counts of one classification, flattened for CSV/JSON grids.
struct SweepRow {
  Int k;
  Int unobstructed;
  Int unobstructed_ext;
  Int unobstructed_torsion;
  Int obstructed_expected;
  Int proved_nonexpected;
  Int candidates;
  Int not_component;
  Int expected_dim;
  Int min_dim;
  Int max_dim;
  Int divisibility_disagreements;
  bool incomplete = false;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::string> warnings;  // "k=<k>: <warning>" in row order
};

SweepRow sweep_row(const ClassificationReport& report);

/// Classifies every k in [k_min, k_max]; work is spread over the worker pool
/// and merged in ascending k.
SweepResult sweep(const ModuliParams& p, Int k_min, Int k_max, const ClassifyOptions& options = {});

/// CSV with a header line, LF line endings, no quoting.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace modrc

#endif  // MODRC_SWEEP_H_
