#include "modrc/sweep.h"

#include <algorithm>
#include <sstream>

#include "modrc/parallel.h"

namespace modrc {

SweepRow sweep_row(const ClassificationReport& report) {
  SweepRow row{};
  row.k = report.k;
  row.expected_dim = expected_dimension(report.params, report.k);
  row.min_dim = row.max_dim = row.expected_dim;
  bool first = true;
  for (const ComponentDescriptor& c : report.components) {
    if (c.kind == ComponentKind::kUnobstructedExt) ++row.unobstructed_ext;
    if (c.kind == ComponentKind::kUnobstructedTorsion) ++row.unobstructed_torsion;
    row.min_dim = first ? c.dimension : std::min(row.min_dim, c.dimension);
    row.max_dim = first ? c.dimension : std::max(row.max_dim, c.dimension);
    first = false;
  }
  const ClassificationTotals& t = report.totals;
  row.unobstructed = t.unobstructed;
  row.obstructed_expected = t.obstructed_expected;
  row.proved_nonexpected = t.proved_nonexpected;
  row.candidates = t.candidates;
  row.not_component = t.not_component;
  for (const DivisibilityCheck& d : report.divisibility) {
    if (!d.agree()) ++row.divisibility_disagreements;
  }
  row.incomplete = report.incomplete;
  return row;
}

SweepResult sweep(const ModuliParams& p, Int k_min, Int k_max, const ClassifyOptions& options) {
  if (k_min < 1) throw ParameterError("sweep needs k-min >= 1");
  if (k_min > k_max) throw ParameterError("sweep needs k-min <= k-max");
  const auto n = static_cast<std::size_t>((k_max - k_min + 1).value());
  auto reports = parallel_map(n, [&](std::size_t i) {
    return std::make_optional(classify(p, k_min + Int(static_cast<std::int64_t>(i)), options));
  });
  SweepResult out;
  for (const auto& report : reports) {
    out.rows.push_back(sweep_row(*report));
    for (const std::string& w : report->warnings) {
      out.warnings.push_back("k=" + std::to_string(report->k.value()) + ": " + w);
    }
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "k,unobstructed,unobstructed_ext,unobstructed_torsion,obstructed_expected,proved_nonexpected,"
        "candidates,not_component,expected_dim,min_dim,max_dim,divisibility_disagreements,incomplete\n";
  for (const SweepRow& r : rows) {
    os << r.k << ',' << r.unobstructed << ',' << r.unobstructed_ext << ',' << r.unobstructed_torsion << ','
       << r.obstructed_expected << ',' << r.proved_nonexpected << ',' << r.candidates << ',' << r.not_component
       << ',' << r.expected_dim << ',' << r.min_dim << ',' << r.max_dim << ',' << r.divisibility_disagreements
       << ',' << (r.incomplete ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace modrc
