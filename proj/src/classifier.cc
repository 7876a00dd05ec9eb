#include "modrc/classifier.h"

#include <algorithm>
#include <array>
#include <functional>
#include <tuple>

namespace modrc {
namespace {

constexpr std::array<std::string_view, 5> kKindNames = {"UNOBSTRUCTED_EXT", "UNOBSTRUCTED_TORSION",
                                                        "OBSTRUCTED_EXPECTED", "OBSTRUCTED_CANDIDATE",
                                                        "NOT_COMPONENT"};
constexpr std::array<std::string_view, 3> kImageNames = {"GENERIC", "NON_GENERIC", "UNKNOWN"};
constexpr std::array<std::string_view, 3> kStatusNames = {"PROVED_COMPONENT", "PROVED_NOT_COMPONENT", "CANDIDATE"};

template <typename E, std::size_t N>
E parse_enum(std::string_view s, const std::array<std::string_view, N>& names, const char* what) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == s) return static_cast<E>(i);
  }
  throw ParameterError(std::string("unknown ") + what + ": " + std::string(s));
}

std::vector<Int> positive_divisors(Int n) {
  std::vector<Int> small, large;
  for (Int q = 1; q * q <= n; ++q) {
    if (divides(q, n)) {
      small.push_back(q);
      if (q * q != n) large.push_back(n / q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// r1 (r - r1)(g - 1): the generic value of the rank-r1 Segre invariant bound.
Int equality_threshold(const ModuliParams& p, Int r1) { return r1 * (p.r() - r1) * (p.g() - 1); }

// Flattened datum for lexicographic ordering: (family index, primary key, fields...).
std::vector<std::int64_t> sort_key(const ComponentDescriptor& c) {
  std::vector<std::int64_t> key{static_cast<std::int64_t>(c.kind), static_cast<std::int64_t>(c.datum.index())};
  if (const auto* chain = std::get_if<ExtensionChain>(&c.datum)) {
    key.push_back(static_cast<std::int64_t>(chain->length()));
    for (const ChainStep& s : chain->steps) {
      key.push_back(s.rank.value());
      key.push_back(s.degree.value());
    }
    for (Int a : chain->twists) key.push_back(a.value());
  } else if (const auto* td = std::get_if<TorsionDatum>(&c.datum)) {
    key.insert(key.end(), {td->t.value(), td->a.value()});
  } else {
    const auto& m = std::get<MixedDatum>(c.datum);
    key.insert(key.end(), {m.r1.value(), m.d1.value(), m.r2.value(), m.d2.value(), m.t.value()});
  }
  return key;
}

bool within(const ExtensionChain& c, Int deg_bound) {
  return std::all_of(c.steps.begin(), c.steps.end(),
                     [&](const ChainStep& s) { return abs(s.degree) <= deg_bound; });
}

ComponentDescriptor label_two_step(const ModuliParams& p, Int k, const TwoStepDatum& t) {
  ExtensionChain chain = make_two_step(p, t.r1, t.d1, t.a);
  const Int dim = two_step_dimension(p, t.r1, t.d1, t.a);
  const Int expected = expected_dimension(p, k);
  const Int gap = t.r1 * p.d() - p.r() * t.d1;
  const Int threshold = equality_threshold(p, t.r1);

  ComponentDescriptor out{ComponentKind::kNotComponent, std::move(chain), k, dim, expected, true,
                          GenericImage::kUnknown, ProofStatus::kProvedNotComponent};
  if (gap == threshold) {
    out.kind = ComponentKind::kObstructedExpected;
    out.generic_image = GenericImage::kGeneric;
    out.status = ProofStatus::kProvedComponent;
  } else if (gap < threshold) {
    out.kind = ComponentKind::kObstructedCandidate;
    out.generic_image = GenericImage::kNonGeneric;
    // Rank two admits no further splitting of the generic fiber, which settles componenthood.
    out.status = p.r() == 2 ? ProofStatus::kProvedComponent : ProofStatus::kCandidate;
  }
  check_invariants(out);
  if ((gap < threshold) != (dim > expected)) {
    throw InvariantError("two-step labelling disagrees with the dimension comparison");
  }
  return out;
}

// All rank vectors (r_1..r_l), r_i >= 1, summing to r.
void for_each_composition(Int r, std::size_t parts, std::vector<Int>& prefix,
                          const std::function<void(const std::vector<Int>&)>& fn) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(r);
    fn(prefix);
    prefix.pop_back();
    return;
  }
  const Int reserve = Int(static_cast<std::int64_t>(parts - prefix.size() - 1));
  for (Int part = 1; part <= r - reserve; ++part) {
    prefix.push_back(part);
    for_each_composition(r - part, parts, prefix, fn);
    prefix.pop_back();
  }
}

// All a_j >= 1 with sum_j weights[j] * a_j = total.
void for_each_twist_vector(const std::vector<Int>& weights, std::size_t j, Int remaining, std::vector<Int>& twists,
                           const std::function<void(const std::vector<Int>&)>& fn) {
  if (j == weights.size()) {
    if (remaining == 0) fn(twists);
    return;
  }
  Int later = 0;
  for (std::size_t m = j + 1; m < weights.size(); ++m) later += weights[m];
  for (Int a = 1; weights[j] * a + later <= remaining; ++a) {
    twists.push_back(a);
    for_each_twist_vector(weights, j + 1, remaining - weights[j] * a, twists, fn);
    twists.pop_back();
  }
}

// Degree vectors for a fixed rank vector, built through the partial sums D_j.
// hk = sum_j (R_j d - D_j r) a_j with every coefficient positive, so each
// coefficient lies in [1, hk - (l - 2)], which makes the search finite.
void for_each_chain_of_degree(const ModuliParams& p, Int hk, const std::vector<Int>& ranks,
                              const std::function<void(const ExtensionChain&)>& fn) {
  const std::size_t l = ranks.size();
  const Int max_coeff = hk - Int(static_cast<std::int64_t>(l - 2));
  if (max_coeff < 1) return;
  std::vector<ChainStep> steps;
  std::vector<Int> coeffs;
  std::function<void(Int, Int)> rec = [&](Int rank_prefix, Int deg_prefix) {
    const std::size_t j = steps.size();
    if (j + 1 == l) {
      ChainStep last{ranks[j], p.d() - deg_prefix};
      if (last.degree * steps.back().rank <= steps.back().degree * last.rank) return;
      steps.push_back(last);
      std::vector<Int> twists;
      for_each_twist_vector(coeffs, 0, hk, twists, [&](const std::vector<Int>& a) {
        fn(ExtensionChain{p, steps, a});
      });
      steps.pop_back();
      return;
    }
    const Int rank_next = rank_prefix + ranks[j];
    // 1 <= R_j d - D_j r <= max_coeff
    const Int lo = ceil_div(rank_next * p.d() - max_coeff, p.r());
    const Int hi = floor_div(rank_next * p.d() - 1, p.r());
    for (Int deg_next = lo; deg_next <= hi; ++deg_next) {
      ChainStep step{ranks[j], deg_next - deg_prefix};
      if (j > 0 && step.degree * steps.back().rank <= steps.back().degree * step.rank) continue;
      steps.push_back(step);
      coeffs.push_back(rank_next * p.d() - deg_next * p.r());
      rec(rank_next, deg_next);
      coeffs.pop_back();
      steps.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace

std::string_view to_string(ComponentKind k) { return kKindNames.at(static_cast<std::size_t>(k)); }
std::string_view to_string(GenericImage g) { return kImageNames.at(static_cast<std::size_t>(g)); }
std::string_view to_string(ProofStatus s) { return kStatusNames.at(static_cast<std::size_t>(s)); }
ComponentKind parse_component_kind(std::string_view s) {
  return parse_enum<ComponentKind>(s, kKindNames, "component kind");
}
GenericImage parse_generic_image(std::string_view s) { return parse_enum<GenericImage>(s, kImageNames, "generic image"); }
ProofStatus parse_proof_status(std::string_view s) { return parse_enum<ProofStatus>(s, kStatusNames, "proof status"); }

void check_invariants(const ComponentDescriptor& c) {
  switch (c.kind) {
    case ComponentKind::kUnobstructedExt:
    case ComponentKind::kUnobstructedTorsion:
      if (c.dimension != c.expected_dim || c.obstructed) {
        throw InvariantError("unobstructed component must be unobstructed of expected dimension");
      }
      break;
    case ComponentKind::kObstructedExpected:
      if (c.dimension != c.expected_dim || !c.obstructed) {
        throw InvariantError("obstructed expected-dimension component has the wrong dimension");
      }
      break;
    case ComponentKind::kObstructedCandidate:
      if (c.dimension < c.expected_dim || !c.obstructed) {
        throw InvariantError("obstructed candidate below the expected dimension");
      }
      break;
    case ComponentKind::kNotComponent:
      if (c.dimension >= c.expected_dim) throw InvariantError("non-component reaches the expected dimension");
      if (c.status != ProofStatus::kProvedNotComponent) throw InvariantError("non-component with wrong status");
      break;
  }
  if (c.dimension < c.expected_dim && c.status != ProofStatus::kProvedNotComponent) {
    throw InvariantError("family below the expected dimension labelled as a component");
  }
}

bool descriptor_less(const ComponentDescriptor& a, const ComponentDescriptor& b) { return sort_key(a) < sort_key(b); }

std::vector<ComponentDescriptor> enumerate_unobstructed(const ModuliParams& p, Int k) {
  const Int expected = expected_dimension(p, k);
  std::vector<ComponentDescriptor> out;
  for (const DiophSolution& s : solve_dioph(p, k)) {
    auto make = [&](ComponentKind kind, FamilyDatum datum, Int dim) {
      ComponentDescriptor c{kind, std::move(datum), k, dim, expected, false, GenericImage::kGeneric,
                            ProofStatus::kProvedComponent};
      check_invariants(c);
      out.push_back(std::move(c));
    };
    if (s.r1 > 0) {
      if (two_step_degree(p, s.r1, s.d1, 1) != k) throw InvariantError("two-step degree differs from k");
      make(ComponentKind::kUnobstructedExt, make_two_step(p, s.r1, s.d1, 1), two_step_dimension(p, s.r1, s.d1, 1));
    } else {
      TorsionDatum td{p, k / p.r_bar(), 1};
      if (torsion_degree(td) != k) throw InvariantError("torsion degree differs from k");
      make(ComponentKind::kUnobstructedTorsion, td, torsion_dimension(td));
    }
  }
  std::sort(out.begin(), out.end(), descriptor_less);
  return out;
}

std::vector<DivisibilityCheck> divisibility_table(const ModuliParams& p, Int k) {
  if (k < 1) throw ParameterError("k must be at least 1");
  const Int hk = p.h() * k;
  std::vector<DivisibilityCheck> rows;
  for (Int r1 = 1; r1 < p.r(); ++r1) {
    DivisibilityCheck row{r1, equality_threshold(p, r1), false, false, std::nullopt, std::nullopt};
    row.literal_divides = divides(row.threshold, k);
    // r1 d - r d1 = threshold needs an integral d1; hk = a * threshold needs a >= 2.
    if (divides(p.r(), r1 * p.d() - row.threshold) && divides(row.threshold, hk) && hk / row.threshold >= 2) {
      row.constructive = true;
      row.d1 = (r1 * p.d() - row.threshold) / p.r();
      row.a = hk / row.threshold;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<ComponentDescriptor> enumerate_obstructed_expected(const ModuliParams& p, Int k) {
  std::vector<ComponentDescriptor> out;
  for (const DivisibilityCheck& row : divisibility_table(p, k)) {
    if (!row.constructive) continue;
    ComponentDescriptor c = label_two_step(p, k, {row.r1, *row.d1, *row.a});
    if (c.kind != ComponentKind::kObstructedExpected || c.dimension != c.expected_dim) {
      throw InvariantError("equality-case family is not of expected dimension");
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<TwoStepDatum> two_step_data_of_degree(const ModuliParams& p, Int k, Int min_twist) {
  if (k < 1) throw ParameterError("k must be at least 1");
  const Int hk = p.h() * k;
  std::vector<TwoStepDatum> out;
  for (Int r1 = 1; r1 < p.r(); ++r1) {
    for (Int gap : positive_divisors(hk)) {
      const Int a = hk / gap;
      if (a < min_twist) continue;
      if (!divides(p.r(), r1 * p.d() - gap)) continue;
      out.push_back({r1, (r1 * p.d() - gap) / p.r(), a});
    }
  }
  return out;
}

std::vector<TorsionDatum> torsion_data_of_degree(const ModuliParams& p, Int k, Int min_twist) {
  if (k < 1) throw ParameterError("k must be at least 1");
  std::vector<TorsionDatum> out;
  if (!divides(p.r_bar(), k)) return out;
  const Int m = k / p.r_bar();
  for (Int a : positive_divisors(m)) {
    if (a >= min_twist) out.push_back({p, m / a, a});
  }
  return out;
}

std::vector<MixedDatum> mixed_data_of_degree(const ModuliParams& p, Int k) {
  if (k < 1) throw ParameterError("k must be at least 1");
  const Int hk = p.h() * k;
  std::vector<MixedDatum> out;
  for (Int r1 = 1; r1 < p.r(); ++r1) {
    if (!divides(p.r(), r1 * p.d() - hk)) continue;
    // hk = (r1 d2 - r2 d1) + (r + r1) t with the slope gap at least 1.
    for (Int t = 1; (p.r() + r1) * t <= hk - 1; ++t) {
      const Int d1 = (r1 * p.d() - hk + p.r() * t) / p.r();
      MixedDatum m{p, r1, d1, p.r() - r1, p.d() - d1 - t, t};
      validate(m);
      out.push_back(m);
    }
  }
  return out;
}

CandidateResult enumerate_candidates(const ModuliParams& p, Int k, Int max_l, Int deg_bound) {
  if (k < 1) throw ParameterError("k must be at least 1");
  if (max_l < 2) throw ParameterError("max chain length must be at least 2");
  if (deg_bound < 0) throw ParameterError("degree bound must be non-negative");
  CandidateResult result;
  const Int expected = expected_dimension(p, k);

  for (const TwoStepDatum& t : two_step_data_of_degree(p, k, 2)) {
    if (abs(t.d1) > deg_bound || abs(p.d() - t.d1) > deg_bound) {
      result.incomplete = true;
      continue;
    }
    result.descriptors.push_back(label_two_step(p, k, t));
  }

  const Int hk = p.h() * k;
  const Int longest = std::min(max_l, p.r());
  for (Int l = 3; l <= longest; ++l) {
    std::vector<Int> prefix;
    for_each_composition(p.r(), static_cast<std::size_t>(l.value()), prefix, [&](const std::vector<Int>& ranks) {
      for_each_chain_of_degree(p, hk, ranks, [&](const ExtensionChain& chain) {
        if (!within(chain, deg_bound)) {
          result.incomplete = true;
          return;
        }
        if (multi_step_degree(chain) != k) throw InvariantError("enumerated chain has the wrong degree");
        const Int dim = multi_step_dimension(chain);
        ComponentDescriptor c{ComponentKind::kNotComponent, chain, k, dim, expected, true,
                              GenericImage::kUnknown, ProofStatus::kProvedNotComponent};
        if (dim >= expected) {
          c.kind = ComponentKind::kObstructedCandidate;
          c.generic_image = GenericImage::kNonGeneric;
          c.status = ProofStatus::kCandidate;
        }
        check_invariants(c);
        result.descriptors.push_back(std::move(c));
      });
    });
  }
  std::sort(result.descriptors.begin(), result.descriptors.end(), descriptor_less);
  return result;
}

std::vector<ComponentDescriptor> enumerate_non_components(const ModuliParams& p, Int k) {
  const Int expected = expected_dimension(p, k);
  std::vector<ComponentDescriptor> out;
  for (const TorsionDatum& td : torsion_data_of_degree(p, k, 2)) {
    ComponentDescriptor c{ComponentKind::kNotComponent, td, k, torsion_dimension(td), expected, true,
                          GenericImage::kUnknown, ProofStatus::kProvedNotComponent};
    check_invariants(c);
    out.push_back(std::move(c));
  }
  for (const MixedDatum& m : mixed_data_of_degree(p, k)) {
    const MixedResult res = mixed_dimension(m);
    if (res.k != k) throw InvariantError("enumerated mixed family has the wrong degree");
    // The generic splitting type is unbalanced only at D; obstruction status is not tracked.
    ComponentDescriptor c{ComponentKind::kNotComponent, m, k, res.dimension, expected, true,
                          GenericImage::kUnknown, ProofStatus::kProvedNotComponent};
    check_invariants(c);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), descriptor_less);
  return out;
}

ClassificationReport classify(const ModuliParams& p, Int k, const ClassifyOptions& options) {
  if (k < 1) throw ParameterError("k must be at least 1");
  ClassificationReport report{p, k, options, {}, divisibility_table(p, k), {}, false, {}};

  auto add_all = [&](std::vector<ComponentDescriptor> batch) {
    for (ComponentDescriptor& c : batch) {
      auto same = std::find_if(report.components.begin(), report.components.end(),
                               [&](const ComponentDescriptor& e) { return e.datum == c.datum; });
      if (same == report.components.end()) {
        report.components.push_back(std::move(c));
      } else if (same->kind != c.kind) {
        throw InvariantError("one family received two different labels");
      }
    }
  };
  add_all(enumerate_unobstructed(p, k));
  add_all(enumerate_obstructed_expected(p, k));
  if (options.include_candidates) {
    CandidateResult cand = enumerate_candidates(p, k, options.max_l, options.effective_deg_bound(p));
    report.incomplete = cand.incomplete;
    add_all(std::move(cand.descriptors));
  }
  if (options.include_mixed) add_all(enumerate_non_components(p, k));
  std::sort(report.components.begin(), report.components.end(), descriptor_less);

  ClassificationTotals& t = report.totals;
  for (const ComponentDescriptor& c : report.components) {
    switch (c.kind) {
      case ComponentKind::kUnobstructedExt:
      case ComponentKind::kUnobstructedTorsion:
        ++t.unobstructed;
        break;
      case ComponentKind::kObstructedExpected:
        ++t.obstructed_expected;
        break;
      case ComponentKind::kObstructedCandidate:
        if (c.status == ProofStatus::kProvedComponent) {
          ++t.proved_nonexpected;
        } else {
          ++t.candidates;
        }
        break;
      case ComponentKind::kNotComponent:
        ++t.not_component;
        break;
    }
  }
  t.expected_dimension_components = t.unobstructed + t.obstructed_expected;
  if (t.unobstructed != p.h()) throw InvariantError("unobstructed component count differs from h");

  for (const DivisibilityCheck& row : report.divisibility) {
    if (row.agree()) continue;
    report.warnings.push_back(
        "r1=" + std::to_string(row.r1.value()) + ": literal reading '" + std::to_string(row.threshold.value()) +
        " divides k' is " + (row.literal_divides ? "true" : "false") +
        " but the constructive equality-case test (integral d1, a >= 2 with hk = a*" +
        std::to_string(row.threshold.value()) + ") is " + (row.constructive ? "true" : "false") +
        "; the constructive test decides the output");
  }
  if (report.incomplete) {
    report.warnings.push_back("candidate enumeration incomplete: some admissible data exceed the degree bound " +
                              std::to_string(options.effective_deg_bound(p).value()));
  }
  return report;
}

}  // namespace modrc
