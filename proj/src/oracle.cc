#include "modrc/oracle.h"

#include <algorithm>
#include <functional>
#include <sstream>

#include "modrc/families.h"
#include "modrc/parallel.h"
#include "modrc/params.h"
#include "modrc/classifier.h"
#include "modrc/rng.h"

namespace modrc {
namespace {

using Tuple = std::vector<std::int64_t>;

// Per-worker accumulator. Keeps only the `cap` lexicographically smallest
// counterexamples, so merging partial tallies in any order gives the same result.
struct Tally {
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  std::vector<Tuple> examples;

  void fail(Tuple t) {
    ++failures;
    examples.push_back(std::move(t));
    if (examples.size() > 4 * kDefaultCounterexampleCap) trim();
  }
  void trim() {
    std::sort(examples.begin(), examples.end());
    examples.erase(std::unique(examples.begin(), examples.end()), examples.end());
    if (examples.size() > kDefaultCounterexampleCap) examples.resize(kDefaultCounterexampleCap);
  }
  void merge(Tally&& o) {
    trials += o.trials;
    failures += o.failures;
    examples.insert(examples.end(), o.examples.begin(), o.examples.end());
    trim();
  }
};

VerificationReport finish(std::string name, std::string layout, Tally tally, std::string notes,
                          bool expect_failure = false) {
  tally.trim();
  VerificationReport r;
  r.suite_name = std::move(name);
  r.trials = tally.trials;
  r.failures = tally.failures;
  r.tuple_layout = std::move(layout);
  r.counterexamples = std::move(tally.examples);
  r.pass = tally.failures == 0;
  r.expect_failure = expect_failure;
  r.notes = std::move(notes);
  return r;
}

Tally merge_all(std::vector<Tally> parts) {
  Tally total;
  for (Tally& t : parts) total.merge(std::move(t));
  return total;
}

Tuple to_tuple(std::initializer_list<Int> head, const std::vector<Int>& a = {}, const std::vector<Int>& b = {},
               const std::vector<Int>& c = {}) {
  Tuple t;
  for (Int x : head) t.push_back(x.value());
  for (const auto* v : {&a, &b, &c}) {
    for (Int x : *v) t.push_back(x.value());
  }
  return t;
}

// A_ik with the claim's convention; written out here, separately from the families module.
Int defect(Int g, Int ri, Int di, Int rk, Int dk) { return ri * dk - rk * di - ri * rk * (g - 1); }

// Advances `v` through [lo, hi]^n like an odometer; false once exhausted.
bool next_vector(std::vector<Int>& v, Int lo, Int hi) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < hi) {
      ++v[i];
      return true;
    }
    v[i] = lo;
  }
  return false;
}

}  // namespace

ThreeTermValues evaluate_three_term(Int g, const std::array<Int, 3>& r, const std::array<Int, 3>& d) {
  const Int a12 = defect(g, r[0], d[0], r[1], d[1]);
  const Int a23 = defect(g, r[1], d[1], r[2], d[2]);
  const Int a13 = defect(g, r[0], d[0], r[2], d[2]);
  const Int triple = r[0] * r[1] * r[2] * (g - 1);
  return {r[2] * a12 - r[0] * a23, r[1] * a13 - triple, r[2] * a12 + r[0] * a23, r[1] * a13 - triple};
}

IdentityReports verify_three_term_identities(const IdentityRanges& ranges, std::int64_t trials, std::uint64_t seed) {
  if (trials < 0) throw ParameterError("trial count must be non-negative");
  if (ranges.rank_max < 1 || ranges.deg_max < 0 || ranges.g_max < 2) throw ParameterError("bad identity ranges");
  const std::size_t chunks = 64;
  auto parts = parallel_map(chunks, [&](std::size_t c) {
    std::pair<Tally, Tally> out;  // (plus, minus)
    for (std::int64_t i = static_cast<std::int64_t>(c); i < trials; i += static_cast<std::int64_t>(chunks)) {
      SplitMix64 rng = SplitMix64::for_instance(seed, static_cast<std::uint64_t>(i));
      const Int g = rng.uniform(2, ranges.g_max.value());
      std::array<Int, 3> r, d;
      for (int j = 0; j < 3; ++j) {
        r[j] = rng.uniform(1, ranges.rank_max.value());
        d[j] = rng.uniform(-ranges.deg_max.value(), ranges.deg_max.value());
      }
      const ThreeTermValues v = evaluate_three_term(g, r, d);
      const Tuple t = to_tuple({g, r[0], r[1], r[2], d[0], d[1], d[2]});
      ++out.first.trials;
      ++out.second.trials;
      if (v.plus_lhs != v.plus_rhs) out.first.fail(t);
      if (v.minus_lhs != v.minus_rhs) out.second.fail(t);
    }
    return out;
  });
  Tally plus, minus;
  for (auto& [s, p] : parts) {
    plus.merge(std::move(s));
    minus.merge(std::move(p));
  }
  const std::string layout = "g,r1,r2,r3,d1,d2,d3";
  const std::string seeds = "seed=" + std::to_string(seed) + ", trials=" + std::to_string(trials);
  IdentityReports out;
  out.plus = finish("identities.plus", layout, std::move(plus),
                      "r_p A_mn + r_m A_np = r_n A_mp - r_m r_n r_p (g-1); " + seeds);
  out.minus = finish("identities.minus", layout, std::move(minus),
                       "r_n A_lm - r_l A_mn = r_m A_ln - r_l r_m r_n (g-1) is expected to fail; " + seeds,
                       /*expect_failure=*/true);
  return out;
}

bool claim_hypothesis_holds(Int g, const std::vector<Int>& ranks, const std::vector<Int>& degrees) {
  Int r = 0, d = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    r += ranks[i];
    d += degrees[i];
  }
  Int rank_prefix = 0, deg_prefix = 0;
  for (std::size_t j = 0; j + 1 < ranks.size(); ++j) {
    rank_prefix += ranks[j];
    deg_prefix += degrees[j];
    const Int rest_rank = r - rank_prefix, rest_deg = d - deg_prefix;
    if (rank_prefix * rest_deg - rest_rank * deg_prefix - rest_rank * rank_prefix * (g - 1) < 0) return false;
  }
  return true;
}

Int claim_margin(Int g, const std::vector<Int>& ranks, const std::vector<Int>& degrees) {
  const std::size_t l = ranks.size();
  Int r = 0;
  for (Int x : ranks) r += x;
  Int lhs = 0;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 2; j < l; ++j) {
      lhs += Int(static_cast<std::int64_t>(j - i - 1)) * defect(g, ranks[i], degrees[i], ranks[j], degrees[j]);
    }
  }
  Int triples = 0;
  for (std::size_t m = 0; m < l; ++m) {
    for (std::size_t n = m + 1; n < l; ++n) {
      for (std::size_t p = n + 1; p < l; ++p) triples += ranks[m] * ranks[n] * ranks[p];
    }
  }
  return r * lhs - (g - 1) * triples;
}

VerificationReport verify_claim_inequality(const ClaimBounds& b) {
  if (b.max_l < 3 || b.rank_bound < 1 || b.deg_bound < 0 || b.g_bound < 2) throw ParameterError("bad claim bounds");
  // One task per (l, g, rank vector); each task sweeps all degree vectors.
  struct Task {
    Int g;
    std::vector<Int> ranks;
  };
  std::vector<Task> tasks;
  for (Int l = 3; l <= b.max_l; ++l) {
    for (Int g = 2; g <= b.g_bound; ++g) {
      std::vector<Int> ranks(static_cast<std::size_t>(l.value()), 1);
      do {
        tasks.push_back({g, ranks});
      } while (next_vector(ranks, 1, b.rank_bound));
    }
  }
  auto parts = parallel_map(tasks.size(), [&](std::size_t i) {
    const Task& task = tasks[i];
    std::pair<Tally, std::int64_t> out{Tally{}, 0};
    std::vector<Int> degrees(task.ranks.size(), -b.deg_bound);
    do {
      ++out.second;
      if (!claim_hypothesis_holds(task.g, task.ranks, degrees)) continue;
      ++out.first.trials;
      if (claim_margin(task.g, task.ranks, degrees) < 0) {
        out.first.fail(to_tuple({Int(static_cast<std::int64_t>(task.ranks.size())), task.g}, task.ranks, degrees));
      }
    } while (next_vector(degrees, -b.deg_bound, b.deg_bound));
    return out;
  });
  Tally total;
  std::int64_t scanned = 0;
  for (auto& [t, s] : parts) {
    total.merge(std::move(t));
    scanned += s;
  }
  std::ostringstream notes;
  notes << "scanned " << scanned << " instances (l in [3," << b.max_l << "], ranks <= " << b.rank_bound
        << ", |d_i| <= " << b.deg_bound << ", g in [2," << b.g_bound << "]); " << total.trials
        << " satisfy every subbundle inequality; claim compared after multiplying by r";
  return finish("claim", "l,g,r_1..r_l,d_1..d_l", std::move(total), notes.str());
}

Int degree_partial_sum_form(const std::vector<Int>& ranks, const std::vector<Int>& degrees,
                            const std::vector<Int>& twists) {
  Int r = 0, d = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    r += ranks[i];
    d += degrees[i];
  }
  Int total = 0, rank_prefix = 0, deg_prefix = 0;
  for (std::size_t j = 0; j + 1 < ranks.size(); ++j) {
    rank_prefix += ranks[j];
    deg_prefix += degrees[j];
    total += (rank_prefix * d - deg_prefix * r) * twists[j];
  }
  return total;
}

Int degree_pairwise_form(const std::vector<Int>& ranks, const std::vector<Int>& degrees,
                         const std::vector<Int>& twists) {
  Int total = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    Int span = 0;
    for (std::size_t j = i + 1; j < ranks.size(); ++j) {
      span += twists[j - 1];
      total += (ranks[i] * degrees[j] - ranks[j] * degrees[i]) * span;
    }
  }
  return total;
}

VerificationReport verify_degree_telescoping(std::int64_t trials, std::uint64_t seed, const TelescopingBounds& b) {
  if (trials < 0) throw ParameterError("trial count must be non-negative");
  if (b.max_l < 2 || b.rank_max < 1 || b.deg_max < 0 || b.twist_max < 1) throw ParameterError("bad telescoping bounds");
  const std::size_t chunks = 64;
  auto parts = parallel_map(chunks, [&](std::size_t c) {
    Tally tally;
    for (std::int64_t i = static_cast<std::int64_t>(c); i < trials; i += static_cast<std::int64_t>(chunks)) {
      SplitMix64 rng = SplitMix64::for_instance(seed, static_cast<std::uint64_t>(i));
      const auto l = static_cast<std::size_t>(rng.uniform(2, b.max_l.value()));
      std::vector<Int> ranks(l), degrees(l), twists(l - 1);
      for (std::size_t j = 0; j < l; ++j) {
        ranks[j] = rng.uniform(1, b.rank_max.value());
        degrees[j] = rng.uniform(-b.deg_max.value(), b.deg_max.value());
      }
      for (std::size_t j = 0; j + 1 < l; ++j) twists[j] = rng.uniform(1, b.twist_max.value());
      ++tally.trials;
      if (degree_partial_sum_form(ranks, degrees, twists) != degree_pairwise_form(ranks, degrees, twists)) {
        tally.fail(to_tuple({Int(static_cast<std::int64_t>(l))}, ranks, degrees, twists));
      }
    }
    return tally;
  });
  return finish("telescoping", "l,r_1..r_l,d_1..d_l,a_1..a_{l-1}", merge_all(std::move(parts)),
                "partial-sum form vs pairwise form of hk, exact; seed=" + std::to_string(seed) +
                    ", trials=" + std::to_string(trials));
}

VerificationReport verify_dimension_laws(const DimensionGrid& grid) {
  if (grid.g_min < 2 || grid.r_min < 2 || grid.k_max < 1 || grid.twist_max < 1) {
    throw ParameterError("bad dimension grid");
  }
  // law codes: 1 two-step a=1 equals expected, 2 torsion a=1 equals expected,
  // 3 mixed below expected, 4 torsion a>=2 below expected, 5 two-step a>=2
  // against the equality threshold, 6 l=2 chains agree with two-step formulas,
  // 7 multi-step dimension >= expected iff sum A_ij (span-1) <= 0.
  constexpr std::size_t kLaws = 8;
  struct Cell {
    Int g, r, d;
  };
  std::vector<Cell> cells;
  for (Int g = grid.g_min; g <= grid.g_max; ++g) {
    for (Int r = grid.r_min; r <= grid.r_max; ++r) {
      for (Int d = grid.d_min; d <= grid.d_max; ++d) cells.push_back({g, r, d});
    }
  }
  using Counts = std::array<std::int64_t, kLaws>;
  auto grid_parts = parallel_map(cells.size(), [&](std::size_t i) {
    const Cell& cell = cells[i];
    const ModuliParams p = derive_params(cell.g, cell.r, cell.d);
    const Int hk_max = p.h() * grid.k_max;
    std::pair<Tally, Counts> out{};
    auto check = [&](int law, bool ok, std::initializer_list<Int> extra) {
      ++out.first.trials;
      ++out.second[static_cast<std::size_t>(law)];
      if (!ok) {
        Tuple t{law, cell.g.value(), cell.r.value(), cell.d.value()};
        for (Int x : extra) t.push_back(x.value());
        out.first.fail(std::move(t));
      }
    };
    for (Int r1 = 1; r1 < p.r(); ++r1) {
      const Int r2 = p.r() - r1;
      const Int threshold = r1 * r2 * (p.g() - 1);
      // 1 <= r1 d - r d1 <= h k_max
      const Int d1_lo = ceil_div(r1 * p.d() - hk_max, p.r());
      const Int d1_hi = floor_div(r1 * p.d() - 1, p.r());
      for (Int d1 = d1_lo; d1 <= d1_hi; ++d1) {
        const Int gap = r1 * p.d() - p.r() * d1;
        for (Int a = 1; a * gap <= hk_max; ++a) {
          const Int k = two_step_degree(p, r1, d1, a);
          const Int dim = two_step_dimension(p, r1, d1, a);
          const Int expected = expected_dimension(p, k);
          if (a == 1) {
            check(1, dim == expected, {r1, d1, a});
          } else {
            check(5, (dim >= expected) == (threshold >= gap) && (dim == expected) == (threshold == gap), {r1, d1, a});
          }
          const ExtensionChain chain = make_two_step(p, r1, d1, a);
          check(6, multi_step_degree(chain) == k && multi_step_dimension(chain) == dim, {r1, d1, a});
        }
      }
      // Mixed: hk = gap' + (r + r1) t with gap' = r1 d2 - r2 d1 >= 1.
      for (Int t = 1; (p.r() + r1) * t + 1 <= hk_max; ++t) {
        const Int lo = ceil_div(r1 * (p.d() - t) - hk_max, p.r());
        const Int hi = floor_div(r1 * (p.d() - t) - 1, p.r());
        for (Int d1 = lo; d1 <= hi; ++d1) {
          const MixedDatum m{p, r1, d1, r2, p.d() - d1 - t, t};
          if (r1 * m.d2 - r2 * d1 < 1) continue;
          const MixedResult res = mixed_dimension(m);
          if (res.k > grid.k_max) continue;
          check(3, res.dimension < expected_dimension(p, res.k), {r1, d1, t});
        }
      }
    }
    for (Int a = 1; a <= grid.k_max; ++a) {
      for (Int t = 1; a * p.r_bar() * t <= grid.k_max; ++t) {
        const TorsionDatum td{p, t, a};
        const Int k = torsion_degree(td);
        const Int dim = torsion_dimension(td);
        const Int expected = expected_dimension(p, k);
        check(a == 1 ? 2 : 4, a == 1 ? dim == expected : dim < expected, {t, a});
      }
    }
    return out;
  });

  // Multi-step chains: every slope-increasing chain in the claim range, twists up to twist_max.
  const ClaimBounds& cb = grid.chains;
  struct ChainTask {
    Int g;
    std::vector<Int> ranks;
  };
  std::vector<ChainTask> chain_tasks;
  for (Int l = 3; l <= cb.max_l; ++l) {
    for (Int g = 2; g <= cb.g_bound; ++g) {
      std::vector<Int> ranks(static_cast<std::size_t>(l.value()), 1);
      do {
        chain_tasks.push_back({g, ranks});
      } while (next_vector(ranks, 1, cb.rank_bound));
    }
  }
  auto chain_parts = parallel_map(chain_tasks.size(), [&](std::size_t i) {
    const ChainTask& task = chain_tasks[i];
    const std::size_t l = task.ranks.size();
    Int r = 0;
    for (Int x : task.ranks) r += x;
    std::pair<Tally, Counts> out{};
    std::vector<Int> degrees(l, -cb.deg_bound);
    do {
      bool increasing = true;
      for (std::size_t j = 0; j + 1 < l && increasing; ++j) {
        increasing = task.ranks[j] * degrees[j + 1] - task.ranks[j + 1] * degrees[j] > 0;
      }
      if (!increasing) continue;
      Int d = 0;
      for (Int x : degrees) d += x;
      const ModuliParams p = derive_params(task.g, r, d);
      ExtensionChain chain{p, {}, {}};
      for (std::size_t j = 0; j < l; ++j) chain.steps.push_back({task.ranks[j], degrees[j]});
      std::vector<Int> twists(l - 1, 1);
      do {
        chain.twists = twists;
        const Int k = multi_step_degree(chain);
        const bool at_least_expected = multi_step_dimension(chain) >= expected_dimension(p, k);
        Int form = 0;
        for (std::size_t a = 0; a < l; ++a) {
          Int span = 0;
          for (std::size_t b = a + 1; b < l; ++b) {
            span += twists[b - 1];
            form += defect(task.g, task.ranks[a], degrees[a], task.ranks[b], degrees[b]) * (span - 1);
          }
        }
        ++out.first.trials;
        ++out.second[7];
        if (at_least_expected != (form <= 0)) {
          out.first.fail(to_tuple({7, task.g, r, d}, task.ranks, degrees, twists));
        }
      } while (next_vector(twists, 1, grid.twist_max));
    } while (next_vector(degrees, -cb.deg_bound, cb.deg_bound));
    return out;
  });

  Tally total;
  Counts counts{};
  for (auto* parts : {&grid_parts, &chain_parts}) {
    for (auto& [t, c] : *parts) {
      total.merge(std::move(t));
      for (std::size_t i = 0; i < kLaws; ++i) counts[i] += c[i];
    }
  }
  std::ostringstream notes;
  notes << "checks per law:";
  for (std::size_t i = 1; i < kLaws; ++i) notes << " law" << i << "=" << counts[i];
  notes << "; laws: 1 two-step a=1 equals expected, 2 torsion a=1 equals expected, 3 mixed below expected,"
           " 4 torsion a>=2 below expected, 5 two-step a>=2 vs r1(r-r1)(g-1) threshold,"
           " 6 l=2 chain agrees with two-step, 7 multi-step excess-form equivalence";
  return finish("dimensions", "law,g,r,d,law-specific fields...", std::move(total), notes.str());
}

VerificationReport verify_component_counts(const CountGrid& grid) {
  if (grid.g_min < 2 || grid.r_min < 2 || grid.k_max < 1) throw ParameterError("bad count grid");
  struct Cell {
    Int g, r, d;
  };
  std::vector<Cell> cells;
  for (Int g = grid.g_min; g <= grid.g_max; ++g) {
    for (Int r = grid.r_min; r <= grid.r_max; ++r) {
      for (Int d = grid.d_min; d <= grid.d_max; ++d) cells.push_back({g, r, d});
    }
  }
  auto parts = parallel_map(cells.size(), [&](std::size_t i) {
    const Cell& c = cells[i];
    const ModuliParams p = derive_params(c.g, c.r, c.d);
    const Int h = gcd(c.r, c.d);
    Tally tally;
    for (Int k = 1; k <= grid.k_max; ++k) {
      const auto comps = enumerate_unobstructed(p, k);
      const Int expected = 2 * h * k + (c.r * c.r - 1) * (c.g - 1);
      bool ok = Int(static_cast<std::int64_t>(comps.size())) == h;
      for (const ComponentDescriptor& d : comps) ok = ok && d.dimension == expected && d.k == k && !d.obstructed;
      ++tally.trials;
      if (!ok) tally.fail({c.g.value(), c.r.value(), c.d.value(), k.value(), static_cast<std::int64_t>(comps.size())});
    }
    return tally;
  });
  return finish("counts", "g,r,d,k,count", merge_all(std::move(parts)),
                "unobstructed components per (g,r,d,k) must number gcd(r,d), each of dimension 2hk + (r^2-1)(g-1)");
}

}  // namespace modrc
