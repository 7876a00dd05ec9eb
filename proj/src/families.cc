#include "modrc/families.h"

#include <string>

namespace modrc {
namespace {

std::string str(Int x) { return std::to_string(x.value()); }

// Twist sum a_i + ... + a_{j-1} for 0-based step indices i < j.
Int twist_span(const std::vector<Int>& twists, std::size_t i, std::size_t j) {
  Int s = 0;
  for (std::size_t m = i; m < j; ++m) s += twists[m];
  return s;
}

Int cross(const ChainStep& lo, const ChainStep& hi) { return lo.rank * hi.degree - hi.rank * lo.degree; }

}  // namespace

void validate(const ExtensionChain& c) {
  const ModuliParams& p = c.params;
  if (c.steps.size() < 2) throw ParameterError("extension chain needs at least two steps");
  if (c.twists.size() + 1 != c.steps.size()) {
    throw ParameterError("extension chain with l steps needs exactly l-1 twists");
  }
  Int rank_sum = 0, deg_sum = 0;
  for (const ChainStep& s : c.steps) {
    if (s.rank < 1) throw ParameterError("chain step rank must be positive (got " + str(s.rank) + ")");
    rank_sum += s.rank;
    deg_sum += s.degree;
  }
  if (rank_sum != p.r()) throw ParameterError("chain ranks sum to " + str(rank_sum) + ", expected r=" + str(p.r()));
  if (deg_sum != p.d()) throw ParameterError("chain degrees sum to " + str(deg_sum) + ", expected d=" + str(p.d()));
  for (Int a : c.twists) {
    if (a < 1) throw ParameterError("chain twist must be at least 1 (got " + str(a) + ")");
  }
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    for (std::size_t j = i + 1; j < c.steps.size(); ++j) {
      if (cross(c.steps[i], c.steps[j]) <= 0) {
        throw ParameterError("chain slopes must strictly increase (steps " + std::to_string(i + 1) + " and " +
                             std::to_string(j + 1) + ")");
      }
    }
  }
}

void validate(const TorsionDatum& td) {
  if (td.t < 1) throw ParameterError("torsion divisor degree t must be at least 1 (got " + str(td.t) + ")");
  if (td.a < 1) throw ParameterError("torsion twist a must be at least 1 (got " + str(td.a) + ")");
}

void validate(const MixedDatum& m) {
  const ModuliParams& p = m.params;
  if (m.t < 1) throw ParameterError("mixed family needs t >= 1; use a two-step family for t = 0");
  if (m.r1 < 1 || m.r2 < 1) throw ParameterError("mixed family ranks must be positive");
  if (m.r1 + m.r2 != p.r()) throw ParameterError("mixed family ranks must sum to r");
  if (m.d1 + m.d2 + m.t != p.d()) throw ParameterError("mixed family needs d1 + d2 + t = d");
  if (m.r1 * m.d2 - m.r2 * m.d1 <= 0) throw ParameterError("mixed family needs slope(E1) < slope(E2)");
}

ExtensionChain make_two_step(const ModuliParams& p, Int r1, Int d1, Int a) {
  if (r1 < 1 || r1 > p.r() - 1) throw ParameterError("two-step rank r1 must lie in [1, r-1]");
  ExtensionChain c{p, {{r1, d1}, {p.r() - r1, p.d() - d1}}, {a}};
  if (r1 * p.d() - p.r() * d1 <= 0) {
    throw ParameterError("two-step data violates d1/r1 < (d-d1)/(r-r1): r1*d - r*d1 = " +
                         str(r1 * p.d() - p.r() * d1) + " is not positive");
  }
  validate(c);
  return c;
}

Int two_step_degree(const ModuliParams& p, Int r1, Int d1, Int a) {
  make_two_step(p, r1, d1, a);
  return a * (p.d_bar() * r1 - d1 * p.r_bar());
}

Int two_step_dimension(const ModuliParams& p, Int r1, Int d1, Int a) {
  const Int k = two_step_degree(p, r1, d1, a);
  const Int r2 = p.r() - r1, d2 = p.d() - d1;
  return p.dim_m() + p.h() * k + (a - 1) * r1 * r2 * (p.g() - 1) + (r1 * d2 - r2 * d1);
}

Int torsion_degree(const TorsionDatum& td) {
  validate(td);
  return td.a * td.params.r_bar() * td.t;
}

Int torsion_dimension(const TorsionDatum& td) {
  const Int k = torsion_degree(td);
  return td.params.dim_m() + td.params.h() * k + td.params.r() * td.t;
}

MixedResult mixed_dimension(const MixedDatum& m) {
  validate(m);
  const ModuliParams& p = m.params;
  const Int hk = m.r1 * p.d() - p.r() * m.d1 + p.r() * m.t;
  const Int k = hk / p.h();
  return {k, p.dim_m() + 2 * hk - 2 * m.r1 * m.t};
}

Int multi_step_degree(const ExtensionChain& c) {
  validate(c);
  Int hk = 0;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    for (std::size_t j = i + 1; j < c.steps.size(); ++j) {
      hk += cross(c.steps[i], c.steps[j]) * twist_span(c.twists, i, j);
    }
  }
  if (!divides(c.params.h(), hk)) throw InvariantError("multi_step_degree: h does not divide hk");
  return hk / c.params.h();
}

Int multi_step_dimension(const ExtensionChain& c) {
  validate(c);
  Int slope_part = 0, rank_part = 0;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    for (std::size_t j = i + 1; j < c.steps.size(); ++j) {
      const Int span = twist_span(c.twists, i, j);
      slope_part += cross(c.steps[i], c.steps[j]) * (span + 1);
      rank_part += c.steps[i].rank * c.steps[j].rank * (span - 1);
    }
  }
  return c.params.dim_m() + slope_part + rank_part * (c.params.g() - 1);
}

bool is_unobstructed_splitting(const ExtensionChain& c) {
  return c.steps.size() == 2 && c.twists.size() == 1 && c.twists[0] == 1;
}

bool is_unobstructed_splitting(const TorsionDatum& td) { return td.a == 1; }

Int pair_defect(const ChainStep& lo, const ChainStep& hi, Int g) {
  return cross(lo, hi) - lo.rank * hi.rank * (g - 1);
}

Int chain_excess_form(const ExtensionChain& c) {
  Int total = 0;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    for (std::size_t j = i + 1; j < c.steps.size(); ++j) {
      total += pair_defect(c.steps[i], c.steps[j], c.params.g()) * (twist_span(c.twists, i, j) - 1);
    }
  }
  return total;
}

}  // namespace modrc
