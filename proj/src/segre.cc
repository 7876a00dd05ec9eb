#include "modrc/segre.h"

#include <optional>
#include <string>

namespace modrc {
namespace {

void check_r_prime(const ModuliParams& p, Int r_prime) {
  if (r_prime < 1 || r_prime > p.r() - 1) {
    throw ParameterError("r' must lie in [1, r-1] (got " + std::to_string(r_prime.value()) + ")");
  }
}

Int segre_bound(const ModuliParams& p, Int r_prime) { return r_prime * (p.r() - r_prime) * (p.g() - 1); }

// Smallest v >= floor with v = residue (mod m).
Int lift_residue(Int floor, Int residue, Int m) { return floor + mod(residue - floor, m); }

}  // namespace

Int generic_segre(const ModuliParams& p, Int r_prime) {
  check_r_prime(p, r_prime);
  return lift_residue(segre_bound(p, r_prime), r_prime * p.d(), p.r());
}

SegreStratum stratum_codimension(const ModuliParams& p, Int r_prime, Int s) {
  check_r_prime(p, r_prime);
  if (s <= 0) throw ParameterError("Segre stratum needs s > 0 (got " + std::to_string(s.value()) + ")");
  if (mod(s - r_prime * p.d(), p.r()) != 0) {
    throw ParameterError("no Segre stratum with s=" + std::to_string(s.value()) + ": s must be congruent to r'd=" +
                         std::to_string((r_prime * p.d()).value()) + " modulo r=" + std::to_string(p.r().value()));
  }
  const Int bound = segre_bound(p, r_prime);
  return {r_prime, s, s <= bound ? bound - s : Int(0), s + p.r()};
}

std::vector<SegreStratum> segre_strata(const ModuliParams& p, Int r_prime) {
  const Int top = generic_segre(p, r_prime);
  std::vector<SegreStratum> out;
  for (Int s = lift_residue(1, r_prime * p.d(), p.r()); s <= top; s += p.r()) {
    out.push_back(stratum_codimension(p, r_prime, s));
  }
  return out;
}

std::vector<SegreTableRow> segre_table(const ModuliParams& p, std::optional<Int> r_prime) {
  std::vector<SegreTableRow> rows;
  for (Int rp = 1; rp < p.r(); ++rp) {
    if (r_prime && *r_prime != rp) continue;
    const Int codim = nonstable_codim_bound(rp, p.r() - rp, p.g());
    rows.push_back({rp, segre_bound(p, rp), generic_segre(p, rp), segre_strata(p, rp), codim, codim >= 2});
  }
  if (r_prime && rows.empty()) check_r_prime(p, *r_prime);
  return rows;
}

Int elementary_transform_segre(Int s, Int r1, Int r) {
  if (r1 < 1 || r1 > r - 1) throw ParameterError("elementary transformation needs 1 <= r1 <= r-1");
  return s + r1 - r;
}

Int nonstable_codim_bound(Int r1, Int r2, Int g) {
  if (r1 < 1 || r2 < 1) throw ParameterError("ranks must be positive");
  if (g < 2) throw ParameterError("genus must be at least 2");
  return r1 * r2 * (g - 1);
}

bool lines_avoid_nonstable(Int r1, Int r2, Int g) { return nonstable_codim_bound(r1, r2, g) >= 2; }

ConnectingDegree min_connecting_degree(const ModuliParams& p) {
  const Int r = p.r();
  std::optional<ConnectingDegree> best;
  for (Int rp = 1; rp < r; ++rp) {
    const Int threshold = (r * r - 1 - rp * (r - rp)) * (p.g() - 1);
    // hk = r'd - rd' forces hk = r'd (mod r); any such value is a multiple of h.
    const Int hk = lift_residue(threshold, rp * p.d(), r);
    const Int k = hk / p.h();
    if (!best || k < best->derived_k) {
      best = ConnectingDegree{k, 0, {rp, (rp * p.d() - hk) / r}, threshold};
    }
  }
  best->closed_form_k = divides(2, r) ? (r * r / 2 - 1) * (p.g() - 1) : (3 * r * r - 3) / 2 * (p.g() - 1);
  return *best;
}

}  // namespace modrc
