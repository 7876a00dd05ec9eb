#include "modrc/params.h"

#include <string>

namespace modrc {
namespace {

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1) via extended Euclid.
Int mod_inverse(Int a, Int m) {
  if (m == 1) return 0;
  Int old_r = mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = floor_div(old_r, r);
    Int next_r = old_r - q * r;
    old_r = r;
    r = next_r;
    Int next_s = old_s - q * s;
    old_s = s;
    s = next_s;
  }
  if (old_r != 1) throw InvariantError("mod_inverse: arguments are not coprime");
  return mod(old_s, m);
}

}  // namespace

ModuliParams derive_params(Int g, Int r, Int d) {
  if (g < 2) throw ParameterError("genus must be at least 2 (got g=" + std::to_string(g.value()) + ")");
  if (r < 2) throw ParameterError("rank must be at least 2 (got r=" + std::to_string(r.value()) + ")");
  ModuliParams p;
  p.g_ = g;
  p.r_ = r;
  p.d_ = d;
  p.h_ = gcd(r, d);
  p.r_bar_ = r / p.h_;
  p.d_bar_ = d / p.h_;
  p.dim_m_ = (r * r - 1) * (g - 1);
  p.fano_index_ = 2 * p.h_;
  return p;
}

Int expected_dimension(const ModuliParams& p, Int k, Int g_source) {
  if (k < 0) throw ParameterError("curve degree k must be non-negative");
  if (g_source < 0) throw ParameterError("source genus must be non-negative");
  return 2 * p.h() * k + p.dim_m() * (1 - g_source);
}

std::vector<DiophSolution> solve_dioph(const ModuliParams& p, Int k) {
  if (k < 1) throw ParameterError("solve_dioph requires k >= 1");
  // dBar*x = k (mod rBar) fixes x modulo rBar; the h lifts into [0, r) differ by rBar.
  Int x0 = mod(mod(k, p.r_bar()) * mod_inverse(p.d_bar(), p.r_bar()), p.r_bar());
  std::vector<DiophSolution> out;
  out.reserve(static_cast<std::size_t>(p.h().value()));
  for (Int x = x0; x < p.r(); x += p.r_bar()) {
    out.push_back({x, (p.d_bar() * x - k) / p.r_bar()});
  }
  if (Int(static_cast<std::int64_t>(out.size())) != p.h()) {
    throw InvariantError("solve_dioph: solution count differs from h");
  }
  return out;
}

}  // namespace modrc
