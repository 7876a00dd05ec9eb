#ifndef MODRC_PARAMS_H_
#define MODRC_PARAMS_H_

#include <vector>

#include "modrc/int.h"

namespace modrc {

/// Numerical data of the moduli space M of semistable rank-r bundles with
/// fixed determinant of degree d on a genus-g curve.
///
/// Only (g, r, d) are free; the rest is derived on construction:
///   h = gcd(r, d)  (gcd(r, 0) = r),  rBar = r / h,  dBar = d / h,
///   dim M = (r^2 - 1)(g - 1),  Fano index = 2h.
class ModuliParams {
 public:
  Int g() const { return g_; }
  Int r() const { return r_; }
  Int d() const { return d_; }
  Int h() const { return h_; }
  Int r_bar() const { return r_bar_; }
  Int d_bar() const { return d_bar_; }
  Int dim_m() const { return dim_m_; }
  Int fano_index() const { return fano_index_; }

  friend bool operator==(const ModuliParams&, const ModuliParams&) = default;

 private:
  friend ModuliParams derive_params(Int g, Int r, Int d);
  ModuliParams() = default;

  Int g_, r_, d_, h_, r_bar_, d_bar_, dim_m_, fano_index_;
};

/// Throws ParameterError unless g >= 2 and r >= 2.
ModuliParams derive_params(Int g, Int r, Int d);

/// 2hk + (r^2 - 1)(g - 1)(1 - gSource): the minimum dimension of any
/// component of the space of degree-k maps from a genus-gSource curve.
Int expected_dimension(const ModuliParams& p, Int k, Int g_source = 0);

struct DiophSolution {
  Int r1;
  Int d1;
  friend bool operator==(const DiophSolution&, const DiophSolution&) = default;
};

/// All (x, y) with dBar*x - rBar*y = k and 0 <= x < r, ascending in x.
/// There are always exactly h of them; x = 0 marks the torsion branch.
std::vector<DiophSolution> solve_dioph(const ModuliParams& p, Int k);

}  // namespace modrc

#endif  // MODRC_PARAMS_H_
