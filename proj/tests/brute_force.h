// Test-only oracles. Each one searches a box exhaustively instead of using
// the closed-form or number-theoretic shortcut taken by the library.
#ifndef MODRC_TESTS_BRUTE_FORCE_H_
#define MODRC_TESTS_BRUTE_FORCE_H_

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>
#include <vector>

#include "modrc/classifier.h"
#include "modrc/segre.h"

namespace modrc::brute {

inline std::vector<DiophSolution> brute_dioph(const ModuliParams& p, Int k) {
  const Int box = abs(p.d_bar()) * p.r() + abs(k) + 1;
  std::vector<DiophSolution> out;
  for (Int x = 0; x < p.r(); ++x) {
    for (Int y = -box; y <= box; ++y) {
      if (p.d_bar() * x - p.r_bar() * y == k) out.push_back({x, y});
    }
  }
  return out;
}

inline Int brute_generic_segre(const ModuliParams& p, Int rp) {
  const Int lo = rp * (p.r() - rp) * (p.g() - 1);
  std::vector<Int> hits;
  for (Int s = lo; s < lo + p.r(); ++s) {
    if (divides(p.r(), s - rp * p.d())) hits.push_back(s);
  }
  return hits.size() == 1 ? hits.front() : Int(-1);
}

// Smallest k >= 1 such that some (r', d') has hk = r'd - rd' >= (r^2-1-r'(r-r'))(g-1),
// found by scanning k upward and d' over a box.
struct BruteConnect {
  Int k;
  Int r_prime;
};
inline BruteConnect brute_connecting(const ModuliParams& p) {
  for (Int k = 1;; ++k) {
    const Int hk = p.h() * k;
    for (Int rp = 1; rp < p.r(); ++rp) {
      const Int threshold = (p.r() * p.r() - 1 - rp * (p.r() - rp)) * (p.g() - 1);
      const Int box = abs(p.d()) * p.r() + hk + 1;
      for (Int dp = -box; dp <= box; ++dp) {
        if (rp * p.d() - p.r() * dp == hk && hk >= threshold) return {k, rp};
      }
    }
  }
}

// All extension chains of degree k with 2 <= l <= max_l, found by scanning
// degree vectors in [-box, box]^l and twists in [1, hk]^(l-1).
using ChainKey = std::vector<std::int64_t>;
inline ChainKey chain_key(const ExtensionChain& c) {
  ChainKey key;
  for (const ChainStep& s : c.steps) {
    key.push_back(s.rank.value());
    key.push_back(s.degree.value());
  }
  for (Int a : c.twists) key.push_back(a.value());
  return key;
}

inline std::set<ChainKey> brute_chains_of_degree(const ModuliParams& p, Int k, Int max_l, Int box, Int min_twist2) {
  std::set<ChainKey> out;
  const Int hk = p.h() * k;
  for (Int l = 2; l <= std::min(max_l, p.r()); ++l) {
    const auto n = static_cast<std::size_t>(l.value());
    std::vector<Int> ranks(n, 1), degrees(n), twists(n - 1);
    // ranks: all vectors in [1, r]^l with sum r
    std::function<void(std::size_t)> over_twists = [&](std::size_t i) {
      if (i == n - 1) {
        ExtensionChain c{p, {}, twists};
        for (std::size_t j = 0; j < n; ++j) c.steps.push_back({ranks[j], degrees[j]});
        if (l == 2 && twists[0] < min_twist2) return;
        try {
          validate(c);
        } catch (const ParameterError&) {
          return;
        }
        if (multi_step_degree(c) == k) out.insert(chain_key(c));
        return;
      }
      for (Int a = 1; a <= hk; ++a) {
        twists[i] = a;
        over_twists(i + 1);
      }
    };
    std::function<void(std::size_t, Int)> over_degrees = [&](std::size_t i, Int sum) {
      if (i == n - 1) {
        degrees[i] = p.d() - sum;
        if (abs(degrees[i]) <= box) over_twists(0);
        return;
      }
      for (Int x = -box; x <= box; ++x) {
        degrees[i] = x;
        over_degrees(i + 1, sum + x);
      }
    };
    std::function<void(std::size_t, Int)> over_ranks = [&](std::size_t i, Int sum) {
      if (i == n - 1) {
        ranks[i] = p.r() - sum;
        if (ranks[i] >= 1) over_degrees(0, 0);
        return;
      }
      for (Int x = 1; x <= p.r(); ++x) {
        ranks[i] = x;
        over_ranks(i + 1, sum + x);
      }
    };
    over_ranks(0, 0);
  }
  return out;
}

}  // namespace modrc::brute

#endif  // MODRC_TESTS_BRUTE_FORCE_H_
