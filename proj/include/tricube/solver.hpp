#pragma once

// Exact solver for X + Y + Z = s, X^3 + Y^3 + Z^3 = c over the integers.
//
// Isolating one coordinate Z (the pivot) and writing k = s - Z gives
// X + Y = k and X^3 + Y^3 = c - Z^3. Dividing the second by the first and
// substituting Y = k - X leaves
//
//     X^2 - k X - (s Z + d) = 0,   d = (c - s^3) / (3k),
//
// so 3k must divide c - s^3. The pivot therefore ranges over a finite
// divisor set and each pivot contributes at most two integer roots X.
// The pivot Z = s (k = 0) forces X + Y = 0 and hence c = s^3, which is the
// degenerate case handled symbolically.

#include "tricube/integer.hpp"
#include "tricube/intmath.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace tricube {

struct TripleSystem {
  Int s;  // X + Y + Z
  Int c;  // X^3 + Y^3 + Z^3

  Int remainder() const { return c - s * s * s; }
  bool degenerate() const { return remainder() == 0; }

  friend bool operator==(const TripleSystem&, const TripleSystem&) = default;
};

struct Triple {
  Int x;
  Int y;
  Int z;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend bool operator<(const Triple& a, const Triple& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  }
};

inline std::array<Triple, 6> permutations(const Triple& t) {
  return {{{t.x, t.y, t.z}, {t.x, t.z, t.y}, {t.y, t.x, t.z},
           {t.y, t.z, t.x}, {t.z, t.x, t.y}, {t.z, t.y, t.x}}};
}

/// One admissible pivot value z with k = s - z, d0 = c - s^3 and d = d0 / (3k).
struct CandidateZ {
  Int z;
  Int k;
  Int d;
  Int d0;

  friend bool operator==(const CandidateZ&, const CandidateZ&) = default;
};

struct SolutionSet {
  enum class Kind { finite, infinite_family };

  Kind kind = Kind::finite;
  std::vector<Triple> triples;       // finite only: sorted, unique, permutation-closed
  std::optional<Int> family_anchor;  // infinite_family only: all permutations of (s, t, -t)

  static SolutionSet finite(std::vector<Triple> ts) {
    SolutionSet out;
    out.triples = std::move(ts);
    return out;
  }
  static SolutionSet infinite_family(Int anchor) {
    SolutionSet out;
    out.kind = Kind::infinite_family;
    out.family_anchor = std::move(anchor);
    return out;
  }

  bool is_finite() const { return kind == Kind::finite; }

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

inline const char* kind_name(SolutionSet::Kind k) {
  return k == SolutionSet::Kind::finite ? "finite" : "infinite_family";
}

inline bool verify(const Triple& t, const TripleSystem& sys) {
  return t.x + t.y + t.z == sys.s && t.x * t.x * t.x + t.y * t.y * t.y + t.z * t.z * t.z == sys.c;
}

/// All pivots z != s with 3(s - z) | (c - s^3), ascending by z.
inline std::vector<CandidateZ> candidate_zs(const TripleSystem& sys,
                                            std::uint64_t trial_limit = kDefaultTrialLimit) {
  const Int d0 = sys.remainder();
  if (d0 == 0)
    throw std::invalid_argument("candidate_zs: degenerate system c = s^3 has no finite pivot set");
  // x^3 = x (mod 3) for every integer, so 3 | d0 is necessary for any solution.
  if (d0 % 3 != 0) return {};
  const Int q = d0 / 3;

  std::vector<CandidateZ> out;
  const auto ks = signed_divisors(q, trial_limit);
  out.reserve(ks.size());
  // z = s - k is decreasing in k.
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    const Int& k = *it;
    out.push_back({sys.s - k, k, q / k, d0});
  }
  return out;
}

/// Discriminant k^2 + 4(s z + d) of the pivot quadratic.
inline Int pivot_discriminant(const CandidateZ& cand, const TripleSystem& sys) {
  return cand.k * cand.k + 4 * (sys.s * cand.z + cand.d);
}

/// Integer roots of X^2 - kX - (s z + d) = 0, ascending.
inline std::vector<Int> solve_quadratic_for_x(const CandidateZ& cand, const TripleSystem& sys) {
  const auto root = perfect_square_root(pivot_discriminant(cand, sys));
  if (!root) return {};
  if ((cand.k - *root) % 2 != 0) return {};
  Int lo = (cand.k - *root) / 2;
  if (*root == 0) return {lo};
  return {lo, (cand.k + *root) / 2};
}

/// Every solution lies in the box max(|x|,|y|,|z|) <= |s| + max(1, |c - s^3| / 3).
inline Int completeness_bound(const TripleSystem& sys) {
  const Int d0 = sys.remainder();
  if (d0 == 0) throw std::invalid_argument("completeness_bound: degenerate system c = s^3 is unbounded");
  return abs(sys.s) + std::max(Int(1), Int(abs(d0) / 3));
}

inline SolutionSet solve(const TripleSystem& sys, std::uint64_t trial_limit = kDefaultTrialLimit) {
  if (sys.degenerate()) return SolutionSet::infinite_family(sys.s);

  std::set<Triple> found;
  for (const auto& cand : candidate_zs(sys, trial_limit)) {
    for (const auto& x : solve_quadratic_for_x(cand, sys)) {
      for (auto& p : permutations({x, sys.s - cand.z - x, cand.z})) found.insert(std::move(p));
    }
  }
  return SolutionSet::finite({found.begin(), found.end()});
}

}  // namespace tricube
