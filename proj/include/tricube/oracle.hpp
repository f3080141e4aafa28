#pragma once

#include "tricube/integer.hpp"
#include "tricube/solver.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tricube {

namespace detail {

// Box scan over x and y with z taken from the linear constraint. Emits in
// lexicographic order because x and y ascend and z is determined by them.
template <class I>
void scan_box(const I& s, const I& c, const I& bound, std::vector<Triple>& out) {
  for (I x = -bound; x <= bound; ++x) {
    const I x3 = x * x * x;
    for (I y = -bound; y <= bound; ++y) {
      const I z = s - x - y;
      if (z < -bound || z > bound) continue;
      if (x3 + y * y * y + z * z * z == c) out.push_back({Int(x), Int(y), Int(z)});
    }
  }
}

// 3 * (1.4e6)^3 < 2^63, so every cube sum inside such a box fits an int64.
inline constexpr std::int64_t kNativeBoundLimit = 1'400'000;
inline constexpr std::int64_t kNativeSumLimit = std::int64_t{1} << 60;

}  // namespace detail

/// Every solution of `sys` with max(|x|,|y|,|z|) <= bound, sorted. Knows
/// nothing about the algebraic solver; the degenerate case just yields the
/// family members that fit in the box.
inline std::vector<Triple> brute_force(const TripleSystem& sys, const Int& bound) {
  if (bound < 0) throw std::domain_error("brute_force: bound must be non-negative, got " + bound.str());
  std::vector<Triple> out;
  auto b = narrow<std::int64_t>(bound);
  auto s = narrow<std::int64_t>(sys.s);
  auto c = narrow<std::int64_t>(sys.c);
  if (b && s && c && *b <= detail::kNativeBoundLimit && *s <= detail::kNativeSumLimit &&
      *s >= -detail::kNativeSumLimit) {
    detail::scan_box<std::int64_t>(*s, *c, *b, out);
  } else {
    detail::scan_box<Int>(sys.s, sys.c, bound, out);
  }
  return out;
}

}  // namespace tricube
