#pragma once

#include "tricube/integer.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tricube {

/// Thrown when trial division leaves a cofactor that cannot be certified prime.
class IncompleteFactorization : public std::runtime_error {
 public:
  explicit IncompleteFactorization(Int cofactor)
      : std::runtime_error("incomplete factorization: cofactor " + cofactor.str() +
                           " survived trial division and could not be certified prime"),
        cofactor_(std::move(cofactor)) {}

  const Int& cofactor() const noexcept { return cofactor_; }

 private:
  Int cofactor_;
};

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// sign * prod(prime^exponent), primes strictly increasing.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  Int product() const {
    Int p = sign;
    for (const auto& f : factors) p *= boost::multiprecision::pow(f.prime, f.exponent);
    return p;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline constexpr std::uint64_t kDefaultTrialLimit = 1'000'000;

/// floor(sqrt(n)) by Newton iteration from an overestimate.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument " + n.str());
  if (n < 2) return n;
  Int x = Int(1) << (boost::multiprecision::msb(n) / 2 + 1);
  for (;;) {
    Int y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

inline std::optional<Int> perfect_square_root(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

namespace detail {

inline constexpr std::array<unsigned, 13> kWitnessBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Miller-Rabin with the first 13 primes as bases has no pseudoprimes below this value.
inline const Int& deterministic_mr_limit() {
  static const Int limit("3317044064679887385961981");
  return limit;
}

inline bool miller_rabin_witness_passes(const Int& n, const Int& d, unsigned r, unsigned base) {
  Int a = base;
  if (a % n == 0) return true;
  Int x = boost::multiprecision::powm(a, d, n);
  const Int n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n1) return true;
  }
  return false;
}

template <class U>
void trial_divide(U& m, U& p, std::uint64_t limit, std::vector<PrimePower>& out) {
  auto take = [&](const U& q) {
    unsigned e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e > 0) out.push_back({Int(q), e});
  };
  if (p <= 2 && limit >= 2) {
    take(U(2));
    p = 3;
  }
  while (p <= limit && p * p <= m) {
    take(p);
    p += 2;
  }
}

}  // namespace detail

/// Deterministic primality: true/false when certifiable, nullopt when n is
/// beyond the range where the fixed witness set is proven exact.
inline std::optional<bool> certify_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned b : detail::kWitnessBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  if (n >= detail::deterministic_mr_limit()) return std::nullopt;
  Int d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (unsigned b : detail::kWitnessBases)
    if (!detail::miller_rabin_witness_passes(n, d, r, b)) return false;
  return true;
}

/// Trial division up to min(isqrt(|n|), trial_limit), then certification of
/// whatever cofactor remains.
inline Factorization factorize(const Int& n, std::uint64_t trial_limit = kDefaultTrialLimit) {
  if (n == 0) throw std::domain_error("factorize: zero has no factorization");
  if (trial_limit == 0) throw std::domain_error("factorize: trial_limit must be positive");

  Factorization result;
  result.sign = n < 0 ? -1 : 1;
  Int rest = abs(n);

  bool exhausted_sqrt = false;
  if (auto small = narrow<std::uint64_t>(rest); small && *small <= (std::uint64_t{1} << 62)) {
    // p stays below 2^31 here so p*p cannot wrap.
    std::uint64_t m = *small;
    std::uint64_t p = 2;
    detail::trial_divide(m, p, std::min<std::uint64_t>(trial_limit, std::uint64_t{1} << 31), result.factors);
    exhausted_sqrt = p * p > m;
    rest = m;
  } else {
    Int p = 2;
    detail::trial_divide(rest, p, trial_limit, result.factors);
    exhausted_sqrt = p * p > rest;
  }

  if (rest > 1) {
    if (!exhausted_sqrt) {
      auto certified = certify_prime(rest);
      if (!certified || !*certified) throw IncompleteFactorization(rest);
    }
    result.factors.push_back({rest, 1});
  }
  return result;
}

inline std::vector<Int> positive_divisors(const Factorization& f) {
  std::vector<Int> divs{1};
  for (const auto& [prime, exponent] : f.factors) {
    const std::size_t base = divs.size();
    Int power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Every d with d | n, both signs, ascending.
inline std::vector<Int> signed_divisors(const Int& n, std::uint64_t trial_limit = kDefaultTrialLimit) {
  if (n == 0) throw std::domain_error("signed_divisors: zero has infinitely many divisors");
  const auto pos = positive_divisors(factorize(n, trial_limit));
  std::vector<Int> out;
  out.reserve(2 * pos.size());
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

}  // namespace tricube
