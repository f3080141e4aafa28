#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tricube {

/// Signed arbitrary-precision integer used for every value in the library.
using Int = boost::multiprecision::cpp_int;

inline Int abs(const Int& v) { return v < 0 ? Int(-v) : v; }

inline std::string to_string(const Int& v) { return v.str(); }

/// Strict decimal parse: optional leading sign, then one or more digits.
inline std::optional<Int> parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) return std::nullopt;
  for (std::size_t i = pos; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  Int v(std::string(text.substr(pos)));
  if (text[0] == '-') v = -v;
  return v;
}

template <class T>
std::optional<T> narrow(const Int& v) {
  static_assert(std::numeric_limits<T>::is_integer);
  if (v < Int(std::numeric_limits<T>::min()) || v > Int(std::numeric_limits<T>::max()))
    return std::nullopt;
  return static_cast<T>(v);
}

}  // namespace tricube
