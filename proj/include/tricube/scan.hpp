#pragma once

#include "tricube/integer.hpp"
#include "tricube/json_io.hpp"
#include "tricube/solver.hpp"

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tricube {

/// Inclusive integer range lo..hi.
struct IntRange {
  Int lo;
  Int hi;

  Int size() const { return hi - lo + 1; }
};

struct ScanRecord {
  Int s;
  Int c;
  SolutionSet::Kind kind = SolutionSet::Kind::finite;
  std::optional<std::uint64_t> solution_count;
  std::optional<std::vector<Triple>> solutions;
  std::optional<Int> bound_used;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

struct ScanSummary {
  std::uint64_t points = 0;
  std::uint64_t finite_nonempty = 0;
  std::uint64_t empty = 0;
  std::uint64_t infinite = 0;
};

inline ScanRecord make_scan_record(const TripleSystem& sys, bool include_solutions) {
  ScanRecord rec{sys.s, sys.c};
  auto set = solve(sys);
  rec.kind = set.kind;
  if (set.is_finite()) {
    rec.solution_count = set.triples.size();
    rec.bound_used = completeness_bound(sys);
    if (include_solutions) rec.solutions = std::move(set.triples);
  }
  return rec;
}

/// One line, fields in the order s, c, kind, solution_count, solutions, bound_used.
inline void write_scan_record(std::ostream& os, const ScanRecord& rec) {
  os << "{\"s\":" << rec.s << ",\"c\":" << rec.c << ",\"kind\":\"" << kind_name(rec.kind) << '"';
  if (rec.solution_count) os << ",\"solution_count\":" << *rec.solution_count;
  if (rec.solutions) {
    os << ",\"solutions\":";
    write_triples(os, *rec.solutions);
  }
  if (rec.bound_used) os << ",\"bound_used\":" << *rec.bound_used;
  os << "}\n";
}

inline ScanRecord scan_record_from_json(std::string_view line) {
  const JsonValue root = parse_json(line);
  auto require = [&](const char* key) -> const JsonValue& {
    const auto* v = root.find(key);
    if (!v) throw JsonFormatError(std::string("missing field: ") + key);
    return *v;
  };
  ScanRecord rec{require("s").as_int(), require("c").as_int()};
  const auto& kind = require("kind").as_string();
  if (kind == "infinite_family") {
    rec.kind = SolutionSet::Kind::infinite_family;
  } else if (kind != "finite") {
    throw JsonFormatError("unknown kind: " + kind);
  }
  if (const auto* n = root.find("solution_count")) {
    auto count = narrow<std::uint64_t>(n->as_int());
    if (!count) throw JsonFormatError("solution_count out of range");
    rec.solution_count = *count;
  }
  if (const auto* sols = root.find("solutions")) rec.solutions = triples_from_json(*sols);
  if (const auto* b = root.find("bound_used")) rec.bound_used = b->as_int();
  return rec;
}

/// Solves every (s, c) in the grid and hands records to `sink` in (s, c)
/// ascending order, on the calling thread. Workers run ahead of the sink by
/// at most a fixed window so memory stays bounded on large grids.
inline ScanSummary scan_grid(const IntRange& s_range, const IntRange& c_range, unsigned workers,
                             bool include_solutions, const std::function<void(const ScanRecord&)>& sink) {
  if (s_range.lo > s_range.hi) throw std::invalid_argument("scan_grid: empty sum range");
  if (c_range.lo > c_range.hi) throw std::invalid_argument("scan_grid: empty cube-sum range");
  if (workers == 0) throw std::invalid_argument("scan_grid: workers must be at least 1");

  const auto total = narrow<std::uint64_t>(s_range.size() * c_range.size());
  if (!total) throw std::length_error("scan_grid: grid has too many points");
  const Int width = c_range.size();

  auto point = [&](std::uint64_t i) {
    return TripleSystem{s_range.lo + Int(i) / width, c_range.lo + Int(i) % width};
  };

  ScanSummary summary;
  auto emit = [&](const ScanRecord& rec) {
    ++summary.points;
    if (rec.kind == SolutionSet::Kind::infinite_family)
      ++summary.infinite;
    else if (*rec.solution_count == 0)
      ++summary.empty;
    else
      ++summary.finite_nonempty;
    sink(rec);
  };

  if (workers == 1) {
    for (std::uint64_t i = 0; i < *total; ++i) emit(make_scan_record(point(i), include_solutions));
    return summary;
  }

  const std::uint64_t window = std::uint64_t{workers} * 64;
  std::mutex mu;
  std::condition_variable cv;
  std::map<std::uint64_t, ScanRecord> ready;
  std::uint64_t next_claim = 0;
  std::uint64_t next_emit = 0;
  bool stop = false;
  std::exception_ptr failure;

  auto work = [&] {
    for (;;) {
      std::uint64_t i;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return stop || next_claim >= *total || next_claim < next_emit + window; });
        if (stop || next_claim >= *total) return;
        i = next_claim++;
      }
      try {
        ScanRecord rec = make_scan_record(point(i), include_solutions);
        std::lock_guard lock(mu);
        ready.emplace(i, std::move(rec));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);

  auto shutdown = [&] {
    {
      std::lock_guard lock(mu);
      stop = true;
    }
    cv.notify_all();
    for (auto& t : pool) t.join();
  };

  try {
    while (next_emit < *total) {
      ScanRecord rec;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return failure || ready.count(next_emit) > 0; });
        if (failure) break;
        auto node = ready.extract(next_emit);
        rec = std::move(node.mapped());
        ++next_emit;
      }
      cv.notify_all();
      emit(rec);
    }
  } catch (...) {
    shutdown();
    throw;
  }
  shutdown();
  if (failure) std::rethrow_exception(failure);
  return summary;
}

/// Convenience wrapper that streams newline-delimited records to `os`.
inline ScanSummary scan_grid_to_stream(const IntRange& s_range, const IntRange& c_range, unsigned workers,
                                       bool include_solutions, std::ostream& os) {
  return scan_grid(s_range, c_range, workers, include_solutions,
                   [&](const ScanRecord& rec) { write_scan_record(os, rec); });
}

}  // namespace tricube
