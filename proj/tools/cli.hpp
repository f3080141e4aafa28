#pragma once

// Command-line front end: solve, oracle, trace, scan.

#include "tricube/tricube.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace tricube::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kComputation = 3,
  kIo = 4,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int int_flag(const std::string& name, const std::string& text) {
  auto v = parse_integer(text);
  if (!v) throw UsageError("--" + name + ": not an integer: '" + text + "'");
  return *v;
}

/// "A:B", inclusive on both ends.
inline IntRange parse_range(const std::string& name, const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw UsageError("--" + name + ": expected A:B, got '" + text + "'");
  auto lo = parse_integer(std::string_view(text).substr(0, colon));
  auto hi = parse_integer(std::string_view(text).substr(colon + 1));
  if (!lo || !hi) throw UsageError("--" + name + ": expected A:B with integer ends, got '" + text + "'");
  if (*lo > *hi) throw UsageError("--" + name + ": empty range '" + text + "'");
  return {*lo, *hi};
}

inline std::string system_text(const TripleSystem& sys) {
  return "X + Y + Z = " + sys.s.str() + ", X^3 + Y^3 + Z^3 = " + sys.c.str();
}

inline void print_finite_text(std::ostream& out, const TripleSystem& sys, const std::vector<Triple>& ts) {
  if (ts.empty()) {
    out << "no solutions to " << system_text(sys) << '\n';
    return;
  }
  out << ts.size() << (ts.size() == 1 ? " solution" : " solutions") << " to " << system_text(sys) << ":\n";
  for (const auto& t : ts) out << "(" << t.x << ", " << t.y << ", " << t.z << ")\n";
}

inline void print_solution_set(std::ostream& out, const TripleSystem& sys, const SolutionSet& set, bool json) {
  if (json) {
    write_solution_set(out, set);
    out << '\n';
  } else if (set.is_finite()) {
    print_finite_text(out, sys, set.triples);
  } else {
    out << "infinitely many solutions to " << system_text(sys) << ": every permutation of (" << *set.family_anchor
        << ", t, -t) for integer t\n";
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer triples with a prescribed sum and sum of cubes", "tricube"};
  app.require_subcommand(1);

  std::string sum_text, cubes_text, bound_text, format = "text";
  std::string sum_range, cubes_range, out_path;
  unsigned jobs = 1;
  bool include_solutions = false;

  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--sum", sum_text, "Target of X + Y + Z")->required();
    cmd->add_option("--cubes", cubes_text, "Target of X^3 + Y^3 + Z^3")->required();
  };

  auto* solve_cmd = app.add_subcommand("solve", "List every integer solution");
  add_system(solve_cmd);
  solve_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force every solution inside a box");
  add_system(oracle_cmd);
  oracle_cmd->add_option("--bound", bound_text, "Box half-width max(|x|,|y|,|z|)")->required();
  oracle_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* trace_cmd = app.add_subcommand("trace", "Print the reduction step by step");
  add_system(trace_cmd);
  std::string trace_format = "plain";
  trace_cmd->add_option("--format", trace_format)->check(CLI::IsMember({"plain", "markdown", "json"}));

  auto* scan_cmd = app.add_subcommand("scan", "Classify every (s, c) on a grid");
  scan_cmd->add_option("--sum-range", sum_range, "Inclusive range A:B of s")->required();
  scan_cmd->add_option("--cubes-range", cubes_range, "Inclusive range A:B of c")->required();
  scan_cmd->add_option("--out", out_path, "Newline-delimited JSON output file")->required();
  scan_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--include-solutions", include_solutions, "Store the triples in each record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*solve_cmd) {
      const TripleSystem sys{int_flag("sum", sum_text), int_flag("cubes", cubes_text)};
      print_solution_set(out, sys, solve(sys), format == "json");
    } else if (*oracle_cmd) {
      const TripleSystem sys{int_flag("sum", sum_text), int_flag("cubes", cubes_text)};
      const Int bound = int_flag("bound", bound_text);
      if (bound < 0) throw UsageError("--bound: must be non-negative, got " + bound.str());
      const auto found = brute_force(sys, bound);
      if (format == "json") {
        write_solution_set(out, SolutionSet::finite(found));
        out << '\n';
      } else {
        print_finite_text(out, sys, found);
      }
    } else if (*trace_cmd) {
      const TripleSystem sys{int_flag("sum", sum_text), int_flag("cubes", cubes_text)};
      const auto fmt = trace_format == "json" ? TraceFormat::structured_records : parse_trace_format(trace_format);
      render(out, derive_trace(sys), fmt);
    } else if (*scan_cmd) {
      const auto s_range = parse_range("sum-range", sum_range);
      const auto c_range = parse_range("cubes-range", cubes_range);
      std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
      if (!file) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return kIo;
      }
      const auto summary = scan_grid_to_stream(s_range, c_range, jobs, include_solutions, file);
      file.flush();
      if (!file) {
        err << "error: failed writing '" << out_path << "'\n";
        return kIo;
      }
      out << "scanned " << summary.points << " points: " << summary.finite_nonempty << " finite with solutions, "
          << summary.empty << " empty, " << summary.infinite << " infinite families -> " << out_path << '\n';
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputation;
  }
  return kOk;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"tricube"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace tricube::cli
