#pragma once

// Step-by-step derivation of the pivot reduction for a concrete (s, c),
// rendered as ASCII equations.

#include "tricube/integer.hpp"
#include "tricube/json_io.hpp"
#include "tricube/solver.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tricube {

struct TraceStep {
  std::size_t index = 0;  // 1-based
  std::string label;
  std::string equation_text;
  std::string note;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

enum class TraceFormat { plain, markdown, structured_records };

inline TraceFormat parse_trace_format(std::string_view name) {
  if (name == "plain") return TraceFormat::plain;
  if (name == "markdown") return TraceFormat::markdown;
  if (name == "structured-records") return TraceFormat::structured_records;
  throw std::invalid_argument("unknown trace format: " + std::string(name));
}

/// X with a = bX + c, if integral.
inline std::optional<Int> solve_linear_diophantus(const Int& a, const Int& b, const Int& c) {
  if (b == 0) throw std::domain_error("solve_linear_diophantus: coefficient b must be nonzero");
  const Int diff = a - c;
  if (diff % b != 0) return std::nullopt;
  return diff / b;
}

namespace detail {

// Renders sum(coef * monomial) as "X^2 - 8X + 16"; zero terms are dropped.
inline std::string render_terms(const std::vector<std::pair<Int, std::string>>& terms) {
  std::string out;
  for (const auto& [coef, mono] : terms) {
    if (coef == 0) continue;
    const bool neg = coef < 0;
    const Int mag = abs(coef);
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (mono.empty() || mag != 1) out += mag.str();
    out += mono;
  }
  return out.empty() ? "0" : out;
}

// "Z - 3", "Z + 2", "Z"
inline std::string shifted(std::string_view var, const Int& minus) {
  return render_terms({{1, std::string(var)}, {-minus, ""}});
}

inline std::string over_pivot(const Int& numerator, const Int& s) {
  if (s == 0) return numerator.str() + "/Z";
  return numerator.str() + "/(" + shifted("Z", s) + ")";
}

// "(Z - 3)" or bare "Z" when s = 0, for use as a multiplicand.
inline std::string pivot_factor(const Int& s) { return s == 0 ? std::string("Z") : "(" + shifted("Z", s) + ")"; }

inline std::string join_ints(const std::vector<Int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += vs[i].str();
  }
  return out + "}";
}

inline std::string triple_text(const Triple& t) {
  return "(" + t.x.str() + ", " + t.y.str() + ", " + t.z.str() + ")";
}

}  // namespace detail

inline std::vector<TraceStep> derive_trace(const TripleSystem& sys) {
  using detail::render_terms;
  const Int& s = sys.s;
  const Int& c = sys.c;
  const Int top = s * s * s - c;  // remainder of (Z^3 - c) / (Z - s), i.e. -(c - s^3)
  std::vector<TraceStep> steps;
  auto add = [&](std::string label, std::string eq, std::string note) {
    steps.push_back({steps.size() + 1, std::move(label), std::move(eq), std::move(note)});
  };

  add("rearrange-linear", "X + Y = " + render_terms({{s, ""}, {-1, "Z"}}),
      "Isolate the pivot Z in X + Y + Z = " + s.str() + ".");
  add("rearrange-cubic", "X^3 + Y^3 = " + render_terms({{c, ""}, {-1, "Z^3"}}),
      "Isolate the pivot Z in X^3 + Y^3 + Z^3 = " + c.str() + ".");

  std::string lhs4 = "X^2 + " + detail::pivot_factor(s) + "X";
  if (s != 0) {
    const std::string sz = render_terms({{abs(s), "Z"}});
    lhs4 += (s > 0 ? " - " : " + ") + sz;
  }

  const std::string lhs3 = render_terms({{1, "X^2"}, {1, "Y^2"}, {-1, "XY"}, {-1, "Z^2"}, {-s, "Z"}, {-(s * s), ""}});

  if (top == 0) {
    add("divide", lhs3 + " = 0",
        "Dividing the cubic relation by X + Y = " + render_terms({{s, ""}, {-1, "Z"}}) +
            " leaves no remainder because c = s^3.");
    add("substitute", lhs4 + " = 0", "Substituting Y = " + render_terms({{s, ""}, {-1, "Z"}, {-1, "X"}}) +
                                         " reduces the system to one quadratic in X.");
    add("factorization", (s == 0 ? std::string("X") : "(" + detail::shifted("X", s) + ")") + "(X + Z) = 0",
        "The quadratic splits, so X = " + s.str() + " (then Y = -Z) or X = -Z (then Y = " + s.str() +
            "); the excluded pivot Z = " + s.str() + " likewise forces X + Y = 0.");
    add("infinite-family", "(X, Y, Z) = permutations of (" + s.str() + ", t, -t), t any integer",
        "Every integer t gives a solution, so the solution set is infinite.");
    return steps;
  }

  add("divide", lhs3 + " = " + detail::over_pivot(top, s),
      "Divide the cubic relation by the linear one (Z != " + s.str() + "); dividing " +
          render_terms({{1, "Z^3"}, {-c, ""}}) + " by " + detail::shifted("Z", s) + " leaves remainder " + top.str() +
          ".");

  const bool three_divides = top % 3 == 0;
  const Int reduced = three_divides ? Int(top / 3) : top;
  const std::string rhs4 = three_divides
                               ? detail::over_pivot(reduced, s)
                               : top.str() + "/(3" + detail::pivot_factor(s) + ")";
  add("substitute", lhs4 + " = " + rhs4,
      "Substituting Y = " + render_terms({{s, ""}, {-1, "Z"}, {-1, "X"}}) +
          " and dividing by 3 leaves an integer polynomial on the left.");

  const auto cands = candidate_zs(sys);
  if (three_divides) {
    add("divisibility", detail::pivot_factor(s) + " | " + reduced.str(),
        "The left side is an integer whenever X and Z are, so " + detail::shifted("Z", s) + " divides " +
            reduced.str() + ".");
  } else {
    add("divisibility", "3" + detail::pivot_factor(s) + " | " + top.str(),
        "3 does not divide " + top.str() + ", so no integer pivot Z qualifies.");
  }

  std::vector<Int> zs;
  for (const auto& cz : cands) zs.push_back(cz.z);
  add("candidates", "Z in " + detail::join_ints(zs),
      cands.empty() ? std::string("No admissible pivot values.")
                    : "Each divisor q of " + reduced.str() + " gives the pivot Z = " + s.str() + " + q.");

  for (const auto& cz : cands) {
    const Int constant = -(s * cz.z + cz.d);
    const std::string eq =
        "Z = " + cz.z.str() + ": " + render_terms({{1, "X^2"}, {-cz.k, "X"}, {constant, ""}}) + " = 0";
    const Int disc = pivot_discriminant(cz, sys);
    const auto roots = solve_quadratic_for_x(cz, sys);
    std::string note = "Discriminant " + disc.str();
    if (disc < 0) {
      note += " is negative, so this pivot is rejected.";
    } else if (!perfect_square_root(disc)) {
      note += " is not a perfect square, so this pivot is rejected.";
    } else if (roots.empty()) {
      note += " has the wrong parity for an integer root, so this pivot is rejected.";
    } else {
      note += " is a perfect square; ";
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) note += ", ";
        note += "X = " + roots[i].str() + " gives " + detail::triple_text({roots[i], s - cz.z - roots[i], cz.z});
      }
      note += ".";
    }
    add("quadratic", eq, std::move(note));
  }

  const auto set = solve(sys);
  std::string listing = "(X, Y, Z) in {";
  for (std::size_t i = 0; i < set.triples.size(); ++i) {
    if (i) listing += ", ";
    listing += detail::triple_text(set.triples[i]);
  }
  listing += "}";
  add("solutions", std::move(listing),
      set.triples.empty() ? std::string("No integer solutions.")
                          : "Closing the pivot solutions under coordinate permutations gives " +
                                std::to_string(set.triples.size()) + " ordered solutions.");
  return steps;
}

inline void render(std::ostream& os, const std::vector<TraceStep>& steps, TraceFormat format) {
  for (const auto& st : steps) {
    switch (format) {
      case TraceFormat::plain:
        os << st.index << ". " << st.label << ": " << st.equation_text << "\n   " << st.note << '\n';
        break;
      case TraceFormat::markdown:
        os << st.index << ". **" << st.label << "**: `" << st.equation_text << "`  \n   " << st.note << '\n';
        break;
      case TraceFormat::structured_records:
        os << "{\"index\":" << st.index << ",\"label\":";
        write_json_string(os, st.label);
        os << ",\"equation_text\":";
        write_json_string(os, st.equation_text);
        os << ",\"note\":";
        write_json_string(os, st.note);
        os << "}\n";
        break;
    }
  }
}

inline std::string render(const std::vector<TraceStep>& steps, TraceFormat format) {
  std::ostringstream os;
  render(os, steps, format);
  return os.str();
}

}  // namespace tricube
