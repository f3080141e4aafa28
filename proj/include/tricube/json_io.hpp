#pragma once

// JSON encoding of solver results. Integers are written as bare JSON
// numbers of any length; reading goes through nlohmann's SAX interface so
// the raw digits are kept instead of being squeezed through a double.

#include "tricube/integer.hpp"
#include "tricube/solver.hpp"

#include <json.hpp>

#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tricube {

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimal JSON tree whose numbers are exact integers.
struct JsonValue {
  using Array = std::vector<JsonValue>;
  using Object = std::vector<std::pair<std::string, JsonValue>>;
  std::variant<std::nullptr_t, bool, Int, std::string, Array, Object> data;

  const JsonValue* find(std::string_view key) const {
    if (auto* obj = std::get_if<Object>(&data))
      for (const auto& [k, v] : *obj)
        if (k == key) return &v;
    return nullptr;
  }
  const Int& as_int() const {
    if (auto* v = std::get_if<Int>(&data)) return *v;
    throw JsonFormatError("expected integer");
  }
  const std::string& as_string() const {
    if (auto* v = std::get_if<std::string>(&data)) return *v;
    throw JsonFormatError("expected string");
  }
  const Array& as_array() const {
    if (auto* v = std::get_if<Array>(&data)) return *v;
    throw JsonFormatError("expected array");
  }
  const Object& as_object() const {
    if (auto* v = std::get_if<Object>(&data)) return *v;
    throw JsonFormatError("expected object");
  }
};

namespace detail {

class ExactSax : public nlohmann::json_sax<nlohmann::json> {
 public:
  JsonValue root;

  bool null() override { return put(JsonValue{nullptr}); }
  bool boolean(bool v) override { return put(JsonValue{v}); }
  bool number_integer(number_integer_t v) override { return put(JsonValue{Int(v)}); }
  bool number_unsigned(number_unsigned_t v) override { return put(JsonValue{Int(v)}); }
  bool number_float(number_float_t, const string_t& raw) override {
    // Integers past 64 bits arrive here with their digits intact.
    auto v = parse_integer(raw);
    if (!v) throw JsonFormatError("non-integer number: " + raw);
    return put(JsonValue{std::move(*v)});
  }
  bool string(string_t& v) override { return put(JsonValue{v}); }
  bool binary(binary_t&) override { throw JsonFormatError("binary values are not supported"); }
  bool start_object(std::size_t) override { return open(JsonValue{JsonValue::Object{}}); }
  bool key(string_t& k) override {
    pending_key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(JsonValue{JsonValue::Array{}}); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex) override {
    throw JsonFormatError("JSON parse error at byte " + std::to_string(pos) + ": " + ex.what());
  }

 private:
  std::vector<JsonValue> stack_;
  std::vector<std::string> keys_;
  std::string pending_key_;
  bool have_root_ = false;

  bool put(JsonValue v) {
    if (stack_.empty()) {
      root = std::move(v);
      have_root_ = true;
    } else if (auto* arr = std::get_if<JsonValue::Array>(&stack_.back().data)) {
      arr->push_back(std::move(v));
    } else {
      std::get<JsonValue::Object>(stack_.back().data).emplace_back(pending_key_, std::move(v));
    }
    return true;
  }
  bool open(JsonValue v) {
    keys_.push_back(pending_key_);
    stack_.push_back(std::move(v));
    return true;
  }
  bool close() {
    JsonValue done = std::move(stack_.back());
    stack_.pop_back();
    pending_key_ = keys_.back();
    keys_.pop_back();
    return put(std::move(done));
  }
};

}  // namespace detail

inline JsonValue parse_json(std::string_view text) {
  detail::ExactSax sax;
  nlohmann::json::sax_parse(text.begin(), text.end(), &sax);
  return std::move(sax.root);
}

inline void write_json_string(std::ostream& os, std::string_view s) { os << nlohmann::json(std::string(s)).dump(); }

inline void write_triple(std::ostream& os, const Triple& t) { os << '[' << t.x << ',' << t.y << ',' << t.z << ']'; }

inline void write_triples(std::ostream& os, const std::vector<Triple>& ts) {
  os << '[';
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) os << ',';
    write_triple(os, ts[i]);
  }
  os << ']';
}

/// {"kind": ..., "solutions": [[x,y,z],...]} or {"kind": "infinite_family", "family_anchor": s}.
inline void write_solution_set(std::ostream& os, const SolutionSet& set) {
  os << "{\"kind\":\"" << kind_name(set.kind) << '"';
  if (set.is_finite()) {
    os << ",\"solutions\":";
    write_triples(os, set.triples);
  } else {
    os << ",\"family_anchor\":" << *set.family_anchor;
  }
  os << '}';
}

inline std::string to_json(const SolutionSet& set) {
  std::ostringstream os;
  write_solution_set(os, set);
  return os.str();
}

inline Triple triple_from_json(const JsonValue& v) {
  const auto& a = v.as_array();
  if (a.size() != 3) throw JsonFormatError("triple must have exactly three entries");
  return {a[0].as_int(), a[1].as_int(), a[2].as_int()};
}

inline std::vector<Triple> triples_from_json(const JsonValue& v) {
  std::vector<Triple> out;
  for (const auto& t : v.as_array()) out.push_back(triple_from_json(t));
  return out;
}

inline SolutionSet solution_set_from_json(std::string_view text) {
  const JsonValue root = parse_json(text);
  const auto* kind = root.find("kind");
  if (!kind) throw JsonFormatError("missing field: kind");
  if (kind->as_string() == "finite") {
    const auto* sols = root.find("solutions");
    if (!sols) throw JsonFormatError("missing field: solutions");
    return SolutionSet::finite(triples_from_json(*sols));
  }
  if (kind->as_string() == "infinite_family") {
    const auto* anchor = root.find("family_anchor");
    if (!anchor) throw JsonFormatError("missing field: family_anchor");
    return SolutionSet::infinite_family(anchor->as_int());
  }
  throw JsonFormatError("unknown kind: " + kind->as_string());
}

}  // namespace tricube
