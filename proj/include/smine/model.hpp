#pragma once

// Ontology data model for IoT services: environments, states, conditions,
// operations, people, and the service description itself, together with the
// value-level predicates (temporal overlap, spatial proximity, environment
// constraint satisfaction) that the dependency predicates build on.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace smine {

/// GPS point with a per-point spatial radius (meters).
struct Location {
  double lat = 0.0;       // degrees, [-90, 90]
  double lon = 0.0;       // degrees, [-180, 180]
  double radius_m = 0.0;  // > 0

  bool operator==(const Location&) const = default;
};

inline bool location_in_bounds(const Location& l) {
  return std::isfinite(l.lat) && std::isfinite(l.lon) && std::isfinite(l.radius_m) &&
         l.lat >= -90.0 && l.lat <= 90.0 && l.lon >= -180.0 && l.lon <= 180.0 &&
         l.radius_m > 0.0;
}

/// A sensed physical quantity: named value with unit, timestamp, and location.
/// Units are carried verbatim and never converted.
struct Environment {
  std::string name;
  double value = 0.0;
  std::string unit;
  double timestamp = 0.0;  // >= 0
  Location location;

  bool operator==(const Environment&) const = default;
};

enum class Comparator { eq, leq, geq, lt, gt };

inline bool compare(Comparator c, double value, double bound) {
  switch (c) {
    case Comparator::eq:  return value == bound;
    case Comparator::leq: return value <= bound;
    case Comparator::geq: return value >= bound;
    case Comparator::lt:  return value < bound;
    case Comparator::gt:  return value > bound;
  }
  throw std::invalid_argument("unknown comparator");
}

/// A comparison an environment value must satisfy, e.g. temperature >= 28.
struct EnvConstraint {
  std::string name;
  Comparator comparator = Comparator::eq;
  double bound = 0.0;

  bool operator==(const EnvConstraint&) const = default;
};

enum class StateKind { ready, start, active, end };

/// Externally observable service state. `ready` carries no data; `start` and
/// `end` are instantaneous (the instant lives in start_ts); `active` spans
/// [start_ts, end_ts]. All non-ready kinds carry a location.
struct StateRecord {
  StateKind kind = StateKind::ready;
  std::optional<double> start_ts;
  std::optional<double> end_ts;  // present only for active
  std::optional<Location> location;

  bool operator==(const StateRecord&) const = default;

  /// Duration of an active record, end_ts - start_ts.
  double duration() const {
    if (kind != StateKind::active || !start_ts || !end_ts)
      throw std::invalid_argument("duration requires an active state record");
    return *end_ts - *start_ts;
  }
};

inline StateRecord active_state(double start_ts, double end_ts, Location loc) {
  return StateRecord{StateKind::active, start_ts, end_ts, loc};
}

/// Pre/postcondition of an operation. Carries both the rich form (required
/// states and environment constraints) and the symbolic token form used by
/// simulated repositories; matching prefers tokens when both sides have them.
struct Condition {
  std::vector<StateRecord> states;
  std::vector<EnvConstraint> env_constraints;
  std::set<int> tokens;

  bool operator==(const Condition&) const = default;

  /// True when the condition imposes nothing on environments or tokens.
  bool unconstrained() const { return env_constraints.empty() && tokens.empty(); }
};

/// Named, typed message parameter. data_type is a symbol from a finite type
/// alphabet; composability matching is exact symbol equality.
struct Parameter {
  std::string name;
  std::string data_type;
  std::string unit;

  bool operator==(const Parameter&) const = default;
};

struct OperationDescription {
  std::string name;
  std::string description;
  std::set<std::string> categories;
  std::string mode;
  std::vector<Parameter> inputs;   // 0..5
  std::vector<Parameter> outputs;  // 0..5
  std::map<std::string, std::string> qualities;  // opaque, never scored
  Condition precondition;
  Condition postcondition;

  bool operator==(const OperationDescription&) const = default;
};

struct Person {
  std::string id;

  auto operator<=>(const Person&) const = default;
};

/// A service: operations plus the context attributes (states, people) that
/// dependency recognition runs on. Names are unique within a repository.
struct ServiceDescription {
  std::string name;
  std::string description;
  std::set<std::string> bindings;
  std::set<std::string> categories;
  std::vector<OperationDescription> operations;  // non-empty
  std::vector<StateRecord> states;
  std::set<Person> people;

  bool operator==(const ServiceDescription&) const = default;
};

// ---------------------------------------------------------------------------
// Value-level predicates

/// Strict positive-length overlap of two active intervals; boundary contact
/// does not count. Throws std::invalid_argument on non-active records.
inline bool interval_overlap(const StateRecord& a, const StateRecord& b) {
  if (a.kind != StateKind::active || b.kind != StateKind::active ||
      !a.start_ts || !a.end_ts || !b.start_ts || !b.end_ts)
    throw std::invalid_argument("interval_overlap requires active state records");
  return std::max(*a.start_ts, *b.start_ts) < std::min(*a.end_ts, *b.end_ts);
}

inline constexpr double kEarthRadiusM = 6371000.0;

/// Great-circle distance in meters (haversine).
inline double haversine_m(const Location& a, const Location& b) {
  if (!location_in_bounds(a) || !location_in_bounds(b))
    throw std::invalid_argument("location out of bounds");
  constexpr double to_rad = std::numbers::pi / 180.0;
  const double phi1 = a.lat * to_rad;
  const double phi2 = b.lat * to_rad;
  const double dphi = (b.lat - a.lat) * to_rad;
  const double dlam = (b.lon - a.lon) * to_rad;
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlam / 2.0);
  const double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

/// Proximity under the smaller of the two radii.
inline bool within_radius(const Location& a, const Location& b) {
  return haversine_m(a, b) <= std::min(a.radius_m, b.radius_m);
}

/// True iff the environment names the constrained quantity and its value
/// satisfies the comparison. Name mismatch is simply false.
inline bool env_satisfies(const Environment& e, const EnvConstraint& c) {
  return e.name == c.name && compare(c.comparator, e.value, c.bound);
}

// ---------------------------------------------------------------------------
// Validation

enum class Severity { warning, error };

struct Violation {
  Severity severity = Severity::error;
  std::string path;     // e.g. "operations[1].inputs"
  std::string message;

  bool operator==(const Violation&) const = default;
};

namespace detail {

inline void check_location(const std::optional<Location>& loc, const std::string& path,
                           bool required, std::vector<Violation>& out) {
  if (!loc) {
    if (required) out.push_back({Severity::error, path, "location missing"});
    return;
  }
  if (!location_in_bounds(*loc))
    out.push_back({Severity::error, path, "location out of bounds"});
}

inline void check_state_record(const StateRecord& r, const std::string& path,
                               std::vector<Violation>& out) {
  switch (r.kind) {
    case StateKind::ready:
      if (r.start_ts || r.end_ts) out.push_back({Severity::error, path, "ready state carries timestamps"});
      if (r.location) out.push_back({Severity::error, path, "ready state carries a location"});
      break;
    case StateKind::start:
    case StateKind::end:
      if (!r.start_ts) out.push_back({Severity::error, path, "instantaneous state missing its timestamp"});
      if (r.end_ts) out.push_back({Severity::error, path, "instantaneous state carries an interval end"});
      check_location(r.location, path + ".location", true, out);
      break;
    case StateKind::active:
      if (!r.start_ts || !r.end_ts) {
        out.push_back({Severity::error, path, "active state missing its interval"});
      } else if (*r.end_ts < *r.start_ts) {
        out.push_back({Severity::error, path, "negative duration"});
      }
      check_location(r.location, path + ".location", true, out);
      break;
  }
}

inline void check_condition(const Condition& c, const std::string& path,
                            std::vector<Violation>& out) {
  std::size_t i = 0;
  for (const auto& s : c.states) check_state_record(s, path + ".states[" + std::to_string(i++) + "]", out);
  i = 0;
  for (const auto& ec : c.env_constraints) {
    if (ec.name.empty())
      out.push_back({Severity::error, path + ".env_constraints[" + std::to_string(i) + "]",
                     "constraint name is empty"});
    ++i;
  }
  if (c.tokens.size() > 3)
    out.push_back({Severity::error, path + ".tokens", "more than 3 condition tokens"});
  for (int t : c.tokens)
    if (t < 0 || t > 9) {
      out.push_back({Severity::error, path + ".tokens", "token outside [0, 9]"});
      break;
    }
}

}  // namespace detail

/// Collects every invariant violation in the service; an empty list means
/// valid. Warnings (severity != error) do not make a service invalid.
inline std::vector<Violation> validate_service(const ServiceDescription& s) {
  std::vector<Violation> out;
  if (s.name.empty()) out.push_back({Severity::error, "name", "service name is empty"});
  if (s.operations.empty()) out.push_back({Severity::error, "operations", "operations empty"});

  std::set<std::string> op_names;
  // unit per parameter name, for the mismatch warning
  std::map<std::string, std::string> units_seen;

  for (std::size_t oi = 0; oi < s.operations.size(); ++oi) {
    const auto& op = s.operations[oi];
    const std::string op_path = "operations[" + std::to_string(oi) + "]";
    if (op.name.empty())
      out.push_back({Severity::error, op_path + ".name", "operation name is empty"});
    else if (!op_names.insert(op.name).second)
      out.push_back({Severity::error, op_path + ".name", "duplicate operation name '" + op.name + "'"});
    if (op.inputs.size() > 5)
      out.push_back({Severity::error, op_path + ".inputs", "more than 5 input parameters"});
    if (op.outputs.size() > 5)
      out.push_back({Severity::error, op_path + ".outputs", "more than 5 output parameters"});
    auto check_params = [&](const std::vector<Parameter>& params, const char* side) {
      std::size_t pi = 0;
      for (const auto& p : params) {
        const std::string p_path = op_path + "." + side + "[" + std::to_string(pi++) + "]";
        if (p.data_type.empty())
          out.push_back({Severity::error, p_path, "parameter data_type is empty"});
        if (!p.name.empty()) {
          auto [it, inserted] = units_seen.emplace(p.name, p.unit);
          if (!inserted && it->second != p.unit)
            out.push_back({Severity::warning, p_path,
                           "unit mismatch for parameter '" + p.name + "' ('" + it->second +
                               "' vs '" + p.unit + "')"});
        }
      }
    };
    check_params(op.inputs, "inputs");
    check_params(op.outputs, "outputs");
    detail::check_condition(op.precondition, op_path + ".precondition", out);
    detail::check_condition(op.postcondition, op_path + ".postcondition", out);
  }

  std::size_t si = 0;
  for (const auto& st : s.states)
    detail::check_state_record(st, "states[" + std::to_string(si++) + "]", out);

  // active intervals must be pairwise disjoint
  std::vector<const StateRecord*> actives;
  for (const auto& st : s.states)
    if (st.kind == StateKind::active && st.start_ts && st.end_ts) actives.push_back(&st);
  for (std::size_t i = 0; i < actives.size(); ++i)
    for (std::size_t j = i + 1; j < actives.size(); ++j)
      if (std::max(*actives[i]->start_ts, *actives[j]->start_ts) <
          std::min(*actives[i]->end_ts, *actives[j]->end_ts)) {
        out.push_back({Severity::error, "states", "overlapping active states"});
        i = actives.size();
        break;
      }

  for (const auto& p : s.people)
    if (p.id.empty()) out.push_back({Severity::error, "people", "person id is empty"});

  return out;
}

/// True when the violation list carries no errors (warnings allowed).
inline bool is_valid(const std::vector<Violation>& violations) {
  return std::none_of(violations.begin(), violations.end(),
                      [](const Violation& v) { return v.severity == Severity::error; });
}

// ---------------------------------------------------------------------------
// Concept sets

/// Service-level unions of condition concepts and parameter types, the inputs
/// to ontology similarity. Tokens contribute their decimal spelling;
/// environment constraints contribute their name.
struct ConceptSets {
  std::set<std::string> pre;
  std::set<std::string> post;
  std::set<std::string> inputs;
  std::set<std::string> outputs;

  bool operator==(const ConceptSets&) const = default;
};

inline ConceptSets derive_concept_sets(const ServiceDescription& s) {
  ConceptSets cs;
  auto add_condition = [](const Condition& c, std::set<std::string>& into) {
    for (int t : c.tokens) into.insert(std::to_string(t));
    for (const auto& ec : c.env_constraints) into.insert(ec.name);
  };
  for (const auto& op : s.operations) {
    add_condition(op.precondition, cs.pre);
    add_condition(op.postcondition, cs.post);
    for (const auto& p : op.inputs) cs.inputs.insert(p.data_type);
    for (const auto& p : op.outputs) cs.outputs.insert(p.data_type);
  }
  return cs;
}

}  // namespace smine
