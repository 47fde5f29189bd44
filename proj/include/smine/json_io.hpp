#pragma once

// JSON wire formats: repository files, lead files (one JSON object per line),
// the novelty registry, mining configs, generator params, and experiment
// sweeps. Field names mirror the type fields in snake_case; unknown fields
// are rejected so typos surface as diagnostics instead of silent defaults.

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "smine/config.hpp"
#include "smine/harness.hpp"
#include "smine/mining.hpp"
#include "smine/model.hpp"
#include "smine/synth.hpp"

namespace smine {

using json = nlohmann::json;

namespace detail {

inline void expect_keys(const json& j, std::initializer_list<const char*> allowed,
                        const char* what) {
  if (!j.is_object())
    throw std::invalid_argument(std::string("expected a JSON object for ") + what);
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (item.key() == a) { known = true; break; }
    if (!known)
      throw std::invalid_argument("unknown field '" + item.key() + "' in " + what);
  }
}

template <typename T>
void get_if_present(const json& j, const char* key, T& out) {
  if (auto it = j.find(key); it != j.end() && !it->is_null()) it->get_to(out);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Enum spellings

inline std::string to_string(Comparator c) {
  switch (c) {
    case Comparator::eq: return "eq";
    case Comparator::leq: return "leq";
    case Comparator::geq: return "geq";
    case Comparator::lt: return "lt";
    case Comparator::gt: return "gt";
  }
  throw std::invalid_argument("unknown comparator");
}

inline Comparator comparator_from_string(const std::string& s) {
  if (s == "eq") return Comparator::eq;
  if (s == "leq") return Comparator::leq;
  if (s == "geq") return Comparator::geq;
  if (s == "lt") return Comparator::lt;
  if (s == "gt") return Comparator::gt;
  throw std::invalid_argument("unknown comparator '" + s + "'");
}

inline std::string to_string(StateKind k) {
  switch (k) {
    case StateKind::ready: return "ready";
    case StateKind::start: return "start";
    case StateKind::active: return "active";
    case StateKind::end: return "end";
  }
  throw std::invalid_argument("unknown state kind");
}

inline StateKind state_kind_from_string(const std::string& s) {
  if (s == "ready") return StateKind::ready;
  if (s == "start") return StateKind::start;
  if (s == "active") return StateKind::active;
  if (s == "end") return StateKind::end;
  throw std::invalid_argument("unknown state kind '" + s + "'");
}

inline std::string to_string(Direction d) {
  switch (d) {
    case Direction::none: return "none";
    case Direction::forward: return "forward";
    case Direction::backward: return "backward";
    case Direction::both: return "both";
  }
  throw std::invalid_argument("unknown direction");
}

inline Direction direction_from_string(const std::string& s) {
  if (s == "none") return Direction::none;
  if (s == "forward") return Direction::forward;
  if (s == "backward") return Direction::backward;
  if (s == "both") return Direction::both;
  throw std::invalid_argument("unknown direction '" + s + "'");
}

inline std::string to_string(LeadStatus s) {
  switch (s) {
    case LeadStatus::candidate: return "candidate";
    case LeadStatus::filtered_cd: return "filtered_cd";
    case LeadStatus::filtered_interest: return "filtered_interest";
    case LeadStatus::interesting: return "interesting";
    case LeadStatus::accepted: return "accepted";
    case LeadStatus::rejected: return "rejected";
    case LeadStatus::known: return "known";
  }
  throw std::invalid_argument("unknown lead status");
}

inline LeadStatus lead_status_from_string(const std::string& s) {
  if (s == "candidate") return LeadStatus::candidate;
  if (s == "filtered_cd") return LeadStatus::filtered_cd;
  if (s == "filtered_interest") return LeadStatus::filtered_interest;
  if (s == "interesting") return LeadStatus::interesting;
  if (s == "accepted") return LeadStatus::accepted;
  if (s == "rejected") return LeadStatus::rejected;
  if (s == "known") return LeadStatus::known;
  throw std::invalid_argument("unknown lead status '" + s + "'");
}

// ---------------------------------------------------------------------------
// Model types

inline void to_json(json& j, const Location& l) {
  j = json{{"lat", l.lat}, {"lon", l.lon}, {"radius_m", l.radius_m}};
}

inline void from_json(const json& j, Location& l) {
  detail::expect_keys(j, {"lat", "lon", "radius_m"}, "location");
  j.at("lat").get_to(l.lat);
  j.at("lon").get_to(l.lon);
  j.at("radius_m").get_to(l.radius_m);
}

inline void to_json(json& j, const EnvConstraint& c) {
  j = json{{"name", c.name}, {"comparator", to_string(c.comparator)}, {"bound", c.bound}};
}

inline void from_json(const json& j, EnvConstraint& c) {
  detail::expect_keys(j, {"name", "comparator", "bound"}, "env_constraint");
  j.at("name").get_to(c.name);
  c.comparator = comparator_from_string(j.at("comparator").get<std::string>());
  j.at("bound").get_to(c.bound);
}

inline void to_json(json& j, const StateRecord& r) {
  j = json{{"kind", to_string(r.kind)}};
  if (r.start_ts) j["start_ts"] = *r.start_ts;
  if (r.end_ts) j["end_ts"] = *r.end_ts;
  if (r.location) j["location"] = *r.location;
}

inline void from_json(const json& j, StateRecord& r) {
  detail::expect_keys(j, {"kind", "start_ts", "end_ts", "location"}, "state record");
  r = StateRecord{};
  r.kind = state_kind_from_string(j.at("kind").get<std::string>());
  if (auto it = j.find("start_ts"); it != j.end()) r.start_ts = it->get<double>();
  if (auto it = j.find("end_ts"); it != j.end()) r.end_ts = it->get<double>();
  if (auto it = j.find("location"); it != j.end()) r.location = it->get<Location>();
}

inline void to_json(json& j, const Condition& c) {
  j = json::object();
  if (!c.states.empty()) j["states"] = c.states;
  if (!c.env_constraints.empty()) j["env_constraints"] = c.env_constraints;
  if (!c.tokens.empty()) j["tokens"] = c.tokens;
}

inline void from_json(const json& j, Condition& c) {
  detail::expect_keys(j, {"states", "env_constraints", "tokens"}, "condition");
  c = Condition{};
  detail::get_if_present(j, "states", c.states);
  detail::get_if_present(j, "env_constraints", c.env_constraints);
  detail::get_if_present(j, "tokens", c.tokens);
}

inline void to_json(json& j, const Parameter& p) {
  j = json{{"name", p.name}, {"data_type", p.data_type}};
  if (!p.unit.empty()) j["unit"] = p.unit;
}

inline void from_json(const json& j, Parameter& p) {
  detail::expect_keys(j, {"name", "data_type", "unit"}, "parameter");
  p = Parameter{};
  j.at("name").get_to(p.name);
  j.at("data_type").get_to(p.data_type);
  detail::get_if_present(j, "unit", p.unit);
}

inline void to_json(json& j, const OperationDescription& op) {
  j = json{{"name", op.name}};
  if (!op.description.empty()) j["description"] = op.description;
  if (!op.categories.empty()) j["categories"] = op.categories;
  if (!op.mode.empty()) j["mode"] = op.mode;
  if (!op.inputs.empty()) j["inputs"] = op.inputs;
  if (!op.outputs.empty()) j["outputs"] = op.outputs;
  if (!op.qualities.empty()) j["qualities"] = op.qualities;
  json pre = op.precondition;
  if (!pre.empty()) j["precondition"] = pre;
  json post = op.postcondition;
  if (!post.empty()) j["postcondition"] = post;
}

inline void from_json(const json& j, OperationDescription& op) {
  detail::expect_keys(j,
                      {"name", "description", "categories", "mode", "inputs", "outputs",
                       "qualities", "precondition", "postcondition"},
                      "operation");
  op = OperationDescription{};
  j.at("name").get_to(op.name);
  detail::get_if_present(j, "description", op.description);
  detail::get_if_present(j, "categories", op.categories);
  detail::get_if_present(j, "mode", op.mode);
  detail::get_if_present(j, "inputs", op.inputs);
  detail::get_if_present(j, "outputs", op.outputs);
  detail::get_if_present(j, "qualities", op.qualities);
  detail::get_if_present(j, "precondition", op.precondition);
  detail::get_if_present(j, "postcondition", op.postcondition);
}

inline void to_json(json& j, const Person& p) { j = json{{"id", p.id}}; }

inline void from_json(const json& j, Person& p) {
  detail::expect_keys(j, {"id"}, "person");
  j.at("id").get_to(p.id);
}

inline void to_json(json& j, const ServiceDescription& s) {
  j = json{{"name", s.name}, {"operations", s.operations}};
  if (!s.description.empty()) j["description"] = s.description;
  if (!s.bindings.empty()) j["bindings"] = s.bindings;
  if (!s.categories.empty()) j["categories"] = s.categories;
  if (!s.states.empty()) j["states"] = s.states;
  if (!s.people.empty()) j["people"] = s.people;
}

inline void from_json(const json& j, ServiceDescription& s) {
  detail::expect_keys(
      j, {"name", "description", "bindings", "categories", "operations", "states", "people"},
      "service");
  s = ServiceDescription{};
  j.at("name").get_to(s.name);
  detail::get_if_present(j, "description", s.description);
  detail::get_if_present(j, "bindings", s.bindings);
  detail::get_if_present(j, "categories", s.categories);
  detail::get_if_present(j, "operations", s.operations);
  detail::get_if_present(j, "states", s.states);
  detail::get_if_present(j, "people", s.people);
}

// ---------------------------------------------------------------------------
// Leads and registry

inline void to_json(json& j, const RecognitionVector& v) {
  j = json{{"state_dep", v.state_dep},
           {"env_dep", v.env_dep},
           {"people_dep", v.people_dep},
           {"ope_comp", v.ope_comp},
           {"direction", to_string(v.direction)}};
}

inline void from_json(const json& j, RecognitionVector& v) {
  detail::expect_keys(j, {"state_dep", "env_dep", "people_dep", "ope_comp", "direction"},
                      "recognition vector");
  j.at("state_dep").get_to(v.state_dep);
  j.at("env_dep").get_to(v.env_dep);
  j.at("people_dep").get_to(v.people_dep);
  j.at("ope_comp").get_to(v.ope_comp);
  v.direction = direction_from_string(j.at("direction").get<std::string>());
}

inline void to_json(json& j, const Scores& s) {
  j = json{{"cd", s.cd}};
  if (s.sim) j["sim"] = *s.sim;
  if (s.dc) j["dc"] = *s.dc;
  if (s.act) j["act"] = *s.act;
  if (s.nov) j["nov"] = *s.nov;
  if (s.div) j["div"] = *s.div;
  if (s.interestingness) j["interestingness"] = *s.interestingness;
}

inline void from_json(const json& j, Scores& s) {
  detail::expect_keys(j, {"cd", "sim", "dc", "act", "nov", "div", "interestingness"}, "scores");
  s = Scores{};
  j.at("cd").get_to(s.cd);
  if (auto it = j.find("sim"); it != j.end()) s.sim = it->get<double>();
  if (auto it = j.find("dc"); it != j.end()) s.dc = it->get<double>();
  if (auto it = j.find("act"); it != j.end()) s.act = it->get<int>();
  if (auto it = j.find("nov"); it != j.end()) s.nov = it->get<int>();
  if (auto it = j.find("div"); it != j.end()) s.div = it->get<double>();
  if (auto it = j.find("interestingness"); it != j.end())
    s.interestingness = it->get<double>();
}

inline void to_json(json& j, const Lead& l) {
  j = json{{"service_a", l.service_a},
           {"service_b", l.service_b},
           {"recognition", l.recognition},
           {"scores", l.scores},
           {"status", to_string(l.status)}};
}

inline void from_json(const json& j, Lead& l) {
  detail::expect_keys(j, {"service_a", "service_b", "recognition", "scores", "status"}, "lead");
  j.at("service_a").get_to(l.service_a);
  j.at("service_b").get_to(l.service_b);
  j.at("recognition").get_to(l.recognition);
  j.at("scores").get_to(l.scores);
  l.status = lead_status_from_string(j.at("status").get<std::string>());
}

inline void to_json(json& j, const NoveltyRegistry& r) {
  j = json::array();
  for (const auto& [a, b] : r.known_pairs()) j.push_back(json::array({a, b}));
}

inline void from_json(const json& j, NoveltyRegistry& r) {
  if (!j.is_array()) throw std::invalid_argument("registry must be an array of name pairs");
  r = NoveltyRegistry{};
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2)
      throw std::invalid_argument("registry entries must be 2-element name arrays");
    r.add(item[0].get<std::string>(), item[1].get<std::string>());
  }
}

// ---------------------------------------------------------------------------
// Config and generator params

inline void to_json(json& j, const MiningConfig& cfg) {
  j = json{{"eta", cfg.eta},
           {"sim_weights", cfg.sim_weights},
           {"int_weights", cfg.int_weights},
           {"zeta", cfg.zeta},
           {"xi", cfg.xi},
           {"r0", cfg.r0},
           {"ignore_spatial", cfg.ignore_spatial}};
}

/// Partial objects are fine: missing fields keep their defaults.
inline void from_json(const json& j, MiningConfig& cfg) {
  detail::expect_keys(
      j, {"eta", "sim_weights", "int_weights", "zeta", "xi", "r0", "ignore_spatial"}, "config");
  cfg = MiningConfig{};
  detail::get_if_present(j, "eta", cfg.eta);
  detail::get_if_present(j, "sim_weights", cfg.sim_weights);
  detail::get_if_present(j, "int_weights", cfg.int_weights);
  detail::get_if_present(j, "zeta", cfg.zeta);
  detail::get_if_present(j, "xi", cfg.xi);
  detail::get_if_present(j, "r0", cfg.r0);
  detail::get_if_present(j, "ignore_spatial", cfg.ignore_spatial);
}

inline void to_json(json& j, const IntRange& r) { j = json::array({r.lo, r.hi}); }

inline void from_json(const json& j, IntRange& r) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("range must be a 2-element array [lo, hi]");
  j[0].get_to(r.lo);
  j[1].get_to(r.hi);
}

inline void to_json(json& j, const Span& s) { j = json::array({s.lo, s.hi}); }

inline void from_json(const json& j, Span& s) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("span must be a 2-element array [lo, hi]");
  j[0].get_to(s.lo);
  j[1].get_to(s.hi);
}

inline void to_json(json& j, const GeneratorParams& p) {
  j = json{{"n_services", p.n_services},
           {"ops_per_service", p.ops_per_service},
           {"inputs_per_op", p.inputs_per_op},
           {"outputs_per_op", p.outputs_per_op},
           {"cond_params_per_op", p.cond_params_per_op},
           {"cond_token_range", p.cond_token_range},
           {"temporal_range_h", p.temporal_range_h},
           {"people_alphabet", p.people_alphabet},
           {"type_alphabet_size", p.type_alphabet_size},
           {"seed", p.seed}};
}

/// Partial objects are fine: missing fields keep their defaults.
inline void from_json(const json& j, GeneratorParams& p) {
  detail::expect_keys(j,
                      {"n_services", "ops_per_service", "inputs_per_op", "outputs_per_op",
                       "cond_params_per_op", "cond_token_range", "temporal_range_h",
                       "people_alphabet", "type_alphabet_size", "seed"},
                      "generator params");
  p = GeneratorParams{};
  detail::get_if_present(j, "n_services", p.n_services);
  detail::get_if_present(j, "ops_per_service", p.ops_per_service);
  detail::get_if_present(j, "inputs_per_op", p.inputs_per_op);
  detail::get_if_present(j, "outputs_per_op", p.outputs_per_op);
  detail::get_if_present(j, "cond_params_per_op", p.cond_params_per_op);
  detail::get_if_present(j, "cond_token_range", p.cond_token_range);
  detail::get_if_present(j, "temporal_range_h", p.temporal_range_h);
  detail::get_if_present(j, "people_alphabet", p.people_alphabet);
  detail::get_if_present(j, "type_alphabet_size", p.type_alphabet_size);
  detail::get_if_present(j, "seed", p.seed);
}

inline void from_json(const json& j, SweepPoint& point) {
  detail::expect_keys(j, {"name", "params", "config"}, "sweep point");
  point = SweepPoint{};
  detail::get_if_present(j, "name", point.name);
  detail::get_if_present(j, "params", point.params);
  detail::get_if_present(j, "config", point.config);
}

inline void to_json(json& j, const SweepPoint& point) {
  j = json::object();
  if (!point.name.empty()) j["name"] = point.name;
  j["params"] = point.params;
  j["config"] = point.config;
}

// ---------------------------------------------------------------------------
// Files

/// Repository document: a `services` array plus an optional opaque `header`
/// block (the generator records its params, seed, and identity there).
struct RepositoryFile {
  json header;  // null when absent
  std::vector<ServiceDescription> services;
};

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

inline json parse_json_file(const std::filesystem::path& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

inline RepositoryFile load_repository_file(const std::filesystem::path& path) {
  const json j = parse_json_file(path);
  try {
    detail::expect_keys(j, {"header", "services"}, "repository");
    if (!j.contains("services") || !j.at("services").is_array())
      throw std::invalid_argument("expected a 'services' array");
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  RepositoryFile rf;
  if (j.contains("header")) rf.header = j.at("header");
  const json& arr = j.at("services");
  rf.services.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    try {
      rf.services.push_back(arr[i].get<ServiceDescription>());
    } catch (const std::exception& e) {
      std::string name;
      if (arr[i].is_object() && arr[i].contains("name") && arr[i]["name"].is_string())
        name = " ('" + arr[i]["name"].get<std::string>() + "')";
      throw std::runtime_error(path.string() + ": services[" + std::to_string(i) + "]" + name +
                               ": " + e.what());
    }
  }
  return rf;
}

inline void save_repository_file(const std::filesystem::path& path, const RepositoryFile& rf) {
  json j;
  if (!rf.header.is_null()) j["header"] = rf.header;
  j["services"] = rf.services;
  write_text_file(path, j.dump(2) + "\n");
}

inline std::string leads_to_jsonl(const std::vector<Lead>& leads) {
  std::string out;
  for (const auto& lead : leads) {
    out += json(lead).dump();
    out += '\n';
  }
  return out;
}

inline void save_leads_jsonl(const std::filesystem::path& path, const std::vector<Lead>& leads) {
  write_text_file(path, leads_to_jsonl(leads));
}

inline std::vector<Lead> load_leads_jsonl(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  std::vector<Lead> leads;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      leads.push_back(json::parse(line).get<Lead>());
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return leads;
}

inline NoveltyRegistry load_registry(const std::filesystem::path& path) {
  try {
    return parse_json_file(path).get<NoveltyRegistry>();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

inline void save_registry(const std::filesystem::path& path, const NoveltyRegistry& registry) {
  write_text_file(path, json(registry).dump(2) + "\n");
}

inline MiningConfig load_config(const std::filesystem::path& path) {
  try {
    return parse_json_file(path).get<MiningConfig>();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

inline GeneratorParams load_generator_params(const std::filesystem::path& path) {
  try {
    return parse_json_file(path).get<GeneratorParams>();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

inline std::vector<SweepPoint> load_sweep(const std::filesystem::path& path) {
  const json j = parse_json_file(path);
  if (!j.is_array())
    throw std::runtime_error(path.string() + ": expected a JSON array of sweep points");
  std::vector<SweepPoint> sweep;
  sweep.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      sweep.push_back(j[i].get<SweepPoint>());
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ": [" + std::to_string(i) + "]: " + e.what());
    }
  }
  return sweep;
}

}  // namespace smine
