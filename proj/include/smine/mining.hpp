#pragma once

// The bottom-up pipeline over a repository: enumerate unordered pairs,
// recognize, filter on correlation degree, resolve actionability and novelty,
// score interestingness, filter again. Filtered pairs are retained with their
// filter stage so per-stage metrics stay computable.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "smine/config.hpp"
#include "smine/errors.hpp"
#include "smine/model.hpp"
#include "smine/recognition.hpp"
#include "smine/scoring.hpp"

namespace smine {

enum class LeadStatus {
  candidate,
  filtered_cd,
  filtered_interest,
  interesting,
  accepted,
  rejected,
  known,
};

/// An unordered candidate pair, stored canonically (service_a < service_b).
/// Chain direction lives inside the recognition vector.
struct Lead {
  std::string service_a;
  std::string service_b;
  RecognitionVector recognition;
  Scores scores;
  LeadStatus status = LeadStatus::candidate;

  bool operator==(const Lead&) const = default;
};

inline bool cd_passing(LeadStatus s) {
  return s != LeadStatus::candidate && s != LeadStatus::filtered_cd;
}

/// Persistent set of known composition pairs, the source of the novelty bit.
class NoveltyRegistry {
 public:
  using Pair = std::pair<std::string, std::string>;

  static Pair canonical(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
  }

  bool contains(const std::string& a, const std::string& b) const {
    return known_pairs_.count(canonical(a, b)) > 0;
  }

  void add(const std::string& a, const std::string& b) {
    known_pairs_.insert(canonical(a, b));
  }

  const std::set<Pair>& known_pairs() const { return known_pairs_; }

  bool operator==(const NoveltyRegistry&) const = default;

 private:
  std::set<Pair> known_pairs_;
};

/// 1 iff the canonical pair is absent from the registry.
inline int check_novelty(const std::string& a, const std::string& b,
                         const NoveltyRegistry& registry) {
  return registry.contains(a, b) ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Actionability

enum class VerifierStrategy { always_true, chain_sim };

inline VerifierStrategy verifier_from_string(const std::string& s) {
  if (s == "always_true") return VerifierStrategy::always_true;
  if (s == "chain_sim") return VerifierStrategy::chain_sim;
  throw InvalidConfig("unknown verifier strategy '" + s + "'");
}

inline const char* to_string(VerifierStrategy s) {
  return s == VerifierStrategy::always_true ? "always_true" : "chain_sim";
}

namespace detail {

/// Every token and environment requirement of the downstream precondition
/// must be met by the upstream postcondition; an unconstrained precondition
/// is trivially met. State requirements are not replayed.
inline bool precondition_fulfilled(const Condition& post, const Condition& pre) {
  if (pre.unconstrained()) return true;
  if (!pre.tokens.empty() &&
      !std::includes(post.tokens.begin(), post.tokens.end(), pre.tokens.begin(), pre.tokens.end()))
    return false;
  for (const auto& c : pre.env_constraints) {
    bool met = false;
    for (const auto& p : post.env_constraints)
      if (constraint_chains(p, c)) { met = true; break; }
    if (!met) return false;
  }
  return true;
}

/// A directed witness in either orientation: some upstream operation whose
/// postcondition fulfills the whole precondition of some downstream operation.
inline bool chain_simulates(const ServiceDescription& a, const ServiceDescription& b) {
  auto directed = [](const ServiceDescription& up, const ServiceDescription& down) {
    for (const auto& ou : up.operations)
      for (const auto& od : down.operations)
        if (precondition_fulfilled(ou.postcondition, od.precondition)) return true;
    return false;
  };
  return directed(a, b) || directed(b, a);
}

}  // namespace detail

inline int verify_actionability(const ServiceDescription& a, const ServiceDescription& b,
                                VerifierStrategy strategy) {
  switch (strategy) {
    case VerifierStrategy::always_true: return 1;
    case VerifierStrategy::chain_sim: return detail::chain_simulates(a, b) ? 1 : 0;
  }
  throw InvalidConfig("unknown verifier strategy");
}

/// Lead-level form: resolves the two services by name in the repository.
inline int verify_actionability(const Lead& lead, const std::vector<ServiceDescription>& repo,
                                VerifierStrategy strategy) {
  const ServiceDescription* a = nullptr;
  const ServiceDescription* b = nullptr;
  for (const auto& s : repo) {
    if (s.name == lead.service_a) a = &s;
    if (s.name == lead.service_b) b = &s;
  }
  if (!a || !b)
    throw std::invalid_argument("lead references a service missing from the repository");
  return verify_actionability(*a, *b, strategy);
}

// ---------------------------------------------------------------------------
// Pipeline

namespace detail {

inline void sort_leads(std::vector<Lead>& leads) {
  // interestingness desc (absent sorts last), cd desc, then canonical names
  std::sort(leads.begin(), leads.end(), [](const Lead& x, const Lead& y) {
    const double ix = x.scores.interestingness.value_or(-1.0);
    const double iy = y.scores.interestingness.value_or(-1.0);
    if (ix != iy) return ix > iy;
    if (x.scores.cd != y.scores.cd) return x.scores.cd > y.scores.cd;
    if (x.service_a != y.service_a) return x.service_a < y.service_a;
    return x.service_b < y.service_b;
  });
}

}  // namespace detail

/// Runs the full pipeline over every unordered pair. Every pair appears in
/// the output with some status; ordering is deterministic.
inline std::vector<Lead> mine(const std::vector<ServiceDescription>& repo,
                              const MiningConfig& cfg, const NoveltyRegistry& registry,
                              VerifierStrategy verifier) {
  cfg.validate();

  std::vector<const ServiceDescription*> services;
  services.reserve(repo.size());
  for (const auto& s : repo) services.push_back(&s);
  std::sort(services.begin(), services.end(),
            [](const ServiceDescription* a, const ServiceDescription* b) { return a->name < b->name; });
  for (std::size_t i = 0; i + 1 < services.size(); ++i)
    if (services[i]->name == services[i + 1]->name)
      throw InvalidRepository("duplicate service name '" + services[i]->name + "'");
  for (const auto* s : services) {
    const auto violations = validate_service(*s);
    if (!is_valid(violations))
      throw InvalidRepository("service '" + s->name + "' is invalid: " + violations.front().message);
  }

  std::vector<ConceptSets> concepts;
  concepts.reserve(services.size());
  for (const auto* s : services) concepts.push_back(derive_concept_sets(*s));

  std::vector<Lead> leads;
  leads.reserve(services.size() * (services.size() - 1) / 2);
  for (std::size_t i = 0; i < services.size(); ++i) {
    for (std::size_t j = i + 1; j < services.size(); ++j) {
      const ServiceDescription& a = *services[i];
      const ServiceDescription& b = *services[j];
      Lead lead;
      lead.service_a = a.name;
      lead.service_b = b.name;
      lead.recognition = recognize(a, b, cfg);
      lead.scores.cd = correlation_degree(lead.recognition, cfg);
      if (lead.scores.cd >= cfg.zeta) {
        lead.scores.act = verify_actionability(a, b, verifier);
        lead.scores.nov = check_novelty(a.name, b.name, registry);
        lead.scores.sim = ontology_similarity(concepts[i], concepts[j], cfg);
        lead.scores.dc = domain_correlation(*lead.scores.sim, cfg);
        lead.scores.div = diversity(*lead.scores.dc, cfg);
        lead.scores.interestingness =
            interestingness(*lead.scores.act, *lead.scores.nov, *lead.scores.div, cfg);
        lead.status = *lead.scores.interestingness >= cfg.xi ? LeadStatus::interesting
                                                             : LeadStatus::filtered_interest;
      } else {
        lead.status = LeadStatus::filtered_cd;
      }
      leads.push_back(std::move(lead));
    }
  }
  detail::sort_leads(leads);
  return leads;
}

// ---------------------------------------------------------------------------
// Review

enum class ReviewDecision { accept, reject, mark_known };

/// Applies a human decision to an interesting lead. mark_known also records
/// the pair in the registry so future runs score it nov = 0.
inline Lead review_apply(const Lead& lead, ReviewDecision decision, NoveltyRegistry& registry) {
  if (lead.status != LeadStatus::interesting)
    throw InvalidState("review decisions apply only to interesting leads");
  Lead out = lead;
  switch (decision) {
    case ReviewDecision::accept:
      out.status = LeadStatus::accepted;
      break;
    case ReviewDecision::reject:
      out.status = LeadStatus::rejected;
      break;
    case ReviewDecision::mark_known:
      out.status = LeadStatus::known;
      registry.add(lead.service_a, lead.service_b);
      break;
  }
  return out;
}

}  // namespace smine
