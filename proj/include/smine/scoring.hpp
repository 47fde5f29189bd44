#pragma once

// The objective evaluation formulas: correlation degree over the recognition
// bits, Jaccard-based ontology similarity, the exponential domain-correlation
// kernel anchored at r0, diversity as its capped inverse, and the weighted
// interestingness of a lead.

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>

#include "smine/config.hpp"
#include "smine/model.hpp"
#include "smine/recognition.hpp"

namespace smine {

/// Per-lead score record. Fields past cd are filled only for leads that pass
/// the correlation-degree filter.
struct Scores {
  double cd = 0.0;                       // [0, 1]
  std::optional<double> sim;             // [0, 1]
  std::optional<double> dc;              // [r0, sqrt(r0)]
  std::optional<int> act;                // 0/1
  std::optional<int> nov;                // 0/1
  std::optional<double> div;             // [sqrt(r0), 1]
  std::optional<double> interestingness; // [0, 1]

  bool operator==(const Scores&) const = default;
};

/// Weighted sum of the four recognition bits.
inline double correlation_degree(const RecognitionVector& v, const MiningConfig& cfg) {
  const double sum = cfg.eta[0] + cfg.eta[1] + cfg.eta[2] + cfg.eta[3];
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidConfig("eta must sum to 1");
  return cfg.eta[0] * v.state_dep + cfg.eta[1] * v.env_dep + cfg.eta[2] * v.people_dep +
         cfg.eta[3] * v.ope_comp;
}

/// |a ∩ b| / |a ∪ b|; two empty sets score 0, not 1 — absence of concepts is
/// no evidence of relatedness.
inline double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t inter = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) ++ia;
    else if (*ib < *ia) ++ib;
    else { ++inter; ++ia; ++ib; }
  }
  const std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

/// Weighted Jaccard over the four concept-set pairs.
inline double ontology_similarity(const ConceptSets& a, const ConceptSets& b,
                                  const MiningConfig& cfg) {
  return cfg.sim_weights[0] * jaccard(a.pre, b.pre) +
         cfg.sim_weights[1] * jaccard(a.post, b.post) +
         cfg.sim_weights[2] * jaccard(a.inputs, b.inputs) +
         cfg.sim_weights[3] * jaccard(a.outputs, b.outputs);
}

inline double ontology_similarity(const ServiceDescription& si, const ServiceDescription& sk,
                                  const MiningConfig& cfg) {
  return ontology_similarity(derive_concept_sets(si), derive_concept_sets(sk), cfg);
}

/// exp(-1 / (lambda0 * (sim + 1))): equals r0 at sim == 0 and climbs strictly
/// toward sqrt(r0) at sim == 1.
inline double domain_correlation(double sim, const MiningConfig& cfg) {
  if (!(sim >= 0.0 && sim <= 1.0))
    throw std::invalid_argument("similarity must lie in [0, 1]");
  return std::exp(-1.0 / (cfg.lambda0() * (sim + 1.0)));
}

/// r0 / dc, capped at 1. dc below r0 (beyond float slack) cannot come from
/// domain_correlation and signals caller corruption.
inline double diversity(double dc, const MiningConfig& cfg) {
  if (dc < cfg.r0 - 1e-9)
    throw std::invalid_argument("domain correlation below r0");
  return std::min(1.0, cfg.r0 / dc);
}

/// act*w1 + nov*w2 + div*w3.
inline double interestingness(int act, int nov, double div, const MiningConfig& cfg) {
  const double sum = cfg.int_weights[0] + cfg.int_weights[1] + cfg.int_weights[2];
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidConfig("int_weights must sum to 1");
  return cfg.int_weights[0] * act + cfg.int_weights[1] * nov + cfg.int_weights[2] * div;
}

}  // namespace smine
