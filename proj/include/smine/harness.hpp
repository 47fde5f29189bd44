#pragma once

// Experiment driver: runs generate -> mine over a sweep of parameter/config
// points, collecting per-run lead counts and score means, and exports them as
// CSV. Counts follow the pipeline: total leads are the pairs that pass the
// correlation-degree filter, interesting leads the ones that also pass the
// interestingness filter.

#include <charconv>
#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "smine/config.hpp"
#include "smine/mining.hpp"
#include "smine/synth.hpp"

namespace smine {

struct ExperimentRow {
  std::string params_summary;
  int n_services = 0;
  std::size_t total_leads = 0;       // pairs with cd >= zeta
  std::optional<double> avg_cd;      // mean cd over those pairs
  std::size_t interesting_count = 0;
  std::optional<double> avg_interestingness;  // mean over interesting leads
  double wall_time_ms = 0.0;

  bool operator==(const ExperimentRow&) const = default;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;

  bool operator==(const ExperimentReport&) const = default;
};

struct SweepPoint {
  std::string name;  // optional label; auto-numbered when empty
  GeneratorParams params;
  MiningConfig config;

  bool operator==(const SweepPoint&) const = default;
};

/// Counts and means from a mined lead list. Means over zero leads stay absent
/// rather than reading as zero.
inline ExperimentRow summarize_leads(const std::vector<Lead>& leads) {
  ExperimentRow row;
  double cd_sum = 0.0;
  double int_sum = 0.0;
  for (const auto& lead : leads) {
    if (!cd_passing(lead.status)) continue;
    ++row.total_leads;
    cd_sum += lead.scores.cd;
    if (lead.status == LeadStatus::interesting) {
      ++row.interesting_count;
      int_sum += lead.scores.interestingness.value_or(0.0);
    }
  }
  if (row.total_leads > 0) row.avg_cd = cd_sum / static_cast<double>(row.total_leads);
  if (row.interesting_count > 0)
    row.avg_interestingness = int_sum / static_cast<double>(row.interesting_count);
  return row;
}

namespace detail {

inline std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

inline std::string point_summary(const SweepPoint& point, std::size_t index,
                                 std::uint64_t effective_seed) {
  std::ostringstream os;
  os << (point.name.empty() ? "point" + std::to_string(index) : point.name)
     << " n=" << point.params.n_services << " seed=" << effective_seed
     << " zeta=" << format_double(point.config.zeta) << " xi=" << format_double(point.config.xi);
  return os.str();
}

}  // namespace detail

/// One row per sweep point per repetition; repetition r uses seed
/// params.seed + r. Mining runs with the always-true verifier and an empty
/// registry. Errors carry the offending sweep point in their message.
inline ExperimentReport run_experiment(const std::vector<SweepPoint>& sweep, int repetitions) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  ExperimentReport report;
  const NoveltyRegistry empty_registry;
  for (std::size_t pi = 0; pi < sweep.size(); ++pi) {
    const SweepPoint& point = sweep[pi];
    for (int rep = 0; rep < repetitions; ++rep) {
      GeneratorParams params = point.params;
      params.seed = point.params.seed + static_cast<std::uint64_t>(rep);
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const auto repo = generate_repository(params);
        const auto leads = mine(repo, point.config, empty_registry, VerifierStrategy::always_true);
        const auto t1 = std::chrono::steady_clock::now();
        ExperimentRow row = summarize_leads(leads);
        row.params_summary = detail::point_summary(point, pi, params.seed);
        row.n_services = params.n_services;
        row.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        report.rows.push_back(std::move(row));
      } catch (const std::exception& e) {
        throw std::runtime_error("sweep point " + std::to_string(pi) +
                                 (point.name.empty() ? "" : " ('" + point.name + "')") +
                                 ", rep " + std::to_string(rep) + ": " + e.what());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// CSV export

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace detail

/// RFC-4180-quoted rows, one per sweep x repetition; absent means stay empty
/// cells. Timings vary run to run, so their column is opt-in to keep default
/// reports byte-reproducible.
inline void export_csv(const ExperimentReport& report, std::ostream& os,
                       bool include_timings = false) {
  os << "params_summary,n_services,total_leads,avg_cd,interesting_count,avg_interestingness";
  if (include_timings) os << ",wall_time_ms";
  os << "\n";
  for (const auto& row : report.rows) {
    os << detail::csv_field(row.params_summary) << ',' << row.n_services << ','
       << row.total_leads << ','
       << (row.avg_cd ? detail::format_double(*row.avg_cd) : std::string()) << ','
       << row.interesting_count << ','
       << (row.avg_interestingness ? detail::format_double(*row.avg_interestingness)
                                   : std::string());
    if (include_timings) os << ',' << detail::format_double(row.wall_time_ms);
    os << "\n";
  }
}

}  // namespace smine
