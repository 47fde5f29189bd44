// smine: mine candidate composition leads out of IoT service repositories.
//
// Subcommands:
//   generate    write a seeded synthetic repository
//   mine        score every service pair and write a leads file
//   review      interactive accept/reject/mark-known pass over interesting leads
//   experiment  run a parameter sweep and export CSV metrics
//   validate    check a repository file against the model invariants
//
// Exit codes: 0 success, 1 validation/config/data failure, 2 usage error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smine/smine.hpp"

namespace fs = std::filesystem;

namespace {

using smine::detail::format_double;

std::string explain(const smine::Lead& lead) {
  std::vector<std::string> reasons;
  if (lead.recognition.state_dep)
    reasons.push_back("active at overlapping times in nearby locations");
  if (lead.recognition.env_dep)
    reasons.push_back("effects of one can satisfy operating conditions of the other (" +
                      smine::to_string(lead.recognition.direction) + ")");
  if (lead.recognition.people_dep) reasons.push_back("used by the same person or group");
  if (lead.recognition.ope_comp) reasons.push_back("output types of one match input types of the other");
  if (reasons.empty()) return "no recognized dependency";
  std::string out = reasons[0];
  for (std::size_t i = 1; i < reasons.size(); ++i) out += "; " + reasons[i];
  return out;
}

void print_lead(std::ostream& os, const smine::Lead& lead, std::size_t index, std::size_t total) {
  os << "\nlead " << index << "/" << total << ": " << lead.service_a << " <-> " << lead.service_b
     << "\n  recognition: state=" << lead.recognition.state_dep
     << " env=" << lead.recognition.env_dep << " people=" << lead.recognition.people_dep
     << " ope=" << lead.recognition.ope_comp
     << " direction=" << smine::to_string(lead.recognition.direction)
     << "\n  scores: cd=" << format_double(lead.scores.cd);
  if (lead.scores.sim) os << " sim=" << format_double(*lead.scores.sim);
  if (lead.scores.dc) os << " dc=" << format_double(*lead.scores.dc);
  if (lead.scores.act) os << " act=" << *lead.scores.act;
  if (lead.scores.nov) os << " nov=" << *lead.scores.nov;
  if (lead.scores.div) os << " div=" << format_double(*lead.scores.div);
  if (lead.scores.interestingness)
    os << " interestingness=" << format_double(*lead.scores.interestingness);
  os << "\n  why: " << explain(lead) << "\n";
}

struct GenerateArgs {
  std::string out;
  std::string params_file;
  std::optional<int> services;
  std::optional<std::uint64_t> seed;
};

int run_generate(const GenerateArgs& args) {
  smine::GeneratorParams params;
  if (!args.params_file.empty()) params = smine::load_generator_params(args.params_file);
  if (args.services) params.n_services = *args.services;
  if (args.seed) params.seed = *args.seed;

  const auto repo = smine::generate_repository(params);
  smine::RepositoryFile rf;
  rf.header = smine::json{{"generator", smine::kGeneratorId},
                          {"seed", params.seed},
                          {"params", params}};
  rf.services = repo;
  smine::save_repository_file(args.out, rf);
  std::cout << "wrote " << repo.size() << " services -> " << args.out << "\n";
  return 0;
}

struct MineArgs {
  std::string repo;
  std::string config_file;
  std::string registry_file;
  std::string out;
  std::optional<double> zeta;
  std::optional<double> xi;
  std::string verifier = "always_true";
  bool ignore_spatial = false;
};

int run_mine(const MineArgs& args) {
  smine::MiningConfig cfg;
  if (!args.config_file.empty()) cfg = smine::load_config(args.config_file);
  if (args.zeta) cfg.zeta = *args.zeta;
  if (args.xi) cfg.xi = *args.xi;
  if (args.ignore_spatial) cfg.ignore_spatial = true;
  cfg.validate();
  const auto verifier = smine::verifier_from_string(args.verifier);

  smine::NoveltyRegistry registry;
  if (!args.registry_file.empty() && fs::exists(args.registry_file))
    registry = smine::load_registry(args.registry_file);

  const auto rf = smine::load_repository_file(args.repo);
  const auto leads = smine::mine(rf.services, cfg, registry, verifier);
  smine::save_leads_jsonl(args.out, leads);

  const auto row = smine::summarize_leads(leads);
  std::cout << "pairs=" << leads.size() << " cd_passing=" << row.total_leads
            << " interesting=" << row.interesting_count << " -> " << args.out << "\n";
  return 0;
}

struct ReviewArgs {
  std::string leads_file;
  std::string registry_file;
};

int run_review(const ReviewArgs& args) {
  const std::string original = smine::read_text_file(args.leads_file);
  std::vector<std::string> lines;
  {
    std::istringstream in(original);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  smine::NoveltyRegistry registry;
  if (fs::exists(args.registry_file)) registry = smine::load_registry(args.registry_file);

  std::vector<std::pair<std::size_t, smine::Lead>> interesting;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    smine::Lead lead;
    try {
      lead = smine::json::parse(lines[i]).get<smine::Lead>();
    } catch (const std::exception& e) {
      throw std::runtime_error(args.leads_file + ":" + std::to_string(i + 1) + ": " + e.what());
    }
    if (lead.status == smine::LeadStatus::interesting) interesting.emplace_back(i, lead);
  }

  if (interesting.empty()) {
    std::cout << "no interesting leads to review\n";
    smine::save_registry(args.registry_file, registry);
    return 0;
  }

  std::size_t accepted = 0, rejected = 0, marked = 0;
  for (std::size_t k = 0; k < interesting.size(); ++k) {
    auto& [line_index, lead] = interesting[k];
    print_lead(std::cout, lead, k + 1, interesting.size());
    bool decided = false;
    bool quit = false;
    while (!decided && !quit) {
      std::cout << "decision [a]ccept [r]eject [k]nown [s]kip [q]uit > " << std::flush;
      std::string answer;
      if (!std::getline(std::cin, answer)) { quit = true; break; }
      if (answer.empty()) continue;
      switch (answer[0]) {
        case 'a':
          lead = smine::review_apply(lead, smine::ReviewDecision::accept, registry);
          ++accepted;
          decided = true;
          break;
        case 'r':
          lead = smine::review_apply(lead, smine::ReviewDecision::reject, registry);
          ++rejected;
          decided = true;
          break;
        case 'k':
          lead = smine::review_apply(lead, smine::ReviewDecision::mark_known, registry);
          ++marked;
          decided = true;
          break;
        case 's':
          decided = true;  // leave the line untouched
          break;
        case 'q':
          quit = true;
          break;
        default:
          std::cout << "unrecognized choice '" << answer << "'\n";
          break;
      }
      if (decided && lead.status != smine::LeadStatus::interesting)
        lines[line_index] = smine::json(lead).dump();
    }
    if (quit) break;
  }

  // untouched lines go back byte-for-byte
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  smine::write_text_file(args.leads_file, out);
  smine::save_registry(args.registry_file, registry);
  std::cout << "\naccepted=" << accepted << " rejected=" << rejected << " marked_known=" << marked
            << "\n";
  return 0;
}

struct ExperimentArgs {
  std::string sweep_file;
  std::string out;
  int reps = 1;
  std::optional<std::uint64_t> seed;
  bool timings = false;
};

int run_experiment_cmd(const ExperimentArgs& args) {
  auto sweep = smine::load_sweep(args.sweep_file);
  if (args.seed)
    for (auto& point : sweep) point.params.seed = *args.seed;
  const auto report = smine::run_experiment(sweep, args.reps);
  std::ostringstream os;
  smine::export_csv(report, os, args.timings);
  smine::write_text_file(args.out, os.str());
  std::cout << "rows=" << report.rows.size() << " -> " << args.out << "\n";
  return 0;
}

struct ValidateArgs {
  std::string repo;
};

int run_validate(const ValidateArgs& args) {
  const auto rf = smine::load_repository_file(args.repo);
  bool any_error = false;

  std::set<std::string> names;
  for (std::size_t i = 0; i < rf.services.size(); ++i) {
    const auto& s = rf.services[i];
    if (!s.name.empty() && !names.insert(s.name).second) {
      std::cout << "error services[" << i << "]: duplicate service name '" << s.name << "'\n";
      any_error = true;
    }
    for (const auto& v : smine::validate_service(s)) {
      std::cout << (v.severity == smine::Severity::error ? "error" : "warning") << " services["
                << i << "]" << (s.name.empty() ? "" : " ('" + s.name + "')") << " " << v.path
                << ": " << v.message << "\n";
      if (v.severity == smine::Severity::error) any_error = true;
    }
  }
  if (!any_error) {
    std::cout << "ok: " << rf.services.size() << " services\n";
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"service relationship mining over IoT service repositories"};
  app.require_subcommand(1);

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "generate a seeded synthetic repository");
  gen->add_option("--out", gen_args.out, "output repository JSON file")->required();
  gen->add_option("--params", gen_args.params_file, "generator params JSON file");
  auto* gen_services = gen->add_option("--services", "number of services");
  auto* gen_seed = gen->add_option("--seed", "generator seed");

  MineArgs mine_args;
  auto* mine = app.add_subcommand("mine", "mine composition leads from a repository");
  mine->add_option("--repo", mine_args.repo, "repository JSON file")->required();
  mine->add_option("--config", mine_args.config_file, "mining config JSON file");
  mine->add_option("--registry", mine_args.registry_file, "novelty registry JSON file");
  mine->add_option("--out", mine_args.out, "output leads file (one JSON object per line)")
      ->required();
  auto* mine_zeta = mine->add_option("--zeta", "correlation degree threshold");
  auto* mine_xi = mine->add_option("--xi", "interestingness threshold");
  mine->add_option("--verifier", mine_args.verifier, "actionability verifier: always_true|chain_sim");
  mine->add_flag("--ignore-spatial", mine_args.ignore_spatial,
                 "skip the spatial clause of state dependency");

  ReviewArgs review_args;
  auto* review = app.add_subcommand("review", "review interesting leads interactively");
  review->add_option("--leads", review_args.leads_file, "leads file to review")->required();
  review->add_option("--registry", review_args.registry_file, "novelty registry JSON file")
      ->required();

  ExperimentArgs exp_args;
  auto* experiment = app.add_subcommand("experiment", "run a sweep and export CSV metrics");
  experiment->add_option("--sweep", exp_args.sweep_file, "sweep JSON file")->required();
  experiment->add_option("--reps", exp_args.reps, "repetitions per sweep point");
  auto* exp_seed = experiment->add_option("--seed", "base seed overriding every sweep point");
  experiment->add_option("--out", exp_args.out, "output CSV file")->required();
  experiment->add_flag("--timings", exp_args.timings, "include the wall_time_ms column");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "validate a repository file");
  validate->add_option("--repo", validate_args.repo, "repository JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      if (*gen_services) gen_args.services = gen_services->as<int>();
      if (*gen_seed) gen_args.seed = gen_seed->as<std::uint64_t>();
      return run_generate(gen_args);
    }
    if (*mine) {
      if (*mine_zeta) mine_args.zeta = mine_zeta->as<double>();
      if (*mine_xi) mine_args.xi = mine_xi->as<double>();
      return run_mine(mine_args);
    }
    if (*review) return run_review(review_args);
    if (*experiment) {
      if (*exp_seed) exp_args.seed = exp_seed->as<std::uint64_t>();
      return run_experiment_cmd(exp_args);
    }
    if (*validate) return run_validate(validate_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
