// End-to-end checks of the smine binary: exit codes, file outputs, and the
// interactive review loop driven through a pipe.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <doctest.h>

#include "smine/json_io.hpp"

using namespace smine;
namespace fs = std::filesystem;

namespace {

const std::string kCli = SMINE_CLI_PATH;
const fs::path kDataDir = SMINE_DATA_DIR;

struct Sandbox {
  fs::path dir;
  Sandbox() {
    dir = fs::temp_directory_path() / ("smine_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Sandbox() { fs::remove_all(dir); }
  std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args, const std::string& stdin_text = "") {
  static int counter = 0;
  const fs::path log = fs::temp_directory_path() / ("smine_cli_log_" + std::to_string(::getpid()) +
                                                    "_" + std::to_string(counter++));
  std::string cmd = kCli + " " + args + " >" + log.string() + " 2>&1";
  if (!stdin_text.empty()) {
    const fs::path in = log.string() + ".in";
    std::ofstream(in) << stdin_text;
    cmd += " <" + in.string();
  }
  const int rc = std::system(cmd.c_str());
  fs::remove(log);
  fs::remove(fs::path(log.string() + ".in"));
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string capture(const std::string& args) {
  const fs::path log = fs::temp_directory_path() / ("smine_cli_out_" + std::to_string(::getpid()));
  const std::string cmd = kCli + " " + args + " >" + log.string() + " 2>&1";
  [[maybe_unused]] const int rc = std::system(cmd.c_str());
  std::string out = read_text_file(log);
  fs::remove(log);
  return out;
}

}  // namespace

TEST_CASE("generate, validate, mine pipeline") {
  Sandbox box;
  const auto repo = box.file("repo.json");
  const auto leads = box.file("leads.jsonl");

  CHECK(run("generate --services 12 --seed 7 --out " + repo) == 0);
  CHECK(fs::exists(repo));
  CHECK(run("validate --repo " + repo) == 0);
  CHECK(run("mine --repo " + repo + " --out " + leads) == 0);

  const auto parsed = load_leads_jsonl(leads);
  CHECK(parsed.size() == 12 * 11 / 2);

  const auto rf = load_repository_file(repo);
  CHECK(rf.header.at("generator") == kGeneratorId);
  CHECK(rf.header.at("seed") == 7);
}

TEST_CASE("shipped smart-home repository validates and mines") {
  Sandbox box;
  const auto data = (kDataDir / "smart_home.json").string();
  CHECK(run("validate --repo " + data) == 0);

  const auto leads_path = box.file("home_leads.jsonl");
  CHECK(run("mine --repo " + data + " --out " + leads_path + " --verifier chain_sim") == 0);
  const auto leads = load_leads_jsonl(leads_path);
  CHECK(leads.size() == 6);  // C(4,2)

  bool found = false;
  for (const auto& lead : leads)
    if (lead.service_a == "air_conditioner" && lead.service_b == "stove") {
      found = true;
      CHECK(lead.status == LeadStatus::interesting);
      CHECK(lead.recognition.state_dep == 1);
      CHECK(lead.recognition.env_dep == 1);
      CHECK(lead.recognition.people_dep == 1);
      CHECK(*lead.scores.act == 1);
    }
  CHECK(found);
}

TEST_CASE("exit codes distinguish usage errors from validation failures") {
  Sandbox box;
  const auto repo = box.file("repo.json");
  REQUIRE(run("generate --services 5 --seed 1 --out " + repo) == 0);

  CHECK(run("mine --repo " + repo + " --out " + box.file("x.jsonl") + " --zeta 1.01") == 1);
  CHECK(run("mine --repo " + repo + " --out " + box.file("x.jsonl") + " --verifier psychic") == 1);
  CHECK(run("mine --repo " + box.file("absent.json") + " --out " + box.file("x.jsonl")) == 1);

  CHECK(run("") == 2);                     // no subcommand
  CHECK(run("frobnicate") == 2);           // unknown subcommand
  CHECK(run("mine --bogus-flag") == 2);    // unknown flag
  CHECK(run("mine --out only.jsonl") == 2);  // missing required --repo

  const auto msg = capture("mine --repo " + repo + " --out " + box.file("x.jsonl") + " --zeta 1.01");
  CHECK(msg.find("zeta") != std::string::npos);
}

TEST_CASE("validate reports violations with field paths and exits nonzero") {
  Sandbox box;
  const auto bad = box.file("bad.json");
  write_text_file(bad, R"({"services": [
    {"name": "empty_ops", "operations": [],
     "states": [{"kind": "active", "start_ts": 5, "end_ts": 2,
                 "location": {"lat": 0, "lon": 0, "radius_m": 10}}]}
  ]})");
  CHECK(run("validate --repo " + bad) == 1);
  const auto msg = capture("validate --repo " + bad);
  CHECK(msg.find("operations empty") != std::string::npos);
  CHECK(msg.find("negative duration") != std::string::npos);
  CHECK(msg.find("states[0]") != std::string::npos);

  const auto dup = box.file("dup.json");
  write_text_file(dup, R"({"services": [
    {"name": "same", "operations": [{"name": "op"}]},
    {"name": "same", "operations": [{"name": "op"}]}
  ]})");
  CHECK(run("validate --repo " + dup) == 1);
  CHECK(capture("validate --repo " + dup).find("duplicate service name") != std::string::npos);

  const auto syntax = box.file("syntax.json");
  write_text_file(syntax, "{not json");
  CHECK(run("validate --repo " + syntax) == 1);
  CHECK(capture("validate --repo " + syntax).find("parse error") != std::string::npos);
}

TEST_CASE("experiment runs are byte-reproducible") {
  Sandbox box;
  const auto sweep = box.file("sweep.json");
  write_text_file(sweep, R"([
    {"name": "s20", "params": {"n_services": 20}},
    {"name": "s40", "params": {"n_services": 40}}
  ])");
  const auto csv1 = box.file("r1.csv");
  const auto csv2 = box.file("r2.csv");
  CHECK(run("experiment --sweep " + sweep + " --reps 2 --seed 5 --out " + csv1) == 0);
  CHECK(run("experiment --sweep " + sweep + " --reps 2 --seed 5 --out " + csv2) == 0);
  const auto bytes1 = read_text_file(csv1);
  CHECK(bytes1 == read_text_file(csv2));
  CHECK(bytes1.find("params_summary,n_services,total_leads,avg_cd,interesting_count,"
                    "avg_interestingness\n") == 0);
  CHECK(bytes1.find("wall_time_ms") == std::string::npos);

  const auto timed = box.file("timed.csv");
  CHECK(run("experiment --sweep " + sweep + " --reps 1 --seed 5 --timings --out " + timed) == 0);
  CHECK(read_text_file(timed).find("wall_time_ms") != std::string::npos);

  CHECK(run("experiment --sweep " + box.file("no_such.json") + " --reps 1 --out " + csv1) == 1);
}

TEST_CASE("review applies decisions and preserves untouched lines") {
  Sandbox box;
  const auto data = (kDataDir / "smart_home.json").string();
  const auto leads_path = box.file("leads.jsonl");
  const auto registry_path = box.file("registry.json");
  REQUIRE(run("mine --repo " + data + " --out " + leads_path + " --verifier chain_sim") == 0);

  const auto before = load_leads_jsonl(leads_path);
  std::vector<std::string> before_lines;
  {
    std::istringstream in(read_text_file(leads_path));
    for (std::string line; std::getline(in, line);) before_lines.push_back(line);
  }
  std::size_t interesting = 0;
  for (const auto& lead : before)
    if (lead.status == LeadStatus::interesting) ++interesting;
  REQUIRE(interesting >= 1);

  // mark the first interesting lead as known, then quit
  CHECK(run("review --leads " + leads_path + " --registry " + registry_path, "k\nq\n") == 0);

  const auto reg = load_registry(registry_path);
  CHECK(reg.contains("air_conditioner", "stove"));

  std::vector<std::string> after_lines;
  {
    std::istringstream in(read_text_file(leads_path));
    for (std::string line; std::getline(in, line);) after_lines.push_back(line);
  }
  REQUIRE(after_lines.size() == before_lines.size());
  std::size_t changed = 0;
  for (std::size_t i = 0; i < before_lines.size(); ++i)
    if (before_lines[i] != after_lines[i]) ++changed;
  CHECK(changed == 1);

  const auto after = load_leads_jsonl(leads_path);
  std::size_t known = 0;
  for (const auto& lead : after)
    if (lead.status == LeadStatus::known) ++known;
  CHECK(known == 1);

  // a second pass accepts the remaining interesting leads (if any) or exits clean
  CHECK(run("review --leads " + leads_path + " --registry " + registry_path, "a\na\na\na\n") == 0);

  // re-mining with the updated registry scores the known pair nov=0, which
  // drops it below the interestingness threshold
  const auto remined_path = box.file("leads2.jsonl");
  CHECK(run("mine --repo " + data + " --registry " + registry_path + " --out " + remined_path +
            " --verifier chain_sim") == 0);
  for (const auto& lead : load_leads_jsonl(remined_path))
    if (lead.service_a == "air_conditioner" && lead.service_b == "stove") {
      CHECK(*lead.scores.nov == 0);
      CHECK(lead.status == LeadStatus::filtered_interest);
    }
}

TEST_CASE("generate takes params from a file with flag overrides") {
  Sandbox box;
  const auto params = box.file("params.json");
  write_text_file(params, R"({"n_services": 7, "ops_per_service": [2, 2], "seed": 11})");

  const auto repo_a = box.file("a.json");
  CHECK(run("generate --params " + params + " --out " + repo_a) == 0);
  const auto loaded_a = load_repository_file(repo_a);
  CHECK(loaded_a.services.size() == 7);
  for (const auto& s : loaded_a.services) CHECK(s.operations.size() == 2);

  const auto repo_b = box.file("b.json");
  CHECK(run("generate --params " + params + " --services 9 --out " + repo_b) == 0);
  CHECK(load_repository_file(repo_b).services.size() == 9);

  CHECK(run("generate --services 3 --seed 1 --out " + box.file("bad.json") + " --params " +
            box.file("nope.json")) == 1);
}
