#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "idemlab/corpus.hpp"
#include "idemlab/error.hpp"
#include "idemlab/group_io.hpp"
#include "idemlab/oracles.hpp"
#include "idemlab/report.hpp"

namespace {

using namespace idemlab;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string input;
  std::size_t cap_order = kDefaultOrderCap;
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  std::string cache_dir;
  std::string json_path;
  std::size_t iterate = 0;
  bool inf = false;
};

FiniteGroup load_input(const RunConfig& cfg) {
  if (std::filesystem::exists(cfg.input)) return load_group_file(cfg.input, cfg.cap_order);
  try {
    return named_group(cfg.input);
  } catch (const InvalidInput&) {
    throw InvalidInput("no such file or built-in group: " + cfg.input);
  }
}

void emit(const Json& j, const RunConfig& cfg, bool to_stdout) {
  const std::string text = j.dump(2) + "\n";
  if (!cfg.json_path.empty()) {
    std::ofstream out(cfg.json_path, std::ios::binary);
    if (!out) throw Error("cannot write " + cfg.json_path);
    out << text;
  }
  if (to_stdout) std::cout << text;
}

Session make_session(const RunConfig& cfg) {
  Limits lim;
  lim.order_cap = cfg.cap_order;
  lim.budget = cfg.budget;
  lim.jobs = cfg.jobs;
  std::filesystem::path dir = cfg.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cfg.cache_dir);
  return Session(lim, dir);
}

int run_verify(const RunConfig& cfg) {
  Session session = make_session(cfg);
  VerifyOutcome out = verify_table(cfg.input, session);
  for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
  for (const Json& r : out.report["records"]) {
    std::cout << r["status"].get<std::string>() << "  " << r["file"].get<std::string>();
    if (r.contains("diff")) {
      for (const auto& d : r["diff"]) std::cout << "\n      " << d.get<std::string>();
    }
    if (r.contains("reason")) std::cout << "  (" << r["reason"].get<std::string>() << ")";
    std::cout << "\n";
  }
  std::cout << out.passed << " pass, " << out.failed << " fail, " << out.skipped << " skip\n";
  emit(out.report, cfg, false);
  return out.failed ? kFail : kOk;
}

int run_oracle_cmd(const RunConfig& cfg) {
  Session session = make_session(cfg);
  OracleReport rep = run_oracle(cfg.input, session);
  std::cout << (rep.passed() ? "PASS" : "FAIL") << "  " << rep.suite << "  checks=" << rep.checks
            << " nonvacuous=" << rep.nonvacuous << " failures=" << rep.failures << "\n";
  for (const auto& m : rep.messages) std::cout << "  " << m << "\n";
  if (!cfg.json_path.empty()) {
    emit(Json{{"suite", rep.suite},
              {"passed", rep.passed()},
              {"checks", rep.checks},
              {"nonvacuous", rep.nonvacuous},
              {"failures", rep.failures},
              {"messages", rep.messages}},
         cfg, false);
  }
  return rep.passed() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cellular covers and idempotent functors of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--cap-order", cfg.cap_order, "Largest group order accepted")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Search budget in nodes per Hom computation")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cfg.cache_dir, "Cache directory (default $IDEMLAB_CACHE or .idemlab-cache)");
  app.add_option("--json", cfg.json_path, "Write the JSON report to this path");

  auto* info = app.add_subcommand("info", "Order, H1, H2, H2 localized and structure flags");
  info->add_option("group", cfg.input, "Group file or built-in name")->required();
  auto* covers = app.add_subcommand("covers", "Surjective generalized subgroups and cellular covers");
  covers->add_option("group", cfg.input, "Group file or built-in name")->required();
  auto* idem = app.add_subcommand("idem", "Idem(G) and its iterates");
  idem->add_option("group", cfg.input, "Group file or built-in name")->required();
  idem->add_option("--iterate", cfg.iterate, "Compute Idem^1 .. Idem^n")->check(CLI::PositiveNumber);
  idem->add_flag("--inf", cfg.inf, "Iterate Idem to its fixpoint");
  auto* verify = app.add_subcommand("verify-table", "Check a corpus against its expected table rows");
  verify->add_option("corpus", cfg.input, "Corpus directory")->required();
  auto* oracle = app.add_subcommand("oracle", "Run a brute-force property suite");
  oracle->add_option("suite", cfg.input, "Suite name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(cfg);
    if (*oracle) return run_oracle_cmd(cfg);
    FiniteGroup g = load_input(cfg);
    Session session = make_session(cfg);
    Json out;
    if (*info) out = info_report(g, session);
    if (*covers) out = covers_report(g, session);
    if (*idem) out = idem_report(g, session, cfg.iterate, cfg.inf);
    emit(out, cfg, true);
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kFail;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
