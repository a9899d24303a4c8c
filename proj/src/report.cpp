#include "idemlab/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <thread>

#include "idemlab/error.hpp"
#include "idemlab/group_io.hpp"
#include "idemlab/grpcore.hpp"

namespace idemlab {

Int divisor_count(Int n) { return static_cast<Int>(divisors(n).size()); }

Json abelian_json(const AbelianGroup& a) {
  Json out = Json::array();
  for (Int d : a.invariant_factors()) out.push_back(d);
  return out;
}

namespace {

TableRow parse_row(const Json& j) {
  TableRow r;
  r.row = j.value("row", std::string{});
  r.h2 = j.at("h2").get<std::vector<Int>>();
  r.h2_exponent = j.at("exp").get<Int>();
  r.sigma0 = j.at("sigma0").get<Int>();
  r.idem_size = j.at("idem").get<std::size_t>();
  return r;
}

Json row_json(const TableRow& r) {
  return Json{{"row", r.row}, {"h2", r.h2}, {"exp", r.h2_exponent}, {"sigma0", r.sigma0}, {"idem", r.idem_size}};
}

Json members_json(const std::vector<CoverClass>& classes) {
  Json out = Json::array();
  for (const CoverClass& c : classes) {
    out.push_back(Json{{"order", c.representative.domain().order()}, {"name", c.domain_name}});
  }
  return out;
}

Json groups_json(const std::vector<FiniteGroup>& groups) {
  std::vector<std::pair<std::size_t, std::string>> items;
  for (const FiniteGroup& g : groups) items.emplace_back(g.order(), g.name());
  std::sort(items.begin(), items.end());
  Json out = Json::array();
  for (const auto& [order, name] : items) out.push_back(Json{{"order", order}, {"name", name}});
  return out;
}

Json subgroup_json(const AbelianSubgroup& s) {
  Json gens = Json::array();
  for (const auto& v : s.generators()) gens.push_back(v);
  return Json{{"order", s.order()}, {"type", abelian_json(s.isomorphism_type())}, {"generators", gens}};
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InvalidInput("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".grp") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  Json expected = Json::object();
  if (std::filesystem::exists(dir / "expected.json")) {
    std::ifstream in(dir / "expected.json");
    try {
      Json doc = Json::parse(in);
      for (const Json& row : doc.at("groups")) expected[row.at("file").get<std::string>()] = row;
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput("expected.json: " + std::string(e.what()));
    }
  }
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    CorpusEntry entry{f, std::nullopt};
    std::string key = f.filename().string();
    if (expected.contains(key)) entry.expected = parse_row(expected[key]);
    out.push_back(std::move(entry));
  }
  return out;
}

Json info_report(const FiniteGroup& g, Session& session) {
  LocalizedH2 loc = h2_loc(g, session.homology());
  return Json{{"group", g.name()},
              {"order", g.order()},
              {"abelian", g.is_abelian()},
              {"h1", abelian_json(loc.h1)},
              {"h2", abelian_json(loc.h2)},
              {"h2_loc", abelian_json(loc.group())},
              {"simple", is_simple(g)},
              {"perfect", is_perfect(g)},
              {"nilpotent", is_nilpotent(g)},
              {"solvable", is_solvable(g)},
              {"composition_length", composition_length(g)}};
}

Json covers_report(const FiniteGroup& g, Session& session) {
  auto data = session.sur_gensub_data(g);
  Json classes = Json::array();
  std::size_t covers = 0;
  for (const CoverClass& c : data->classes) {
    covers += c.is_cellular_cover ? 1 : 0;
    classes.push_back(Json{{"domain", c.domain_name},
                           {"domain_order", c.representative.domain().order()},
                           {"differential_kernel", subgroup_json(c.kernel_subgroup)},
                           {"generalized_subgroup", c.is_generalized_subgroup},
                           {"cellular_cover", c.is_cellular_cover}});
  }
  return Json{{"group", g.name()},
              {"order", g.order()},
              {"h2_loc", abelian_json(data->h2.group())},
              {"sur_gensub_count", data->classes.size()},
              {"sur_cov_count", covers},
              {"classes", classes}};
}

Json idem_report(const FiniteGroup& g, Session& session, std::size_t iterate, bool inf) {
  auto idem = idem_set(g, session);
  Json out{{"group", g.name()}, {"order", g.order()}, {"idem_size", idem.size()}, {"idem_members", members_json(idem)}};
  if (iterate > 0) {
    IdemIteration it = idem_iter(g, iterate, session);
    Json levels = Json::array();
    for (const auto& level : it.levels) levels.push_back(groups_json(level));
    out["iterates"] = levels;
    out["stabilized_at"] = it.stabilized ? Json(it.stabilized_at) : Json(nullptr);
  }
  if (inf) {
    IdemIteration it = idem_inf(g, session);
    out["idem_inf_size"] = it.levels.back().size();
    out["idem_inf_members"] = groups_json(it.levels.back());
    out["stabilized_at"] = it.stabilized_at;
  }
  return out;
}

namespace {

constexpr int kRecordVersion = 1;

std::uint64_t fnv(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::filesystem::path> record_path(const FiniteGroup& g, Session& session) {
  const auto& dir = session.store().disk_dir();
  if (!dir) return std::nullopt;
  const Limits& lim = session.limits();
  std::string key = std::to_string(kRecordVersion) + "|" + std::to_string(g.fingerprint()) + "|" + g.name() + "|" +
                    std::to_string(g.order()) + "|" + std::to_string(lim.order_cap) + "|" +
                    std::to_string(lim.h2_cap) + "|" + std::to_string(lim.subgroup_cap) + "|" +
                    std::to_string(lim.budget) + "|" + std::to_string(lim.normal_images_only);
  char name[40];
  std::snprintf(name, sizeof name, "rec-%016llx.json", static_cast<unsigned long long>(fnv(key)));
  return *dir / name;
}

// Everything in a record that does not depend on the expected row.
Json computed_record(const FiniteGroup& g, Session& session) {
  Json rec{{"group", g.name()}, {"order", g.order()}};
  try {
    LocalizedH2 loc = h2_loc(g, session.homology());
    auto data = session.sur_gensub_data(g);
    auto idem = idem_set(g, session);
    std::size_t covers = static_cast<std::size_t>(std::count_if(
        data->classes.begin(), data->classes.end(), [](const CoverClass& c) { return c.is_cellular_cover; }));
    Int exponent = loc.h2.exponent();
    rec["h1"] = abelian_json(loc.h1);
    rec["h2"] = abelian_json(loc.h2);
    rec["h2_exponent"] = exponent;
    rec["sigma0"] = divisor_count(exponent);
    rec["h2_loc"] = abelian_json(loc.group());
    rec["sur_gensub_count"] = data->classes.size();
    rec["sur_cov_count"] = covers;
    rec["idem_size"] = idem.size();
    rec["idem_members"] = members_json(idem);
    try {
      rec["idem_inf_size"] = idem_inf(g, session).levels.back().size();
    } catch (const CapExceeded&) {
      rec["idem_inf_size"] = nullptr;
    } catch (const BudgetExceeded&) {
      rec["idem_inf_size"] = nullptr;
    }
  } catch (const CapExceeded& e) {
    rec["status"] = "SKIP";
    rec["reason"] = e.what();
  } catch (const BudgetExceeded& e) {
    rec["status"] = "SKIP";
    rec["reason"] = e.what();
  }
  return rec;
}

Json cached_record(const FiniteGroup& g, Session& session) {
  auto path = record_path(g, session);
  if (path && std::filesystem::exists(*path)) {
    std::ifstream in(*path);
    try {
      Json rec = Json::parse(in);
      if (rec.value("group", std::string{}) == g.name() && rec.value("order", std::size_t{0}) == g.order()) {
        return rec;
      }
    } catch (const nlohmann::json::exception&) {
    }
  }
  Json rec = computed_record(g, session);
  if (path) {
    std::filesystem::create_directories(path->parent_path());
    auto tmp = *path;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream out(tmp);
      out << rec.dump();
    }
    std::filesystem::rename(tmp, *path);
  }
  return rec;
}

Json finish_record(Json rec, const std::optional<TableRow>& expected) {
  if (rec.value("status", std::string{}) == "SKIP") return rec;
  Json diff = Json::array();
  auto check = [&](const char* field, const Json& want) {
    if (rec[field] != want) diff.push_back(std::string(field) + ": expected " + want.dump() + ", got " + rec[field].dump());
  };
  if (expected) {
    rec["table_row_expected"] = row_json(*expected);
    check("h2", Json(expected->h2));
    check("h2_exponent", Json(expected->h2_exponent));
    check("sigma0", Json(expected->sigma0));
    check("idem_size", Json(expected->idem_size));
  } else {
    rec["table_row_expected"] = nullptr;
  }
  rec["match"] = diff.empty();
  rec["status"] = diff.empty() ? "PASS" : "FAIL";
  rec["diff"] = diff;
  return rec;
}

}  // namespace

Json group_record(const FiniteGroup& g, Session& session, const std::optional<TableRow>& expected) {
  return finish_record(computed_record(g, session), expected);
}

VerifyOutcome verify_table(const std::filesystem::path& dir, Session& session) {
  VerifyOutcome out;
  std::vector<CorpusEntry> entries = load_corpus(dir);
  if (entries.empty()) out.warnings.push_back("corpus " + dir.string() + " has no group files");
  std::vector<Json> records(entries.size());
  std::vector<std::string> errors(entries.size());
  auto work = [&](std::size_t i) {
    try {
      FiniteGroup g = load_group_file(entries[i].file, session.limits().order_cap);
      records[i] = finish_record(cached_record(g, session), entries[i].expected);
    } catch (const CapExceeded& e) {
      records[i] = Json{{"group", entries[i].file.stem().string()}, {"status", "SKIP"}, {"reason", e.what()}};
    }
    records[i]["file"] = entries[i].file.filename().string();
  };
  const unsigned jobs = std::max(1u, session.limits().jobs);
  if (jobs == 1 || entries.size() < 2) {
    for (std::size_t i = 0; i < entries.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(entries.size());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, entries.size()); ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < entries.size();) {
          try {
            work(i);
          } catch (...) {
            failures[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }
  Json list = Json::array();
  for (Json& r : records) {
    std::string status = r["status"].get<std::string>();
    if (status == "PASS") ++out.passed;
    if (status == "FAIL") ++out.failed;
    if (status == "SKIP") ++out.skipped;
    list.push_back(std::move(r));
  }
  const Limits& lim = session.limits();
  std::filesystem::path norm = dir.lexically_normal();
  if (norm.filename().empty()) norm = norm.parent_path();
  out.report = Json{{"corpus", norm.filename().string()},
                    {"caps",
                     {{"order", lim.order_cap}, {"h2", lim.h2_cap}, {"subgroups", lim.subgroup_cap}, {"budget", lim.budget}}},
                    {"records", list},
                    {"summary", {{"pass", out.passed}, {"fail", out.failed}, {"skip", out.skipped}}},
                    {"warnings", out.warnings}};
  return out;
}

}  // namespace idemlab
