// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "idemlab/corpus.hpp"
#include "idemlab/error.hpp"
#include "idemlab/grpcore.hpp"
#include "idemlab/homology.hpp"
#include "idemlab/oracles.hpp"
#include "idemlab/report.hpp"

#ifndef IDEMLAB_DATA_DIR
#error "IDEMLAB_DATA_DIR must be defined"
#endif
#ifndef IDEMLAB_CLI
#error "IDEMLAB_CLI must be defined"
#endif

using namespace idemlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  double dt = seconds_since(t0);
  if (!out.ok) ++failures;
  std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << out.detail.str() << " ("
            << std::fixed;
  std::cout.precision(2);
  std::cout << dt << " s)" << std::endl;
}

std::string invariants(const AbelianGroup& a) { return a.to_string(); }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void report_suite(Outcome& out, const OracleReport& r) {
  out.detail << " " << r.suite << ": " << r.checks << " checks, ";
  if (r.nonvacuous) out.detail << r.nonvacuous << " nonvacuous, ";
  out.detail << r.failures << " failures;";
  for (std::size_t i = 0; i < r.messages.size() && i < 3; ++i) out.detail << " {" << r.messages[i] << "}";
  out.require(r.passed(), r.suite);
  out.require(r.checks > 0, r.suite + " ran no checks");
}

}  // namespace

int main() {
  const std::filesystem::path corpus = std::filesystem::path(IDEMLAB_DATA_DIR) / "corpus";

  criterion(1, "Schur multipliers", [](Outcome& out) {
    Session s;
    std::size_t nonzero = 0;
    for (std::size_t n = 1; n <= 32; ++n) nonzero += !schur_multiplier(cyclic_group(n), s.homology()).is_trivial();
    out.require(nonzero == 0, "H2(Z/n) = 0 for n <= 32");
    AbelianGroup a5 = schur_multiplier(alternating_group(5), s.homology());
    AbelianGroup l27 = schur_multiplier(psl2_7(), s.homology());
    AbelianGroup a6 = schur_multiplier(alternating_group(6), s.homology());
    out.detail << " H2(Z/n<=32)=0, H2(A5)=" << invariants(a5) << ", H2(PSL2_7)=" << invariants(l27)
               << ", H2(A6)=" << invariants(a6) << ";";
    out.require(a5.invariant_factors() == std::vector<Int>{2}, "H2(A5) = Z/2");
    out.require(l27.invariant_factors() == std::vector<Int>{2}, "H2(PSL2_7) = Z/2");
    out.require(a6.invariant_factors() == std::vector<Int>{6}, "H2(A6) = Z/6");
  });

  criterion(2, "|Idem| of simple groups by the brute-force cover oracle", [](Outcome& out) {
    Session s;
    struct Case {
      std::string name;
      std::size_t expected;
    };
    for (const Case& c : {Case{"Z2", 2}, Case{"Z3", 2}, Case{"Z5", 2}, Case{"A5", 3}, Case{"PSL2_7", 3},
                          Case{"A6", 5}}) {
      FiniteGroup g = named_group(c.name);
      auto idem = idem_set(g, s);
      // Every member re-decided by the Hom-bijection oracle.
      bool all_cellular = true;
      for (const auto& m : idem) all_cellular &= is_cellular_cover(m.representative, s.search());
      OutAction act = out_action_on_classes(g, s);
      out.detail << " " << c.name << "=" << idem.size() << " (1+" << act.fixed.size() << " fixed);";
      out.require(idem.size() == c.expected, c.name + " size");
      out.require(all_cellular, c.name + " members are covers");
      out.require(idem.size() == 1 + act.fixed.size(), c.name + " count vs Out-fixed classes");
    }
  });

  criterion(3, "SL(2,5) -> A5 is a cellular cover; Z/2 -> A5 through it is not a generalized subgroup",
            [](Outcome& out) {
              FiniteGroup a5 = alternating_group(5);
              FiniteGroup sl = sl2_5();
              Session s;
              GroupHom c = initial_cover(a5, s).representative;
              FiniteGroup x = c.domain();
              std::uint64_t self = count_homs(x, x);
              std::uint64_t into = count_homs(x, a5);
              out.detail << " |Hom(SL,SL)|=" << self << ", |Hom(SL,A5)|=" << into << ";";
              out.require(are_isomorphic(x, sl), "domain is SL(2,5)");
              out.require(self == 121 && into == 121, "counts equal 121");
              out.require(is_cellular_cover(c), "cellular cover");
              Subgroup z = center(x);
              out.require(z.order() == 2, "center of order 2");
              SubgroupAsGroup zg = as_group(z);
              GroupHom composite = compose(c, zg.inclusion);
              bool gensub = is_generalized_subgroup(composite, GensubMethod::Brute);
              out.detail << " Z/2 -> A5 generalized subgroup: " << (gensub ? "yes" : "no") << ";";
              out.require(!gensub, "composite is not a generalized subgroup");
              out.require(is_generalized_subgroup(zg.inclusion), "Z/2 -> SL(2,5) is a generalized subgroup");
            });

  criterion(4, "|sur_gensub_classes| = |Quot(H2 localized)| (order <= 24, A5, S5 subgroups)", [](Outcome& out) {
    Limits lim;
    lim.verify_classification = false;
    Session s(lim);
    report_suite(out, suite_classification(s));
  });

  criterion(5, "brute generalized-subgroup test vs central kernel with Hom(X,Ker)=0", [](Outcome& out) {
    Session s;
    report_suite(out, suite_charc_c_mono(s));
  });

  criterion(6, "abelian cellular inclusions are the torsion subgroups; |Cov(Z/12)| = 6", [](Outcome& out) {
    Session s;
    report_suite(out, suite_covf_abelian(s));
    std::size_t z12 = idem_set(cyclic_group(12), s).size();
    out.detail << " |Cov(Z/12)|=" << z12 << ";";
    out.require(z12 == 6, "|Cov(Z/12)| = 6");
  });

  criterion(7, "Idem^inf(A5) = Idem^2(A5) = {1, Z/2, SL(2,5), A5}", [](Outcome& out) {
    Session s;
    FiniteGroup a5 = alternating_group(5);
    IdemIteration inf = idem_inf(a5, s);
    IdemIteration two = idem_iter(a5, 2, s);
    const auto& top = inf.levels.back();
    out.detail << " stabilized at " << inf.stabilized_at << ", members:";
    std::multiset<std::size_t> orders;
    for (const auto& g : top) {
      orders.insert(g.order());
      out.detail << " " << g.name();
    }
    out.detail << ";";
    out.require(inf.stabilized_at == 2, "stabilization at n = 2");
    out.require(top.size() == 4, "4 classes");
    out.require(orders == std::multiset<std::size_t>{1, 2, 60, 120}, "member orders");
    bool has_sl = false, has_z2 = false;
    for (const auto& g : top) {
      has_sl |= g.order() == 120 && are_isomorphic(g, sl2_5());
      has_z2 |= g.order() == 2;
    }
    out.require(has_sl && has_z2, "members are SL(2,5) and Z/2");
    out.require(two.levels.back().size() == top.size(), "Idem^2 = Idem^inf");
    for (const auto& g : two.levels.back()) {
      bool found = false;
      for (const auto& h : top) found |= are_isomorphic(g, h);
      out.require(found, "Idem^2 member missing from Idem^inf");
    }
  });

  criterion(8, "nilpotent power-map surjectivity and Gamma-vanishing (order <= 32 vs H <= 8)", [](Outcome& out) {
    Session s;
    report_suite(out, suite_key_nilpotent(s));
    report_suite(out, suite_big_subgroups(s));
  });

  criterion(9, "order-3 automorphism of (Z/2)^2 fixes exactly 2 subgroups", [](Outcome& out) {
    Session s;
    report_suite(out, suite_abelian_module(s));
  });

  criterion(10, "warm-cache verify-table: identical JSON, >= 5x faster", [&](Outcome& out) {
    auto dir = std::filesystem::temp_directory_path() / ("idemlab-accept-" + std::to_string(std::random_device{}()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto run = [&](const std::string& tag) {
      std::string cmd = std::string("\"") + IDEMLAB_CLI + "\" --cache-dir \"" + (dir / "cache").string() +
                        "\" --json \"" + (dir / (tag + ".json")).string() + "\" verify-table \"" + corpus.string() +
                        "\" > \"" + (dir / (tag + ".log")).string() + "\" 2>&1";
      auto t0 = Clock::now();
      int rc = std::system(cmd.c_str());
      double dt = seconds_since(t0);
      out.require(rc == 0, tag + " run exit status");
      return dt;
    };
    double cold = run("cold");
    double warm = run("warm");
    std::string a = read_file(dir / "cold.json"), b = read_file(dir / "warm.json");
    out.detail << " cold " << cold << " s, warm " << warm << " s, speedup " << cold / std::max(warm, 1e-9) << "x;";
    out.require(!a.empty() && a == b, "byte-identical JSON");
    out.require(cold >= 5 * warm, "speedup >= 5x");
    std::filesystem::remove_all(dir);
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
