#include "idemlab/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "idemlab/corpus.hpp"
#include "idemlab/error.hpp"
#include "idemlab/grpcore.hpp"

namespace idemlab {

void OracleReport::fail(std::string message) {
  ++failures;
  if (messages.size() < 50) messages.push_back(std::move(message));
}

namespace {

std::vector<FiniteGroup> groups_up_to(std::size_t n, const SearchOptions& so) {
  std::vector<FiniteGroup> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto gs = groups_of_order(k, so);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

std::vector<FiniteGroup> nilpotent_up_to(std::size_t n) {
  std::vector<FiniteGroup> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto gs = nilpotent_groups(k);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

SearchOptions no_store(const Session& s) {
  SearchOptions o = s.search();
  o.store = nullptr;
  return o;
}

bool kernel_central(const GroupHom& a, const Subgroup& ker) {
  const FiniteGroup& x = a.domain();
  for (Elem k : ker.elements()) {
    for (Elem y = 0; y < x.order(); ++y) {
      if (x.mul(k, y) != x.mul(y, k)) return false;
    }
  }
  return true;
}

// Γ_i(G) for i ≥ 1 including the terminal term.
std::vector<Subgroup> gamma_terms(const FiniteGroup& g) { return lower_central_series(g); }

// Subgroup {x : x^k = e} when it is one (always, for abelian A).
Subgroup torsion_subgroup(const FiniteGroup& a, Int k) {
  std::vector<Elem> elems;
  for (Elem x = 0; x < a.order(); ++x) {
    if (a.power(x, static_cast<std::uint64_t>(k)) == 0) elems.push_back(x);
  }
  return Subgroup(a, elems);
}

std::string pair_name(const FiniteGroup& x, const FiniteGroup& g) { return x.name() + " -> " + g.name(); }

}  // namespace

OracleReport suite_charc_c_mono(Session& s, const OracleOptions& o) {
  OracleReport rep{"charcCmono"};
  const SearchOptions plain = no_store(s);
  const SearchOptions cached = s.search();
  std::map<std::pair<std::uint64_t, std::vector<Elem>>, bool> hom_to_kernel_trivial;
  auto check = [&](const GroupHom& a) {
    const FiniteGroup& x = a.domain();
    Subgroup ker = a.kernel();
    bool central = kernel_central(a, ker);
    bool no_homs = true;
    if (central && !ker.is_trivial()) {
      auto key = std::make_pair(x.fingerprint(), std::vector<Elem>(ker.elements().begin(), ker.elements().end()));
      auto it = hom_to_kernel_trivial.find(key);
      if (it == hom_to_kernel_trivial.end()) {
        it = hom_to_kernel_trivial.emplace(key, is_hom_trivial_set(x, as_group(ker).group, plain)).first;
      }
      no_homs = it->second;
    }
    bool brute = is_generalized_subgroup(a, GensubMethod::Brute, cached);
    bool characterized = central && no_homs;
    ++rep.checks;
    if (brute && !ker.is_trivial()) ++rep.nonvacuous;
    if (brute != characterized) {
      rep.fail(pair_name(x, a.codomain()) + ": brute " + std::to_string(brute) + ", central kernel without homs " +
               std::to_string(characterized));
    }
    if (structural_gensub(a) != brute) rep.fail(pair_name(x, a.codomain()) + ": structural test disagrees");
  };

  const auto small = groups_up_to(o.exhaustive_order, plain);
  for (const FiniteGroup& x : small) {
    for (const FiniteGroup& g : small) {
      visit_homs(x, g, HomQuery{}, [&](std::span<const Elem> m) {
        check(GroupHom(x, g, std::vector<Elem>(m.begin(), m.end())));
        return true;
      }, plain);
    }
  }

  const auto pool = groups_up_to(o.sample_order, plain);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const HomSet>> sets;
  for (std::size_t i = 0; i < o.samples; ++i) {
    std::size_t xi = pick(rng), gi = pick(rng);
    auto& set = sets[{xi, gi}];
    if (!set) set = std::make_shared<const HomSet>(enumerate_homs(pool[xi], pool[gi], plain));
    std::uniform_int_distribution<std::size_t> h(0, set->size() - 1);
    check(set->homs[h(rng)]);
  }
  return rep;
}

OracleReport suite_covf_abelian(Session& s, const OracleOptions& o) {
  OracleReport rep{"covfabelian"};
  const SearchOptions plain = no_store(s);
  for (std::size_t n = 1; n <= o.abelian_order; ++n) {
    for (const FiniteGroup& a : abelian_groups(n)) {
      std::set<std::vector<Elem>> torsion;
      Int exponent = 1;
      for (Elem x = 0; x < a.order(); ++x) exponent = lcm_int(exponent, a.element_order(x));
      for (Int k : divisors(exponent)) {
        Subgroup t = torsion_subgroup(a, k);
        torsion.insert(std::vector<Elem>(t.elements().begin(), t.elements().end()));
      }
      std::set<std::vector<Elem>> cellular;
      for (const Subgroup& sub : subgroups(a, s.limits().subgroup_cap)) {
        SubgroupAsGroup sg = as_group(sub);
        bool cov = is_cellular_cover(sg.inclusion, plain);
        std::vector<Elem> key(sub.elements().begin(), sub.elements().end());
        ++rep.checks;
        if (cov) cellular.insert(key);
        if (cov != (torsion.count(key) > 0)) {
          rep.fail(a.name() + ": subgroup of order " + std::to_string(sub.order()) +
                   (cov ? " is a cover but not a torsion subgroup" : " is a torsion subgroup but not a cover"));
        }
      }
      std::set<std::vector<Elem>> images;
      auto idem = idem_set(a, s);
      for (const CoverClass& c : idem) images.insert(std::vector<Elem>(c.image.elements().begin(), c.image.elements().end()));
      ++rep.checks;
      if (images != torsion || idem.size() != torsion.size()) {
        rep.fail(a.name() + ": Idem has " + std::to_string(idem.size()) + " classes, " +
                 std::to_string(torsion.size()) + " torsion subgroups");
      }
    }
  }
  ++rep.checks;
  std::size_t z12 = idem_set(cyclic_group(12), s).size();
  if (z12 != 6) rep.fail("|Cov(Z/12)| = " + std::to_string(z12));
  return rep;
}

OracleReport suite_key_nilpotent(Session& s, const OracleOptions& o) {
  OracleReport rep{"keynilpotent"};
  const SearchOptions plain = no_store(s);
  const auto targets = groups_up_to(o.target_order, plain);
  for (const FiniteGroup& g : nilpotent_up_to(o.nilpotent_order)) {
    if (!is_nilpotent(g)) rep.fail(g.name() + " is not nilpotent");
    for (const FiniteGroup& h : targets) {
      ++rep.checks;
      if (!is_hom_trivial_set(g, h, plain)) continue;
      ++rep.nonvacuous;
      std::vector<std::uint8_t> hit(g.order(), 0);
      for (Elem x = 0; x < g.order(); ++x) hit[g.power(x, h.order())] = 1;
      if (std::count(hit.begin(), hit.end(), 1) != static_cast<std::ptrdiff_t>(g.order())) {
        rep.fail(pair_name(g, h) + ": power map by " + std::to_string(h.order()) + " is not onto");
      }
    }
  }
  return rep;
}

OracleReport suite_big_subgroups(Session& s, const OracleOptions& o) {
  OracleReport rep{"bigsubgroups"};
  const SearchOptions plain = no_store(s);
  const auto targets = groups_up_to(o.target_order, plain);
  for (const FiniteGroup& g : nilpotent_up_to(o.nilpotent_order)) {
    std::vector<FiniteGroup> gammas;
    for (const Subgroup& t : gamma_terms(g)) gammas.push_back(as_group(t).group);
    std::vector<FiniteGroup> quotients;
    for (const Subgroup& n : normal_subgroups(g)) quotients.push_back(quotient(g, n).group);
    for (const FiniteGroup& x : targets) {
      ++rep.checks;
      if (is_hom_trivial_set(g, x, plain)) {
        ++rep.nonvacuous;
        for (std::size_t i = 0; i < gammas.size(); ++i) {
          if (!is_hom_trivial_set(gammas[i], x, plain)) {
            rep.fail(pair_name(g, x) + ": Gamma_" + std::to_string(i + 1) + " has a nontrivial hom");
          }
        }
      }
      ++rep.checks;
      if (is_hom_trivial_set(x, g, plain)) {
        ++rep.nonvacuous;
        for (const FiniteGroup& q : quotients) {
          if (!is_hom_trivial_set(x, q, plain)) {
            rep.fail(pair_name(x, g) + ": quotient of order " + std::to_string(q.order()) + " receives a hom");
          }
        }
      }
    }
  }
  return rep;
}

OracleReport suite_classification(Session& s, const OracleOptions& o) {
  OracleReport rep{"classification"};
  const SearchOptions plain = no_store(s);
  std::vector<FiniteGroup> corpus = groups_up_to(o.classification_order, plain);
  corpus.push_back(alternating_group(5));
  for (const FiniteGroup& g : s5_subgroup_types()) corpus.push_back(g);
  for (const FiniteGroup& g : corpus) {
    ++rep.checks;
    try {
      auto data = s.sur_gensub_data(g);
      std::size_t quot = quot_classes(data->h2.group()).size();
      std::size_t ext = surjective_gensub_extensions(g, s).size();
      if (data->classes.size() != quot || ext != quot) {
        rep.fail(g.name() + ": " + std::to_string(data->classes.size()) + " classes, " + std::to_string(ext) +
                 " extensions, |Quot| = " + std::to_string(quot));
      }
      if (quot > 1) ++rep.nonvacuous;
      for (const CoverClass& c : data->classes) {
        if (!c.is_generalized_subgroup || !is_generalized_subgroup(c.representative, GensubMethod::Brute, s.search())) {
          rep.fail(g.name() + ": model " + c.domain_name + " is not a generalized subgroup");
        }
        if (!(differential_kernel(c.representative, s) == c.kernel_subgroup)) {
          rep.fail(g.name() + ": differential of " + c.domain_name + " misidentified");
        }
      }
    } catch (const InternalError& e) {
      rep.fail(g.name() + ": " + e.what());
    }
  }
  return rep;
}

OracleReport suite_cov_simple(Session& s, const OracleOptions&) {
  OracleReport rep{"covsimple"};
  for (const std::string name : {"A5", "PSL2_7", "A6"}) {
    FiniteGroup g = named_group(name);
    ++rep.checks;
    try {
      OutAction act = out_action_on_classes(g, s);
      auto idem = idem_set(g, s);
      auto data = s.sur_gensub_data(g);
      // Out-fixed subgroups of H₂(G) (= H₂∖₁ for perfect G).
      std::size_t fixed = act.fixed.size();
      std::size_t sur = static_cast<std::size_t>(
          std::count_if(idem.begin(), idem.end(), [](const CoverClass& c) { return c.is_surjective; }));
      if (sur != fixed || idem.size() != fixed + 1) {
        rep.fail(name + ": " + std::to_string(idem.size()) + " covers, " + std::to_string(fixed) + " fixed classes");
      }
      if (!act.inner_acts_trivially) rep.fail(name + ": inner automorphisms move a class");
      bool cyclic = data->h2.group().rank() <= 1;
      bool trivial = std::all_of(act.permutations.begin(), act.permutations.end(), [](const auto& p) {
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (p[i] != i) return false;
        }
        return true;
      });
      if (cyclic && !trivial) rep.fail(name + ": Out acts nontrivially with cyclic multiplier");
    } catch (const InternalError& e) {
      rep.fail(name + ": " + e.what());
    }
  }
  return rep;
}

OracleReport suite_cover_properties(Session& s, const OracleOptions& o) {
  OracleReport rep{"coverproperties"};
  const SearchOptions plain = no_store(s);
  std::vector<FiniteGroup> corpus = groups_up_to(std::min<std::size_t>(o.classification_order, 24), plain);
  corpus.push_back(alternating_group(5));
  corpus.push_back(sl2_5());
  for (const FiniteGroup& g : corpus) {
    try {
      auto data = s.sur_gensub_data(g);
      const AbelianGroup& l = data->h2.group();
      std::set<AbelianSubgroup> torsion;
      for (Int k : divisors(l.exponent())) torsion.insert(k_torsion(l, k));
      OutAction act = out_action_on_classes(g, s);
      std::set<std::size_t> fixed(act.fixed.begin(), act.fixed.end());
      for (std::size_t i = 0; i < data->classes.size(); ++i) {
        const CoverClass& c = data->classes[i];
        ++rep.checks;
        if (torsion.count(c.kernel_subgroup) && !c.is_cellular_cover) {
          rep.fail(g.name() + ": torsion differential " + c.domain_name + " is not a cover");
        }
        if (l.rank() <= 1 && !c.is_cellular_cover) rep.fail(g.name() + ": cyclic case with a non-cover");
        if (c.is_cellular_cover && !fixed.count(i)) rep.fail(g.name() + ": cover kernel not Out-fixed");
        if (!c.is_cellular_cover && fixed.count(i)) {
          rep.messages.push_back(g.name() + ": Out-fixed class " + c.domain_name + " is not a cover");
        }
      }
      ++rep.checks;
      CoverClass init = initial_cover(g, s);
      if (!init.is_cellular_cover) rep.fail(g.name() + ": initial cover is not cellular");
      if (!l.is_trivial()) {
        for (const Cocycle& f : two_cocycle_classes(g, l, s.homology())) {
          CentralExtension ext = build_central_extension(f, "", s.limits().order_cap);
          if (!is_stem(ext)) continue;
          ++rep.checks;
          if (!covers_equivalent(ext.projection, init.representative, plain)) {
            rep.fail(g.name() + ": stem extension not equivalent to the initial cover");
          }
        }
      }
      if (g.order() > 24) continue;
      auto ends = hom_set(g, g, s.search());
      for (const CoverClass& c : idem_set(g, s)) {
        ++rep.checks;
        for (const GroupHom& e : ends->homs) {
          bool inside = std::all_of(c.image.elements().begin(), c.image.elements().end(),
                                    [&](Elem x) { return c.image.contains(e(x)); });
          if (!inside) {
            rep.fail(g.name() + ": image of " + c.domain_name + " is not fully invariant");
            break;
          }
        }
        if (!kernel_central(c.representative, c.representative.kernel())) {
          rep.fail(g.name() + ": cover " + c.domain_name + " has a non-central kernel");
        }
      }
    } catch (const InternalError& e) {
      rep.fail(g.name() + ": " + e.what());
    }
  }
  return rep;
}

OracleReport suite_abelian_module(Session&, const OracleOptions&) {
  OracleReport rep{"abelianmodule"};
  AbelianGroup v = AbelianGroup::from_cyclic_orders({2, 2});
  IntMatrix m(2, 2);
  m(0, 0) = 0;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  // m has order 3 on (ℤ/2)².
  IntMatrix m3 = m * m * m;
  ++rep.checks;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      if (((m3(i, j) % 2) + 2) % 2 != (i == j ? 1 : 0)) rep.fail("matrix does not have order 3");
    }
  }
  auto inv = invariant_subgroups(v, {m});
  ++rep.checks;
  if (inv.size() != 2) rep.fail("order-3 automorphism fixes " + std::to_string(inv.size()) + " subgroups");
  ++rep.checks;
  if (inv.size() + 1 != 3 || inv.size() + 2 != 4) rep.fail("invariant-subgroup arithmetic");
  ++rep.checks;
  if (all_subgroups(v).size() != 5) rep.fail("(Z/2)^2 should have 5 subgroups");
  return rep;
}

OracleReport suite_iteration(Session& s, const OracleOptions&) {
  OracleReport rep{"iteration"};
  FiniteGroup a5 = alternating_group(5);
  IdemIteration inf = idem_inf(a5, s);
  IdemIteration two = idem_iter(a5, 2, s);
  ++rep.checks;
  if (inf.stabilized_at != 2) rep.fail("A5 stabilized at " + std::to_string(inf.stabilized_at));
  ++rep.checks;
  const auto& top = inf.levels.back();
  std::multiset<std::size_t> orders;
  for (const auto& g : top) orders.insert(g.order());
  if (orders != std::multiset<std::size_t>{1, 2, 60, 120}) rep.fail("Idem^inf(A5) has the wrong members");
  ++rep.checks;
  if (two.levels.back().size() != top.size()) rep.fail("Idem^2(A5) differs from Idem^inf(A5)");
  FiniteGroup sl = sl2_5();
  bool has_sl = std::any_of(top.begin(), top.end(), [&](const FiniteGroup& g) { return are_isomorphic(g, sl); });
  ++rep.checks;
  if (!has_sl) rep.fail("Idem^inf(A5) lacks SL(2,5)");
  for (Int p : {2, 3, 5, 7}) {
    IdemIteration z = idem_inf(cyclic_group(static_cast<std::size_t>(p)), s);
    ++rep.checks;
    if (z.stabilized_at != 1 || z.levels.back().size() != 2) rep.fail("Z/" + std::to_string(p) + " iteration");
  }
  return rep;
}

OracleReport suite_depth(Session& s, const OracleOptions&) {
  OracleReport rep{"depth"};
  std::vector<FiniteGroup> corpus;
  for (Int p : {2, 3}) {
    for (int k = 1; k <= 3; ++k) {
      for (const FiniteGroup& g : p_groups(p, k)) corpus.push_back(g);
    }
  }
  corpus.push_back(symmetric_group(3));
  corpus.push_back(alternating_group(4));
  corpus.push_back(alternating_group(5));
  for (const FiniteGroup& g : corpus) {
    ++rep.checks;
    DepthReport d = iterated_gensub_depth_check(g, s);
    rep.nonvacuous += d.composites_checked;
    if (!d.stabilized_in_bound) {
      rep.fail(g.name() + ": stabilized at " + std::to_string(d.stabilized_at) + ", composition length " +
               std::to_string(d.composition_length));
    }
    if (!d.composites_ok) rep.fail(g.name() + ": a composite is not a generalized subgroup");
  }
  return rep;
}

OracleReport suite_simple_targets(Session& s, const OracleOptions&) {
  OracleReport rep{"simpletargets"};
  const SearchOptions plain = no_store(s);
  FiniteGroup a5 = alternating_group(5);
  for (const CoverClass& c : idem_set(a5, s)) {
    const FiniteGroup& x = c.representative.domain();
    if (x.order() == 1) continue;
    visit_homs(x, a5, HomQuery{}, [&](std::span<const Elem> m) {
      GroupHom h(x, a5, std::vector<Elem>(m.begin(), m.end()));
      if (h.is_trivial()) return true;
      ++rep.checks;
      if (!is_cellular_cover(h, s.search())) rep.fail(c.domain_name + ": a nontrivial map to A5 is not a cover");
      return true;
    }, plain);
  }
  return rep;
}

namespace {

using SuiteFn = OracleReport (*)(Session&, const OracleOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"abelianmodule", suite_abelian_module}, {"bigsubgroups", suite_big_subgroups},
      {"charcCmono", suite_charc_c_mono},       {"classification", suite_classification},
      {"coverproperties", suite_cover_properties}, {"covfabelian", suite_covf_abelian},
      {"covsimple", suite_cov_simple},          {"depth", suite_depth},
      {"iteration", suite_iteration},           {"keynilpotent", suite_key_nilpotent},
      {"simpletargets", suite_simple_targets},
  };
  return r;
}

}  // namespace

std::vector<std::string> oracle_suites() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

OracleReport run_oracle(const std::string& name, Session& s, const OracleOptions& o) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(s, o);
  }
  std::string list;
  for (const auto& n : oracle_suites()) list += (list.empty() ? "" : ", ") + n;
  throw InvalidInput("unknown suite '" + name + "'; available: " + list);
}

}  // namespace idemlab
