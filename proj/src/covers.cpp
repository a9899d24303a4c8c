#include "idemlab/covers.hpp"

#include <algorithm>
#include <set>

#include "idemlab/corpus.hpp"
#include "idemlab/error.hpp"
#include "idemlab/grpcore.hpp"

namespace idemlab {

namespace {

std::string describe(const FiniteGroup& g) {
  if (g.order() == 1) return "1";
  if (g.is_abelian()) return abelian_invariants(g).group.to_string();
  return g.name();
}

std::string subgroup_name(const FiniteGroup& parent, const Subgroup& s) {
  if (s.is_whole()) return parent.name();
  return parent.name() + "_sub" + std::to_string(s.order());
}

FiniteGroup subgroup_group(const FiniteGroup& parent, const Subgroup& s) {
  if (s.is_whole()) return parent;
  FiniteGroup j = as_group(s, subgroup_name(parent, s)).group;
  return j.renamed(describe(j));
}

GroupHom inclusion_of(const FiniteGroup& parent, const Subgroup& s, const FiniteGroup& j) {
  if (s.is_whole()) return GroupHom::identity(parent);
  auto elems = s.elements();
  return GroupHom(j, parent, std::vector<Elem>(elems.begin(), elems.end()));
}

CentralExtension identity_extension(const FiniteGroup& i) {
  AbelianGroup zero;
  FiniteGroup kg = zero.to_group("1");
  return CentralExtension{i, zero, i, GroupHom::identity(i), GroupHom(kg, i, std::vector<Elem>{0})};
}

}  // namespace

Session::Session(Limits limits, std::optional<std::filesystem::path> cache_dir)
    : limits_(limits), store_(std::make_unique<HomStore>(std::move(cache_dir))) {
  if (limits_.order_cap == 0 || limits_.h2_cap == 0 || limits_.subgroup_cap == 0) {
    throw InvalidInput("caps must be positive");
  }
}

SearchOptions Session::search() const {
  SearchOptions o;
  o.budget = limits_.budget;
  o.jobs = limits_.jobs;
  o.store = store_.get();
  return o;
}

HomologyOptions Session::homology() const {
  HomologyOptions o;
  o.h2_cap = limits_.h2_cap;
  o.order_cap = limits_.order_cap;
  o.store = store_.get();
  return o;
}

std::shared_ptr<const Session::SurGensubData> Session::sur_gensub_data(const FiniteGroup& i) {
  {
    std::lock_guard lock(mu_);
    if (auto it = sur_memo_.find(i.fingerprint()); it != sur_memo_.end() && it->second->group.same_table(i)) {
      return it->second;
    }
  }
  const SearchOptions so = search();
  const HomologyOptions ho = homology();
  auto data = std::make_shared<SurGensubData>(SurGensubData{i, h2_loc(i, ho), identity_extension(i), {}, {}});
  const AbelianGroup& l = data->h2.group();
  if (!l.is_trivial()) {
    bool found = false;
    for (const Cocycle& f : two_cocycle_classes(i, l, ho)) {
      if (f.is_zero()) continue;
      CentralExtension ext = build_central_extension(f, "", limits_.order_cap);
      if (is_stem(ext) && structural_gensub(ext.projection)) {
        data->stem = std::move(ext);
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("no stem extension by H2 localized for " + i.name());
    data->stem.total = data->stem.total.renamed(l.to_string() + "." + i.name());
    data->stem.projection = GroupHom(data->stem.total, i, std::vector<Elem>(data->stem.projection.map().begin(),
                                                                            data->stem.projection.map().end()));
  }
  const CentralExtension& stem = data->stem;
  data->quotients = quot_classes(l);
  for (const QuotClass& q : data->quotients) {
    std::vector<Elem> nelems;
    for (std::size_t idx : q.kernel.element_indices()) nelems.push_back(stem.embedding(static_cast<Elem>(idx)));
    Subgroup n(stem.total, nelems);
    std::string name = q.quotient.is_trivial() ? i.name() : q.quotient.to_string() + "." + i.name();
    GroupHom rep = stem.projection;
    if (!n.is_trivial()) {
      Quotient quo = quotient(stem.total, n);
      FiniteGroup x = quo.group.renamed(name);
      std::vector<Elem> psi(x.order(), 0);
      for (Elem e = 0; e < stem.total.order(); ++e) psi[quo.projection(e)] = stem.projection(e);
      rep = GroupHom(x, i, std::move(psi));
    } else if (!l.is_trivial()) {
      rep = GroupHom(stem.total.renamed(name), i, std::vector<Elem>(rep.map().begin(), rep.map().end()));
    }
    CoverClass c{rep, Subgroup::whole(i), q.kernel, true, structural_gensub(rep), false, describe(rep.domain())};
    if (!c.is_generalized_subgroup) throw InternalError("model is not a generalized subgroup");
    c.is_cellular_cover = is_cellular_cover(rep, so);
    data->classes.push_back(std::move(c));
  }

  if (limits_.verify_classification && !l.is_trivial()) {
    std::vector<GroupHom> kept = surjective_gensub_extensions(i, *this);
    if (kept.size() != data->quotients.size()) {
      throw InternalError("classification count mismatch for " + i.name() + ": " + std::to_string(kept.size()) +
                          " extensions vs " + std::to_string(data->quotients.size()) + " quotients");
    }
    std::vector<int> hits(data->classes.size(), 0);
    for (const GroupHom& h : kept) {
      int matches = 0;
      for (std::size_t j = 0; j < data->classes.size(); ++j) {
        if (covers_equivalent(h, data->classes[j].representative, so)) {
          ++matches;
          ++hits[j];
        }
      }
      if (matches != 1) throw InternalError("extension matches " + std::to_string(matches) + " models");
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
      throw InternalError("models and extensions are not in bijection");
    }
  }

  std::lock_guard lock(mu_);
  sur_memo_[i.fingerprint()] = data;
  return data;
}

std::vector<GroupHom> surjective_gensub_extensions(const FiniteGroup& i, Session& session) {
  const SearchOptions so = session.search();
  const HomologyOptions ho = session.homology();
  AbelianGroup l = h2_loc(i, ho).group();
  std::set<AbelianGroup> types;
  for (const QuotClass& q : quot_classes(l)) types.insert(q.quotient);
  std::vector<GroupHom> kept;
  for (const AbelianGroup& k : types) {
    FiniteGroup kg = k.to_group();
    for (const Cocycle& f : two_cocycle_classes(i, k, ho)) {
      CentralExtension ext = build_central_extension(f, "", session.limits().order_cap);
      if (!k.is_trivial() && !is_hom_trivial_set(ext.total, kg, so)) continue;
      bool seen = std::any_of(kept.begin(), kept.end(),
                              [&](const GroupHom& h) { return covers_equivalent(ext.projection, h, so); });
      if (!seen) kept.push_back(ext.projection);
    }
  }
  return kept;
}

std::vector<CoverClass> sur_gensub_classes(const FiniteGroup& i, Session& session) {
  return session.sur_gensub_data(i)->classes;
}

AbelianSubgroup differential_kernel(const GroupHom& c, Session& session) {
  if (!c.is_surjective()) throw InvalidInput("differential_kernel needs a surjective map");
  auto data = session.sur_gensub_data(c.codomain());
  const SearchOptions so = session.search();
  std::optional<AbelianSubgroup> match;
  int count = 0;
  for (const CoverClass& m : data->classes) {
    if (covers_equivalent(c, m.representative, so)) {
      ++count;
      match = m.kernel_subgroup;
    }
  }
  if (count != 1) throw InternalError("cover matches " + std::to_string(count) + " models");
  return *match;
}

CoverClass initial_cover(const FiniteGroup& g, Session& session) {
  auto data = session.sur_gensub_data(g);
  for (const CoverClass& c : data->classes) {
    if (c.kernel_subgroup.order() == 1) {
      if (!c.is_cellular_cover) throw InternalError("initial cover is not cellular");
      return c;
    }
  }
  throw InternalError("no class with trivial differential kernel");
}

InG gensub_classes(const FiniteGroup& g, Session& session) {
  InG out;
  for (const Subgroup& s : subgroups(g, session.limits().subgroup_cap)) {
    auto data = session.sur_gensub_data(subgroup_group(g, s));
    for (const QuotClass& q : data->quotients) out.entries.push_back({s, q});
  }
  return out;
}

std::vector<CoverClass> gensub_cover_classes(const FiniteGroup& g, Session& session) {
  std::vector<CoverClass> out;
  const SearchOptions so = session.search();
  for (const Subgroup& s : subgroups(g, session.limits().subgroup_cap)) {
    FiniteGroup j = subgroup_group(g, s);
    GroupHom inc = inclusion_of(g, s, j);
    auto data = session.sur_gensub_data(j);
    for (const CoverClass& c : data->classes) {
      GroupHom comp = compose(inc, c.representative);
      CoverClass cc{comp, s, c.kernel_subgroup, s.is_whole(), structural_gensub(comp), false, c.domain_name};
      cc.is_cellular_cover = is_cellular_cover(comp, so);
      out.push_back(std::move(cc));
    }
  }
  return out;
}

std::vector<CoverClass> sur_cov_classes(const FiniteGroup& g, Session& session) {
  std::vector<CoverClass> out;
  for (const CoverClass& c : session.sur_gensub_data(g)->classes) {
    if (c.is_cellular_cover) out.push_back(c);
  }
  return out;
}

OutAction out_action_on_classes(const FiniteGroup& g, Session& session) {
  const SearchOptions so = session.search();
  auto data = session.sur_gensub_data(g);
  OutAction out{automorphisms(g, so), {}, true, {}};
  const auto& classes = data->classes;
  auto locate = [&](const GroupHom& c) {
    std::size_t found = classes.size();
    int count = 0;
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (covers_equivalent(c, classes[j].representative, so)) {
        found = j;
        ++count;
      }
    }
    if (count != 1) throw InternalError("twisted class matches " + std::to_string(count) + " classes");
    return found;
  };
  for (std::size_t r : out.automorphisms.outer_representatives) {
    std::vector<std::size_t> perm;
    for (const CoverClass& c : classes) perm.push_back(locate(compose(out.automorphisms.all[r], c.representative)));
    out.permutations.push_back(std::move(perm));
  }
  for (Elem s : g.generators()) {
    GroupHom conj = conjugation(g, s);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (!covers_equivalent(compose(conj, classes[i].representative), classes[i].representative, so)) {
        out.inner_acts_trivially = false;
      }
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    bool fixed = std::all_of(out.permutations.begin(), out.permutations.end(),
                             [&](const std::vector<std::size_t>& p) { return p[i] == i; });
    if (fixed) out.fixed.push_back(i);
  }
  return out;
}

std::vector<CoverClass> idem_set(const FiniteGroup& g, Session& session) {
  const SearchOptions so = session.search();
  std::vector<Subgroup> images =
      session.limits().normal_images_only ? normal_subgroups(g) : subgroups(g, session.limits().subgroup_cap);
  std::vector<CoverClass> out;
  for (const Subgroup& s : images) {
    FiniteGroup j = subgroup_group(g, s);
    GroupHom inc = inclusion_of(g, s, j);
    auto data = session.sur_gensub_data(j);
    for (const CoverClass& c : data->classes) {
      GroupHom comp = s.is_whole() ? c.representative : compose(inc, c.representative);
      bool cellular = s.is_whole() ? c.is_cellular_cover : is_cellular_cover(comp, so);
      if (!cellular) continue;
      out.push_back(CoverClass{comp, s, c.kernel_subgroup, s.is_whole(), true, true, c.domain_name});
    }
  }
  if (is_simple(g)) {
    OutAction action = out_action_on_classes(g, session);
    std::size_t surjective = static_cast<std::size_t>(
        std::count_if(out.begin(), out.end(), [](const CoverClass& c) { return c.is_surjective; }));
    if (surjective != action.fixed.size() || out.size() != 1 + action.fixed.size()) {
      throw InternalError("simple group " + g.name() + ": " + std::to_string(out.size()) +
                          " cover classes but " + std::to_string(action.fixed.size()) + " fixed classes");
    }
  }
  return out;
}

std::vector<FiniteGroup> dedupe_isomorphic(const std::vector<FiniteGroup>& list) {
  std::vector<FiniteGroup> reps;
  std::vector<std::vector<std::uint64_t>> sigs;
  for (const FiniteGroup& g : list) add_up_to_isomorphism(reps, g, sigs);
  return reps;
}

namespace {

// Closure step shared by the Idem and generalized-subgroup iterations.
template <class Domains>
IdemIteration iterate(const FiniteGroup& g, std::size_t max_levels, bool stop_when_stable, Domains&& domains) {
  IdemIteration it;
  std::vector<FiniteGroup> reps;
  std::vector<std::vector<std::uint64_t>> sigs;
  std::vector<FiniteGroup> frontier;
  for (const FiniteGroup& x : domains(g)) {
    std::size_t before = reps.size();
    if (add_up_to_isomorphism(reps, x, sigs) == before) frontier.push_back(x);
  }
  it.levels.push_back(reps);
  while (it.levels.size() < max_levels) {
    std::vector<FiniteGroup> next;
    for (const FiniteGroup& x : frontier) {
      for (const FiniteGroup& y : domains(x)) {
        std::size_t before = reps.size();
        if (add_up_to_isomorphism(reps, y, sigs) == before) next.push_back(y);
      }
    }
    it.levels.push_back(reps);
    if (next.empty() && !it.stabilized) {
      it.stabilized = true;
      it.stabilized_at = it.levels.size() - 1;
      if (stop_when_stable) break;
    }
    frontier = std::move(next);
  }
  return it;
}

}  // namespace

IdemIteration idem_iter(const FiniteGroup& g, std::size_t n, Session& session) {
  if (n == 0) throw InvalidInput("iteration depth must be positive");
  auto domains = [&](const FiniteGroup& x) {
    std::vector<FiniteGroup> out;
    for (const CoverClass& c : idem_set(x, session)) out.push_back(c.representative.domain().renamed(c.domain_name));
    return out;
  };
  // One extra level decides whether the n-th level is already stable.
  IdemIteration it = iterate(g, n + 1, false, domains);
  if (!it.stabilized || it.stabilized_at > n) {
    it.stabilized = false;
    it.stabilized_at = 0;
  }
  it.levels.resize(n);
  return it;
}

IdemIteration idem_inf(const FiniteGroup& g, Session& session, std::size_t max_depth) {
  auto domains = [&](const FiniteGroup& x) {
    std::vector<FiniteGroup> out;
    for (const CoverClass& c : idem_set(x, session)) out.push_back(c.representative.domain().renamed(c.domain_name));
    return out;
  };
  IdemIteration it = iterate(g, max_depth, true, domains);
  if (!it.stabilized) throw CapExceeded("Idem iteration did not stabilize within " + std::to_string(max_depth));
  it.levels.resize(it.stabilized_at);
  if (is_simple(g) && it.stabilized_at > 2) {
    throw InternalError("Idem iteration of a simple group did not stabilize at 2");
  }
  return it;
}

DepthReport iterated_gensub_depth_check(const FiniteGroup& g, Session& session) {
  DepthReport rep;
  rep.composition_length = composition_length(g);
  const SearchOptions so = session.search();
  auto domains = [&](const FiniteGroup& x) {
    std::vector<FiniteGroup> out;
    for (const Subgroup& s : subgroups(x, session.limits().subgroup_cap)) {
      auto data = session.sur_gensub_data(subgroup_group(x, s));
      for (const CoverClass& c : data->classes) out.push_back(c.representative.domain().renamed(c.domain_name));
    }
    // Composites of two surjective generalized subgroups Y ↠ X ↠ x.
    auto top = session.sur_gensub_data(x);
    for (const CoverClass& a : top->classes) {
      auto below = session.sur_gensub_data(a.representative.domain());
      for (const CoverClass& b : below->classes) {
        GroupHom ab = compose(a.representative, b.representative);
        ++rep.composites_checked;
        if (!structural_gensub(ab) || !is_generalized_subgroup(ab, GensubMethod::Brute, so)) {
          rep.composites_ok = false;
        }
      }
    }
    return out;
  };
  IdemIteration it = iterate(g, rep.composition_length + 3, true, domains);
  for (const auto& level : it.levels) rep.domain_counts.push_back(level.size());
  rep.stabilized_at = it.stabilized ? it.stabilized_at : 0;
  rep.stabilized_in_bound = it.stabilized && it.stabilized_at <= rep.composition_length + 1;
  return rep;
}

}  // namespace idemlab
