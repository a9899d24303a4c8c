#include "idemlab/homlab.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "idemlab/abelian.hpp"
#include "idemlab/error.hpp"
#include "idemlab/grpcore.hpp"
#include "idemlab/homcache.hpp"

namespace idemlab {

namespace {

constexpr std::size_t kMaxRelatorsPerDepth = 32;

struct Relator {
  std::vector<std::uint8_t> lhs;
  std::vector<std::uint8_t> rhs;
};

// Everything about the domain that the search needs, computed once.
struct Plan {
  FiniteGroup x;
  std::vector<Elem> gens;
  std::vector<std::uint32_t> gen_order;
  std::vector<Elem> bfs;
  std::vector<Elem> parent;
  std::vector<std::uint8_t> via;
  std::vector<std::vector<Relator>> relators;
  // pair_order[j][i] = ord(x_i x_j), i < j
  std::vector<std::vector<std::uint32_t>> pair_order;

  explicit Plan(const FiniteGroup& dom) : x(dom) {
    auto g = dom.generators();
    gens.assign(g.begin(), g.end());
    const std::size_t k = gens.size();
    for (Elem s : gens) gen_order.push_back(dom.element_order(s));
    const std::size_t n = dom.order();
    parent.assign(n, 0);
    via.assign(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    seen[0] = 1;
    bfs.push_back(0);
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      Elem y = bfs[head];
      for (std::size_t i = 0; i < k; ++i) {
        Elem z = dom.mul(y, gens[i]);
        if (!seen[z]) {
          seen[z] = 1;
          parent[z] = y;
          via[z] = static_cast<std::uint8_t>(i);
          bfs.push_back(z);
        }
      }
    }
    pair_order.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) pair_order[j].push_back(dom.element_order(dom.mul(gens[i], gens[j])));
    }
    relators.resize(k);
    for (std::size_t j = 0; j < k; ++j) build_relators(j);
  }

  // Short relators of <x_0..x_j> that involve x_j.
  void build_relators(std::size_t j) {
    const std::size_t n = x.order();
    std::vector<std::int32_t> par(n, -1);
    std::vector<std::uint8_t> pvia(n, 0);
    std::vector<std::uint16_t> depth(n, 0);
    std::vector<Elem> order{0};
    par[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      Elem y = order[head];
      for (std::size_t i = 0; i <= j; ++i) {
        Elem z = x.mul(y, gens[i]);
        if (par[z] < 0) {
          par[z] = static_cast<std::int32_t>(y);
          pvia[z] = static_cast<std::uint8_t>(i);
          depth[z] = static_cast<std::uint16_t>(depth[y] + 1);
          order.push_back(z);
        }
      }
    }
    auto word = [&](Elem y) {
      std::vector<std::uint8_t> w(depth[y]);
      for (std::size_t p = depth[y]; p > 0; --p) {
        w[p - 1] = pvia[y];
        y = static_cast<Elem>(par[y]);
      }
      return w;
    };
    struct Candidate {
      std::size_t length;
      Elem y;
      std::uint8_t s;
    };
    std::vector<Candidate> cands;
    for (Elem y : order) {
      for (std::size_t i = 0; i <= j; ++i) {
        Elem z = x.mul(y, gens[i]);
        if (par[z] == static_cast<std::int32_t>(y) && pvia[z] == i && z != 0) continue;  // tree edge
        cands.push_back({static_cast<std::size_t>(depth[y]) + 1 + depth[z], y, static_cast<std::uint8_t>(i)});
      }
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.length < b.length; });
    for (const auto& c : cands) {
      Relator r{word(c.y), word(x.mul(c.y, gens[c.s]))};
      r.lhs.push_back(c.s);
      bool uses_j = std::find(r.lhs.begin(), r.lhs.end(), j) != r.lhs.end() ||
                    std::find(r.rhs.begin(), r.rhs.end(), j) != r.rhs.end();
      if (!uses_j) continue;
      relators[j].push_back(std::move(r));
      if (relators[j].size() >= kMaxRelatorsPerDepth) break;
    }
  }
};

class Search {
 public:
  Search(const Plan& plan, const FiniteGroup& g, const HomQuery& query, std::uint64_t budget,
         std::atomic<std::uint64_t>& nodes)
      : plan_(plan), g_(g), query_(query), budget_(budget), nodes_(nodes) {
    const std::size_t k = plan.gens.size();
    cands_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t o = plan.gen_order[i];
      auto ok = [&](Elem t) {
        std::uint32_t ot = g.element_order(t);
        return query.bijective ? ot == o : o % ot == 0;
      };
      if (!query.allowed.empty()) {
        std::vector<Elem> a = query.allowed[i];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        for (Elem t : a) {
          if (t < g.order() && ok(t)) cands_[i].push_back(t);
        }
      } else {
        for (Elem t = 0; t < g.order(); ++t) {
          if (ok(t)) cands_[i].push_back(t);
        }
      }
    }
    images_.assign(k, 0);
    map_.assign(plan.x.order(), 0);
  }

  const std::vector<Elem>& first_candidates() const { return cands_[0]; }

  // Runs the subtree with generator 0 fixed to `first` (or everything when
  // `first` is empty). `emit` returns false to stop.
  template <class Emit>
  bool run(std::optional<Elem> first, Emit&& emit) {
    if (plan_.gens.empty()) return emit(map_);
    if (first) {
      return try_candidate(0, *first, emit);
    }
    for (Elem t : cands_[0]) {
      if (!try_candidate(0, t, emit)) return false;
    }
    return true;
  }

  std::uint64_t local_nodes() const { return local_; }

 private:
  template <class Emit>
  bool try_candidate(std::size_t depth, Elem t, Emit& emit) {
    if (++local_ % 1024 == 0) {
      if (nodes_.fetch_add(1024) + 1024 > budget_) {
        throw BudgetExceeded("homomorphism search exceeded budget of " + std::to_string(budget_) + " nodes");
      }
    }
    images_[depth] = t;
    for (std::size_t i = 0; i < depth; ++i) {
      if (plan_.pair_order[depth][i] % g_.element_order(g_.mul(images_[i], t)) != 0) return true;
    }
    for (const auto& r : plan_.relators[depth]) {
      if (eval(r.lhs) != eval(r.rhs)) return true;
    }
    if (depth + 1 == plan_.gens.size()) {
      if (!extend()) return true;
      if (query_.bijective && !injective()) return true;
      return emit(map_);
    }
    for (Elem u : cands_[depth + 1]) {
      if (!try_candidate(depth + 1, u, emit)) return false;
    }
    return true;
  }

  Elem eval(const std::vector<std::uint8_t>& w) const {
    Elem acc = 0;
    for (auto s : w) acc = g_.mul(acc, images_[s]);
    return acc;
  }

  bool extend() {
    const auto& x = plan_.x;
    map_[0] = 0;
    for (std::size_t i = 1; i < plan_.bfs.size(); ++i) {
      Elem z = plan_.bfs[i];
      map_[z] = g_.mul(map_[plan_.parent[z]], images_[plan_.via[z]]);
    }
    const std::size_t k = plan_.gens.size();
    for (Elem y = 0; y < x.order(); ++y) {
      for (std::size_t s = 0; s < k; ++s) {
        if (map_[x.mul(y, plan_.gens[s])] != g_.mul(map_[y], images_[s])) return false;
      }
    }
    return true;
  }

  bool injective() {
    seen_.assign(g_.order(), 0);
    for (Elem v : map_) {
      if (seen_[v]) return false;
      seen_[v] = 1;
    }
    return true;
  }

  const Plan& plan_;
  const FiniteGroup& g_;
  const HomQuery& query_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t local_ = 0;
  std::vector<std::vector<Elem>> cands_;
  std::vector<Elem> images_;
  std::vector<Elem> map_;
  std::vector<std::uint8_t> seen_;
};

bool query_feasible(const FiniteGroup& x, const FiniteGroup& g, const HomQuery& q) {
  if (q.bijective && x.order() != g.order()) return false;
  if (!q.allowed.empty() && q.allowed.size() != x.generators().size()) {
    throw InvalidInput("allowed image lists do not match the generator count");
  }
  return true;
}

// Parallel driver: per first-generator candidate, collects maps (or counts).
struct Collected {
  std::vector<std::vector<Elem>> maps;
  std::uint64_t count = 0;
};

std::vector<Collected> run_parallel(const FiniteGroup& x, const FiniteGroup& g, const HomQuery& query,
                                    const SearchOptions& options, bool keep_maps) {
  Plan plan(x);
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> found{0};
  Search probe(plan, g, query, options.budget, nodes);
  if (plan.gens.empty()) {
    Collected c;
    c.count = 1;
    if (keep_maps) c.maps.push_back({0});
    return {c};
  }
  const auto& firsts = probe.first_candidates();
  std::vector<Collected> out(firsts.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto worker = [&] {
    try {
      Search s(plan, g, query, options.budget, nodes);
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= firsts.size()) break;
        if (query.limit && found.load() >= query.limit) break;
        auto& slot = out[i];
        s.run(firsts[i], [&](const std::vector<Elem>& m) {
          ++slot.count;
          if (keep_maps) slot.maps.push_back(m);
          std::uint64_t f = found.fetch_add(1) + 1;
          return !(query.limit && f >= query.limit);
        });
      }
    } catch (...) {
      std::lock_guard lock(err_mu);
      if (!err) err = std::current_exception();
      next.store(firsts.size());
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(firsts.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (err) std::rethrow_exception(err);
  return out;
}

struct VectorHash {
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Elem e : v) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::uint64_t visit_homs(const FiniteGroup& x, const FiniteGroup& g, const HomQuery& query,
                         const HomVisitor& visit, const SearchOptions& options) {
  if (!query_feasible(x, g, query)) return 0;
  Plan plan(x);
  std::atomic<std::uint64_t> nodes{0};
  Search s(plan, g, query, options.budget, nodes);
  std::uint64_t count = 0;
  s.run(std::nullopt, [&](const std::vector<Elem>& m) {
    ++count;
    if (!visit(m)) return false;
    return !(query.limit && count >= query.limit);
  });
  return count;
}

HomSet enumerate_homs(const FiniteGroup& x, const FiniteGroup& g, const SearchOptions& options) {
  HomSet set{x, g, {}, true};
  auto parts = run_parallel(x, g, HomQuery{}, options, true);
  for (auto& part : parts) {
    for (auto& m : part.maps) set.homs.push_back(GroupHom(x, g, std::move(m)));
  }
  return set;
}

std::shared_ptr<const HomSet> hom_set(const FiniteGroup& x, const FiniteGroup& g, const SearchOptions& options) {
  if (options.store) return options.store->homs(x, g, options);
  return std::make_shared<const HomSet>(enumerate_homs(x, g, options));
}

std::uint64_t count_homs(const FiniteGroup& x, const FiniteGroup& g, const SearchOptions& options,
                         std::uint64_t limit) {
  if (options.store) return options.store->count(x, g, options, limit);
  HomQuery q;
  q.limit = limit;
  auto parts = run_parallel(x, g, q, options, false);
  std::uint64_t total = 0;
  for (const auto& p : parts) total += p.count;
  return limit ? std::min(total, limit) : total;
}

bool is_hom_trivial_set(const FiniteGroup& x, const FiniteGroup& g, const SearchOptions& options) {
  if (x.order() == 1 || g.order() == 1) return true;
  SearchOptions o = options;
  o.store = nullptr;
  return count_homs(x, g, o, 2) == 1;
}

bool structural_gensub(const GroupHom& a) {
  const FiniteGroup& x = a.domain();
  Subgroup ker = a.kernel();
  if (ker.is_trivial()) return true;
  for (Elem k : ker.elements()) {
    for (Elem s : x.generators()) {
      if (x.mul(k, s) != x.mul(s, k)) return false;
    }
  }
  AbelianGroup kinv = abelian_invariants(as_group(ker).group).group;
  AbelianGroup h1 = abelianization(x).h1;
  return hom_count_abelian(h1, kinv) == 1;
}

bool is_generalized_subgroup(const GroupHom& a, GensubMethod method, const SearchOptions& options) {
  if (method == GensubMethod::Structural) return structural_gensub(a);
  if (a.is_injective()) return true;
  const FiniteGroup& x = a.domain();
  const std::size_t k = x.generators().size();
  std::unordered_set<std::vector<Elem>, VectorHash> seen;
  std::vector<Elem> key(k);
  auto gens = x.generators();
  auto fresh = [&](std::span<const Elem> f) {
    for (std::size_t i = 0; i < k; ++i) key[i] = a(f[gens[i]]);
    return seen.insert(key).second;
  };
  if (options.store) {
    auto homs = hom_set(x, x, options);
    for (const auto& f : homs->homs) {
      if (!fresh(f.map())) return false;
    }
    return true;
  }
  bool injective = true;
  visit_homs(x, x, HomQuery{}, [&](std::span<const Elem> f) {
    if (!fresh(f)) injective = false;
    return injective;
  }, options);
  return injective;
}

bool is_cellular_cover(const GroupHom& c, const SearchOptions& options) {
  if (c.is_injective() && c.is_surjective()) return true;
  if (!is_generalized_subgroup(c, GensubMethod::Brute, options)) return false;
  std::uint64_t self = count_homs(c.domain(), c.domain(), options);
  std::uint64_t into = count_homs(c.domain(), c.codomain(), options, self + 1);
  return self == into;
}

std::optional<GroupHom> cover_equivalence(const GroupHom& c, const GroupHom& d, const SearchOptions& options) {
  if (!c.codomain().same_table(d.codomain())) throw InvalidInput("covers have different codomains");
  const FiniteGroup& a = c.domain();
  const FiniteGroup& b = d.domain();
  if (a.order() != b.order()) return std::nullopt;
  if (order_histogram(a) != order_histogram(b)) return std::nullopt;
  std::vector<std::vector<Elem>> fiber(c.codomain().order());
  for (Elem y = 0; y < b.order(); ++y) fiber[d(y)].push_back(y);
  HomQuery q;
  q.bijective = true;
  q.limit = 1;
  for (Elem s : a.generators()) q.allowed.push_back(fiber[c(s)]);
  std::optional<GroupHom> found;
  SearchOptions o = options;
  o.store = nullptr;
  visit_homs(a, b, q, [&](std::span<const Elem> m) {
    found.emplace(a, b, std::vector<Elem>(m.begin(), m.end()));
    return false;
  }, o);
  return found;
}

bool covers_equivalent(const GroupHom& c, const GroupHom& d, const SearchOptions& options) {
  return cover_equivalence(c, d, options).has_value();
}

std::size_t AutomorphismGroup::inner_count() const {
  return static_cast<std::size_t>(std::count(inner.begin(), inner.end(), true));
}

GroupHom conjugation(const FiniteGroup& g, Elem h) {
  std::vector<Elem> map(g.order());
  Elem hi = g.inv(h);
  for (Elem x = 0; x < g.order(); ++x) map[x] = g.mul(g.mul(hi, x), h);
  return GroupHom(g, g, std::move(map));
}

AutomorphismGroup automorphisms(const FiniteGroup& g, const SearchOptions& options) {
  AutomorphismGroup out;
  HomQuery q;
  q.bijective = true;
  SearchOptions o = options;
  o.store = nullptr;
  visit_homs(g, g, q, [&](std::span<const Elem> m) {
    out.all.emplace_back(g, g, std::vector<Elem>(m.begin(), m.end()));
    return true;
  }, o);
  auto gens = g.generators();
  auto key_of = [&](const GroupHom& f) {
    std::vector<Elem> key;
    for (Elem s : gens) key.push_back(f(s));
    return key;
  };
  std::unordered_set<std::vector<Elem>, VectorHash> inner_keys;
  std::vector<GroupHom> inner_list;
  for (Elem h = 0; h < g.order(); ++h) {
    GroupHom c = conjugation(g, h);
    if (inner_keys.insert(key_of(c)).second) inner_list.push_back(std::move(c));
  }
  std::size_t identity_index = out.all.size();
  for (std::size_t i = 0; i < out.all.size(); ++i) {
    auto key = key_of(out.all[i]);
    out.inner.push_back(inner_keys.count(key) > 0);
    if (std::equal(key.begin(), key.end(), gens.begin())) identity_index = i;
  }
  if (identity_index == out.all.size()) throw InternalError("identity automorphism not found");
  std::unordered_set<std::vector<Elem>, VectorHash> assigned;
  auto take = [&](std::size_t i) {
    if (assigned.count(key_of(out.all[i]))) return;
    out.outer_representatives.push_back(i);
    for (const auto& inn : inner_list) assigned.insert(key_of(compose(out.all[i], inn)));
  };
  take(identity_index);
  for (std::size_t i = 0; i < out.all.size(); ++i) take(i);
  if (out.all.size() != out.outer_representatives.size() * inner_list.size()) {
    throw InternalError("automorphism cosets do not partition");
  }
  return out;
}

std::optional<GroupHom> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const SearchOptions& options) {
  if (a.order() != b.order() || a.is_abelian() != b.is_abelian()) return std::nullopt;
  if (order_histogram(a) != order_histogram(b)) return std::nullopt;
  HomQuery q;
  q.bijective = true;
  q.limit = 1;
  std::optional<GroupHom> found;
  SearchOptions o = options;
  o.store = nullptr;
  visit_homs(a, b, q, [&](std::span<const Elem> m) {
    found.emplace(a, b, std::vector<Elem>(m.begin(), m.end()));
    return false;
  }, o);
  return found;
}

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b, const SearchOptions& options) {
  return find_isomorphism(a, b, options).has_value();
}

}  // namespace idemlab
