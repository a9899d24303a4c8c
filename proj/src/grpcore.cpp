#include "idemlab/grpcore.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "idemlab/error.hpp"

namespace idemlab {

namespace {

// Reusable closure under right multiplication by a generator list.
std::vector<Elem> closure_elements(const FiniteGroup& g, std::span<const Elem> gens) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Elem> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem y = queue[head];
    for (Elem s : gens) {
      Elem z = g.mul(y, s);
      if (!seen[z]) {
        seen[z] = 1;
        queue.push_back(z);
      }
    }
  }
  return queue;
}

// Small generating set of a subgroup, picked in element order.
std::vector<Elem> subgroup_generators(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  std::vector<Elem> gens;
  std::vector<std::uint8_t> in(g.order(), 0);
  in[0] = 1;
  std::size_t size = 1;
  for (Elem x : s.elements()) {
    if (size == s.order()) break;
    if (in[x]) continue;
    gens.push_back(x);
    auto elems = closure_elements(g, gens);
    for (Elem y : elems) in[y] = 1;
    size = elems.size();
  }
  return gens;
}

}  // namespace

Subgroup generate(const FiniteGroup& g, std::span<const Elem> gens) {
  return Subgroup(g, closure_elements(g, gens));
}

Subgroup join(const Subgroup& s, std::span<const Elem> extra) {
  auto gens = subgroup_generators(s);
  gens.insert(gens.end(), extra.begin(), extra.end());
  return generate(s.parent(), gens);
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<Elem> current(gens.begin(), gens.end());
  Subgroup h = generate(g, current);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (Elem t : g.generators()) {
        Elem c = g.mul(g.mul(g.inv(t), current[i]), t);
        if (!h.contains(c)) {
          current.push_back(c);
          h = generate(g, current);
          changed = true;
        }
      }
    }
  }
  return h;
}

bool is_normal(const Subgroup& n) {
  const FiniteGroup& g = n.parent();
  for (Elem t : g.generators()) {
    Elem ti = g.inv(t);
    for (Elem x : n.elements()) {
      if (!n.contains(g.mul(g.mul(ti, x), t))) return false;
    }
  }
  return true;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](Elem s) { return g.mul(x, s) == g.mul(s, x); });
    if (central) z.push_back(x);
  }
  return Subgroup(g, std::move(z));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  auto gens = subgroup_generators(s);
  std::vector<Elem> c;
  for (Elem x = 0; x < g.order(); ++x) {
    bool commutes = std::all_of(gens.begin(), gens.end(), [&](Elem t) { return g.mul(x, t) == g.mul(t, x); });
    if (commutes) c.push_back(x);
  }
  return Subgroup(g, std::move(c));
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  // [A,B] is the normal closure in <A,B> of the commutators of generators.
  auto ga = subgroup_generators(a);
  auto gb = subgroup_generators(b);
  std::vector<Elem> comms;
  for (Elem x : ga) {
    for (Elem y : gb) {
      Elem c = g.commutator(x, y);
      if (c != 0) comms.push_back(c);
    }
  }
  std::vector<Elem> ambient = ga;
  ambient.insert(ambient.end(), gb.begin(), gb.end());
  Subgroup h = generate(g, comms);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < comms.size(); ++i) {
      for (Elem t : ambient) {
        Elem c = g.mul(g.mul(g.inv(t), comms[i]), t);
        if (!h.contains(c)) {
          comms.push_back(c);
          h = generate(g, comms);
          changed = true;
        }
      }
    }
  }
  return h;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  Subgroup whole = Subgroup::whole(g);
  return commutator_subgroup(g, whole, whole);
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  Subgroup whole = Subgroup::whole(g);
  std::vector<Subgroup> series{whole};
  while (true) {
    Subgroup next = commutator_subgroup(g, whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  while (true) {
    const Subgroup& last = series.back();
    Subgroup next = commutator_subgroup(g, last, last);
    if (next == last) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).back().is_trivial(); }
bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().is_trivial(); }
bool is_perfect(const FiniteGroup& g) { return derived_subgroup(g).is_whole(); }
bool is_simple(const FiniteGroup& g) { return g.order() > 1 && normal_subgroups(g).size() == 2; }

SubgroupAsGroup as_group(const Subgroup& s, std::string name) {
  const FiniteGroup& g = s.parent();
  const std::size_t m = s.order();
  std::vector<std::int64_t> local(g.order(), -1);
  auto elems = s.elements();
  for (std::size_t i = 0; i < m; ++i) local[elems[i]] = static_cast<std::int64_t>(i);
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::int64_t v = local[g.mul(elems[i], elems[j])];
      if (v < 0) throw InvalidInput("element set is not closed under multiplication");
      table[i * m + j] = static_cast<Elem>(v);
    }
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (Elem x : elems) labels.push_back(g.labels()[x]);
  }
  if (name.empty()) name = g.name() + "[" + std::to_string(m) + "]";
  FiniteGroup h = FiniteGroup::from_table(std::move(name), m, std::move(table), std::move(labels),
                                          std::max(m, kDefaultOrderCap));
  std::vector<Elem> inc(elems.begin(), elems.end());
  GroupHom inclusion(h, g, std::move(inc));
  return {std::move(h), std::move(inclusion)};
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(n)) throw InvalidInput("quotient by a subgroup that is not normal");
  const std::size_t order = g.order();
  std::vector<Elem> coset(order, 0xffffffffu);
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (coset[x] != 0xffffffffu) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem k : n.elements()) coset[g.mul(x, k)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = coset[g.mul(reps[i], reps[j])];
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (Elem r : reps) labels.push_back(g.labels()[r] + "N");
  }
  FiniteGroup q = FiniteGroup::from_table(g.name() + "/N" + std::to_string(n.order()), m, std::move(table),
                                          std::move(labels), std::max(m, kDefaultOrderCap));
  GroupHom proj(g, q, std::move(coset));
  return {std::move(q), std::move(proj)};
}

Abelianization abelianization(const FiniteGroup& g) {
  Quotient q = quotient(g, derived_subgroup(g));
  AbelianNormalForm nf = abelian_invariants(q.group);
  return {std::move(nf.group), std::move(q), std::move(nf.coordinates)};
}

std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) {
    throw CapExceeded("subgroup lattice of a group of order " + std::to_string(g.order()) +
                      " exceeds cap " + std::to_string(cap));
  }
  const std::size_t n = g.order();
  std::map<std::vector<Elem>, std::vector<Elem>> found;  // elements -> generators
  std::vector<Elem> cyclic_reps;
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> gens{x};
    auto elems = closure_elements(g, gens);
    std::sort(elems.begin(), elems.end());
    if (found.emplace(elems, gens).second && x != 0) cyclic_reps.push_back(x);
  }
  std::vector<std::vector<Elem>> queue;
  for (const auto& [elems, gens] : found) queue.push_back(elems);
  std::vector<std::uint8_t> member(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<Elem> elems = queue[head];
    const std::vector<Elem> gens = found.at(elems);
    std::fill(member.begin(), member.end(), 0);
    for (Elem x : elems) member[x] = 1;
    for (Elem c : cyclic_reps) {
      if (member[c]) continue;
      std::vector<Elem> ext = gens;
      ext.push_back(c);
      auto next = closure_elements(g, ext);
      std::sort(next.begin(), next.end());
      if (found.emplace(next, ext).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& [elems, gens] : found) out.emplace_back(g, elems);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Elem>> found;
  std::vector<std::vector<Elem>> list;
  auto add = [&](const Subgroup& s) {
    std::vector<Elem> e(s.elements().begin(), s.elements().end());
    if (found.insert(e).second) list.push_back(std::move(e));
  };
  for (Elem x = 0; x < g.order(); ++x) {
    Elem gens[] = {x};
    add(normal_closure(g, gens));
  }
  // Close under joins; the join of normal subgroups is normal.
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Subgroup a(g, list[i]);
      if (std::includes(list[i].begin(), list[i].end(), list[j].begin(), list[j].end())) continue;
      if (std::includes(list[j].begin(), list[j].end(), list[i].begin(), list[i].end())) continue;
      auto gens_b = subgroup_generators(Subgroup(g, list[j]));
      add(join(a, gens_b));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& e : list) out.emplace_back(g, e);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t composition_length(const FiniteGroup& g) {
  FiniteGroup h = g;
  std::size_t length = 0;
  while (h.order() > 1) {
    auto normals = normal_subgroups(h);
    std::vector<const Subgroup*> maximal;
    for (const auto& a : normals) {
      if (a.is_whole()) continue;
      bool is_max = true;
      for (const auto& b : normals) {
        if (b.is_whole() || b.order() <= a.order()) continue;
        if (a.is_subset_of(b)) {
          is_max = false;
          break;
        }
      }
      if (is_max) maximal.push_back(&a);
    }
    const Subgroup* pick = *std::min_element(maximal.begin(), maximal.end(), [](const Subgroup* x, const Subgroup* y) {
      return std::lexicographical_compare(x->elements().begin(), x->elements().end(), y->elements().begin(),
                                          y->elements().end());
    });
    h = as_group(*pick).group;
    ++length;
  }
  return length;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      Elem ya = static_cast<Elem>(y / nb), yb = static_cast<Elem>(y % nb);
      table[x * n + y] = static_cast<Elem>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  if (name.empty()) name = a.name() + " x " + b.name();
  return FiniteGroup::from_table(std::move(name), n, std::move(table), {}, std::max(n, kDefaultOrderCap));
}

std::vector<std::size_t> order_histogram(const FiniteGroup& g) {
  std::vector<std::size_t> h(g.order() + 1, 0);
  for (Elem x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

}  // namespace idemlab
