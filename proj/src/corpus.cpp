#include "idemlab/corpus.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "idemlab/error.hpp"
#include "idemlab/group_io.hpp"
#include "idemlab/grpcore.hpp"
#include "idemlab/homology.hpp"

namespace idemlab {

namespace {

using Perm = std::vector<std::uint32_t>;

Perm cycle_perm(std::size_t degree, const std::vector<std::uint32_t>& cycle) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

std::string abelian_name(const AbelianGroup& a) {
  return a.is_trivial() ? "1" : a.to_string();
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Partitions of k into nonincreasing parts.
void partitions(int k, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(k, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(k - part, part, cur, out);
    cur.pop_back();
  }
}

Int ipow(Int p, int k) {
  Int r = 1;
  while (k-- > 0) r *= p;
  return r;
}

// Extension N.ℤ/p with t n t⁻¹ = α(n), t^p = a.
FiniteGroup cyclic_extension(const FiniteGroup& n, const std::vector<std::vector<Elem>>& alpha_powers, Elem a,
                             std::size_t p, std::string name) {
  const std::size_t m = n.order();
  const std::size_t total = m * p;
  std::vector<Elem> table(total * total);
  for (std::size_t x = 0; x < total; ++x) {
    const std::size_t i = x / m;
    const Elem n1 = static_cast<Elem>(x % m);
    for (std::size_t y = 0; y < total; ++y) {
      const std::size_t j = y / m;
      const Elem n2 = static_cast<Elem>(y % m);
      Elem prod = n.mul(n1, alpha_powers[i][n2]);
      std::size_t e = i + j;
      if (e >= p) {
        prod = n.mul(prod, a);
        e -= p;
      }
      table[x * total + y] = static_cast<Elem>(e * m + prod);
    }
  }
  return FiniteGroup::from_table(std::move(name), total, std::move(table));
}

std::string nonabelian_name(std::size_t order, std::size_t index) {
  return "G" + std::to_string(order) + "." + std::to_string(index);
}

// Gives abelian groups their invariant-factor name and others G<n>.<i>.
std::vector<FiniteGroup> tidy_names(std::vector<FiniteGroup> groups) {
  std::size_t next = 1;
  for (auto& g : groups) {
    if (g.is_abelian()) {
      g = g.renamed(abelian_name(abelian_invariants(g).group));
    } else {
      g = g.renamed(nonabelian_name(g.order(), next++));
    }
  }
  return groups;
}

std::mutex memo_mu;
std::map<std::size_t, std::vector<FiniteGroup>> order_memo;
std::map<std::pair<Int, int>, std::vector<FiniteGroup>> pgroup_memo;

}  // namespace

FiniteGroup trivial_group() { return FiniteGroup().renamed("1"); }

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group of order 0");
  if (n == 1) return trivial_group();
  return AbelianGroup::from_cyclic_orders({static_cast<Int>(n)}).to_group("Z/" + std::to_string(n));
}

FiniteGroup abelian_group(const std::vector<Int>& cyclic_orders) {
  AbelianGroup a = AbelianGroup::from_cyclic_orders(cyclic_orders);
  return a.to_group(abelian_name(a));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n <= 1) return trivial_group().renamed("S" + std::to_string(n));
  std::vector<std::uint32_t> full(n);
  for (std::size_t i = 0; i < n; ++i) full[i] = static_cast<std::uint32_t>(i);
  std::vector<Perm> gens{cycle_perm(n, full), cycle_perm(n, {0, 1})};
  return permutation_group("S" + std::to_string(n), n, gens);
}

FiniteGroup alternating_group(std::size_t n) {
  if (n <= 2) return trivial_group().renamed("A" + std::to_string(n));
  std::vector<Perm> gens;
  for (std::uint32_t i = 2; i < n; ++i) gens.push_back(cycle_perm(n, {0, 1, i}));
  return permutation_group("A" + std::to_string(n), n, gens);
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 1) throw InvalidInput("dihedral group needs n >= 1");
  if (n == 1) return cyclic_group(2).renamed("D1");
  if (n == 2) return abelian_group({2, 2}).renamed("D2");
  std::vector<std::uint32_t> rot(n);
  for (std::size_t i = 0; i < n; ++i) rot[i] = static_cast<std::uint32_t>(i);
  Perm refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<std::uint32_t>((n - i) % n);
  return permutation_group("D" + std::to_string(n), n, {cycle_perm(n, rot), refl});
}

FiniteGroup quaternion_group() {
  // ±1, ±i, ±j, ±k as the regular representation on 8 points.
  auto a = parse_cycles("(0 1 2 3)(4 5 6 7)", 8);
  auto b = parse_cycles("(0 4 2 6)(1 7 3 5)", 8);
  return permutation_group("Q8", 8, {a, b});
}

FiniteGroup psl2_7() {
  return permutation_group("PSL2_7", 7, {parse_cycles("(0 1 2 3 4 5 6)", 7), parse_cycles("(2 4)(5 6)", 7)});
}

FiniteGroup sl2_5() {
  FiniteGroup a5 = alternating_group(5);
  auto classes = two_cocycle_classes(a5, AbelianGroup::from_cyclic_orders({2}));
  if (classes.size() != 2) throw InternalError("expected two classes in H^2(A5, Z/2)");
  return build_central_extension(classes[1], "SL2_5").total;
}

FiniteGroup named_group(const std::string& name) {
  if (name == "trivial" || name == "1") return trivial_group();
  if (name == "Q8") return quaternion_group();
  if (name == "PSL2_7") return psl2_7();
  if (name == "SL2_5") return sl2_5();
  auto number = [&](std::size_t from) -> std::size_t {
    std::string rest = name.substr(from);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidInput("unknown group name '" + name + "'");
    }
    return std::stoul(rest);
  };
  if (name.size() > 1) {
    switch (name[0]) {
      case 'Z': return cyclic_group(number(1));
      case 'S': return symmetric_group(number(1));
      case 'A': return alternating_group(number(1));
      case 'D': return dihedral_group(number(1));
      default: break;
    }
  }
  throw InvalidInput("unknown group name '" + name + "'");
}

std::vector<std::uint64_t> group_signature(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> sig{n, g.is_abelian() ? 1u : 0u};
  std::vector<std::uint32_t> roots(n, 0);
  for (Elem y = 0; y < n; ++y) ++roots[g.mul(y, y)];
  std::vector<std::uint64_t> per;
  for (Elem x = 0; x < n; ++x) {
    std::uint64_t cent = 0;
    for (Elem y = 0; y < n; ++y) cent += g.mul(x, y) == g.mul(y, x);
    per.push_back((static_cast<std::uint64_t>(g.element_order(x)) << 40) | (cent << 20) | roots[x]);
  }
  std::sort(per.begin(), per.end());
  sig.insert(sig.end(), per.begin(), per.end());
  sig.push_back(derived_subgroup(g).order());
  AbelianGroup h1 = abelianization(g).h1;
  for (Int d : h1.invariant_factors()) sig.push_back(static_cast<std::uint64_t>(d));
  return sig;
}

std::size_t add_up_to_isomorphism(std::vector<FiniteGroup>& reps, const FiniteGroup& g,
                                  std::vector<std::vector<std::uint64_t>>& signatures) {
  auto sig = group_signature(g);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (signatures[i] == sig && are_isomorphic(reps[i], g)) return i;
  }
  reps.push_back(g);
  signatures.push_back(std::move(sig));
  return reps.size() - 1;
}

std::vector<FiniteGroup> groups_of_order(std::size_t order, const SearchOptions& options) {
  {
    std::lock_guard lock(memo_mu);
    if (auto it = order_memo.find(order); it != order_memo.end()) return it->second;
  }
  if (order == 0) throw InvalidInput("order must be positive");
  if (order >= 60) throw CapExceeded("groups_of_order supports orders below 60");
  std::vector<FiniteGroup> reps;
  if (order == 1) {
    reps.push_back(trivial_group());
  } else if (is_prime(order)) {
    reps.push_back(cyclic_group(order));
  } else {
    std::vector<std::vector<std::uint64_t>> sigs;
    for (Int pp : prime_factors(static_cast<Int>(order))) {
      const std::size_t p = static_cast<std::size_t>(pp);
      for (const FiniteGroup& n : groups_of_order(order / p, options)) {
        const std::size_t m = n.order();
        AutomorphismGroup aut = automorphisms(n, options);
        for (const GroupHom& alpha : aut.all) {
          std::vector<std::vector<Elem>> powers{std::vector<Elem>(m)};
          for (Elem x = 0; x < m; ++x) powers[0][x] = x;
          for (std::size_t i = 1; i <= p; ++i) {
            std::vector<Elem> next(m);
            for (Elem x = 0; x < m; ++x) next[x] = alpha(powers[i - 1][x]);
            powers.push_back(std::move(next));
          }
          for (Elem a = 0; a < m; ++a) {
            if (alpha(a) != a) continue;
            bool ok = true;
            for (Elem x = 0; x < m && ok; ++x) ok = powers[p][x] == n.mul(n.mul(a, x), n.inv(a));
            if (!ok) continue;
            FiniteGroup g = cyclic_extension(n, powers, a, p, "");
            add_up_to_isomorphism(reps, g, sigs);
          }
        }
      }
    }
  }
  std::stable_sort(reps.begin(), reps.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    return a.is_abelian() > b.is_abelian();
  });
  reps = tidy_names(std::move(reps));
  std::lock_guard lock(memo_mu);
  order_memo[order] = reps;
  return reps;
}

std::vector<FiniteGroup> p_groups(Int p, int k) {
  {
    std::lock_guard lock(memo_mu);
    if (auto it = pgroup_memo.find({p, k}); it != pgroup_memo.end()) return it->second;
  }
  std::vector<FiniteGroup> reps;
  if (k == 0) {
    reps.push_back(trivial_group());
  } else if (k == 1) {
    reps.push_back(cyclic_group(static_cast<std::size_t>(p)));
  } else {
    std::vector<std::vector<std::uint64_t>> sigs;
    AbelianGroup zp = AbelianGroup::from_cyclic_orders({p});
    HomologyOptions ho;
    ho.h2_cap = static_cast<std::size_t>(ipow(p, k - 1));
    for (const FiniteGroup& q : p_groups(p, k - 1)) {
      for (const Cocycle& f : two_cocycle_classes(q, zp, ho)) {
        add_up_to_isomorphism(reps, build_central_extension(f).total, sigs);
      }
    }
  }
  std::stable_sort(reps.begin(), reps.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    return a.is_abelian() > b.is_abelian();
  });
  reps = tidy_names(std::move(reps));
  std::lock_guard lock(memo_mu);
  pgroup_memo[{p, k}] = reps;
  return reps;
}

std::vector<FiniteGroup> nilpotent_groups(std::size_t order) {
  if (order == 0) throw InvalidInput("order must be positive");
  std::vector<FiniteGroup> acc{trivial_group()};
  Int rest = static_cast<Int>(order);
  for (Int p : prime_factors(static_cast<Int>(order))) {
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    std::vector<FiniteGroup> next;
    for (const FiniteGroup& a : acc) {
      for (const FiniteGroup& b : p_groups(p, k)) {
        if (a.order() == 1) {
          next.push_back(b);
        } else {
          next.push_back(direct_product(a, b, a.name() + " x " + b.name()));
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<FiniteGroup> abelian_groups(std::size_t order) {
  if (order == 0) throw InvalidInput("order must be positive");
  std::vector<std::vector<Int>> choices{{}};
  Int rest = static_cast<Int>(order);
  for (Int p : prime_factors(static_cast<Int>(order))) {
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(k, k, cur, parts);
    std::vector<std::vector<Int>> next;
    for (const auto& c : choices) {
      for (const auto& part : parts) {
        auto v = c;
        for (int e : part) v.push_back(ipow(p, e));
        next.push_back(std::move(v));
      }
    }
    choices = std::move(next);
  }
  std::vector<FiniteGroup> out;
  for (const auto& c : choices) out.push_back(c.empty() ? trivial_group() : abelian_group(c));
  return out;
}

std::vector<FiniteGroup> s5_subgroup_types() {
  FiniteGroup s5 = symmetric_group(5);
  std::vector<FiniteGroup> reps;
  std::vector<std::vector<std::uint64_t>> sigs;
  for (const Subgroup& s : subgroups(s5)) add_up_to_isomorphism(reps, as_group(s).group, sigs);
  std::vector<FiniteGroup> named;
  for (auto& g : reps) {
    std::string name;
    if (g.is_abelian()) {
      name = abelian_name(abelian_invariants(g).group);
    } else {
      name = "S5sub" + std::to_string(g.order()) + "." + std::to_string(named.size());
    }
    named.push_back(g.renamed(name));
  }
  return named;
}

}  // namespace idemlab
