#include "idemlab/group.hpp"

#include <algorithm>
#include <numeric>

#include "idemlab/error.hpp"

namespace idemlab {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

std::uint64_t fnv1a(std::span<const Elem> data, std::uint64_t order) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&h](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  feed(order);
  for (Elem e : data) feed(e);
  return h;
}

// Size of the subgroup generated by `gens` plus `extra`, using `stamp` as a
// reusable visited marker.
std::size_t closure_size(const FiniteGroup& g, std::span<const Elem> gens, Elem extra,
                         std::vector<std::uint32_t>& stamp, std::uint32_t round,
                         std::vector<Elem>& queue) {
  queue.clear();
  queue.push_back(0);
  stamp[0] = round;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem y = queue[head];
    for (std::size_t i = 0; i <= gens.size(); ++i) {
      Elem s = i < gens.size() ? gens[i] : extra;
      Elem z = g.mul(y, s);
      if (stamp[z] != round) {
        stamp[z] = round;
        queue.push_back(z);
      }
    }
  }
  return queue.size();
}

std::vector<Elem> greedy_generators(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return {0};
  std::vector<std::size_t> order_count(n + 1, 0);
  for (Elem x = 0; x < n; ++x) ++order_count[g.element_order(x)];

  std::vector<Elem> gens;
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<Elem> queue;
  std::uint32_t round = 0;
  std::size_t current = 1;
  std::vector<std::uint8_t> in_closure(n, 0);
  in_closure[0] = 1;
  while (current < n) {
    Elem best = 0;
    std::size_t best_size = 0;
    std::size_t best_rarity = 0;
    for (Elem x = 1; x < n; ++x) {
      if (in_closure[x]) continue;
      std::size_t size = closure_size(g, gens, x, stamp, ++round, queue);
      std::size_t rarity = order_count[g.element_order(x)];
      if (size > best_size || (size == best_size && rarity < best_rarity)) {
        best = x;
        best_size = size;
        best_rarity = rarity;
      }
    }
    gens.push_back(best);
    closure_size(g, std::span<const Elem>(gens).first(gens.size() - 1), best, stamp, ++round, queue);
    std::fill(in_closure.begin(), in_closure.end(), 0);
    for (Elem y : queue) in_closure[y] = 1;
    current = queue.size();
  }
  return gens;
}

}  // namespace

FiniteGroup::FiniteGroup() {
  auto impl = std::make_shared<Impl>();
  impl->name = "1";
  impl->order = 1;
  impl->table = {0};
  impl->inverse = {0};
  impl->elem_order = {1};
  impl->generators = {0};
  impl->fingerprint = fnv1a(impl->table, 1);
  impl_ = std::move(impl);
}

FiniteGroup FiniteGroup::from_table(std::string name, std::size_t order, std::vector<Elem> table,
                                    std::vector<std::string> labels, std::size_t order_cap) {
  if (order == 0) throw InvalidInput("group order must be positive");
  if (order > order_cap) {
    throw CapExceeded("group order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(order_cap));
  }
  if (table.size() != order * order) throw InvalidInput("table size does not match order");
  if (!labels.empty() && labels.size() != order) throw InvalidInput("label count does not match order");
  const std::size_t n = order;
  for (Elem v : table) {
    if (v >= n) throw InvalidInput("table entry out of range");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x] != x || table[x * n] != x) {
      throw InvalidInput("element 0 is not the identity");
    }
  }
  // Latin square: every row and column a permutation.
  std::vector<std::uint32_t> seen(n, kUnset);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Elem v = table[a * n + b];
      if (seen[v] == a) throw InvalidInput("table row " + std::to_string(a) + " repeats an entry");
      seen[v] = static_cast<std::uint32_t>(a);
    }
  }
  std::fill(seen.begin(), seen.end(), kUnset);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      Elem v = table[a * n + b];
      if (seen[v] == b) throw InvalidInput("table column " + std::to_string(b) + " repeats an entry");
      seen[v] = static_cast<std::uint32_t>(b);
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->order = n;
  impl->table = std::move(table);
  impl->labels = std::move(labels);
  impl->inverse.assign(n, kUnset);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (impl->table[a * n + b] == 0) {
        impl->inverse[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (impl->table[impl->inverse[a] * n + a] != 0) throw InvalidInput("left and right inverses differ");
  }
  impl->elem_order.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    Elem p = static_cast<Elem>(a);
    while (p != 0) {
      p = impl->table[p * n + a];
      ++k;
      if (k > n + 1) throw InvalidInput("element of unbounded order");
    }
    impl->elem_order[a] = k;
  }
  impl->elem_order[0] = 1;
  impl->abelian = true;
  for (std::size_t a = 0; a < n && impl->abelian; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (impl->table[a * n + b] != impl->table[b * n + a]) {
        impl->abelian = false;
        break;
      }
    }
  }
  impl->fingerprint = fnv1a(impl->table, n);
  FiniteGroup partial{impl};
  impl->generators = greedy_generators(partial);
  return FiniteGroup{std::move(impl)};
}

Elem FiniteGroup::power(Elem a, std::uint64_t k) const {
  Elem result = 0;
  Elem base = a;
  k %= element_order(a);
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  return FiniteGroup{std::move(impl)};
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return impl_ == other.impl_ || (order() == other.order() && fingerprint() == other.fingerprint() &&
                                  impl_->table == other.impl_->table);
}

void check_associative(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem ab = g.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw InvalidInput("table is not associative at (" + std::to_string(a) + ", " +
                             std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)), member_(parent_.order(), 0) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Elem x : elements_) {
    if (x >= parent_.order()) throw InvalidInput("subgroup element out of range");
    member_[x] = 1;
  }
  if (elements_.empty() || elements_.front() != 0) throw InvalidInput("subgroup must contain the identity");
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(g, {0}); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](Elem x) { return other.contains(x); });
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements_ < b.elements_;
}

// ---------------------------------------------------------------------------

std::vector<Elem> extend_generator_images(const FiniteGroup& domain, const FiniteGroup& codomain,
                                          std::span<const Elem> images) {
  auto gens = domain.generators();
  if (images.size() != gens.size()) throw InvalidInput("wrong number of generator images");
  const std::size_t n = domain.order();
  std::vector<Elem> map(n, kUnset);
  std::vector<Elem> queue;
  queue.reserve(n);
  map[0] = 0;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem y = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem z = domain.mul(y, gens[i]);
      Elem img = codomain.mul(map[y], images[i]);
      if (map[z] == kUnset) {
        map[z] = img;
        queue.push_back(z);
      } else if (map[z] != img) {
        return {};
      }
    }
  }
  return map;
}

GroupHom::GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> map, Unchecked)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {}

GroupHom::GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  if (map_.size() != domain_.order()) throw InvalidInput("map size does not match domain order");
  for (Elem v : map_) {
    if (v >= codomain_.order()) throw InvalidInput("map value out of range");
  }
  if (map_[0] != 0) throw InvalidInput("map does not send identity to identity");
  for (Elem x = 0; x < domain_.order(); ++x) {
    for (Elem s : domain_.generators()) {
      if (map_[domain_.mul(x, s)] != codomain_.mul(map_[x], map_[s])) {
        throw InvalidInput("map is not a homomorphism");
      }
    }
  }
}

GroupHom GroupHom::from_generator_images(const FiniteGroup& domain, const FiniteGroup& codomain,
                                         std::span<const Elem> images) {
  auto map = extend_generator_images(domain, codomain, images);
  if (map.empty()) throw InvalidInput("generator images do not extend to a homomorphism");
  return GroupHom(domain, codomain, std::move(map), Unchecked{});
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  std::vector<Elem> map(g.order());
  std::iota(map.begin(), map.end(), Elem{0});
  return GroupHom(g, g, std::move(map), Unchecked{});
}

GroupHom GroupHom::trivial(const FiniteGroup& domain, const FiniteGroup& codomain) {
  return GroupHom(domain, codomain, std::vector<Elem>(domain.order(), 0), Unchecked{});
}

bool GroupHom::is_injective() const {
  std::size_t kernel = std::count(map_.begin(), map_.end(), Elem{0});
  return kernel == 1;
}

bool GroupHom::is_surjective() const {
  std::vector<std::uint8_t> hit(codomain_.order(), 0);
  std::size_t count = 0;
  for (Elem v : map_) {
    if (!hit[v]) {
      hit[v] = 1;
      ++count;
    }
  }
  return count == codomain_.order();
}

bool GroupHom::is_trivial() const {
  return std::all_of(map_.begin(), map_.end(), [](Elem v) { return v == 0; });
}

Subgroup GroupHom::image() const {
  std::vector<Elem> img(map_);
  return Subgroup(codomain_, std::move(img));
}

Subgroup GroupHom::kernel() const {
  std::vector<Elem> ker;
  for (Elem x = 0; x < map_.size(); ++x) {
    if (map_[x] == 0) ker.push_back(x);
  }
  return Subgroup(domain_, std::move(ker));
}

GroupHom compose(const GroupHom& after, const GroupHom& before) {
  if (!before.codomain().same_table(after.domain())) {
    throw InvalidInput("composition of homomorphisms with mismatched groups");
  }
  std::vector<Elem> map(before.domain().order());
  for (Elem x = 0; x < map.size(); ++x) map[x] = after(before(x));
  return GroupHom(before.domain(), after.codomain(), std::move(map), GroupHom::Unchecked{});
}

}  // namespace idemlab
