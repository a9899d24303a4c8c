#include "idemlab/homcache.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include "idemlab/error.hpp"

namespace idemlab {

namespace {

constexpr char kHomMagic[4] = {'I', 'D', 'H', 'S'};
constexpr char kH2Magic[4] = {'I', 'D', 'H', '2'};
constexpr char kCountMagic[4] = {'I', 'D', 'H', 'C'};
constexpr std::uint32_t kVersion = 1;

struct Fnv {
  std::uint64_t h = 1469598103934665603ull;
  void bytes(const void* p, std::size_t n) {
    auto c = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= c[i];
      h *= 1099511628211ull;
    }
  }
  void u64(std::uint64_t v) { bytes(&v, sizeof v); }
};

std::uint64_t table_key(const FiniteGroup& g) {
  Fnv f;
  f.u64(g.order());
  auto t = g.table();
  f.bytes(t.data(), t.size() * sizeof(Elem));
  return f.h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << v;
  return s.str();
}

template <class T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
bool get(std::istream& in, T& v) {
  return static_cast<bool>(in.read(reinterpret_cast<char*>(&v), sizeof v));
}

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
  std::filesystem::create_directories(path.parent_path());
  thread_local std::mt19937_64 rng{std::random_device{}()};
  auto tmp = path;
  tmp += ".tmp" + hex(rng());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("IDEMLAB_CACHE"); env && *env) return env;
  return ".idemlab-cache";
}

std::uint64_t hom_set_key(const FiniteGroup& x, const FiniteGroup& g) {
  Fnv f;
  f.u64(table_key(x));
  f.u64(table_key(g));
  return f.h;
}

HomStore::HomStore(std::optional<std::filesystem::path> disk_dir) : dir_(std::move(disk_dir)) {}

HomStore::Stats HomStore::stats() const {
  std::lock_guard lock(mu_);
  return stats_;
}

std::shared_ptr<const HomSet> HomStore::homs(const FiniteGroup& x, const FiniteGroup& g,
                                             const SearchOptions& options) {
  const std::pair key{table_key(x), table_key(g)};
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end() && it->second->domain.same_table(x) &&
                                   it->second->codomain.same_table(g)) {
      ++stats_.memory_hits;
      return it->second;
    }
  }
  if (auto loaded = load(x, g)) {
    std::lock_guard lock(mu_);
    ++stats_.disk_hits;
    memo_[key] = *loaded;
    return *loaded;
  }
  SearchOptions o = options;
  o.store = nullptr;
  auto set = std::make_shared<const HomSet>(enumerate_homs(x, g, o));
  save(*set);
  std::lock_guard lock(mu_);
  ++stats_.computed;
  memo_[key] = set;
  return set;
}

std::optional<std::shared_ptr<const HomSet>> HomStore::load(const FiniteGroup& x, const FiniteGroup& g) {
  if (!dir_) return std::nullopt;
  auto path = *dir_ / ("hom-" + hex(hom_set_key(x, g)) + ".bin");
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[4];
  std::uint32_t version = 0;
  std::uint64_t nx = 0, ng = 0, count = 0;
  if (!in.read(magic, 4) || std::memcmp(magic, kHomMagic, 4) != 0) return std::nullopt;
  if (!get(in, version) || version != kVersion) return std::nullopt;
  if (!get(in, nx) || !get(in, ng) || !get(in, count)) return std::nullopt;
  if (nx != x.order() || ng != g.order()) return std::nullopt;
  std::vector<Elem> flat(count * nx);
  if (!in.read(reinterpret_cast<char*>(flat.data()), static_cast<std::streamsize>(flat.size() * sizeof(Elem)))) {
    return std::nullopt;
  }
  auto set = std::make_shared<HomSet>(HomSet{x, g, {}, true});
  set->homs.reserve(count);
  try {
    for (std::uint64_t i = 0; i < count; ++i) {
      set->homs.emplace_back(x, g, std::vector<Elem>(flat.begin() + i * nx, flat.begin() + (i + 1) * nx));
    }
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  return std::shared_ptr<const HomSet>(std::move(set));
}

void HomStore::save(const HomSet& set) {
  if (!dir_) return;
  std::ostringstream out;
  out.write(kHomMagic, 4);
  put(out, kVersion);
  put<std::uint64_t>(out, set.domain.order());
  put<std::uint64_t>(out, set.codomain.order());
  put<std::uint64_t>(out, set.homs.size());
  for (const auto& h : set.homs) {
    out.write(reinterpret_cast<const char*>(h.map().data()),
              static_cast<std::streamsize>(h.map().size() * sizeof(Elem)));
  }
  atomic_write(*dir_ / ("hom-" + hex(hom_set_key(set.domain, set.codomain)) + ".bin"), out.str());
}

std::uint64_t HomStore::count(const FiniteGroup& x, const FiniteGroup& g, const SearchOptions& options,
                              std::uint64_t limit) {
  const std::pair key{table_key(x), table_key(g)};
  auto answer = [&](Count c) -> std::optional<std::uint64_t> {
    if (c.exact) return limit ? std::min(c.n, limit) : c.n;
    if (limit && c.n >= limit) return limit;
    return std::nullopt;
  };
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end() && it->second->domain.same_table(x)) {
      ++stats_.memory_hits;
      return *answer({it->second->size(), true});
    }
    if (auto it = count_memo_.find(key); it != count_memo_.end()) {
      if (auto a = answer(it->second)) {
        ++stats_.memory_hits;
        return *a;
      }
    }
  }
  const auto path = dir_ ? std::optional(*dir_ / ("cnt-" + hex(hom_set_key(x, g)) + ".bin")) : std::nullopt;
  if (path) {
    std::ifstream in(*path, std::ios::binary);
    char magic[4];
    std::uint32_t version = 0;
    std::uint64_t nx = 0, ng = 0;
    Count c;
    std::uint8_t exact = 0;
    if (in && in.read(magic, 4) && std::memcmp(magic, kCountMagic, 4) == 0 && get(in, version) &&
        version == kVersion && get(in, nx) && get(in, ng) && nx == x.order() && ng == g.order() && get(in, c.n) &&
        get(in, exact)) {
      c.exact = exact != 0;
      if (auto a = answer(c)) {
        std::lock_guard lock(mu_);
        ++stats_.disk_hits;
        count_memo_[key] = c;
        return *a;
      }
    }
  }
  SearchOptions o = options;
  o.store = nullptr;
  Count c{count_homs(x, g, o, limit), false};
  c.exact = limit == 0 || c.n < limit;
  if (path) {
    std::ostringstream out;
    out.write(kCountMagic, 4);
    put(out, kVersion);
    put<std::uint64_t>(out, x.order());
    put<std::uint64_t>(out, g.order());
    put(out, c.n);
    put<std::uint8_t>(out, c.exact ? 1 : 0);
    atomic_write(*path, out.str());
  }
  std::lock_guard lock(mu_);
  ++stats_.computed;
  count_memo_[key] = c;
  return c.n;
}

std::optional<AbelianGroup> HomStore::find_h2(const FiniteGroup& g) {
  const std::uint64_t key = table_key(g);
  {
    std::lock_guard lock(mu_);
    if (auto it = h2_memo_.find(key); it != h2_memo_.end()) {
      ++stats_.memory_hits;
      return it->second;
    }
  }
  if (!dir_) return std::nullopt;
  std::ifstream in(*dir_ / ("h2-" + hex(key) + ".bin"), std::ios::binary);
  if (!in) return std::nullopt;
  char magic[4];
  std::uint32_t version = 0;
  std::uint64_t order = 0, rank = 0;
  if (!in.read(magic, 4) || std::memcmp(magic, kH2Magic, 4) != 0) return std::nullopt;
  if (!get(in, version) || version != kVersion || !get(in, order) || order != g.order() || !get(in, rank)) {
    return std::nullopt;
  }
  std::vector<Int> factors(rank);
  for (auto& f : factors) {
    if (!get(in, f)) return std::nullopt;
  }
  AbelianGroup h2 = AbelianGroup::from_cyclic_orders(factors);
  std::lock_guard lock(mu_);
  ++stats_.disk_hits;
  h2_memo_[key] = h2;
  return h2;
}

void HomStore::put_h2(const FiniteGroup& g, const AbelianGroup& h2) {
  const std::uint64_t key = table_key(g);
  {
    std::lock_guard lock(mu_);
    h2_memo_[key] = h2;
  }
  if (!dir_) return;
  std::ostringstream out;
  out.write(kH2Magic, 4);
  put(out, kVersion);
  put<std::uint64_t>(out, g.order());
  put<std::uint64_t>(out, h2.invariant_factors().size());
  for (Int f : h2.invariant_factors()) put(out, f);
  atomic_write(*dir_ / ("h2-" + hex(key) + ".bin"), out.str());
}

}  // namespace idemlab
