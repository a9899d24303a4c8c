#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "idemlab/abelian.hpp"
#include "idemlab/homlab.hpp"

namespace idemlab {

/// Default cache directory: $IDEMLAB_CACHE, else ".idemlab-cache".
std::filesystem::path default_cache_dir();

/// FNV-1a over (|X|, table X, |G|, table G).
std::uint64_t hom_set_key(const FiniteGroup& x, const FiniteGroup& g);

/// Memo for complete Hom sets and Schur multipliers, optionally backed by a
/// content-addressed directory. Files are written to a temporary name and
/// renamed, so concurrent writers never expose partial files.
///
/// Hom-set file layout (little endian):
///   "IDHS" u32 version, u64 |X|, u64 |G|, u64 count, count·|X| u32 maps.
/// Count files: "IDHC" u32 version, u64 |X|, u64 |G|, u64 count, u8 exact.
class HomStore {
 public:
  explicit HomStore(std::optional<std::filesystem::path> disk_dir = std::nullopt);

  std::shared_ptr<const HomSet> homs(const FiniteGroup& x, const FiniteGroup& g, const SearchOptions& options);
  /// |Hom(X, G)| capped at `limit` (0 = exact). Stored without the maps;
  /// a capped count is kept as a lower bound.
  std::uint64_t count(const FiniteGroup& x, const FiniteGroup& g, const SearchOptions& options,
                      std::uint64_t limit = 0);

  std::optional<AbelianGroup> find_h2(const FiniteGroup& g);
  void put_h2(const FiniteGroup& g, const AbelianGroup& h2);

  const std::optional<std::filesystem::path>& disk_dir() const { return dir_; }

  struct Stats {
    std::uint64_t memory_hits = 0;
    std::uint64_t disk_hits = 0;
    std::uint64_t computed = 0;
  };
  Stats stats() const;

 private:
  std::optional<std::shared_ptr<const HomSet>> load(const FiniteGroup& x, const FiniteGroup& g);
  void save(const HomSet& set);

  std::optional<std::filesystem::path> dir_;
  mutable std::mutex mu_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::shared_ptr<const HomSet>> memo_;
  std::map<std::uint64_t, AbelianGroup> h2_memo_;
  struct Count {
    std::uint64_t n = 0;
    bool exact = false;
  };
  std::map<std::pair<std::uint64_t, std::uint64_t>, Count> count_memo_;
  Stats stats_;
};

}  // namespace idemlab
