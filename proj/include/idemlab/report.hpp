#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "idemlab/covers.hpp"

namespace idemlab {

using Json = nlohmann::ordered_json;

/// Number of positive divisors.
Int divisor_count(Int n);

/// One row of the bundled table of expected values.
struct TableRow {
  std::string row;
  std::vector<Int> h2;
  Int h2_exponent = 1;
  Int sigma0 = 1;
  std::size_t idem_size = 0;
};

struct CorpusEntry {
  std::filesystem::path file;
  std::optional<TableRow> expected;
};

/// Reads `expected.json` in `dir` (a list of {file, row, h2, exp, sigma0,
/// idem}). Group files without a row are listed with no expectation. A
/// directory without group files yields an empty list.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

Json abelian_json(const AbelianGroup& a);

Json info_report(const FiniteGroup& g, Session& session);
Json covers_report(const FiniteGroup& g, Session& session);
/// `iterate` > 0 adds Idem^1..Idem^n; `inf` adds the fixpoint.
Json idem_report(const FiniteGroup& g, Session& session, std::size_t iterate = 0, bool inf = false);

/// Per-group record of the table check. `idem_inf_size` is null when the
/// iteration hits a cap.
Json group_record(const FiniteGroup& g, Session& session, const std::optional<TableRow>& expected);

struct VerifyOutcome {
  Json report;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> warnings;
};
/// Entries whose computation exceeds a cap are SKIP, never FAIL. Entries
/// run in parallel up to the session's job count. Computed records are
/// kept as rec-<key>.json in the session's cache directory, keyed by the
/// group table, its name and the caps.
VerifyOutcome verify_table(const std::filesystem::path& dir, Session& session);

}  // namespace idemlab
