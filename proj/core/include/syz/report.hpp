#pragma once

#include "syz/bundle.hpp"
#include "syz/slope.hpp"

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace syz {

/// One certificate cell of an atlas run.
struct AtlasCell {
  std::int64_t n;
  std::int64_t a;
  std::int64_t b;
  std::optional<std::int64_t> d;

  bool operator==(const AtlasCell&) const = default;
  std::string key() const;
};

/// Grid of certificate cells: for each n and b, either an explicit a-range or
/// an (m, j)-range with a = m*b - j. Cells with a <= b or j > b-1 are not
/// part of the grid. Empty ranges yield an empty cell list.
struct AtlasJob {
  std::vector<std::int64_t> ns;
  std::pair<std::int64_t, std::int64_t> b_range{1, 0}; ///< inclusive
  std::optional<std::pair<std::int64_t, std::int64_t>> a_range;
  std::optional<std::pair<std::int64_t, std::int64_t>> m_range;
  std::pair<std::int64_t, std::int64_t> j_range{0, 0}; ///< used with m_range
  std::vector<std::int64_t> ds; ///< empty = one cell per (n,a,b) without d
  int threads = 1;
  std::optional<std::string> cache_path;
};

/// Deduplicated cells in canonical (n, a, b, d) order.
/// Throws std::invalid_argument when both or neither of a_range/m_range are set.
std::vector<AtlasCell> atlas_cells(const AtlasJob& job);

/// Append-only JSON-lines store of precomputed result strings, keyed by a
/// text key and filtered by engine version on load. A hit returns the stored
/// string verbatim, which keeps reruns byte-identical.
class ResultCache {
public:
  /// No path = in-memory only. A missing file is an empty cache.
  explicit ResultCache(std::optional<std::string> path);

  std::optional<std::string> get(const std::string& key);
  /// Stores and, when backed by a file, appends one JSONL record.
  void put(const std::string& key, const std::string& value);

  std::size_t size() const { return map_.size(); }

private:
  std::optional<std::string> path_;
  std::unordered_map<std::string, std::string> map_;
  std::mutex mu_;
};

struct AtlasOutcome {
  std::vector<std::string> lines; ///< one certificate JSON per cell, cell order
  std::size_t cache_hits = 0;
  std::size_t computed = 0;
};

/// Evaluates every cell (worker pool of job.threads), reusing cached result
/// strings. Output is byte-identical for any thread count and cache state.
AtlasOutcome run_atlas(const AtlasJob& job);

/// "r' | mu_max" table in the source's row format, one row per subsheaf rank.
std::string render_per_rank_table(const SlopeProfile& p, bool approx = false);

/// mu_max summary plus witness plus the per-rank table.
std::string render_profile(const SlopeProfile& p, const MonomialSet& s, bool approx = false);

std::string render_certificate(const StabilityCertificate& c, bool approx = false);

/// "p/q" plus an optional fixed-point approximation column.
std::string render_rational(const Rational& x, bool approx);

/// "alpha d - |beta|" / "alpha d + beta" with the sign folded into the operator.
std::string render_linear_form(const Rational& alpha, const Rational& beta, bool approx = false);

} // namespace syz
