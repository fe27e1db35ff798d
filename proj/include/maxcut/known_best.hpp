#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace maxcut {

/// Reference objective values for one instance, one per heuristic, plus
/// their maximum. Reference data, not proven optima.
struct KnownBestEntry {
  std::optional<std::int64_t> ss;
  std::optional<std::int64_t> circut;
  std::optional<std::int64_t> vnspr;
  std::optional<std::int64_t> sa;
  std::int64_t best_known = 0;
};

class KnownBestTable {
 public:
  void insert(const std::string& instance, KnownBestEntry entry);
  const KnownBestEntry* find(const std::string& instance) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, KnownBestEntry>& entries() const { return entries_; }

 private:
  std::map<std::string, KnownBestEntry> entries_;
};

/// Loads a CSV with header "instance,ss,circut,vnspr,sa"; blank cells mean
/// the heuristic reported no value, '#' lines are comments. best_known is
/// computed as the maximum of the present values. Duplicate instance names
/// and rows with no values at all are errors.
KnownBestTable load_known_best(const std::string& path);

}  // namespace maxcut
