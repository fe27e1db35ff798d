#include "maxcut/known_best.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "maxcut/csv.hpp"

namespace maxcut {

void KnownBestTable::insert(const std::string& instance, KnownBestEntry entry) {
  std::int64_t best = INT64_MIN;
  bool any = false;
  for (const auto& v : {entry.ss, entry.circut, entry.vnspr, entry.sa})
    if (v) {
      best = std::max(best, *v);
      any = true;
    }
  if (!any) throw std::invalid_argument("known-best row '" + instance + "' has no values");
  entry.best_known = best;
  if (!entries_.emplace(instance, entry).second)
    throw std::invalid_argument("duplicate known-best instance '" + instance + "'");
}

const KnownBestEntry* KnownBestTable::find(const std::string& instance) const {
  auto it = entries_.find(instance);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

std::optional<std::int64_t> parse_cell(const std::string& cell, const std::string& context) {
  if (cell.empty()) return std::nullopt;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size())
    throw std::invalid_argument("malformed known-best value '" + cell + "' in " + context);
  return value;
}

}  // namespace

KnownBestTable load_known_best(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open known-best file: " + path);

  // Strip comment lines before CSV parsing; '#' only introduces a comment
  // at the start of a line.
  std::string text, line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    text += line;
    text += '\n';
  }

  auto rows = csv::parse(text);
  std::erase_if(rows, [](const auto& r) { return r.size() == 1 && r[0].empty(); });
  if (rows.empty()) throw std::invalid_argument("known-best file has no header: " + path);

  const std::vector<std::string> header = {"instance", "ss", "circut", "vnspr", "sa"};
  if (rows[0] != header)
    throw std::invalid_argument("known-best header must be instance,ss,circut,vnspr,sa");

  KnownBestTable table;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != 5)
      throw std::invalid_argument("known-best row " + std::to_string(i + 1) +
                                  " has " + std::to_string(row.size()) + " fields, expected 5");
    if (row[0].empty())
      throw std::invalid_argument("known-best row " + std::to_string(i + 1) + " has no name");
    KnownBestEntry entry;
    entry.ss = parse_cell(row[1], "row '" + row[0] + "'");
    entry.circut = parse_cell(row[2], "row '" + row[0] + "'");
    entry.vnspr = parse_cell(row[3], "row '" + row[0] + "'");
    entry.sa = parse_cell(row[4], "row '" + row[0] + "'");
    table.insert(row[0], entry);
  }
  return table;
}

}  // namespace maxcut
