#pragma once

// Shared line-oriented reader/writer for the 3dsmi / kdsmi preference
// formats. Internal to the library; not installed.

#include <iosfwd>
#include <string>
#include <vector>

namespace tdsm::detail {

struct PrefGraph {
  int k = 3;
  int n = 0;
  std::vector<std::vector<int>> prefs;
};

// magic is "3dsmi" (header carries n only) or "kdsmi" (header carries
// k then n). Enforces the shared invariants: ids in range, edges from
// gender g to g + 1 mod k, no duplicate targets or vertex lines, list
// length <= n. Throws ParseError with 1-based line/column.
PrefGraph parse_pref_graph(std::istream& in, const std::string& magic);

void write_pref_graph(std::ostream& out, const std::string& magic,
                      const PrefGraph& g);

}  // namespace tdsm::detail
