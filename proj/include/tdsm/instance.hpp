#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdsm {

// Vertex ids live in [0, 3n). The residue id % 3 is the vertex's gender,
// and every edge goes from gender g to gender (g + 1) % 3.
inline int gender_of(int v) { return v % 3; }
inline int next_gender(int g) { return (g + 1) % 3; }

// A 3DSMI-CYC instance: each vertex carries an ordered preference list
// over vertices of the next gender. prefs[v][i] is the target of rank
// i + 1, so rank 1 is the most preferred and ranks are contiguous by
// construction.
struct Instance {
  int n = 0;
  std::vector<std::vector<int>> prefs;

  Instance() = default;
  explicit Instance(int dimension)
      : n(dimension), prefs(static_cast<std::size_t>(3 * dimension)) {}

  int vertex_count() const { return 3 * n; }
  int out_degree(int v) const { return static_cast<int>(prefs[v].size()); }
  int edge_count() const;

  // Rank of edge (v, w), 1-based; 0 when the edge is absent.
  int rank(int v, int w) const;
  bool has_edge(int v, int w) const { return rank(v, w) != 0; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the structural invariants of an in-memory instance. Violations
// are data, not errors: the report lists every one found.
ValidationReport validate(const Instance& inst);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Text format: header `3dsmi <n>`, then one `<vertex>: <t1> <t2> ...`
// line per vertex with a nonempty list; `#` starts a comment. Rejects
// input that would fail validate(), with line/column diagnostics.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
std::string to_text(const Instance& inst);

// Returns an instance in which every vertex has out-degree >= 1 but the
// family set and the relative rank order of surviving edges are
// unchanged: vertices with no outgoing edges are pruned (together with
// edges into them, repeatedly), then each pruned vertex is re-equipped
// with a single edge to the lowest-id surviving vertex of the next
// gender. Requires a nonempty family set; throws std::invalid_argument
// otherwise.
Instance normalize(const Instance& inst);

}  // namespace tdsm
