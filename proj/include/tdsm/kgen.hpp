#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tdsm/instance.hpp"

namespace tdsm {

// k-gender instance (k >= 3): gender(id) = id % k, edges go from gender
// g to (g + 1) % k, preference lists ranked as in the 3-gender case.
struct KInstance {
  int k = 3;
  int n = 0;
  std::vector<std::vector<int>> prefs;

  KInstance() = default;
  KInstance(int genders, int dimension)
      : k(genders),
        n(dimension),
        prefs(static_cast<std::size_t>(genders) * dimension) {}

  int vertex_count() const { return k * n; }
  int gender(int v) const { return v % k; }
  int out_degree(int v) const { return static_cast<int>(prefs[v].size()); }
  int edge_count() const;
  int rank(int v, int w) const;  // 1-based; 0 when absent
  bool has_edge(int v, int w) const { return rank(v, w) != 0; }

  friend bool operator==(const KInstance&, const KInstance&) = default;
};

// A directed k-cycle with one vertex per gender; members[0] has gender 0
// and members[i] points to members[(i + 1) % k].
struct KFamily {
  std::vector<int> members;

  bool contains(int v) const;
  int successor_of(int v) const;

  friend bool operator==(const KFamily&, const KFamily&) = default;
  friend auto operator<=>(const KFamily&, const KFamily&) = default;
};

std::string to_string(const KFamily& f);

struct KMatching {
  std::vector<KFamily> families;

  bool contains(int v) const;

  friend bool operator==(const KMatching&, const KMatching&) = default;
};

std::string to_string(const KMatching& m);

std::vector<KFamily> k_enumerate_families(const KInstance& ki);
std::vector<KFamily> k_find_blocking_triples(const KInstance& ki,
                                             const KMatching& m);
bool k_is_stable(const KInstance& ki, const KMatching& m);
std::optional<KMatching> k_find_stable_matching(const KInstance& ki);

// Turns a 3-gender instance into a k-gender one by replacing each
// outgoing edge of the chosen gender class with a chain of k - 3 fresh
// out-degree-1 vertices, one per new gender. The first chain edge
// inherits the original edge's rank, gender classes are re-indexed so
// all edges still step one gender forward, and every class is padded
// with isolated vertices to the size of the largest. k = 3 returns the
// input unchanged. The resulting instance has a family-preserving
// bijection with the input: a stable matching exists on one side iff it
// does on the other.
KInstance subdivide(const Instance& inst, int k, int subdivided_gender,
                    std::vector<int>* old_to_new = nullptr);
// Default gender: the class with the fewest outgoing edges (lowest
// index on ties).
KInstance subdivide(const Instance& inst, int k);
int default_subdivided_gender(const Instance& inst);

// Text format: header `kdsmi <k> <n>`, body as in the 3-gender format.
KInstance parse_kinstance(std::istream& in);
KInstance parse_kinstance(const std::string& text);
std::string to_text(const KInstance& ki);

}  // namespace tdsm
