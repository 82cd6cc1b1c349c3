#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tdsm/instance.hpp"

namespace tdsm {

// A directed 3-cycle with one vertex per gender, stored in the canonical
// rotation: the gender-0 member first. members[i] points to
// members[(i + 1) % 3] in the instance.
struct Family {
  std::array<int, 3> members{};

  bool contains(int v) const {
    return members[0] == v || members[1] == v || members[2] == v;
  }
  // The vertex this member points to inside the cycle.
  int successor_of(int v) const;

  friend bool operator==(const Family&, const Family&) = default;
  friend auto operator<=>(const Family&, const Family&) = default;
};

// Canonicalizes any rotation of a gender-complete 3-cycle.
Family make_family(int a, int b, int c);
std::string to_string(const Family& f);

// A set of pairwise vertex-disjoint families, kept sorted canonically.
struct Matching {
  std::vector<Family> families;

  bool contains(int v) const;
  std::size_t size() const { return families.size(); }

  friend bool operator==(const Matching&, const Matching&) = default;
};

Matching make_matching(std::vector<Family> families);  // sorts its input
std::string to_string(const Matching& m);

// Rank of a vertex's outgoing edge inside its family; vertices outside
// every family compare greater than any finite rank.
class ExtendedRank {
 public:
  static ExtendedRank unmatched() { return ExtendedRank{}; }
  static ExtendedRank finite(int rank);

  bool is_unmatched() const { return !rank_.has_value(); }
  int value() const { return rank_.value(); }

  friend bool operator==(const ExtendedRank&, const ExtendedRank&) = default;
  friend bool operator<(const ExtendedRank& a, const ExtendedRank& b) {
    if (a.is_unmatched()) return false;
    if (b.is_unmatched()) return true;
    return *a.rank_ < *b.rank_;
  }

 private:
  ExtendedRank() = default;
  std::optional<int> rank_;
};

// All directed 3-cycles of the instance, canonicalized, in sorted order.
std::vector<Family> enumerate_families(const Instance& inst);

ExtendedRank rank_in_matching(const Instance& inst, const Matching& m, int v);

// All 3-cycles whose every member would strictly improve its extended
// rank by forming the cycle, sorted canonically. Empty iff m is stable.
std::vector<Family> find_blocking_triples(const Instance& inst,
                                          const Matching& m);
// The lexicographically smallest blocking triple, if any.
std::optional<Family> first_blocking_triple(const Instance& inst,
                                            const Matching& m);
bool is_stable(const Instance& inst, const Matching& m);

// Matchings to which no disjoint family can be added, in lexicographic
// order of their sorted family lists. The empty matching qualifies iff
// the instance has no families at all. Only these matchings can be
// stable: anything completable is blocked by any addable family.
std::vector<Matching> enumerate_maximal_matchings(const Instance& inst);

// First maximal matching (in the order above) that is stable, if any.
std::optional<Matching> find_stable_matching(const Instance& inst);

// Independent existence check that scans every matching, including
// non-maximal ones and the empty one, and tests each with is_stable.
// Intended for small instances (n <= 3 or thereabouts).
bool brute_force_stable_exists(const Instance& inst);

// Number of nonempty matchings (disjoint family subsets) the brute-force
// scan visits.
std::size_t count_matchings(const Instance& inst);

// One line per maximal matching:
//   {families} -> BLOCKED by {triples}
//   {families} -> STABLE
std::string certificate(const Instance& inst);

}  // namespace tdsm
