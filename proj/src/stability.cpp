#include "tdsm/stability.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tdsm {

int Family::successor_of(int v) const {
  if (members[0] == v) return members[1];
  if (members[1] == v) return members[2];
  assert(members[2] == v);
  return members[0];
}

Family make_family(int a, int b, int c) {
  Family f{{a, b, c}};
  while (gender_of(f.members[0]) != 0)
    f.members = {f.members[1], f.members[2], f.members[0]};
  return f;
}

std::string to_string(const Family& f) {
  std::ostringstream out;
  out << '(' << f.members[0] << ',' << f.members[1] << ',' << f.members[2]
      << ')';
  return out.str();
}

bool Matching::contains(int v) const {
  for (const Family& f : families)
    if (f.contains(v)) return true;
  return false;
}

Matching make_matching(std::vector<Family> families) {
  std::sort(families.begin(), families.end());
  return Matching{std::move(families)};
}

std::string to_string(const Matching& m) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < m.families.size(); ++i) {
    if (i) out << ',';
    out << to_string(m.families[i]);
  }
  out << '}';
  return out.str();
}

ExtendedRank ExtendedRank::finite(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  ExtendedRank r;
  r.rank_ = rank;
  return r;
}

std::vector<Family> enumerate_families(const Instance& inst) {
  std::vector<Family> out;
  for (int m = 0; m < inst.vertex_count(); m += 3)
    for (int f : inst.prefs[m])
      for (int d : inst.prefs[f])
        if (inst.has_edge(d, m)) out.push_back(Family{{m, f, d}});
  std::sort(out.begin(), out.end());
  return out;
}

ExtendedRank rank_in_matching(const Instance& inst, const Matching& m, int v) {
  for (const Family& f : m.families)
    if (f.contains(v))
      return ExtendedRank::finite(inst.rank(v, f.successor_of(v)));
  return ExtendedRank::unmatched();
}

namespace {

constexpr int kUnmatchedRank = std::numeric_limits<int>::max();

// Extended ranks of every vertex, with the unmatched value folded into
// a plain int for the inner comparison loops.
std::vector<int> matched_ranks(const Instance& inst, const Matching& m) {
  std::vector<int> rank(inst.vertex_count(), kUnmatchedRank);
  for (const Family& f : m.families)
    for (int v : f.members) rank[v] = inst.rank(v, f.successor_of(v));
  return rank;
}

bool blocks(const Instance& inst, const Family& f,
            const std::vector<int>& rank) {
  for (int i = 0; i < 3; ++i) {
    const int v = f.members[i];
    if (inst.rank(v, f.members[(i + 1) % 3]) >= rank[v]) return false;
  }
  return true;
}

}  // namespace

std::vector<Family> find_blocking_triples(const Instance& inst,
                                          const Matching& m) {
  const std::vector<int> rank = matched_ranks(inst, m);
  std::vector<Family> out;
  for (const Family& f : enumerate_families(inst))
    if (blocks(inst, f, rank)) out.push_back(f);
  return out;
}

std::optional<Family> first_blocking_triple(const Instance& inst,
                                            const Matching& m) {
  const std::vector<int> rank = matched_ranks(inst, m);
  for (const Family& f : enumerate_families(inst))
    if (blocks(inst, f, rank)) return f;
  return std::nullopt;
}

bool is_stable(const Instance& inst, const Matching& m) {
  return !first_blocking_triple(inst, m).has_value();
}

namespace {

bool disjoint(const Family& f, const std::vector<char>& used) {
  return !used[f.members[0]] && !used[f.members[1]] && !used[f.members[2]];
}

// Take-before-skip subset recursion over the canonically sorted family
// list. Visits maximal matchings in lexicographic order of their sorted
// family lists; the callback returns false to stop the enumeration.
template <typename Cb>
bool visit_maximal(const std::vector<Family>& fams, std::size_t i,
                   std::vector<char>& used, std::vector<std::size_t>& picked,
                   Cb&& cb) {
  if (i == fams.size()) {
    for (const Family& f : fams)
      if (disjoint(f, used)) return true;  // completable, keep enumerating
    return cb(picked);
  }
  const Family& f = fams[i];
  if (disjoint(f, used)) {
    for (int v : f.members) used[v] = 1;
    picked.push_back(i);
    const bool keep_going = visit_maximal(fams, i + 1, used, picked, cb);
    picked.pop_back();
    for (int v : f.members) used[v] = 0;
    if (!keep_going) return false;
  }
  return visit_maximal(fams, i + 1, used, picked, cb);
}

template <typename Cb>
void for_each_maximal_matching(const Instance& inst, Cb&& cb) {
  const std::vector<Family> fams = enumerate_families(inst);
  std::vector<char> used(inst.vertex_count(), 0);
  std::vector<std::size_t> picked;
  visit_maximal(fams, 0, used, picked, cb);
}

Matching matching_from_indices(const std::vector<Family>& fams,
                               const std::vector<std::size_t>& picked) {
  Matching m;
  m.families.reserve(picked.size());
  for (std::size_t i : picked) m.families.push_back(fams[i]);
  return m;  // picked is ascending over a sorted list, so already canonical
}

// All-matchings recursion for the brute-force route: every disjoint
// subset, including the empty one.
template <typename Cb>
bool visit_all(const std::vector<Family>& fams, std::size_t i,
               std::vector<char>& used, std::vector<std::size_t>& picked,
               Cb&& cb) {
  if (i == fams.size()) return cb(picked);
  const Family& f = fams[i];
  if (disjoint(f, used)) {
    for (int v : f.members) used[v] = 1;
    picked.push_back(i);
    const bool keep_going = visit_all(fams, i + 1, used, picked, cb);
    picked.pop_back();
    for (int v : f.members) used[v] = 0;
    if (!keep_going) return false;
  }
  return visit_all(fams, i + 1, used, picked, cb);
}

}  // namespace

std::vector<Matching> enumerate_maximal_matchings(const Instance& inst) {
  const std::vector<Family> fams = enumerate_families(inst);
  std::vector<Matching> out;
  std::vector<char> used(inst.vertex_count(), 0);
  std::vector<std::size_t> picked;
  visit_maximal(fams, 0, used, picked, [&](const auto& indices) {
    out.push_back(matching_from_indices(fams, indices));
    return true;
  });
  return out;
}

std::optional<Matching> find_stable_matching(const Instance& inst) {
  const std::vector<Family> fams = enumerate_families(inst);
  std::vector<int> rank(inst.vertex_count(), kUnmatchedRank);
  std::vector<std::array<int, 3>> edge_ranks(fams.size());
  for (std::size_t i = 0; i < fams.size(); ++i)
    for (int j = 0; j < 3; ++j)
      edge_ranks[i][j] =
          inst.rank(fams[i].members[j], fams[i].members[(j + 1) % 3]);

  std::optional<Matching> result;
  std::vector<char> used(inst.vertex_count(), 0);
  std::vector<std::size_t> picked;
  visit_maximal(fams, 0, used, picked, [&](const auto& indices) {
    for (std::size_t i : indices)
      for (int j = 0; j < 3; ++j)
        rank[fams[i].members[j]] = edge_ranks[i][j];

    bool stable = true;
    for (std::size_t i = 0; i < fams.size(); ++i) {
      if (edge_ranks[i][0] < rank[fams[i].members[0]] &&
          edge_ranks[i][1] < rank[fams[i].members[1]] &&
          edge_ranks[i][2] < rank[fams[i].members[2]]) {
        stable = false;
        break;
      }
    }

    for (std::size_t i : indices)
      for (int v : fams[i].members) rank[v] = kUnmatchedRank;

    if (stable) {
      result = matching_from_indices(fams, indices);
      return false;
    }
    return true;
  });
  return result;
}

bool brute_force_stable_exists(const Instance& inst) {
  const std::vector<Family> fams = enumerate_families(inst);
  bool found = false;
  std::vector<char> used(inst.vertex_count(), 0);
  std::vector<std::size_t> picked;
  visit_all(fams, 0, used, picked, [&](const auto& indices) {
    if (is_stable(inst, matching_from_indices(fams, indices))) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

std::size_t count_matchings(const Instance& inst) {
  const std::vector<Family> fams = enumerate_families(inst);
  std::size_t count = 0;
  std::vector<char> used(inst.vertex_count(), 0);
  std::vector<std::size_t> picked;
  visit_all(fams, 0, used, picked, [&](const auto& indices) {
    if (!indices.empty()) ++count;
    return true;
  });
  return count;
}

std::string certificate(const Instance& inst) {
  std::ostringstream out;
  for (const Matching& m : enumerate_maximal_matchings(inst)) {
    out << to_string(m);
    const std::vector<Family> blockers = find_blocking_triples(inst, m);
    if (blockers.empty()) {
      out << " -> STABLE\n";
    } else {
      out << " -> BLOCKED by {";
      for (std::size_t i = 0; i < blockers.size(); ++i) {
        if (i) out << ',';
        out << to_string(blockers[i]);
      }
      out << "}\n";
    }
  }
  return out.str();
}

}  // namespace tdsm
