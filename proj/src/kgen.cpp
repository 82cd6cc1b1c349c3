#include "tdsm/kgen.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pref_format.hpp"

namespace tdsm {

int KInstance::edge_count() const {
  int total = 0;
  for (const auto& list : prefs) total += static_cast<int>(list.size());
  return total;
}

int KInstance::rank(int v, int w) const {
  const auto& list = prefs[v];
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == w) return static_cast<int>(i) + 1;
  return 0;
}

bool KFamily::contains(int v) const {
  return std::find(members.begin(), members.end(), v) != members.end();
}

int KFamily::successor_of(int v) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == v) return members[(i + 1) % members.size()];
  assert(false);
  return -1;
}

std::string to_string(const KFamily& f) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    if (i) out << ',';
    out << f.members[i];
  }
  out << ')';
  return out.str();
}

bool KMatching::contains(int v) const {
  for (const KFamily& f : families)
    if (f.contains(v)) return true;
  return false;
}

std::string to_string(const KMatching& m) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < m.families.size(); ++i) {
    if (i) out << ',';
    out << to_string(m.families[i]);
  }
  out << '}';
  return out.str();
}

namespace {

void extend_cycle(const KInstance& ki, std::vector<int>& path,
                  std::vector<KFamily>& out) {
  if (static_cast<int>(path.size()) == ki.k) {
    if (ki.has_edge(path.back(), path.front())) out.push_back(KFamily{path});
    return;
  }
  for (int w : ki.prefs[path.back()]) {
    path.push_back(w);
    extend_cycle(ki, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<KFamily> k_enumerate_families(const KInstance& ki) {
  std::vector<KFamily> out;
  for (int v = 0; v < ki.vertex_count(); v += ki.k) {
    std::vector<int> path{v};
    extend_cycle(ki, path, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

constexpr int kUnmatchedRank = std::numeric_limits<int>::max();

std::vector<int> matched_ranks(const KInstance& ki, const KMatching& m) {
  std::vector<int> rank(ki.vertex_count(), kUnmatchedRank);
  for (const KFamily& f : m.families)
    for (int v : f.members) rank[v] = ki.rank(v, f.successor_of(v));
  return rank;
}

bool blocks(const KInstance& ki, const KFamily& f,
            const std::vector<int>& rank) {
  const std::size_t k = f.members.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int v = f.members[i];
    if (ki.rank(v, f.members[(i + 1) % k]) >= rank[v]) return false;
  }
  return true;
}

bool disjoint(const KFamily& f, const std::vector<char>& used) {
  for (int v : f.members)
    if (used[v]) return false;
  return true;
}

// Same take-before-skip recursion as the 3-gender module, visiting
// uncompletable matchings in lexicographic order.
template <typename Cb>
bool visit_maximal(const std::vector<KFamily>& fams, std::size_t i,
                   std::vector<char>& used, std::vector<std::size_t>& picked,
                   Cb&& cb) {
  if (i == fams.size()) {
    for (const KFamily& f : fams)
      if (disjoint(f, used)) return true;
    return cb(picked);
  }
  const KFamily& f = fams[i];
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

}  // namespace

std::vector<KFamily> k_find_blocking_triples(const KInstance& ki,
                                             const KMatching& m) {
  const std::vector<int> rank = matched_ranks(ki, m);
  std::vector<KFamily> out;
  for (const KFamily& f : k_enumerate_families(ki))
    if (blocks(ki, f, rank)) out.push_back(f);
  return out;
}

bool k_is_stable(const KInstance& ki, const KMatching& m) {
  const std::vector<int> rank = matched_ranks(ki, m);
  for (const KFamily& f : k_enumerate_families(ki))
    if (blocks(ki, f, rank)) return false;
  return true;
}

std::optional<KMatching> k_find_stable_matching(const KInstance& ki) {
  const std::vector<KFamily> fams = k_enumerate_families(ki);
  std::optional<KMatching> result;
  std::vector<char> used(ki.vertex_count(), 0);
  std::vector<std::size_t> picked;
  visit_maximal(fams, 0, used, picked, [&](const auto& indices) {
    KMatching m;
    m.families.reserve(indices.size());
    for (std::size_t i : indices) m.families.push_back(fams[i]);
    if (k_is_stable(ki, m)) {
      result = std::move(m);
      return false;
    }
    return true;
  });
  return result;
}

int default_subdivided_gender(const Instance& inst) {
  int best = 0;
  int best_count = std::numeric_limits<int>::max();
  for (int g = 0; g < 3; ++g) {
    int count = 0;
    for (int v = g; v < inst.vertex_count(); v += 3)
      count += inst.out_degree(v);
    if (count < best_count) {
      best = g;
      best_count = count;
    }
  }
  return best;
}

KInstance subdivide(const Instance& inst, int k, int subdivided_gender,
                    std::vector<int>* old_to_new) {
  if (k < 3) throw std::invalid_argument("subdivide: k must be at least 3");
  if (subdivided_gender < 0 || subdivided_gender > 2)
    throw std::invalid_argument("subdivide: gender must be 0, 1, or 2");

  const int g = subdivided_gender;
  const int chain_len = k - 3;  // intermediate vertices per subdivided edge

  // Subdivided edges in canonical order: source ascending, rank ascending.
  struct Edge {
    int source;
    int target;
  };
  std::vector<Edge> edges;
  for (int u = g; u < inst.vertex_count(); u += 3)
    for (int w : inst.prefs[u]) edges.push_back({u, w});

  const int n2 = std::max(inst.n, chain_len > 0
                                      ? static_cast<int>(edges.size())
                                      : 0);

  // Old gender h keeps its index if h <= g, otherwise shifts past the
  // chain_len inserted genders; intermediates occupy g+1 .. g+chain_len.
  auto new_gender = [&](int h) { return h > g ? h + chain_len : h; };
  auto map_old = [&](int v) { return (v / 3) * k + new_gender(v % 3); };
  auto chain_id = [&](int edge, int j) { return edge * k + g + j; };

  KInstance out(k, n2);
  for (int v = 0; v < inst.vertex_count(); ++v) {
    auto& list = out.prefs[map_old(v)];
    if (v % 3 != g) {
      for (int w : inst.prefs[v]) list.push_back(map_old(w));
    } else {
      for (std::size_t i = 0; i < inst.prefs[v].size(); ++i) {
        if (chain_len == 0) {
          list.push_back(map_old(inst.prefs[v][i]));
        } else {
          // Locate this edge's position in the canonical edge order.
          int e = 0;
          for (int u = g; u < v; u += 3) e += inst.out_degree(u);
          e += static_cast<int>(i);
          list.push_back(chain_id(e, 1));
        }
      }
    }
  }
  for (int e = 0; e < static_cast<int>(edges.size()) && chain_len > 0; ++e)
    for (int j = 1; j <= chain_len; ++j)
      out.prefs[chain_id(e, j)] = {j < chain_len ? chain_id(e, j + 1)
                                                 : map_old(edges[e].target)};

  if (old_to_new) {
    old_to_new->resize(inst.vertex_count());
    for (int v = 0; v < inst.vertex_count(); ++v) (*old_to_new)[v] = map_old(v);
  }
  return out;
}

KInstance subdivide(const Instance& inst, int k) {
  return subdivide(inst, k, default_subdivided_gender(inst));
}

KInstance parse_kinstance(std::istream& in) {
  detail::PrefGraph g = detail::parse_pref_graph(in, "kdsmi");
  KInstance ki(g.k, g.n);
  ki.prefs = std::move(g.prefs);
  return ki;
}

KInstance parse_kinstance(const std::string& text) {
  std::istringstream in(text);
  return parse_kinstance(in);
}

std::string to_text(const KInstance& ki) {
  std::ostringstream out;
  detail::write_pref_graph(out, "kdsmi", {ki.k, ki.n, ki.prefs});
  return out.str();
}

}  // namespace tdsm
