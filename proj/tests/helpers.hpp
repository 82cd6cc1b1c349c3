#pragma once

// Test-side oracles and generators. The family oracle iterates every
// gender-complete vertex triple and checks the three edges directly on
// the preference lists, independently of the library's enumeration.

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "tdsm/instance.hpp"

namespace testutil {

inline std::vector<std::array<int, 3>> brute_families(
    const tdsm::Instance& inst) {
  std::vector<std::array<int, 3>> out;
  const int vc = inst.vertex_count();
  for (int a = 0; a < vc; a += 3)
    for (int b = 1; b < vc; b += 3)
      for (int c = 2; c < vc; c += 3) {
        const auto& pa = inst.prefs[a];
        const auto& pb = inst.prefs[b];
        const auto& pc = inst.prefs[c];
        if (std::find(pa.begin(), pa.end(), b) != pa.end() &&
            std::find(pb.begin(), pb.end(), c) != pb.end() &&
            std::find(pc.begin(), pc.end(), a) != pc.end())
          out.push_back({a, b, c});
      }
  std::sort(out.begin(), out.end());
  return out;
}

// Uniformly random valid instance: every vertex independently draws a
// uniformly random ordered subset of the next-gender class.
inline tdsm::Instance random_instance(std::mt19937& rng, int n) {
  tdsm::Instance inst(n);
  for (int v = 0; v < inst.vertex_count(); ++v) {
    std::vector<int> pool;
    for (int t = tdsm::next_gender(tdsm::gender_of(v)); t < inst.vertex_count();
         t += 3)
      pool.push_back(t);
    // Count ordered subsets of each length, pick one uniformly.
    std::vector<std::size_t> per_length{1};  // empty list
    std::size_t total = 1;
    std::size_t falling = 1;
    for (int len = 1; len <= n; ++len) {
      falling *= pool.size() - (len - 1);
      per_length.push_back(falling);
      total += falling;
    }
    std::uniform_int_distribution<std::size_t> pick(0, total - 1);
    std::size_t x = pick(rng);
    int len = 0;
    while (x >= per_length[len]) {
      x -= per_length[len];
      ++len;
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    inst.prefs[v].assign(pool.begin(), pool.begin() + len);
  }
  return inst;
}

// Lengths of all simple directed cycles, found by path DFS anchored at
// each cycle's minimal vertex.
inline std::vector<int> simple_cycle_lengths(const tdsm::Instance& inst) {
  std::vector<int> lengths;
  const int vc = inst.vertex_count();
  std::vector<char> on_path(vc, 0);
  std::vector<int> path;

  auto dfs = [&](auto&& self, int start, int v) -> void {
    for (int w : inst.prefs[v]) {
      if (w == start) {
        lengths.push_back(static_cast<int>(path.size()));
        continue;
      }
      if (w < start || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };

  for (int start = 0; start < vc; ++start) {
    on_path[start] = 1;
    path.assign(1, start);
    dfs(dfs, start, start);
    on_path[start] = 0;
  }
  return lengths;
}

}  // namespace testutil
