#include "tdsm/shape.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tdsm {

BasicSubgraph basic_subgraph(const Instance& inst) {
  BasicSubgraph b;
  b.next.assign(inst.vertex_count(), -1);
  for (int v = 0; v < inst.vertex_count(); ++v)
    if (!inst.prefs[v].empty()) b.next[v] = inst.prefs[v][0];
  return b;
}

ShapeClass classify_basic_shape(const BasicSubgraph& b, int n) {
  const int vc = static_cast<int>(b.next.size());

  for (int v = 0; v < vc; ++v) {
    const int a = b.next[v];
    if (a < 0) continue;
    const int c = b.next[a];
    if (c >= 0 && b.next[c] == v) return ShapeClass::contains_3_cycle;
  }

  if (n != 3 || vc != 9) return ShapeClass::other;
  for (int v = 0; v < 9; ++v)
    if (b.next[v] < 0) return ShapeClass::other;

  // Walk far enough to land on a cycle, then collect it.
  int cur = 0;
  for (int i = 0; i < 16; ++i) cur = b.next[cur];
  std::vector<int> cycle{cur};
  for (int x = b.next[cur]; x != cur; x = b.next[x]) cycle.push_back(x);

  if (cycle.size() == 9) return ShapeClass::nine_cycle;
  if (cycle.size() != 6) return ShapeClass::other;

  std::array<int, 9> pos;
  pos.fill(-1);
  for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = static_cast<int>(i);

  // The three off-cycle vertices: depth = steps to reach the cycle.
  struct Tail {
    int vertex;
    int depth;
    int attach_pos;
  };
  std::vector<Tail> tails;
  for (int v = 0; v < 9; ++v) {
    if (pos[v] >= 0) continue;
    int depth = 0;
    int x = v;
    while (pos[x] < 0) {
      x = b.next[x];
      if (++depth > 9) return ShapeClass::other;
    }
    tails.push_back({v, depth, pos[x]});
  }
  if (tails.size() != 3) return ShapeClass::other;

  std::sort(tails.begin(), tails.end(),
            [](const Tail& a, const Tail& b) { return a.depth < b.depth; });
  const int d0 = tails[0].depth, d1 = tails[1].depth, d2 = tails[2].depth;

  if (d0 == 1 && d1 == 2 && d2 == 3) return ShapeClass::six_cycle_chain3;

  if (d0 == 1 && d1 == 1 && d2 == 2) {
    // tails[2] -> tails[?] -> cycle is the 2-chain; the other depth-1
    // vertex is the lone tail.
    const int chain_foot = b.next[tails[2].vertex];
    const Tail& lone = (tails[0].vertex == chain_foot) ? tails[1] : tails[0];
    const int chain_at = tails[2].attach_pos;
    const int offset = (lone.attach_pos - chain_at + 6) % 6;
    if (offset == 1) return ShapeClass::six_cycle_chain2_near;
    if (offset == 4) return ShapeClass::six_cycle_chain2_far;
    return ShapeClass::other;
  }

  if (d0 == 1 && d1 == 1 && d2 == 1) {
    std::array<int, 3> p{tails[0].attach_pos, tails[1].attach_pos,
                         tails[2].attach_pos};
    std::sort(p.begin(), p.end());
    std::array<int, 3> gaps{p[1] - p[0], p[2] - p[1], p[0] + 6 - p[2]};
    std::sort(gaps.begin(), gaps.end());
    if (gaps == std::array<int, 3>{2, 2, 2})
      return ShapeClass::six_cycle_singles_alternating;
    if (gaps == std::array<int, 3>{1, 1, 4})
      return ShapeClass::six_cycle_singles_consecutive;
    return ShapeClass::other;
  }

  return ShapeClass::other;
}

int shape_index(ShapeClass s) {
  switch (s) {
    case ShapeClass::nine_cycle: return 1;
    case ShapeClass::six_cycle_chain3: return 2;
    case ShapeClass::six_cycle_chain2_near: return 3;
    case ShapeClass::six_cycle_chain2_far: return 4;
    case ShapeClass::six_cycle_singles_alternating: return 5;
    case ShapeClass::six_cycle_singles_consecutive: return 6;
    default: return 0;
  }
}

ShapeClass shape_from_index(int index) {
  switch (index) {
    case 1: return ShapeClass::nine_cycle;
    case 2: return ShapeClass::six_cycle_chain3;
    case 3: return ShapeClass::six_cycle_chain2_near;
    case 4: return ShapeClass::six_cycle_chain2_far;
    case 5: return ShapeClass::six_cycle_singles_alternating;
    case 6: return ShapeClass::six_cycle_singles_consecutive;
    default:
      throw std::invalid_argument("shape index must be in 1..6");
  }
}

std::string_view shape_name(ShapeClass s) {
  switch (s) {
    case ShapeClass::contains_3_cycle: return "contains a rank-1 3-cycle";
    case ShapeClass::nine_cycle: return "nine-cycle";
    case ShapeClass::six_cycle_chain3: return "six-cycle + 3-chain";
    case ShapeClass::six_cycle_chain2_near:
      return "six-cycle + 2-chain + tail at offset 1";
    case ShapeClass::six_cycle_chain2_far:
      return "six-cycle + 2-chain + tail at offset 4";
    case ShapeClass::six_cycle_singles_alternating:
      return "six-cycle + alternating tails";
    case ShapeClass::six_cycle_singles_consecutive:
      return "six-cycle + consecutive tails";
    case ShapeClass::other: return "unclassified";
  }
  return "unclassified";
}

}  // namespace tdsm
