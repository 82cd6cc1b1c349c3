#pragma once

#include <string_view>
#include <vector>

#include "tdsm/instance.hpp"

namespace tdsm {

// Rank-1 edges of an instance: a partial functional map. Every directed
// cycle in it has length divisible by 3.
struct BasicSubgraph {
  std::vector<int> next;  // next[v] = rank-1 target, or -1 for an empty list

  friend bool operator==(const BasicSubgraph&, const BasicSubgraph&) = default;
};

BasicSubgraph basic_subgraph(const Instance& inst);

// For n = 3 with all out-degrees >= 1 and no rank-1 3-cycle, the basic
// subgraph is (up to the cyclic symmetry of the problem) one of six
// shapes: a 9-cycle, or a 6-cycle fed by three tail vertices in one of
// five configurations. Tail attachment offsets are measured along the
// cycle direction.
enum class ShapeClass {
  contains_3_cycle,               // some rank-1 3-cycle exists
  nine_cycle,                     // shape 1
  six_cycle_chain3,               // shape 2: one chain of three tails
  six_cycle_chain2_near,          // shape 3: 2-chain + tail at offset 1
  six_cycle_chain2_far,           // shape 4: 2-chain + tail at offset 4
  six_cycle_singles_alternating,  // shape 5: three tails, every other vertex
  six_cycle_singles_consecutive,  // shape 6: three tails, consecutive vertices
  other,                          // anything else (wrong n, missing edges)
};

ShapeClass classify_basic_shape(const BasicSubgraph& b, int n);

// Shape numbering used by the search and the CLI: 1 = nine_cycle,
// 2..6 = the five tailed shapes above; 0 for the two catch-all classes.
int shape_index(ShapeClass s);
ShapeClass shape_from_index(int index);  // throws std::invalid_argument
std::string_view shape_name(ShapeClass s);

}  // namespace tdsm
