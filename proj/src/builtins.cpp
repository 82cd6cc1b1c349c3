#include "tdsm/builtins.hpp"

#include <stdexcept>

namespace tdsm {

namespace {

Instance fig2() {
  Instance g(3);
  g.prefs = {
      {1, 7},     // 0
      {2, 5},     // 1
      {3},        // 2
      {4, 1},     // 3
      {5, 8, 2},  // 4
      {0, 3},     // 5
      {4},        // 6
      {8},        // 7
      {0, 6},     // 8
  };
  return g;
}

Instance fig3() {
  Instance g(3);
  g.prefs = {
      {1, 4, 7},  // 0
      {2, 8},     // 1
      {3, 6},     // 2
      {4, 7},     // 3
      {5},        // 4
      {0, 3},     // 5
      {1},        // 6
      {2, 5},     // 7
      {0},        // 8
  };
  return g;
}

// Dimension-4 instance on v0..v8 (ids 0..8) plus w3 -> 9, w4 -> 10,
// w2 -> 11 (ids chosen so id mod 3 matches each w's gender).
Instance appendix4() {
  Instance g(4);
  g.prefs = {
      {1, 4},      // v0
      {2, 11, 5},  // v1
      {3, 9, 6},   // v2
      {4, 10, 7},  // v3
      {5, 8},      // v4
      {6, 0},      // v5
      {7, 1},      // v6
      {8, 2},      // v7
      {0, 3},      // v8
      {1},         // w3
      {2},         // w4
      {0},         // w2
  };
  return g;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"fig2",       "fig2+72", "fig2+61",   "fig2+72+61",
          "fig3",       "fig3-swap04", "appendix4"};
}

Instance builtin_instance(const std::string& name) {
  if (name == "fig2") return fig2();
  if (name == "fig2+72") {
    Instance g = fig2();
    g.prefs[7].push_back(2);  // extra edge (7,2) of rank 2
    return g;
  }
  if (name == "fig2+61") {
    Instance g = fig2();
    g.prefs[6].push_back(1);  // extra edge (6,1) of rank 2
    return g;
  }
  if (name == "fig2+72+61") {
    Instance g = fig2();
    g.prefs[7].push_back(2);
    g.prefs[6].push_back(1);
    return g;
  }
  if (name == "fig3") return fig3();
  if (name == "fig3-swap04") {
    Instance g = fig3();
    g.prefs[0] = {1, 7, 4};  // ranks of (0,4) and (0,7) interchanged
    return g;
  }
  if (name == "appendix4") return appendix4();
  throw std::invalid_argument("unknown builtin instance: " + name);
}

}  // namespace tdsm
