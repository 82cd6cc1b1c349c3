#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tdsm/instance.hpp"
#include "tdsm/shape.hpp"

namespace tdsm {

// Per-vertex extension of a basic subgraph: beyond its rank-1 edge, a
// vertex may point at one or both of the two remaining next-gender
// vertices ("alternatives", in ascending id order). Two extra edges can
// carry ranks 2 and 3 in either order, giving five cases per vertex.
enum class ExtensionChoice : std::uint8_t {
  none = 0,
  first_alt = 1,        // rank 2 = lower-id alternative
  second_alt = 2,       // rank 2 = higher-id alternative
  both_alts = 3,        // rank 2 = lower, rank 3 = higher
  both_alts_swapped = 4 // rank 2 = higher, rank 3 = lower
};

using ChoiceVector = std::array<ExtensionChoice, 9>;

inline constexpr std::uint64_t kChoicesPerShape = 1953125;  // 5^9

// The six searchable basic subgraphs, indexed 1..6.
const std::array<ShapeClass, 6>& searchable_shapes();
BasicSubgraph shape_template(ShapeClass s);  // throws for non-searchable s

// Mixed-radix encoding: digit of vertex v occupies the 5^v place.
ChoiceVector choices_from_index(std::uint64_t index);
std::uint64_t index_from_choices(const ChoiceVector& choices);

// The n=3 instance whose basic subgraph is the shape's template and
// whose extra edges realize the choices. Total by construction: all 5^9
// choice vectors yield distinct valid instances.
Instance build_instance(ShapeClass s, const ChoiceVector& choices);
// Inverse of build_instance over its image; throws if inst was not
// built from this shape.
ChoiceVector decode_choices(ShapeClass s, const Instance& inst);

// Single-instance check on the scan kernel (true = a stable matching
// exists). Exposed so spot indices can be cross-examined in tests.
bool scan_instance_has_stable(ShapeClass s, std::uint64_t index);

struct CounterexampleSample {
  std::uint64_t index = 0;
  std::string text;  // instance file format
};

struct CounterexampleReport {
  ShapeClass shape = ShapeClass::other;
  std::uint64_t scanned = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t cross_checked = 0;  // kernel results re-derived both ways
  std::vector<CounterexampleSample> samples;
};

struct SearchOptions {
  int workers = 0;  // 0 = hardware concurrency
  std::size_t sample_limit = 10;
};

// Scans all 5^9 instances of the shape and counts those with no stable
// matching, keeping the first sample_limit of them in index order.
// Counts and samples do not depend on the worker count. A deterministic
// ~1-in-10^4 subsample of kernel verdicts is re-derived through both the
// maximal-matching search and the brute-force oracle; a disagreement
// throws std::logic_error.
CounterexampleReport search_counterexamples(ShapeClass s,
                                            const SearchOptions& options = {});

struct SmallVerificationReport {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t counterexamples = 0;
  bool unstable_free() const { return counterexamples == 0; }
};

// Enumerates every valid instance of dimension n (1 or 2) — each
// preference list ranges over all ordered subsets of the next gender —
// and counts those without a stable matching.
SmallVerificationReport verify_small_dimensions(int n);

}  // namespace tdsm
