#include "tdsm/search.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <exception>
#include <stdexcept>
#include <thread>

#include "tdsm/stability.hpp"

namespace tdsm {

namespace {

struct ShapeTemplate {
  std::array<std::uint8_t, 9> next;             // rank-1 targets
  std::array<std::array<std::uint8_t, 2>, 9> alts;  // remaining targets, ascending
};

std::array<std::uint8_t, 9> template_next(ShapeClass s) {
  switch (s) {
    case ShapeClass::nine_cycle:
      return {1, 2, 3, 4, 5, 6, 7, 8, 0};
    case ShapeClass::six_cycle_chain3:
      return {1, 2, 3, 4, 5, 0, 1, 8, 6};
    case ShapeClass::six_cycle_chain2_near:
      return {1, 2, 3, 4, 5, 0, 1, 8, 0};
    case ShapeClass::six_cycle_chain2_far:
      return {1, 2, 3, 4, 5, 0, 4, 8, 0};
    case ShapeClass::six_cycle_singles_alternating:
      return {1, 2, 3, 4, 5, 0, 1, 5, 3};
    case ShapeClass::six_cycle_singles_consecutive:
      return {1, 2, 3, 4, 5, 0, 1, 2, 0};
    default:
      throw std::invalid_argument("not a searchable shape");
  }
}

ShapeTemplate make_template(ShapeClass s) {
  ShapeTemplate t;
  t.next = template_next(s);
  for (int v = 0; v < 9; ++v) {
    const int g = next_gender(gender_of(v));
    int k = 0;
    for (int cand = g; cand < 9; cand += 3)
      if (cand != t.next[v]) t.alts[v][k++] = static_cast<std::uint8_t>(cand);
  }
  return t;
}

// Shared digit -> preference-list expansion: build_instance and the
// scan kernel must agree on it exactly.
struct Lists {
  std::uint8_t deg[9];
  std::uint8_t tgt[9][3];
};

void fill_lists(const ShapeTemplate& t, const ChoiceVector& choices,
                Lists& out) {
  for (int v = 0; v < 9; ++v) {
    out.tgt[v][0] = t.next[v];
    const std::uint8_t a = t.alts[v][0], b = t.alts[v][1];
    switch (choices[v]) {
      case ExtensionChoice::none:
        out.deg[v] = 1;
        break;
      case ExtensionChoice::first_alt:
        out.deg[v] = 2;
        out.tgt[v][1] = a;
        break;
      case ExtensionChoice::second_alt:
        out.deg[v] = 2;
        out.tgt[v][1] = b;
        break;
      case ExtensionChoice::both_alts:
        out.deg[v] = 3;
        out.tgt[v][1] = a;
        out.tgt[v][2] = b;
        break;
      case ExtensionChoice::both_alts_swapped:
        out.deg[v] = 3;
        out.tgt[v][1] = b;
        out.tgt[v][2] = a;
        break;
    }
  }
}

// Scan kernel: rebuilds the current instance's family list and decides
// whether any uncompletable matching is stable, allocation-free.
struct Kernel {
  ShapeTemplate tmpl;
  Lists lists;
  std::uint8_t rank[9][9];  // 0 = no edge

  struct Fam {
    std::uint8_t v[3];
    std::uint8_t r[3];
  };
  Fam fams[27];
  int nfams = 0;
  std::uint32_t conflicts[27];
  std::uint8_t matched_rank[9];

  explicit Kernel(ShapeClass s) : tmpl(make_template(s)) {}

  void load(const ChoiceVector& choices) {
    fill_lists(tmpl, choices, lists);
    std::memset(rank, 0, sizeof(rank));
    for (int v = 0; v < 9; ++v)
      for (int i = 0; i < lists.deg[v]; ++i)
        rank[v][lists.tgt[v][i]] = static_cast<std::uint8_t>(i + 1);

    nfams = 0;
    std::uint16_t vmask[27];
    for (int m = 0; m < 9; m += 3)
      for (int i = 0; i < lists.deg[m]; ++i) {
        const int f = lists.tgt[m][i];
        for (int j = 0; j < lists.deg[f]; ++j) {
          const int d = lists.tgt[f][j];
          const std::uint8_t back = rank[d][m];
          if (!back) continue;
          Fam& fam = fams[nfams];
          fam.v[0] = static_cast<std::uint8_t>(m);
          fam.v[1] = static_cast<std::uint8_t>(f);
          fam.v[2] = static_cast<std::uint8_t>(d);
          fam.r[0] = static_cast<std::uint8_t>(i + 1);
          fam.r[1] = static_cast<std::uint8_t>(j + 1);
          fam.r[2] = back;
          vmask[nfams] = static_cast<std::uint16_t>((1u << m) | (1u << f) |
                                                    (1u << d));
          ++nfams;
        }
      }
    for (int a = 0; a < nfams; ++a) {
      std::uint32_t c = 1u << a;
      for (int b = 0; b < nfams; ++b)
        if (b != a && (vmask[a] & vmask[b])) c |= 1u << b;
      conflicts[a] = c;
    }
  }

  bool leaf_stable() const {
    for (int i = 0; i < nfams; ++i) {
      const Fam& f = fams[i];
      if (f.r[0] < matched_rank[f.v[0]] && f.r[1] < matched_rank[f.v[1]] &&
          f.r[2] < matched_rank[f.v[2]])
        return false;
    }
    return true;
  }

  // avail: families disjoint from the current matching; rest: the
  // still-undecided suffix of avail. avail == 0 marks an uncompletable
  // matching.
  bool dfs(std::uint32_t avail, std::uint32_t rest) {
    if (avail == 0) return leaf_stable();
    while (rest) {
      const int j = std::countr_zero(rest);
      rest &= rest - 1;
      const Fam& f = fams[j];
      const std::uint8_t s0 = matched_rank[f.v[0]];
      const std::uint8_t s1 = matched_rank[f.v[1]];
      const std::uint8_t s2 = matched_rank[f.v[2]];
      matched_rank[f.v[0]] = f.r[0];
      matched_rank[f.v[1]] = f.r[1];
      matched_rank[f.v[2]] = f.r[2];
      const std::uint32_t navail = avail & ~conflicts[j];
      const bool stable_found = dfs(navail, rest & navail);
      matched_rank[f.v[0]] = s0;
      matched_rank[f.v[1]] = s1;
      matched_rank[f.v[2]] = s2;
      if (stable_found) return true;
    }
    return false;
  }

  bool has_stable() {
    std::memset(matched_rank, 0xff, sizeof(matched_rank));
    const std::uint32_t all =
        nfams ? (nfams == 32 ? ~0u : ((1u << nfams) - 1)) : 0;
    return dfs(all, all);
  }
};

void increment(ChoiceVector& digits) {
  for (auto& d : digits) {
    if (d != ExtensionChoice::both_alts_swapped) {
      d = static_cast<ExtensionChoice>(static_cast<std::uint8_t>(d) + 1);
      return;
    }
    d = ExtensionChoice::none;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool cross_check_due(std::uint64_t index) {
  return splitmix64(index) % 10000 == 0;
}

struct BlockResult {
  std::uint64_t counterexamples = 0;
  std::uint64_t cross_checked = 0;
  std::vector<CounterexampleSample> samples;
};

BlockResult scan_block(ShapeClass s, std::uint64_t lo, std::uint64_t hi,
                       std::size_t sample_limit) {
  BlockResult result;
  Kernel kernel(s);
  ChoiceVector digits = choices_from_index(lo);
  for (std::uint64_t index = lo; index < hi; ++index) {
    kernel.load(digits);
    const bool stable = kernel.has_stable();
    if (!stable) {
      ++result.counterexamples;
      if (result.samples.size() < sample_limit)
        result.samples.push_back(
            {index, to_text(build_instance(s, digits))});
    }
    if (cross_check_due(index)) {
      ++result.cross_checked;
      const Instance inst = build_instance(s, digits);
      if (find_stable_matching(inst).has_value() != stable ||
          brute_force_stable_exists(inst) != stable)
        throw std::logic_error(
            "scan kernel disagrees with the reference search at shape " +
            std::to_string(shape_index(s)) + ", index " +
            std::to_string(index));
    }
    increment(digits);
  }
  return result;
}

}  // namespace

const std::array<ShapeClass, 6>& searchable_shapes() {
  static const std::array<ShapeClass, 6> shapes = {
      ShapeClass::nine_cycle,
      ShapeClass::six_cycle_chain3,
      ShapeClass::six_cycle_chain2_near,
      ShapeClass::six_cycle_chain2_far,
      ShapeClass::six_cycle_singles_alternating,
      ShapeClass::six_cycle_singles_consecutive,
  };
  return shapes;
}

BasicSubgraph shape_template(ShapeClass s) {
  const auto next = template_next(s);
  BasicSubgraph b;
  b.next.assign(next.begin(), next.end());
  return b;
}

ChoiceVector choices_from_index(std::uint64_t index) {
  if (index >= kChoicesPerShape)
    throw std::out_of_range("choice index out of range");
  ChoiceVector digits;
  for (int v = 0; v < 9; ++v) {
    digits[v] = static_cast<ExtensionChoice>(index % 5);
    index /= 5;
  }
  return digits;
}

std::uint64_t index_from_choices(const ChoiceVector& choices) {
  std::uint64_t index = 0;
  for (int v = 8; v >= 0; --v)
    index = index * 5 + static_cast<std::uint64_t>(choices[v]);
  return index;
}

Instance build_instance(ShapeClass s, const ChoiceVector& choices) {
  const ShapeTemplate t = make_template(s);
  Lists lists;
  fill_lists(t, choices, lists);
  Instance inst(3);
  for (int v = 0; v < 9; ++v)
    inst.prefs[v].assign(lists.tgt[v], lists.tgt[v] + lists.deg[v]);
  return inst;
}

ChoiceVector decode_choices(ShapeClass s, const Instance& inst) {
  const ShapeTemplate t = make_template(s);
  if (inst.n != 3) throw std::invalid_argument("decode_choices: n must be 3");
  ChoiceVector choices;
  for (int v = 0; v < 9; ++v) {
    const auto& list = inst.prefs[v];
    if (list.empty() || list[0] != t.next[v])
      throw std::invalid_argument(
          "decode_choices: rank-1 edges do not match the shape template");
    const std::uint8_t a = t.alts[v][0], b = t.alts[v][1];
    if (list.size() == 1) {
      choices[v] = ExtensionChoice::none;
    } else if (list.size() == 2) {
      if (list[1] == a) choices[v] = ExtensionChoice::first_alt;
      else if (list[1] == b) choices[v] = ExtensionChoice::second_alt;
      else throw std::invalid_argument("decode_choices: unexpected target");
    } else if (list.size() == 3 && list[1] == a && list[2] == b) {
      choices[v] = ExtensionChoice::both_alts;
    } else if (list.size() == 3 && list[1] == b && list[2] == a) {
      choices[v] = ExtensionChoice::both_alts_swapped;
    } else {
      throw std::invalid_argument("decode_choices: unexpected target list");
    }
  }
  return choices;
}

bool scan_instance_has_stable(ShapeClass s, std::uint64_t index) {
  Kernel kernel(s);
  kernel.load(choices_from_index(index));
  return kernel.has_stable();
}

CounterexampleReport search_counterexamples(ShapeClass s,
                                            const SearchOptions& options) {
  int workers = options.workers;
  if (workers <= 0)
    workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > kChoicesPerShape)
    workers = static_cast<int>(kChoicesPerShape);

  std::vector<BlockResult> results(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = kChoicesPerShape * w / workers;
    const std::uint64_t hi = kChoicesPerShape * (w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] {
      try {
        results[w] = scan_block(s, lo, hi, options.sample_limit);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  CounterexampleReport report;
  report.shape = s;
  report.scanned = kChoicesPerShape;
  for (const BlockResult& r : results) {
    report.counterexamples += r.counterexamples;
    report.cross_checked += r.cross_checked;
    for (const CounterexampleSample& sample : r.samples)
      if (report.samples.size() < options.sample_limit)
        report.samples.push_back(sample);
  }
  return report;
}

SmallVerificationReport verify_small_dimensions(int n) {
  if (n != 1 && n != 2)
    throw std::invalid_argument("verify_small_dimensions: n must be 1 or 2");

  SmallVerificationReport report;
  report.n = n;
  const int vc = 3 * n;

  // Ordered subsets of the next-gender class: 2 options per vertex at
  // n = 1 and 5 at n = 2.
  std::vector<std::vector<std::vector<int>>> options(vc);
  for (int v = 0; v < vc; ++v) {
    const int a = next_gender(gender_of(v));
    if (n == 1) {
      options[v] = {{}, {a}};
    } else {
      const int b = a + 3;
      options[v] = {{}, {a}, {b}, {a, b}, {b, a}};
    }
  }

  std::vector<std::size_t> digit(vc, 0);
  const std::size_t radix = options[0].size();
  Instance inst(n);
  while (true) {
    for (int v = 0; v < vc; ++v) inst.prefs[v] = options[v][digit[v]];
    ++report.total;
    if (!find_stable_matching(inst).has_value()) ++report.counterexamples;

    int v = 0;
    while (v < vc && digit[v] + 1 == radix) digit[v++] = 0;
    if (v == vc) break;
    ++digit[v];
  }
  return report;
}

}  // namespace tdsm
