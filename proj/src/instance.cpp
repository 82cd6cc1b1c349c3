#include "tdsm/instance.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "pref_format.hpp"

namespace tdsm {

int Instance::edge_count() const {
  int total = 0;
  for (const auto& list : prefs) total += static_cast<int>(list.size());
  return total;
}

int Instance::rank(int v, int w) const {
  const auto& list = prefs[v];
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == w) return static_cast<int>(i) + 1;
  return 0;
}

ValidationReport validate(const Instance& inst) {
  ValidationReport report;
  auto flag = [&report](const std::string& msg) {
    report.violations.push_back(msg);
  };

  if (inst.n < 1) {
    flag("dimension must be a positive integer");
    return report;
  }
  const int vc = inst.vertex_count();
  if (static_cast<int>(inst.prefs.size()) != vc) {
    flag("preference table must have exactly 3n rows");
    return report;
  }
  for (int v = 0; v < vc; ++v) {
    const auto& list = inst.prefs[v];
    if (static_cast<int>(list.size()) > inst.n)
      flag("vertex " + std::to_string(v) + ": list longer than n");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const int t = list[i];
      if (t < 0 || t >= vc) {
        flag("vertex " + std::to_string(v) + ": target " + std::to_string(t) +
             " out of range");
        continue;
      }
      if (gender_of(t) != next_gender(gender_of(v)))
        flag("vertex " + std::to_string(v) + ": target " + std::to_string(t) +
             " violates the gender direction");
      for (std::size_t j = 0; j < i; ++j)
        if (list[j] == t)
          flag("vertex " + std::to_string(v) + ": duplicate target " +
               std::to_string(t));
    }
  }
  return report;
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace detail {
namespace {

// Tokenizes one line: integers and a bare `:` separator, with 1-based
// columns for diagnostics.
struct LineScanner {
  std::string_view text;
  int line_no;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_space();
    return pos >= text.size();
  }
  int column() const { return static_cast<int>(pos) + 1; }

  bool take_colon() {
    skip_space();
    if (pos < text.size() && text[pos] == ':') {
      ++pos;
      return true;
    }
    return false;
  }

  std::string_view take_word() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
           text[pos] != ':')
      ++pos;
    return text.substr(start, pos - start);
  }

  int take_int(const char* what) {
    skip_space();
    const int col = column();
    std::string_view word = take_word();
    int value = 0;
    auto [ptr, ec] = std::from_chars(word.begin(), word.end(), value);
    if (word.empty() || ec != std::errc{} || ptr != word.end())
      throw ParseError(line_no, col, std::string("expected ") + what);
    return value;
  }
};

}  // namespace

PrefGraph parse_pref_graph(std::istream& in, const std::string& magic) {
  PrefGraph g;
  bool have_header = false;
  std::vector<char> seen;
  std::string raw;
  int line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    LineScanner sc{raw, line_no};
    if (sc.at_end()) continue;

    if (!have_header) {
      const int col = sc.column();
      std::string_view word = sc.take_word();
      if (word != magic)
        throw ParseError(line_no, col, "expected `" + magic + "` header");
      if (magic == "kdsmi") {
        g.k = sc.take_int("gender count k");
        if (g.k < 3)
          throw ParseError(line_no, sc.column(), "k must be at least 3");
      }
      g.n = sc.take_int("dimension n");
      if (g.n < 1)
        throw ParseError(line_no, sc.column(), "n must be at least 1");
      if (!sc.at_end())
        throw ParseError(line_no, sc.column(), "trailing text after header");
      g.prefs.assign(static_cast<std::size_t>(g.k) * g.n, {});
      seen.assign(g.prefs.size(), 0);
      have_header = true;
      continue;
    }

    const int vcol = sc.column();
    const int v = sc.take_int("vertex id");
    const int vc = g.k * g.n;
    if (v < 0 || v >= vc)
      throw ParseError(line_no, vcol, "vertex id out of range [0, " +
                                          std::to_string(vc) + ")");
    if (seen[v])
      throw ParseError(line_no, vcol,
                       "duplicate list for vertex " + std::to_string(v));
    seen[v] = 1;
    if (!sc.take_colon())
      throw ParseError(line_no, sc.column(), "expected `:` after vertex id");

    auto& list = g.prefs[v];
    while (!sc.at_end()) {
      const int tcol = sc.column();
      const int t = sc.take_int("target vertex id");
      if (t < 0 || t >= vc)
        throw ParseError(line_no, tcol, "target out of range [0, " +
                                            std::to_string(vc) + ")");
      if (t % g.k != (v % g.k + 1) % g.k)
        throw ParseError(line_no, tcol,
                         "edge " + std::to_string(v) + " -> " +
                             std::to_string(t) +
                             " violates the gender direction");
      if (std::find(list.begin(), list.end(), t) != list.end())
        throw ParseError(line_no, tcol,
                         "duplicate target " + std::to_string(t));
      if (static_cast<int>(list.size()) == g.n)
        throw ParseError(line_no, tcol, "preference list longer than n");
      list.push_back(t);
    }
  }

  if (!have_header)
    throw ParseError(line_no ? line_no : 1, 1,
                     "missing `" + magic + "` header");
  return g;
}

void write_pref_graph(std::ostream& out, const std::string& magic,
                      const PrefGraph& g) {
  out << magic;
  if (magic == "kdsmi") out << ' ' << g.k;
  out << ' ' << g.n << '\n';
  for (std::size_t v = 0; v < g.prefs.size(); ++v) {
    if (g.prefs[v].empty()) continue;
    out << v << ':';
    for (int t : g.prefs[v]) out << ' ' << t;
    out << '\n';
  }
}

}  // namespace detail

Instance parse_instance(std::istream& in) {
  detail::PrefGraph g = detail::parse_pref_graph(in, "3dsmi");
  Instance inst(g.n);
  inst.prefs = std::move(g.prefs);
  return inst;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string to_text(const Instance& inst) {
  std::ostringstream out;
  detail::write_pref_graph(out, "3dsmi", {3, inst.n, inst.prefs});
  return out.str();
}

namespace {

// Any directed 3-cycle at all?
bool has_any_family(const Instance& inst) {
  for (int v = 0; v < inst.vertex_count(); ++v) {
    if (gender_of(v) != 0) continue;
    for (int w : inst.prefs[v])
      for (int x : inst.prefs[w])
        if (inst.has_edge(x, v)) return true;
  }
  return false;
}

}  // namespace

Instance normalize(const Instance& inst) {
  if (!has_any_family(inst))
    throw std::invalid_argument(
        "normalize: instance has no families; re-equipping is unconstrained");

  const int vc = inst.vertex_count();
  std::vector<char> dead(vc, 0);

  // Prune to the greatest subgraph where every vertex keeps an out-edge.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < vc; ++v) {
      if (dead[v]) continue;
      bool alive = false;
      for (int t : inst.prefs[v])
        if (!dead[t]) {
          alive = true;
          break;
        }
      if (!alive) {
        dead[v] = 1;
        changed = true;
      }
    }
  }

  Instance result(inst.n);
  for (int v = 0; v < vc; ++v) {
    if (!dead[v]) {
      for (int t : inst.prefs[v])
        if (!dead[t]) result.prefs[v].push_back(t);
    } else {
      const int g = next_gender(gender_of(v));
      for (int t = g; t < vc; t += 3)
        if (!dead[t]) {
          result.prefs[v].push_back(t);
          break;
        }
      assert(!result.prefs[v].empty());
    }
  }
  return result;
}

}  // namespace tdsm
