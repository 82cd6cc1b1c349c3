// Command-line frontend: validation, solving, certificate reports,
// exhaustive shape search, small-dimension verification, and k-gender
// subdivision.
//
// Exit codes: 0 = success, 1 = no stable matching (solve, verify-small),
// 2 = usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tdsm/builtins.hpp"
#include "tdsm/instance.hpp"
#include "tdsm/kgen.hpp"
#include "tdsm/search.hpp"
#include "tdsm/shape.hpp"
#include "tdsm/stability.hpp"

namespace {

constexpr int kExitStable = 0;
constexpr int kExitNoStable = 1;
constexpr int kExitError = 2;

tdsm::Instance load_input(const std::string& file, const std::string& builtin) {
  if (!builtin.empty()) return tdsm::builtin_instance(builtin);
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file);
  return tdsm::parse_instance(in);
}

void add_input_options(CLI::App* cmd, std::string& file, std::string& builtin) {
  auto* pos = cmd->add_option("file", file, "instance file (3dsmi format)");
  auto* opt = cmd->add_option("--builtin", builtin, "builtin instance name");
  pos->excludes(opt);
  opt->excludes(pos);
}

int run_check(const std::string& file) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot open " << file << '\n';
    return kExitError;
  }
  tdsm::Instance inst;
  try {
    inst = tdsm::parse_instance(in);
  } catch (const tdsm::ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << '\n';
    return kExitError;
  }
  const tdsm::ValidationReport report = tdsm::validate(inst);
  for (const std::string& v : report.violations)
    std::cerr << "violation: " << v << '\n';
  if (!report.ok()) return kExitError;
  std::cout << "OK n=" << inst.n << " edges=" << inst.edge_count()
            << " families=" << tdsm::enumerate_families(inst).size() << '\n';
  return 0;
}

int run_solve(const tdsm::Instance& inst) {
  if (auto m = tdsm::find_stable_matching(inst)) {
    std::cout << "STABLE MATCHING: " << tdsm::to_string(*m) << '\n';
    return kExitStable;
  }
  std::cout << "NO STABLE MATCHING\n";
  return kExitNoStable;
}

int run_search(const std::vector<int>& shape_indices, int workers,
               std::size_t sample_limit, const std::string& out_dir,
               bool machine) {
  std::vector<int> shapes = shape_indices;
  if (shapes.empty()) shapes = {1, 2, 3, 4, 5, 6};
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);

  for (int index : shapes) {
    const tdsm::ShapeClass shape = tdsm::shape_from_index(index);
    const tdsm::CounterexampleReport report = tdsm::search_counterexamples(
        shape, {workers, sample_limit});
    if (machine) {
      std::cout << "shape=" << index << " scanned=" << report.scanned
                << " counterexamples=" << report.counterexamples << '\n';
    } else {
      std::cout << "shape " << index << " (" << tdsm::shape_name(shape)
                << "): scanned " << report.scanned << ", counterexamples "
                << report.counterexamples << ", cross-checked "
                << report.cross_checked << '\n';
      for (const auto& sample : report.samples)
        std::cout << "  sample index " << sample.index << '\n';
    }
    if (!out_dir.empty()) {
      for (const auto& sample : report.samples) {
        const std::string path = out_dir + "/shape" + std::to_string(index) +
                                 "_" + std::to_string(sample.index) + ".3dsmi";
        std::ofstream out(path);
        out << sample.text;
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-dimensional stable matching with cyclic incomplete "
               "preferences: solver, verifier, and exhaustive search"};
  app.require_subcommand(1);

  std::string file;
  std::string builtin;

  auto* check = app.add_subcommand("check", "parse and validate an instance");
  std::string check_file;
  check->add_option("file", check_file, "instance file")->required();

  auto* solve = app.add_subcommand("solve", "find a stable matching");
  add_input_options(solve, file, builtin);

  auto* certify = app.add_subcommand(
      "certify", "list every uncompletable matching with its blocking triples");
  add_input_options(certify, file, builtin);

  auto* search = app.add_subcommand(
      "search", "scan all extensions of the basic subgraph shapes");
  std::vector<int> shape_indices;
  int workers = 0;
  std::size_t sample_limit = 10;
  std::string out_dir;
  bool machine = false;
  search->add_option("--shape", shape_indices, "shape index (1..6), repeatable")
      ->check(CLI::Range(1, 6));
  search->add_option("--workers", workers, "worker threads (default: all cores)");
  search->add_option("--sample-limit", sample_limit,
                     "counterexample samples to keep per shape");
  search->add_option("--out", out_dir, "directory for sampled counterexamples");
  search->add_flag("--machine", machine, "machine-readable one-line reports");

  auto* verify = app.add_subcommand(
      "verify-small", "enumerate every instance of dimension 1 or 2");
  int small_n = 0;
  verify->add_option("--n", small_n, "dimension to verify")
      ->required()
      ->check(CLI::Range(1, 2));

  auto* subdivide = app.add_subcommand(
      "subdivide", "turn a 3-gender instance into a k-gender one");
  int sub_k = 0;
  int sub_gender = -1;
  subdivide->add_option("--k", sub_k, "number of genders (>= 3)")
      ->required()
      ->check(CLI::Range(3, 1000));
  subdivide->add_option("--gender", sub_gender,
                        "gender class to subdivide (default: fewest edges)")
      ->check(CLI::Range(0, 2));
  add_input_options(subdivide, file, builtin);

  auto* builtins = app.add_subcommand("builtin", "bundled instances");
  bool list_builtins = false;
  std::string builtin_name;
  builtins->add_flag("--list", list_builtins, "list builtin names");
  builtins->add_option("name", builtin_name, "print a builtin instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (check->parsed()) return run_check(check_file);

    if (solve->parsed() || certify->parsed() || subdivide->parsed()) {
      if (file.empty() && builtin.empty()) {
        std::cerr << "error: give an instance file or --builtin NAME\n";
        return kExitError;
      }
      const tdsm::Instance inst = load_input(file, builtin);
      if (solve->parsed()) return run_solve(inst);
      if (certify->parsed()) {
        std::cout << tdsm::certificate(inst);
        return 0;
      }
      const int gender = sub_gender >= 0 ? sub_gender
                                         : tdsm::default_subdivided_gender(inst);
      std::cout << tdsm::to_text(tdsm::subdivide(inst, sub_k, gender));
      return 0;
    }

    if (search->parsed())
      return run_search(shape_indices, workers, sample_limit, out_dir, machine);

    if (verify->parsed()) {
      const tdsm::SmallVerificationReport report =
          tdsm::verify_small_dimensions(small_n);
      std::cout << report.total << " instances, " << report.counterexamples
                << " counterexamples\n";
      return report.unstable_free() ? 0 : kExitNoStable;
    }

    if (builtins->parsed()) {
      if (list_builtins) {
        for (const std::string& name : tdsm::builtin_names())
          std::cout << name << '\n';
        return 0;
      }
      if (builtin_name.empty()) {
        std::cerr << "error: give --list or a builtin name\n";
        return kExitError;
      }
      std::cout << tdsm::to_text(tdsm::builtin_instance(builtin_name));
      return 0;
    }
  } catch (const tdsm::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
