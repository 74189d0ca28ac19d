#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "depthlab/cache.hpp"
#include "depthlab/chains.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/group.hpp"
#include "depthlab/groupspec.hpp"
#include "depthlab/inclusion.hpp"
#include "depthlab/io.hpp"
#include "depthlab/matdepth.hpp"

namespace {

using depthlab::Error;
using depthlab::ErrorKind;
using nlohmann::json;

struct Options {
  std::string output = "json";
  std::string cache_dir;
  std::size_t cap = depthlab::kDefaultEnumerationCap;

  std::string matrix_path;
  std::string matrix_format = "auto";
  std::string group_spec;
  std::string subgroup_spec;
  std::string family;
  int n = 0;
  bool verify_matrix = false;
  std::string cache_action;
};

void emit(const json& j, const Options& opt) {
  if (opt.output == "table") {
    std::cout << depthlab::render_table(j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

depthlab::NonnegMatrix load_matrix(const Options& opt) {
  std::ifstream in(opt.matrix_path);
  if (!in) depthlab::fail(ErrorKind::IoError, "cannot open " + opt.matrix_path);
  std::string format = opt.matrix_format;
  if (format == "auto") {
    format = opt.matrix_path.size() >= 5 &&
                     opt.matrix_path.substr(opt.matrix_path.size() - 5) == ".json"
                 ? "json"
                 : "csv";
  }
  if (format == "json") {
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      depthlab::fail(ErrorKind::ParseError, std::string("bad matrix JSON: ") + e.what());
    }
    return depthlab::matrix_from_json(j);
  }
  return depthlab::matrix_from_csv(in);
}

// Enumerates a pair, verifying subgroup generators against the ambient group
// before any subgroup enumeration starts.
std::pair<depthlab::FiniteGroup, depthlab::FiniteGroup> load_pair(const Options& opt) {
  const auto g_spec = depthlab::parse_group_spec(opt.group_spec);
  const auto g = depthlab::FiniteGroup::enumerate(g_spec.degree, g_spec.generators, opt.cap);
  const auto h_spec = depthlab::parse_group_spec(opt.subgroup_spec, g.degree());
  for (const auto& gen : h_spec.generators) {
    if (!g.contains(gen)) {
      depthlab::fail(ErrorKind::NotASubgroup,
                     "subgroup generator " + gen.to_cycle_string() + " is not in the group");
    }
  }
  const auto h = depthlab::FiniteGroup::enumerate(h_spec.degree, h_spec.generators, opt.cap);
  return {g, h};
}

int run_matrix(const Options& opt) {
  const auto m = load_matrix(opt);
  emit(depthlab::depth_report_to_json(depthlab::depth_report(m)), opt);
  return 0;
}

int run_pair(const Options& opt) {
  const auto [g, h] = load_pair(opt);
  depthlab::PipelineConfig config{.cache_dir = opt.cache_dir};
  const auto report = depthlab::pair_depth_report(g, h, config);
  emit(depthlab::pair_report_to_json(report, opt.group_spec, opt.subgroup_spec), opt);
  return 0;
}

int run_core_reduce(const Options& opt) {
  const auto [g, h] = load_pair(opt);
  depthlab::PipelineConfig config{.cache_dir = opt.cache_dir};
  const auto report = depthlab::core_reduction_report(g, h, config);
  emit(depthlab::core_reduction_to_json(report, opt.group_spec, opt.subgroup_spec), opt);
  return 0;
}

int run_chain(const Options& opt) {
  int closed_form = 0;
  std::optional<int> matrix_depth;
  if (opt.family == "sym") {
    closed_form = depthlab::sym_chain_depth(opt.n);
    if (opt.verify_matrix) {
      matrix_depth = depthlab::min_depth(depthlab::young_branching_matrix(opt.n).matrix);
    }
  } else if (opt.family == "alt") {
    closed_form = depthlab::alt_chain_depth(opt.n);
    if (opt.verify_matrix) {
      // Inclusion matrix of A_n < A_{n+1} through the full character-table
      // pipeline; feasible at desk scale only.
      const auto g_spec = depthlab::parse_group_spec("alt:" + std::to_string(opt.n + 1));
      const auto h_spec = depthlab::parse_group_spec("alt:" + std::to_string(opt.n));
      const auto g = depthlab::FiniteGroup::enumerate(g_spec.degree, g_spec.generators, opt.cap);
      const auto h = depthlab::FiniteGroup::enumerate(g.degree(), h_spec.generators, opt.cap);
      depthlab::PipelineConfig config{.cache_dir = opt.cache_dir};
      matrix_depth = depthlab::pair_depth_report(g, h, config).depths.min_depth;
    }
  } else {  // twisted-sym
    closed_form = depthlab::danz_twisted_depth(opt.n);
    if (opt.verify_matrix) {
      depthlab::fail(ErrorKind::ParseError,
                     "twisted inclusion matrices are not constructible; only the closed form "
                     "is available for family twisted-sym");
    }
  }
  emit(depthlab::chain_to_json(opt.family, opt.n, closed_form, matrix_depth), opt);
  return 0;
}

int run_cache(const Options& opt) {
  if (opt.cache_action == "clear") {
    const auto removed = depthlab::cache_clear(opt.cache_dir);
    emit(json{{"cache_dir", opt.cache_dir}, {"removed", removed}}, opt);
  } else {
    const auto stats = depthlab::cache_stats(opt.cache_dir);
    emit(json{{"cache_dir", opt.cache_dir}, {"files", stats.files}, {"bytes", stats.bytes}}, opt);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  opt.cache_dir = depthlab::default_cache_dir();

  CLI::App app{"depth, odd depth and h-depth of finite group inclusions over C"};
  app.require_subcommand(1);
  app.add_option("--output", opt.output, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--cache-dir", opt.cache_dir, "character table cache directory")
      ->capture_default_str();
  app.add_option("--cap", opt.cap, "group enumeration cap")->capture_default_str();

  auto* matrix_cmd = app.add_subcommand("matrix", "depth report for a matrix file");
  matrix_cmd->add_option("--matrix", opt.matrix_path, "path to the matrix")->required();
  matrix_cmd->add_option("--format", opt.matrix_format, "csv|json (default: by extension)")
      ->check(CLI::IsMember({"csv", "json", "auto"}));

  auto* pair_cmd = app.add_subcommand("pair", "depth report for a subgroup pair");
  pair_cmd->add_option("--group", opt.group_spec, "ambient group spec")->required();
  pair_cmd->add_option("--subgroup", opt.subgroup_spec, "subgroup spec")->required();

  auto* core_cmd = app.add_subcommand("core_reduce", "core-quotient reduction report");
  core_cmd->add_option("--group", opt.group_spec, "ambient group spec")->required();
  core_cmd->add_option("--subgroup", opt.subgroup_spec, "subgroup spec")->required();

  auto* chain_cmd = app.add_subcommand("chain", "closed-form chain depths");
  chain_cmd->add_option("--family", opt.family, "sym|alt|twisted-sym")
      ->required()
      ->check(CLI::IsMember({"sym", "alt", "twisted-sym"}));
  chain_cmd->add_option("--n", opt.n, "chain index")->required();
  chain_cmd->add_flag("--verify-matrix", opt.verify_matrix,
                      "also compute the matrix depth and report it");

  auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the table cache");
  cache_cmd->add_option("action", opt.cache_action, "stats|clear")
      ->required()
      ->check(CLI::IsMember({"stats", "clear"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (matrix_cmd->parsed()) return run_matrix(opt);
    if (pair_cmd->parsed()) return run_pair(opt);
    if (core_cmd->parsed()) return run_core_reduce(opt);
    if (chain_cmd->parsed()) return run_chain(opt);
    if (cache_cmd->parsed()) return run_cache(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::TheoremViolation ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
