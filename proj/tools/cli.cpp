#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "matchbound/matchbound.hpp"
#include "run_report.hpp"

namespace matchbound::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  Graph graph;
  std::string source;
};

GraphInput read_graph(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return {parse_edgelist(in), "stdin"};
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return {parse_edgelist(file), path};
}

OracleLimits parse_limits(const std::string& text) {
  OracleLimits limits;
  if (text.empty()) return limits;
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--limits expects E,V");
  try {
    std::size_t used = 0;
    const auto edges_text = text.substr(0, comma);
    const auto vertices_text = text.substr(comma + 1);
    limits.max_edges = std::stoul(edges_text, &used);
    if (used != edges_text.size()) throw UsageError("--limits expects E,V");
    limits.max_vertices = std::stoul(vertices_text, &used);
    if (used != vertices_text.size()) throw UsageError("--limits expects E,V");
  } catch (const std::logic_error&) {
    throw UsageError("--limits expects E,V");
  }
  if (limits.max_edges == 0 || limits.max_vertices == 0) {
    throw UsageError("--limits values must be positive");
  }
  return limits;
}

Matching run_algorithm(const std::string& algo, const Graph& g, const OracleLimits& limits) {
  if (algo == "greedy") return greedy_maximalize(Matching(g));
  if (algo == "stabilize") return stabilize(g);
  return exact_max_matching(g, limits);
}

template <typename F>
std::int64_t time_us(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
}

std::vector<std::uint32_t> parse_sizes(const std::string& text) {
  std::vector<std::uint32_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(item, &used);
      if (used != item.size() || value == 0) throw std::invalid_argument(item);
      sizes.push_back(static_cast<std::uint32_t>(value));
    } catch (const std::logic_error&) {
      throw UsageError("--sizes expects a comma-separated list of positive integers");
    }
  }
  if (sizes.empty()) throw UsageError("--sizes must not be empty");
  return sizes;
}

GraphFamilySpec bench_spec(const std::string& family, std::uint32_t size, const std::string& p,
                           std::uint64_t seed) {
  std::vector<std::string> params{std::to_string(size)};
  if (family == "random") {
    params.push_back(p);
    params.push_back(std::to_string(seed));
  }
  return parse_family_spec(family, params);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Maximum matching lower bounds: local search, exact oracle, certificates",
               "matchbound"};
  app.require_subcommand(1);

  std::string algo = "stabilize";
  std::string input_path;
  std::string limits_text;
  const std::vector<std::string> algos{"greedy", "stabilize", "exact"};

  auto* gen = app.add_subcommand("gen", "Generate a graph family as an edge list");
  std::string family_name;
  std::vector<std::string> family_params;
  std::string output_path;
  gen->add_option("family", family_name, "triangles|path|cycle|complete|star|random")
      ->required();
  gen->add_option("params", family_params, "Family parameters (random: n p seed)");
  gen->add_option("-o,--output", output_path, "Write to FILE instead of stdout");

  auto* match = app.add_subcommand("match", "Compute a matching and print it");
  match->add_option("--algo", algo)->check(CLI::IsMember(algos));
  match->add_option("-i,--input", input_path, "Edge-list file (default stdin)");
  match->add_option("--limits", limits_text, "Exact oracle limits E,V");

  auto* verify = app.add_subcommand("verify", "Compute a matching and print its certificate");
  bool as_json = false;
  verify->add_option("--algo", algo)->check(CLI::IsMember(algos));
  verify->add_option("-i,--input", input_path, "Edge-list file (default stdin)");
  verify->add_option("--limits", limits_text, "Exact oracle limits E,V");
  verify->add_flag("--json", as_json, "Emit a JSON report");

  auto* bench = app.add_subcommand("bench", "Time stabilize against the exact oracle");
  std::string bench_family;
  std::string sizes_text;
  std::size_t repeats = 1;
  std::string bench_p = "1/3";
  std::uint64_t bench_seed = 1;
  bench->add_option("--family", bench_family)->required();
  bench->add_option("--sizes", sizes_text, "Comma-separated family sizes")->required();
  bench->add_option("--repeats", repeats)->check(CLI::PositiveNumber);
  bench->add_option("--p", bench_p, "Edge probability for the random family");
  bench->add_option("--seed", bench_seed, "Seed for the random family");
  bench->add_option("--limits", limits_text, "Exact oracle limits E,V");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "matchbound: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const Graph g = generate(parse_family_spec(family_name, family_params));
      if (output_path.empty()) {
        write_edgelist(out, g);
      } else {
        std::ofstream file(output_path);
        if (!file) throw UsageError("cannot write '" + output_path + "'");
        write_edgelist(file, g);
      }
      return kExitOk;
    }

    if (match->parsed()) {
      const auto limits = parse_limits(limits_text);
      const auto input = read_graph(input_path, in);
      write_matching(out, run_algorithm(algo, input.graph, limits));
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto limits = parse_limits(limits_text);
      const auto input = read_graph(input_path, in);
      std::optional<Matching> result;
      const auto elapsed =
          time_us([&] { result.emplace(run_algorithm(algo, input.graph, limits)); });
      const RunReport report = make_report(input.source, algo, *result, elapsed);
      if (as_json) {
        out << report_to_json(report) << '\n';
      } else {
        write_report_text(out, report);
      }
      return report.certificate.in_hypothesis_checks_pass() ? kExitOk : kExitCheckFailed;
    }

    if (bench->parsed()) {
      const auto limits = parse_limits(limits_text);
      const auto sizes = parse_sizes(sizes_text);
      out << "family size n m k_stabilize stabilize_us k_exact exact_us\n";
      for (const auto size : sizes) {
        const Graph g = generate(bench_spec(bench_family, size, bench_p, bench_seed));
        std::size_t k_stable = 0;
        std::int64_t stable_us = 0;
        for (std::size_t r = 0; r < repeats; ++r) {
          stable_us += time_us([&] { k_stable = stabilize(g).size(); });
        }
        out << bench_family << ' ' << size << ' ' << g.vertex_count() << ' ' << g.edge_count()
            << ' ' << k_stable << ' ' << stable_us / static_cast<std::int64_t>(repeats);
        const bool exact_fits =
            g.edge_count() <= limits.max_edges && g.vertex_count() <= limits.max_vertices;
        if (exact_fits) {
          std::size_t k_exact = 0;
          std::int64_t exact_us = 0;
          for (std::size_t r = 0; r < repeats; ++r) {
            exact_us += time_us([&] { k_exact = exact_max_matching(g, limits).size(); });
          }
          out << ' ' << k_exact << ' ' << exact_us / static_cast<std::int64_t>(repeats) << '\n';
        } else {
          out << " - skipped\n";
        }
      }
      return kExitOk;
    }
  } catch (const MatchboundError& e) {
    err << "matchbound: " << e.what() << '\n';
    return e.kind() == ErrorKind::InstanceTooLarge ? kExitTooLarge : kExitUsage;
  } catch (const UsageError& e) {
    err << "matchbound: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace matchbound::cli
