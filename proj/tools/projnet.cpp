// Copyright 2026 The projnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// projnet: generate, analyze, dimension and price network topologies.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "projnet/manifest.hpp"
#include "projnet/projnet.hpp"

namespace {

using namespace projnet;

constexpr int kExitPrecondition = 2;
constexpr int kExitInvariant = 3;

struct Common {
  std::string out;
  unsigned threads = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> config;
};

void add_graph_params(CLI::App* cmd, TopologyParams& p) {
  // "--h" is a parameter here, so help is "--help" only.
  cmd->set_help_flag("--help", "Print this help message and exit");
  cmd->add_option("--q", p.q, "Field order (prime power)");
  cmd->add_option("--n", p.n, "Size parameter (Hamming side, MLFM n, vertex count, ...)");
  cmd->add_option("--r", p.r, "Number of parts (Turan graphs)");
  cmd->add_option("--h", p.h, "Dragonfly global links per router");
  cmd->add_option("--dim", p.dim, "Hamming dimension");
  cmd->add_option("--degree", p.degree, "Degree (random regular graphs)");
}

Topology build_from(const std::string& family, TopologyParams p,
                    const std::optional<std::uint64_t>& seed) {
  const Family f = parse_family(family);
  if (f == Family::random_regular) p.seed = seed;
  return build(f, p);
}

CostConfig config_from(const Common& c) {
  return c.config ? load_cost_config(*c.config) : CostConfig{};
}

/// Writes the command's output and its manifest: next to the output file,
/// or on stderr when the output goes to stdout.
void finish(RunManifest& m, const Common& c, const std::string& contents) {
  const bool to_stdout = c.out.empty() || c.out == "-";
  write_output(c.out, contents);
  m.seed = c.seed;
  m.config_path = c.config;
  m.add_output(to_stdout ? "-" : c.out, contents);
  const auto manifest = m.to_json().dump(2) + "\n";
  if (to_stdout) {
    std::cerr << manifest;
  } else {
    write_output(c.out + ".manifest.json", manifest);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective-plane and comparison network topologies: generation, "
               "exact utilization analysis, dimensioning and cost."};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string("projnet ") + kVersion);

  Common common;
  auto add_common = [&](CLI::App* cmd, bool threads, bool seed, bool config) {
    cmd->add_option("--out", common.out, "Output path (default: stdout)");
    if (threads) cmd->add_option("--threads", common.threads, "Worker threads (0: all cores)");
    if (seed) cmd->add_option("--seed", common.seed, "Random seed");
    if (config) cmd->add_option("--config", common.config, "Cost configuration file (key=value)");
  };

  // generate
  auto* gen = app.add_subcommand("generate", "Build a topology and write it out");
  std::string gen_family, gen_format = "edgelist";
  TopologyParams gen_params;
  gen->add_option("family", gen_family, "Topology family")->required();
  add_graph_params(gen, gen_params);
  gen->add_option("--format", gen_format, "edgelist, dot or json");
  add_common(gen, false, true, false);

  // analyze
  auto* ana = app.add_subcommand("analyze", "Exact distance and link-utilization metrics");
  std::string ana_family, ana_input, ana_scope = "all", ana_format = "json";
  TopologyParams ana_params;
  ana->add_option("family", ana_family, "Topology family (or use --input)");
  ana->add_option("--input", ana_input, "Edge list or graph JSON file");
  add_graph_params(ana, ana_params);
  ana->add_option("--scope", ana_scope, "all or leaf");
  ana->add_option("--format", ana_format, "json, text, distances or loads");
  add_common(ana, true, true, false);

  // design
  auto* des = app.add_subcommand("design", "Dimension, lay out and price a network");
  std::string des_family, des_layout = "auto", des_policy = "structural", des_metrics = "auto";
  std::optional<std::uint64_t> des_delta0;
  std::optional<std::size_t> des_groups;
  TopologyParams des_params;
  des->add_option("family", des_family, "Topology family")->required();
  add_graph_params(des, des_params);
  des->add_option("--layout", des_layout, "auto, natural or greedy");
  des->add_option("--groups", des_groups, "Group count for the greedy layout");
  des->add_option("--delta0", des_delta0, "Terminals per router (overrides dimensioning)");
  des->add_option("--policy", des_policy, "structural or saturation");
  des->add_option("--metrics", des_metrics, "auto, exact or closed-form");
  add_common(des, true, true, true);

  // table
  auto* tab = app.add_subcommand("table", "Reproduce a published case-study table as CSV");
  std::string tab_id, tab_mode = "injected";
  tab->add_option("id", tab_id, "IV, V or VI")->required();
  tab->add_option("--mode", tab_mode, "injected or heuristic");
  add_common(tab, true, true, false);

  // sweep
  auto* swp = app.add_subcommand("sweep", "Scalability and cost curves up to a radix");
  std::uint64_t swp_rmax = 64;
  std::vector<std::string> swp_families;
  swp->add_option("--rmax", swp_rmax, "Largest router radix (>= 5)");
  swp->add_option("--families", swp_families, "Families to sweep (comma separated)")->delimiter(',');
  add_common(swp, true, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitPrecondition;
  }

  RunManifest manifest;
  manifest.command = app.get_subcommands().front()->get_name();
  for (int i = 1; i < argc; ++i) manifest.arguments.emplace_back(argv[i]);

  try {
    std::ostringstream out;
    if (*gen) {
      const auto g = build_from(gen_family, gen_params, common.seed);
      write_graph(g, parse_graph_format(gen_format), out);
    } else if (*ana) {
      detail::require(ana_family.empty() != ana_input.empty(),
                      "analyze needs exactly one of a family or --input");
      std::optional<Topology> g;
      if (!ana_input.empty()) {
        std::istringstream in(read_file(ana_input));
        const bool json = ana_input.size() >= 5 && ana_input.substr(ana_input.size() - 5) == ".json";
        g = json ? read_graph_json(in) : read_edgelist(in);
      } else {
        g = build_from(ana_family, ana_params, common.seed);
      }
      AnalysisOptions opts;
      opts.threads = common.threads;
      const auto scope = parse_scope(ana_scope);
      if (ana_format == "distances") {
        write_distance_csv(distance_metrics(*g, scope, opts), out);
      } else {
        const auto r = analyze(*g, scope, opts);
        if (ana_format == "json") {
          out << metrics_json(*g, r).dump(2) << '\n';
        } else if (ana_format == "text") {
          write_metrics_text(*g, r, out);
        } else if (ana_format == "loads") {
          write_load_histogram_csv(r, out);
        } else {
          throw precondition_error("unknown format '" + ana_format +
                                   "' (expected json, text, distances or loads)");
        }
      }
    } else if (*des) {
      const auto g = build_from(des_family, des_params, common.seed);
      DesignOptions o;
      o.source = parse_metrics_source(des_metrics);
      o.policy = parse_dimension_policy(des_policy);
      o.Delta0 = des_delta0;
      o.strategy = parse_layout_strategy(des_layout);
      o.seed = common.seed.value_or(1);
      o.groups = des_groups;
      o.config = config_from(common);
      o.analysis.threads = common.threads;
      out << design_json(design(g, o)).dump(2) << '\n';
    } else if (*tab) {
      TableOptions o;
      o.mode = parse_table_mode(tab_mode);
      o.seed = common.seed.value_or(1);
      o.analysis.threads = common.threads;
      out << table_csv(reproduce_table(tab_id, o));
    } else if (*swp) {
      SweepOptions o;
      o.rmax = swp_rmax;
      o.families = swp_families;
      o.config = config_from(common);
      o.threads = common.threads;
      out << sweep_csv(scalability_sweep(o));
    }
    finish(manifest, common, out.str());
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const invariant_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return 0;
}
