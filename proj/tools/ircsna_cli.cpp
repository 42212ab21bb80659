// Command-line front end: ingest, extract, analyze, export, report.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ircsna/centrality.hpp"
#include "ircsna/chatlog.hpp"
#include "ircsna/cohesion.hpp"
#include "ircsna/config.hpp"
#include "ircsna/connectivity.hpp"
#include "ircsna/equivalence.hpp"
#include "ircsna/export.hpp"
#include "ircsna/graph_io.hpp"
#include "ircsna/pipeline.hpp"
#include "ircsna/skeleton.hpp"

namespace fs = std::filesystem;
using namespace ircsna;

namespace {

struct InputOptions {
  std::vector<fs::path> logs;
  std::optional<fs::path> manifest;
  std::optional<fs::path> graph;
  std::optional<fs::path> corpus;
};

struct SettingOptions {
  std::optional<fs::path> config_file;
  std::map<std::string, std::string> flag_values;
  std::vector<std::string> set_pairs;
};

std::string flag_name(const std::string& key) {
  std::string name = key;
  for (auto& c : name) {
    if (c == '_') c = '-';
  }
  return "--" + name;
}

void add_settings(CLI::App* cmd, SettingOptions& settings) {
  cmd->add_option("--config", settings.config_file, "key = value configuration file");
  cmd->add_option("--set", settings.set_pairs, "override a setting, key=value (repeatable)");
  for (const auto& key : config_keys()) {
    cmd->add_option(flag_name(key), settings.flag_values[key], "setting " + key)->group("Settings");
  }
}

// Defaults, then the config file, then explicit flags.
AnalysisConfig resolve_config(const SettingOptions& settings, CLI::App* cmd) {
  AnalysisConfig config;
  if (settings.config_file) load_config_file(*settings.config_file, config);
  for (const auto& key : config_keys()) {
    if (cmd->count(flag_name(key)) > 0) apply_setting(config, key, settings.flag_values.at(key));
  }
  for (const auto& pair : settings.set_pairs) {
    const auto eq = pair.find('=');
    if (eq == std::string::npos) throw FormatError("--set expects key=value, got '" + pair + "'");
    apply_setting(config, pair.substr(0, eq), pair.substr(eq + 1));
  }
  config.validate();
  return config;
}

void add_log_inputs(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--logs", in.logs, "log files named YYYY-MM-DD.txt or directories of them");
  cmd->add_option("--manifest", in.manifest, "manifest of 'path date' lines");
}

void add_graph_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--graph", in.graph, "graph CSV (source,target,weight)");
}

std::vector<LogSource> log_sources(const InputOptions& in) {
  if (in.manifest) return read_manifest(*in.manifest);
  if (in.logs.empty()) throw InvalidArgument("no input given (use --logs, --manifest or --graph)");
  return discover_log_files(in.logs);
}

ChatCorpus load_corpus(const InputOptions& in, unsigned threads) {
  if (in.corpus) {
    std::ifstream file(*in.corpus);
    if (!file) throw IoError("cannot read corpus '" + in.corpus->string() + "'");
    return read_corpus(file);
  }
  return parse_corpus(log_sources(in), threads);
}

AnalysisConfig with_inputs(const InputOptions& in, const AnalysisConfig& config) {
  AnalysisConfig c = config;
  c.graph_csv = in.graph;
  c.log_paths = in.logs;
  c.manifest = in.manifest;
  if (!c.graph_csv && !c.manifest && c.log_paths.empty()) {
    throw InvalidArgument("no input given (use --graph, --logs or --manifest)");
  }
  return c;
}

MentionGraph load_graph(const InputOptions& in, const AnalysisConfig& config) {
  return load_input_graph(with_inputs(in, config));
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mention-network analysis of IRC chat logs"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  // ingest
  InputOptions ingest_in;
  fs::path ingest_out = "corpus.ndjson";
  unsigned ingest_threads = 1;
  auto* ingest = app.add_subcommand("ingest", "parse raw logs into a newline-delimited JSON corpus");
  add_log_inputs(ingest, ingest_in);
  ingest->add_option("-o,--output", ingest_out, "corpus output path");
  ingest->add_option("--threads", ingest_threads, "parser threads")->check(CLI::PositiveNumber);

  // extract
  InputOptions extract_in;
  fs::path extract_out = "graph.csv";
  SettingOptions extract_settings;
  auto* extract = app.add_subcommand("extract", "build the mention network as a CSV edge list");
  add_log_inputs(extract, extract_in);
  extract->add_option("--corpus", extract_in.corpus, "corpus produced by 'ingest'");
  extract->add_option("-o,--output", extract_out, "graph CSV output path");
  add_settings(extract, extract_settings);

  // analyze
  InputOptions analyze_in;
  fs::path analyze_dir = "analysis";
  std::vector<std::string> egos;
  bool write_equivalence = false;
  SettingOptions analyze_settings;
  auto* analyze = app.add_subcommand("analyze", "write per-analysis artifacts (scores, partitions, cliques, links)");
  add_log_inputs(analyze, analyze_in);
  add_graph_input(analyze, analyze_in);
  analyze->add_option("--out-dir", analyze_dir, "directory for the artifacts");
  analyze->add_option("--ego", egos, "write the ego network of this nick as DOT (repeatable)");
  analyze->add_flag("--equivalence", write_equivalence, "also write the dense REGE matrix");
  add_settings(analyze, analyze_settings);

  // export
  InputOptions export_in;
  std::string export_format = "dot";
  fs::path export_out;
  bool with_attributes = false;
  SettingOptions export_settings;
  auto* exporter = app.add_subcommand("export", "export the graph as DOT, GraphML or CSV");
  add_log_inputs(exporter, export_in);
  add_graph_input(exporter, export_in);
  exporter->add_option("--format", export_format, "dot, graphml or csv")
      ->check(CLI::IsMember({"dot", "graphml", "csv"}));
  exporter->add_option("-o,--output", export_out, "output path")->required();
  exporter->add_flag("--with-attributes", with_attributes, "attach HITS scores and skeleton labels");
  add_settings(exporter, export_settings);

  // report
  InputOptions report_in;
  fs::path report_out = "report.json";
  std::optional<fs::path> markdown_out;
  SettingOptions report_settings;
  auto* reporter = app.add_subcommand("report", "run the full pipeline and write report.json");
  add_log_inputs(reporter, report_in);
  add_graph_input(reporter, report_in);
  reporter->add_option("-o,--output", report_out, "JSON report path");
  reporter->add_option("--markdown", markdown_out, "also write a Markdown summary");
  add_settings(reporter, report_settings);

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) {
      const auto corpus = parse_corpus(log_sources(ingest_in), ingest_threads);
      auto out = open_output(ingest_out);
      write_corpus(out, corpus);
      std::cerr << "ingested " << corpus.message_count() << " messages from " << corpus.source_files.size()
                << " files (" << corpus.skipped_lines() << " lines skipped)\n";
    } else if (extract->parsed()) {
      const auto config = resolve_config(extract_settings, extract);
      const auto corpus = load_corpus(extract_in, config.threads);
      const auto graph = extract_network(corpus, build_roster(corpus), config.extraction);
      save_graph_csv(extract_out, graph);
      std::cerr << "extracted " << graph.node_count() << " nodes and " << graph.edge_count() << " edges\n";
    } else if (analyze->parsed()) {
      const auto config = resolve_config(analyze_settings, analyze);
      const auto graph = load_graph(analyze_in, config);
      fs::create_directories(analyze_dir);
      const auto view = to_undirected(graph);

      const auto scores = hits(graph, config.hits);
      auto scores_out = open_output(analyze_dir / "scores.csv");
      write_scores_csv(scores_out, graph, scores);

      auto partition_out = open_output(analyze_dir / "partition.csv");
      write_partition_csv(partition_out, graph, bowtie(graph), abcd_skeleton(graph));

      const auto cliques = maximal_cliques(config.clique_mutual ? mutual_view(graph) : view, config.clique_min_size);
      auto cliques_out = open_output(analyze_dir / "cliques.json");
      write_cliques_json(cliques_out, graph, cliques);

      if (view.edge_count() > 0) {
        auto links_out = open_output(analyze_dir / "top_links.csv");
        write_top_links_csv(links_out, graph, top_links(view, config.top_links_k));
      }
      if (write_equivalence) {
        auto eq_out = open_output(analyze_dir / "equivalence.csv");
        write_equivalence_csv(eq_out, graph,
                              rege(graph, RegeOptions{config.rege_iterations, config.rege_binarized, config.threads}));
      }
      for (const auto& nick : egos) {
        const auto ego = ego_network(graph, canonical_nick(nick));
        auto ego_out = open_output(analyze_dir / ("ego_" + graph.nick(ego.ego) + ".dot"));
        write_ego_dot(ego_out, graph, ego);
      }
      std::cerr << "wrote analysis artifacts to " << analyze_dir.string() << "\n";
    } else if (exporter->parsed()) {
      const auto config = resolve_config(export_settings, exporter);
      const auto graph = load_graph(export_in, config);
      NodeAttributes attributes;
      if (with_attributes) {
        attributes.hits = hits(graph, config.hits);
        attributes.skeleton = abcd_skeleton(graph);
      }
      export_graph(graph, *parse_export_format(export_format), export_out, attributes);
    } else if (reporter->parsed()) {
      const auto config = resolve_config(report_settings, reporter);
      const auto report = run_pipeline(with_inputs(report_in, config));
      auto out = open_output(report_out);
      out << report.to_json();
      if (markdown_out) {
        auto md = open_output(*markdown_out);
        md << report.to_markdown();
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "ircsna " << app.get_subcommands().front()->get_name() << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}
