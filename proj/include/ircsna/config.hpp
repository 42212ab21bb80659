#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ircsna/centrality.hpp"
#include "ircsna/equivalence.hpp"
#include "ircsna/max_flow.hpp"
#include "ircsna/mention_graph.hpp"

namespace ircsna {

struct EnabledAnalyses {
  bool stats = true;
  bool hits = true;
  bool bowtie = true;
  bool skeleton = true;
  bool cliques = true;
  bool blocks = true;
  bool lambda = true;
  bool roles = true;
};

struct AnalysisConfig {
  // Inputs: raw logs (files or directories), a manifest, or a graph CSV.
  std::vector<std::filesystem::path> log_paths;
  std::optional<std::filesystem::path> manifest;
  std::optional<std::filesystem::path> graph_csv;

  ExtractionOptions extraction;

  HitsOptions hits;
  std::size_t hits_top_k = 10;

  std::size_t clique_min_size = 3;
  bool clique_mutual = false;
  std::size_t comembership_top_k = 10;

  bool link_matrix_weighted = false;

  CapacityMode lambda_mode = CapacityMode::unit;
  std::size_t top_links_k = 10;

  int rege_iterations = 3;
  bool rege_binarized = false;
  double eq_threshold = 0.5;
  double tie_cutoff = 0.30;
  double people_cutoff = 0.50;

  EnabledAnalyses enabled;

  /// Worker threads for ingest and REGE. Never changes any output.
  unsigned threads = 1;

  /// Throws InvalidArgument for out-of-range parameters.
  void validate() const;
};

/// Applies one `key = value` setting. Keys are the snake_case field names
/// listed by config_keys(); unknown keys and unparsable values throw
/// FormatError.
void apply_setting(AnalysisConfig& config, std::string_view key, std::string_view value);

const std::vector<std::string>& config_keys();

/// Reads `key = value` lines into `config`. Blank lines and `#` comments are
/// ignored.
void read_config(std::istream& in, AnalysisConfig& config, std::string_view origin = "config");
void load_config_file(const std::filesystem::path& path, AnalysisConfig& config);

/// Parameters that influence results, in a fixed order. Inputs and thread
/// count are deliberately absent so equivalent runs echo identically.
nlohmann::ordered_json config_echo(const AnalysisConfig& config);

std::string_view to_string(CapacityMode mode) noexcept;

}  // namespace ircsna
