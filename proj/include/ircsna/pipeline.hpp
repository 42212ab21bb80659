#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "ircsna/config.hpp"
#include "ircsna/error.hpp"
#include "ircsna/mention_graph.hpp"

namespace ircsna {

/// A failure inside one pipeline stage; what() starts with the stage name.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& message)
      : Error("stage '" + stage + "': " + message), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

struct AnalysisReport {
  nlohmann::ordered_json document;

  /// Pretty-printed JSON with a trailing newline.
  std::string to_json() const;
  std::string to_markdown() const;
};

/// Ingests the configured inputs: a graph CSV if given, otherwise logs
/// (manifest or discovered files) parsed and extracted.
MentionGraph load_input_graph(const AnalysisConfig& config);

/// Runs every enabled analysis on `g` in a fixed order.
AnalysisReport analyze_graph(const MentionGraph& g, const AnalysisConfig& config);

/// load_input_graph followed by analyze_graph. No partial report is ever
/// returned; failures surface as StageError.
AnalysisReport run_pipeline(const AnalysisConfig& config);

std::string_view tool_version() noexcept;

}  // namespace ircsna
