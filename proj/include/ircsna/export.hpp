#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ircsna/centrality.hpp"
#include "ircsna/cohesion.hpp"
#include "ircsna/connectivity.hpp"
#include "ircsna/equivalence.hpp"
#include "ircsna/mention_graph.hpp"
#include "ircsna/skeleton.hpp"

namespace ircsna {

enum class ExportFormat { dot, graphml, csv };

std::optional<ExportFormat> parse_export_format(std::string_view name) noexcept;

/// Optional per-node attributes attached to DOT and GraphML exports.
struct NodeAttributes {
  std::optional<HitsScores> hits;
  std::optional<SkeletonPartition> skeleton;
};

/// Shortest decimal text that round-trips the double.
std::string format_double(double value);

void write_dot(std::ostream& out, const MentionGraph& g, const NodeAttributes& attributes = {});
void write_graphml(std::ostream& out, const MentionGraph& g, const NodeAttributes& attributes = {});

/// Writes `g` to `path`. Throws IoError when the file cannot be written.
void export_graph(const MentionGraph& g, ExportFormat format, const std::filesystem::path& path,
                  const NodeAttributes& attributes = {});

/// Ego network as DOT; nodes carry their indegree in the full graph.
void write_ego_dot(std::ostream& out, const MentionGraph& g, const EgoNetwork& ego);

/// `nick,authority,hub,indegree,outdegree`
void write_scores_csv(std::ostream& out, const MentionGraph& g, const HitsScores& scores);
/// `nick,bowtie_label,skeleton_label`
void write_partition_csv(std::ostream& out, const MentionGraph& g, const BowTiePartition& bowtie,
                         const SkeletonPartition& skeleton);
/// `node_a,node_b,score`
void write_top_links_csv(std::ostream& out, const MentionGraph& g, const std::vector<RankedLink>& links);
/// Dense n x n matrix with a nick header row and column.
void write_equivalence_csv(std::ostream& out, const MentionGraph& g, const EquivalenceMatrix& e);
/// JSON array of member nick lists.
void write_cliques_json(std::ostream& out, const MentionGraph& g, const CliqueReport& report);

}  // namespace ircsna
