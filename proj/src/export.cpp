#include "ircsna/export.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

#include "json.hpp"

#include "ircsna/error.hpp"
#include "ircsna/graph_io.hpp"

namespace ircsna {

namespace {

bool bare_dot_id(std::string_view s) {
  if (s.empty() || (s.front() >= '0' && s.front() <= '9')) return false;
  for (const char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string dot_id(std::string_view s) {
  if (bare_dot_id(s)) return std::string(s);
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::optional<ExportFormat> parse_export_format(std::string_view name) noexcept {
  if (name == "dot") return ExportFormat::dot;
  if (name == "graphml") return ExportFormat::graphml;
  if (name == "csv") return ExportFormat::csv;
  return std::nullopt;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ec == std::errc{} ? ptr : buf);
}

void write_dot(std::ostream& out, const MentionGraph& g, const NodeAttributes& attributes) {
  out << "digraph mentions {\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << "  " << dot_id(g.nick(v));
    std::vector<std::string> attrs;
    if (attributes.hits) {
      attrs.push_back("authority=" + format_double(attributes.hits->authority.at(v)));
      attrs.push_back("hub=" + format_double(attributes.hits->hub.at(v)));
    }
    if (attributes.skeleton) {
      attrs.push_back("skeleton=\"" + std::string(to_string(attributes.skeleton->label.at(v))) + "\"");
    }
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << ']';
    }
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << dot_id(g.nick(e.source)) << " -> " << dot_id(g.nick(e.target)) << " [weight=" << e.weight
        << "];\n";
  }
  out << "}\n";
}

void write_graphml(std::ostream& out, const MentionGraph& g, const NodeAttributes& attributes) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  if (attributes.hits) {
    out << "  <key id=\"authority\" for=\"node\" attr.name=\"authority\" attr.type=\"double\"/>\n"
        << "  <key id=\"hub\" for=\"node\" attr.name=\"hub\" attr.type=\"double\"/>\n";
  }
  if (attributes.skeleton) {
    out << "  <key id=\"skeleton\" for=\"node\" attr.name=\"skeleton\" attr.type=\"string\"/>\n";
  }
  out << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
      << "  <graph id=\"mentions\" edgedefault=\"directed\">\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << "    <node id=\"" << xml_escape(g.nick(v)) << '"';
    if (!attributes.hits && !attributes.skeleton) {
      out << "/>\n";
      continue;
    }
    out << ">\n";
    if (attributes.hits) {
      out << "      <data key=\"authority\">" << format_double(attributes.hits->authority.at(v)) << "</data>\n"
          << "      <data key=\"hub\">" << format_double(attributes.hits->hub.at(v)) << "</data>\n";
    }
    if (attributes.skeleton) {
      out << "      <data key=\"skeleton\">" << to_string(attributes.skeleton->label.at(v)) << "</data>\n";
    }
    out << "    </node>\n";
  }
  for (const auto& e : g.edges()) {
    out << "    <edge source=\"" << xml_escape(g.nick(e.source)) << "\" target=\"" << xml_escape(g.nick(e.target))
        << "\">\n      <data key=\"weight\">" << e.weight << "</data>\n    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void export_graph(const MentionGraph& g, ExportFormat format, const std::filesystem::path& path,
                  const NodeAttributes& attributes) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  switch (format) {
    case ExportFormat::dot: write_dot(out, g, attributes); break;
    case ExportFormat::graphml: write_graphml(out, g, attributes); break;
    case ExportFormat::csv: write_graph_csv(out, g); break;
  }
  out.flush();
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

void write_ego_dot(std::ostream& out, const MentionGraph& g, const EgoNetwork& ego) {
  out << "digraph " << dot_id("ego_" + g.nick(ego.ego)) << " {\n";
  std::vector<NodeId> members = ego.alters;
  members.insert(std::lower_bound(members.begin(), members.end(), ego.ego), ego.ego);
  for (const NodeId v : members) {
    out << "  " << dot_id(g.nick(v)) << " [indegree=" << g.in_arcs(v).size();
    if (v == ego.ego) out << ", ego=true";
    out << "];\n";
  }
  for (const auto& e : ego.edges) {
    out << "  " << dot_id(g.nick(e.source)) << " -> " << dot_id(g.nick(e.target)) << " [weight=" << e.weight
        << "];\n";
  }
  out << "}\n";
}

void write_scores_csv(std::ostream& out, const MentionGraph& g, const HitsScores& scores) {
  out << "nick,authority,hub,indegree,outdegree\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << csv_field(g.nick(v)) << ',' << format_double(scores.authority.at(v)) << ','
        << format_double(scores.hub.at(v)) << ',' << g.in_arcs(v).size() << ',' << g.out_arcs(v).size() << '\n';
  }
}

void write_partition_csv(std::ostream& out, const MentionGraph& g, const BowTiePartition& bowtie,
                         const SkeletonPartition& skeleton) {
  out << "nick,bowtie_label,skeleton_label\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << csv_field(g.nick(v)) << ',' << to_string(bowtie.label.at(v)) << ',' << to_string(skeleton.label.at(v))
        << '\n';
  }
}

void write_top_links_csv(std::ostream& out, const MentionGraph& g, const std::vector<RankedLink>& links) {
  out << "node_a,node_b,score\n";
  for (const auto& l : links) out << csv_field(g.nick(l.a)) << ',' << csv_field(g.nick(l.b)) << ',' << l.score << '\n';
}

void write_equivalence_csv(std::ostream& out, const MentionGraph& g, const EquivalenceMatrix& e) {
  out << "nick";
  for (NodeId v = 0; v < g.node_count(); ++v) out << ',' << csv_field(g.nick(v));
  out << '\n';
  for (NodeId i = 0; i < g.node_count(); ++i) {
    out << csv_field(g.nick(i));
    for (NodeId j = 0; j < g.node_count(); ++j) out << ',' << format_double(e(i, j));
    out << '\n';
  }
}

void write_cliques_json(std::ostream& out, const MentionGraph& g, const CliqueReport& report) {
  nlohmann::json cliques = nlohmann::json::array();
  for (const auto& clique : report.cliques) {
    nlohmann::json members = nlohmann::json::array();
    for (const NodeId v : clique) members.push_back(g.nick(v));
    cliques.push_back(std::move(members));
  }
  out << cliques.dump(2) << '\n';
}

}  // namespace ircsna
