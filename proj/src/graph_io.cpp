#include "ircsna/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "ircsna/error.hpp"

namespace ircsna {

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string quoted = "\"";
  for (const char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::vector<std::string> split_csv_record(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw FormatError("unterminated quoted CSV field");
  return fields;
}

void write_graph_csv(std::ostream& out, const MentionGraph& g) {
  out << "source,target,weight\n";
  for (const auto& e : g.edges()) {
    out << csv_field(g.nick(e.source)) << ',' << csv_field(g.nick(e.target)) << ',' << e.weight << '\n';
  }
}

MentionGraph read_graph_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("graph CSV is empty (missing header)");
  const auto header = split_csv_record(line);
  if (header != std::vector<std::string>{"source", "target", "weight"}) {
    throw FormatError("graph CSV header must be 'source,target,weight'");
  }
  std::vector<std::tuple<std::string, std::string, Weight>> edges;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto where = "graph CSV line " + std::to_string(line_no);
    auto fields = split_csv_record(line);
    if (fields.size() != 3) throw FormatError(where + ": expected 3 fields");
    Weight w = 0;
    const auto& text = fields[2];
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
    if (ec != std::errc{} || ptr != text.data() + text.size() || w <= 0) {
      throw FormatError(where + ": weight must be a positive integer");
    }
    if (fields[0].empty() || fields[1].empty()) throw FormatError(where + ": empty node name");
    if (fields[0] == fields[1]) throw FormatError(where + ": self-loop on '" + fields[0] + "'");
    edges.emplace_back(std::move(fields[0]), std::move(fields[1]), w);
  }
  return MentionGraph::from_edges(edges);
}

MentionGraph load_graph_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read graph file '" + path.string() + "'");
  return read_graph_csv(in);
}

void save_graph_csv(const std::filesystem::path& path, const MentionGraph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write graph file '" + path.string() + "'");
  write_graph_csv(out, g);
  if (!out) throw IoError("error while writing graph file '" + path.string() + "'");
}

}  // namespace ircsna
