#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ircsna/mention_graph.hpp"

namespace ircsna {

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(std::string_view value);

/// Splits one CSV record, honouring double-quoted fields.
std::vector<std::string> split_csv_record(std::string_view line);

/// Canonical edge list: header `source,target,weight`, rows in
/// (source nick, target nick) order.
void write_graph_csv(std::ostream& out, const MentionGraph& g);
MentionGraph read_graph_csv(std::istream& in);

MentionGraph load_graph_csv(const std::filesystem::path& path);
void save_graph_csv(const std::filesystem::path& path, const MentionGraph& g);

}  // namespace ircsna
