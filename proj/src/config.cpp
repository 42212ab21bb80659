#include "ircsna/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>

#include "ircsna/error.hpp"

namespace ircsna {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
  throw FormatError("setting '" + std::string(key) + "': cannot parse '" + std::string(value) + "' as " +
                    std::string(expected));
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_value(key, v, "boolean");
}

template <typename T>
T parse_number(std::string_view key, std::string_view v) {
  T value{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, v, "number");
  return value;
}

using Setter = std::function<void(AnalysisConfig&, std::string_view, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"min_nick_length", [](auto& c, auto k, auto v) { c.extraction.min_nick_length = parse_number<std::size_t>(k, v); }},
      {"filter_short_words", [](auto& c, auto k, auto v) { c.extraction.filter_short_words = parse_bool(k, v); }},
      {"case_insensitive", [](auto& c, auto k, auto v) { c.extraction.case_insensitive = parse_bool(k, v); }},
      {"include_isolates", [](auto& c, auto k, auto v) { c.extraction.include_isolates = parse_bool(k, v); }},
      {"hits_tolerance", [](auto& c, auto k, auto v) { c.hits.tolerance = parse_number<double>(k, v); }},
      {"hits_max_iterations", [](auto& c, auto k, auto v) { c.hits.max_iterations = parse_number<int>(k, v); }},
      {"hits_weighted", [](auto& c, auto k, auto v) { c.hits.weighted = parse_bool(k, v); }},
      {"hits_top_k", [](auto& c, auto k, auto v) { c.hits_top_k = parse_number<std::size_t>(k, v); }},
      {"clique_min_size", [](auto& c, auto k, auto v) { c.clique_min_size = parse_number<std::size_t>(k, v); }},
      {"clique_mutual", [](auto& c, auto k, auto v) { c.clique_mutual = parse_bool(k, v); }},
      {"comembership_top_k", [](auto& c, auto k, auto v) { c.comembership_top_k = parse_number<std::size_t>(k, v); }},
      {"link_matrix_weighted", [](auto& c, auto k, auto v) { c.link_matrix_weighted = parse_bool(k, v); }},
      {"lambda_mode",
       [](auto& c, auto k, auto v) {
         if (v == "unit") c.lambda_mode = CapacityMode::unit;
         else if (v == "weighted") c.lambda_mode = CapacityMode::weighted;
         else bad_value(k, v, "'unit' or 'weighted'");
       }},
      {"top_links_k", [](auto& c, auto k, auto v) { c.top_links_k = parse_number<std::size_t>(k, v); }},
      {"rege_iterations", [](auto& c, auto k, auto v) { c.rege_iterations = parse_number<int>(k, v); }},
      {"rege_binarized", [](auto& c, auto k, auto v) { c.rege_binarized = parse_bool(k, v); }},
      {"eq_threshold", [](auto& c, auto k, auto v) { c.eq_threshold = parse_number<double>(k, v); }},
      {"tie_cutoff", [](auto& c, auto k, auto v) { c.tie_cutoff = parse_number<double>(k, v); }},
      {"people_cutoff", [](auto& c, auto k, auto v) { c.people_cutoff = parse_number<double>(k, v); }},
      {"threads", [](auto& c, auto k, auto v) { c.threads = parse_number<unsigned>(k, v); }},
      {"enable_stats", [](auto& c, auto k, auto v) { c.enabled.stats = parse_bool(k, v); }},
      {"enable_hits", [](auto& c, auto k, auto v) { c.enabled.hits = parse_bool(k, v); }},
      {"enable_bowtie", [](auto& c, auto k, auto v) { c.enabled.bowtie = parse_bool(k, v); }},
      {"enable_skeleton", [](auto& c, auto k, auto v) { c.enabled.skeleton = parse_bool(k, v); }},
      {"enable_cliques", [](auto& c, auto k, auto v) { c.enabled.cliques = parse_bool(k, v); }},
      {"enable_blocks", [](auto& c, auto k, auto v) { c.enabled.blocks = parse_bool(k, v); }},
      {"enable_lambda", [](auto& c, auto k, auto v) { c.enabled.lambda = parse_bool(k, v); }},
      {"enable_roles", [](auto& c, auto k, auto v) { c.enabled.roles = parse_bool(k, v); }},
  };
  return table;
}

}  // namespace

void AnalysisConfig::validate() const {
  const auto fail = [](const std::string& what) { throw InvalidArgument("invalid configuration: " + what); };
  if (!(hits.tolerance > 0.0)) fail("hits_tolerance must be positive");
  if (hits.max_iterations < 1) fail("hits_max_iterations must be at least 1");
  if (clique_min_size < 1) fail("clique_min_size must be at least 1");
  if (top_links_k < 1) fail("top_links_k must be at least 1");
  if (rege_iterations < 1) fail("rege_iterations must be at least 1");
  if (!(eq_threshold > 0.0 && eq_threshold < 1.0)) fail("eq_threshold must lie in (0, 1)");
  if (!(tie_cutoff >= 0.0 && tie_cutoff <= 1.0)) fail("tie_cutoff must lie in [0, 1]");
  if (!(people_cutoff >= 0.0 && people_cutoff <= 1.0)) fail("people_cutoff must lie in [0, 1]");
  if (threads < 1) fail("threads must be at least 1");
}

void apply_setting(AnalysisConfig& config, std::string_view key, std::string_view value) {
  const auto it = setters().find(key);
  if (it == setters().end()) throw FormatError("unknown setting '" + std::string(key) + "'");
  it->second(config, key, trim(value));
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& [k, setter] : setters()) out.push_back(k);
    return out;
  }();
  return keys;
}

void read_config(std::istream& in, AnalysisConfig& config, std::string_view origin) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    const auto where = std::string(origin) + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) throw FormatError(where + ": expected 'key = value'");
    try {
      apply_setting(config, trim(view.substr(0, eq)), trim(view.substr(eq + 1)));
    } catch (const FormatError& e) {
      throw FormatError(where + ": " + e.what());
    }
  }
}

void load_config_file(const std::filesystem::path& path, AnalysisConfig& config) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  read_config(in, config, path.string());
}

std::string_view to_string(CapacityMode mode) noexcept {
  return mode == CapacityMode::unit ? "unit" : "weighted";
}

nlohmann::ordered_json config_echo(const AnalysisConfig& c) {
  nlohmann::ordered_json j;
  j["min_nick_length"] = c.extraction.min_nick_length;
  j["filter_short_words"] = c.extraction.filter_short_words;
  j["case_insensitive"] = c.extraction.case_insensitive;
  j["include_isolates"] = c.extraction.include_isolates;
  j["hits_tolerance"] = c.hits.tolerance;
  j["hits_max_iterations"] = c.hits.max_iterations;
  j["hits_weighted"] = c.hits.weighted;
  j["hits_top_k"] = c.hits_top_k;
  j["clique_min_size"] = c.clique_min_size;
  j["clique_mutual"] = c.clique_mutual;
  j["comembership_top_k"] = c.comembership_top_k;
  j["link_matrix_weighted"] = c.link_matrix_weighted;
  j["lambda_mode"] = to_string(c.lambda_mode);
  j["top_links_k"] = c.top_links_k;
  j["rege_iterations"] = c.rege_iterations;
  j["rege_binarized"] = c.rege_binarized;
  j["eq_threshold"] = c.eq_threshold;
  j["tie_cutoff"] = c.tie_cutoff;
  j["people_cutoff"] = c.people_cutoff;
  auto& enabled = j["enabled"];
  enabled["stats"] = c.enabled.stats;
  enabled["hits"] = c.enabled.hits;
  enabled["bowtie"] = c.enabled.bowtie;
  enabled["skeleton"] = c.enabled.skeleton;
  enabled["cliques"] = c.enabled.cliques;
  enabled["blocks"] = c.enabled.blocks;
  enabled["lambda"] = c.enabled.lambda;
  enabled["roles"] = c.enabled.roles;
  return j;
}

}  // namespace ircsna
