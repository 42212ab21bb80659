#include "ircsna/pipeline.hpp"

#include <sstream>

#include "ircsna/centrality.hpp"
#include "ircsna/chatlog.hpp"
#include "ircsna/cohesion.hpp"
#include "ircsna/connectivity.hpp"
#include "ircsna/equivalence.hpp"
#include "ircsna/export.hpp"
#include "ircsna/graph_io.hpp"
#include "ircsna/skeleton.hpp"

namespace ircsna {

namespace {

using Json = nlohmann::ordered_json;

template <typename F>
auto run_stage(const char* name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

Json nick_list(const MentionGraph& g, const std::vector<NodeId>& ids) {
  Json list = Json::array();
  for (const NodeId v : ids) list.push_back(g.nick(v));
  return list;
}

Json stats_section(const MentionGraph& g) {
  const auto s = stats(g);
  Json j;
  j["node_count"] = s.node_count;
  j["edge_count"] = s.edge_count;
  j["total_weight"] = s.total_weight;
  j["density"] = s.density;
  j["in_degree"] = {{"min", s.in_degree.min}, {"mean", s.in_degree.mean}, {"max", s.in_degree.max}};
  j["out_degree"] = {{"min", s.out_degree.min}, {"mean", s.out_degree.mean}, {"max", s.out_degree.max}};
  return j;
}

Json hits_section(const MentionGraph& g, const AnalysisConfig& c) {
  const auto scores = hits(g, c.hits);
  const auto ranked = [&](const std::vector<double>& key) {
    Json list = Json::array();
    const auto order = rank_descending(key);
    for (std::size_t i = 0; i < order.size() && i < c.hits_top_k; ++i) {
      const NodeId v = order[i];
      list.push_back({{"nick", g.nick(v)}, {"authority", scores.authority[v]}, {"hub", scores.hub[v]}});
    }
    return list;
  };
  Json j;
  j["weighted"] = c.hits.weighted;
  j["iterations_used"] = scores.iterations_used;
  j["converged"] = scores.converged;
  j["top_authorities"] = ranked(scores.authority);
  j["top_hubs"] = ranked(scores.hub);
  return j;
}

Json percent_entry(std::size_t count, std::size_t total) {
  const double percent = total == 0 ? 0.0 : 100.0 * static_cast<double>(count) / static_cast<double>(total);
  return {{"count", count}, {"percent", percent}};
}

Json bowtie_section(const MentionGraph& g) {
  const auto p = bowtie(g);
  const auto sizes = p.sizes();
  Json j;
  j["core_size"] = p.core.size();
  Json composition;
  for (std::size_t i = 0; i < kBowTieLabelCount; ++i) {
    composition[std::string(to_string(static_cast<BowTieLabel>(i)))] = percent_entry(sizes[i], g.node_count());
  }
  j["composition"] = std::move(composition);
  return j;
}

Json skeleton_section(const MentionGraph& g, const SkeletonPartition& p, const AnalysisConfig& c) {
  const auto sizes = p.sizes();
  Json j;
  j["component_order"] = {"A", "B", "C", "D"};
  Json composition;
  for (std::size_t i = 0; i < kComponentCount; ++i) {
    composition[std::string(to_string(static_cast<Component>(i)))] = percent_entry(sizes[i], g.node_count());
  }
  j["composition"] = std::move(composition);
  const auto m = link_matrix(g, p, c.link_matrix_weighted);
  j["link_matrix_weighted"] = c.link_matrix_weighted;
  Json rows = Json::array();
  for (const auto& row : m.counts) rows.push_back(Json(row));
  j["link_matrix"] = std::move(rows);
  j["link_total"] = m.total();
  return j;
}

Json cliques_section(const MentionGraph& g, const AnalysisConfig& c) {
  const auto view = c.clique_mutual ? mutual_view(g) : to_undirected(g);
  const auto report = maximal_cliques(view, c.clique_min_size);
  const auto comembership = clique_comembership(report, g.node_count());
  Json j;
  j["min_size"] = report.min_size;
  j["mutual_only"] = c.clique_mutual;
  j["count"] = report.cliques.size();
  j["max_clique_size"] = report.max_clique_size;
  Json histogram = Json::object();
  for (const auto& clique : report.cliques) {
    auto& slot = histogram[std::to_string(clique.size())];
    slot = slot.is_null() ? 1 : slot.get<std::size_t>() + 1;
  }
  j["size_histogram"] = std::move(histogram);
  Json pairs = Json::array();
  for (const auto& p : comembership.top_pairs(c.comembership_top_k)) {
    pairs.push_back({{"a", g.nick(p.a)}, {"b", g.nick(p.b)}, {"count", p.count}});
  }
  j["top_comembership"] = std::move(pairs);
  return j;
}

Json blocks_section(const MentionGraph& g) {
  const auto report = articulation_points_and_blocks(to_undirected(g));
  Json j;
  j["cutpoint_count"] = report.cutpoints.size();
  j["block_count"] = report.blocks.size();
  j["largest_block_size"] = report.largest_block_size;
  j["cutpoints"] = nick_list(g, report.cutpoints);
  return j;
}

Json lambda_section(const MentionGraph& g, const AnalysisConfig& c) {
  const auto view = to_undirected(g);
  const auto weighted_tree = gomory_hu(view, CapacityMode::weighted);
  const auto hierarchy =
      c.lambda_mode == CapacityMode::weighted ? lambda_sets(weighted_tree) : lambda_sets(view, CapacityMode::unit);
  Json j;
  j["mode"] = to_string(c.lambda_mode);
  Json levels = Json::array();
  for (const auto& level : hierarchy.levels) {
    Json sets = Json::array();
    for (const auto& s : level.sets) sets.push_back(nick_list(g, s));
    levels.push_back({{"lambda", level.lambda}, {"sets", std::move(sets)}});
  }
  j["levels"] = std::move(levels);
  Json links = Json::array();
  if (view.edge_count() > 0) {
    for (const auto& l : top_links(view, weighted_tree, c.top_links_k)) {
      links.push_back({{"node_a", g.nick(l.a)}, {"node_b", g.nick(l.b)}, {"weight", l.weight}, {"score", l.score}});
    }
  }
  j["top_links"] = std::move(links);
  return j;
}

Json roles_section(const MentionGraph& g, const SkeletonPartition& p, const AnalysisConfig& c) {
  const auto e = rege(g, RegeOptions{c.rege_iterations, c.rege_binarized, c.threads});
  const auto fractions = high_eq_tie_fraction(g, e, c.eq_threshold);
  const auto report = classify_roles(p, fractions, c.tie_cutoff, c.people_cutoff);
  Json j;
  j["rege_iterations"] = c.rege_iterations;
  j["rege_binarized"] = c.rege_binarized;
  j["eq_threshold"] = c.eq_threshold;
  j["tie_cutoff"] = report.tie_cutoff;
  j["people_cutoff"] = report.people_cutoff;
  Json components = Json::array();
  for (const auto& role : report.components) {
    Json entry;
    entry["component"] = to_string(role.component);
    entry["members"] = role.members;
    if (role.empty()) {
      entry["case"] = "empty";
    } else {
      entry["mean_tie_fraction"] = role.mean_tie_fraction;
      entry["people_fraction"] = role.people_fraction;
      entry["case"] = to_string(*role.role_case);
      entry["characteristics"] = characteristics(*role.role_case);
    }
    components.push_back(std::move(entry));
  }
  j["components"] = std::move(components);
  return j;
}

std::string fixed(double value, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << value;
  return out.str();
}

}  // namespace

std::string_view tool_version() noexcept { return IRCSNA_VERSION; }

std::string AnalysisReport::to_json() const { return document.dump(2) + "\n"; }

std::string AnalysisReport::to_markdown() const {
  const auto& d = document;
  std::ostringstream md;
  md << "# Chat network analysis report\n\n";
  md << "Generated by ircsna " << d["tool"]["version"].get<std::string>() << ".\n";
  if (d.contains("stats")) {
    const auto& s = d["stats"];
    md << "\n## Network\n\n"
       << "| nodes | edges | total weight | density |\n|---:|---:|---:|---:|\n"
       << "| " << s["node_count"].dump() << " | " << s["edge_count"].dump() << " | " << s["total_weight"].dump()
       << " | " << fixed(s["density"].get<double>(), 6) << " |\n";
  }
  if (d.contains("hits")) {
    md << "\n## HITS\n\n| rank | top authority | authority | top hub | hub |\n|---:|---|---:|---|---:|\n";
    const auto& auth = d["hits"]["top_authorities"];
    const auto& hub = d["hits"]["top_hubs"];
    for (std::size_t i = 0; i < auth.size(); ++i) {
      md << "| " << i + 1 << " | " << auth[i]["nick"].get<std::string>() << " | "
         << fixed(auth[i]["authority"].get<double>(), 4) << " | " << hub[i]["nick"].get<std::string>() << " | "
         << fixed(hub[i]["hub"].get<double>(), 4) << " |\n";
    }
  }
  if (d.contains("bowtie")) {
    md << "\n## Bow-tie\n\n| component | nodes | % |\n|---|---:|---:|\n";
    for (const auto& [name, entry] : d["bowtie"]["composition"].items()) {
      md << "| " << name << " | " << entry["count"].dump() << " | " << fixed(entry["percent"].get<double>(), 1)
         << " |\n";
    }
  }
  if (d.contains("skeleton")) {
    const auto& s = d["skeleton"];
    md << "\n## Skeleton\n\n| component | nodes | % |\n|---|---:|---:|\n";
    for (const auto& [name, entry] : s["composition"].items()) {
      md << "| " << name << " | " << entry["count"].dump() << " | " << fixed(entry["percent"].get<double>(), 1)
         << " |\n";
    }
    md << "\nLinks between components (row = from, column = to"
       << (s["link_matrix_weighted"].get<bool>() ? ", weighted" : "") << "):\n\n"
       << "| | A | B | C | D |\n|---|---:|---:|---:|---:|\n";
    const char* names[] = {"A", "B", "C", "D"};
    for (std::size_t i = 0; i < 4; ++i) {
      md << "| " << names[i];
      for (std::size_t k = 0; k < 4; ++k) md << " | " << s["link_matrix"][i][k].dump();
      md << " |\n";
    }
  }
  if (d.contains("cliques")) {
    const auto& c = d["cliques"];
    md << "\n## Cliques\n\n" << c["count"].dump() << " maximal cliques of size >= " << c["min_size"].dump()
       << "; largest maximal clique has " << c["max_clique_size"].dump() << " members.\n";
    if (!c["top_comembership"].empty()) {
      md << "\n| pair | shared cliques |\n|---|---:|\n";
      for (const auto& p : c["top_comembership"]) {
        md << "| " << p["a"].get<std::string>() << " / " << p["b"].get<std::string>() << " | "
           << p["count"].dump() << " |\n";
      }
    }
  }
  if (d.contains("blocks")) {
    const auto& b = d["blocks"];
    md << "\n## Blocks and cutpoints\n\n" << b["block_count"].dump() << " blocks, " << b["cutpoint_count"].dump()
       << " cutpoints, largest block " << b["largest_block_size"].dump() << " nodes.\n";
  }
  if (d.contains("lambda")) {
    const auto& l = d["lambda"];
    md << "\n## Lambda sets (" << l["mode"].get<std::string>() << " capacities)\n\n"
       << "| lambda | sets | largest set |\n|---:|---:|---:|\n";
    for (const auto& level : l["levels"]) {
      std::size_t largest = 0;
      for (const auto& s : level["sets"]) largest = std::max(largest, s.size());
      md << "| " << level["lambda"].dump() << " | " << level["sets"].size() << " | " << largest << " |\n";
    }
    if (!l["top_links"].empty()) {
      md << "\nTop links by information flow:\n\n| link | weight | flow |\n|---|---:|---:|\n";
      for (const auto& link : l["top_links"]) {
        md << "| " << link["node_a"].get<std::string>() << " - " << link["node_b"].get<std::string>() << " | "
           << link["weight"].dump() << " | " << link["score"].dump() << " |\n";
      }
    }
  }
  if (d.contains("roles")) {
    const auto& r = d["roles"];
    md << "\n## Role cases (equivalence > " << r["eq_threshold"].dump() << ")\n\n"
       << "| component | members | mean tie fraction | people fraction | case | characteristics |\n"
       << "|---|---:|---:|---:|---|---|\n";
    for (const auto& c : r["components"]) {
      md << "| " << c["component"].get<std::string>() << " | " << c["members"].dump() << " | ";
      if (c["case"] == "empty") {
        md << "- | - | empty | - |\n";
        continue;
      }
      md << fixed(c["mean_tie_fraction"].get<double>(), 3) << " | " << fixed(c["people_fraction"].get<double>(), 3)
         << " | " << c["case"].get<std::string>() << " | " << c["characteristics"].get<std::string>() << " |\n";
    }
  }
  return md.str();
}

MentionGraph load_input_graph(const AnalysisConfig& config) {
  if (config.graph_csv) {
    return run_stage("ingest", [&] { return load_graph_csv(*config.graph_csv); });
  }
  const auto corpus = run_stage("ingest", [&] {
    auto sources = config.manifest ? read_manifest(*config.manifest) : discover_log_files(config.log_paths);
    return parse_corpus(sources, config.threads);
  });
  return run_stage("extract", [&] { return extract_network(corpus, build_roster(corpus), config.extraction); });
}

AnalysisReport analyze_graph(const MentionGraph& g, const AnalysisConfig& config) {
  run_stage("config", [&] { config.validate(); });
  AnalysisReport report;
  auto& doc = report.document;
  doc["tool"] = {{"name", "ircsna"}, {"version", tool_version()}};
  doc["config"] = config_echo(config);

  const auto& on = config.enabled;
  if (on.stats) doc["stats"] = run_stage("stats", [&] { return stats_section(g); });
  if (on.hits) doc["hits"] = run_stage("hits", [&] { return hits_section(g, config); });
  if (on.bowtie) doc["bowtie"] = run_stage("bowtie", [&] { return bowtie_section(g); });
  std::optional<SkeletonPartition> skeleton;
  if (on.skeleton || on.roles) skeleton = run_stage("skeleton", [&] { return abcd_skeleton(g); });
  if (on.skeleton) doc["skeleton"] = run_stage("skeleton", [&] { return skeleton_section(g, *skeleton, config); });
  if (on.cliques) doc["cliques"] = run_stage("cliques", [&] { return cliques_section(g, config); });
  if (on.blocks) doc["blocks"] = run_stage("blocks", [&] { return blocks_section(g); });
  if (on.lambda) doc["lambda"] = run_stage("lambda", [&] { return lambda_section(g, config); });
  if (on.roles) doc["roles"] = run_stage("roles", [&] { return roles_section(g, *skeleton, config); });
  return report;
}

AnalysisReport run_pipeline(const AnalysisConfig& config) {
  run_stage("config", [&] { config.validate(); });
  return analyze_graph(load_input_graph(config), config);
}

}  // namespace ircsna
