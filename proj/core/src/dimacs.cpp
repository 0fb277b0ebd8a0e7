#include "circlab/dimacs.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "circlab/serialize.hpp"

namespace circlab {

namespace {

constexpr std::string_view kMetaPrefix = "c circlab ";

Json metadata(const Graph& graph) {
  Json meta = Json::object();
  if (graph.has_labels()) meta["labels"] = graph.labels();
  if (graph.provenance()) meta["family"] = to_json(*graph.provenance());
  return meta;
}

Graph apply_metadata(const Graph& graph, const Json& meta) {
  std::vector<std::string> labels = graph.labels();
  std::optional<FamilySpec> provenance = graph.provenance();
  if (meta.contains("labels")) labels = meta.at("labels").get<std::vector<std::string>>();
  if (meta.contains("family")) provenance = family_spec_from_json(meta.at("family"));
  return Graph(graph.order(), graph.edges(), std::move(labels), std::move(provenance));
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw std::runtime_error("dimacs line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  std::optional<std::size_t> order;
  std::size_t declared_edges = 0;
  std::vector<Edge> edges;
  std::optional<Json> meta;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.starts_with(kMetaPrefix)) {
      meta = Json::parse(line.substr(kMetaPrefix.size()));
      continue;
    }
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string format;
      long long n = -1;
      long long m = -1;
      if (!(fields >> format >> n >> m) || n < 0 || m < 0) parse_error(number, "bad problem line");
      if (format != "edge" && format != "col") parse_error(number, "unsupported format " + format);
      if (order) parse_error(number, "duplicate problem line");
      order = static_cast<std::size_t>(n);
      declared_edges = static_cast<std::size_t>(m);
    } else if (tag == "e") {
      if (!order) parse_error(number, "edge before problem line");
      long long u = 0;
      long long v = 0;
      if (!(fields >> u >> v)) parse_error(number, "bad edge line");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > *order ||
          static_cast<std::size_t>(v) > *order) {
        parse_error(number, "endpoint out of range");
      }
      if (u == v) parse_error(number, "self-loop");
      edges.push_back(Edge::make(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)));
    } else {
      parse_error(number, "unknown line type '" + tag + "'");
    }
  }
  if (!order) throw std::runtime_error("dimacs: missing problem line");
  (void)declared_edges;  // tolerated: many files count each edge twice
  Graph graph(*order, edges);
  return meta ? apply_metadata(graph, *meta) : graph;
}

void write_dimacs(std::ostream& out, const Graph& graph, bool embed_metadata) {
  if (graph.provenance()) out << "c " << graph.provenance()->name() << '\n';
  if (embed_metadata) {
    const Json meta = metadata(graph);
    if (!meta.empty()) out << kMetaPrefix << meta.dump() << '\n';
  }
  out << "p edge " << graph.order() << ' ' << graph.size() << '\n';
  for (const Edge& e : graph.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string labels_sidecar_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.extension() == ".col") p.replace_extension();
  return p.string() + ".labels.json";
}

Graph load_graph(const std::string& path) {
  if (path == "-") return read_dimacs(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Graph graph = read_dimacs(in);
  const std::string sidecar = labels_sidecar_path(path);
  if (std::filesystem::exists(sidecar)) {
    std::ifstream side(sidecar);
    graph = apply_metadata(graph, Json::parse(side));
  }
  return graph;
}

void save_graph(const Graph& graph, const std::string& path) {
  if (path == "-") {
    write_dimacs(std::cout, graph, true);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_dimacs(out, graph, false);
  const Json meta = metadata(graph);
  if (!meta.empty()) {
    std::ofstream side(labels_sidecar_path(path));
    side << meta.dump(2) << '\n';
  }
}

}  // namespace circlab
