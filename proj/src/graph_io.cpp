#include "zdg/graph_io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "zdg/errors.hpp"

namespace zdg {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json out = {{"n", g.order()},
              {"labels", g.labels()},
              {"edges", std::move(edges)}};
  out["provenance"] =
      g.provenance() ? json(*g.provenance()) : json(nullptr);
  return out.dump();
}

Graph graph_from_json(std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("graph JSON: ") + e.what());
  }
  try {
    const auto n = in.at("n").get<std::size_t>();
    Graph g(n);
    for (const auto& e : in.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error("graph JSON: every edge must be a pair");
      }
      g.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    if (in.contains("labels")) {
      g.set_labels(in["labels"].get<std::vector<std::string>>());
    }
    if (in.contains("provenance") && !in["provenance"].is_null()) {
      g.set_provenance(in["provenance"].get<std::string>());
    }
    return g;
  } catch (const json::exception& e) {
    throw Error(std::string("graph JSON: ") + e.what());
  }
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string graph_to_dot(const Graph& g,
                         const std::optional<Partition>& partition) {
  std::ostringstream os;
  os << "graph G {\n";
  if (g.provenance()) os << "  label=" << quote(*g.provenance()) << ";\n";
  auto node = [&](Vertex v, const char* indent) {
    os << indent << 'v' << v << " [label=" << quote(g.label(v)) << "];\n";
  };
  if (partition) {
    for (std::size_t i = 0; i < partition->blocks.size(); ++i) {
      const Block& b = partition->blocks[i];
      os << "  subgraph cluster_" << i << " {\n";
      os << "    label=" << quote(b.label) << ";\n";
      os << "    rank=same;\n";
      for (Vertex v : b.vertices) node(v, "    ");
      os << "  }\n";
    }
  } else {
    for (Vertex v = 0; v < g.order(); ++v) node(v, "  ");
  }
  for (auto [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string partition_to_json(const Partition& p, const Graph& g) {
  json blocks = json::array();
  for (const Block& b : p.blocks) {
    std::vector<std::string> members;
    members.reserve(b.vertices.size());
    for (Vertex v : b.vertices) members.push_back(g.label(v));
    blocks.push_back({{"label", b.label},
                      {"size", b.vertices.size()},
                      {"vertices", b.vertices},
                      {"members", std::move(members)}});
  }
  return json{{"kind", to_string(p.kind)}, {"blocks", std::move(blocks)}}
      .dump();
}

Partition partition_from_json(std::string_view text, std::size_t n) {
  Partition p;
  try {
    const json in = json::parse(text);
    const json& blocks = in.is_array() ? in : in.at("blocks");
    for (const auto& b : blocks) {
      Block block;
      if (b.is_array()) {
        block.vertices = b.get<std::vector<Vertex>>();
        block.label = "B" + std::to_string(p.blocks.size());
      } else {
        block.vertices = b.at("vertices").get<std::vector<Vertex>>();
        block.label = b.value("label", "B" + std::to_string(p.blocks.size()));
      }
      std::sort(block.vertices.begin(), block.vertices.end());
      p.blocks.push_back(std::move(block));
    }
  } catch (const json::exception& e) {
    throw Error(std::string("partition JSON: ") + e.what());
  }
  p.validate(n);
  return p;
}

}  // namespace zdg
