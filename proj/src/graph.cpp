#include "textnet/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace textnet {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(std::move(field));
  return fields;
}

std::string lowercased(std::string token) {
  std::transform(token.begin(), token.end(), token.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return token;
}

Scalar parse_weight(const std::string& text, const std::string& where) {
  Scalar value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw DataError(where + ": invalid edge weight '" + text + "'");
  }
  if (value < 0) throw DataError(where + ": negative edge weight '" + text + "'");
  return value;
}

struct GraphBuilder {
  TextualGraph graph;

  VertexId intern(const std::string& name) {
    auto [it, inserted] = graph.vertex_ids.try_emplace(name, graph.vertex_count);
    if (inserted) {
      ++graph.vertex_count;
      graph.vertex_names.push_back(name);
      graph.texts.emplace_back();
      graph.labels.emplace_back();
    }
    return it->second;
  }
};

}  // namespace

std::vector<Scalar> TextualGraph::weighted_out_degrees() const {
  std::vector<Scalar> degrees(static_cast<std::size_t>(vertex_count), 0.0);
  for (const Edge& e : edges) degrees[static_cast<std::size_t>(e.src)] += e.weight;
  return degrees;
}

bool TextualGraph::has_edge(VertexId src, VertexId dst) const {
  const Edge probe{src, dst, 0.0};
  auto it = std::lower_bound(edges.begin(), edges.end(), probe, [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  return it != edges.end() && it->src == src && it->dst == dst;
}

void TextualGraph::finalize() {
  if (vertex_count <= 0) throw DataError("graph has no vertices");
  if (texts.size() != static_cast<std::size_t>(vertex_count)) {
    throw DataError("graph: texts must cover every vertex");
  }
  if (labels.size() != static_cast<std::size_t>(vertex_count)) {
    labels.resize(static_cast<std::size_t>(vertex_count));
  }
  for (const Edge& e : edges) {
    if (e.src < 0 || e.src >= vertex_count || e.dst < 0 || e.dst >= vertex_count) {
      throw DataError("graph: edge endpoint out of range");
    }
  }
  std::map<std::pair<VertexId, VertexId>, Scalar> merged;
  for (const Edge& e : edges) {
    if (e.weight < 0) throw DataError("graph: negative edge weight");
    if (e.weight == 0) continue;
    merged[{e.src, e.dst}] += e.weight;
  }
  edges.clear();
  edges.reserve(merged.size());
  for (const auto& [key, weight] : merged) edges.push_back({key.first, key.second, weight});
}

TextualGraph load_graph(const std::string& edge_path, const std::string& text_path,
                        const std::optional<std::string>& label_path,
                        const LoadOptions& options) {
  GraphBuilder builder;
  builder.graph.directed = options.directed;

  {
    std::ifstream in(edge_path);
    if (!in) throw DataError("cannot open edge file: " + edge_path);
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
      if (line.empty() || line[0] == '#') continue;
      const auto fields = split_fields(line);
      if (fields.empty()) continue;
      const std::string where = edge_path + ":" + std::to_string(line_no);
      if (fields.size() < 2 || fields.size() > 3) {
        throw DataError(where + ": expected SRC DST [WEIGHT]");
      }
      const VertexId src = builder.intern(fields[0]);
      const VertexId dst = builder.intern(fields[1]);
      const Scalar weight = fields.size() == 3 ? parse_weight(fields[2], where) : Scalar{1};
      if (weight == 0) continue;  // absent edge
      builder.graph.edges.push_back({src, dst, weight});
      if (!options.directed && src != dst) {
        builder.graph.edges.push_back({dst, src, weight});
      }
    }
  }

  {
    std::ifstream in(text_path);
    if (!in) throw DataError("cannot open text file: " + text_path);
    std::string line;
    std::set<VertexId> seen;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
      auto fields = split_fields(line);
      if (fields.empty()) continue;
      const std::string where = text_path + ":" + std::to_string(line_no);
      const VertexId v = builder.intern(fields[0]);
      if (!seen.insert(v).second) {
        throw DataError(where + ": duplicate text entry for vertex '" + fields[0] + "'");
      }
      auto& tokens = builder.graph.texts[static_cast<std::size_t>(v)];
      tokens.assign(fields.begin() + 1, fields.end());
      if (options.lowercase) {
        for (auto& token : tokens) token = lowercased(token);
      }
    }
  }

  if (label_path) {
    std::ifstream in(*label_path);
    if (!in) throw DataError("cannot open label file: " + *label_path);
    std::unordered_map<std::string, int> label_ids;
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
      const auto fields = split_fields(line);
      if (fields.empty()) continue;
      const std::string where = *label_path + ":" + std::to_string(line_no);
      if (fields.size() != 2) throw DataError(where + ": expected VERTEX LABEL[,LABEL...]");
      const VertexId v = builder.intern(fields[0]);
      std::istringstream labels_in(fields[1]);
      std::string label;
      while (std::getline(labels_in, label, ',')) {
        if (label.empty()) throw DataError(where + ": empty label name");
        auto [it, inserted] = label_ids.try_emplace(label, static_cast<int>(label_ids.size()));
        if (inserted) builder.graph.label_names.push_back(label);
        builder.graph.labels[static_cast<std::size_t>(v)].push_back(it->second);
      }
    }
    for (auto& set : builder.graph.labels) {
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
    }
  }

  builder.graph.finalize();
  return builder.graph;
}

void save_graph(const TextualGraph& graph, const std::string& edge_path,
                const std::string& text_path, const std::optional<std::string>& label_path) {
  {
    std::ofstream out(edge_path);
    if (!out) throw DataError("cannot write edge file: " + edge_path);
    out.precision(17);
    for (const Edge& e : graph.edges) {
      if (!graph.directed && e.src > e.dst) continue;  // emit each pair once
      out << graph.vertex_names[static_cast<std::size_t>(e.src)] << '\t'
          << graph.vertex_names[static_cast<std::size_t>(e.dst)] << '\t' << e.weight << '\n';
    }
  }
  {
    std::ofstream out(text_path);
    if (!out) throw DataError("cannot write text file: " + text_path);
    for (VertexId v = 0; v < graph.vertex_count; ++v) {
      out << graph.vertex_names[static_cast<std::size_t>(v)];
      for (const auto& token : graph.texts[static_cast<std::size_t>(v)]) out << ' ' << token;
      out << '\n';
    }
  }
  if (label_path) {
    std::ofstream out(*label_path);
    if (!out) throw DataError("cannot write label file: " + *label_path);
    for (VertexId v = 0; v < graph.vertex_count; ++v) {
      const auto& set = graph.labels[static_cast<std::size_t>(v)];
      if (set.empty()) continue;
      out << graph.vertex_names[static_cast<std::size_t>(v)] << '\t';
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (i > 0) out << ',';
        out << graph.label_names[static_cast<std::size_t>(set[i])];
      }
      out << '\n';
    }
  }
}

std::vector<std::pair<std::string, std::vector<std::string>>> load_texts_file(
    const std::string& path, bool lowercase) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open text file: " + path);
  std::vector<std::pair<std::string, std::vector<std::string>>> result;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    std::vector<std::string> tokens(fields.begin() + 1, fields.end());
    if (lowercase) {
      for (auto& token : tokens) token = lowercased(token);
    }
    result.emplace_back(std::move(fields[0]), std::move(tokens));
  }
  return result;
}

}  // namespace textnet
