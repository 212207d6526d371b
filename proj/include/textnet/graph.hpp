#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "textnet/types.hpp"

namespace textnet {

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  Scalar weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed weighted graph with a token sequence (and optional label set)
/// per vertex. Immutable once finalized; vertex ids are dense in [0, N).
struct TextualGraph {
  VertexId vertex_count = 0;
  bool directed = true;
  std::vector<Edge> edges;                          // sorted by (src, dst), weights > 0, no duplicates
  std::vector<std::vector<std::string>> texts;      // one (possibly empty) sequence per vertex
  std::vector<std::vector<int>> labels;             // sorted label-id sets, empty when unlabeled
  std::vector<std::string> label_names;             // label id -> external name
  std::vector<std::string> vertex_names;            // vertex id -> external name
  std::unordered_map<std::string, VertexId> vertex_ids;

  VertexId id_of(const std::string& name) const {
    auto it = vertex_ids.find(name);
    return it == vertex_ids.end() ? -1 : it->second;
  }

  /// Sum of outgoing edge weights per vertex.
  std::vector<Scalar> weighted_out_degrees() const;

  bool has_edge(VertexId src, VertexId dst) const;  // binary search over sorted edges

  /// Merges duplicate (src, dst) pairs by weight summation, drops
  /// zero-weight entries, sorts, and checks invariants. Must be called
  /// after assembling a graph by hand.
  void finalize();
};

struct LoadOptions {
  bool directed = true;
  bool lowercase = true;  // applied to tokens, not vertex names
};

/// Reads the edge / text / optional label files. Undirected inputs are
/// expanded into two opposite directed edges of equal weight (self-loops
/// stay single). Vertices may be introduced by any of the files; those
/// absent from the edge file get degree 0.
TextualGraph load_graph(const std::string& edge_path, const std::string& text_path,
                        const std::optional<std::string>& label_path = std::nullopt,
                        const LoadOptions& options = {});

/// Writes a graph back in the ingestion formats. Undirected graphs emit
/// each edge pair once (canonical src <= dst). Reloading with the same
/// directedness reproduces the graph exactly.
void save_graph(const TextualGraph& graph, const std::string& edge_path,
                const std::string& text_path,
                const std::optional<std::string>& label_path = std::nullopt);

/// Standalone text-file reader for commands that work without an edge file.
/// Returns (vertex name, tokens) in file order.
std::vector<std::pair<std::string, std::vector<std::string>>> load_texts_file(
    const std::string& path, bool lowercase = true);

}  // namespace textnet
