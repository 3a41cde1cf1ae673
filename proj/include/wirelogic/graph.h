#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wirelogic {

using VertexId = std::uint32_t;

enum class EdgeKind : std::uint8_t { Undirected, Directed };

struct Edge {
  VertexId u;
  VertexId v;
  EdgeKind kind;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Labeled vertices with dense ids in [0, vertex_count()). Undirected edges
// are traversable both ways, directed ones only u -> v. Self-loops are
// rejected.
class Graph {
 public:
  Graph() = default;

  VertexId add_vertex(std::string label);
  void add_edge(VertexId u, VertexId v, EdgeKind kind);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::string& label(VertexId v) const;
  std::span<const Edge> edges() const noexcept { return edges_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

// Out-neighbours of every vertex in ascending id order, duplicates removed.
class Adjacency {
 public:
  explicit Adjacency(const Graph& g);

  std::size_t size() const noexcept { return out_.size(); }
  std::span<const VertexId> neighbours(VertexId v) const { return out_[v]; }

 private:
  std::vector<std::vector<VertexId>> out_;
};

using Path = std::vector<VertexId>;

// Stack-based depth-first search from `start` toward `goal`. At every step
// the lowest-numbered unvisited out-neighbour of the stack top is pushed;
// when none is left the top is popped. The stack at the moment the goal
// surfaces is the returned path. Deterministic.
std::optional<Path> dfs_path(const Adjacency& adj, VertexId start, VertexId goal);
std::optional<Path> dfs_path(const Graph& g, VertexId start, VertexId goal);

// Vertices reachable from any of `starts` (the starts included).
std::vector<bool> reachable_from(const Adjacency& adj, std::span<const VertexId> starts);

// True when consecutive vertices are joined by a traversable edge, the
// path has no repeats, and it runs from `start` to `goal`.
bool is_valid_path(const Graph& g, const Path& p, VertexId start, VertexId goal);

}  // namespace wirelogic
