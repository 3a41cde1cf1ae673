#include "wirelogic/graph.h"

#include <algorithm>
#include <set>

#include "wirelogic/error.h"

namespace wirelogic {

VertexId Graph::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<VertexId>(labels_.size() - 1);
}

void Graph::add_edge(VertexId u, VertexId v, EdgeKind kind) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw InvalidGraph("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " references a vertex outside [0, " +
                       std::to_string(vertex_count()) + ")");
  }
  if (u == v) throw InvalidGraph("self-loop on vertex " + std::to_string(u));
  edges_.push_back({u, v, kind});
}

const std::string& Graph::label(VertexId v) const {
  if (v >= vertex_count()) throw InvalidGraph("no vertex " + std::to_string(v));
  return labels_[v];
}

Adjacency::Adjacency(const Graph& g) : out_(g.vertex_count()) {
  for (const Edge& e : g.edges()) {
    out_[e.u].push_back(e.v);
    if (e.kind == EdgeKind::Undirected) out_[e.v].push_back(e.u);
  }
  for (auto& list : out_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::optional<Path> dfs_path(const Adjacency& adj, VertexId start, VertexId goal) {
  if (start >= adj.size() || goal >= adj.size()) {
    throw InvalidGraph("query vertex out of range");
  }
  std::vector<bool> visited(adj.size(), false);
  // cursor[v]: index of the next neighbour of v still to examine. Neighbours
  // before it are already visited, so resuming there matches a fresh scan.
  std::vector<std::size_t> cursor(adj.size(), 0);
  Path stack{start};
  visited[start] = true;
  while (!stack.empty()) {
    VertexId top = stack.back();
    if (top == goal) return stack;
    auto next = adj.neighbours(top);
    std::size_t& i = cursor[top];
    while (i < next.size() && visited[next[i]]) ++i;
    if (i < next.size()) {
      VertexId v = next[i];
      visited[v] = true;
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return std::nullopt;
}

std::optional<Path> dfs_path(const Graph& g, VertexId start, VertexId goal) {
  return dfs_path(Adjacency(g), start, goal);
}

std::vector<bool> reachable_from(const Adjacency& adj, std::span<const VertexId> starts) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<VertexId> stack;
  for (VertexId s : starts) {
    if (s >= adj.size()) throw InvalidGraph("query vertex out of range");
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : adj.neighbours(u)) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

bool is_valid_path(const Graph& g, const Path& p, VertexId start, VertexId goal) {
  if (p.empty() || p.front() != start || p.back() != goal) return false;
  std::set<VertexId> seen(p.begin(), p.end());
  if (seen.size() != p.size()) return false;
  Adjacency adj(g);
  for (std::size_t i = 1; i < p.size(); ++i) {
    auto next = adj.neighbours(p[i - 1]);
    if (!std::binary_search(next.begin(), next.end(), p[i])) return false;
  }
  return true;
}

}  // namespace wirelogic
