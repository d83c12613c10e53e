#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "egs/execution.hpp"
#include "egs/rings.hpp"

namespace egs {

struct Vertex {
  std::string name;
  RingElement label;  // m_v, generator of the vertex module m_v R
};

struct Edge {
  std::size_t u;
  std::size_t v;
  RingElement label;  // r_e, the edge module is R / r_e R
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class TrailCapExceeded : public std::runtime_error {
 public:
  TrailCapExceeded(std::size_t from, std::size_t to, std::size_t cap);
};

/// Finite undirected multigraph with vertex and edge labels. Vertex order is
/// part of the object: index 0 is v_1.
class LabeledGraph {
 public:
  LabeledGraph(RingDescriptor ring, std::vector<Vertex> vertices, std::vector<Edge> edges);

  /// Builds the graph and throws ValidationError unless validate() is empty.
  static LabeledGraph validated(RingDescriptor ring, std::vector<Vertex> vertices, std::vector<Edge> edges);

  const RingDescriptor& ring() const { return ring_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const RingElement& vertex_label(std::size_t i) const { return vertices_[i].label; }
  const RingElement& edge_label(std::size_t e) const { return edges_[e].label; }

  struct Incidence {
    std::size_t edge;
    std::size_t other;
  };
  /// Incident edges of vertex i in input edge order.
  const std::vector<Incidence>& incident(std::size_t i) const { return adjacency_[i]; }

  /// Every invariant violation; empty when the graph is valid.
  std::vector<std::string> validate() const;

  /// Same graph with vertices reordered: new vertex k is old vertex order[k].
  LabeledGraph permuted(const std::vector<std::size_t>& order) const;
  /// Same graph with every vertex label replaced by 1.
  LabeledGraph with_unit_vertex_labels() const;

 private:
  RingDescriptor ring_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

struct Trail {
  std::vector<std::size_t> vertices;  // from v_j to v_i, one more than edges
  std::vector<std::size_t> edges;
};

enum class TrailMode {
  all,      // every trail from v_j to v_i
  maximal,  // only trails whose edge set is not strictly inside another such trail's
};

struct TrailOptions {
  std::size_t max_trails = 1'000'000;
  TrailMode mode = TrailMode::all;
};

/// All trails (no repeated edge) from v_j to v_i, in depth-first order over the
/// input edge order. Throws TrailCapExceeded past options.max_trails.
std::vector<Trail> trails_between(const LabeledGraph& g, std::size_t j, std::size_t i,
                                  const TrailOptions& options = {});

/// lcm over trails from v_j to v_i of the gcd of the trail's edge labels.
RingElement trail_constraint(const LabeledGraph& g, std::size_t j, std::size_t i,
                             const TrailOptions& options = {});

/// Symmetric table of trail_constraint over all vertex pairs (diagonal unused).
class TrailTable {
 public:
  TrailTable(const LabeledGraph& g, const TrailOptions& options = {}, Execution exec = Execution::parallel);
  const RingElement& operator()(std::size_t j, std::size_t i) const { return values_[j * n_ + i]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<RingElement> values_;
};

}  // namespace egs
