#include "egs/graph.hpp"

#include <algorithm>
#include <numeric>

namespace egs {

namespace {

std::string join_lines(const std::vector<std::string>& xs) {
  std::string s = "invalid graph:";
  for (const auto& x : xs) s += "\n  " + x;
  return s;
}

std::string vname(std::size_t i) { return "v" + std::to_string(i + 1); }

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(join_lines(violations)), violations_(std::move(violations)) {}

TrailCapExceeded::TrailCapExceeded(std::size_t from, std::size_t to, std::size_t cap)
    : std::runtime_error("trail enumeration between " + vname(from) + " and " + vname(to) + " exceeded the cap of " +
                         std::to_string(cap) + " trails") {}

LabeledGraph::LabeledGraph(RingDescriptor ring, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : ring_(std::move(ring)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  adjacency_.resize(vertices_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& [u, v, label] = edges_[e];
    if (u >= vertices_.size() || v >= vertices_.size()) continue;  // reported by validate()
    adjacency_[u].push_back({e, v});
    if (u != v) adjacency_[v].push_back({e, u});
  }
}

LabeledGraph LabeledGraph::validated(RingDescriptor ring, std::vector<Vertex> vertices, std::vector<Edge> edges) {
  LabeledGraph g(std::move(ring), std::move(vertices), std::move(edges));
  auto violations = g.validate();
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return g;
}

std::vector<std::string> LabeledGraph::validate() const {
  std::vector<std::string> out;
  const std::size_t n = vertices_.size();
  if (n == 0) out.push_back("graph has no vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& lbl = vertices_[i].label;
    if (!(lbl.ring() == ring_))
      out.push_back("vertex " + vname(i) + ": label is not in " + ring_.to_string());
    else if (lbl.is_zero())
      out.push_back("vertex " + vname(i) + ": label is zero");
  }
  bool endpoints_ok = true;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& [u, v, lbl] = edges_[e];
    const std::string id = "edge e" + std::to_string(e + 1);
    if (u >= n || v >= n) {
      out.push_back(id + ": endpoint out of range");
      endpoints_ok = false;
      continue;
    }
    if (u == v) out.push_back(id + ": self-loop at " + vname(u));
    if (!(lbl.ring() == ring_))
      out.push_back(id + ": label is not in " + ring_.to_string());
    else if (lbl.is_zero())
      out.push_back(id + ": label is zero");
  }
  if (n > 0 && endpoints_ok) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (const auto& inc : adjacency_[x])
        if (!seen[inc.other]) {
          seen[inc.other] = true;
          stack.push_back(inc.other);
        }
    }
    std::string missing;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen[i]) missing += (missing.empty() ? "" : ", ") + vname(i);
    if (!missing.empty()) out.push_back("disconnected: " + missing + " not reachable from v1");
  }
  return out;
}

LabeledGraph LabeledGraph::permuted(const std::vector<std::size_t>& order) const {
  std::vector<std::size_t> where(order.size());
  std::vector<Vertex> vs;
  for (std::size_t k = 0; k < order.size(); ++k) {
    where[order[k]] = k;
    vs.push_back(vertices_[order[k]]);
  }
  std::vector<Edge> es;
  for (const auto& e : edges_) es.push_back({where[e.u], where[e.v], e.label});
  return LabeledGraph(ring_, std::move(vs), std::move(es));
}

LabeledGraph LabeledGraph::with_unit_vertex_labels() const {
  auto vs = vertices_;
  for (auto& v : vs) v.label = RingElement::one(ring_);
  return LabeledGraph(ring_, std::move(vs), edges_);
}

namespace {

class TrailWalker {
 public:
  TrailWalker(const LabeledGraph& g, std::size_t from, std::size_t to, std::size_t cap)
      : g_(g), from_(from), to_(to), cap_(cap), used_(g.num_edges(), false) {}

  std::vector<Trail> collect() {
    current_.vertices.push_back(from_);
    walk(from_);
    return std::move(found_);
  }

 private:
  void walk(std::size_t at) {
    for (const auto& [edge, other] : g_.incident(at)) {
      if (used_[edge]) continue;
      used_[edge] = true;
      current_.edges.push_back(edge);
      current_.vertices.push_back(other);
      if (other == to_) {
        if (found_.size() == cap_) throw TrailCapExceeded(from_, to_, cap_);
        found_.push_back(current_);
      }
      walk(other);
      current_.vertices.pop_back();
      current_.edges.pop_back();
      used_[edge] = false;
    }
  }

  const LabeledGraph& g_;
  std::size_t from_, to_, cap_;
  std::vector<bool> used_;
  Trail current_;
  std::vector<Trail> found_;
};

std::vector<Trail> keep_maximal(std::vector<Trail> trails, std::size_t num_edges) {
  std::vector<std::vector<bool>> sets;
  for (const auto& t : trails) {
    std::vector<bool> s(num_edges, false);
    for (auto e : t.edges) s[e] = true;
    sets.push_back(std::move(s));
  }
  auto strictly_inside = [&](std::size_t a, std::size_t b) {
    if (trails[a].edges.size() >= trails[b].edges.size()) return false;
    for (auto e : trails[a].edges)
      if (!sets[b][e]) return false;
    return true;
  };
  std::vector<Trail> out;
  for (std::size_t a = 0; a < trails.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < trails.size() && !dominated; ++b) dominated = strictly_inside(a, b);
    if (!dominated) out.push_back(trails[a]);
  }
  return out;
}

// Depth-first accumulation of lcm over trail gcds. A subtree is skipped once its
// prefix gcd divides the running lcm: every extension's gcd divides the prefix gcd.
class ConstraintWalker {
 public:
  ConstraintWalker(const LabeledGraph& g, std::size_t from, std::size_t to, std::size_t cap)
      : g_(g), from_(from), to_(to), cap_(cap), used_(g.num_edges(), false),
        lcm_(RingElement::one(g.ring())) {}

  RingElement run() {
    walk(from_, RingElement::zero(g_.ring()));
    return lcm_;
  }

 private:
  void walk(std::size_t at, const RingElement& prefix_gcd) {
    for (const auto& [edge, other] : g_.incident(at)) {
      if (used_[edge]) continue;
      RingElement g = gcd(prefix_gcd, g_.edge_label(edge));
      if (divides(g, lcm_)) continue;
      used_[edge] = true;
      if (other == to_) {
        if (++count_ > cap_) throw TrailCapExceeded(from_, to_, cap_);
        lcm_ = lcm(lcm_, g);
      }
      walk(other, g);
      used_[edge] = false;
    }
  }

  const LabeledGraph& g_;
  std::size_t from_, to_, cap_;
  std::vector<bool> used_;
  RingElement lcm_;
  std::size_t count_ = 0;
};

}  // namespace

std::vector<Trail> trails_between(const LabeledGraph& g, std::size_t j, std::size_t i, const TrailOptions& options) {
  if (i == j) throw std::invalid_argument("trails_between needs distinct endpoints");
  auto trails = TrailWalker(g, j, i, options.max_trails).collect();
  if (options.mode == TrailMode::maximal) trails = keep_maximal(std::move(trails), g.num_edges());
  return trails;
}

RingElement trail_constraint(const LabeledGraph& g, std::size_t j, std::size_t i, const TrailOptions& options) {
  if (i == j) throw std::invalid_argument("trail_constraint needs distinct endpoints");
  if (options.mode == TrailMode::all) return ConstraintWalker(g, j, i, options.max_trails).run();

  std::vector<RingElement> gcds;
  for (const auto& t : trails_between(g, j, i, options)) {
    RingElement x = RingElement::zero(g.ring());
    for (auto e : t.edges) x = gcd(x, g.edge_label(e));
    if (std::find(gcds.begin(), gcds.end(), x) == gcds.end()) gcds.push_back(std::move(x));
  }
  return lcm_many(gcds, g.ring());
}

TrailTable::TrailTable(const LabeledGraph& g, const TrailOptions& options, Execution exec)
    : n_(g.num_vertices()), values_(n_ * n_, RingElement::one(g.ring())) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = j + 1; i < n_; ++i) pairs.emplace_back(j, i);

  std::vector<RingElement> results(pairs.size(), RingElement::zero(g.ring()));
  if (exec == Execution::serial) {
    for (std::size_t k = 0; k < pairs.size(); ++k)
      results[k] = trail_constraint(g, pairs[k].first, pairs[k].second, options);
  } else {
    ExceptionSlot slot;
    const auto count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k)
      slot.run([&] { results[k] = trail_constraint(g, pairs[k].first, pairs[k].second, options); });
    slot.rethrow();
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [j, i] = pairs[k];
    values_[j * n_ + i] = results[k];
    values_[i * n_ + j] = results[k];
  }
}

}  // namespace egs
