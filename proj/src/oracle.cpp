#include "egs/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace egs::oracle {

namespace {

void require_integers(const LabeledGraph& g) {
  if (!g.ring().is_integers()) throw std::domain_error("brute-force oracle needs an integer instance");
}

std::vector<long> primes_for(std::size_t count, long bound) {
  std::vector<long> out;
  for (long p = 2; out.size() < count || p <= bound; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(p);
  }
  return out;
}

mpz_class int_value(const RingElement& a) { return a.constant_value().get_num(); }

}  // namespace

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % range;
  }
}

LabeledGraph random_instance(const InstanceSpec& spec) {
  if (spec.vertices == 0) throw std::invalid_argument("instance needs at least one vertex");
  if (spec.label_bound < 1) throw std::invalid_argument("label bound must be positive");
  std::mt19937_64 rng(spec.seed);
  const std::size_t n = spec.vertices;
  const auto ring = RingDescriptor::integers();

  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t parent = draw(rng, k);
    adjacent[parent][k] = adjacent[k][parent] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (adjacent[a][b]) continue;
      const double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (coin < spec.edge_density) adjacent[a][b] = adjacent[b][a] = true;
    }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (adjacent[a][b]) pairs.emplace_back(a, b);

  std::vector<long> labels(n + pairs.size());
  if (spec.pairwise_coprime) {
    auto primes = primes_for(labels.size(), spec.label_bound);
    for (std::size_t k = primes.size(); k > 1; --k) std::swap(primes[k - 1], primes[draw(rng, k)]);
    std::copy_n(primes.begin(), labels.size(), labels.begin());
  } else {
    for (auto& l : labels) l = 1 + static_cast<long>(draw(rng, static_cast<std::uint64_t>(spec.label_bound)));
  }

  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < n; ++v)
    vertices.push_back({"v" + std::to_string(v + 1), RingElement::integer(ring, labels[v])});
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < pairs.size(); ++e)
    edges.push_back({pairs[e].first, pairs[e].second, RingElement::integer(ring, labels[n + e])});
  return LabeledGraph::validated(ring, std::move(vertices), std::move(edges));
}

namespace {

long valuation(mpz_class a, long p) {
  a = abs(a);
  long v = 0;
  while (a != 0 && mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p))) {
    a /= p;
    ++v;
  }
  return v;
}

long ipow(long p, long e) {
  long r = 1;
  while (e-- > 0) r *= p;
  return r;
}

// The instance seen modulo p^K, K the largest p-valuation among the labels.
// Ideals of Z/p^K form a chain, so each label reduces to its exponent.
struct LocalInstance {
  long p = 0, k = 0, modulus = 1;
  std::vector<long> vertex_exp;  // v_p(m_v)
  std::vector<long> edge_exp;    // v_p(r_e)
};

// Decides whether f_s = 0 (s < i), f_i = t extends to a spline modulo p^K,
// trying every residue at each free vertex that a later edge can distinguish.
class LocalExtender {
 public:
  LocalExtender(const LabeledGraph& g, const LocalInstance& loc, std::size_t i, const std::vector<std::size_t>& order)
      : g_(g), loc_(loc), i_(i), order_(order) {}

  /// Local values of a witness, or nullopt.
  std::optional<std::vector<long>> solve(long t) const {
    const std::size_t n = g_.num_vertices();
    std::vector<long> f(n, 0);
    std::vector<bool> set(n, false);
    for (std::size_t s = 0; s <= i_; ++s) set[s] = true;
    f[i_] = t % loc_.modulus;
    if (f[i_] % ipow(loc_.p, loc_.vertex_exp[i_])) return std::nullopt;
    for (std::size_t e = 0; e < g_.num_edges(); ++e) {
      const auto& edge = g_.edges()[e];
      if (set[edge.u] && set[edge.v] && (f[edge.u] - f[edge.v]) % ipow(loc_.p, loc_.edge_exp[e])) return std::nullopt;
    }
    if (!extend(f, set, 0)) return std::nullopt;
    return f;
  }

 private:
  bool extend(std::vector<long>& f, std::vector<bool>& set, std::size_t depth) const {
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    // strongest constraint first, then check the weaker ones against it
    long best_exp = loc_.vertex_exp[v], base = 0, later = 0;
    for (const auto& [edge, other] : g_.incident(v)) {
      if (!set[other]) {
        later = std::max(later, loc_.edge_exp[edge]);
      } else if (loc_.edge_exp[edge] > best_exp) {
        best_exp = loc_.edge_exp[edge];
        base = f[other];
      }
    }
    const long step = ipow(loc_.p, best_exp);
    base %= step;
    if (base % ipow(loc_.p, loc_.vertex_exp[v])) return false;
    for (const auto& [edge, other] : g_.incident(v))
      if (set[other] && (base - f[other]) % ipow(loc_.p, loc_.edge_exp[edge])) return false;
    const long branches = later > best_exp ? ipow(loc_.p, later - best_exp) : 1;
    set[v] = true;
    for (long k = 0; k < branches; ++k) {
      f[v] = base + step * k;
      if (extend(f, set, depth + 1)) return true;
    }
    set[v] = false;
    return false;
  }

  const LabeledGraph& g_;
  const LocalInstance& loc_;
  std::size_t i_;
  const std::vector<std::size_t>& order_;
};

// Free vertices in order of most already-placed neighbours.
std::vector<std::size_t> placement_order(const LabeledGraph& g, std::size_t i) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> placed(n, false);
  for (std::size_t s = 0; s <= i; ++s) placed[s] = true;
  std::vector<std::size_t> order;
  for (std::size_t step = i + 1; step < n; ++step) {
    std::size_t best = n;
    long best_score = -1;
    for (std::size_t v = i + 1; v < n; ++v) {
      if (placed[v]) continue;
      long score = 0;
      for (const auto& inc : g.incident(v)) score += placed[inc.other];
      if (score > best_score) {
        best = v;
        best_score = score;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

std::vector<LocalInstance> localize(const LabeledGraph& g) {
  std::vector<mpz_class> labels;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) labels.push_back(int_value(g.vertex_label(v)));
  for (std::size_t e = 0; e < g.num_edges(); ++e) labels.push_back(int_value(g.edge_label(e)));
  std::vector<long> primes;
  for (auto a : labels) {
    a = abs(a);
    for (long p = 2; a > 1; ++p) {
      if (mpz_class(p) * p > a) p = a.get_si();
      if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p))) {
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
        while (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p))) a /= p;
      }
    }
  }
  std::sort(primes.begin(), primes.end());
  std::vector<LocalInstance> out;
  for (long p : primes) {
    LocalInstance loc;
    loc.p = p;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) loc.vertex_exp.push_back(valuation(labels[v], p));
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      loc.edge_exp.push_back(valuation(labels[g.num_vertices() + e], p));
    for (long x : loc.vertex_exp) loc.k = std::max(loc.k, x);
    for (long x : loc.edge_exp) loc.k = std::max(loc.k, x);
    if (loc.k > 20) throw std::domain_error("label prime powers too large for the brute-force oracle");
    loc.modulus = ipow(p, loc.k);
    out.push_back(std::move(loc));
  }
  return out;
}

}  // namespace

std::optional<RingElement> brute_minimal_leading_entry(const LabeledGraph& g, std::size_t i, const mpz_class& bound,
                                                       Execution exec) {
  require_integers(g);
  if (i >= g.num_vertices()) throw std::out_of_range("vertex index out of range");
  const auto& ring = g.ring();
  const auto locals = localize(g);
  const auto order = placement_order(g, i);

  // feasible[k][r]: residue r of t modulo p_k^K extends locally
  std::vector<std::vector<char>> feasible;
  std::vector<std::pair<std::size_t, long>> jobs;
  for (std::size_t k = 0; k < locals.size(); ++k) {
    feasible.emplace_back(static_cast<std::size_t>(locals[k].modulus), 0);
    for (long r = 0; r < locals[k].modulus; ++r) jobs.emplace_back(k, r);
  }
  auto fill = [&](std::size_t job) {
    const auto [k, r] = jobs[job];
    feasible[k][static_cast<std::size_t>(r)] = LocalExtender(g, locals[k], i, order).solve(r).has_value();
  };
  if (exec == Execution::serial) {
    for (std::size_t j = 0; j < jobs.size(); ++j) fill(j);
  } else {
    ExceptionSlot slot;
    const long count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < count; ++j) slot.run([&] { fill(static_cast<std::size_t>(j)); });
    slot.rethrow();
  }

  for (mpz_class t = 1; t <= bound; ++t) {
    bool ok = true;
    for (std::size_t k = 0; k < locals.size() && ok; ++k) {
      const mpz_class r = t % locals[k].modulus;
      ok = feasible[k][r.get_ui()];
    }
    if (!ok) continue;

    // Glue the local witnesses with crt and check the result is a spline.
    const std::size_t n = g.num_vertices();
    Components f(n, RingElement::zero(ring));
    f[i] = RingElement::constant(ring, mpq_class(t));
    std::vector<std::vector<long>> local_values;
    for (const auto& loc : locals) local_values.push_back(*LocalExtender(g, loc, i, order).solve(mpz_class(t % loc.modulus).get_si()));
    for (std::size_t v = i + 1; v < n; ++v) {
      std::vector<Congruence> system;
      for (std::size_t k = 0; k < locals.size(); ++k)
        system.push_back({RingElement::integer(ring, local_values[k][v]), RingElement::integer(ring, locals[k].modulus)});
      if (system.empty()) continue;
      const CrtResult glued = crt(system);
      if (!glued.solvable()) throw std::logic_error("coprime local moduli reported incompatible");
      f[v] = glued.solution->solution;
    }
    if (!is_spline(g, f)) throw std::logic_error("glued oracle witness is not a spline");
    return RingElement::constant(ring, mpq_class(t));
  }
  return std::nullopt;
}

namespace {

class SmallSplineEnumerator {
 public:
  SmallSplineEnumerator(const LabeledGraph& g, const mpz_class& bound) : g_(g), n_(g.num_vertices()) {
    for (std::size_t v = 0; v < n_; ++v) {
      const mpz_class m = abs(int_value(g.vertex_label(v)));
      std::vector<mpz_class> vals;
      for (mpz_class x = -(bound / m) * m; x <= bound; x += m) vals.push_back(x);
      values_.push_back(std::move(vals));
      std::vector<std::pair<std::size_t, mpz_class>> back;  // edges to earlier vertices
      for (const auto& [edge, other] : g.incident(v))
        if (other < v) back.emplace_back(other, int_value(g.edge_label(edge)));
      earlier_.push_back(std::move(back));
    }
  }

  std::size_t first_choices() const { return values_[0].size(); }

  void run_from(std::size_t first_choice, std::vector<std::vector<mpz_class>>& out) const {
    std::vector<mpz_class> f(n_);
    f[0] = values_[0][first_choice];
    walk(f, 1, out);
  }

 private:
  void walk(std::vector<mpz_class>& f, std::size_t v, std::vector<std::vector<mpz_class>>& out) const {
    if (v == n_) {
      out.push_back(f);
      return;
    }
    for (const auto& x : values_[v]) {
      bool ok = true;
      for (const auto& [u, r] : earlier_[v]) {
        const mpz_class diff = x - f[u];
        if (!mpz_divisible_p(diff.get_mpz_t(), r.get_mpz_t())) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      f[v] = x;
      walk(f, v + 1, out);
    }
  }

  const LabeledGraph& g_;
  std::size_t n_;
  std::vector<std::vector<mpz_class>> values_;
  std::vector<std::vector<std::pair<std::size_t, mpz_class>>> earlier_;
};

}  // namespace

std::vector<Components> enumerate_small_splines(const LabeledGraph& g, const mpz_class& bound, Execution exec) {
  require_integers(g);
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  const SmallSplineEnumerator en(g, bound);
  std::vector<std::vector<std::vector<mpz_class>>> parts(en.first_choices());
  if (exec == Execution::serial) {
    for (std::size_t c = 0; c < parts.size(); ++c) en.run_from(c, parts[c]);
  } else {
    const long count = static_cast<long>(parts.size());
#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < count; ++c) en.run_from(static_cast<std::size_t>(c), parts[static_cast<std::size_t>(c)]);
  }
  std::vector<Components> out;
  for (const auto& part : parts)
    for (const auto& f : part) {
      Components comp;
      for (const auto& x : f) comp.push_back(RingElement::constant(g.ring(), mpq_class(x)));
      out.push_back(std::move(comp));
    }
  return out;
}

}  // namespace egs::oracle
