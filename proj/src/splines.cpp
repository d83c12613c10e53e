#include "egs/splines.hpp"

#include <algorithm>

namespace egs {

namespace {

void require_components(const LabeledGraph& g, std::span<const RingElement> f, const char* what) {
  if (f.size() != g.num_vertices())
    throw DimensionError(std::string(what) + " has " + std::to_string(f.size()) + " components, graph has " +
                         std::to_string(g.num_vertices()) + " vertices");
  for (const auto& x : f)
    if (!(x.ring() == g.ring())) throw DimensionError(std::string(what) + " is not over " + g.ring().to_string());
}

void require_square(const LabeledGraph& g, const SplineMatrix& ms) {
  if (ms.size() != g.num_vertices())
    throw DimensionError("expected " + std::to_string(g.num_vertices()) + " splines, got " + std::to_string(ms.size()));
  for (const auto& c : ms.columns()) require_components(g, c, "spline");
}

}  // namespace

SplineReport check_spline(const LabeledGraph& g, std::span<const RingElement> f) {
  require_components(g, f, "candidate");
  SplineReport report;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (!divides(g.vertex_label(v), f[v]))
      report.violations.push_back("v" + std::to_string(v + 1) + ": " + format_element(f[v]) + " not in (" +
                                  format_element(g.vertex_label(v)) + ")");
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edges()[e];
    if (!divides(edge.label, f[edge.u] - f[edge.v]))
      report.violations.push_back("e" + std::to_string(e + 1) + " {v" + std::to_string(edge.u + 1) + ",v" +
                                  std::to_string(edge.v + 1) + "}: difference not in (" + format_element(edge.label) +
                                  ")");
  }
  return report;
}

SplineMatrix::SplineMatrix(std::vector<Components> columns) : columns_(std::move(columns)) {
  for (const auto& c : columns_)
    if (c.size() != columns_.front().size()) throw DimensionError("splines have different lengths");
}

Matrix SplineMatrix::to_matrix(const RingDescriptor& ring) const {
  const std::size_t n = columns_.size();
  Matrix m(ring, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (columns_[k].size() != n) throw DimensionError("spline matrix is not square");
    for (std::size_t v = 0; v < n; ++v) m(n - 1 - v, k) = columns_[k][v];
  }
  return m;
}

QhatBreakdown qhat_breakdown(const LabeledGraph& g, const TrailOptions& options, Execution exec) {
  const std::size_t n = g.num_vertices();
  const auto& ring = g.ring();
  const TrailTable table(g, options, exec);
  QhatBreakdown out{{}, RingElement::one(ring), {}, RingElement::one(ring), {}, RingElement::one(ring)};
  for (std::size_t i = 0; i < n; ++i) {
    RingElement upper = g.vertex_label(i);  // [m_i, {(m_j, [P_ji]) : j > i}]
    for (std::size_t j = i + 1; j < n; ++j) upper = lcm(upper, gcd(g.vertex_label(j), table(j, i)));
    RingElement lower = RingElement::one(ring);  // [{[P_si]} : s < i]
    for (std::size_t s = 0; s < i; ++s) lower = lcm(lower, table(s, i));

    RingElement component = lcm(upper, lower);
    RingElement h = exact_div(upper, gcd(upper, lower));
    out.qhat *= component;
    out.classical_qg *= lower;
    out.h_factor *= h;
    out.components.push_back(std::move(component));
    out.classical_components.push_back(std::move(lower));
    out.h_components.push_back(std::move(h));
  }
  out.qhat = normalize(out.qhat);
  out.classical_qg = normalize(out.classical_qg);
  out.h_factor = normalize(out.h_factor);
  return out;
}

RingElement qhat_component(const LabeledGraph& g, std::size_t i, const TrailOptions& options) {
  RingElement q = normalize(g.vertex_label(i));
  for (std::size_t j = 0; j < g.num_vertices(); ++j) {
    if (j == i) continue;
    const RingElement t = trail_constraint(g, j, i, options);
    q = lcm(q, j > i ? gcd(g.vertex_label(j), t) : t);
  }
  return q;
}

std::vector<RingElement> qhat_components(const LabeledGraph& g, const TrailOptions& options, Execution exec) {
  return qhat_breakdown(g, options, exec).components;
}

RingElement qhat(const LabeledGraph& g, const TrailOptions& options, Execution exec) {
  return qhat_breakdown(g, options, exec).qhat;
}

RingElement classical_qg(const LabeledGraph& g, const TrailOptions& options) {
  return qhat(g.with_unit_vertex_labels(), options);
}

RingElement h_factor(const LabeledGraph& g, const TrailOptions& options) {
  return qhat_breakdown(g, options).h_factor;
}

RingElement spline_determinant(const LabeledGraph& g, const SplineMatrix& ms, Execution exec) {
  require_square(g, ms);
  return determinant(ms.to_matrix(g.ring()), exec);
}

bool labels_pairwise_coprime(const LabeledGraph& g) {
  std::vector<RingElement> labels;
  for (const auto& v : g.vertices()) labels.push_back(v.label);
  for (const auto& e : g.edges()) labels.push_back(e.label);
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (!is_unit(gcd(labels[a], labels[b]))) return false;
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "Certified";
    case Verdict::refuted_not_splines: return "RefutedNotSplines";
    case Verdict::refuted_dependent: return "RefutedDependent";
    case Verdict::refuted_by_coprime_converse: return "RefutedByCoprimeConverse";
    case Verdict::inconclusive: return "Inconclusive";
  }
  return "?";
}

BasisCertificate certify_basis(const LabeledGraph& g, const SplineMatrix& ms, const TrailOptions& options) {
  require_square(g, ms);
  BasisCertificate cert{Verdict::inconclusive, spline_determinant(g, ms), qhat(g, options), std::nullopt, {}};
  for (std::size_t k = 0; k < ms.size(); ++k)
    if (!is_spline(g, ms.column(k))) cert.failing_columns.push_back(k);
  if (!cert.failing_columns.empty()) {
    cert.verdict = Verdict::refuted_not_splines;
  } else if (cert.determinant.is_zero()) {
    cert.verdict = Verdict::refuted_dependent;
  } else if (auto u = associate_unit(cert.determinant, cert.qhat)) {
    cert.verdict = Verdict::certified;
    cert.unit = std::move(u);
  } else if (g.ring().is_pid() || labels_pairwise_coprime(g)) {
    // The determinant criterion is also necessary in these two cases.
    cert.verdict = Verdict::refuted_by_coprime_converse;
  }
  return cert;
}

CramerSolver::CramerSolver(const LabeledGraph& g, const SplineMatrix& ms)
    : ring_(g.ring()), basis_(ms), n_(g.num_vertices()), det_(RingElement::zero(g.ring())) {
  require_square(g, ms);
  const Matrix a = ms.to_matrix(ring_);
  det_ = egs::determinant(a);
  cofactor_.assign(n_ * n_, RingElement::zero(ring_));
  if (n_ == 1) {
    cofactor_[0] = RingElement::one(ring_);
    return;
  }
  ExceptionSlot slot;
  const long total = static_cast<long>(n_ * n_);
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < total; ++idx) {
    slot.run([&] {
      const std::size_t r = static_cast<std::size_t>(idx) / n_, c = static_cast<std::size_t>(idx) % n_;
      Matrix minor(ring_, n_ - 1, n_ - 1);
      for (std::size_t rr = 0, mr = 0; rr < n_; ++rr) {
        if (rr == r) continue;
        for (std::size_t cc = 0, mc = 0; cc < n_; ++cc) {
          if (cc == c) continue;
          minor(mr, mc++) = a(rr, cc);
        }
        ++mr;
      }
      RingElement d = egs::determinant(minor, Execution::serial);
      cofactor_[static_cast<std::size_t>(idx)] = (r + c) % 2 ? -d : d;
    });
  }
  slot.rethrow();
}

std::vector<RingElement> CramerSolver::replaced_determinants(std::span<const RingElement> f) const {
  if (f.size() != n_) throw DimensionError("vector length does not match the basis");
  std::vector<RingElement> x(n_, RingElement::zero(ring_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t r = 0; r < n_; ++r) {
      const auto& fr = f[n_ - 1 - r];
      if (!fr.is_zero()) x[i] += cofactor_[r * n_ + i] * fr;
    }
  return x;
}

ExpressionResult CramerSolver::express(std::span<const RingElement> f) const {
  if (det_.is_zero()) throw std::domain_error("basis determinant is zero");
  const auto x = replaced_determinants(f);
  ExpressionResult out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (auto c = try_exact_div(x[i], det_)) {
      out.coefficients.push_back(std::move(*c));
      continue;
    }
    const RingElement g = gcd(x[i], det_);
    auto [u, den] = split_unit(exact_div(det_, g));
    out.obstructions.push_back({i, exact_div(exact_div(x[i], g), u), std::move(den)});
  }
  if (!out.in_span()) {
    out.coefficients.clear();
    return out;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    RingElement sum = RingElement::zero(ring_);
    for (std::size_t k = 0; k < n_; ++k) sum += out.coefficients[k] * basis_.column(k)[v];
    if (!(sum == f[v])) throw std::logic_error("Cramer reconstruction mismatch");
  }
  return out;
}

ExpressionResult express_in_basis(const LabeledGraph& g, const SplineMatrix& ms, std::span<const RingElement> f) {
  require_components(g, f, "target");
  return CramerSolver(g, ms).express(f);
}

std::vector<RingElement> qhat_span_decomposition(const LabeledGraph& g, const SplineMatrix& ms,
                                                 std::span<const RingElement> f, const TrailOptions& options) {
  require_components(g, f, "target");
  const CramerSolver solver(g, ms);
  const RingElement q = qhat(g, options);
  if (!is_associate(solver.determinant(), q))
    throw std::domain_error("determinant " + format_element(solver.determinant()) + " is not associate to Q-hat " +
                            format_element(q));
  // x_i * (Q / det) rescales the Cramer solution from det * f to Q * f.
  auto x = solver.replaced_determinants(f);
  for (auto& xi : x) xi = exact_div(xi * q, solver.determinant());
  return x;
}

RingElement label_cofactor(const LabeledGraph& g, std::size_t index) {
  RingElement p = RingElement::one(g.ring());
  const std::size_t n = g.num_vertices();
  for (std::size_t k = 0; k < n + g.num_edges(); ++k)
    if (k != index) p *= k < n ? g.vertex_label(k) : g.edge_label(k - n);
  return p;
}

std::vector<SplineMatrix> coprime_witness_matrices(const LabeledGraph& g, const TrailOptions& options) {
  if (!labels_pairwise_coprime(g)) throw std::domain_error("labels are not pairwise coprime");
  const std::size_t n = g.num_vertices();
  const auto& ring = g.ring();
  const RingElement q = qhat(g, options);
  auto unit_vector = [&](std::size_t at, const RingElement& value) {
    Components c(n, RingElement::zero(ring));
    c[at] = value;
    return c;
  };

  std::vector<SplineMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    const RingElement l = label_cofactor(g, i);
    std::vector<Components> cols;
    for (std::size_t k = 0; k < n; ++k) cols.push_back(unit_vector(k, k == i ? q : l));
    out.emplace_back(std::move(cols));
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const RingElement l = label_cofactor(g, n + e);
    const std::size_t a = std::min(g.edges()[e].u, g.edges()[e].v);
    const std::size_t b = std::max(g.edges()[e].u, g.edges()[e].v);
    std::vector<Components> cols;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == a) {
        Components c = unit_vector(a, l);
        c[b] = l;
        cols.push_back(std::move(c));
      } else if (k == b) {
        cols.push_back(unit_vector(b, q));
      } else {
        cols.push_back(unit_vector(k, l));
      }
    }
    out.emplace_back(std::move(cols));
  }
  return out;
}

}  // namespace egs
