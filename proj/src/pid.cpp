#include "egs/pid.hpp"

#include <algorithm>

namespace egs {

namespace {

void require_pid(const RingDescriptor& ring) {
  if (!ring.is_pid())
    throw UnsupportedRing("needs a principal ideal domain (ZZ or QQ[x]); got " + ring.to_string());
}

// Column operation on both h and u: (c_a, c_b) <- (s c_a + t c_b, p c_a + q c_b).
void combine_columns(Matrix& h, Matrix& u, std::size_t a, std::size_t b, const RingElement& s, const RingElement& t,
                     const RingElement& p, const RingElement& q) {
  for (Matrix* m : {&h, &u}) {
    for (std::size_t r = 0; r < m->rows(); ++r) {
      const RingElement xa = (*m)(r, a), xb = (*m)(r, b);
      (*m)(r, a) = s * xa + t * xb;
      (*m)(r, b) = p * xa + q * xb;
    }
  }
}

void scale_column(Matrix& h, Matrix& u, std::size_t c, const RingElement& factor) {
  for (Matrix* m : {&h, &u})
    for (std::size_t r = 0; r < m->rows(); ++r) (*m)(r, c) *= factor;
}

// c_target <- c_target - q c_source
void subtract_column(Matrix& h, Matrix& u, std::size_t target, std::size_t source, const RingElement& q) {
  for (Matrix* m : {&h, &u})
    for (std::size_t r = 0; r < m->rows(); ++r)
      if (!(*m)(r, source).is_zero()) (*m)(r, target) -= q * (*m)(r, source);
}

}  // namespace

Matrix assemble_constraint_matrix(const LabeledGraph& g) {
  const std::size_t n = g.num_vertices(), k = g.num_edges();
  Matrix m(g.ring(), k, n + k);
  for (std::size_t e = 0; e < k; ++e) {
    const auto& edge = g.edges()[e];
    const std::size_t a = std::min(edge.u, edge.v), b = std::max(edge.u, edge.v);
    m(e, a) = g.vertex_label(a);
    m(e, b) = -g.vertex_label(b);
    m(e, n + e) = -edge.label;
  }
  return m;
}

HermiteForm hermite_triangularize(const Matrix& m) {
  require_pid(m.ring());
  const auto& ring = m.ring();
  HermiteForm out{m, Matrix::identity(ring, m.cols()), 0, {}};
  Matrix& h = out.h;
  Matrix& u = out.u;
  std::size_t pc = 0;
  for (std::size_t r = 0; r < h.rows() && pc < h.cols(); ++r) {
    for (std::size_t c = pc + 1; c < h.cols(); ++c) {
      if (h(r, c).is_zero()) continue;
      if (h(r, pc).is_zero()) {
        h.swap_columns(pc, c);
        u.swap_columns(pc, c);
        continue;
      }
      const RingElement a = h(r, pc), b = h(r, c);
      const auto eg = extended_gcd(a, b);
      // [[s, -b/g], [t, a/g]] has determinant 1.
      combine_columns(h, u, pc, c, eg.s, eg.t, -exact_div(b, eg.gcd), exact_div(a, eg.gcd));
    }
    if (h(r, pc).is_zero()) continue;
    auto [unit, normalized] = split_unit(h(r, pc));
    if (!(unit == RingElement::one(ring))) scale_column(h, u, pc, exact_div(RingElement::one(ring), unit));
    for (std::size_t k = 0; k < pc; ++k) {
      if (h(r, k).is_zero()) continue;
      const RingElement q = euclid_divmod(h(r, k), h(r, pc)).quotient;
      if (!q.is_zero()) subtract_column(h, u, k, pc, q);
    }
    out.pivot_rows.push_back(r);
    ++pc;
  }
  out.rank = pc;
  return out;
}

std::vector<std::vector<RingElement>> kernel_basis(const Matrix& m) {
  const HermiteForm hf = hermite_triangularize(m);
  std::vector<std::vector<RingElement>> out;
  for (std::size_t c = hf.rank; c < m.cols(); ++c) out.push_back(hf.u.column(c));
  return out;
}

SplineMatrix TriangularBasis::as_spline_matrix() const {
  std::vector<Components> cols;
  for (const auto& c : classes) cols.push_back(c.values);
  return SplineMatrix(std::move(cols));
}

TriangularBasis flow_up_basis(const LabeledGraph& g) {
  require_pid(g.ring());
  const std::size_t n = g.num_vertices();
  const auto kernel = kernel_basis(assemble_constraint_matrix(g));
  if (kernel.size() != n)
    throw std::logic_error("spline lattice has rank " + std::to_string(kernel.size()) + ", expected " +
                           std::to_string(n));

  Matrix splines(g.ring(), n, n);  // rows v_1..v_n
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t v = 0; v < n; ++v) splines(v, k) = g.vertex_label(v) * kernel[k][v];

  const HermiteForm hf = hermite_triangularize(splines);
  if (hf.rank != n) throw std::logic_error("spline generators are not independent");

  TriangularBasis tb;
  for (std::size_t i = 0; i < n; ++i) {
    if (hf.pivot_rows[i] != i) throw std::logic_error("triangularization lost a pivot");
    FlowUpClass cls{hf.h.column(i), i, hf.h(i, i)};
    tb.classes.push_back(std::move(cls));
  }
  return tb;
}

std::vector<RingElement> minimal_leading_entries(const LabeledGraph& g, const TrailOptions& options) {
  return qhat_components(g, options);
}

bool FlowUpReport::ok() const { return failures().empty(); }

std::vector<std::string> FlowUpReport::failures() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < column_is_spline.size(); ++k)
    if (!column_is_spline[k]) out.push_back("column " + std::to_string(k + 1) + " is not a spline");
  if (!triangular) out.push_back("not in flow-up (triangular) form");
  if (!product_matches_determinant) out.push_back("product of leading terms differs from the determinant");
  if (!determinant_matches_qhat)
    out.push_back("determinant " + format_element(determinant) + " is not associate to Q-hat " +
                  format_element(qhat));
  for (std::size_t i = 0; i < leading_matches_formula.size(); ++i) {
    if (!leading_divisible_by_formula[i])
      out.push_back("leading term " + std::to_string(i + 1) + " is not divisible by " + format_element(formula[i]));
    else if (!leading_matches_formula[i])
      out.push_back("leading term " + std::to_string(i + 1) + " is not associate to " + format_element(formula[i]));
  }
  return out;
}

FlowUpReport verify_flow_up(const LabeledGraph& g, const TriangularBasis& tb, const TrailOptions& options) {
  require_pid(g.ring());
  const std::size_t n = g.num_vertices();
  if (tb.classes.size() != n) throw DimensionError("expected " + std::to_string(n) + " flow-up classes");
  const SplineMatrix sm = tb.as_spline_matrix();
  const QhatBreakdown qb = qhat_breakdown(g, options);
  FlowUpReport rep{{}, false, spline_determinant(g, sm), qb.qhat, false, false, qb.components, {}, {}};
  for (const auto& c : tb.classes) rep.column_is_spline.push_back(is_spline(g, c.values));

  rep.triangular = true;
  RingElement product = RingElement::one(g.ring());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = tb.classes[i].values;
    for (std::size_t s = 0; s < i; ++s) rep.triangular = rep.triangular && v[s].is_zero();
    rep.triangular = rep.triangular && !v[i].is_zero();
    product *= v[i];
  }
  rep.product_matches_determinant = is_associate(product, rep.determinant);
  rep.determinant_matches_qhat = is_associate(rep.determinant, rep.qhat);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& lt = tb.classes[i].values[i];
    rep.leading_divisible_by_formula.push_back(!lt.is_zero() && divides(rep.formula[i], lt));
    rep.leading_matches_formula.push_back(is_associate(lt, rep.formula[i]));
  }
  return rep;
}

}  // namespace egs
