#pragma once

// Spline module layer over an edge-labeled graph: membership, the key element
// Q-hat, determinants in the bottom-to-top row convention, the determinantal
// basis certificate, and Cramer-style expression in a candidate basis.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "egs/execution.hpp"
#include "egs/graph.hpp"
#include "egs/matrix.hpp"
#include "egs/rings.hpp"

namespace egs {

/// Spline components listed v_1..v_n.
using Components = std::vector<RingElement>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SplineReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// f is a spline iff f_v is in m_v R for every vertex and f_u - f_v is in r_e R
/// for every edge e = {u, v}.
SplineReport check_spline(const LabeledGraph& g, std::span<const RingElement> f);
inline bool is_spline(const LabeledGraph& g, std::span<const RingElement> f) { return check_spline(g, f).ok(); }

/// n candidate splines. As a matrix, column k is F_k and the rows run from v_n
/// (top) down to v_1 (bottom).
class SplineMatrix {
 public:
  SplineMatrix() = default;
  explicit SplineMatrix(std::vector<Components> columns);

  std::size_t size() const { return columns_.size(); }
  const Components& column(std::size_t k) const { return columns_[k]; }
  const std::vector<Components>& columns() const { return columns_; }
  Matrix to_matrix(const RingDescriptor& ring) const;

 private:
  std::vector<Components> columns_;
};

struct FlowUpClass {
  Components values;
  std::size_t index;    // 0-based: values[s] == 0 for s < index
  RingElement leading;  // values[index]
};

// Key element ----------------------------------------------------------------

/// Per-vertex components and their product, together with the split
/// Q-hat = H * Q_G into the classical element (all m_i = 1) and the
/// vertex-label factor H.
struct QhatBreakdown {
  std::vector<RingElement> components;
  RingElement qhat;
  std::vector<RingElement> classical_components;
  RingElement classical_qg;
  std::vector<RingElement> h_components;
  RingElement h_factor;
};

QhatBreakdown qhat_breakdown(const LabeledGraph& g, const TrailOptions& options = {},
                             Execution exec = Execution::parallel);
/// [m_i, {(m_j, [trails j->i]) : j > i}, {[trails s->i] : s < i}] for vertex index i.
RingElement qhat_component(const LabeledGraph& g, std::size_t i, const TrailOptions& options = {});
std::vector<RingElement> qhat_components(const LabeledGraph& g, const TrailOptions& options = {},
                                         Execution exec = Execution::parallel);
RingElement qhat(const LabeledGraph& g, const TrailOptions& options = {}, Execution exec = Execution::parallel);
RingElement classical_qg(const LabeledGraph& g, const TrailOptions& options = {});
RingElement h_factor(const LabeledGraph& g, const TrailOptions& options = {});

// Determinants and certificates ----------------------------------------------------

RingElement spline_determinant(const LabeledGraph& g, const SplineMatrix& ms, Execution exec = Execution::parallel);

bool labels_pairwise_coprime(const LabeledGraph& g);

enum class Verdict { certified, refuted_not_splines, refuted_dependent, refuted_by_coprime_converse, inconclusive };
std::string to_string(Verdict v);

struct BasisCertificate {
  Verdict verdict;
  RingElement determinant;
  RingElement qhat;
  std::optional<RingElement> unit;           // set iff certified: determinant == unit * qhat
  std::vector<std::size_t> failing_columns;  // set iff refuted_not_splines
};

BasisCertificate certify_basis(const LabeledGraph& g, const SplineMatrix& ms, const TrailOptions& options = {});

// Cramer machinery -------------------------------------------------------------------

/// x_i / det that is not a ring element, as a reduced fraction.
struct Obstruction {
  std::size_t index;
  RingElement numerator;
  RingElement denominator;
};

struct ExpressionResult {
  std::vector<RingElement> coefficients;  // empty unless in span
  std::vector<Obstruction> obstructions;
  bool in_span() const { return obstructions.empty(); }
};

/// Precomputes the determinant and signed cofactors of a candidate basis so
/// that the column-replaced determinants x_i of any vector cost n^2 products.
class CramerSolver {
 public:
  CramerSolver(const LabeledGraph& g, const SplineMatrix& ms);

  const RingElement& determinant() const { return det_; }
  /// x_i = determinant with column i replaced by f.
  std::vector<RingElement> replaced_determinants(std::span<const RingElement> f) const;
  /// Throws when the determinant is zero.
  ExpressionResult express(std::span<const RingElement> f) const;

 private:
  RingDescriptor ring_;
  SplineMatrix basis_;
  std::size_t n_;
  RingElement det_;
  std::vector<RingElement> cofactor_;  // cofactor_[r * n + i], rows in matrix order
};

/// Coefficients c with sum c_i F_i == f, or the indices where x_i / det fails.
ExpressionResult express_in_basis(const LabeledGraph& g, const SplineMatrix& ms, std::span<const RingElement> f);

/// With |F| associate to Q-hat: ring elements x with sum x_i F_i == Q-hat * f.
std::vector<RingElement> qhat_span_decomposition(const LabeledGraph& g, const SplineMatrix& ms,
                                                 std::span<const RingElement> f, const TrailOptions& options = {});

/// Witness matrices A^(1)..A^(n+k) for pairwise-coprime labels.
std::vector<SplineMatrix> coprime_witness_matrices(const LabeledGraph& g, const TrailOptions& options = {});

/// Product of all vertex and edge labels except the one at position `index`
/// (vertices first, then edges).
RingElement label_cofactor(const LabeledGraph& g, std::size_t index);

}  // namespace egs
