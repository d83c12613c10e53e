#pragma once

// Constructive flow-up bases over principal ideal domains (ZZ and QQ[x]).
//
// The spline module is the image of the kernel of the constraint matrix M_G
// under (a, b) -> (m_v a_v)_v. A column Hermite form of M_G yields a kernel
// basis; a second Hermite pass over the resulting n splines (rows v_1..v_n)
// makes them lower triangular, i.e. flow-up classes.

#include <string>
#include <vector>

#include "egs/graph.hpp"
#include "egs/matrix.hpp"
#include "egs/splines.hpp"

namespace egs {

class UnsupportedRing : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// |E| x (|V|+|E|). Row of edge e = {v_a, v_b}, a < b:  m_a a_{v_a} - m_b a_{v_b} - r_e b_e.
Matrix assemble_constraint_matrix(const LabeledGraph& g);

struct HermiteForm {
  Matrix h;  // M * u == h, column echelon
  Matrix u;  // unimodular
  std::size_t rank;
  std::vector<std::size_t> pivot_rows;  // pivot row of column k, k < rank
};

/// Column Hermite form over a Euclidean ring: pivots positive (ZZ) or monic
/// (QQ[x]); entries left of a pivot reduced modulo it.
HermiteForm hermite_triangularize(const Matrix& m);

/// Basis of {x : M x = 0}, taken from the zero columns of the Hermite form.
std::vector<std::vector<RingElement>> kernel_basis(const Matrix& m);

struct TriangularBasis {
  std::vector<FlowUpClass> classes;
  SplineMatrix as_spline_matrix() const;
};

TriangularBasis flow_up_basis(const LabeledGraph& g);

/// The per-vertex values of the minimal flow-up leading entries (same formula
/// as the key-element components).
std::vector<RingElement> minimal_leading_entries(const LabeledGraph& g, const TrailOptions& options = {});

struct FlowUpReport {
  std::vector<bool> column_is_spline;
  bool triangular = false;
  RingElement determinant;
  RingElement qhat;
  bool product_matches_determinant = false;  // prod LT associate to det
  bool determinant_matches_qhat = false;     // det associate to qhat
  std::vector<RingElement> formula;
  std::vector<bool> leading_divisible_by_formula;
  std::vector<bool> leading_matches_formula;
  bool ok() const;
  std::vector<std::string> failures() const;
};

FlowUpReport verify_flow_up(const LabeledGraph& g, const TriangularBasis& tb, const TrailOptions& options = {});

}  // namespace egs
