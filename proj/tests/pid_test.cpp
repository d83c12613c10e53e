#include <gtest/gtest.h>

#include "egs/corpus.hpp"
#include "egs/oracle.hpp"
#include "egs/pid.hpp"
#include "test_support.hpp"

using namespace egs;
using namespace egs::testing;

namespace {

Matrix int_matrix(std::size_t rows, std::size_t cols, std::initializer_list<long> entries) {
  Matrix m(zz(), rows, cols);
  auto it = entries.begin();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Z(*it++);
  return m;
}

void expect_hermite(const Matrix& m, const HermiteForm& hf) {
  EXPECT_EQ(m * hf.u, hf.h);
  EXPECT_TRUE(is_unit(determinant(hf.u)));
  for (std::size_t k = 0; k < hf.rank; ++k) {
    const std::size_t r = hf.pivot_rows[k];
    const auto& p = hf.h(r, k);
    EXPECT_EQ(p, normalize(p));
    for (std::size_t rr = 0; rr < r; ++rr) EXPECT_TRUE(hf.h(rr, k).is_zero());
    for (std::size_t c = k + 1; c < m.cols(); ++c) EXPECT_TRUE(hf.h(r, c).is_zero());
    for (std::size_t c = 0; c < k; ++c) EXPECT_EQ(euclid_divmod(hf.h(r, c), p).remainder, hf.h(r, c));
    if (k) {
      EXPECT_LT(hf.pivot_rows[k - 1], r);
    }
  }
  for (std::size_t c = hf.rank; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_TRUE(hf.h(r, c).is_zero());
}

LabeledGraph path2() { return corpus::instance("p2.json"); }

}  // namespace

TEST(ConstraintMatrix, Examples) {
  EXPECT_EQ(assemble_constraint_matrix(path2()), int_matrix(1, 3, {2, -3, -4}));
  const auto single = assemble_constraint_matrix(corpus::instance("single.json"));
  EXPECT_EQ(single.rows(), 0u);
  EXPECT_EQ(single.cols(), 1u);
  EXPECT_EQ(assemble_constraint_matrix(corpus::instance("c3_int.json")),
            int_matrix(3, 6, {4, -6, 0, -2, 0, 0,  //
                              0, 6, -9, 0, -3, 0,  //
                              4, 0, -9, 0, 0, -5}));
}

TEST(Hermite, Examples) {
  const auto id = Matrix::identity(zz(), 3);
  const auto hi = hermite_triangularize(id);
  EXPECT_EQ(hi.h, id);
  EXPECT_EQ(hi.u, id);

  const auto m = int_matrix(1, 3, {2, -3, -4});
  const auto hf = hermite_triangularize(m);
  expect_hermite(m, hf);
  EXPECT_EQ(hf.h(0, 0), Z(1));
  EXPECT_EQ(hf.rank, 1u);

  const auto sq = int_matrix(2, 2, {4, 2, 0, 3});
  const auto hs = hermite_triangularize(sq);
  expect_hermite(sq, hs);
  EXPECT_EQ(hs.h(0, 0), Z(2));
  EXPECT_EQ(hs.h(1, 1), Z(6));
}

TEST(Hermite, RejectsNonEuclidean) {
  EXPECT_THROW(hermite_triangularize(Matrix::identity(zz_xy(), 2)), UnsupportedRing);
  EXPECT_THROW(flow_up_basis(corpus::instance("t4.json")), UnsupportedRing);
}

TEST(Hermite, RandomMatrices) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const bool poly = trial % 4 == 3;
    const auto ring = poly ? qq_x() : zz();
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 2) % 5;
    Matrix m(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) = poly ? random_poly(rng, ring, 2, 2, 4) : RingElement::integer(ring, uniform(rng, -9, 9));
    const auto hf = hermite_triangularize(m);
    expect_hermite(m, hf);
    for (const auto& k : kernel_basis(m)) {
      Matrix col(ring, cols, 1);
      for (std::size_t c = 0; c < cols; ++c) col(c, 0) = k[c];
      EXPECT_EQ(m * col, Matrix(ring, rows, 1));
    }
  }
}

TEST(Kernel, Examples) {
  const auto k = kernel_basis(int_matrix(1, 3, {2, -3, -4}));
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_EQ(Z(2) * v[0], Z(3) * v[1] + Z(4) * v[2]);
  EXPECT_EQ(kernel_basis(Matrix(zz(), 0, 1)).size(), 1u);
  const auto z = kernel_basis(Matrix(zz(), 3, 3));
  ASSERT_EQ(z.size(), 3u);
  EXPECT_EQ(Matrix::identity(zz(), 3).column(1), z[1]);
}

TEST(FlowUp, Examples) {
  const auto tb = flow_up_basis(path2());
  ASSERT_EQ(tb.classes.size(), 2u);
  EXPECT_EQ(tb.classes[0].values, (Components{Z(2), Z(6)}));
  EXPECT_EQ(tb.classes[1].values, (Components{Z(0), Z(12)}));
  EXPECT_EQ(tb.classes[1].leading, Z(12));
  EXPECT_EQ(minimal_leading_entries(path2()), (std::vector<RingElement>{Z(2), Z(12)}));
  const auto rep = verify_flow_up(path2(), tb);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.qhat, Z(24));

  auto tampered = tb;
  for (auto& v : tampered.classes[1].values) v *= Z(2);
  const auto bad = verify_flow_up(path2(), tampered);
  EXPECT_FALSE(bad.ok());
  EXPECT_FALSE(bad.determinant_matches_qhat);
  EXPECT_TRUE(is_associate(bad.determinant, Z(48)));

  const auto single = corpus::instance("single.json");
  const auto ts = flow_up_basis(single);
  EXPECT_EQ(ts.classes[0].values, (Components{Z(5)}));
  EXPECT_TRUE(verify_flow_up(single, ts).ok());

  const auto c3 = corpus::instance("c3_int.json");
  const auto tc = flow_up_basis(c3);
  std::vector<RingElement> lts;
  for (const auto& c : tc.classes) lts.push_back(c.leading);
  EXPECT_EQ(lts, (std::vector<RingElement>{Z(4), Z(6), Z(45)}));
  EXPECT_TRUE(verify_flow_up(c3, tc).ok());
}

TEST(FlowUp, UnivariateRationalInstance) {
  const auto ring = qq_x();
  const auto g = LabeledGraph::validated(
      ring, {{"a", P("x", ring)}, {"b", P("x+1", ring)}, {"c", P("x^2", ring)}},
      {{0, 1, P("x^2-1", ring)}, {1, 2, P("x", ring)}, {0, 2, P("x-1", ring)}});
  const auto tb = flow_up_basis(g);
  const auto rep = verify_flow_up(g, tb);
  EXPECT_TRUE(rep.ok()) << (rep.failures().empty() ? "" : rep.failures().front());
  for (const auto& c : tb.classes) EXPECT_EQ(c.leading, normalize(c.leading));
  EXPECT_EQ(certify_basis(g, tb.as_spline_matrix()).verdict, Verdict::certified);
}

TEST(FlowUp, RandomIntegerInstances) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = oracle::random_instance({seed, 1 + seed % 6, 0.5, 50, false});
    const auto tb = flow_up_basis(g);
    const auto rep = verify_flow_up(g, tb);
    EXPECT_TRUE(rep.ok()) << "seed " << seed << ": " << (rep.ok() ? "" : rep.failures().front());
    EXPECT_EQ(certify_basis(g, tb.as_spline_matrix()).verdict, Verdict::certified);
    for (const auto& k : kernel_basis(assemble_constraint_matrix(g))) {
      Components f;
      for (std::size_t v = 0; v < g.num_vertices(); ++v) f.push_back(g.vertex_label(v) * k[v]);
      EXPECT_TRUE(is_spline(g, f));
    }
  }
}
