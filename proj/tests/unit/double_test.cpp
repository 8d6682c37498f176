#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qlb/double.hpp"

using namespace qlb;

namespace {

Matrix twisted_complement(int n, const Matrix& t) {
  Matrix c(n, 2 * n);
  for (int k = 0; k < n; ++k) {
    c(k, n + k) = 1;
    for (int j = 0; j < n; ++j) c(k, j) = t(k, j);
  }
  return c;
}

Matrix random_skew(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-2, 2);
  Matrix t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      t(i, j) = dist(rng);
      t(j, i) = -t(i, j);
    }
  return t;
}

}  // namespace

TEST(Double, AbelianIsAbelian) {
  QuasiLieBialgebra q({}, BracketTable(primal_space(2)), BracketTable(dual_space(2)), Multivector(primal_space(2)));
  auto d = build_double(q);
  EXPECT_TRUE(d.bracket.is_zero());
  EXPECT_TRUE(verify_invariance(d).ok);
}

TEST(Double, Sl2ExactDualBracket) {
  auto q = fx::sl2_exact();
  auto d = build_double(q);
  // [e*, f*] = phi(e*, f*) + gamma(e*, f*): contraction of e*^f* into e^f^h, then the sign flip.
  Multivector expected = lift_primal(contract_by_dual(
      wedge(fx::vec(q.dual(), 1), fx::vec(q.dual(), 2)), Multivector::from_blade(q.primal(), make_blade({0, 1, 2}))));
  EXPECT_EQ(d.bracket(4, 5), expected);
  EXPECT_EQ(d.bracket(4, 5), lift_primal(fx::vec(q.primal(), 0)));
  EXPECT_TRUE(jacobi_defect(d.bracket).empty());
  EXPECT_TRUE(verify_invariance(d).ok);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(d.bracket(i, j), lift_primal(q.mu(i, j)));
}

TEST(Double, RejectsInvalid) {
  auto q = fx::sl2_exact();
  q.gamma.set_constant(1, 2, 0, 1);
  EXPECT_THROW(build_double(q), InvalidStructure);
}

TEST(Double, PerturbedTableBreaksInvariance) {
  auto d = build_double(fx::sl2_exact());
  d.bracket.set_constant(0, 3, 3, d.bracket.constant(0, 3, 3) + 1);
  auto res = verify_invariance(d);
  EXPECT_FALSE(res.ok);
  EXPECT_GE(res.u, 0);
}

TEST(Double, PairingIsHyperbolic) {
  auto p = hyperbolic_pairing(2);
  EXPECT_EQ(p(0, 2), 1);
  EXPECT_EQ(p(1, 3), 1);
  EXPECT_EQ(p(0, 0), 0);
  EXPECT_EQ(p, p.transpose());
}

TEST(ManinPair, PrimalAlwaysPasses) {
  for (const auto& q : {fx::sl2_exact(), fx::sl2_bialgebra()}) {
    auto d = build_double(q);
    auto w = primal_subspace(3);
    EXPECT_TRUE(verify_manin_pair(d, w).ok());
    EXPECT_TRUE(w.closed && w.isotropic && w.maximal);
  }
}

TEST(ManinPair, DualClosedOnlyWithoutPhi) {
  auto w = dual_subspace(3);
  verify_manin_pair(build_double(fx::sl2_exact()), w);
  EXPECT_TRUE(w.isotropic);
  EXPECT_FALSE(w.closed);
  auto w2 = dual_subspace(3);
  auto rep = verify_manin_pair(build_double(fx::sl2_bialgebra()), w2);
  for (const auto& it : rep.items) EXPECT_TRUE(it.pass) << it.id << " " << it.witness << " " << it.lhs;
}

TEST(ManinPair, NonIsotropicSubspace) {
  auto d = build_double(fx::sl2_exact());
  ManinPairWitness w;
  w.basis = Matrix(1, 6);
  w.basis(0, 0) = 1;
  w.basis(0, 3) = 1;
  verify_manin_pair(d, w);
  EXPECT_FALSE(w.isotropic);
  EXPECT_FALSE(w.maximal);
}

TEST(CanonicalR, SmallCases) {
  QuasiLieBialgebra q1({}, BracketTable(primal_space(1)), BracketTable(dual_space(1)), Multivector(primal_space(1)));
  auto r1 = canonical_r(assemble_double(q1));
  EXPECT_EQ(r1, Multivector::from_blade(double_space(1), make_blade({0, 1}), Scalar(1, 2)));
  QuasiLieBialgebra q2({}, BracketTable(primal_space(2)), BracketTable(dual_space(2)), Multivector(primal_space(2)));
  auto r2 = canonical_r(assemble_double(q2));
  EXPECT_EQ(r2.terms().size(), 2u);
  EXPECT_EQ(r2.coeff(make_blade({1, 3})), Scalar(1, 2));
}

TEST(DoubleQlb, Sl2ExactValidates) {
  auto d = build_double(fx::sl2_exact());
  auto qd = double_qlb(d);
  EXPECT_EQ(qd.n, 6);
  EXPECT_TRUE(validate(qd).ok());
  // phi recomputed directly from the Schouten bracket of D.
  auto flat = primal_space(6);
  auto r = retag(canonical_r(d), flat);
  EXPECT_EQ(qd.phi, schouten(d.bracket.retagged(flat), r, r) * Scalar(-1, 2));
}

TEST(DoubleQlb, AbelianHasNoStructure) {
  QuasiLieBialgebra q({}, BracketTable(primal_space(2)), BracketTable(dual_space(2)), Multivector(primal_space(2)));
  auto qd = double_qlb(build_double(q));
  EXPECT_TRUE(qd.gamma.is_zero());
  EXPECT_TRUE(qd.phi.is_zero());
}

TEST(FromManinPair, CanonicalComplementRoundTrip) {
  std::mt19937 rng(1);
  std::vector<QuasiLieBialgebra> cases{fx::sl2_exact(), fx::sl2_bialgebra(),
                                       exact_structure(fx::alg4(), fx::random_bivector(primal_space(4), rng))};
  for (const auto& q : cases) {
    auto back = from_manin_pair(build_double(q), dual_subspace(q.n).basis);
    EXPECT_EQ(back.mu, q.mu);
    EXPECT_EQ(back.gamma, q.gamma);
    EXPECT_EQ(back.phi, q.phi);
  }
}

TEST(FromManinPair, TwistedComplementValidates) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 4; ++trial) {
    auto q = trial == 0 ? fx::sl2_bialgebra() : exact_structure(fx::alg4(), fx::random_bivector(primal_space(4), rng));
    auto d = build_double(q);
    auto twisted = from_manin_pair(d, twisted_complement(q.n, random_skew(q.n, rng)));
    EXPECT_TRUE(validate(twisted).ok());
    EXPECT_TRUE(relations_suite(twisted).ok());
    auto d2 = build_double(twisted);
    EXPECT_TRUE(jacobi_defect(d2.bracket).empty());
  }
}

TEST(FromManinPair, RejectsNonIsotropic) {
  auto d = build_double(fx::sl2_exact());
  Matrix c = dual_subspace(3).basis;
  c(0, 0) = 1;  // e1 + xi^1
  EXPECT_THROW(from_manin_pair(d, c), std::invalid_argument);
}

TEST(FromManinPair, RejectsNonComplementary) {
  auto d = build_double(fx::sl2_exact());
  EXPECT_THROW(from_manin_pair(d, primal_subspace(3).basis), std::invalid_argument);
}

TEST(DoubleCorrespondence, CorruptionBreaksDoubleOnFourDim) {
  std::mt19937 rng(9);
  auto q = exact_structure(fx::alg4(), fx::random_bivector(primal_space(4), rng));
  ASSERT_FALSE(q.phi.is_zero());
  auto bad = q;
  bad.phi = Multivector(bad.primal());
  EXPECT_FALSE(validate(bad).ok());
  auto d = assemble_double(bad);
  EXPECT_FALSE(jacobi_defect(d.bracket).empty() && verify_invariance(d).ok);
}
