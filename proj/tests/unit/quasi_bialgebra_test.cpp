#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace qlb;

namespace {

void expect_all_pass(const ValidationReport& r) {
  for (const auto& it : r.items) {
    EXPECT_GT(it.cases, 0u) << it.id;
    EXPECT_TRUE(it.pass) << r.title << ": " << it.id << " fails at " << it.witness << "\n  lhs " << it.lhs
                         << "\n  rhs " << it.rhs;
  }
}

}  // namespace

TEST(ExactStructure, Sl2FromEwedgeF) {
  auto q = fx::sl2_exact();
  auto G = q.primal();
  auto Gs = q.dual();
  // gamma(h*, e*) = e*, gamma(h*, f*) = f*, nothing else.
  EXPECT_EQ(q.gamma.apply(fx::vec(Gs, 0), fx::vec(Gs, 1)), fx::vec(Gs, 1));
  EXPECT_EQ(q.gamma.apply(fx::vec(Gs, 0), fx::vec(Gs, 2)), fx::vec(Gs, 2));
  EXPECT_TRUE(q.gamma.apply(fx::vec(Gs, 1), fx::vec(Gs, 2)).is_zero());
  EXPECT_EQ(q.phi, Multivector::from_blade(G, make_blade({0, 1, 2}), -1));
  auto ch = characters(q);
  EXPECT_EQ(ch.x_gamma, fx::vec(G, 0) * Scalar(2));
  EXPECT_TRUE(ch.xi_mu.is_zero());
}

TEST(ExactStructure, CobracketIsBracketWithR) {
  auto q = fx::sl2_exact();
  auto r = fx::blade2(q.primal(), 1, 2);
  for (int k = 0; k < 3; ++k)
    EXPECT_EQ(cobracket(q, fx::vec(q.primal(), k)), schouten(q.mu, fx::vec(q.primal(), k), r));
}

TEST(ExactStructure, RejectsNonLie) {
  BracketTable b(primal_space(3));
  b.set_constant(0, 1, 2, 1);
  b.set_constant(1, 2, 2, 1);
  b.set_constant(0, 2, 0, 1);
  ASSERT_FALSE(jacobi_defect(b).empty());
  EXPECT_THROW(from_r_matrix(b, fx::blade2(primal_space(3), 0, 1)), NotLieError);
}

TEST(Validate, CatalogStylePass) {
  expect_all_pass(validate(fx::sl2_exact()));
  expect_all_pass(validate(fx::sl2_bialgebra()));
  expect_all_pass(validate(from_r_matrix(fx::heisenberg(), fx::blade2(primal_space(3), 0, 1))));
}

TEST(Validate, PhiIrrelevantInDimensionThreeUnimodular) {
  auto q = fx::sl2_exact();
  q.phi = Multivector(q.primal());
  EXPECT_TRUE(validate(q).ok());
}

TEST(Validate, DetectsWrongPhiOnNonUnimodular) {
  std::mt19937 rng(7);
  auto q = exact_structure(fx::alg4(), fx::random_bivector(primal_space(4), rng));
  ASSERT_TRUE(validate(q).ok());
  ASSERT_FALSE(q.phi.is_zero());
  q.phi = q.phi * Scalar(2);
  auto r = validate(q);
  EXPECT_FALSE(r.find("cojacobi-controlled-by-phi")->pass);
  EXPECT_TRUE(r.find("cojacobi-matches-double-relations")->pass);
}

TEST(Validate, DetectsNonCocycle) {
  auto q = fx::sl2_exact();
  q.gamma.set_constant(1, 2, 0, 1);
  auto r = validate(q);
  EXPECT_FALSE(r.find("gamma-cocycle")->pass);
  EXPECT_FALSE(r.find("gamma-cocycle-ce")->pass);
  EXPECT_FALSE(r.find("cojacobi-matches-double-relations")->evaluated);
}

TEST(Validate, DetectsNonLie) {
  auto q = fx::sl2_exact();
  q.mu.set_constant(1, 2, 1, 1);  // [e,f] = h + e
  auto r = validate(q);
  EXPECT_FALSE(r.find("mu-jacobi")->pass);
}

TEST(Relations, HoldOnSl2AndHeisenberg) {
  for (const auto& q : {fx::sl2_exact(), fx::sl2_bialgebra(),
                        from_r_matrix(fx::heisenberg(), fx::blade2(primal_space(3), 0, 1))}) {
    expect_all_pass(relations_suite(q));
    expect_all_pass(laplacian_suite(q));
  }
}

TEST(Relations, HoldOnRandomExactFourDim) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    auto q = exact_structure(fx::alg4(), fx::random_bivector(primal_space(4), rng));
    expect_all_pass(relations_suite(q));
    expect_all_pass(laplacian_suite(q));
  }
}

TEST(Laplacian, BialgebraCharacterFormula) {
  // r with [r,r] = 0 on alg4 gives a bialgebra with both characters nonzero.
  auto G = primal_space(4);
  std::mt19937 rng(3);
  int found = 0;
  for (int trial = 0; trial < 200 && found < 2; ++trial) {
    auto r = fx::random_bivector(G, rng, -1, 1);
    if (!schouten(fx::alg4(), r, r).is_zero()) continue;
    auto q = exact_structure(fx::alg4(), r);
    if (characters(q).x_gamma.is_zero()) continue;
    ++found;
    auto rep = laplacian_suite(q);
    ASSERT_NE(rep.find("laplacian-character-formula"), nullptr);
    EXPECT_TRUE(rep.find("laplacian-character-formula")->pass);
  }
  EXPECT_GT(found, 0);
}

TEST(Quasitriangular, CasimirGivesPhi) {
  Tensor r(3, 2);
  // a = 1/2 e^f, s = e(x)f + f(x)e + 1/2 h(x)h
  r.at({1, 2}) = Scalar(3, 2);
  r.at({2, 1}) = Scalar(1, 2);
  r.at({0, 0}) = Scalar(1, 2);
  auto q = from_quasitriangular(fx::sl2(), r, fx::sl2_names());
  EXPECT_TRUE(validate(q).ok());
  EXPECT_FALSE(q.phi.is_zero());
}

TEST(Quasitriangular, StandardRMatrixIsBialgebra) {
  Tensor r(3, 2);
  r.at({1, 2}) = 1;
  r.at({0, 0}) = Scalar(1, 4);
  auto q = from_quasitriangular(fx::sl2(), r, fx::sl2_names());
  EXPECT_TRUE(q.phi.is_zero());
  EXPECT_EQ(q.gamma, fx::sl2_bialgebra().gamma);
}

TEST(Quasitriangular, RejectsNonInvariantSymmetricPart) {
  Tensor r(3, 2);
  r.at({1, 2}) = 1;
  EXPECT_THROW(from_quasitriangular(fx::sl2(), r), InvarianceError);
}

TEST(YangBaxter, AgreesWithSchoutenForSkew) {
  std::mt19937 rng(5);
  auto G = primal_space(4);
  auto a = fx::random_bivector(G, rng);
  EXPECT_EQ(yang_baxter_bracket(fx::alg4(), embed(a, 2)), schouten(fx::alg4(), a, a));
}

TEST(Bv, Sl2ExactSolution) {
  auto q = fx::sl2_exact();
  auto bv = bv_prerequisite(q);
  ASSERT_TRUE(bv.has_value());
  EXPECT_TRUE(solves_bv_equation(q, bv->x0));
  EXPECT_TRUE(solves_bv_equation(q, fx::vec(q.primal(), 0)));
  EXPECT_TRUE(solves_bv_equation(q, -fx::vec(q.primal(), 0)));
  // delta^2 + d_mu Phi + Phi d_mu = 0
  EndoMatrix lhs = bv->delta_op * bv->delta_op + anticommutator(bv->differential, bv->phi_op);
  EXPECT_TRUE(lhs.is_zero());
}

TEST(Bv, ExactFourDimHasBoundarySolution) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 3; ++trial) {
    auto r = fx::random_bivector(primal_space(4), rng);
    auto q = exact_structure(fx::alg4(), r);
    auto bv = bv_prerequisite(q);
    ASSERT_TRUE(bv.has_value());
    EXPECT_TRUE(solves_bv_equation(q, bv->x0));
    EXPECT_TRUE(solves_bv_equation(q, -boundary(q.mu, r)));
    EndoMatrix lhs = bv->delta_op * bv->delta_op + anticommutator(bv->differential, bv->phi_op);
    EXPECT_TRUE(lhs.is_zero());
  }
}

TEST(Bv, SquareIdentityFailsWithoutX0) {
  std::mt19937 rng(13);
  auto q = exact_structure(fx::alg4(), fx::random_bivector(primal_space(4), rng));
  auto bv = bv_prerequisite(q);
  ASSERT_TRUE(bv.has_value());
  ASSERT_FALSE(bv->x0.is_zero());
  EndoMatrix bare = boundary_operator(q.gamma);
  EXPECT_FALSE((bare * bare + anticommutator(bv->differential, bv->phi_op)).is_zero());
}
