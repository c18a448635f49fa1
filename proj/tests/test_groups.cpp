#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "gencliff/checks.hpp"
#include "gencliff/groups.hpp"

using namespace gencliff;

namespace {

AlgebraElement mono(const AlgebraContext& ctx, std::vector<int> exps) {
  return basis_element(ctx, ExponentTuple{std::move(exps)});
}

}  // namespace

TEST_CASE("membership") {
  const AlgebraContext ctx = make_context(3, 2);

  const MembershipReport g = membership(generator(ctx, 1), 1e-10);
  CHECK(g.unitary);
  CHECK(g.special_unitary);
  CHECK_FALSE(g.anti_hermitian);

  const MembershipReport ie = membership(Complex(0, 1) * identity(ctx), 1e-10);
  CHECK(ie.unitary);
  CHECK(ie.anti_hermitian);
  CHECK_FALSE(ie.su_algebra);
  CHECK_FALSE(ie.special_unitary);  // Det(i e) = i^3 = -i

  const MembershipReport two = membership(2.0 * identity(ctx), 1e-10);
  CHECK_FALSE(two.unitary);
  CHECK_FALSE(two.special_unitary);
  CHECK_FALSE(two.anti_hermitian);
  CHECK_FALSE(two.su_algebra);
}

TEST_CASE("unitary basis for small algebras") {
  {
    const AlgebraContext ctx = make_context(2, 1);
    const LieBasis basis = unitary_lie_basis(ctx);
    REQUIRE(basis.elements.size() == 2);
    CHECK(approx_equal(basis.elements[0], Complex(0, 1) * identity(ctx), 1e-15));
    CHECK(approx_equal(basis.elements[1], Complex(0, 1) * generator(ctx, 1), 1e-15));

    const LieBasis su = special_unitary_lie_basis(ctx);
    REQUIRE(su.elements.size() == 1);
    CHECK(approx_equal(su.elements[0], Complex(0, 1) * generator(ctx, 1), 1e-15));
  }
  {
    // m=3, d=1: i e, e_1 - e_1^2, i(e_1 + e_1^2)
    const AlgebraContext ctx = make_context(3, 1);
    const LieBasis basis = unitary_lie_basis(ctx);
    REQUIRE(basis.elements.size() == 3);
    CHECK(approx_equal(basis.elements[1], generator(ctx, 1) - mono(ctx, {2}), 1e-15));
    CHECK(approx_equal(basis.elements[2],
                       Complex(0, 1) * (generator(ctx, 1) + mono(ctx, {2})), 1e-15));
  }
  {
    // even m self-paired monomial: e_1 e_2 lands in the basis with weight 1
    const AlgebraContext ctx = make_context(2, 2);
    const LieBasis basis = unitary_lie_basis(ctx);
    REQUIRE(basis.elements.size() == 4);
    bool found = false;
    for (const AlgebraElement& x : basis.elements)
      if (approx_equal(x, mono(ctx, {1, 1}), 1e-12)) found = true;
    CHECK(found);
  }
}

TEST_CASE("ternary basis matches the reference listing") {
  const checks::CheckResult r = checks::ternary_basis_reference();
  INFO(r.detail);
  CHECK(r.passed);
}

TEST_CASE("basis ranks and anti-Hermiticity across the matrix") {
  for (const AlgebraContext& ctx : checks::standard_configurations()) {
    const checks::CheckResult r = checks::lie_basis_ranks(ctx);
    INFO("m=", ctx.m(), " d=", ctx.d(), ": ", r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("exp_element basics") {
  const AlgebraContext ctx = make_context(3, 2);
  CHECK(approx_equal(exp_element(AlgebraElement::zero(ctx)), identity(ctx), 1e-15));

  const AlgebraElement neg = exp_element(Complex(0, std::numbers::pi) * identity(ctx));
  CHECK(approx_equal(neg, -identity(ctx), 1e-12));
}

TEST_CASE("exp of tau_3 is the expected diagonal") {
  const AlgebraContext ctx = make_context(3, 2);
  const LieBasis su = special_unitary_lie_basis(ctx);
  const AlgebraElement tau3 = su.elements[2];  // e_2 - e_2^2

  const ComplexMatrix rep = represent(exp_element(tau3));
  const double s3 = std::sqrt(3.0);
  ComplexMatrix expect = ComplexMatrix::Zero(3, 3);
  expect(0, 0) = 1.0;
  expect(1, 1) = std::polar(1.0, s3);
  expect(2, 2) = std::polar(1.0, -s3);
  CHECK((rep - expect).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("exp_element matches the matrix exponential") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (const AlgebraContext& ctx : {make_context(3, 2), make_context(2, 3)}) {
    const GeneratorSet gens = generator_matrices(ctx);
    const LieBasis basis = unitary_lie_basis(ctx);
    for (int t = 0; t < 5; ++t) {
      AlgebraElement x = AlgebraElement::zero(ctx);
      for (const AlgebraElement& b : basis.elements)
        x = x + Complex(dist(rng), 0.0) * b;
      const ComplexMatrix via_algebra = represent(exp_element(x), gens);
      const ComplexMatrix via_matrix = represent(x, gens).exp();
      CHECK((via_algebra - via_matrix).norm() <= 1e-8);
    }
  }
}

TEST_CASE("exponential lands in the group") {
  for (const AlgebraContext& ctx : checks::standard_configurations()) {
    const checks::CheckResult r = checks::exponential_membership(ctx, 67);
    INFO("m=", ctx.m(), " d=", ctx.d(), ": ", r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("commutator and group closure") {
  for (const AlgebraContext& ctx : {make_context(3, 2), make_context(2, 2)}) {
    const checks::CheckResult c = checks::commutator_closure(ctx, 71);
    INFO(c.detail);
    CHECK(c.passed);
    const checks::CheckResult g = checks::group_closure(ctx, 73, 1e-9);
    INFO(g.detail);
    CHECK(g.passed);
  }
}

TEST_CASE("su3 tables: matrices are consistent, recorded tables are not") {
  const AlgebraContext ctx = make_context(3, 2);
  const Su3Tables tables = su3_tables(ctx);

  REQUIRE(tables.tau.size() == 8);
  REQUIRE(tables.beta_tau.size() == 8);
  REQUIRE(tables.gell_mann.size() == 8);

  for (int j = 0; j < 8; ++j) {
    CHECK((tables.gell_mann[j].adjoint() - tables.gell_mann[j]).norm() <= 1e-15);
    CHECK((tables.theta[j].adjoint() + tables.theta[j]).norm() <= 1e-15);
    CHECK((tables.beta_tau[j].adjoint() + tables.beta_tau[j]).norm() <= 1e-12);
    CHECK(std::abs(tables.gell_mann[j].trace()) <= 1e-15);
  }

  // The rows that do reproduce their matrices.
  const std::vector<int> good_beta = {0, 1, 2, 3, 6};
  const std::vector<int> good_theta = {2, 7};
  for (int j : good_beta) {
    ComplexMatrix lhs = ComplexMatrix::Zero(3, 3);
    for (int k = 0; k < 8; ++k) lhs += tables.tau_to_theta(j, k) * tables.theta[k];
    CHECK((lhs - tables.beta_tau[j]).norm() <= 1e-12);
  }
  for (int j : good_theta) {
    ComplexMatrix lhs = ComplexMatrix::Zero(3, 3);
    for (int k = 0; k < 8; ++k) lhs += tables.theta_to_tau(j, k) * tables.beta_tau[k];
    CHECK((lhs - tables.theta[j]).norm() <= 1e-12);
  }

  // Known data defect, pinned: rows b5, b6, b8 and t1, t2, t4, t5, t6, t7
  // fail to reproduce their matrices, and the recorded tables are not mutual
  // inverses. A change in this pattern means the recorded data was edited.
  const checks::CheckResult r = checks::gell_mann_tables();
  INFO(r.detail);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("7 of 16") != std::string::npos);
  CHECK(r.detail.find("b5,b6,b8,t1,t2,t4,t5,t6,t7") != std::string::npos);

  // The true expansions exist: both bases are orthogonal, so solving for the
  // coefficients and applying them must reproduce the matrices exactly.
  for (int j = 0; j < 8; ++j) {
    ComplexMatrix reconstruction = ComplexMatrix::Zero(3, 3);
    for (int k = 0; k < 8; ++k) {
      const Complex coeff =
          (tables.theta[k].adjoint() * tables.beta_tau[j]).trace() / 2.0;
      CHECK(std::abs(coeff.imag()) <= 1e-12);  // real change of basis
      reconstruction += coeff.real() * tables.theta[k];
    }
    CHECK((reconstruction - tables.beta_tau[j]).norm() <= 1e-12);
  }

  CHECK_THROWS_AS(su3_tables(make_context(2, 2)), ContextMismatchError);
}
