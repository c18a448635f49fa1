#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gencliff/checks.hpp"
#include "gencliff/json_io.hpp"
#include "gencliff/matrix_rep.hpp"

using namespace gencliff;

namespace {

ComplexMatrix mat3(std::initializer_list<Complex> v) {
  ComplexMatrix m(3, 3);
  auto it = v.begin();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = *it++;
  return m;
}

/// Cofactor-expansion determinant, kept independent of the LU path.
Complex cofactor_det(const ComplexMatrix& a) {
  const long n = a.rows();
  if (n == 1) return a(0, 0);
  Complex sum(0.0, 0.0);
  double sign = 1.0;
  for (long c = 0; c < n; ++c) {
    ComplexMatrix minor(n - 1, n - 1);
    for (long r = 1; r < n; ++r) {
      long mc = 0;
      for (long cc = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor(r - 1, mc++) = a(r, cc);
      }
    }
    sum += sign * a(0, c) * cofactor_det(minor);
    sign = -sign;
  }
  return sum;
}

}  // namespace

TEST_CASE("base matrices for m = 3") {
  const BaseMatrices base = base_matrices(3);
  const AlgebraContext ctx = make_context(3, 1);
  const Complex w = ctx.omega_pow(1);
  const Complex w2 = ctx.omega_pow(2);

  CHECK((base.shift - mat3({0, 1, 0, 0, 0, 1, 1, 0, 0})).norm() == 0.0);
  CHECK((base.clock - mat3({1, 0, 0, 0, w, 0, 0, 0, w2})).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((base.phased_shift - mat3({0, w, 0, 0, 0, w2, 1, 0, 0})).cwiseAbs().maxCoeff() <=
        1e-15);
}

TEST_CASE("base matrix relations for even and odd m") {
  for (int m : {2, 3, 4, 5, 6}) {
    const checks::CheckResult r = checks::base_matrix_relations(m);
    INFO(r.name, ": ", r.detail);
    CHECK(r.passed);
  }
  // m = 2 clock is diag(1, -1)
  const BaseMatrices base = base_matrices(2);
  ComplexMatrix expect(2, 2);
  expect << 1, 0, 0, -1;
  CHECK((base.clock - expect).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK_THROWS_AS(base_matrices(1), SizeLimitError);
}

TEST_CASE("kron") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix i3 = ComplexMatrix::Identity(3, 3);
  CHECK((kron(i2, i3) - ComplexMatrix::Identity(6, 6)).norm() == 0.0);

  const BaseMatrices base = base_matrices(2);
  const ComplexMatrix block = kron(base.clock, base.shift);
  CHECK((block.block(0, 0, 2, 2) - base.shift).norm() <= 1e-15);
  CHECK((block.block(2, 2, 2, 2) + base.shift).norm() <= 1e-15);

  // mixed product property
  const BaseMatrices b3 = base_matrices(3);
  const ComplexMatrix lhs = kron(b3.shift, ComplexMatrix::Identity(3, 3)) *
                            kron(ComplexMatrix::Identity(3, 3), b3.shift);
  CHECK((lhs - kron(b3.shift, b3.shift)).norm() <= 1e-12);

  // empty-product convention: 1x1 identity is neutral
  CHECK((kron(ComplexMatrix::Identity(1, 1), b3.shift) - b3.shift).norm() == 0.0);
}

TEST_CASE("generator matrices reproduce the m=3,d=2 reference") {
  const checks::CheckResult r = checks::representation_reference(101);
  INFO(r.detail);
  CHECK(r.passed);
}

TEST_CASE("generator matrices satisfy the relations everywhere") {
  for (const AlgebraContext& ctx : checks::extended_configurations()) {
    const checks::CheckResult r = checks::generator_relations(ctx);
    INFO("m=", ctx.m(), " d=", ctx.d(), ": ", r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("m=2,d=2 generators anticommute") {
  const AlgebraContext ctx = make_context(2, 2);
  const GeneratorSet gens = generator_matrices(ctx);
  CHECK((gens.matrices[0] * gens.matrices[1] + gens.matrices[1] * gens.matrices[0]).norm() <=
        1e-14);
}

TEST_CASE("m=3,d=1 generator is the clock of 1x1 blocks") {
  const AlgebraContext ctx = make_context(3, 1);
  const GeneratorSet gens = generator_matrices(ctx);
  const ComplexMatrix expect = mat3({1, 0, 0, 0, ctx.omega_pow(1), 0, 0, 0, ctx.omega_pow(2)});
  CHECK((gens.matrices[0] - expect).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("represent is linear and multiplicative") {
  std::mt19937_64 rng(71);
  for (const AlgebraContext& ctx :
       {make_context(2, 3), make_context(3, 2), make_context(4, 2), make_context(3, 3)}) {
    const GeneratorSet gens = generator_matrices(ctx);
    CHECK((represent(identity(ctx), gens) -
           ComplexMatrix::Identity(ctx.rep_size(), ctx.rep_size()))
              .norm() == 0.0);
    for (int t = 0; t < 10; ++t) {
      const AlgebraElement u = random_element(ctx, rng);
      const AlgebraElement v = random_element(ctx, rng);
      const double bound = 1e-10 * norm(u) * norm(v) * ctx.rep_size();
      CHECK((represent(multiply(u, v), gens) - represent(u, gens) * represent(v, gens))
                .norm() <= bound);
      CHECK((represent(u + v, gens) - represent(u, gens) - represent(v, gens)).norm() <=
            1e-12);
    }
  }
}

TEST_CASE("conjugation matches Hermitian transpose across the matrix") {
  for (const AlgebraContext& ctx : checks::standard_configurations()) {
    const checks::CheckResult r = checks::hermitian_conjugation_theorem(ctx, 73);
    INFO("m=", ctx.m(), " d=", ctx.d(), ": ", r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("trace identity across the matrix") {
  for (const AlgebraContext& ctx : checks::standard_configurations()) {
    const checks::CheckResult r = checks::trace_identity(ctx, 79);
    INFO("m=", ctx.m(), " d=", ctx.d(), ": ", r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("matrix primitives") {
  ComplexMatrix d(1, 1);
  d(0, 0) = Complex(0.0, 1.0);
  CHECK(hermitian_transpose(d)(0, 0) == Complex(0.0, -1.0));
  CHECK(mat_trace(ComplexMatrix::Identity(5, 5)) == Complex(5.0, 0.0));
  CHECK(is_unitary_matrix(base_matrices(3).shift));
  CHECK_FALSE(is_unitary_matrix(2.0 * ComplexMatrix::Identity(2, 2), 1e-12));
  CHECK_THROWS_AS(mat_mul(ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(2, 3)),
                  SizeLimitError);
  CHECK_THROWS_AS(mat_add(ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(3, 2)),
                  SizeLimitError);
  CHECK(frobenius_norm(ComplexMatrix::Identity(4, 4)) == doctest::Approx(2.0));
}

TEST_CASE("matrix_det") {
  CHECK(matrix_det(ComplexMatrix::Identity(3, 3)) == Complex(1.0, 0.0));

  const BaseMatrices base = base_matrices(3);
  CHECK(std::abs(matrix_det(base.clock) - Complex(1.0, 0.0)) <= 1e-14);
  CHECK(std::abs(matrix_det(base.shift) - Complex(1.0, 0.0)) <= 1e-14);

  const AlgebraContext ctx = make_context(3, 2);
  CHECK(std::abs(matrix_det(represent(generator(ctx, 1))) - Complex(1.0, 0.0)) <= 1e-14);

  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    ComplexMatrix a(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) a(r, c) = Complex(dist(rng), dist(rng));
    CHECK(std::abs(matrix_det(a) - cofactor_det(a)) <= 1e-12);
  }

  ComplexMatrix singular = ComplexMatrix::Zero(3, 3);
  singular(0, 0) = 1.0;
  CHECK(std::abs(matrix_det(singular)) <= 1e-15);
}

TEST_CASE("alternative representation") {
  const AlgebraContext ctx = make_context(3, 2);
  const GeneratorSet gens = generator_matrices(ctx);
  std::mt19937_64 rng(89);
  const AlgebraElement u = random_element(ctx, rng);

  const ComplexMatrix idt = ComplexMatrix::Identity(3, 3);
  CHECK((alternative_representation(u, gens, idt, 0) - represent(u, gens)).norm() <= 1e-12);

  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix t(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t(r, c) = Complex(dist(rng), dist(rng));

  for (int shift = 0; shift < 3; ++shift) {
    const ComplexMatrix alt = alternative_representation(u, gens, t, shift);
    CHECK(std::abs(alt.trace() - trace_op(u)) <= 1e-10 * ctx.rep_size() * norm(u));
    CHECK(std::abs(matrix_det(alt) - matrix_det(represent(u, gens))) <=
          1e-8 * std::max(1.0, std::abs(matrix_det(represent(u, gens)))));
  }

  CHECK_THROWS_AS(alternative_representation(u, gens, ComplexMatrix::Zero(3, 3), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(alternative_representation(u, gens, idt, 3), SizeLimitError);
}

TEST_CASE("representation injectivity and odd-d block structure") {
  for (const AlgebraContext& ctx :
       {make_context(2, 2), make_context(3, 2), make_context(2, 3), make_context(3, 3)}) {
    const checks::CheckResult inj = checks::representation_injectivity(ctx);
    INFO(inj.detail);
    CHECK(inj.passed);
    const checks::CheckResult blocks = checks::odd_block_structure(ctx, 97);
    INFO(blocks.detail);
    CHECK(blocks.passed);
  }
}

TEST_CASE("matrix JSON round-trip") {
  const AlgebraContext ctx = make_context(3, 2);
  std::mt19937_64 rng(101);
  const ComplexMatrix m = represent(random_element(ctx, rng));
  const ComplexMatrix back = matrix_from_json(matrix_to_json(m));
  CHECK((m - back).norm() == 0.0);
}
