#pragma once

#include <Eigen/Dense>
#include <random>

#include "gencliff/context.hpp"

namespace gencliff {

using ComplexVector = Eigen::VectorXcd;

/// Algebra element as a dense coefficient vector over the ordered monomial
/// basis, coeffs[ctx.index_of(J)] = u_J. Immutable after construction.
class AlgebraElement {
public:
  AlgebraElement(AlgebraContext ctx, ComplexVector coeffs);

  static AlgebraElement zero(const AlgebraContext& ctx);

  const AlgebraContext& context() const noexcept { return ctx_; }
  const ComplexVector& coeffs() const noexcept { return coeffs_; }

  Complex coefficient(long index) const;
  Complex coefficient(const ExponentTuple& t) const;

private:
  AlgebraContext ctx_;
  ComplexVector coeffs_;
};

AlgebraElement from_coefficients(const AlgebraContext& ctx, const ComplexVector& coeffs);
AlgebraElement basis_element(const AlgebraContext& ctx, const ExponentTuple& t);
AlgebraElement identity(const AlgebraContext& ctx);
AlgebraElement scalar_element(const AlgebraContext& ctx, Complex value);

/// Single generator e_k, k in [1, d].
AlgebraElement generator(const AlgebraContext& ctx, int k);

/// lambda*u + mu*v, coefficientwise.
AlgebraElement linear_combine(Complex lambda, const AlgebraElement& u, Complex mu,
                              const AlgebraElement& v);

/// Bilinear extension of monomial_product over the supports of u and v.
AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v);

/// Keeps the coefficients with exponent sum k; 0 <= k <= d(m-1).
AlgebraElement grade_project(const AlgebraElement& u, int k);

/// Keeps the coefficients whose grade is congruent to r mod m; 0 <= r < m.
AlgebraElement mod_grade_project(const AlgebraElement& u, int r);

/// Multiplies each grade-k component by omega^(k*times).
AlgebraElement grade_automorphism(const AlgebraElement& u, int times);

/// u_{0...0}, the coefficient of the identity monomial.
Complex scalar_part(const AlgebraElement& u);

/// Conjugates coefficients and replaces every monomial by its inverse.
/// Involutive and antimultiplicative.
AlgebraElement hermitian_conjugate(const AlgebraElement& u);

/// 2<u>_0 e - u: flips the sign of every nonscalar grade component.
AlgebraElement underline(const AlgebraElement& u);

/// <conj(u) v>_0 = sum_J conj(u_J) v_J.
Complex inner_product(const AlgebraElement& u, const AlgebraElement& v);

/// Euclidean norm of the coefficient vector.
double norm(const AlgebraElement& u);

/// Coefficientwise comparison with absolute tolerance.
bool approx_equal(const AlgebraElement& u, const AlgebraElement& v, double tol = 1e-12);

/// u^n by binary exponentiation; pow(u, 0) is the identity.
AlgebraElement pow(const AlgebraElement& u, unsigned n);

AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement operator-(const AlgebraElement& u);
AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement operator*(Complex lambda, const AlgebraElement& u);
AlgebraElement operator*(const AlgebraElement& u, Complex lambda);

/// Coefficients uniform over the square [-1,1] x [-1,1]; deterministic for a
/// fixed generator state.
AlgebraElement random_element(const AlgebraContext& ctx, std::mt19937_64& rng);

}  // namespace gencliff
