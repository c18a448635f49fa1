#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gencliff/element.hpp"

namespace gencliff {

using ComplexMatrix = Eigen::MatrixXcd;

/// The m x m building blocks of the representation: the cyclic shift P, the
/// phased shift Q, and the clock R = diag(1, omega, ..., omega^{m-1}).
struct BaseMatrices {
  ComplexMatrix shift;         // P
  ComplexMatrix phased_shift;  // Q
  ComplexMatrix clock;         // R
};

BaseMatrices base_matrices(int m);

/// Kronecker product. kron of a 1x1 [[1]] acts as the empty-product identity.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// The d generator images beta(e_i), each N x N, unitary, of order m, with
/// beta(e_k) beta(e_l) = omega beta(e_l) beta(e_k) for k < l.
struct GeneratorSet {
  AlgebraContext context;
  std::vector<ComplexMatrix> matrices;
};

GeneratorSet generator_matrices(const AlgebraContext& ctx);

/// Linear, multiplicative extension: beta(E_J) = beta(e_1)^{j_1}...beta(e_d)^{j_d}.
ComplexMatrix represent(const AlgebraElement& u, const GeneratorSet& gens);
ComplexMatrix represent(const AlgebraElement& u);

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix hermitian_transpose(const ComplexMatrix& a);
Complex mat_trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
bool is_unitary_matrix(const ComplexMatrix& a, double tol = 1e-12);

/// Determinant by LU with partial pivoting; near-singular input yields a
/// near-zero value, not an error.
Complex matrix_det(const ComplexMatrix& a);

/// T^{-1} beta(grade_automorphism(u, shift)) T: the omega-shifted similarity
/// family of representations. Throws on singular T (pivot ratio below 1e-10).
ComplexMatrix alternative_representation(const AlgebraElement& u, const GeneratorSet& gens,
                                         const ComplexMatrix& t, int shift);

}  // namespace gencliff
