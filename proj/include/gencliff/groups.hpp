#pragma once

#include "gencliff/matrix_rep.hpp"
#include "gencliff/spectral.hpp"

namespace gencliff {

/// Group/algebra membership at a given tolerance. unitary: conj(U) U = e;
/// special_unitary additionally Det(U) = 1; anti_hermitian: conj(U) = -U;
/// su_algebra additionally <U>_0 = 0.
struct MembershipReport {
  bool unitary = false;
  bool special_unitary = false;
  bool anti_hermitian = false;
  bool su_algebra = false;
};

MembershipReport membership(const AlgebraElement& u, double tol);

enum class LieBasisKind { Unitary, SpecialUnitary };

/// Real basis of the anti-Hermitian elements (kind Unitary, m^d elements) or
/// of the traceless anti-Hermitian elements (kind SpecialUnitary, m^d - 1).
struct LieBasis {
  AlgebraContext context;
  LieBasisKind kind;
  std::vector<AlgebraElement> elements;
};

LieBasis unitary_lie_basis(const AlgebraContext& ctx);
LieBasis special_unitary_lie_basis(const AlgebraContext& ctx);

/// Power series exp(X) computed inside the algebra with scaling and squaring.
AlgebraElement exp_element(const AlgebraElement& x, double tol = 1e-16);

/// The m=3, d=2 tau basis, its representation matrices, the Gell-Mann
/// matrices, theta_j = i lambda_j, and the two recorded 8x8 change-of-basis
/// coefficient tables (row j of tau_to_theta expands beta(tau_j) over the
/// theta basis; row j of theta_to_tau expands theta_j over the beta(tau)
/// basis). The tables ship exactly as recorded in the reference material;
/// see the tests for their known internal inconsistencies.
struct Su3Tables {
  std::vector<AlgebraElement> tau;       // 8 elements
  std::vector<ComplexMatrix> beta_tau;   // represent(tau_j)
  std::vector<ComplexMatrix> gell_mann;  // lambda_1..lambda_8
  std::vector<ComplexMatrix> theta;      // i lambda_j
  Eigen::Matrix<double, 8, 8> tau_to_theta;
  Eigen::Matrix<double, 8, 8> theta_to_tau;
};

Su3Tables su3_tables(const AlgebraContext& ctx);

}  // namespace gencliff
