#pragma once

#include <complex>
#include <vector>

#include "gencliff/errors.hpp"

namespace gencliff {

using Complex = std::complex<double>;

/// Size caps enforced by make_context. dim = m^d is the algebra dimension,
/// rep is the matrix representation size N = m^floor((d+1)/2).
struct SizeLimits {
  long max_dim = 4096;
  long max_rep = 729;
};

/// Exponent tuple (j_1, ..., j_d) of a basis monomial e_1^{j_1} ... e_d^{j_d},
/// each entry in [0, m).
struct ExponentTuple {
  std::vector<int> exponents;

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
};

/// omega^phase_exponent times a basis monomial. Phases stay exact integers
/// mod m; they become complex only when coefficients are accumulated.
struct PhasedMonomial {
  int phase_exponent = 0;  // in [0, m)
  ExponentTuple exponents;
};

/// Immutable descriptor of the algebra with d generators of order m:
/// e_j^m = e and e_k e_l = omega e_l e_k for k < l, omega = exp(2*pi*i/m).
class AlgebraContext {
public:
  int m() const noexcept { return m_; }
  int d() const noexcept { return d_; }

  /// Algebra dimension m^d.
  long dim() const noexcept { return dim_; }

  /// Matrix representation size N = m^floor((d+1)/2).
  long rep_size() const noexcept { return rep_size_; }

  /// Primitive m-th root of unity exp(2*pi*i/m).
  Complex omega() const noexcept { return omega_; }

  /// Principal 2m-th root exp(pi*i/m); zeta^2 = omega.
  Complex zeta() const noexcept { return zeta_; }

  /// omega^q for an exact integer phase q (any sign); omega_pow(0) == 1 exactly.
  Complex omega_pow(long q) const;

  /// Mixed-radix linear index with j_1 most significant.
  long index_of(const ExponentTuple& t) const;
  ExponentTuple tuple_of(long index) const;

  /// Exponent sum j_1 + ... + j_d of the monomial at the given index.
  int grade_of(long index) const;

  /// Largest grade d*(m-1).
  int max_grade() const noexcept { return d_ * (m_ - 1); }

  friend bool operator==(const AlgebraContext& a, const AlgebraContext& b) {
    return a.m_ == b.m_ && a.d_ == b.d_;
  }

private:
  friend AlgebraContext make_context(int m, int d, SizeLimits limits);

  AlgebraContext(int m, int d, long dim, long rep_size);

  int m_;
  int d_;
  long dim_;
  long rep_size_;
  Complex omega_;
  Complex zeta_;
};

/// Builds a context, enforcing m >= 2, d >= 1 and the size limits.
AlgebraContext make_context(int m, int d, SizeLimits limits = {});

/// Normal-ordered product of two basis monomials:
/// E_J * E_K = omega^q E_{(J+K) mod m} with q = -sum_{a<b} j_b k_a (mod m).
PhasedMonomial monomial_product(const ExponentTuple& j, const ExponentTuple& k,
                                const AlgebraContext& ctx);

/// Two-sided inverse of a basis monomial:
/// (E_J)^{-1} = omega^q E_{(-J) mod m} with q = -sum_{a<b} j_a j_b (mod m).
PhasedMonomial monomial_inverse(const ExponentTuple& j, const AlgebraContext& ctx);

}  // namespace gencliff
