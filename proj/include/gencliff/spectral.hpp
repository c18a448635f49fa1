#pragma once

#include "gencliff/element.hpp"

namespace gencliff {

/// Output of the Faddeev-LeVerrier recursion run inside the algebra:
/// coefficients C_(1)..C_(N) of lambda^N - C_(1) lambda^(N-1) - ... - C_(N),
/// plus the retained iterates U_(N-1) (adjugate numerator) and U_(N)
/// (Cayley-Hamilton endpoint, scalar up to roundoff).
struct CharPolyResult {
  AlgebraContext context;
  std::vector<Complex> coefficients;
  AlgebraElement second_last_iterate;
  AlgebraElement last_iterate;
  bool norm_warning = false;  // set when ||U|| > 1e3 (iterates grow like ||U||^k)
};

/// N * <u>_0, the trace of any minimal faithful representation.
Complex trace_op(const AlgebraElement& u);

/// U_(1) = U, C_(k) = (N/k) <U_(k)>_0, U_(k+1) = U (U_(k) - C_(k)).
CharPolyResult faddeev_leverrier(const AlgebraElement& u);

/// (-1)^(N+1) C_(N). Matches the LU determinant of represent(u).
Complex determinant(const AlgebraElement& u);
Complex determinant(const CharPolyResult& result);

/// (-1)^(N+1) (U_(N-1) - C_(N-1) e); satisfies u * Adj(u) = Det(u) e.
AlgebraElement adjugate(const AlgebraElement& u);
AlgebraElement adjugate(const CharPolyResult& result);

/// Adj(u) / Det(u). Throws SingularElementError when
/// |Det| <= 1e-10 * max(1, ||u||)^N.
AlgebraElement inverse(const AlgebraElement& u);

/// lambda^N - sum_k C_(k) lambda^(N-k).
Complex char_poly_eval(const AlgebraElement& u, Complex lambda);
Complex char_poly_eval(const CharPolyResult& result, Complex lambda);

/// The m=3, d=2 closed forms: C_(2), Det, Adj in the nested-underline form,
/// their flattened equivalents, and the explicit degree-3 coefficient
/// polynomial for the determinant.
struct TernaryClosedForms {
  Complex c2;
  Complex det;
  AlgebraElement adj;
  Complex c2_flat;
  Complex det_flat;
  AlgebraElement adj_flat;
  Complex det_poly;
};

TernaryClosedForms ternary_d2_closed_forms(const AlgebraElement& u);

}  // namespace gencliff
