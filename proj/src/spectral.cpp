#include "gencliff/spectral.hpp"

#include <cmath>

namespace gencliff {

Complex trace_op(const AlgebraElement& u) {
  return static_cast<double>(u.context().rep_size()) * scalar_part(u);
}

CharPolyResult faddeev_leverrier(const AlgebraElement& u) {
  const AlgebraContext& ctx = u.context();
  const long n = ctx.rep_size();

  CharPolyResult result{ctx, std::vector<Complex>(n), identity(ctx), u,
                        norm(u) > 1e3};

  AlgebraElement iterate = u;  // U_(1)
  for (long k = 1; k <= n; ++k) {
    result.coefficients[k - 1] =
        scalar_part(iterate) * static_cast<double>(n) / static_cast<double>(k);
    if (k == n - 1) result.second_last_iterate = iterate;
    if (k < n)
      iterate = multiply(u, iterate - scalar_element(ctx, result.coefficients[k - 1]));
  }
  result.last_iterate = iterate;  // U_(N)
  return result;
}

namespace {

double endpoint_sign(long n) { return (n % 2 == 0) ? -1.0 : 1.0; }  // (-1)^(N+1)

}  // namespace

Complex determinant(const CharPolyResult& result) {
  return endpoint_sign(result.context.rep_size()) * result.coefficients.back();
}

Complex determinant(const AlgebraElement& u) { return determinant(faddeev_leverrier(u)); }

AlgebraElement adjugate(const CharPolyResult& result) {
  const long n = result.context.rep_size();
  if (n < 2) throw SizeLimitError("adjugate needs representation size >= 2");
  const AlgebraElement numerator =
      result.second_last_iterate -
      scalar_element(result.context, result.coefficients[n - 2]);
  return endpoint_sign(n) * numerator;
}

AlgebraElement adjugate(const AlgebraElement& u) { return adjugate(faddeev_leverrier(u)); }

AlgebraElement inverse(const AlgebraElement& u) {
  const CharPolyResult result = faddeev_leverrier(u);
  const Complex det = determinant(result);
  const double threshold =
      1e-10 * std::pow(std::max(1.0, norm(u)), static_cast<double>(u.context().rep_size()));
  if (std::abs(det) <= threshold)
    throw SingularElementError("element is numerically singular", std::abs(det));
  return adjugate(result) * (Complex(1.0, 0.0) / det);
}

Complex char_poly_eval(const CharPolyResult& result, Complex lambda) {
  Complex acc(1.0, 0.0);
  for (const Complex& c : result.coefficients) acc = acc * lambda - c;
  return acc;
}

Complex char_poly_eval(const AlgebraElement& u, Complex lambda) {
  return char_poly_eval(faddeev_leverrier(u), lambda);
}

TernaryClosedForms ternary_d2_closed_forms(const AlgebraElement& u) {
  const AlgebraContext& ctx = u.context();
  if (ctx.m() != 3 || ctx.d() != 2)
    throw ContextMismatchError("closed forms are specific to m=3, d=2");

  const AlgebraElement u_sq = multiply(u, u);
  const AlgebraElement u_under = multiply(u, underline(u));
  const AlgebraElement under_sq = underline(u_sq);        // underline(U^2)
  const AlgebraElement under_prod = underline(u_under);   // underline(U underline(U))
  const AlgebraElement under_u_sq = multiply(underline(u), underline(u));  // (underline U)^2

  const Complex c3_8(3.0 / 8.0, 0.0);
  const Complex c1_8(1.0 / 8.0, 0.0);

  TernaryClosedForms out{
      Complex(), Complex(), identity(ctx), Complex(), Complex(), identity(ctx), Complex()};

  out.c2 = scalar_part(-c3_8 * (u_sq + under_sq + 3.0 * u_under + 3.0 * under_prod));
  out.adj = c1_8 * (-u_sq - 3.0 * u_under + 3.0 * under_sq + 9.0 * under_prod);
  out.det = scalar_part(multiply(u, out.adj));

  out.c2_flat =
      scalar_part(-c3_8 * (u_sq - 2.0 * under_sq + 6.0 * u_under + 3.0 * under_u_sq));
  out.adj_flat = c1_8 * (-u_sq - 6.0 * under_sq + 6.0 * u_under + 9.0 * under_u_sq);
  out.det_flat = scalar_part(multiply(u, out.adj_flat));

  // Explicit degree-3 polynomial in the nine coefficients.
  auto c = [&](int j, int k) {
    return u.coefficient(ctx.index_of(ExponentTuple{{j, k}}));
  };
  const Complex omega = ctx.omega();
  const Complex omega2 = ctx.omega_pow(2);
  Complex det_poly(0.0, 0.0);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) det_poly += c(j, k) * c(j, k) * c(j, k);
  det_poly -= 3.0 * (c(0, 0) * c(0, 1) * c(0, 2) + c(1, 0) * c(1, 1) * c(1, 2) +
                     c(0, 0) * c(1, 0) * c(2, 0) + c(0, 1) * c(1, 1) * c(2, 1) +
                     c(0, 2) * c(1, 2) * c(2, 2) + c(2, 0) * c(2, 1) * c(2, 2));
  det_poly -= 3.0 * omega *
              (c(0, 1) * c(1, 2) * c(2, 0) + c(0, 2) * c(1, 0) * c(2, 1) +
               c(0, 0) * c(1, 1) * c(2, 2));
  det_poly -= 3.0 * omega2 *
              (c(0, 2) * c(1, 1) * c(2, 0) + c(0, 0) * c(1, 2) * c(2, 1) +
               c(0, 1) * c(1, 0) * c(2, 2));
  out.det_poly = det_poly;

  return out;
}

}  // namespace gencliff
