#include "gencliff/groups.hpp"

#include <cmath>
#include <numbers>

namespace gencliff {

MembershipReport membership(const AlgebraElement& u, double tol) {
  const AlgebraContext& ctx = u.context();
  const AlgebraElement conj = hermitian_conjugate(u);

  MembershipReport report;
  report.unitary = norm(multiply(conj, u) - identity(ctx)) <= tol;
  if (report.unitary)
    report.special_unitary = std::abs(determinant(u) - Complex(1.0, 0.0)) <= tol;
  report.anti_hermitian = norm(conj + u) <= tol;
  if (report.anti_hermitian)
    report.su_algebra = std::abs(scalar_part(u)) <= tol;
  return report;
}

namespace {

/// Colex index (j_1 fastest) used to enumerate monomials in the order the
/// tau listing uses: e, e_1-pair, e_2-pair, e_1e_2-pair, e_1^2e_2-pair, ...
long colex_index(const ExponentTuple& t, int m) {
  long index = 0;
  for (int a = static_cast<int>(t.exponents.size()) - 1; a >= 0; --a)
    index = index * m + t.exponents[a];
  return index;
}

}  // namespace

LieBasis unitary_lie_basis(const AlgebraContext& ctx) {
  const int m = ctx.m();
  const long dim = ctx.dim();
  const Complex imag(0.0, 1.0);

  std::vector<long> colex_order(dim);
  for (long i = 0; i < dim; ++i)
    colex_order[colex_index(ctx.tuple_of(i), m)] = i;

  LieBasis basis{ctx, LieBasisKind::Unitary, {}};
  basis.elements.reserve(dim);
  std::vector<bool> used(dim, false);

  for (long c = 0; c < dim; ++c) {
    const long i = colex_order[c];
    if (used[i]) continue;
    used[i] = true;

    const ExponentTuple t = ctx.tuple_of(i);
    const PhasedMonomial inv = monomial_inverse(t, ctx);
    const long partner = ctx.index_of(inv.exponents);
    const int p = inv.phase_exponent;

    if (partner == i) {
      // Self-inverse monomial: c E_J with conj(c) omega^p = -c, solved by the
      // principal half-phase c = i exp(-i pi p / m).
      const Complex coeff =
          imag * std::polar(1.0, -std::numbers::pi * p / m);
      basis.elements.push_back(coeff * basis_element(ctx, t));
    } else {
      used[partner] = true;
      const AlgebraElement lead = basis_element(ctx, t);
      const AlgebraElement tail = ctx.omega_pow(p) * basis_element(ctx, inv.exponents);
      basis.elements.push_back(lead - tail);
      basis.elements.push_back(imag * (lead + tail));
    }
  }
  return basis;
}

LieBasis special_unitary_lie_basis(const AlgebraContext& ctx) {
  LieBasis basis = unitary_lie_basis(ctx);
  basis.kind = LieBasisKind::SpecialUnitary;
  // The identity-monomial element i*e is the only one with a scalar part.
  std::erase_if(basis.elements, [](const AlgebraElement& x) {
    return std::abs(scalar_part(x)) > 0.0;
  });
  return basis;
}

AlgebraElement exp_element(const AlgebraElement& x, double tol) {
  const AlgebraContext& ctx = x.context();

  AlgebraElement scaled = x;
  int squarings = 0;
  while (norm(scaled) > 0.5 && squarings < 64) {
    scaled = Complex(0.5, 0.0) * scaled;
    ++squarings;
  }

  AlgebraElement result = identity(ctx) + scaled;
  AlgebraElement term = scaled;
  for (int k = 2; k <= 64; ++k) {
    term = multiply(term, scaled) * Complex(1.0 / k, 0.0);
    result = result + term;
    if (norm(term) < tol * norm(result)) break;
  }

  for (int k = 0; k < squarings; ++k) result = multiply(result, result);
  return result;
}

namespace {

ComplexMatrix matrix3(std::initializer_list<Complex> entries) {
  ComplexMatrix m(3, 3);
  auto it = entries.begin();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = *it++;
  return m;
}

}  // namespace

Su3Tables su3_tables(const AlgebraContext& ctx) {
  if (ctx.m() != 3 || ctx.d() != 2)
    throw ContextMismatchError("tau/Gell-Mann tables are specific to m=3, d=2");

  Su3Tables out;
  out.tau = special_unitary_lie_basis(ctx).elements;

  const GeneratorSet gens = generator_matrices(ctx);
  out.beta_tau.reserve(8);
  for (const AlgebraElement& t : out.tau) out.beta_tau.push_back(represent(t, gens));

  const Complex i(0.0, 1.0);
  const Complex z(0.0, 0.0);
  const Complex one(1.0, 0.0);
  const double s3 = std::sqrt(3.0);
  out.gell_mann = {
      matrix3({z, one, z, one, z, z, z, z, z}),
      matrix3({z, -i, z, i, z, z, z, z, z}),
      matrix3({one, z, z, z, -one, z, z, z, z}),
      matrix3({z, z, one, z, z, z, one, z, z}),
      matrix3({z, z, -i, z, z, z, i, z, z}),
      matrix3({z, z, z, z, z, one, z, one, z}),
      matrix3({z, z, z, z, z, -i, z, i, z}),
      matrix3({one / s3, z, z, z, one / s3, z, z, z, -2.0 / s3}),
  };
  out.theta.reserve(8);
  for (const ComplexMatrix& lambda : out.gell_mann) out.theta.push_back(i * lambda);

  const double h = 0.5;
  const double q = 0.25;
  const double s3h = s3 / 2.0;
  const double s3q = s3 / 4.0;
  const double r2s3 = 1.0 / (2.0 * s3);
  const double r4s3 = 1.0 / (4.0 * s3);

  // Recorded verbatim; rows are not guaranteed to reproduce the matrices (the
  // acceptance suite reports the residuals).
  out.tau_to_theta << 0, 1, 0, 0, -1, 0, 1, 0,          // beta_1
      1, 0, 0, 1, 0, 1, 0, 0,                           // beta_2
      0, 0, -s3h, 0, 0, 0, 0, 1.5,                      // beta_3
      0, 0, 1.5, 0, 0, 0, 0, s3h,                       // beta_4
      s3h, -h, 0, 0, -1, 0, 0, 0,                       // beta_5
      -h, -s3h, 0, 1, 0, 0, 0, 0,                       // beta_6
      0, -1, 0, -s3h, -h, s3h, h, 0,                    // beta_7
      1, 0, 0, -h, s3h, -1.0 / 6.0, s3h, 0;             // beta_8

  out.theta_to_tau << -r4s3, q, 0, 0, s3q, -q, -r4s3, q,  // theta_1
      q, r4s3, 0, 0, -q, -s3q, -q, -r4s3,                 // theta_2
      0, 0, -r2s3, h, 0, 0, 0, 0,                         // theta_3
      r4s3, q, 0, 0, 0, h, -r2s3, 0,                      // theta_4
      -q, r4s3, 0, 0, -h, 0, 0, r2s3,                     // theta_5
      0, h, 0, 0, -s3q, -q, s3q, -q,                      // theta_6
      h, 0, 0, 0, -q, s3q, q, s3q,                        // theta_7
      0, 0, h, r2s3, 0, 0, 0, 0;                          // theta_8

  return out;
}

}  // namespace gencliff
