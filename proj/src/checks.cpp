#include "gencliff/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace gencliff::checks {

namespace {

std::string format_residual(double value) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << value;
  return out.str();
}

CheckResult bounded(std::string name, double worst, double bound) {
  return CheckResult{std::move(name), worst <= bound,
                     "worst " + format_residual(worst) + ", bound " + format_residual(bound)};
}

double rel_diff(Complex a, Complex b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double rel_diff(const AlgebraElement& a, const AlgebraElement& b) {
  return norm(a - b) / std::max({1.0, norm(a), norm(b)});
}

AlgebraElement unit_random(const AlgebraContext& ctx, std::mt19937_64& rng) {
  AlgebraElement u = random_element(ctx, rng);
  const double n = norm(u);
  return n > 0 ? Complex(1.0 / n, 0.0) * u : u;
}

ExponentTuple tuple2(int j, int k) { return ExponentTuple{{j, k}}; }

}  // namespace

std::vector<AlgebraContext> standard_configurations() {
  std::vector<AlgebraContext> out;
  for (int m : {2, 3, 4, 5})
    for (int d : {1, 2, 3}) {
      long dim = 1;
      for (int a = 0; a < d; ++a) dim *= m;
      if (dim <= 256) out.push_back(make_context(m, d));
    }
  return out;
}

std::vector<AlgebraContext> extended_configurations() {
  std::vector<AlgebraContext> out;
  for (int m : {2, 3, 4, 5})
    for (int d : {1, 2, 3, 4}) {
      long dim = 1;
      for (int a = 0; a < d; ++a) dim *= m;
      if (dim <= 256) out.push_back(make_context(m, d));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Reference data for m = 3, d = 2.
// ---------------------------------------------------------------------------

namespace {

// Row/column order of the reference product table.
constexpr int kTableMonomials[8][2] = {{1, 0}, {0, 1}, {2, 0}, {0, 2},
                                       {1, 1}, {2, 1}, {1, 2}, {2, 2}};

// (phase, j1, j2) of every product, rows x columns in the order above.
constexpr int kTableEntries[8][8][3] = {
    // e1 row
    {{0, 2, 0}, {0, 1, 1}, {0, 0, 0}, {0, 1, 2}, {0, 2, 1}, {0, 0, 1}, {0, 2, 2}, {0, 0, 2}},
    // e2 row
    {{2, 1, 1}, {0, 0, 2}, {1, 2, 1}, {0, 0, 0}, {2, 1, 2}, {1, 2, 2}, {2, 1, 0}, {1, 2, 0}},
    // e1^2 row
    {{0, 0, 0}, {0, 2, 1}, {0, 1, 0}, {0, 2, 2}, {0, 0, 1}, {0, 1, 1}, {0, 0, 2}, {0, 1, 2}},
    // e2^2 row
    {{1, 1, 2}, {0, 0, 0}, {2, 2, 2}, {0, 0, 1}, {1, 1, 0}, {2, 2, 0}, {1, 1, 1}, {2, 2, 1}},
    // e1*e2 row
    {{2, 2, 1}, {0, 1, 2}, {1, 0, 1}, {0, 1, 0}, {2, 2, 2}, {1, 0, 2}, {2, 2, 0}, {1, 0, 0}},
    // e1^2*e2 row
    {{2, 0, 1}, {0, 2, 2}, {1, 1, 1}, {0, 2, 0}, {2, 0, 2}, {1, 1, 2}, {2, 0, 0}, {1, 1, 0}},
    // e1*e2^2 row
    {{1, 2, 2}, {0, 1, 0}, {2, 0, 2}, {0, 1, 1}, {1, 2, 0}, {2, 0, 0}, {1, 2, 1}, {2, 0, 1}},
    // e1^2*e2^2 row
    {{1, 0, 2}, {0, 2, 0}, {2, 1, 2}, {0, 2, 1}, {1, 0, 0}, {2, 1, 0}, {1, 0, 1}, {2, 1, 1}},
};

ComplexMatrix reference_shift3() {
  ComplexMatrix p = ComplexMatrix::Zero(3, 3);
  p(0, 1) = 1;
  p(1, 2) = 1;
  p(2, 0) = 1;
  return p;
}

ComplexMatrix reference_clock3() {
  const AlgebraContext ctx = make_context(3, 2);
  ComplexMatrix r = ComplexMatrix::Zero(3, 3);
  r(0, 0) = 1;
  r(1, 1) = ctx.omega_pow(1);
  r(2, 2) = ctx.omega_pow(2);
  return r;
}

/// The six product matrices listed for e1^2, e2^2, e1e2, e1^2e2, e1e2^2,
/// e1^2e2^2; phases stored as omega exponents, -1 marks a zero entry.
struct ReferenceProduct {
  int j1, j2;
  int phase[3][3];
};

constexpr ReferenceProduct kReferenceProducts[6] = {
    {2, 0, {{-1, -1, 0}, {0, -1, -1}, {-1, 0, -1}}},
    {0, 2, {{0, -1, -1}, {-1, 2, -1}, {-1, -1, 1}}},
    {1, 1, {{-1, 1, -1}, {-1, -1, 2}, {0, -1, -1}}},
    {2, 1, {{-1, -1, 2}, {0, -1, -1}, {-1, 1, -1}}},
    {1, 2, {{-1, 2, -1}, {-1, -1, 1}, {0, -1, -1}}},
    {2, 2, {{-1, -1, 1}, {0, -1, -1}, {-1, 2, -1}}},
};

ComplexMatrix reference_product_matrix(const AlgebraContext& ctx, const ReferenceProduct& p) {
  ComplexMatrix out = ComplexMatrix::Zero(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (p.phase[r][c] >= 0) out(r, c) = ctx.omega_pow(p.phase[r][c]);
  return out;
}

/// The general representation matrix for m=3, d=2, entry by entry:
/// each cell sums three coefficients u_{jk} with omega weights.
ComplexMatrix reference_general_matrix(const AlgebraContext& ctx, const AlgebraElement& u) {
  const Complex w = ctx.omega_pow(1);
  const Complex w2 = ctx.omega_pow(2);
  auto c = [&](int j, int k) { return u.coefficient(ctx.index_of(tuple2(j, k))); };
  ComplexMatrix out(3, 3);
  out(0, 0) = c(0, 0) + c(0, 1) + c(0, 2);
  out(0, 1) = c(1, 0) + w * c(1, 1) + w2 * c(1, 2);
  out(0, 2) = c(2, 0) + w * c(2, 2) + w2 * c(2, 1);
  out(1, 0) = c(2, 0) + c(2, 1) + c(2, 2);
  out(1, 1) = c(0, 0) + w * c(0, 1) + w2 * c(0, 2);
  out(1, 2) = c(1, 0) + w * c(1, 2) + w2 * c(1, 1);
  out(2, 0) = c(1, 0) + c(1, 1) + c(1, 2);
  out(2, 1) = c(2, 0) + w * c(2, 1) + w2 * c(2, 2);
  out(2, 2) = c(0, 0) + w * c(0, 2) + w2 * c(0, 1);
  return out;
}

/// tau_0..tau_8: each row is the monomial pair (j1, j2), (k1, k2) with the
/// complex weights of the two terms; single-term entries repeat the monomial
/// with weight zero.
struct ReferenceTau {
  int a[2];
  Complex ca;
  int b[2];
  Complex cb;
};

std::vector<ReferenceTau> reference_tau_list(const AlgebraContext& ctx) {
  const Complex i(0.0, 1.0);
  const Complex w = ctx.omega_pow(1);
  const Complex w2 = ctx.omega_pow(2);
  return {
      {{0, 0}, i, {0, 0}, Complex(0, 0)},        // tau_0 = i e
      {{1, 0}, 1.0, {2, 0}, -1.0},               // tau_1 = e1 - e1^2
      {{1, 0}, i, {2, 0}, i},                    // tau_2 = i(e1 + e1^2)
      {{0, 1}, 1.0, {0, 2}, -1.0},               // tau_3 = e2 - e2^2
      {{0, 1}, i, {0, 2}, i},                    // tau_4 = i(e2 + e2^2)
      {{1, 1}, 1.0, {2, 2}, -w2},                // tau_5 = e1e2 - w^2 e1^2e2^2
      {{1, 1}, i, {2, 2}, i * w2},               // tau_6 = i(e1e2 + w^2 e1^2e2^2)
      {{2, 1}, 1.0, {1, 2}, -w},                 // tau_7 = e1^2e2 - w e1e2^2
      {{2, 1}, i, {1, 2}, i * w},                // tau_8 = i(e1^2e2 + w e1e2^2)
  };
}

AlgebraElement reference_tau_element(const AlgebraContext& ctx, const ReferenceTau& t) {
  AlgebraElement out = t.ca * basis_element(ctx, tuple2(t.a[0], t.a[1]));
  if (t.cb != Complex(0.0, 0.0))
    out = out + t.cb * basis_element(ctx, tuple2(t.b[0], t.b[1]));
  return out;
}

/// The eight representation matrices of tau_1..tau_8; entries are small
/// integer combinations of 1, i, omega, omega^2.
std::vector<ComplexMatrix> reference_tau_matrices(const AlgebraContext& ctx) {
  const Complex i(0.0, 1.0);
  const Complex w = ctx.omega_pow(1);
  const Complex w2 = ctx.omega_pow(2);
  const double s3 = std::sqrt(3.0);
  auto mat = [](std::initializer_list<Complex> v) {
    ComplexMatrix m(3, 3);
    auto it = v.begin();
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = *it++;
    return m;
  };
  return {
      mat({0, 1, -1, -1, 0, 1, 1, -1, 0}),
      mat({0, i, i, i, 0, i, i, i, 0}),
      mat({0, 0, 0, 0, s3 * i, 0, 0, 0, -s3 * i}),
      mat({2.0 * i, 0, 0, 0, -i, 0, 0, 0, -i}),
      mat({0, w, -1, -w2, 0, w2, 1, -w, 0}),
      mat({0, i * w, i, i * w2, 0, i * w2, i, i * w, 0}),
      mat({0, -1, w2, 1, 0, -w2, -w, w, 0}),
      mat({0, i, i * w2, i, 0, i * w2, i * w, i * w, 0}),
  };
}

}  // namespace

CheckResult multiplication_table_reference() {
  const AlgebraContext ctx = make_context(3, 2);
  int mismatches = 0;
  for (int r = 0; r < 8; ++r) {
    const ExponentTuple row = tuple2(kTableMonomials[r][0], kTableMonomials[r][1]);
    for (int c = 0; c < 8; ++c) {
      const ExponentTuple col = tuple2(kTableMonomials[c][0], kTableMonomials[c][1]);
      const PhasedMonomial got = monomial_product(row, col, ctx);
      const int* expected = kTableEntries[r][c];
      if (got.phase_exponent != expected[0] ||
          got.exponents != tuple2(expected[1], expected[2]))
        ++mismatches;
    }
  }
  return CheckResult{"multiplication table reference (m=3,d=2)", mismatches == 0,
                     std::to_string(mismatches) + " of 64 products differ"};
}

CheckResult representation_reference(std::uint64_t seed) {
  const AlgebraContext ctx = make_context(3, 2);
  const GeneratorSet gens = generator_matrices(ctx);
  double worst = 0.0;

  worst = std::max(worst, (gens.matrices[0] - reference_shift3()).cwiseAbs().maxCoeff());
  worst = std::max(worst, (gens.matrices[1] - reference_clock3()).cwiseAbs().maxCoeff());

  for (const ReferenceProduct& p : kReferenceProducts) {
    const ComplexMatrix got = represent(basis_element(ctx, tuple2(p.j1, p.j2)), gens);
    worst = std::max(worst, (got - reference_product_matrix(ctx, p)).cwiseAbs().maxCoeff());
  }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < 20; ++t) {
    const AlgebraElement u = random_element(ctx, rng);
    worst = std::max(
        worst, (represent(u, gens) - reference_general_matrix(ctx, u)).cwiseAbs().maxCoeff());
  }
  return bounded("representation reference (m=3,d=2)", worst, 1e-14);
}

CheckResult ternary_closed_forms_agree(std::uint64_t seed) {
  const AlgebraContext ctx = make_context(3, 2);
  const GeneratorSet gens = generator_matrices(ctx);
  std::mt19937_64 rng(seed);
  double worst = 0.0;

  for (int t = 0; t < 200; ++t) {
    const AlgebraElement u = random_element(ctx, rng);
    const TernaryClosedForms forms = ternary_d2_closed_forms(u);
    const CharPolyResult fl = faddeev_leverrier(u);
    const Complex det_fl = determinant(fl);
    const Complex det_lu = matrix_det(represent(u, gens));

    worst = std::max(worst, rel_diff(forms.det_poly, det_fl));
    worst = std::max(worst, rel_diff(forms.det, det_fl));
    worst = std::max(worst, rel_diff(forms.det_flat, det_fl));
    worst = std::max(worst, rel_diff(det_fl, det_lu));
    worst = std::max(worst, rel_diff(forms.c2, fl.coefficients[1]));
    worst = std::max(worst, rel_diff(forms.c2_flat, fl.coefficients[1]));
    worst = std::max(worst, rel_diff(forms.adj, forms.adj_flat));
  }

  // All nine basis monomials have determinant exactly 1.
  for (long i = 0; i < ctx.dim(); ++i)
    worst = std::max(worst,
                     std::abs(determinant(basis_element(ctx, ctx.tuple_of(i))) - 1.0));

  return bounded("ternary closed forms agree (m=3,d=2)", worst, 1e-9);
}

CheckResult ternary_inverse_forms(std::uint64_t seed) {
  const AlgebraContext ctx = make_context(3, 2);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  int accepted = 0;
  while (accepted < 100) {
    const AlgebraElement u = random_element(ctx, rng);
    const Complex det = determinant(u);
    if (std::abs(det) <= 1e-3) continue;
    ++accepted;
    const TernaryClosedForms forms = ternary_d2_closed_forms(u);
    worst = std::max(worst, rel_diff(forms.adj, forms.adj_flat));
    const AlgebraElement inv = inverse(u);
    worst = std::max(worst, norm(inv - forms.adj * (Complex(1.0, 0.0) / det)));
  }
  return bounded("ternary inverse numerators agree (m=3,d=2)", worst, 1e-10);
}

CheckResult ternary_basis_reference() {
  const AlgebraContext ctx = make_context(3, 2);
  const auto taus = reference_tau_list(ctx);
  double worst = 0.0;

  const LieBasis full = unitary_lie_basis(ctx);
  if (full.elements.size() != 9)
    return CheckResult{"ternary Lie basis reference (m=3,d=2)", false,
                       "unexpected basis size " + std::to_string(full.elements.size())};
  for (int j = 0; j < 9; ++j)
    worst = std::max(worst,
                     norm(full.elements[j] - reference_tau_element(ctx, taus[j])));

  const LieBasis su = special_unitary_lie_basis(ctx);
  if (su.elements.size() != 8)
    return CheckResult{"ternary Lie basis reference (m=3,d=2)", false,
                       "unexpected su basis size " + std::to_string(su.elements.size())};
  for (int j = 0; j < 8; ++j)
    worst = std::max(worst,
                     norm(su.elements[j] - reference_tau_element(ctx, taus[j + 1])));

  const GeneratorSet gens = generator_matrices(ctx);
  const auto expected = reference_tau_matrices(ctx);
  for (int j = 0; j < 8; ++j) {
    const ComplexMatrix got = represent(su.elements[j], gens);
    worst = std::max(worst, (got - expected[j]).cwiseAbs().maxCoeff());
    worst = std::max(worst, (got.adjoint() + got).cwiseAbs().maxCoeff());
  }
  return bounded("ternary Lie basis reference (m=3,d=2)", worst, 1e-12);
}

CheckResult gell_mann_tables() {
  const AlgebraContext ctx = make_context(3, 2);
  const Su3Tables tables = su3_tables(ctx);

  int failed_relations = 0;
  double worst = 0.0;
  std::string failing;
  for (int j = 0; j < 8; ++j) {
    ComplexMatrix lhs = ComplexMatrix::Zero(3, 3);
    for (int k = 0; k < 8; ++k) lhs += tables.tau_to_theta(j, k) * tables.theta[k];
    const double res = (lhs - tables.beta_tau[j]).norm();
    worst = std::max(worst, res);
    if (res > 1e-12) {
      ++failed_relations;
      failing += (failing.empty() ? "" : ",") + std::string("b") + std::to_string(j + 1);
    }
  }
  for (int j = 0; j < 8; ++j) {
    ComplexMatrix lhs = ComplexMatrix::Zero(3, 3);
    for (int k = 0; k < 8; ++k) lhs += tables.theta_to_tau(j, k) * tables.beta_tau[k];
    const double res = (lhs - tables.theta[j]).norm();
    worst = std::max(worst, res);
    if (res > 1e-12) {
      ++failed_relations;
      failing += (failing.empty() ? "" : ",") + std::string("t") + std::to_string(j + 1);
    }
  }

  const Eigen::Matrix<double, 8, 8> ab = tables.tau_to_theta * tables.theta_to_tau;
  const Eigen::Matrix<double, 8, 8> ba = tables.theta_to_tau * tables.tau_to_theta;
  const double inverse_residual =
      std::max((ab - Eigen::Matrix<double, 8, 8>::Identity()).norm(),
               (ba - Eigen::Matrix<double, 8, 8>::Identity()).norm());

  const bool passed = failed_relations == 0 && inverse_residual <= 1e-12;
  std::string detail = std::to_string(16 - failed_relations) +
                       " of 16 recorded relations hold (worst residual " +
                       format_residual(worst) + "); mutual-inverse residual " +
                       format_residual(inverse_residual);
  if (!failing.empty()) detail += "; failing rows: " + failing;
  return CheckResult{"recorded change-of-basis tables (m=3,d=2)", passed, detail};
}

// ---------------------------------------------------------------------------
// Per-configuration property checks.
// ---------------------------------------------------------------------------

CheckResult base_matrix_relations(int m) {
  const BaseMatrices base = base_matrices(m);
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / m);
  const ComplexMatrix id = ComplexMatrix::Identity(m, m);
  double worst = 0.0;

  auto power = [&](const ComplexMatrix& a) {
    ComplexMatrix acc = id;
    for (int k = 0; k < m; ++k) acc = acc * a;
    return acc;
  };
  worst = std::max(worst, (power(base.shift) - id).norm());
  worst = std::max(worst, (power(base.phased_shift) - id).norm());
  worst = std::max(worst, (power(base.clock) - id).norm());
  worst = std::max(worst,
                   (base.shift * base.phased_shift - omega * base.phased_shift * base.shift).norm());
  worst = std::max(worst, (base.shift * base.clock - omega * base.clock * base.shift).norm());
  worst = std::max(worst,
                   (base.phased_shift * base.clock - omega * base.clock * base.phased_shift).norm());

  ComplexMatrix diag = ComplexMatrix::Zero(m, m);
  for (int k = 0; k < m; ++k) diag(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
  worst = std::max(worst, (base.clock - diag).cwiseAbs().maxCoeff());

  for (const ComplexMatrix* a : {&base.shift, &base.phased_shift, &base.clock})
    worst = std::max(worst, (a->adjoint() * *a - id).norm());

  return bounded("base matrix relations (m=" + std::to_string(m) + ")", worst, 1e-12);
}

CheckResult generator_relations(const AlgebraContext& ctx) {
  const GeneratorSet gens = generator_matrices(ctx);
  const long n = ctx.rep_size();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const Complex omega = ctx.omega();
  double worst = 0.0;

  for (const ComplexMatrix& g : gens.matrices) {
    ComplexMatrix acc = id;
    for (int k = 0; k < ctx.m(); ++k) acc = acc * g;
    worst = std::max(worst, (acc - id).norm());
    worst = std::max(worst, (g.adjoint() * g - id).norm());
  }
  for (int k = 0; k < ctx.d(); ++k)
    for (int l = k + 1; l < ctx.d(); ++l)
      worst = std::max(worst, (gens.matrices[k] * gens.matrices[l] -
                               omega * gens.matrices[l] * gens.matrices[k])
                                  .norm());
  return bounded("generator matrix relations", worst, 1e-12);
}

CheckResult defining_relations(const AlgebraContext& ctx) {
  double worst = 0.0;
  const AlgebraElement e = identity(ctx);
  for (int j = 1; j <= ctx.d(); ++j) {
    const AlgebraElement g = generator(ctx, j);
    worst = std::max(worst, norm(multiply(pow(g, ctx.m() - 1), g) - e));
  }
  for (int k = 1; k <= ctx.d(); ++k)
    for (int l = k + 1; l <= ctx.d(); ++l) {
      const AlgebraElement gk = generator(ctx, k);
      const AlgebraElement gl = generator(ctx, l);
      worst = std::max(worst,
                       norm(multiply(gk, gl) - ctx.omega() * multiply(gl, gk)));
    }
  return bounded("defining relations", worst, 1e-14);
}

CheckResult representation_homomorphism(const AlgebraContext& ctx, std::uint64_t seed) {
  const GeneratorSet gens = generator_matrices(ctx);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const AlgebraElement u = random_element(ctx, rng);
    const AlgebraElement v = random_element(ctx, rng);
    const double res =
        (represent(multiply(u, v), gens) - represent(u, gens) * represent(v, gens)).norm() /
        (norm(u) * norm(v) * ctx.rep_size());
    worst = std::max(worst, res);
  }
  return bounded("representation homomorphism", worst, 1e-10);
}

CheckResult hermitian_conjugation_theorem(const AlgebraContext& ctx, std::uint64_t seed) {
  const GeneratorSet gens = generator_matrices(ctx);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const AlgebraElement u = random_element(ctx, rng);
    const double res =
        (represent(hermitian_conjugate(u), gens) - represent(u, gens).adjoint()).norm() /
        (ctx.rep_size() * norm(u));
    worst = std::max(worst, res);
  }
  return bounded("conjugation matches Hermitian transpose", worst, 1e-12);
}

CheckResult trace_identity(const AlgebraContext& ctx, std::uint64_t seed) {
  const GeneratorSet gens = generator_matrices(ctx);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const AlgebraElement u = random_element(ctx, rng);
    const double res = std::abs(represent(u, gens).trace() - trace_op(u)) /
                       (ctx.rep_size() * norm(u));
    worst = std::max(worst, res);
  }
  return bounded("trace identity", worst, 1e-10);
}

CheckResult determinant_oracle(const AlgebraContext& ctx, std::uint64_t seed) {
  const GeneratorSet gens = generator_matrices(ctx);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const AlgebraElement u = unit_random(ctx, rng);
    const double budget =
        1e-8 * std::pow(1.0 + norm(u), static_cast<double>(ctx.rep_size()));
    const double res = std::abs(determinant(u) - matrix_det(represent(u, gens)));
    worst = std::max(worst, res / budget);
  }
  // worst is normalized against the per-element budget.
  return bounded("determinant matches LU oracle", worst, 1.0);
}

CheckResult representation_independence(const AlgebraContext& ctx, std::uint64_t seed) {
  const GeneratorSet gens = generator_matrices(ctx);
  const long n = ctx.rep_size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  auto random_invertible = [&]() {
    while (true) {
      ComplexMatrix t(n, n);
      for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) t(r, c) = Complex(dist(rng), dist(rng));
      const Eigen::PartialPivLU<ComplexMatrix> lu(t);
      const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
      if (pivots.minCoeff() >= 1e-6 * pivots.maxCoeff()) return t;
    }
  };

  double worst = 0.0;
  for (int e = 0; e < 5; ++e) {
    const AlgebraElement u = unit_random(ctx, rng);
    const Complex reference = determinant(u);
    for (int t = 0; t < 10; ++t) {
      const ComplexMatrix transform = random_invertible();
      for (int shift = 0; shift < ctx.m(); ++shift) {
        const Complex alt =
            matrix_det(alternative_representation(u, gens, transform, shift));
        worst = std::max(worst, rel_diff(alt, reference));
      }
    }
  }
  return bounded("determinant independent of representation", worst, 1e-8);
}

CheckResult inverse_roundtrip(const AlgebraContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const AlgebraElement e = identity(ctx);
  double worst = 0.0;
  int accepted = 0;
  // Unit-scale inputs; the absolute |Det| threshold keeps only elements the
  // inverse contract covers (at large N it admits just the well-conditioned
  // tail, which is the point of the filter).
  for (int tries = 0; accepted < 50 && tries < 2000; ++tries) {
    const AlgebraElement u = unit_random(ctx, rng);
    if (std::abs(determinant(u)) <= 1e-3) continue;
    ++accepted;
    worst = std::max(worst, norm(multiply(u, inverse(u)) - e));
  }
  CheckResult r = bounded("inverse round trip", worst, 1e-8);
  r.detail += " (" + std::to_string(accepted) + " samples past the det filter)";
  return r;
}

CheckResult underline_identities(const AlgebraContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const AlgebraElement u = random_element(ctx, rng);
    const AlgebraElement v = random_element(ctx, rng);

    worst = std::max(worst, rel_diff(underline(underline(u)), u));
    worst = std::max(worst, rel_diff(multiply(underline(multiply(u, v)), u),
                                     multiply(u, underline(multiply(v, u)))));
    const AlgebraElement lhs = underline(multiply(u, underline(v)));
    const AlgebraElement rhs = multiply(underline(u), underline(v)) +
                               multiply(underline(u), v) - underline(multiply(u, v));
    worst = std::max(worst, rel_diff(lhs, rhs));

    const AlgebraElement lhs2 = underline(multiply(u, underline(u)));
    const AlgebraElement rhs2 = multiply(underline(u), underline(u)) +
                                multiply(underline(u), u) - underline(multiply(u, u));
    worst = std::max(worst, rel_diff(lhs2, rhs2));
  }
  return bounded("underline identities", worst, 1e-12);
}

CheckResult conjugation_properties(const AlgebraContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const AlgebraElement u = random_element(ctx, rng);
    const AlgebraElement v = random_element(ctx, rng);
    const double scale = std::max(1.0, norm(u) * norm(v));

    worst = std::max(worst, norm(hermitian_conjugate(hermitian_conjugate(u)) - u) /
                                std::max(1.0, norm(u)));
    worst = std::max(worst, norm(hermitian_conjugate(multiply(u, v)) -
                                 multiply(hermitian_conjugate(v), hermitian_conjugate(u))) /
                                scale);
    worst = std::max(worst,
                     std::abs(scalar_part(multiply(u, v)) - scalar_part(multiply(v, u))) / scale);

    // Grade automorphism is multiplicative.
    worst = std::max(worst, norm(grade_automorphism(multiply(u, v), 1) -
                                 multiply(grade_automorphism(u, 1), grade_automorphism(v, 1))) /
                                scale);

    // Inner product: positivity, conjugate symmetry, coefficient formula.
    const Complex uu = inner_product(u, u);
    worst = std::max(worst, std::abs(uu.imag()));
    if (uu.real() < 0.0) worst = std::max(worst, -uu.real());
    worst = std::max(worst,
                     std::abs(inner_product(u, v) - std::conj(inner_product(v, u))));
    worst = std::max(worst, std::abs(inner_product(u, v) -
                                     scalar_part(multiply(hermitian_conjugate(u), v))) /
                                scale);

    // Coefficient extraction through the monomial inverse.
    const long index = static_cast<long>(rng() % static_cast<std::uint64_t>(ctx.dim()));
    const PhasedMonomial inv = monomial_inverse(ctx.tuple_of(index), ctx);
    const AlgebraElement inv_el =
        ctx.omega_pow(inv.phase_exponent) * basis_element(ctx, inv.exponents);
    worst = std::max(worst, std::abs(u.coefficient(index) -
                                     scalar_part(multiply(inv_el, u))));
  }
  return bounded("conjugation and inner product properties", worst, 1e-12);
}

CheckResult cayley_hamilton_endpoint(const AlgebraContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 25; ++t) {
    const AlgebraElement u = unit_random(ctx, rng);
    const double budget =
        1e-8 * std::pow(1.0 + norm(u), static_cast<double>(ctx.rep_size()));
    const CharPolyResult fl = faddeev_leverrier(u);

    const AlgebraElement endpoint = fl.last_iterate;
    worst = std::max(worst,
                     norm(endpoint - scalar_element(ctx, scalar_part(endpoint))) / budget);
    worst = std::max(worst, norm(multiply(u, adjugate(fl)) -
                                 scalar_element(ctx, determinant(fl))) /
                                budget);
    worst = std::max(worst, norm(multiply(adjugate(fl), u) -
                                 scalar_element(ctx, determinant(fl))) /
                                budget);
    // C_(1) = N <U>_0 within 1e-12.
    const double c1_residual = std::abs(
        fl.coefficients[0] - static_cast<double>(ctx.rep_size()) * scalar_part(u));
    worst = std::max(worst, c1_residual / 1e-12);
  }
  return bounded("Cayley-Hamilton endpoint", worst, 1.0);
}

CheckResult determinant_multiplicativity(const AlgebraContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 25; ++t) {
    const AlgebraElement u = unit_random(ctx, rng);
    const AlgebraElement v = unit_random(ctx, rng);
    const double budget =
        1e-8 * std::pow(1.0 + norm(u) * norm(v), static_cast<double>(ctx.rep_size()));
    worst = std::max(worst, std::abs(determinant(multiply(u, v)) -
                                     determinant(u) * determinant(v)) /
                                budget);
  }
  return bounded("determinant multiplicativity", worst, 1.0);
}

CheckResult determinant_conjugation(const AlgebraContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const AlgebraElement u = unit_random(ctx, rng);
    worst = std::max(worst, rel_diff(determinant(u),
                                     std::conj(determinant(hermitian_conjugate(u)))));
  }
  return bounded("determinant conjugation symmetry", worst, 1e-9);
}

CheckResult determinant_grade_invariance(const AlgebraContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const AlgebraElement u = unit_random(ctx, rng);
    const Complex reference = determinant(u);
    for (int j = 0; j < ctx.m(); ++j)
      worst = std::max(worst, rel_diff(determinant(grade_automorphism(u, j)), reference));
  }
  return bounded("determinant grade-automorphism invariance", worst, 1e-8);
}

CheckResult char_poly_consistency(const AlgebraContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const AlgebraElement u = unit_random(ctx, rng);
    const CharPolyResult fl = faddeev_leverrier(u);
    for (int s = 0; s < 4; ++s) {
      const Complex lambda(dist(rng), dist(rng));
      const AlgebraElement shifted = scalar_element(ctx, lambda) - u;
      const double budget =
          1e-8 * std::pow(1.0 + norm(shifted), static_cast<double>(ctx.rep_size()));
      const double res = std::abs(char_poly_eval(fl, lambda) - determinant(shifted));
      worst = std::max(worst, res / budget);
    }
  }
  return bounded("characteristic polynomial evaluation", worst, 1.0);
}

CheckResult representation_injectivity(const AlgebraContext& ctx) {
  const GeneratorSet gens = generator_matrices(ctx);
  const long dim = ctx.dim();

  // Gram matrix of the vectorized monomial images; its rank equals the rank
  // of the image family.
  std::vector<ComplexMatrix> images;
  images.reserve(dim);
  for (long i = 0; i < dim; ++i)
    images.push_back(represent(basis_element(ctx, ctx.tuple_of(i)), gens));

  ComplexMatrix gram(dim, dim);
  for (long a = 0; a < dim; ++a)
    for (long b = 0; b < dim; ++b)
      gram(a, b) = (images[a].adjoint() * images[b]).trace();

  Eigen::FullPivLU<ComplexMatrix> lu(gram);
  lu.setThreshold(1e-8);
  const long rank = lu.rank();
  return CheckResult{"representation injectivity", rank == dim,
                     "rank " + std::to_string(rank) + " of " + std::to_string(dim)};
}

CheckResult odd_block_structure(const AlgebraContext& ctx, std::uint64_t seed) {
  if (ctx.d() % 2 == 0)
    return CheckResult{"odd-d block structure", true, "not applicable (even d)"};
  const GeneratorSet gens = generator_matrices(ctx);
  const long block = ctx.rep_size() / ctx.m();
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const AlgebraElement u = random_element(ctx, rng);
    for (int r = 0; r < ctx.m(); ++r) {
      const ComplexMatrix rep = represent(mod_grade_project(u, r), gens);
      const ComplexMatrix block0 = rep.block(0, 0, block, block);
      for (int j = 1; j < ctx.m(); ++j) {
        const ComplexMatrix bj = rep.block(j * block, j * block, block, block);
        worst = std::max(
            worst,
            (bj - ctx.omega_pow(static_cast<long>(r) * j) * block0).cwiseAbs().maxCoeff());
      }
    }
  }
  return bounded("odd-d block structure", worst, 1e-10);
}

CheckResult lie_basis_ranks(const AlgebraContext& ctx) {
  const LieBasis full = unitary_lie_basis(ctx);
  const LieBasis su = special_unitary_lie_basis(ctx);
  const long dim = ctx.dim();

  double worst = 0.0;
  for (const AlgebraElement& x : full.elements)
    worst = std::max(worst, norm(hermitian_conjugate(x) + x));
  for (const AlgebraElement& x : su.elements)
    worst = std::max(worst, std::abs(scalar_part(x)));
  if (worst > 1e-12)
    return CheckResult{"Lie basis ranks", false,
                       "anti-Hermiticity residual " + format_residual(worst)};

  auto rank_of = [&](const std::vector<AlgebraElement>& elements) {
    Eigen::MatrixXd stacked(static_cast<long>(elements.size()), 2 * dim);
    for (std::size_t r = 0; r < elements.size(); ++r)
      for (long c = 0; c < dim; ++c) {
        stacked(static_cast<long>(r), c) = elements[r].coeffs()(c).real();
        stacked(static_cast<long>(r), dim + c) = elements[r].coeffs()(c).imag();
      }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(stacked);
    lu.setThreshold(1e-10);
    return lu.rank();
  };

  const long full_rank = rank_of(full.elements);
  const long su_rank = rank_of(su.elements);
  const bool passed = static_cast<long>(full.elements.size()) == dim &&
                      static_cast<long>(su.elements.size()) == dim - 1 &&
                      full_rank == dim && su_rank == dim - 1;
  return CheckResult{"Lie basis ranks", passed,
                     "ranks " + std::to_string(full_rank) + "/" + std::to_string(su_rank) +
                         " for sizes " + std::to_string(full.elements.size()) + "/" +
                         std::to_string(su.elements.size())};
}

CheckResult commutator_closure(const AlgebraContext& ctx, std::uint64_t seed) {
  const LieBasis su = special_unitary_lie_basis(ctx);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  auto random_member = [&]() {
    AlgebraElement x = AlgebraElement::zero(ctx);
    for (const AlgebraElement& b : su.elements) x = x + Complex(dist(rng), 0.0) * b;
    return x;
  };

  double worst = 0.0;
  for (int t = 0; t < 25; ++t) {
    const AlgebraElement x = random_member();
    const AlgebraElement y = random_member();
    const AlgebraElement bracket = multiply(x, y) - multiply(y, x);
    worst = std::max(worst, norm(hermitian_conjugate(bracket) + bracket) /
                                std::max(1.0, norm(bracket)));
    worst = std::max(worst, std::abs(scalar_part(bracket)) / std::max(1.0, norm(bracket)));
  }
  return bounded("commutator closure", worst, 1e-10);
}

CheckResult exponential_membership(const AlgebraContext& ctx, std::uint64_t seed) {
  const LieBasis su = special_unitary_lie_basis(ctx);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  int failures = 0;
  for (int t = 0; t < 50; ++t) {
    AlgebraElement x = AlgebraElement::zero(ctx);
    for (const AlgebraElement& b : su.elements) x = x + Complex(dist(rng), 0.0) * b;
    const MembershipReport report = membership(exp_element(x), 1e-8);
    if (!report.unitary || !report.special_unitary) ++failures;
  }
  return CheckResult{"exponential lands in the special unitary group", failures == 0,
                     std::to_string(failures) + " of 50 samples failed at 1e-8"};
}

CheckResult group_closure(const AlgebraContext& ctx, std::uint64_t seed, double tol) {
  const LieBasis su = special_unitary_lie_basis(ctx);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  auto random_group_element = [&]() {
    AlgebraElement x = AlgebraElement::zero(ctx);
    for (const AlgebraElement& b : su.elements) x = x + Complex(dist(rng), 0.0) * b;
    return exp_element(x);
  };

  int failures = 0;
  for (int t = 0; t < 10; ++t) {
    const AlgebraElement g = random_group_element();
    const AlgebraElement h = random_group_element();
    if (!membership(multiply(g, h), 2.0 * tol).unitary) ++failures;
    if (!membership(hermitian_conjugate(g), 2.0 * tol).unitary) ++failures;
  }
  return CheckResult{"group closure", failures == 0,
                     std::to_string(failures) + " closure failures at 2x tolerance"};
}

std::vector<CheckResult> run_config_suite(const AlgebraContext& ctx, const Options& opt) {
  std::vector<CheckResult> results;
  results.push_back(base_matrix_relations(ctx.m()));
  results.push_back(generator_relations(ctx));
  results.push_back(defining_relations(ctx));
  results.push_back(representation_homomorphism(ctx, opt.seed));
  results.push_back(hermitian_conjugation_theorem(ctx, opt.seed + 1));
  results.push_back(trace_identity(ctx, opt.seed + 2));
  results.push_back(determinant_oracle(ctx, opt.seed + 3));
  results.push_back(representation_independence(ctx, opt.seed + 4));
  results.push_back(inverse_roundtrip(ctx, opt.seed + 5));
  results.push_back(underline_identities(ctx, opt.seed + 6));
  results.push_back(conjugation_properties(ctx, opt.seed + 7));
  results.push_back(cayley_hamilton_endpoint(ctx, opt.seed + 8));
  results.push_back(determinant_multiplicativity(ctx, opt.seed + 9));
  results.push_back(determinant_conjugation(ctx, opt.seed + 10));
  results.push_back(determinant_grade_invariance(ctx, opt.seed + 11));
  results.push_back(char_poly_consistency(ctx, opt.seed + 12));
  results.push_back(representation_injectivity(ctx));
  results.push_back(odd_block_structure(ctx, opt.seed + 13));
  results.push_back(lie_basis_ranks(ctx));
  results.push_back(commutator_closure(ctx, opt.seed + 14));
  results.push_back(exponential_membership(ctx, opt.seed + 15));
  results.push_back(group_closure(ctx, opt.seed + 16, opt.tol));
  return results;
}

std::vector<CheckResult> run_full_suite(const Options& opt) {
  std::vector<CheckResult> results;
  for (const AlgebraContext& ctx : standard_configurations()) {
    const std::string tag =
        " (m=" + std::to_string(ctx.m()) + ",d=" + std::to_string(ctx.d()) + ")";
    for (CheckResult r : run_config_suite(ctx, opt)) {
      r.name += tag;
      results.push_back(std::move(r));
    }
  }
  results.push_back(multiplication_table_reference());
  results.push_back(representation_reference(opt.seed));
  results.push_back(ternary_closed_forms_agree(opt.seed + 100));
  results.push_back(ternary_inverse_forms(opt.seed + 101));
  results.push_back(ternary_basis_reference());
  return results;
}

}  // namespace gencliff::checks
