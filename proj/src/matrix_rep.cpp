#include "gencliff/matrix_rep.hpp"

#include <Eigen/LU>
#include <cmath>
#include <numbers>

namespace gencliff {

BaseMatrices base_matrices(int m) {
  if (m < 2) throw SizeLimitError("base matrices need m >= 2");
  const Complex zeta = std::polar(1.0, std::numbers::pi / m);

  BaseMatrices out;
  out.shift = ComplexMatrix::Zero(m, m);
  out.phased_shift = ComplexMatrix::Zero(m, m);
  for (int r = 0; r < m; ++r) {
    const int c = (r + 1) % m;
    out.shift(r, c) = Complex(1.0, 0.0);
    if (m % 2 == 1) {
      // superdiagonal omega, omega^2, ..., omega^{m-1}, corner 1
      out.phased_shift(r, c) = std::polar(1.0, 2.0 * std::numbers::pi * c / m);
    } else {
      // superdiagonal zeta, zeta^3, ..., corner zeta^{2m-1}
      out.phased_shift(r, c) = std::polar(1.0, std::numbers::pi * (2 * r + 1) / m);
    }
  }

  ComplexMatrix shift_inv = ComplexMatrix::Identity(m, m);
  for (int k = 0; k < m - 1; ++k) shift_inv = shift_inv * out.shift;
  out.clock = shift_inv * out.phased_shift;
  if (m % 2 == 0) out.clock = zeta * out.clock;
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

/// Phase carrier preceding each occupied slot: C = P^{m-1} R, with an extra
/// zeta for even m so that C^m = I. Satisfies P C = omega C P and
/// R C = omega C R, which is what makes every cross-slot pair commute with
/// the single factor omega.
ComplexMatrix carrier_matrix(const BaseMatrices& base, int m) {
  ComplexMatrix shift_inv = ComplexMatrix::Identity(m, m);
  for (int k = 0; k < m - 1; ++k) shift_inv = shift_inv * base.shift;
  ComplexMatrix c = shift_inv * base.clock;
  if (m % 2 == 0) c = std::polar(1.0, std::numbers::pi / m) * c;
  return c;
}

/// Even-d core: slot i holds the shift for e_{2i-1} and the clock for e_{2i},
/// with carrier factors on every earlier slot.
std::vector<ComplexMatrix> even_generators(int m, int d) {
  const BaseMatrices base = base_matrices(m);
  const ComplexMatrix carrier = carrier_matrix(base, m);
  const int slots = d / 2;
  std::vector<ComplexMatrix> out;
  out.reserve(d);
  for (int i = 1; i <= slots; ++i) {
    for (const ComplexMatrix* x : {&base.shift, &base.clock}) {
      ComplexMatrix g = ComplexMatrix::Identity(1, 1);
      for (int k = 0; k < i - 1; ++k) g = kron(g, carrier);
      g = kron(g, *x);
      for (int k = 0; k < slots - i; ++k)
        g = kron(g, ComplexMatrix::Identity(m, m));
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

GeneratorSet generator_matrices(const AlgebraContext& ctx) {
  const int m = ctx.m();
  const int d = ctx.d();
  GeneratorSet gens{ctx, {}};

  if (d % 2 == 0) {
    gens.matrices = even_generators(m, d);
    return gens;
  }

  // Odd d: block-diagonal over the m phase-twisted copies of the even-d core,
  // with the extra generator built from carrier factors alone.
  std::vector<ComplexMatrix> core =
      d > 1 ? even_generators(m, d - 1) : std::vector<ComplexMatrix>{};
  {
    const BaseMatrices base = base_matrices(m);
    const ComplexMatrix carrier = carrier_matrix(base, m);
    ComplexMatrix last = ComplexMatrix::Identity(1, 1);
    for (int k = 0; k < (d - 1) / 2; ++k) last = kron(last, carrier);
    core.push_back(std::move(last));
  }

  const long block = core[0].rows();
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / m);
  for (const ComplexMatrix& b : core) {
    ComplexMatrix g = ComplexMatrix::Zero(m * block, m * block);
    Complex phase(1.0, 0.0);
    for (int j = 0; j < m; ++j) {
      g.block(j * block, j * block, block, block) = phase * b;
      phase *= omega;
    }
    gens.matrices.push_back(std::move(g));
  }
  return gens;
}

namespace {

bool segment_has_support(const ComplexVector& c, long start, long len) {
  for (long i = start; i < start + len; ++i)
    if (c(i) != Complex(0.0, 0.0)) return true;
  return false;
}

/// Walks the exponent tree accumulating prefix products
/// beta(e_1)^{j_1} ... beta(e_pos)^{j_pos}, skipping unsupported subtrees.
void accumulate(const ComplexVector& coeffs, const GeneratorSet& gens, int pos,
                long base_index, long stride, const ComplexMatrix& prefix,
                ComplexMatrix& out) {
  const int m = gens.context.m();
  const int d = gens.context.d();
  if (pos == d) {
    out += coeffs(base_index) * prefix;
    return;
  }
  const long sub = stride / m;
  ComplexMatrix current = prefix;
  for (int j = 0; j < m; ++j) {
    if (j > 0) current = current * gens.matrices[pos];
    const long start = base_index + j * sub;
    if (segment_has_support(coeffs, start, sub))
      accumulate(coeffs, gens, pos + 1, start, sub, current, out);
  }
}

}  // namespace

ComplexMatrix represent(const AlgebraElement& u, const GeneratorSet& gens) {
  if (!(u.context() == gens.context))
    throw ContextMismatchError("element and generator set contexts differ");
  const long n = gens.context.rep_size();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  accumulate(u.coeffs(), gens, 0, 0, gens.context.dim(),
             ComplexMatrix::Identity(n, n), out);
  return out;
}

ComplexMatrix represent(const AlgebraElement& u) {
  return represent(u, generator_matrices(u.context()));
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw SizeLimitError("matrix product size mismatch");
  return a * b;
}

ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw SizeLimitError("matrix sum size mismatch");
  return a + b;
}

ComplexMatrix hermitian_transpose(const ComplexMatrix& a) { return a.adjoint(); }

Complex mat_trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw SizeLimitError("trace of a nonsquare matrix");
  return a.trace();
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

bool is_unitary_matrix(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a.adjoint() * a - ComplexMatrix::Identity(a.rows(), a.cols())).norm() <= tol;
}

Complex matrix_det(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw SizeLimitError("determinant of a nonsquare matrix");
  if (a.rows() == 0) return Complex(1.0, 0.0);
  return Eigen::PartialPivLU<ComplexMatrix>(a).determinant();
}

ComplexMatrix alternative_representation(const AlgebraElement& u, const GeneratorSet& gens,
                                         const ComplexMatrix& t, int shift) {
  if (shift < 0 || shift >= gens.context.m())
    throw SizeLimitError("representation shift out of range [0, m)");
  const long n = gens.context.rep_size();
  if (t.rows() != n || t.cols() != n)
    throw SizeLimitError("similarity transform has wrong size");

  Eigen::PartialPivLU<ComplexMatrix> lu(t);
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  if (pivots.minCoeff() < 1e-10 * std::max(1.0, pivots.maxCoeff()))
    throw std::invalid_argument("similarity transform is singular");

  const ComplexMatrix twisted = represent(grade_automorphism(u, shift), gens);
  return lu.solve(twisted * t);
}

}  // namespace gencliff
