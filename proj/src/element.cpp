#include "gencliff/element.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace gencliff {

AlgebraElement::AlgebraElement(AlgebraContext ctx, ComplexVector coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ctx_.dim())
    throw SizeLimitError("coefficient vector length " + std::to_string(coeffs_.size()) +
                         " does not match algebra dimension " + std::to_string(ctx_.dim()));
}

AlgebraElement AlgebraElement::zero(const AlgebraContext& ctx) {
  return AlgebraElement(ctx, ComplexVector::Zero(ctx.dim()));
}

Complex AlgebraElement::coefficient(long index) const {
  if (index < 0 || index >= ctx_.dim()) throw SizeLimitError("coefficient index out of range");
  return coeffs_(index);
}

Complex AlgebraElement::coefficient(const ExponentTuple& t) const {
  return coeffs_(ctx_.index_of(t));
}

AlgebraElement from_coefficients(const AlgebraContext& ctx, const ComplexVector& coeffs) {
  return AlgebraElement(ctx, coeffs);
}

AlgebraElement basis_element(const AlgebraContext& ctx, const ExponentTuple& t) {
  ComplexVector c = ComplexVector::Zero(ctx.dim());
  c(ctx.index_of(t)) = Complex(1.0, 0.0);
  return AlgebraElement(ctx, std::move(c));
}

AlgebraElement identity(const AlgebraContext& ctx) {
  ComplexVector c = ComplexVector::Zero(ctx.dim());
  c(0) = Complex(1.0, 0.0);
  return AlgebraElement(ctx, std::move(c));
}

AlgebraElement scalar_element(const AlgebraContext& ctx, Complex value) {
  ComplexVector c = ComplexVector::Zero(ctx.dim());
  c(0) = value;
  return AlgebraElement(ctx, std::move(c));
}

AlgebraElement generator(const AlgebraContext& ctx, int k) {
  if (k < 1 || k > ctx.d()) throw SizeLimitError("generator index out of range [1, d]");
  ExponentTuple t;
  t.exponents.assign(ctx.d(), 0);
  t.exponents[k - 1] = 1;
  return basis_element(ctx, t);
}

namespace {

void require_same_context(const AlgebraElement& u, const AlgebraElement& v) {
  if (!(u.context() == v.context()))
    throw ContextMismatchError("operands belong to different algebras");
}

}  // namespace

AlgebraElement linear_combine(Complex lambda, const AlgebraElement& u, Complex mu,
                              const AlgebraElement& v) {
  require_same_context(u, v);
  return AlgebraElement(u.context(), lambda * u.coeffs() + mu * v.coeffs());
}

AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) {
  require_same_context(u, v);
  const AlgebraContext& ctx = u.context();
  const int m = ctx.m();
  const int d = ctx.d();
  const long dim = ctx.dim();

  std::vector<Complex> omega_pow(m);
  for (int q = 0; q < m; ++q) omega_pow[q] = ctx.omega_pow(q);

  // Support of one operand with decoded digits; prefix[b] = k_1 + ... + k_{b-1}.
  struct Entry {
    Complex value;
    std::vector<int> digits;
    std::vector<long> prefix;
  };
  auto collect = [&](const ComplexVector& c) {
    std::vector<Entry> support;
    for (long i = 0; i < dim; ++i) {
      if (c(i) == Complex(0.0, 0.0)) continue;
      Entry e;
      e.value = c(i);
      e.digits.assign(d, 0);
      long rest = i;
      for (int a = d - 1; a >= 0; --a) {
        e.digits[a] = static_cast<int>(rest % m);
        rest /= m;
      }
      e.prefix.assign(d, 0);
      for (int b = 1; b < d; ++b) e.prefix[b] = e.prefix[b - 1] + e.digits[b - 1];
      support.push_back(std::move(e));
    }
    return support;
  };

  const auto su = collect(u.coeffs());
  const auto sv = collect(v.coeffs());

  ComplexVector out = ComplexVector::Zero(dim);
  for (const Entry& a : su) {
    for (const Entry& b : sv) {
      long q = 0;
      long index = 0;
      for (int pos = 0; pos < d; ++pos) {
        q -= static_cast<long>(a.digits[pos]) * b.prefix[pos];
        index = index * m + (a.digits[pos] + b.digits[pos]) % m;
      }
      q %= m;
      if (q < 0) q += m;
      out(index) += a.value * b.value * omega_pow[q];
    }
  }
  return AlgebraElement(ctx, std::move(out));
}

AlgebraElement grade_project(const AlgebraElement& u, int k) {
  const AlgebraContext& ctx = u.context();
  if (k < 0 || k > ctx.max_grade()) throw SizeLimitError("grade out of range [0, d(m-1)]");
  ComplexVector out = ComplexVector::Zero(ctx.dim());
  for (long i = 0; i < ctx.dim(); ++i)
    if (ctx.grade_of(i) == k) out(i) = u.coeffs()(i);
  return AlgebraElement(ctx, std::move(out));
}

AlgebraElement mod_grade_project(const AlgebraElement& u, int r) {
  const AlgebraContext& ctx = u.context();
  if (r < 0 || r >= ctx.m()) throw SizeLimitError("grade class out of range [0, m)");
  ComplexVector out = ComplexVector::Zero(ctx.dim());
  for (long i = 0; i < ctx.dim(); ++i)
    if (ctx.grade_of(i) % ctx.m() == r) out(i) = u.coeffs()(i);
  return AlgebraElement(ctx, std::move(out));
}

AlgebraElement grade_automorphism(const AlgebraElement& u, int times) {
  if (times < 0) throw SizeLimitError("grade automorphism count must be nonnegative");
  const AlgebraContext& ctx = u.context();
  ComplexVector out(ctx.dim());
  for (long i = 0; i < ctx.dim(); ++i)
    out(i) = u.coeffs()(i) *
             ctx.omega_pow(static_cast<long>(ctx.grade_of(i)) * times);
  return AlgebraElement(ctx, std::move(out));
}

Complex scalar_part(const AlgebraElement& u) { return u.coeffs()(0); }

AlgebraElement hermitian_conjugate(const AlgebraElement& u) {
  const AlgebraContext& ctx = u.context();
  ComplexVector out = ComplexVector::Zero(ctx.dim());
  for (long i = 0; i < ctx.dim(); ++i) {
    const Complex c = u.coeffs()(i);
    if (c == Complex(0.0, 0.0)) continue;
    const PhasedMonomial inv = monomial_inverse(ctx.tuple_of(i), ctx);
    out(ctx.index_of(inv.exponents)) += std::conj(c) * ctx.omega_pow(inv.phase_exponent);
  }
  return AlgebraElement(ctx, std::move(out));
}

AlgebraElement underline(const AlgebraElement& u) {
  ComplexVector out = -u.coeffs();
  out(0) += 2.0 * scalar_part(u);
  return AlgebraElement(u.context(), std::move(out));
}

Complex inner_product(const AlgebraElement& u, const AlgebraElement& v) {
  require_same_context(u, v);
  return u.coeffs().dot(v.coeffs());
}

double norm(const AlgebraElement& u) { return u.coeffs().norm(); }

bool approx_equal(const AlgebraElement& u, const AlgebraElement& v, double tol) {
  if (!(u.context() == v.context())) return false;
  return (u.coeffs() - v.coeffs()).cwiseAbs().maxCoeff() <= tol;
}

AlgebraElement pow(const AlgebraElement& u, unsigned n) {
  AlgebraElement result = identity(u.context());
  AlgebraElement base = u;
  while (n > 0) {
    if (n & 1u) result = multiply(result, base);
    n >>= 1u;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v) {
  return linear_combine(1.0, u, 1.0, v);
}

AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v) {
  return linear_combine(1.0, u, -1.0, v);
}

AlgebraElement operator-(const AlgebraElement& u) {
  return AlgebraElement(u.context(), -u.coeffs());
}

AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v) {
  return multiply(u, v);
}

AlgebraElement operator*(Complex lambda, const AlgebraElement& u) {
  return AlgebraElement(u.context(), lambda * u.coeffs());
}

AlgebraElement operator*(const AlgebraElement& u, Complex lambda) { return lambda * u; }

AlgebraElement random_element(const AlgebraContext& ctx, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexVector c(ctx.dim());
  for (long i = 0; i < ctx.dim(); ++i) {
    const double re = dist(rng);
    const double im = dist(rng);
    c(i) = Complex(re, im);
  }
  return AlgebraElement(ctx, std::move(c));
}

}  // namespace gencliff
