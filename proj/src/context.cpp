#include "gencliff/context.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gencliff {

AlgebraContext::AlgebraContext(int m, int d, long dim, long rep_size)
    : m_(m),
      d_(d),
      dim_(dim),
      rep_size_(rep_size),
      omega_(std::polar(1.0, 2.0 * std::numbers::pi / m)),
      zeta_(std::polar(1.0, std::numbers::pi / m)) {}

Complex AlgebraContext::omega_pow(long q) const {
  q %= m_;
  if (q < 0) q += m_;
  if (q == 0) return Complex(1.0, 0.0);
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(q) / m_);
}

long AlgebraContext::index_of(const ExponentTuple& t) const {
  if (static_cast<int>(t.exponents.size()) != d_)
    throw SizeLimitError("exponent tuple has wrong length");
  long index = 0;
  for (int a = 0; a < d_; ++a) {
    const int j = t.exponents[a];
    if (j < 0 || j >= m_) throw SizeLimitError("exponent out of range [0, m)");
    index = index * m_ + j;
  }
  return index;
}

ExponentTuple AlgebraContext::tuple_of(long index) const {
  if (index < 0 || index >= dim_) throw SizeLimitError("monomial index out of range");
  ExponentTuple t;
  t.exponents.assign(d_, 0);
  for (int a = d_ - 1; a >= 0; --a) {
    t.exponents[a] = static_cast<int>(index % m_);
    index /= m_;
  }
  return t;
}

int AlgebraContext::grade_of(long index) const {
  if (index < 0 || index >= dim_) throw SizeLimitError("monomial index out of range");
  int grade = 0;
  while (index > 0) {
    grade += static_cast<int>(index % m_);
    index /= m_;
  }
  return grade;
}

AlgebraContext make_context(int m, int d, SizeLimits limits) {
  if (m < 2) throw SizeLimitError("generator order m must be at least 2");
  if (d < 1) throw SizeLimitError("generator count d must be at least 1");

  long dim = 1;
  for (int a = 0; a < d; ++a) {
    if (dim > limits.max_dim / m)
      throw SizeLimitError("algebra dimension m^d exceeds limit " +
                           std::to_string(limits.max_dim));
    dim *= m;
  }

  long rep_size = 1;
  for (int a = 0; a < (d + 1) / 2; ++a) rep_size *= m;
  if (rep_size > limits.max_rep)
    throw SizeLimitError("representation size N exceeds limit " +
                         std::to_string(limits.max_rep));

  return AlgebraContext(m, d, dim, rep_size);
}

namespace {

void check_tuple(const ExponentTuple& t, const AlgebraContext& ctx) {
  if (static_cast<int>(t.exponents.size()) != ctx.d())
    throw SizeLimitError("exponent tuple has wrong length");
  for (int j : t.exponents)
    if (j < 0 || j >= ctx.m()) throw SizeLimitError("exponent out of range [0, m)");
}

}  // namespace

PhasedMonomial monomial_product(const ExponentTuple& j, const ExponentTuple& k,
                                const AlgebraContext& ctx) {
  check_tuple(j, ctx);
  check_tuple(k, ctx);
  const int m = ctx.m();
  const int d = ctx.d();

  // Moving e_a^{k_a} left across e_b^{j_b} (a < b) costs omega^{-j_b k_a}.
  long q = 0;
  long k_prefix = 0;
  PhasedMonomial out;
  out.exponents.exponents.resize(d);
  for (int b = 0; b < d; ++b) {
    q -= static_cast<long>(j.exponents[b]) * k_prefix;
    k_prefix += k.exponents[b];
    out.exponents.exponents[b] = (j.exponents[b] + k.exponents[b]) % m;
  }
  q %= m;
  if (q < 0) q += m;
  out.phase_exponent = static_cast<int>(q);
  return out;
}

PhasedMonomial monomial_inverse(const ExponentTuple& j, const AlgebraContext& ctx) {
  check_tuple(j, ctx);
  const int m = ctx.m();
  const int d = ctx.d();

  long q = 0;
  long prefix = 0;
  PhasedMonomial out;
  out.exponents.exponents.resize(d);
  for (int b = 0; b < d; ++b) {
    q -= prefix * j.exponents[b];
    prefix += j.exponents[b];
    out.exponents.exponents[b] = (m - j.exponents[b]) % m;
  }
  q %= m;
  if (q < 0) q += m;
  out.phase_exponent = static_cast<int>(q);
  return out;
}

}  // namespace gencliff
