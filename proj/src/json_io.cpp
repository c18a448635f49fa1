#include "gencliff/json_io.hpp"

namespace gencliff {

namespace {

nlohmann::json complex_to_json(Complex c) {
  return nlohmann::json::array({c.real(), c.imag()});
}

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex value must be a [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

nlohmann::json element_to_json(const AlgebraElement& u) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (long i = 0; i < u.context().dim(); ++i)
    coeffs.push_back(complex_to_json(u.coeffs()(i)));
  return {{"m", u.context().m()}, {"d", u.context().d()}, {"coeffs", std::move(coeffs)}};
}

AlgebraElement element_from_json(const nlohmann::json& j, SizeLimits limits) {
  const AlgebraContext ctx =
      make_context(j.at("m").get<int>(), j.at("d").get<int>(), limits);
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<long>(coeffs.size()) != ctx.dim())
    throw std::invalid_argument("coeffs must hold m^d entries");
  ComplexVector c(ctx.dim());
  for (long i = 0; i < ctx.dim(); ++i) c(i) = complex_from_json(coeffs[i]);
  return AlgebraElement(ctx, std::move(c));
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back(complex_to_json(m(r, c)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const long rows = j.at("rows").get<long>();
  const long cols = j.at("cols").get<long>();
  const auto& entries = j.at("entries");
  if (rows < 0 || cols < 0 || static_cast<long>(entries.size()) != rows * cols)
    throw std::invalid_argument("entries must hold rows*cols values");
  ComplexMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m(r, c) = complex_from_json(entries[r * cols + c]);
  return m;
}

nlohmann::json charpoly_to_json(const CharPolyResult& result) {
  nlohmann::json c = nlohmann::json::array();
  for (const Complex& v : result.coefficients) c.push_back(complex_to_json(v));
  return {{"N", result.context.rep_size()},
          {"C", std::move(c)},
          {"det", complex_to_json(determinant(result))}};
}

}  // namespace gencliff
