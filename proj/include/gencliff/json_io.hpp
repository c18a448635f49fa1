#pragma once

#include <json.hpp>

#include "gencliff/matrix_rep.hpp"
#include "gencliff/spectral.hpp"

namespace gencliff {

/// {"m":3,"d":2,"coeffs":[[re,im],...]} in linear-index order.
nlohmann::json element_to_json(const AlgebraElement& u);
AlgebraElement element_from_json(const nlohmann::json& j, SizeLimits limits = {});

/// {"rows":N,"cols":N,"entries":[[re,im],...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// {"N":...,"C":[[re,im],...],"det":[re,im]}.
nlohmann::json charpoly_to_json(const CharPolyResult& result);

}  // namespace gencliff
