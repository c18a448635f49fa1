#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "gencliff/context.hpp"

namespace gencliff {

/// Nonidentity monomials in display order: pure powers of single generators
/// first (by power, then generator index), then mixed monomials in colex
/// order (j_1 fastest).
std::vector<long> table_monomial_order(const AlgebraContext& ctx);

/// Product table over the nonidentity monomials; phases printed as
/// "", "w", "w2", ... Entries like "w2*e1*e2".
std::string multiplication_table_text(const AlgebraContext& ctx);

nlohmann::json multiplication_table_json(const AlgebraContext& ctx);

}  // namespace gencliff
