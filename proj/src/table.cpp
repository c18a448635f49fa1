#include "gencliff/table.hpp"

#include <algorithm>

#include "gencliff/expr.hpp"

namespace gencliff {

std::vector<long> table_monomial_order(const AlgebraContext& ctx) {
  const int m = ctx.m();
  const int d = ctx.d();
  std::vector<long> order;
  order.reserve(ctx.dim() - 1);

  // Pure powers e_a^p, p ascending then generator index ascending.
  for (int p = 1; p < m; ++p) {
    for (int a = 0; a < d; ++a) {
      ExponentTuple t;
      t.exponents.assign(d, 0);
      t.exponents[a] = p;
      order.push_back(ctx.index_of(t));
    }
  }

  // Mixed monomials (two or more active generators) in colex order.
  std::vector<long> mixed;
  for (long i = 1; i < ctx.dim(); ++i) {
    const ExponentTuple t = ctx.tuple_of(i);
    const int active =
        static_cast<int>(std::count_if(t.exponents.begin(), t.exponents.end(),
                                       [](int j) { return j > 0; }));
    if (active >= 2) mixed.push_back(i);
  }
  std::sort(mixed.begin(), mixed.end(), [&](long a, long b) {
    const ExponentTuple ta = ctx.tuple_of(a);
    const ExponentTuple tb = ctx.tuple_of(b);
    for (int pos = d - 1; pos >= 0; --pos)
      if (ta.exponents[pos] != tb.exponents[pos])
        return ta.exponents[pos] < tb.exponents[pos];
    return false;
  });
  order.insert(order.end(), mixed.begin(), mixed.end());
  return order;
}

namespace {

std::string phase_text(int q) {
  if (q == 0) return "";
  if (q == 1) return "w*";
  return "w" + std::to_string(q) + "*";
}

std::string entry_text(const AlgebraContext& ctx, const PhasedMonomial& p) {
  return phase_text(p.phase_exponent) +
         monomial_text(ctx, ctx.index_of(p.exponents));
}

}  // namespace

std::string multiplication_table_text(const AlgebraContext& ctx) {
  const std::vector<long> order = table_monomial_order(ctx);
  const std::size_t n = order.size();

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = monomial_text(ctx, order[i]);

  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  std::size_t width = 0;
  for (const std::string& label : labels) width = std::max(width, label.size());
  for (std::size_t r = 0; r < n; ++r) {
    const ExponentTuple tr = ctx.tuple_of(order[r]);
    for (std::size_t c = 0; c < n; ++c) {
      cells[r][c] = entry_text(ctx, monomial_product(tr, ctx.tuple_of(order[c]), ctx));
      width = std::max(width, cells[r][c].size());
    }
  }

  auto pad = [&](const std::string& s) {
    return s + std::string(width - s.size(), ' ');
  };
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };

  std::string out;
  {
    std::string line = pad("") + " |";
    for (std::size_t c = 0; c < n; ++c) line += " " + pad(labels[c]);
    out += rstrip(line) + "\n";
  }
  out += std::string(width, '-') + "-+" + std::string(n * (width + 1), '-') + "\n";
  for (std::size_t r = 0; r < n; ++r) {
    std::string line = pad(labels[r]) + " |";
    for (std::size_t c = 0; c < n; ++c) line += " " + pad(cells[r][c]);
    out += rstrip(line) + "\n";
  }
  return out;
}

nlohmann::json multiplication_table_json(const AlgebraContext& ctx) {
  const std::vector<long> order = table_monomial_order(ctx);
  nlohmann::json monomials = nlohmann::json::array();
  for (long i : order) monomials.push_back(monomial_text(ctx, i));

  nlohmann::json rows = nlohmann::json::array();
  for (long r : order) {
    nlohmann::json row = nlohmann::json::array();
    const ExponentTuple tr = ctx.tuple_of(r);
    for (long c : order) {
      const PhasedMonomial p = monomial_product(tr, ctx.tuple_of(c), ctx);
      row.push_back({{"phase", p.phase_exponent},
                     {"monomial", monomial_text(ctx, ctx.index_of(p.exponents))}});
    }
    rows.push_back(std::move(row));
  }
  return {{"m", ctx.m()},
          {"d", ctx.d()},
          {"monomials", std::move(monomials)},
          {"entries", std::move(rows)}};
}

}  // namespace gencliff
