#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gencliff/checks.hpp"
#include "gencliff/expr.hpp"
#include "gencliff/json_io.hpp"
#include "gencliff/table.hpp"

namespace {

using namespace gencliff;

struct CommonOptions {
  int m = 0;
  int d = 0;
  std::string format = "text";
  double tol = 1e-9;
  long max_dim = 4096;
  long max_rep = 729;
};

void add_context_flags(CLI::App* cmd, CommonOptions& opt, bool required) {
  auto* m = cmd->add_option("--m", opt.m, "generator order");
  auto* d = cmd->add_option("--d", opt.d, "generator count");
  if (required) {
    m->required();
    d->required();
  }
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--tol", opt.tol, "verification tolerance");
  cmd->add_option("--max-dim", opt.max_dim, "override the m^d size cap");
  cmd->add_option("--max-rep", opt.max_rep, "override the N size cap");
}

AlgebraContext build_context(const CommonOptions& opt) {
  return make_context(opt.m, opt.d, SizeLimits{opt.max_dim, opt.max_rep});
}

std::string read_expression(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

nlohmann::json value_to_json(const Value& value) {
  if (const auto* scalar = std::get_if<Complex>(&value))
    return {{"kind", "scalar"},
            {"value", nlohmann::json::array({scalar->real(), scalar->imag()})}};
  if (const auto* element = std::get_if<AlgebraElement>(&value))
    return {{"kind", "element"}, {"value", element_to_json(*element)}};
  if (const auto* matrix = std::get_if<ComplexMatrix>(&value))
    return {{"kind", "matrix"}, {"value", matrix_to_json(*matrix)}};
  return {{"kind", "charpoly"}, {"value", charpoly_to_json(std::get<CharPolyResult>(value))}};
}

void report_error(const std::string& format, const std::string& message,
                  std::optional<std::size_t> position = std::nullopt) {
  if (format == "json") {
    nlohmann::json err = {{"error", message}};
    if (position) err["position"] = *position;
    std::cerr << err.dump() << "\n";
  } else {
    std::cerr << "error: " << message;
    if (position) std::cerr << " (at position " << *position << ")";
    std::cerr << "\n";
  }
}

int run_eval(const CommonOptions& opt, const std::string& expression) {
  const AlgebraContext ctx = build_context(opt);
  const AstPtr ast = parse(read_expression(expression), ctx);
  const Value value = evaluate(*ast, ctx);
  if (opt.format == "json")
    std::cout << value_to_json(value).dump() << "\n";
  else
    std::cout << value_text(value) << "\n";
  return 0;
}

int run_table(const CommonOptions& opt) {
  const AlgebraContext ctx = build_context(opt);
  if (opt.format == "json")
    std::cout << multiplication_table_json(ctx).dump() << "\n";
  else
    std::cout << multiplication_table_text(ctx);
  return 0;
}

int run_charpoly(const CommonOptions& opt, const std::string& expression) {
  const AlgebraContext ctx = build_context(opt);
  const AstPtr ast = parse(read_expression(expression), ctx);
  const Value value = evaluate(*ast, ctx);
  CharPolyResult result = [&] {
    if (const auto* ready = std::get_if<CharPolyResult>(&value)) return *ready;
    if (const auto* element = std::get_if<AlgebraElement>(&value))
      return faddeev_leverrier(*element);
    if (const auto* scalar = std::get_if<Complex>(&value))
      return faddeev_leverrier(scalar_element(ctx, *scalar));
    throw std::invalid_argument("charpoly needs an element-valued expression");
  }();
  if (result.norm_warning)
    std::cerr << "warning: element norm exceeds 1e3; iterates may overflow\n";
  if (opt.format == "json") {
    std::cout << charpoly_to_json(result).dump() << "\n";
  } else {
    std::cout << value_text(Value(std::move(result))) << "\n";
  }
  return 0;
}

int run_rep(const CommonOptions& opt, const std::string& expression) {
  const AlgebraContext ctx = build_context(opt);
  const AstPtr ast = parse(read_expression(expression), ctx);
  const Value value = evaluate(*ast, ctx);
  ComplexMatrix matrix = [&] {
    if (const auto* ready = std::get_if<ComplexMatrix>(&value)) return *ready;
    if (const auto* element = std::get_if<AlgebraElement>(&value)) return represent(*element);
    if (const auto* scalar = std::get_if<Complex>(&value))
      return represent(scalar_element(ctx, *scalar));
    throw std::invalid_argument("rep needs an element-valued expression");
  }();
  if (opt.format == "json")
    std::cout << matrix_to_json(matrix).dump() << "\n";
  else
    std::cout << value_text(Value(std::move(matrix))) << "\n";
  return 0;
}

int run_basis(const CommonOptions& opt, const std::string& kind) {
  const AlgebraContext ctx = build_context(opt);
  const LieBasis basis =
      kind == "u" ? unitary_lie_basis(ctx) : special_unitary_lie_basis(ctx);
  if (opt.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const AlgebraElement& x : basis.elements) out.push_back(element_to_json(x));
    std::cout << out.dump() << "\n";
  } else {
    for (const AlgebraElement& x : basis.elements) std::cout << element_text(x) << "\n";
  }
  return 0;
}

int run_su3_tables(const CommonOptions& opt) {
  const AlgebraContext ctx = make_context(3, 2);
  const Su3Tables tables = su3_tables(ctx);
  if (opt.format == "json") {
    nlohmann::json out;
    out["tau"] = nlohmann::json::array();
    for (const AlgebraElement& t : tables.tau) out["tau"].push_back(element_to_json(t));
    for (const auto& [key, mats] :
         {std::pair{"beta_tau", &tables.beta_tau}, {"gell_mann", &tables.gell_mann},
          {"theta", &tables.theta}}) {
      out[key] = nlohmann::json::array();
      for (const ComplexMatrix& m : *mats) out[key].push_back(matrix_to_json(m));
    }
    for (const auto& [key, table] : {std::pair{"tau_to_theta", &tables.tau_to_theta},
                                     {"theta_to_tau", &tables.theta_to_tau}}) {
      nlohmann::json rows = nlohmann::json::array();
      for (int r = 0; r < 8; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 8; ++c) row.push_back((*table)(r, c));
        rows.push_back(std::move(row));
      }
      out[key] = std::move(rows);
    }
    std::cout << out.dump() << "\n";
  } else {
    for (std::size_t j = 0; j < tables.tau.size(); ++j)
      std::cout << "tau" << j + 1 << " = " << element_text(tables.tau[j]) << "\n";
    std::cout << "tau_to_theta =\n" << tables.tau_to_theta << "\n";
    std::cout << "theta_to_tau =\n" << tables.theta_to_tau << "\n";
  }
  return 0;
}

int run_verify(const CommonOptions& opt, std::uint64_t seed, bool quiet) {
  checks::Options options{seed, opt.tol};
  std::vector<checks::CheckResult> results;
  if (opt.m != 0 || opt.d != 0) {
    if (opt.m == 0 || opt.d == 0)
      throw std::invalid_argument("verify needs both --m and --d, or neither");
    results = checks::run_config_suite(build_context(opt), options);
    if (opt.m == 3 && opt.d == 2) {
      results.push_back(checks::multiplication_table_reference());
      results.push_back(checks::representation_reference(seed));
      results.push_back(checks::ternary_closed_forms_agree(seed + 100));
      results.push_back(checks::ternary_inverse_forms(seed + 101));
      results.push_back(checks::ternary_basis_reference());
    }
  } else {
    results = checks::run_full_suite(options);
  }

  int failures = 0;
  for (const checks::CheckResult& r : results) {
    if (!r.passed) ++failures;
    if (!quiet || !r.passed)
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
  }
  std::cout << (failures == 0 ? "verification passed" : "verification FAILED") << " ("
            << results.size() - failures << "/" << results.size() << " checks)\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculator for generalized Clifford algebras"};
  app.require_subcommand(1);

  CommonOptions eval_opt, table_opt, charpoly_opt, rep_opt, basis_opt, su3_opt, verify_opt;
  std::string eval_expr, charpoly_expr, rep_expr, basis_kind;
  std::uint64_t verify_seed = 42;
  bool verify_quiet = false;

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
  add_context_flags(eval_cmd, eval_opt, true);
  eval_cmd->add_option("expression", eval_expr, "expression ('-' reads stdin)")->required();

  CLI::App* table_cmd = app.add_subcommand("table", "print the multiplication table");
  add_context_flags(table_cmd, table_opt, true);

  CLI::App* charpoly_cmd =
      app.add_subcommand("charpoly", "characteristic polynomial of an expression");
  add_context_flags(charpoly_cmd, charpoly_opt, true);
  charpoly_cmd->add_option("expression", charpoly_expr, "expression ('-' reads stdin)")
      ->required();

  CLI::App* rep_cmd = app.add_subcommand("rep", "matrix representation of an expression");
  add_context_flags(rep_cmd, rep_opt, true);
  rep_cmd->add_option("expression", rep_expr, "expression ('-' reads stdin)")->required();

  CLI::App* basis_cmd = app.add_subcommand("basis", "Lie algebra basis (u or su)");
  basis_cmd->add_option("kind", basis_kind, "u or su")
      ->required()
      ->check(CLI::IsMember({"u", "su"}));
  add_context_flags(basis_cmd, basis_opt, true);

  CLI::App* su3_cmd = app.add_subcommand("su3-tables", "tau basis and Gell-Mann tables");
  su3_cmd->add_option("--format", su3_opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the property verification suite");
  add_context_flags(verify_cmd, verify_opt, false);
  verify_cmd->add_option("--seed", verify_seed, "random seed");
  verify_cmd->add_flag("--quiet", verify_quiet, "print failing checks only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const std::string format = app.got_subcommand(eval_cmd)       ? eval_opt.format
                             : app.got_subcommand(table_cmd)    ? table_opt.format
                             : app.got_subcommand(charpoly_cmd) ? charpoly_opt.format
                             : app.got_subcommand(rep_cmd)      ? rep_opt.format
                             : app.got_subcommand(basis_cmd)    ? basis_opt.format
                             : app.got_subcommand(su3_cmd)      ? su3_opt.format
                                                                : verify_opt.format;
  try {
    if (app.got_subcommand(eval_cmd)) return run_eval(eval_opt, eval_expr);
    if (app.got_subcommand(table_cmd)) return run_table(table_opt);
    if (app.got_subcommand(charpoly_cmd)) return run_charpoly(charpoly_opt, charpoly_expr);
    if (app.got_subcommand(rep_cmd)) return run_rep(rep_opt, rep_expr);
    if (app.got_subcommand(basis_cmd)) return run_basis(basis_opt, basis_kind);
    if (app.got_subcommand(su3_cmd)) return run_su3_tables(su3_opt);
    if (app.got_subcommand(verify_cmd)) return run_verify(verify_opt, verify_seed, verify_quiet);
  } catch (const ParseError& e) {
    report_error(format, e.what(), e.position());
    return 1;
  } catch (const std::exception& e) {
    report_error(format, e.what());
    return 1;
  }
  return 0;
}
