#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bcells/error.hpp"
#include "bcells/kl_basis.hpp"
#include "bcells/reports.hpp"
#include "bcells/signed_perm.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct WeightArgs {
  int a = 1;
  int b = 0;

  bcells::WeightFunction resolve(int n) const { return {a, b > 0 ? b : n}; }
};

void add_weight(CLI::App* cmd, WeightArgs& w) {
  cmd->add_option("--a", w.a, "L(s_i)")->check(CLI::PositiveNumber);
  cmd->add_option("--b", w.b, "L(t); defaults to n (asymptotic)")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig cells of type B_n with unequal parameters"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "tsv";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));

  int n = 3;
  WeightArgs weight;
  bool allow_rank5 = false;

  auto* table = app.add_subcommand("table", "Left-cell and orbit counts for n = 2..7");
  int table_min = 2, table_max = 7;
  bool table_oracle = false;
  table->add_option("--min", table_min)->check(CLI::Range(2, 7));
  table->add_option("--max", table_max)->check(CLI::Range(2, 7));
  table->add_flag("--oracle", table_oracle, "Cross-check rows with n <= 4 against the Hecke-algebra oracle");

  auto* verify = app.add_subcommand("verify", "Compare Vogan classes with oracle left cells");
  verify->add_option("--n", n)->required()->check(CLI::Range(2, 5));
  add_weight(verify, weight);
  verify->add_flag("--allow-rank5", allow_rank5, "Permit the oracle at n = 5");

  auto* cells = app.add_subcommand("cells", "Print a partition of W_n");
  std::string method = "vogan";
  cells->add_option("--n", n)->required()->check(CLI::Range(1, 7));
  add_weight(cells, weight);
  cells->add_option("--method", method)
      ->check(CLI::IsMember({"oracle-kl", "vogan", "rs-asymptotic", "rxi", "orbits", "area"}));
  cells->add_flag("--allow-rank5", allow_rank5, "Permit the oracle at n = 5");

  auto* orbits = app.add_subcommand("orbits", "Print the Xi-orbits of W_n");
  orbits->add_option("--n", n)->required()->check(CLI::Range(2, 7));
  add_weight(orbits, weight);

  auto* element = app.add_subcommand("element", "Describe one signed permutation");
  std::string window;
  element->add_option("--w", window, "Window, e.g. -7,-5,6,4,3,-2,1")->required();
  add_weight(element, weight);

  auto* area = app.add_subcommand("area", "Words, cells and Upsilon classes of Area_n");
  area->add_option("--n", n)->required()->check(CLI::Range(1, 7));

  auto* fibers = app.add_subcommand("fibers", "R^Xi fibers and their sizes");
  fibers->add_option("--n", n)->required()->check(CLI::Range(1, 7));
  add_weight(fibers, weight);

  auto* kl = app.add_subcommand("kl-export", "Dump the KL polynomials p_{y,w}");
  kl->add_option("--n", n)->required()->check(CLI::Range(1, 5));
  add_weight(kl, weight);
  kl->add_flag("--allow-rank5", allow_rank5, "Permit n = 5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    const auto fmt = bcells::parse_format(format);
    if (*table) {
      const auto rows = bcells::cmd_table(table_min, table_max, table_oracle);
      std::cout << bcells::format_table(rows, fmt);
      for (const auto& r : rows)
        if (!r.ok()) return kExitFalsified;
    } else if (*verify) {
      const auto report = bcells::cmd_verify(n, weight.resolve(n), allow_rank5);
      std::cout << bcells::format_verify(report, fmt);
      return report.passed() ? kExitPass : kExitFalsified;
    } else if (*cells || *orbits) {
      const auto m = *orbits ? bcells::CellMethod::Orbits : bcells::parse_cell_method(method);
      std::cout << bcells::format_cells(bcells::cmd_cells(n, weight.resolve(n), m, allow_rank5), fmt);
    } else if (*element) {
      const auto w = bcells::SignedPerm::parse(window);
      std::cout << bcells::format_element(bcells::cmd_element(w, weight.resolve(w.rank())), fmt);
    } else if (*area) {
      std::cout << bcells::cmd_area(n, fmt);
    } else if (*fibers) {
      std::cout << bcells::cmd_fibers(n, weight.resolve(n), fmt);
    } else if (*kl) {
      bcells::KLOptions options;
      options.allow_rank5 = allow_rank5;
      std::cout << bcells::kl_basis(n, weight.resolve(n), options).export_text();
    }
  } catch (const bcells::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == bcells::Error::Kind::InvariantViolation ? kExitFalsified : kExitUsage;
  }
  return kExitPass;
}
