#pragma once

// Report builders behind the command-line tool. Every number is computed; the
// library holds no table constants.

#include <optional>
#include <string>
#include <vector>

#include "bcells/partition.hpp"
#include "bcells/signed_perm.hpp"

namespace bcells {

enum class OutputFormat { Tsv, Json };
OutputFormat parse_format(std::string_view text);

/// Largest rank for which the Hecke-algebra oracle runs by default.
inline constexpr int kOracleRankBudget = 4;

struct TableRow {
  int n = 0;
  std::size_t intermediate = 0;
  std::size_t asymptotic = 0;
  std::size_t orbits = 0;
  /// YBT − 2^{n-1}, YBT, YBT + 2^n − 2 from tableau counting.
  std::size_t formula_intermediate = 0;
  std::size_t formula_asymptotic = 0;
  std::size_t formula_orbits = 0;
  /// Σ_λ (#standard bitableaux of shape λ)^2 = |W_n|.
  bool rs_count_consistent = false;
  /// Set when the row was compared class by class with the oracle.
  std::optional<bool> oracle_match;

  bool formula_derived() const { return !oracle_match.has_value(); }
  bool ok() const;
};

/// Rows for n = min_n..max_n. With `oracle`, rows with n ≤ kOracleRankBudget are
/// compared class by class with the Hecke-algebra oracle at (1,n) and (1,n-1).
std::vector<TableRow> cmd_table(int min_n, int max_n, bool oracle);
std::string format_table(const std::vector<TableRow>& rows, OutputFormat format);

struct VerifyReport {
  int n = 0;
  WeightFunction weight{1, 1};
  Regime regime = Regime::Low;
  std::size_t vogan_classes = 0;
  std::size_t round_count = 0;
  std::size_t oracle_classes = 0;
  bool partitions_equal = false;
  /// Equality with left cells is only asserted in the asymptotic and intermediate regimes.
  bool asserted = false;
  /// Area_n restricted Vogan classes equal the Γ cells (asymptotic) or the Υ classes (intermediate).
  std::optional<bool> area_lists_ok;
  bool areadiff_ok = false;
  std::vector<std::string> diffs;

  bool passed() const;
};

/// Requires n ≤ kOracleRankBudget (or n = 5 with allow_rank5) and b > (n-2)a.
VerifyReport cmd_verify(int n, const WeightFunction& weight, bool allow_rank5 = false);
std::string format_verify(const VerifyReport& report, OutputFormat format);

/// An asymptotic left cell is an intermediate left cell iff it avoids Area_n.
/// Returns one line per offending cell.
std::vector<std::string> check_areadiff(const GroupPartition& asymptotic, const GroupPartition& intermediate,
                                        int n);

enum class CellMethod { OracleKl, Vogan, RsAsymptotic, Rxi, Orbits, Area };
CellMethod parse_cell_method(std::string_view text);
std::string_view to_string(CellMethod method);

struct CellsReport {
  int n = 0;
  WeightFunction weight{1, 1};
  CellMethod method = CellMethod::Vogan;
  /// Element windows with their class labels (all of W_n, or Area_n for `area`).
  std::vector<std::pair<std::string, ClassId>> labels;
  std::size_t num_classes = 0;
  std::size_t round_count = 0;
};

CellsReport cmd_cells(int n, const WeightFunction& weight, CellMethod method, bool allow_rank5 = false);
std::string format_cells(const CellsReport& report, OutputFormat format);

struct ElementReport {
  std::string window;
  int length = 0;
  int length_t = 0;
  std::string rdes;
  std::string rxi;
  std::string a_tableau;
  std::string b_tableau;
  std::string shape;
  bool in_area = false;
  bool in_reduced_area = false;
  std::optional<ClassId> orbit;
  std::optional<ClassId> vogan_class;
};

ElementReport cmd_element(const SignedPerm& w, const WeightFunction& weight);
std::string format_element(const ElementReport& report, OutputFormat format);

/// Words, Γ cells and Υ classes of Area_n.
std::string cmd_area(int n, OutputFormat format);

/// R^Ξ fibers with their sizes.
std::string cmd_fibers(int n, const WeightFunction& weight, OutputFormat format);

}  // namespace bcells
