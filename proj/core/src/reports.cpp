#include "bcells/reports.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "bcells/area.hpp"
#include "bcells/cells.hpp"
#include "bcells/descents.hpp"
#include "bcells/error.hpp"
#include "bcells/kl_basis.hpp"
#include "bcells/tableau.hpp"
#include "bcells/vogan.hpp"

namespace bcells {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxDiffLines = 10;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_oracle_budget(int n, bool allow_rank5) {
  if (n > kOracleRankBudget && !(n == 5 && allow_rank5))
    fail(Error::Kind::Budget, "the Hecke-algebra oracle is limited to n <= " + std::to_string(kOracleRankBudget) +
                                  " (n = 5 with --allow-rank5)");
}

GroupPartition oracle_left_cells(int n, const WeightFunction& weight, bool allow_rank5) {
  require_oracle_budget(n, allow_rank5);
  KLOptions options;
  options.allow_rank5 = allow_rank5;
  return compute_cells(n, weight, options).left;
}

std::string class_text(const GroupEnumeration& group, const std::vector<std::uint32_t>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) out += (i ? " " : "") + group.at(members[i]).to_string();
  return out + "}";
}

/// Classes of `x` that are not classes of `y`.
std::vector<std::string> partition_diff(const GroupPartition& x, const GroupPartition& y, const GroupEnumeration& group,
                                        std::string_view x_name, std::string_view y_name) {
  std::vector<std::string> out;
  const auto y_sizes = y.class_sizes();
  for (const auto& cls : x.classes()) {
    const auto target = y.class_of(cls.front());
    const bool same = y_sizes[target] == cls.size() &&
                      std::all_of(cls.begin(), cls.end(), [&](std::uint32_t w) { return y.class_of(w) == target; });
    if (same) continue;
    if (out.size() == kMaxDiffLines) {
      out.push_back("...");
      break;
    }
    out.push_back(std::string(x_name) + " class " + class_text(group, cls) + " is not a " + std::string(y_name) +
                  " class");
  }
  return out;
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "tsv") return OutputFormat::Tsv;
  if (text == "json") return OutputFormat::Json;
  fail(Error::Kind::Parse, "unknown format '" + std::string(text) + "' (expected tsv or json)");
}

bool TableRow::ok() const {
  return intermediate == formula_intermediate && asymptotic == formula_asymptotic && orbits == formula_orbits &&
         rs_count_consistent && oracle_match.value_or(true);
}

std::vector<TableRow> cmd_table(int min_n, int max_n, bool oracle) {
  if (min_n < 2 || max_n > kMaxEnumerationRank || min_n > max_n)
    fail(Error::Kind::InvalidRank, "table ranks must satisfy 2 <= min <= max <= 7");
  std::vector<TableRow> rows;
  for (int n = min_n; n <= max_n; ++n) {
    const VoganContext ctx(n);
    TableRow row;
    row.n = n;
    const WeightFunction asym(1, n), inter(1, n - 1);
    const auto a_run = ctx.vogan_classes(asym);
    const auto i_run = ctx.vogan_classes(inter);
    row.asymptotic = a_run.final.num_classes();
    row.intermediate = i_run.final.num_classes();
    row.orbits = ctx.orbits().num_classes();
    const auto ybt = count_standard_bitableaux(n);
    row.formula_asymptotic = ybt;
    row.formula_intermediate = ybt - (std::size_t{1} << (n - 1));
    row.formula_orbits = ybt + (std::size_t{1} << n) - 2;
    std::uint64_t total = 0;
    for (const auto& lambda : bipartitions(n)) {
      const auto f = count_standard_bitableaux(lambda);
      total += f * f;
    }
    row.rs_count_consistent = total == group_order(n);
    if (oracle && n <= kOracleRankBudget)
      row.oracle_match =
          a_run.final == oracle_left_cells(n, asym, false) && i_run.final == oracle_left_cells(n, inter, false);
    rows.push_back(row);
  }
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows, OutputFormat format) {
  auto check = [](const TableRow& r) { return r.formula_derived() ? "formula-derived" : "oracle"; };
  if (format == OutputFormat::Json) {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"n", r.n},
                     {"intermediate", r.intermediate},
                     {"asymptotic", r.asymptotic},
                     {"orbits", r.orbits},
                     {"check", check(r)},
                     {"ok", r.ok()}});
    return dump(out);
  }
  std::ostringstream os;
  os << "n\tintermediate\tasymptotic\torbits\tcheck\tstatus\n";
  for (const auto& r : rows)
    os << r.n << '\t' << r.intermediate << '\t' << r.asymptotic << '\t' << r.orbits << '\t' << check(r) << '\t'
       << (r.ok() ? "ok" : "MISMATCH") << '\n';
  return os.str();
}

bool VerifyReport::passed() const {
  return (!asserted || partitions_equal) && area_lists_ok.value_or(true) && areadiff_ok;
}

std::vector<std::string> check_areadiff(const GroupPartition& asymptotic, const GroupPartition& intermediate, int n) {
  const GroupEnumeration group(n);
  std::vector<std::string> out;
  const auto inter_sizes = intermediate.class_sizes();
  for (const auto& cls : asymptotic.classes()) {
    const auto target = intermediate.class_of(cls.front());
    const bool survives =
        inter_sizes[target] == cls.size() &&
        std::all_of(cls.begin(), cls.end(), [&](std::uint32_t w) { return intermediate.class_of(w) == target; });
    const bool avoids = std::none_of(cls.begin(), cls.end(), [&](std::uint32_t w) { return in_area(group.at(w)); });
    if (survives != avoids)
      out.push_back("asymptotic cell " + class_text(group, cls) + (survives ? " survives" : " does not survive") +
                    " at b/a = n-1 but " + (avoids ? "avoids" : "meets") + " Area_n");
  }
  return out;
}

VerifyReport cmd_verify(int n, const WeightFunction& weight, bool allow_rank5) {
  require_oracle_budget(n, allow_rank5);
  if (n < 2) fail(Error::Kind::InvalidRank, "verify requires n >= 2");
  VerifyReport report;
  report.n = n;
  report.weight = weight;
  report.regime = classify(weight, n);
  const VoganContext ctx(n);
  const auto run = ctx.vogan_classes(weight);
  report.vogan_classes = run.final.num_classes();
  report.round_count = run.round_count();
  const auto oracle = oracle_left_cells(n, weight, allow_rank5);
  report.oracle_classes = oracle.num_classes();
  report.partitions_equal = run.final == oracle;
  report.asserted = report.regime == Regime::Asymptotic || report.regime == Regime::Intermediate;
  if (report.asserted && !report.partitions_equal) {
    auto d = partition_diff(run.final, oracle, ctx.group(), "Vogan", "left-cell");
    report.diffs.insert(report.diffs.end(), d.begin(), d.end());
  }

  if (report.asserted) {
    const auto words = build_words(n);
    std::vector<ElementIndex> elements;
    GroupPartition expected;
    if (report.regime == Regime::Asymptotic) {
      auto dec = area_decomposition(ctx.group(), words);
      elements = std::move(dec.elements);
      expected = std::move(dec.partition);
    } else {
      auto dec = upsilon_decomposition(ctx.group(), words);
      elements = std::move(dec.elements);
      expected = std::move(dec.partition);
    }
    bool ok = run.final.restricted(elements) == expected;
    if (!ok) report.diffs.push_back("Vogan classes on Area_n differ from the explicit class lists");
    std::vector<bool> inside(ctx.group().size(), false);
    for (auto e : elements) inside[e] = true;
    for (const auto& cls : run.final.classes()) {
      const bool first = inside[cls.front()];
      if (std::any_of(cls.begin(), cls.end(), [&](std::uint32_t w) { return inside[w] != first; })) {
        ok = false;
        report.diffs.push_back("Vogan class " + class_text(ctx.group(), cls) + " straddles Area_n");
      }
    }
    report.area_lists_ok = ok;
  }

  const WeightFunction asym(1, n), inter(1, n - 1);
  const auto asym_cells = report.regime == Regime::Asymptotic && weight == asym ? oracle : oracle_left_cells(n, asym, allow_rank5);
  const auto inter_cells = weight == inter ? oracle : oracle_left_cells(n, inter, allow_rank5);
  auto d = check_areadiff(asym_cells, inter_cells, n);
  report.areadiff_ok = d.empty();
  report.diffs.insert(report.diffs.end(), d.begin(), d.end());
  return report;
}

std::string format_verify(const VerifyReport& r, OutputFormat format) {
  const std::string status = r.asserted ? (r.partitions_equal ? "equal" : "DIFFER")
                                        : std::string("conjectural regime (") + (r.partitions_equal ? "equal" : "differ") + ")";
  if (format == OutputFormat::Json) {
    json out = {{"n", r.n},
                {"a", r.weight.a()},
                {"b", r.weight.b()},
                {"regime", to_string(r.regime)},
                {"num_classes", r.vogan_classes},
                {"round_count", r.round_count},
                {"oracle_classes", r.oracle_classes},
                {"partitions", status},
                {"areadiff_ok", r.areadiff_ok},
                {"passed", r.passed()},
                {"diffs", r.diffs}};
    out["area_lists_ok"] = r.area_lists_ok ? json(*r.area_lists_ok) : json(nullptr);
    return dump(out);
  }
  std::ostringstream os;
  os << "n\t" << r.n << "\nweight\t" << r.weight.to_string() << "\nregime\t" << to_string(r.regime)
     << "\nvogan_classes\t" << r.vogan_classes << "\nround_count\t" << r.round_count << "\noracle_classes\t"
     << r.oracle_classes << "\npartitions\t" << status << "\narea_lists\t"
     << (r.area_lists_ok ? (*r.area_lists_ok ? "ok" : "MISMATCH") : "not checked") << "\nareadiff\t"
     << (r.areadiff_ok ? "ok" : "MISMATCH") << "\nresult\t" << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& d : r.diffs) os << "diff\t" << d << '\n';
  return os.str();
}

CellMethod parse_cell_method(std::string_view text) {
  for (auto m : {CellMethod::OracleKl, CellMethod::Vogan, CellMethod::RsAsymptotic, CellMethod::Rxi, CellMethod::Orbits,
                 CellMethod::Area})
    if (to_string(m) == text) return m;
  fail(Error::Kind::Parse, "unknown method '" + std::string(text) + "'");
}

std::string_view to_string(CellMethod method) {
  switch (method) {
    case CellMethod::OracleKl: return "oracle-kl";
    case CellMethod::Vogan: return "vogan";
    case CellMethod::RsAsymptotic: return "rs-asymptotic";
    case CellMethod::Rxi: return "rxi";
    case CellMethod::Orbits: return "orbits";
    case CellMethod::Area: return "area";
  }
  return "?";
}

CellsReport cmd_cells(int n, const WeightFunction& weight, CellMethod method, bool allow_rank5) {
  CellsReport report;
  report.n = n;
  report.weight = weight;
  report.method = method;
  if (method == CellMethod::OracleKl) require_oracle_budget(n, allow_rank5);
  const GroupEnumeration group(n);
  std::vector<ElementIndex> elements;
  GroupPartition partition;
  switch (method) {
    case CellMethod::OracleKl:
      partition = oracle_left_cells(n, weight, allow_rank5);
      break;
    case CellMethod::Vogan: {
      const auto run = VoganContext(n).vogan_classes(weight);
      partition = run.final;
      report.round_count = run.round_count();
      break;
    }
    case CellMethod::RsAsymptotic:
      partition = GroupPartition::from_keys<Bitableau>(
          n, group.size(), [&](std::size_t i) { return rs_generalized(group.at(static_cast<ElementIndex>(i))).second; });
      break;
    case CellMethod::Rxi:
      partition = rxi_partition(group, weight);
      break;
    case CellMethod::Orbits:
      partition = xi_orbits(n, weight);
      break;
    case CellMethod::Area: {
      auto dec = area_decomposition(group, build_words(n));
      elements = std::move(dec.elements);
      partition = std::move(dec.partition);
      break;
    }
  }
  if (elements.empty() && method != CellMethod::Area)
    for (ElementIndex i = 0; i < group.size(); ++i) elements.push_back(i);
  for (std::size_t pos = 0; pos < elements.size(); ++pos)
    report.labels.emplace_back(group.at(elements[pos]).to_string(), partition.class_of(pos));
  report.num_classes = partition.num_classes();
  return report;
}

std::string format_cells(const CellsReport& r, OutputFormat format) {
  if (format == OutputFormat::Json)
    return dump({{"n", r.n},
                 {"a", r.weight.a()},
                 {"b", r.weight.b()},
                 {"method", to_string(r.method)},
                 {"num_classes", r.num_classes},
                 {"round_count", r.round_count}});
  std::string out;
  for (const auto& [window, label] : r.labels) out += window + "\t" + std::to_string(label) + "\n";
  return out;
}

ElementReport cmd_element(const SignedPerm& w, const WeightFunction& weight) {
  const int n = w.rank();
  ElementReport r;
  r.window = w.to_string();
  r.length = w.length();
  r.length_t = w.length_t();
  r.rdes = w.right_descents() ? gen_set_to_string(w.right_descents()) : "{}";
  r.rxi = rxi(w, weight).label();
  const auto [a, b] = rs_generalized(w);
  r.a_tableau = a.to_string();
  r.b_tableau = b.to_string();
  r.shape = shape(w).to_string();
  r.in_area = in_area(w);
  r.in_reduced_area = in_area_reduced(w);
  if (n >= 2 && n <= kMaxEnumerationRank && weight.slope_greater(n - 2)) {
    const VoganContext ctx(n);
    const auto idx = ctx.group().index_of(w);
    r.orbit = ctx.orbits().class_of(idx);
    r.vogan_class = ctx.vogan_classes(weight).final.class_of(idx);
  }
  return r;
}

std::string format_element(const ElementReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json out = {{"w", r.window},
                {"length", r.length},
                {"length_t", r.length_t},
                {"rdes", r.rdes},
                {"rxi", r.rxi},
                {"A", r.a_tableau},
                {"B", r.b_tableau},
                {"shape", r.shape},
                {"area", r.in_area},
                {"reduced_area", r.in_reduced_area}};
    out["orbit"] = r.orbit ? json(*r.orbit) : json(nullptr);
    out["vogan_class"] = r.vogan_class ? json(*r.vogan_class) : json(nullptr);
    return dump(out);
  }
  std::ostringstream os;
  auto opt = [](const std::optional<ClassId>& x) { return x ? std::to_string(*x) : std::string("n/a"); };
  os << "w\t" << r.window << "\nlength\t" << r.length << "\nlength_t\t" << r.length_t << "\nrdes\t" << r.rdes
     << "\nrxi\t" << r.rxi << "\nA\t" << r.a_tableau << "\nB\t" << r.b_tableau << "\nshape\t" << r.shape << "\narea\t"
     << (r.in_area ? "yes" : "no") << "\nreduced_area\t" << (r.in_reduced_area ? "yes" : "no") << "\norbit\t"
     << opt(r.orbit) << "\nvogan_class\t" << opt(r.vogan_class) << '\n';
  return os.str();
}

std::string cmd_area(int n, OutputFormat format) {
  const GroupEnumeration group(n);
  const auto words = build_words(n);
  const auto cells = area_decomposition(group, words);
  const auto ups = upsilon_decomposition(group, words);
  auto members = [](const std::vector<SignedPerm>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
  };
  if (format == OutputFormat::Json) {
    json out = {{"n", n}, {"area_size", cells.elements.size()}};
    json ws = json::array();
    for (int q = 0; q <= n; ++q)
      ws.push_back({{"q", q},
                    {"a", to_string(words.a[q])},
                    {"b", to_string(words.b[q])},
                    {"p", to_string(words.p[q])},
                    {"sigma", words.sigma[q].to_string()}});
    out["words"] = ws;
    json cs = json::array();
    for (const auto& c : cells.cells)
      cs.push_back({{"q", c.q}, {"tau", to_string(reduced_word(c.tau))}, {"members", members(c.members)}});
    out["cells"] = cs;
    json us = json::array();
    for (const auto& u : ups.classes)
      us.push_back({{"q", u.q}, {"tau", to_string(reduced_word(u.tau))}, {"members", members(u.members)}});
    out["upsilon"] = us;
    return dump(out);
  }
  std::ostringstream os;
  os << "# words\nq\ta_q\tb_q\tp_q\tsigma_q\n";
  for (int q = 0; q <= n; ++q)
    os << q << '\t' << to_string(words.a[q]) << '\t' << to_string(words.b[q]) << '\t' << to_string(words.p[q]) << '\t'
       << words.sigma[q].to_string() << '\n';
  auto list = [&](const std::string& title, auto const& items) {
    os << "# " << title << "\nq\ttau\tsize\tmembers\n";
    for (const auto& c : items) {
      os << c.q << '\t' << to_string(reduced_word(c.tau)) << '\t' << c.members.size() << '\t';
      for (std::size_t i = 0; i < c.members.size(); ++i) os << (i ? " " : "") << c.members[i].to_string();
      os << '\n';
    }
  };
  list("cells", cells.cells);
  list("upsilon", ups.classes);
  return os.str();
}

std::string cmd_fibers(int n, const WeightFunction& weight, OutputFormat format) {
  const auto fibers = rxi_fibers(GroupEnumeration(n), weight);
  if (format == OutputFormat::Json) {
    json fs = json::array();
    for (const auto& f : fibers) fs.push_back({{"label", f.label}, {"size", f.size}});
    return dump({{"n", n}, {"a", weight.a()}, {"b", weight.b()}, {"num_fibers", fibers.size()}, {"fibers", fs}});
  }
  return fibers_tsv(fibers);
}

}  // namespace bcells
