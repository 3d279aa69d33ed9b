// Command line front end: polynomials for named families or user-supplied
// inputs, cross-verification suites, and CSV tables.
//
// Exit codes: 0 = expected result (including reproduced documented
// discrepancies), 1 = unexpected mathematical disagreement, 2 = usage or
// input error.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nestoh/binary_trees.hpp"
#include "nestoh/btrees.hpp"
#include "nestoh/building_set.hpp"
#include "nestoh/families.hpp"
#include "nestoh/graphs.hpp"
#include "nestoh/io.hpp"
#include "nestoh/posets.hpp"
#include "nestoh/verify.hpp"

namespace {

struct PolyConfig {
  std::string family;
  int n = 0;
  std::optional<int> k;
  std::string building_set_path;
  std::string graph_path;
  std::string posets_path;
  std::string vars = "tq";
  std::string format = "plain";
};

struct VerifyConfig {
  std::vector<std::string> suites;
  int max_n = 6;
  std::string report_path;
};

struct TableConfig {
  std::string family;
  int max_n = 6;
};

struct PosetsConfig {
  std::string posets_path;
  std::string vars = "tq";
};

nestoh::PolyFormat parse_format(const std::string& f) {
  if (f == "latex") return nestoh::PolyFormat::latex;
  if (f == "json") return nestoh::PolyFormat::json;
  if (f == "csv") return nestoh::PolyFormat::csv;
  return nestoh::PolyFormat::plain;
}

int run_poly(const PolyConfig& cfg) {
  int sources = !cfg.family.empty() + !cfg.building_set_path.empty() +
                !cfg.graph_path.empty() + !cfg.posets_path.empty();
  if (sources != 1) {
    std::cerr << "error: give exactly one of --family, --building-set, "
                 "--graph, --posets\n";
    return 2;
  }

  nestoh::Polynomial h;
  if (!cfg.posets_path.empty()) {
    if (cfg.vars == "tqu") {
      std::cerr << "error: --vars tqu needs a building set or a graph; "
                   "poset lists carry no u statistic\n";
      return 2;
    }
    std::vector<nestoh::Poset> posets =
        nestoh::posets_from_json(nestoh::read_file(cfg.posets_path));
    h = nestoh::qh_from_posets(posets);
    if (cfg.vars == "t") h = h.specialized(nestoh::Var::q);
  } else {
    nestoh::BuildingSet b = [&] {
      if (!cfg.family.empty()) return nestoh::family(cfg.family, cfg.n, cfg.k);
      if (!cfg.building_set_path.empty())
        return nestoh::building_set_from_json(
            nestoh::read_file(cfg.building_set_path));
      return nestoh::graphical_building_set(
          nestoh::graph_from_text(nestoh::read_file(cfg.graph_path)));
    }();
    nestoh::HVars vars = cfg.vars == "t"    ? nestoh::HVars::t
                         : cfg.vars == "tqu" ? nestoh::HVars::tqu
                                             : nestoh::HVars::tq;
    h = nestoh::h_polynomial(b, vars);
  }
  std::cout << h.str(parse_format(cfg.format)) << "\n";
  return 0;
}

int run_verify(const VerifyConfig& cfg) {
  nestoh::VerifyOptions opts;
  opts.max_n = cfg.max_n;
  for (const std::string& s : cfg.suites) {
    if (s == "all") {
      opts.suites.clear();
      break;
    }
    opts.suites.push_back(s == "palindromicity" ? "palindromic" : s);
  }
  nestoh::VerifyReport rep = nestoh::run_verify(opts);
  std::cout << rep.summary();
  if (cfg.report_path.empty()) {
    std::cout << rep.json() << "\n";
  } else {
    std::ofstream out(cfg.report_path);
    if (!out) {
      std::cerr << "error: cannot write report to " << cfg.report_path << "\n";
      return 2;
    }
    out << rep.json() << "\n";
  }
  return rep.all_ok() ? 0 : 1;
}

int run_table(const TableConfig& cfg) {
  if (cfg.max_n < 0) {
    std::cerr << "error: --max-n must be non-negative\n";
    return 2;
  }
  if (cfg.family == "narayana") {
    std::cout << "n,k,polynomial\n";
    for (int n = 1; n <= cfg.max_n; ++n)
      for (int k = 1; k <= n; ++k)
        std::cout << n << "," << k << "," << nestoh::q_narayana(n, k).str()
                  << "\n";
  } else if (cfg.family == "euler_mahonian") {
    std::cout << "n,polynomial\n";
    for (int n = 1; n <= cfg.max_n; ++n)
      std::cout << n << "," << nestoh::euler_mahonian(n).str() << "\n";
  } else if (cfg.family == "snk") {
    std::cout << "n,k,polynomial\n";
    for (int n = 2; n <= cfg.max_n; ++n)
      for (int k = 2; k <= n; ++k)
        std::cout << n << "," << k << ","
                  << nestoh::snk_closed_form(n, k).str() << "\n";
  } else {
    std::cerr << "error: --family must be narayana, euler_mahonian or snk\n";
    return 2;
  }
  return 0;
}

int run_posets(const PosetsConfig& cfg) {
  std::vector<nestoh::Poset> posets =
      nestoh::posets_from_json(nestoh::read_file(cfg.posets_path));
  nestoh::Polynomial total;
  for (std::size_t i = 0; i < posets.size(); ++i) {
    nestoh::PosetStats s = posets[i].stats();
    std::cout << (i + 1) << ": des=" << s.des << " maj=" << s.maj << "\n";
    nestoh::Monomial m{s.des, s.maj, 0};
    total.add_term(m, 1);
  }
  if (cfg.vars == "t") total = total.specialized(nestoh::Var::q);
  std::cout << "total: " << total.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact h-polynomials of simple generalized permutohedra"};
  app.require_subcommand(1);

  PolyConfig poly;
  CLI::App* poly_cmd =
      app.add_subcommand("poly", "Compute an h-polynomial for one source");
  poly_cmd->add_option("--family", poly.family,
                       "complete | simplex | path | snk | star | "
                       "stanley_pitman");
  poly_cmd->add_option("--n", poly.n, "ground set size for --family");
  poly_cmd->add_option("--k", poly.k, "size threshold (snk only)");
  poly_cmd->add_option("--building-set", poly.building_set_path,
                       "building set JSON file");
  poly_cmd->add_option("--graph", poly.graph_path, "graph text file");
  poly_cmd->add_option("--posets", poly.posets_path, "poset list JSON file");
  poly_cmd->add_option("--vars", poly.vars, "t | tq | tqu")
      ->check(CLI::IsMember({"t", "tq", "tqu"}));
  poly_cmd->add_option("--format", poly.format, "plain | latex | json | csv")
      ->check(CLI::IsMember({"plain", "latex", "json", "csv"}));

  VerifyConfig verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Cross-check every closed form against the enumeration");
  verify_cmd->add_option("--suite", verify.suites,
                         "all | oracle-vs-formula | palindromic | "
                         "product-formula | tubing-bijection | "
                         "binary-tree-equivalence | braid-fan");
  verify_cmd->add_option("--max-n", verify.max_n, "sweep bound (>= 2)");
  verify_cmd->add_option("--report", verify.report_path,
                         "write the JSON report to this path");

  TableConfig table;
  CLI::App* table_cmd = app.add_subcommand("table", "Emit a CSV table");
  table_cmd->add_option("--family", table.family,
                        "narayana | euler_mahonian | snk")
      ->required();
  table_cmd->add_option("--max-n", table.max_n, "largest n");

  PosetsConfig posets;
  CLI::App* posets_cmd = app.add_subcommand(
      "posets", "Per-poset descent statistics and their generating sum");
  posets_cmd->add_option("--posets", posets.posets_path, "poset list JSON file")
      ->required();
  posets_cmd->add_option("--vars", posets.vars, "t | tq")
      ->check(CLI::IsMember({"t", "tq"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (poly_cmd->parsed()) return run_poly(poly);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (table_cmd->parsed()) return run_table(table);
    return run_posets(posets);
  } catch (const nestoh::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
