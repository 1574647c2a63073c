#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "annular/bijections.hpp"
#include "annular/counting.hpp"
#include "annular/enumeration.hpp"
#include "annular/refdata.hpp"
#include "annular/render.hpp"
#include "annular/tables.hpp"
#include "annular/verify.hpp"

namespace {

using annular::ExactInt;

constexpr const char* kCodeGrammar = "annular-code/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<std::uint64_t, std::uint64_t> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--necklace expects N1,N2");
  try {
    std::size_t used = 0;
    const auto a = std::stoull(text.substr(0, comma), &used);
    if (used != comma) throw UsageError("--necklace expects N1,N2");
    const auto b = std::stoull(text.substr(comma + 1), &used);
    if (used != text.size() - comma - 1) throw UsageError("--necklace expects N1,N2");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--necklace expects N1,N2");
  }
}

struct CountArgs {
  std::optional<std::uint64_t> outer, inner, crosscuts, total, circular;
  std::optional<std::string> necklace;
  bool json = false;
};

int run_count(const CountArgs& a) {
  const int modes = (a.outer || a.inner ? 1 : 0) + (a.total ? 1 : 0) + (a.circular ? 1 : 0) +
                    (a.necklace ? 1 : 0);
  if (modes != 1) {
    throw UsageError("count needs exactly one of --outer/--inner, --total, --circular, --necklace");
  }
  nlohmann::json query;
  ExactInt value;
  if (a.outer || a.inner) {
    if (!a.outer || !a.inner) throw UsageError("--outer and --inner go together");
    value = annular::count({*a.outer, *a.inner, a.crosscuts});
    query = {{"outer", *a.outer}, {"inner", *a.inner}};
    if (a.crosscuts) query["crosscuts"] = *a.crosscuts;
  } else if (a.crosscuts) {
    throw UsageError("--crosscuts needs --outer and --inner");
  } else if (a.total) {
    value = annular::count_total(*a.total);
    query = {{"total", *a.total}};
  } else if (a.circular) {
    if (*a.circular == 0) throw UsageError("--circular needs a positive order");
    value = annular::count_circular(*a.circular);
    query = {{"circular", *a.circular}};
  } else {
    const auto [black, white] = parse_pair(*a.necklace);
    if (black + white == 0) throw UsageError("--necklace needs at least one bead");
    value = annular::count_necklace(black, white);
    query = {{"necklace", {black, white}}};
  }
  if (a.json) {
    std::cout << nlohmann::json{{"query", query}, {"value", value.str()}}.dump() << '\n';
  } else {
    std::cout << value << '\n';
  }
  return 0;
}

struct TableArgs {
  std::string kind;
  std::string n = "0..10";
  std::string k = "0..10";
  std::uint64_t max = 12;
  bool json = false;
  bool zeros = false;
  unsigned threads = 0;
};

int run_table(const TableArgs& a) {
  annular::CountTable table;
  try {
    if (a.kind == "maximal") {
      table = annular::maximal_table(annular::Range::parse(a.n), annular::Range::parse(a.k), a.threads);
    } else if (a.kind == "ann") {
      table = annular::ann_table(a.max, a.threads);
    } else {
      table = annular::total_table(a.max, a.threads);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << (a.json ? annular::to_json(table) + "\n" : annular::to_csv(table, a.zeros));
  return 0;
}

int run_enumerate(std::uint64_t n, std::uint64_t m, std::uint64_t k, const annular::EnumerationBudget& budget) {
  const auto all = annular::enumerate_matchings(n, m, k, budget);
  std::ostringstream out;
  out << "# " << kCodeGrammar << " n=" << n << " m=" << m << " k=" << k << '\n';
  for (const auto& mt : all) out << mt.code() << '\n';
  out << "total " << all.size() << '\n';
  std::cout << out.str();
  return 0;
}

int run_verify(const annular::VerifyOptions& options) {
  const auto report = annular::run_verification(options);
  std::cout << report.matrix();
  return report.ok() ? 0 : 1;
}

annular::AnnularMatching parse_code(const std::string& code) {
  try {
    return annular::AnnularMatching::parse(code);
  } catch (const annular::ParseError& e) {
    throw UsageError(std::string("bad code: ") + e.what());
  }
}

int run_bijection(const std::string& code, const std::string& target) {
  const auto mt = parse_code(code);
  try {
    if (target == "necklace") {
      std::cout << annular::to_necklace(mt).word() << '\n';
    } else if (target == "linear") {
      std::cout << annular::to_linear(mt).letters() << '\n';
    } else if (target == "reflect") {
      std::cout << annular::reflect(mt).code() << '\n';
    } else if (target == "split") {
      const auto [outer, inner] = annular::split(mt);
      std::cout << outer.code() << '\n' << inner.code() << '\n';
    } else {
      std::cout << annular::graph_to_json(annular::to_graph(mt)) << '\n';
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return 0;
}

int run_fetch(const std::string& id, bool offline) {
  annular::FetchOptions options;
  options.allow_network = !offline;
  const auto seq = annular::fetch_sequence(id, options);
  std::cout << "# source " << (seq.source == annular::SequenceSource::Bundled ? "bundled" : "fetched") << '\n'
            << annular::to_bfile(seq);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts, enumeration and bijections for annular non-crossing matchings"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Print an exact count");
  count->add_option("--outer", count_args.outer, "Endpoints on the outer boundary");
  count->add_option("--inner", count_args.inner, "Endpoints on the inner boundary");
  count->add_option("--crosscuts", count_args.crosscuts, "Fix the number of cross-cuts");
  count->add_option("--total", count_args.total, "All matchings with this many endpoints in total");
  count->add_option("--circular", count_args.circular, "Circular matchings of order N up to rotation");
  count->add_option("--necklace", count_args.necklace, "Binary necklaces with N1 black and N2 white beads");
  count->add_flag("--json", count_args.json, "Emit {\"query\":...,\"value\":...}");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Print a table of counts as CSV or JSON");
  table->add_option("kind", table_args.kind, "maximal, ann or total")
      ->required()
      ->check(CLI::IsMember({"maximal", "ann", "total"}));
  table->add_option("--n", table_args.n, "Row range for maximal, e.g. 0..10")->capture_default_str();
  table->add_option("--k", table_args.k, "Column range for maximal")->capture_default_str();
  table->add_option("--max", table_args.max, "Largest index for ann and total")->capture_default_str();
  table->add_flag("--json", table_args.json, "Emit JSON instead of CSV");
  table->add_flag("--zeros", table_args.zeros, "Print zero cells instead of leaving them blank");
  table->add_option("--threads", table_args.threads, "Worker threads (0 = hardware)");

  std::uint64_t en = 0, em = 0, ek = 0;
  annular::EnumerationBudget budget;
  auto* enumerate = app.add_subcommand("enumerate", "List canonical codes of Ann_k(2n+k, 2m+k)");
  enumerate->add_option("--n", en, "Outer half-circles")->required();
  enumerate->add_option("--m", em, "Inner half-circles")->required();
  enumerate->add_option("--k", ek, "Cross-cuts")->required();
  enumerate->add_option("--max-endpoints", budget.max_outer_endpoints,
                        "Refuse instances with more endpoints on either boundary")
      ->capture_default_str();
  enumerate->add_option("--max-states", budget.memory_ceiling, "Refuse instances with more raw states")
      ->capture_default_str();

  annular::VerifyOptions verify_options;
  bool no_state_oracle = false;
  auto* verify = app.add_subcommand("verify", "Check formulas against brute force and bijection round trips");
  verify->add_option("--max-endpoints", verify_options.max_endpoints, "Endpoint bound per boundary")
      ->capture_default_str();
  verify->add_flag("--sequences", verify_options.sequences, "Also compare bundled reference sequences");
  verify->add_flag("--skip-state-oracle", no_state_oracle, "Only run the cell oracle");
  verify->add_option("--threads", verify_options.threads, "Worker threads for the cell oracle");

  std::string render_code;
  annular::RenderOptions render_options;
  auto* render = app.add_subcommand("render", "Draw a matching as SVG");
  render->add_option("--code", render_code, "Canonical code")->required();
  render->add_option("--size", render_options.size, "Canvas size")->capture_default_str();

  std::string bij_code, bij_target = "graph";
  auto* bijection = app.add_subcommand("bijection", "Apply a correspondence to a matching");
  bijection->add_option("--code", bij_code, "Canonical code")->required();
  bijection->add_option("--to", bij_target, "graph, necklace, linear, reflect or split")
      ->check(CLI::IsMember({"graph", "necklace", "linear", "reflect", "split"}))
      ->capture_default_str();

  std::string fetch_id;
  bool fetch_offline = false;
  auto* fetch = app.add_subcommand("fetch", "Print a reference sequence (cache, network, then bundled copy)");
  fetch->add_option("id", fetch_id, "Sequence id, e.g. A003239")->required();
  fetch->add_flag("--offline", fetch_offline, "Never use the network");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) return run_count(count_args);
    if (*table) return run_table(table_args);
    if (*enumerate) {
      budget.max_inner_endpoints = budget.max_outer_endpoints;
      return run_enumerate(en, em, ek, budget);
    }
    if (*verify) {
      verify_options.state_oracle = !no_state_oracle;
      return run_verify(verify_options);
    }
    if (*render) {
      std::cout << annular::render_svg(parse_code(render_code), render_options);
      return 0;
    }
    if (*bijection) return run_bijection(bij_code, bij_target);
    if (*fetch) return run_fetch(fetch_id, fetch_offline);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const annular::BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
