// cayley-rep: applicability checks for the classical Cayley transform on
// explicit representations (geometric, exact-algebraic and numerical
// criteria), plus the bounded classification search.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "cayleyrep/detail/rng.hpp"
#include "cayleyrep/diagram_svg.hpp"
#include "cayleyrep/json_io.hpp"
#include "cayleyrep/version.hpp"

namespace {

using namespace cayley;
using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct WeightArgs {
  std::string family_str;
  int rank = 0;
  std::string weight_str;
  std::string coeffs_str;
};

void add_weight_options(CLI::App* cmd, WeightArgs& args) {
  cmd->add_option("--family", args.family_str, "Root-system family: A, B, C or D")
      ->required();
  cmd->add_option("--rank", args.rank, "Root-system rank")->required();
  cmd->add_option("--weight", args.weight_str,
                  "Highest weight in L coordinates, e.g. 1/2,1/2");
  cmd->add_option("--coeffs", args.coeffs_str,
                  "Highest weight as fundamental-weight coefficients, e.g. 0,1");
}

std::pair<RootSystemData, Weight> resolve_weight(const WeightArgs& args) {
  auto family = family_from_letter(args.family_str.empty() ? '?' : args.family_str[0]);
  if (!family || args.family_str.size() != 1) {
    throw std::invalid_argument("--family must be one of A, B, C, D");
  }
  RootSystemData rs = build_root_system(*family, args.rank);
  if (args.weight_str.empty() == args.coeffs_str.empty()) {
    throw std::invalid_argument("provide exactly one of --weight or --coeffs");
  }
  if (!args.coeffs_str.empty()) {
    Weight raw = parse_weight(args.coeffs_str);
    std::vector<Rat> coeffs = raw.coords;
    if (rs.redirect) {
      // Requested system was redirected; route the node coefficients through
      // the diagram isomorphism.
      const auto& map = rs.redirect->coeff_map;
      if (coeffs.size() != map.size()) {
        throw std::invalid_argument("expected " + std::to_string(map.size()) +
                                    " coefficients for " +
                                    std::string(1, family_letter(rs.redirect->from_family)) +
                                    std::to_string(rs.redirect->from_rank));
      }
      std::vector<Rat> mapped(coeffs.size());
      for (size_t i = 0; i < map.size(); ++i) mapped[map[i]] = coeffs[i];
      coeffs = std::move(mapped);
    }
    return {rs, weight_from_fundamental(coeffs, rs)};
  }
  if (rs.redirect) {
    throw std::invalid_argument(
        "raw --weight coordinates are ambiguous for the redirected system " +
        std::string(1, family_letter(rs.redirect->from_family)) +
        std::to_string(rs.redirect->from_rank) + " (resolved as " + system_name(rs) +
        "); pass --coeffs instead");
  }
  Weight w = parse_weight(args.weight_str);
  return {rs, canonical_form(w, rs)};
}

std::string verdict_word(bool v) { return v ? "true" : "false"; }

int run_check_config(const WeightArgs& args, bool as_json) {
  auto [rs, w] = resolve_weight(args);
  ConfigReport report = is_cayley_configuration(w, rs);
  if (as_json) {
    json j = report;
    j["version"] = kVersion;
    j["system"] = system_name(rs);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "system: " << system_name(rs) << "\n"
              << "highest: " << weight_to_string(report.highest) << "\n"
              << "orbit size: " << report.orbit_size
              << " (needed " << 2 * report.rank_needed << ")\n"
              << "orbit rank: " << report.orbit_rank
              << " (needed " << report.rank_needed << ")\n"
              << "symmetric about origin: " << verdict_word(report.symmetric_about_origin)
              << "\n";
    if (report.support_minus_orbit) {
      std::cout << "support beyond orbit:";
      if (report.support_minus_orbit->empty()) std::cout << " (none)";
      for (const auto& x : *report.support_minus_orbit) {
        std::cout << " [" << weight_to_string(x) << "]";
      }
      std::cout << "\n";
    }
    if (report.witness) {
      std::cout << "witness: " << weight_to_string(*report.witness) << "\n";
    }
    std::cout << "verdict: " << verdict_word(report.verdict) << "\n";
  }
  return report.verdict ? kExitTrue : kExitFalse;
}

int run_verify(const std::string& label, const std::string& criteria_csv,
               std::uint64_t seed, bool as_json) {
  MatrixRep rep = build_rep(label);
  std::set<std::string> criteria;
  std::stringstream ss(criteria_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) criteria.insert(item);
  }
  ApplicabilityReport report = build_applicability_report(rep, criteria, seed);
  if (as_json) {
    std::cout << json(report).dump(2) << "\n";
  } else {
    std::cout << "label: " << report.label << "\n";
    if (report.geometric) {
      std::cout << "geometric configuration: " << verdict_word(report.geometric->verdict)
                << "\n";
    }
    if (report.exact) {
      std::cout << "triple-product closure: " << verdict_word(report.exact->verdict);
      if (report.exact->failing_triple) {
        const auto& t = *report.exact->failing_triple;
        std::cout << "  (failing triple " << t[0] << "," << t[1] << "," << t[2] << ")";
      }
      std::cout << "\n";
    }
    if (report.cartan_s3) {
      std::cout << "cartan cube closure: " << verdict_word(*report.cartan_s3) << "\n";
    }
    if (report.odd_powers) {
      std::cout << "sampled odd powers: " << verdict_word(*report.odd_powers) << "\n";
    }
    if (report.numeric) {
      std::cout << "median log residual: " << std::scientific
                << report.numeric->median << "\n";
    }
    std::cout << "agreement: " << verdict_word(report.agreement) << "\n"
              << "verdict: " << verdict_word(report.final_verdict) << "\n";
  }
  return report.final_verdict ? kExitTrue : kExitFalse;
}

std::string coeffs_field(const std::vector<long>& coeffs) {
  std::string out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(coeffs[i]);
  }
  return out;
}

int run_classify(int max_rank, const std::string& family_str, int rank, int bound,
                 const std::string& format) {
  std::vector<ClassificationRow> rows;
  if (!family_str.empty()) {
    auto family = family_from_letter(family_str[0]);
    if (!family || family_str.size() != 1 || rank < 1) {
      throw std::invalid_argument("--family needs A..D and a positive --rank");
    }
    rows = classify(*family, rank, bound);
  } else {
    rows = full_report(max_rank, bound);
  }

  if (format == "json") {
    json j{{"version", kVersion}, {"bound", bound}, {"rows", rows}};
    if (family_str.empty()) j["max_rank"] = max_rank;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "family,rank,coeffs,verdict,identification\n";
    for (const auto& row : rows) {
      std::cout << family_letter(row.family) << ',' << row.rank << ','
                << coeffs_field(row.coeffs) << ',' << verdict_word(row.verdict) << ','
                << (row.identification ? *row.identification : "") << "\n";
    }
  } else if (format == "table") {
    std::cout << std::left << std::setw(7) << "family" << std::setw(6) << "rank"
              << std::setw(16) << "coeffs" << std::setw(9) << "verdict"
              << "identification\n";
    for (const auto& row : rows) {
      if (!row.verdict) continue;  // table view shows the positive rows
      std::cout << std::left << std::setw(7) << family_letter(row.family)
                << std::setw(6) << row.rank << std::setw(16)
                << coeffs_field(row.coeffs) << std::setw(9)
                << verdict_word(row.verdict)
                << (row.identification ? *row.identification : "") << "\n";
    }
    size_t trues = 0;
    for (const auto& row : rows) trues += row.verdict ? 1 : 0;
    std::cout << trues << " applicable of " << rows.size() << " candidates\n";
  } else {
    throw std::invalid_argument("--format must be table, json or csv");
  }
  return kExitTrue;
}

int run_residual(const std::string& label, int seeds, double norm, std::uint64_t seed,
                 bool as_json) {
  MatrixRep rep = build_rep(label);
  std::vector<double> residuals = seeded_residuals(rep, seeds, norm, seed);
  double med = median_of(residuals);
  if (as_json) {
    json j{{"version", kVersion}, {"label", rep.label},     {"seeds", seeds},
           {"norm", norm},        {"seed", seed},           {"residuals", residuals},
           {"median_residual", med}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "label: " << rep.label << "\n";
    for (int i = 0; i < seeds; ++i) {
      std::cout << "seed " << (i + 1) << ": " << std::scientific << residuals[i]
                << "\n";
    }
    std::cout << "median: " << std::scientific << med << "\n";
  }
  return kExitTrue;
}

int run_pade(const std::string& label, int seeds, std::uint64_t seed, bool as_json) {
  MatrixRep rep = build_rep(label);
  const std::vector<double> scales{0.1, 0.05, 0.025, 0.0125};
  json out{{"version", kVersion}, {"label", rep.label}, {"scales", scales},
           {"runs", json::array()}};
  for (int s = 1; s <= seeds; ++s) {
    detail::SplitMix64 rng(seed + static_cast<std::uint64_t>(s));
    std::vector<double> coeffs(rep.algebra_basis.size());
    for (auto& c : coeffs) c = rng.gaussian();
    auto pairs = pade_order_probe(rep, coeffs, scales);
    double slope = fit_loglog_slope(pairs);
    json run{{"seed", s}, {"slope", slope}, {"points", json::array()}};
    for (const auto& [t, err] : pairs) run["points"].push_back({t, err});
    out["runs"].push_back(std::move(run));
    if (!as_json) {
      std::cout << "seed " << s << ": slope " << std::fixed << std::setprecision(4)
                << slope << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return kExitTrue;
}

int run_rep_dump(const std::string& label, const std::string& format) {
  MatrixRep rep = build_rep(label);
  if (format != "json") {
    throw std::invalid_argument("rep dump supports --format json");
  }
  std::cout << rep_dump_json(rep).dump(2) << "\n";
  return kExitTrue;
}

int run_diagram_svg(const WeightArgs& args, const std::string& out_path) {
  auto [rs, w] = resolve_weight(args);
  WeightDiagram diagram = weight_diagram(w, rs);
  std::string svg = diagram_svg(diagram, rs);
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file " + out_path);
  out << svg;
  std::cout << "wrote " << out_path << " (" << diagram.mult.size() << " labeled points)\n";
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley transform applicability checks for classical-group representations"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  WeightArgs config_args;
  bool config_json = false;
  auto* check = app.add_subcommand("check-config",
                                   "Decide the weight-diagram configuration criterion");
  add_weight_options(check, config_args);
  check->add_flag("--json", config_json, "Emit JSON");

  std::string verify_label;
  std::string verify_criteria = "config,triple,cartan";
  std::uint64_t verify_seed = 1;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run exact criteria on a catalog realization");
  verify->add_option("--label", verify_label, "Catalog label, e.g. spin8-plus")->required();
  verify->add_option("--criteria", verify_criteria,
                     "Comma list of config,triple,cartan,odd,residual");
  verify->add_option("--seed", verify_seed, "Seed for randomized probes");
  verify->add_flag("--json", verify_json, "Emit JSON");

  int classify_max_rank = 4;
  std::string classify_family;
  int classify_rank = 0;
  int classify_bound = 3;
  std::string classify_format = "table";
  auto* cls = app.add_subcommand("classify", "Bounded search over dominant weights");
  cls->add_option("--max-rank", classify_max_rank, "Sweep all systems up to this rank");
  cls->add_option("--family", classify_family, "Restrict to one family");
  cls->add_option("--rank", classify_rank, "Rank for --family mode");
  cls->add_option("--bound", classify_bound, "Fundamental-coefficient bound");
  cls->add_option("--format", classify_format, "table, json or csv");

  std::string residual_label;
  int residual_seeds = 20;
  double residual_norm = 0.2;
  std::uint64_t residual_seed = 1;
  bool residual_json = false;
  auto* residual = app.add_subcommand("residual", "Seeded log-membership residuals");
  residual->add_option("--label", residual_label)->required();
  residual->add_option("--seeds", residual_seeds, "Number of seeded directions");
  residual->add_option("--norm", residual_norm, "Target operator norm of u");
  residual->add_option("--seed", residual_seed, "Base seed");
  residual->add_flag("--json", residual_json, "Emit JSON");

  std::string pade_label;
  int pade_seeds = 10;
  std::uint64_t pade_seed = 1;
  bool pade_json = false;
  auto* pade = app.add_subcommand("pade", "Approximation-order probe of C(tu/2) vs exp(tu)");
  pade->add_option("--label", pade_label)->required();
  pade->add_option("--seeds", pade_seeds, "Number of seeded directions");
  pade->add_option("--seed", pade_seed, "Base seed");
  pade->add_flag("--json", pade_json, "Emit JSON");

  auto* rep_cmd = app.add_subcommand("rep", "Catalog realization utilities");
  rep_cmd->require_subcommand(1);
  std::string dump_label;
  std::string dump_format = "json";
  auto* dump = rep_cmd->add_subcommand("dump", "Dump basis matrices and weight labels");
  dump->add_option("--label", dump_label)->required();
  dump->add_option("--format", dump_format, "json");

  WeightArgs svg_args;
  std::string svg_out;
  auto* svg = app.add_subcommand("diagram-svg", "Render a rank-2 weight diagram");
  add_weight_options(svg, svg_args);
  svg->add_option("--out", svg_out, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check_config(config_args, config_json);
    if (verify->parsed()) {
      return run_verify(verify_label, verify_criteria, verify_seed, verify_json);
    }
    if (cls->parsed()) {
      return run_classify(classify_max_rank, classify_family, classify_rank,
                          classify_bound, classify_format);
    }
    if (residual->parsed()) {
      return run_residual(residual_label, residual_seeds, residual_norm, residual_seed,
                          residual_json);
    }
    if (pade->parsed()) return run_pade(pade_label, pade_seeds, pade_seed, pade_json);
    if (rep_cmd->parsed() && dump->parsed()) return run_rep_dump(dump_label, dump_format);
    if (svg->parsed()) return run_diagram_svg(svg_args, svg_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
