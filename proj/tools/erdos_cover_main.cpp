#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "erdos/analysis.hpp"
#include "erdos/certificate.hpp"
#include "erdos/errors.hpp"
#include "erdos/mu.hpp"
#include "erdos/svg.hpp"
#include "erdos/translation.hpp"

namespace {

using namespace erdos;

int worker_threads() {
  if (const char* env = std::getenv("ERDOS_COVER_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!item.empty()) out.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Rect rect_from_strings(const std::vector<std::string>& parts) {
  if (parts.size() != 4)
    throw Error(ErrorCode::BadParams, "--rect needs a_lo a_hi b_lo b_hi");
  Rect r{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
         parse_rational(parts[3])};
  r.validate();
  return r;
}

void print_report_text(const CoverageReport& report) {
  std::cout << "covered: " << (report.covered ? "true" : "false") << "\n";
  std::cout << "uncovered cells: " << report.uncovered_cells.size() << "\n";
  std::cout << "critical b values: " << report.critical_b.size() << "\n";
  std::cout << "max slice deficit: " << rat_str(report.max_slice_deficit) << "\n";
  std::cout << "uncovered area: " << rat_str(report.uncovered_area) << "\n";
  std::cout << "covered area: " << rat_str(report.covered_area) << "\n";
  std::cout << "projection: [";
  bool first = true;
  for (const Interval& iv : report.projection_S.parts()) {
    if (!first) std::cout << ", ";
    std::cout << "[" << rat_str(iv.lo) << ", " << rat_str(iv.hi) << "]";
    first = false;
  }
  std::cout << "]\n";
}

int run(int argc, char** argv) {
  CLI::App app{"erdos-cover: exact covering constructions for bush-shaped plane sets"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable reports");

  // ---- pattern ----
  auto* pattern_cmd = app.add_subcommand("pattern", "generate or ingest patterns");
  pattern_cmd->require_subcommand(1);
  auto* gen = pattern_cmd->add_subcommand("gen", "generate a pattern family");
  std::string gen_family, gen_ratio, gen_alpha, gen_lo, gen_hi, gen_anchors, gen_bases,
      gen_gaps, gen_direction = "up", gen_out;
  int gen_stage = 1;
  long gen_count = 0;
  gen->add_option("--family", gen_family, "geometric|power|example5|example6|cluster|integers")
      ->required();
  gen->add_option("--stage", gen_stage, "truncation stage")->required();
  gen->add_option("--ratio", gen_ratio, "geometric ratio");
  gen->add_option("--alpha", gen_alpha, "power exponent");
  gen->add_option("--lo", gen_lo, "interval lower end");
  gen->add_option("--hi", gen_hi, "interval upper end");
  gen->add_option("--n", gen_count, "cluster point count");
  gen->add_option("--anchors", gen_anchors, "example5 anchors, comma separated");
  gen->add_option("--gaps", gen_gaps, "example5 explicit block gaps");
  gen->add_option("--direction", gen_direction, "example5 block direction: up|down");
  gen->add_option("--bases", gen_bases, "example6 bases, comma separated");
  gen->add_option("-o,--out", gen_out, "output pattern json")->required();

  auto* load = pattern_cmd->add_subcommand("load", "canonicalize a pattern file");
  std::string load_in, load_out;
  load->add_option("file", load_in, "text or json pattern file")->required();
  load->add_option("-o,--out", load_out, "output pattern json");

  // ---- analyze ----
  auto* analyze = app.add_subcommand("analyze", "fineness/separation diagnostics");
  std::string analyze_pattern;
  analyze->add_option("pattern", analyze_pattern, "pattern file")->required();

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "build covering certificates");
  construct->require_subcommand(1);
  auto* det = construct->add_subcommand("det", "deterministic (Lemma 3 layering)");
  std::string det_pattern, det_eps = "1/2", det_out;
  int det_stages = 1;
  det->add_option("--pattern", det_pattern)->required();
  det->add_option("--eps", det_eps, "total measure budget");
  det->add_option("--stages", det_stages, "number of stages");
  det->add_option("-o,--out", det_out, "certificate path")->required();

  auto* rand_cmd = construct->add_subcommand("rand", "randomized (Thm 15 / Thm 14b)");
  std::string rand_pattern, rand_eps = "1/2", rand_method = "thm15", rand_out;
  std::uint64_t rand_seed = 0;
  int rand_budget = 64;
  bool strict_selection = false;
  rand_cmd->add_option("--pattern", rand_pattern)->required();
  rand_cmd->add_option("--method", rand_method, "thm15|thm14b");
  rand_cmd->add_option("--eps", rand_eps);
  rand_cmd->add_option("--seed", rand_seed);
  rand_cmd->add_option("--max-trials", rand_budget);
  rand_cmd->add_flag("--strict-selection", strict_selection,
                     "fail instead of best-effort when the Markov gate is unsatisfied");
  rand_cmd->add_option("-o,--out", rand_out, "certificate path")->required();

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "exact coverage verification");
  std::string verify_pattern, verify_g, verify_cert, verify_svg;
  std::vector<std::string> verify_rect{"0", "1", "1", "2"};
  verify->add_option("--pattern", verify_pattern, "pattern file");
  verify->add_option("--g", verify_g, "interval set json");
  verify->add_option("--cert", verify_cert, "re-verify a certificate");
  verify->add_option("--rect", verify_rect, "a_lo a_hi b_lo b_hi")->expected(4);
  verify->add_option("--svg", verify_svg, "write an svg diagram");

  // ---- translation ----
  auto* translation = app.add_subcommand("translation", "Theorem 14(a) window checks");
  auto* tcheck = translation->add_subcommand("check", "exact G - X window report");
  std::string t_pattern, t_g;
  std::vector<std::string> t_window{"0", "1"};
  tcheck->add_option("--pattern", t_pattern)->required();
  tcheck->add_option("--g", t_g)->required();
  tcheck->add_option("--window", t_window, "u v")->expected(2);

  // ---- mu ----
  auto* mu_cmd = app.add_subcommand("mu", "sandwich estimates of the covering functional");
  std::string mu_pattern, mu_oracle, mu_h = "1/8", mu_eps = "1/2", mu_methods = "lemma3,thm15";
  std::vector<std::string> mu_rect{"0", "1", "1", "2"}, mu_window;
  std::uint64_t mu_seed = 0;
  int mu_budget = 64;
  mu_cmd->add_option("--pattern", mu_pattern)->required();
  mu_cmd->add_option("--rect", mu_rect, "a_lo a_hi b_lo b_hi")->expected(4);
  mu_cmd->add_option("--oracle", mu_oracle, "greedy|exact");
  mu_cmd->add_option("--h", mu_h, "oracle cell width");
  mu_cmd->add_option("--window", mu_window, "oracle window lo hi")->expected(2);
  mu_cmd->add_option("--methods", mu_methods, "upper bound methods");
  mu_cmd->add_option("--eps", mu_eps, "thm15 target");
  mu_cmd->add_option("--seed", mu_seed);
  mu_cmd->add_option("--max-trials", mu_budget);

  // ---- plot ----
  auto* plot = app.add_subcommand("plot", "svg diagram of a configuration");
  std::string plot_pattern, plot_g, plot_svg;
  std::vector<std::string> plot_rect{"0", "1", "1", "2"};
  plot->add_option("--pattern", plot_pattern)->required();
  plot->add_option("--g", plot_g)->required();
  plot->add_option("--rect", plot_rect)->expected(4);
  plot->add_option("--svg", plot_svg, "output path")->required();

  // ---- stage ----
  auto* stage_cmd = app.add_subcommand("stage", "Lemma 10 stage construction");
  std::string stage_pattern, stage_delta, stage_out;
  int stage_m = 1;
  stage_cmd->add_option("--pattern", stage_pattern)->required();
  stage_cmd->add_option("--m", stage_m, "stage index");
  stage_cmd->add_option("--delta", stage_delta, "override delta_m");
  stage_cmd->add_option("-o,--out", stage_out, "certificate path");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    GenParams params;
    if (!gen_ratio.empty()) params.ratio = parse_rational(gen_ratio);
    if (!gen_alpha.empty()) params.alpha = parse_rational(gen_alpha);
    if (!gen_lo.empty()) params.lo = parse_rational(gen_lo);
    if (!gen_hi.empty()) params.hi = parse_rational(gen_hi);
    if (gen_count > 0) params.count = gen_count;
    if (!gen_anchors.empty()) params.anchors = parse_rational_list(gen_anchors);
    if (!gen_gaps.empty()) params.block_gaps = parse_rational_list(gen_gaps);
    if (!gen_bases.empty()) params.bases = parse_rational_list(gen_bases);
    params.block_up = gen_direction != "down";
    Pattern p = generate(family_from_name(gen_family), params, gen_stage);
    write_file_atomic(gen_out, p.to_json().dump(2) + "\n");
    std::cout << "wrote " << gen_out << " (" << p.k() << " points)\n";
    return 0;
  }
  if (load->parsed()) {
    Pattern p = load_pattern(load_in);
    if (!load_out.empty()) {
      write_file_atomic(load_out, p.to_json().dump(2) + "\n");
      std::cout << "wrote " << load_out << " (" << p.k() << " points)\n";
    } else {
      std::cout << p.to_json().dump(2) << "\n";
    }
    return 0;
  }
  if (analyze->parsed()) {
    Pattern p = load_pattern(analyze_pattern);
    FinenessReport report = fineness(p);
    if (as_json) {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      std::cout << "k: " << p.k() << "\n";
      std::cout << "relative fineness: " << rat_str(report.rel_fineness) << "\n";
      std::cout << "relative separation: " << rat_str(report.rel_separation) << "\n";
      std::cout << "arf score: " << rat_str(report.arf_score) << "\n";
      std::cout << "ulf bound: " << report.ulf_bound << "\n";
      std::cout << "lb ratio: " << rat_str(report.lb_ratio) << "\n";
    }
    return 0;
  }
  if (det->parsed()) {
    Pattern p = load_pattern(det_pattern);
    Theorem4Witness witness = theorem4_witness(p, parse_rational(det_eps), det_stages);
    write_file_atomic(det_out, dump_certificate(make_theorem4_certificate(p, witness)));
    std::cout << "wrote " << det_out << "; measure(G) = " << rat_str(witness.G.measure())
              << " (stage sum " << rat_str(witness.total_measure) << ")\n";
    return 0;
  }
  if (rand_cmd->parsed()) {
    Pattern p = load_pattern(rand_pattern);
    Rational eps = parse_rational(rand_eps);
    if (rand_method == "thm15") {
      if (strict_selection) select_Xstar(p, eps, /*require_guarantee=*/true);
      Thm15Result result =
          thm15_similarity_cover(p, eps, rand_seed, rand_budget, worker_threads());
      write_file_atomic(rand_out, dump_certificate(make_thm15_certificate(p, result)));
      std::cout << "wrote " << rand_out << "; trial " << result.plan.trial_index
                << ", measure(H) = " << rat_str(result.plan.measure_H) << ", covered = "
                << (result.final_verification.covered ? "true" : "false") << "\n";
    } else if (rand_method == "thm14b") {
      Thm14bResult result =
          thm14b_translation_cover(p, eps, rand_seed, rand_budget, worker_threads());
      write_file_atomic(rand_out, dump_certificate(make_thm14b_certificate(p, result)));
      std::cout << "wrote " << rand_out << "; trial " << result.plan.trial_index
                << ", measure(H) = " << rat_str(result.plan.measure_H) << ", covers [0,1] = "
                << (result.covers_unit ? "true" : "false") << "\n";
    } else {
      throw Error(ErrorCode::UnknownCommand, "method must be thm15 or thm14b");
    }
    return 0;
  }
  if (verify->parsed()) {
    Pattern p;
    IntervalSet g;
    Rect rect = rect_from_strings(verify_rect);
    Json cert;
    if (!verify_cert.empty()) {
      cert = Json::parse(read_file(verify_cert), nullptr, false);
      if (cert.is_discarded())
        throw Error(ErrorCode::ParseError, "invalid certificate json");
      p = Pattern::from_json(cert["pattern"]);
      const Json& sets = cert["sets"];
      g = interval_set_from_json(sets.contains("H") ? sets["H"] : sets["G"]);
      if (cert.contains("target")) rect = Rect::from_json(cert["target"]);
    } else {
      if (verify_pattern.empty() || verify_g.empty())
        throw Error(ErrorCode::BadParams, "need --pattern and --g (or --cert)");
      p = load_pattern(verify_pattern);
      g = load_interval_set(verify_g);
    }
    CoverageReport report = verify_cover(p, g, rect);
    if (!verify_svg.empty()) render_svg(p, g, rect, &report, verify_svg);
    if (as_json) std::cout << report.to_json(false).dump(2) << "\n";
    else print_report_text(report);
    if (!cert.is_null() && cert.contains("verification") &&
        cert["verification"].contains("covered")) {
      bool stored = cert["verification"]["covered"].get<bool>();
      std::cout << "certificate digest match: " << (stored == report.covered ? "yes" : "NO")
                << "\n";
    }
    return 0;
  }
  if (tcheck->parsed()) {
    Pattern p = load_pattern(t_pattern);
    IntervalSet g = load_interval_set(t_g);
    TranslationReport report =
        thm14a_check(p, g, parse_rational(t_window[0]), parse_rational(t_window[1]));
    if (as_json) {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      std::cout << "M: " << report.M << "\n";
      std::cout << "lhs: " << rat_str(report.lhs) << "\n";
      std::cout << "rhs: " << rat_str(report.rhs) << (report.bound_vacuous ? " (vacuous)" : "")
                << "\n";
      std::cout << "witness fraction: " << rat_str(report.fraction) << "\n";
      std::cout << "tau: " << rat_str(report.tau) << "\n";
    }
    return 0;
  }
  if (mu_cmd->parsed()) {
    Pattern p = load_pattern(mu_pattern);
    Rect rect = rect_from_strings(mu_rect);
    MuEstimate estimate;
    estimate.lower = mu_lower(p, rect);
    if (!mu_oracle.empty()) {
      OracleParams op;
      if (mu_window.size() == 2) {
        op.window_lo = parse_rational(mu_window[0]);
        op.window_hi = parse_rational(mu_window[1]);
      } else {
        Rational radius = p.max_abs();
        op.window_lo = -2 * radius - 2;
        op.window_hi = 2 * radius + 3;
      }
      op.h = parse_rational(mu_h);
      op.solver = mu_oracle == "exact" ? OracleSolver::Exact : OracleSolver::Greedy;
      estimate.oracle_value = oracle_setcover(p, rect, op).value;
      estimate.oracle_params =
          Json::object({{"window", Json::array({rat_str(op.window_lo), rat_str(op.window_hi)})},
                        {"h", rat_str(op.h)},
                        {"solver", mu_oracle}});
    }
    if (!mu_methods.empty() && mu_methods != "none") {
      MuUpperOptions options;
      options.methods.clear();
      if (mu_methods.find("lemma3") != std::string::npos)
        options.methods.insert(UpperMethod::Lemma3);
      if (mu_methods.find("thm15") != std::string::npos)
        options.methods.insert(UpperMethod::Thm15);
      options.eps = parse_rational(mu_eps);
      options.seed = mu_seed;
      options.max_trials = mu_budget;
      try {
        MuUpper upper = mu_upper(p, rect, options);
        estimate.upper = upper.value;
        estimate.upper_method = upper.method == UpperMethod::Lemma3 ? "lemma3" : "thm15";
      } catch (const Error& e) {
        if (e.code() != ErrorCode::AllMethodsFailed) throw;
        estimate.upper_method = std::string("unavailable: ") + e.what();
      }
    }
    if (as_json) {
      std::cout << estimate.to_json().dump(2) << "\n";
    } else {
      std::cout << "mu lower: " << rat_str(estimate.lower) << "\n";
      if (estimate.upper)
        std::cout << "mu upper: " << rat_str(*estimate.upper) << " via " << estimate.upper_method
                  << "\n";
      else if (!estimate.upper_method.empty())
        std::cout << "mu upper: " << estimate.upper_method << "\n";
      if (estimate.oracle_value)
        std::cout << "oracle value: " << rat_str(*estimate.oracle_value) << "\n";
    }
    return 0;
  }
  if (plot->parsed()) {
    Pattern p = load_pattern(plot_pattern);
    IntervalSet g = load_interval_set(plot_g);
    Rect rect = rect_from_strings(plot_rect);
    CoverageReport report = verify_cover(p, g, rect);
    render_svg(p, g, rect, &report, plot_svg);
    std::cout << "wrote " << plot_svg << "\n";
    return 0;
  }
  if (stage_cmd->parsed()) {
    Pattern p = load_pattern(stage_pattern);
    std::optional<Rational> override_delta;
    if (!stage_delta.empty()) override_delta = parse_rational(stage_delta);
    Lemma10Stage stage = lemma10_stage(p, stage_m, override_delta);
    Json cert = make_lemma10_certificate(p, stage);
    if (!stage_out.empty()) {
      write_file_atomic(stage_out, dump_certificate(cert));
      std::cout << "wrote " << stage_out << "\n";
    }
    std::cout << stage.to_json().dump(2) << "\n";
    return 0;
  }
  throw Error(ErrorCode::UnknownCommand, "no subcommand matched");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const erdos::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == erdos::ErrorCode::IoError ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
