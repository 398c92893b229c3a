#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>

#include "qcorr/qcorr.hpp"

namespace qcorr::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { csv, json };

struct RunConfig {
  XParams params;
  OmegaParams omega{0.26, 0.13, 0.0, 0.08};
  double q_min = 0.0;
  double q_max = 1.0;
  int q_steps = 201;
  double gamma_min = 0.0;
  double gamma_max = 1.0;
  int gamma_steps = 51;
  std::vector<double> cy_list{0.15, 0.25, 0.35, 0.45, 0.55};
  std::uint64_t seed = 42;
  int n = 200;
  double tol = 1e-10;
  std::string out;
  std::optional<Format> format;
};

struct SweepRow {
  double variable = 0.0;
  CorrelationReport report;
  double eof_bc = 0.0;
};

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  return fmt::format("{:.12g}", x);
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
  v.back() = hi;
  return v;
}

void require_range(double lo, double hi, int steps, const char* name) {
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) {
    throw InputError(fmt::format("{} range [{}, {}] must lie within [0, 1]", name, lo, hi));
  }
  if (steps < 2) throw InputError(fmt::format("{} grid needs at least 2 points, got {}", name, steps));
}

ordered_json optimum_json(const Optimum& o) {
  return {{"value", o.value},
          {"theta_star", o.theta_star},
          {"phi_star", o.phi_star},
          {"method", std::string(to_string(o.method))},
          {"evaluations", o.evaluations}};
}

ordered_json nullable(double x) { return std::isnan(x) ? ordered_json(nullptr) : ordered_json(x); }

ordered_json nullable(const std::optional<double>& x) { return x ? ordered_json(*x) : ordered_json(nullptr); }

SweepRow make_row(double variable, const XState& state, const CorrelationReport& report) {
  return {variable, report, eof_bc_koashi_winter(state)};
}

const std::vector<std::string> kRowFields = {"discord",         "deficit",
                                             "theta_star_discord", "theta_star_deficit",
                                             "classical_correlation", "eof_bc",
                                             "theorem_branch",  "relation_residual"};

std::vector<std::string> row_cells(const SweepRow& r) {
  return {num(r.report.discord.value),
          num(r.report.deficit.value),
          num(r.report.discord.theta_star),
          num(r.report.deficit.theta_star),
          num(r.report.classical_correlation),
          num(r.eof_bc),
          std::string(to_string(r.report.theorem_branch)),
          num(r.report.relation_residual)};
}

ordered_json row_json(const SweepRow& r) {
  return {{"discord", r.report.discord.value},
          {"deficit", r.report.deficit.value},
          {"theta_star_discord", r.report.discord.theta_star},
          {"theta_star_deficit", r.report.deficit.theta_star},
          {"classical_correlation", r.report.classical_correlation},
          {"eof_bc", r.eof_bc},
          {"theorem_branch", std::string(to_string(r.report.theorem_branch))},
          {"relation_residual", nullable(r.report.relation_residual)}};
}

void write_csv_line(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
  os << '\n';
}

// Sink for --out, falling back to the given stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw InputError("cannot open output file '" + path + "'");
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const XState state = XState::from_params(cfg.params);
  const CorrelationReport r = analyze(state);
  const EntanglementReport e = entanglement_report(state);
  Output sink(cfg.out, out);
  if (cfg.format.value_or(Format::json) == Format::csv) {
    std::vector<std::string> header = kRowFields;
    header.insert(header.end(), {"mutual_information", "entropy_a", "entropy_b", "entropy_ab", "concurrence"});
    std::vector<std::string> cells = row_cells({0.0, r, e.eof_bc});
    cells.insert(cells.end(), {num(r.mutual_information), num(r.entropy_a), num(r.entropy_b), num(r.entropy_ab),
                               num(e.concurrence)});
    write_csv_line(sink.get(), header);
    write_csv_line(sink.get(), cells);
    return kSuccess;
  }
  const XParams& p = state.params();
  ordered_json j;
  j["params"] = {{"a", p.a}, {"b", p.b}, {"cx", p.cx}, {"cy", p.cy}, {"cz", p.cz}};
  j["discord"] = optimum_json(r.discord);
  j["deficit"] = optimum_json(r.deficit);
  j["classical_correlation"] = r.classical_correlation;
  j["mutual_information"] = r.mutual_information;
  j["entropy_a"] = r.entropy_a;
  j["entropy_b"] = r.entropy_b;
  j["entropy_ab"] = r.entropy_ab;
  j["theorem_branch"] = std::string(to_string(r.theorem_branch));
  j["relation_residual"] = nullable(r.relation_residual);
  j["coherence_tradeoff_residual"] = nullable(coherence_tradeoff_check(state, r.discord, r.deficit));
  j["concurrence"] = e.concurrence;
  j["eof"] = e.eof;
  j["eof_bc"] = e.eof_bc;
  j["corollary2_deficit"] = nullable(corollary2_deficit(state, r.theorem_branch, e.eof_bc));
  sink.get() << j.dump(2) << '\n';
  return kSuccess;
}

void emit_rows(std::ostream& os, Format format, const std::vector<std::string>& leading_names,
               const std::vector<std::vector<double>>& leading, const std::vector<SweepRow>& rows) {
  if (format == Format::json) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ordered_json j;
      for (std::size_t k = 0; k < leading_names.size(); ++k) j[leading_names[k]] = leading[i][k];
      const ordered_json fields = row_json(rows[i]);
      for (const auto& [key, value] : fields.items()) j[key] = value;
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
    return;
  }
  std::vector<std::string> header = leading_names;
  header.insert(header.end(), kRowFields.begin(), kRowFields.end());
  write_csv_line(os, header);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> cells;
    for (double x : leading[i]) cells.push_back(num(x));
    const std::vector<std::string> rest = row_cells(rows[i]);
    cells.insert(cells.end(), rest.begin(), rest.end());
    write_csv_line(os, cells);
  }
}

int cmd_sweep_q(const RunConfig& cfg, std::ostream& out) {
  require_range(cfg.q_min, cfg.q_max, cfg.q_steps, "q");
  std::vector<SweepRow> rows;
  std::vector<std::vector<double>> leading;
  for (double q : linspace(cfg.q_min, cfg.q_max, cfg.q_steps)) {
    const XState state = XState::from_params(singlet_mixture_params(q));
    rows.push_back(make_row(q, state, analyze(state)));
    leading.push_back({q});
  }
  Output sink(cfg.out, out);
  emit_rows(sink.get(), cfg.format.value_or(Format::csv), {"q"}, leading, rows);
  return kSuccess;
}

int cmd_sweep_gamma(const RunConfig& cfg, std::ostream& out) {
  require_range(cfg.gamma_min, cfg.gamma_max, cfg.gamma_steps, "gamma");
  if (cfg.cy_list.empty()) throw InputError("--cy-list must not be empty");
  const std::vector<double> gammas = linspace(cfg.gamma_min, cfg.gamma_max, cfg.gamma_steps);
  std::vector<SweepRow> rows;
  std::vector<std::vector<double>> leading;
  for (double cy : cfg.cy_list) {
    OmegaParams omega = cfg.omega;
    omega.cy = cy;
    const std::vector<CorrelationReport> reports = sweep_gamma(omega, gammas);
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      const XState state = XState::from_params(evolve_omega(omega, gammas[i]));
      rows.push_back({gammas[i], reports[i], eof_bc_koashi_winter(state)});
      leading.push_back({cy, gammas[i]});
    }
  }
  Output sink(cfg.out, out);
  emit_rows(sink.get(), cfg.format.value_or(Format::csv), {"cy", "gamma"}, leading, rows);
  return kSuccess;
}

struct Suite {
  Suite(std::string n, double tol) : name(std::move(n)), tolerance(tol) {}

  std::string name;
  double tolerance;
  int checked = 0;
  int failed = 0;
  double max_residual = 0.0;
  std::vector<std::string> failures;

  void record(double residual, const XParams& p) {
    ++checked;
    max_residual = std::max(max_residual, residual);
    if (residual <= tolerance) return;
    ++failed;
    if (failures.size() < 5) {
      failures.push_back(fmt::format("  residual {} at --a {} --b {} --cx {} --cy {} --cz {}", num(residual),
                                     num(p.a), num(p.b), num(p.cx), num(p.cy), num(p.cz)));
    }
  }
};

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n <= 0) throw InputError(fmt::format("--n must be positive, got {}: nothing to verify", cfg.n));
  Suite joint{"joint_entropy_identity", 1e-10}, gap_suite{"gap_identity", 1e-10};
  Suite chain{"ordering_chain", 1e-9}, theorem{"branch_relation", 1e-8}, cor2{"deficit_from_eof_bc", 1e-8};
  Suite kw{"koashi_winter", 1e-9}, reassembly{"discord_reassembly", 1e-9};
  Suite conc{"concurrence_routes", 1e-10};

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> theta(0.0, std::numbers::pi), phi(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < cfg.n; ++i) {
    const XState s = sample_x_state(rng);
    const XParams& p = s.params();
    const MeasurementBasis basis{theta(rng), phi(rng)};

    joint.record(std::abs(post_measurement_entropy(s, basis) -
                          (binary_entropy(outcome_probabilities(p, basis.theta)[0]) +
                           avg_conditional_entropy(s, basis))),
                 p);
    gap_suite.record(std::abs(objective_G(s, basis) - objective_F(s, basis) - gap(s, basis.theta)), p);

    const CorrelationReport r = analyze(s);
    chain.record(std::max({0.0, r.discord.value - r.deficit.value, r.deficit.value - r.entropy_a}), p);
    const double eof_bc = eof_bc_koashi_winter(s);
    if (r.theorem_branch != TheoremBranch::none) {
      theorem.record(r.relation_residual, p);
      cor2.record(std::abs(*corollary2_deficit(s, r.theorem_branch, eof_bc) - r.deficit.value), p);
    }
    kw.record(std::abs(r.entropy_b - r.classical_correlation - eof_bc), p);
    reassembly.record(std::abs(r.discord.value - (r.entropy_a + eof_bc - r.entropy_ab)), p);
    conc.record(std::abs(concurrence_two_qubit(s.density()) - concurrence_x_state(p)), p);
  }

  Output sink(cfg.out, out);
  std::ostream& os = sink.get();
  os << fmt::format("seed {} n {}\n", cfg.seed, cfg.n);
  bool all_pass = true;
  for (const Suite* suite : {&joint, &gap_suite, &chain, &theorem, &cor2, &kw, &reassembly, &conc}) {
    const Suite& s = *suite;
    const bool pass = s.failed == 0;
    all_pass = all_pass && pass;
    os << fmt::format("{} {}: {}/{} passed, max residual {} (tol {})\n", pass ? "PASS" : "FAIL", s.name,
                      s.checked - s.failed, s.checked, num(s.max_residual), num(s.tolerance));
    for (const std::string& f : s.failures) os << f << '\n';
  }
  os << (all_pass ? "all suites passed\n" : "verification failed\n");
  return all_pass ? kSuccess : kVerificationFailure;
}

int cmd_root(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.tol > 0.0)) throw InputError("--tol must be positive");
  if (!(cfg.q_min < cfg.q_max)) throw InputError("root bracket needs --q-min < --q-max");
  const double root = basis_switch_root(cfg.q_min, cfg.q_max, cfg.tol);
  Output sink(cfg.out, out);
  sink.get() << fmt::format("{:.4f}\n", root);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum discord and one-way deficit of two-qubit X states", "qcorr"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.q_min = std::numeric_limits<double>::quiet_NaN();
  cfg.q_max = std::numeric_limits<double>::quiet_NaN();

  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
    sub->add_option("--format", cfg.format, "csv or json")->transform(CLI::CheckedTransformer(formats));
  };

  CLI::App* compute = app.add_subcommand("compute", "Analyze one X state");
  compute->add_option("--a", cfg.params.a, "Z coefficient on qubit A");
  compute->add_option("--b", cfg.params.b, "Z coefficient on qubit B");
  compute->add_option("--cx", cfg.params.cx, "XX correlation");
  compute->add_option("--cy", cfg.params.cy, "YY correlation");
  compute->add_option("--cz", cfg.params.cz, "ZZ correlation");
  add_common(compute);

  CLI::App* sweep_q = app.add_subcommand("sweep-q", "Sweep q for q|psi-><psi-| + (1-q)|00><00|");
  sweep_q->add_option("--q-min", cfg.q_min, "default 0");
  sweep_q->add_option("--q-max", cfg.q_max, "default 1");
  sweep_q->add_option("--q-steps", cfg.q_steps, "number of grid points")->capture_default_str();
  add_common(sweep_q);

  CLI::App* sweep_g = app.add_subcommand("sweep-gamma", "Phase-damping sweep of an a = 0 X state");
  sweep_g->add_option("--b", cfg.omega.b)->capture_default_str();
  sweep_g->add_option("--cx", cfg.omega.cx)->capture_default_str();
  sweep_g->add_option("--cz", cfg.omega.cz)->capture_default_str();
  sweep_g->add_option("--cy-list", cfg.cy_list, "YY correlations, one curve each")->delimiter(',');
  sweep_g->add_option("--gamma-min", cfg.gamma_min)->capture_default_str();
  sweep_g->add_option("--gamma-max", cfg.gamma_max)->capture_default_str();
  sweep_g->add_option("--gamma-steps", cfg.gamma_steps)->capture_default_str();
  add_common(sweep_g);

  CLI::App* verify = app.add_subcommand("verify", "Check identities on seeded random X states");
  verify->add_option("--seed", cfg.seed)->capture_default_str();
  verify->add_option("--n", cfg.n, "number of random states")->capture_default_str();
  add_common(verify);

  CLI::App* root = app.add_subcommand("root", "Basis-switch point of the singlet mixture family");
  root->add_option("--q-min", cfg.q_min, "bracket start, default 0.5");
  root->add_option("--q-max", cfg.q_max, "bracket end, default 0.9");
  root->add_option("--tol", cfg.tol, "bisection tolerance")->capture_default_str();
  add_common(root);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "qcorr: " << e.what() << '\n';
    return kInputError;
  }
  try {
    if (compute->parsed()) return cmd_compute(cfg, out);
    if (sweep_q->parsed()) {
      if (std::isnan(cfg.q_min)) cfg.q_min = 0.0;
      if (std::isnan(cfg.q_max)) cfg.q_max = 1.0;
      return cmd_sweep_q(cfg, out);
    }
    if (sweep_g->parsed()) return cmd_sweep_gamma(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (std::isnan(cfg.q_min)) cfg.q_min = 0.5;
    if (std::isnan(cfg.q_max)) cfg.q_max = 0.9;
    return cmd_root(cfg, out);
  } catch (const RootNotFoundError& e) {
    err << "qcorr: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "qcorr: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace qcorr::cli
