#include "qcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "qcorr/optimize.hpp"

namespace qcorr {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kThetaGrid = 1001;
constexpr double kFlatTol = 1e-12;
constexpr double kThetaTol = 1e-10;
constexpr std::size_t kMaxRefinements = 4;
constexpr std::size_t kMaxOraclePolish = 3;

struct Candidate {
  double value;
  double theta;
  double phi;
};

}  // namespace

std::string_view to_string(OptimizerMethod m) {
  switch (m) {
    case OptimizerMethod::grid:
      return "grid";
    case OptimizerMethod::golden_refined:
      return "golden-refined";
    case OptimizerMethod::derivative_root:
      return "derivative-root";
  }
  return "unknown";
}

std::string_view to_string(TheoremBranch b) {
  switch (b) {
    case TheoremBranch::a_zero:
      return "a_zero";
    case TheoremBranch::theta_zero:
      return "theta_zero";
    case TheoremBranch::theta_half_pi:
      return "theta_half_pi";
    case TheoremBranch::none:
      return "none";
  }
  return "unknown";
}

double objective_F(const XState& state, const MeasurementBasis& basis) {
  return state.entropy_a() + avg_conditional_entropy(state, basis) - state.entropy_ab();
}

double objective_G(const XState& state, const MeasurementBasis& basis) {
  return post_measurement_entropy(state, basis) - state.entropy_ab();
}

double objective(const XState& state, Objective which, const MeasurementBasis& basis) {
  return which == Objective::F ? objective_F(state, basis) : objective_G(state, basis);
}

double gap(const XState& state, double theta) {
  return binary_entropy(outcome_probabilities(state.params(), theta)[0]) - state.entropy_a();
}

double gap_derivative(double a, double theta) {
  const double x = a * std::cos(theta);
  if (std::abs(x) >= 1.0) {
    std::ostringstream os;
    os << "gap derivative has infinite slope at |a cos theta| = 1 (a=" << a << ", theta=" << theta << ")";
    throw SingularPointError(os.str());
  }
  return a / 2.0 * std::sin(theta) * std::log2((1.0 + x) / (1.0 - x));
}

Optimum minimize_over_basis(const std::function<double(const MeasurementBasis&)>& f) {
  const double step = kHalfPi / (kThetaGrid - 1);
  const std::array<double, 2> phis = {0.0, kHalfPi};
  std::array<std::vector<double>, 2> values;
  int evaluations = 0;
  double lowest = std::numeric_limits<double>::infinity();
  double highest = -lowest;
  const auto theta_at = [&](int i) { return i == kThetaGrid - 1 ? kHalfPi : i * step; };

  for (std::size_t j = 0; j < phis.size(); ++j) {
    values[j].resize(kThetaGrid);
    for (int i = 0; i < kThetaGrid; ++i) {
      const double v = f({theta_at(i), phis[j]});
      values[j][static_cast<std::size_t>(i)] = v;
      lowest = std::min(lowest, v);
      highest = std::max(highest, v);
    }
    evaluations += kThetaGrid;
  }

  if (highest - lowest <= kFlatTol) {
    return Optimum{values[0][0], 0.0, 0.0, OptimizerMethod::grid, evaluations};
  }

  std::vector<Candidate> local;
  for (std::size_t j = 0; j < phis.size(); ++j) {
    const auto& v = values[j];
    for (std::size_t i = 0; i < v.size(); ++i) {
      const bool below_left = i == 0 || v[i] <= v[i - 1];
      const bool below_right = i + 1 == v.size() || v[i] <= v[i + 1];
      if (below_left && below_right) local.push_back({v[i], theta_at(static_cast<int>(i)), phis[j]});
    }
  }
  std::stable_sort(local.begin(), local.end(),
                   [](const Candidate& x, const Candidate& y) { return x.value < y.value; });
  local.resize(std::min(local.size(), kMaxRefinements));

  std::vector<Candidate> candidates = local;
  for (const Candidate& c : local) {
    const double lo = std::max(0.0, c.theta - step);
    const double hi = std::min(kHalfPi, c.theta + step);
    const ScalarMinimum m = golden_section_minimize(
        [&](double theta) { return f({theta, c.phi}); }, lo, hi, kThetaTol);
    evaluations += m.evaluations;
    candidates.push_back({m.fx, m.x, c.phi});
  }

  const double best = std::min_element(candidates.begin(), candidates.end(),
                                       [](const Candidate& x, const Candidate& y) { return x.value < y.value; })
                          ->value;
  const Candidate* chosen = nullptr;
  for (const Candidate& c : candidates) {
    if (c.value > best + kFlatTol) continue;
    if (chosen == nullptr || c.theta < chosen->theta || (c.theta == chosen->theta && c.phi < chosen->phi)) {
      chosen = &c;
    }
  }
  return Optimum{chosen->value, chosen->theta, chosen->phi, OptimizerMethod::golden_refined, evaluations};
}

Optimum minimize_objective(const XState& state, Objective which) {
  return minimize_over_basis([&](const MeasurementBasis& b) { return objective(state, which, b); });
}

Optimum quantum_discord(const XState& state) { return minimize_objective(state, Objective::F); }

Optimum one_way_deficit(const XState& state) { return minimize_objective(state, Objective::G); }

double mutual_information(const XState& state) {
  return state.entropy_a() + state.entropy_b() - state.entropy_ab();
}

double classical_correlation(const XState& state, const Optimum& discord) {
  return state.entropy_b() - avg_conditional_entropy(state, {discord.theta_star, discord.phi_star});
}

double classical_correlation(const XState& state) {
  return classical_correlation(state, quantum_discord(state));
}

TheoremCheck theorem_classify(const XState& state, const Optimum& discord, const Optimum& deficit) {
  const double diff = deficit.value - discord.value;
  if (std::abs(state.params().a) <= kBranchAZeroTol) return {TheoremBranch::a_zero, std::abs(diff)};
  const auto near = [](const Optimum& o, double target) { return std::abs(o.theta_star - target) <= kBranchThetaTol; };
  if (near(discord, 0.0) && near(deficit, 0.0)) return {TheoremBranch::theta_zero, std::abs(diff)};
  if (near(discord, kHalfPi) && near(deficit, kHalfPi)) {
    return {TheoremBranch::theta_half_pi, std::abs(diff + state.entropy_a() - 1.0)};
  }
  return {TheoremBranch::none, std::numeric_limits<double>::quiet_NaN()};
}

double basis_switch_root(const std::function<XParams(double)>& family, double q_lo, double q_hi, double tol) {
  constexpr double kStep = 1e-6;
  const auto slope = [&](double q) {
    const XState s = XState::from_params(family(q));
    return (stationarity_h_theta(s, {kHalfPi + kStep, 0.0}) - stationarity_h_theta(s, {kHalfPi - kStep, 0.0})) /
           (2.0 * kStep);
  };
  try {
    return bisect_root(slope, q_lo, q_hi, tol);
  } catch (const SingularPointError& e) {
    throw RootNotFoundError(std::string("basis-switch slope undefined in bracket: ") + e.what());
  }
}

double basis_switch_root(double q_lo, double q_hi, double tol) {
  return basis_switch_root(singlet_mixture_params, q_lo, q_hi, tol);
}

std::optional<double> coherence_tradeoff_check(const XState& state, const Optimum& discord,
                                               const Optimum& deficit) {
  if (theorem_classify(state, discord, deficit).branch == TheoremBranch::none) return std::nullopt;
  const double coherence = gap(state, deficit.theta_star);
  return std::abs(discord.value + coherence - deficit.value);
}

double objective_from_matrices(const XState& state, Objective which, const MeasurementBasis& basis) {
  const TwoQubit& rho = state.density();
  if (which == Objective::G) {
    return spectrum_entropy(hermitian_eigenvalues(measured_state_matrix(rho, basis))) - state.entropy_ab();
  }
  double conditional = 0.0;
  for (int k = 0; k < 2; ++k) {
    Mat2 c = conditional_state_matrix(rho, basis, k);
    const double pk = c.trace().real();
    if (pk <= 1e-14) continue;
    c *= 1.0 / pk;
    conditional += pk * spectrum_entropy(hermitian_eigenvalues(c));
  }
  return von_neumann_entropy(partial_trace(rho, Subsystem::A)) + conditional - state.entropy_ab();
}

Optimum grid_oracle(const XState& state, Objective which, int n_theta, int n_phi) {
  if (n_theta < 101 || n_phi < 101) throw InputError("grid oracle needs at least 101 points per axis");
  const double dtheta = std::numbers::pi / (n_theta - 1);
  const double dphi = 2.0 * std::numbers::pi / n_phi;
  const auto nt = static_cast<std::size_t>(n_theta);
  const auto np = static_cast<std::size_t>(n_phi);
  std::vector<double> grid(nt * np);
  const auto at = [&](std::size_t i, std::size_t j) -> double& { return grid[i * np + j]; };
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t j = 0; j < np; ++j)
      at(i, j) = objective_from_matrices(state, which, {static_cast<double>(i) * dtheta, static_cast<double>(j) * dphi});
  int evaluations = n_theta * n_phi;

  std::vector<Candidate> local;
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      const double v = at(i, j);
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        const auto ii = static_cast<std::ptrdiff_t>(i) + di;
        if (ii < 0 || ii >= n_theta) continue;
        for (int dj = -1; dj <= 1; ++dj) {
          const auto jj = static_cast<std::size_t>((static_cast<std::ptrdiff_t>(j) + dj + n_phi) % n_phi);
          if (at(static_cast<std::size_t>(ii), jj) < v) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min) local.push_back({v, static_cast<double>(i) * dtheta, static_cast<double>(j) * dphi});
    }
  }
  std::stable_sort(local.begin(), local.end(),
                   [](const Candidate& x, const Candidate& y) { return x.value < y.value; });
  local.resize(std::min(local.size(), kMaxOraclePolish));

  Candidate best = local.front();
  for (const Candidate& c : local) {
    const PlanarMinimum m = nelder_mead_minimize(
        [&](double theta, double phi) { return objective_from_matrices(state, which, {theta, phi}); },
        {c.theta, c.phi}, dtheta, 1e-15, 600);
    evaluations += m.evaluations;
    if (m.fx < best.value) best = {m.fx, m.x[0], m.x[1]};
  }
  return Optimum{best.value, best.theta, best.phi, OptimizerMethod::grid, evaluations};
}

CorrelationReport analyze(const XState& state) {
  CorrelationReport r;
  r.discord = quantum_discord(state);
  r.deficit = one_way_deficit(state);
  r.entropy_a = state.entropy_a();
  r.entropy_b = state.entropy_b();
  r.entropy_ab = state.entropy_ab();
  r.mutual_information = mutual_information(state);
  r.classical_correlation = classical_correlation(state, r.discord);
  const TheoremCheck check = theorem_classify(state, r.discord, r.deficit);
  r.theorem_branch = check.branch;
  r.relation_residual = check.residual;
  return r;
}

}  // namespace qcorr
