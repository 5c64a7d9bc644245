#include "pu/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pu::spectra {

namespace {
const double kSqrt2 = std::sqrt(2.0);

void check_labels(QuantumNumbers n) {
  if (n.n1 < 0 || n.n2 < 0) throw std::domain_error("quantum numbers must be nonnegative");
}
}  // namespace

double energy_indefinite(QuantumNumbers n, const OscillatorParams& p) {
  check_labels(n);
  const RealFrequencies f = real_frequencies(p);
  return p.hbar * (-f.omega1 * (n.n1 + 0.5) + f.omega2 * (n.n2 + 0.5));
}

double energy_positive(QuantumNumbers n, const OscillatorParams& p) {
  check_labels(n);
  const RealFrequencies f = real_frequencies(p);
  return p.hbar * (f.omega1 * (n.n1 + 0.5) + f.omega2 * (n.n2 + 0.5));
}

double energy_degenerate(int n, double k, const OscillatorParams& p) {
  validate(p);
  return p.omega * p.hbar * (kSqrt2 * n - 0.5 * p.m * p.omega * p.hbar * k * k);
}

EnergySplit energy_split(QuantumNumbers n, const OscillatorParams& p) {
  check_labels(n);
  const double eps = epsilon_of(p);
  EnergySplit s;
  s.discrete = kSqrt2 * p.omega * p.hbar * (n.n2 - n.n1);
  s.linear = -0.5 * kSqrt2 * p.omega * p.hbar * eps * (n.n1 + n.n2 + 1);
  return s;
}

LimitSchedule limit_schedule(int n, double k, const OscillatorParams& base, int step_count,
                             int s_final) {
  validate(base);
  if (n < 0) throw std::domain_error("limit_schedule: n must be nonnegative");
  if (!(k > 0.0)) throw std::domain_error("limit_schedule: k must be positive");
  if (step_count < 1) throw std::domain_error("limit_schedule: need at least one step");
  if (s_final < n + 2) throw std::domain_error("limit_schedule: s_final too small");

  LimitSchedule sched;
  sched.n = n;
  sched.k = k;
  sched.steps.reserve(step_count);
  for (int j = 0; j < step_count; ++j) {
    // s_final / 2^(step_count-1-j), rounded, then parity-matched to n.
    double raw = double(s_final) / std::pow(2.0, step_count - 1 - j);
    int s = std::max<int>(n + 2, int(std::lround(raw)));
    if ((s - n) % 2 != 0) ++s;
    const double eps = base.m * base.omega * base.hbar * k * k / (kSqrt2 * s);
    if (!(eps > 0.0) || !(eps < 1.0))
      throw std::domain_error("limit_schedule: eps leaves (0,1); increase s or reduce k");
    ScheduleStep step;
    step.n1 = (s - n) / 2;
    step.n2 = step.n1 + n;
    step.epsilon = eps;
    sched.steps.push_back(step);
  }
  return sched;
}

std::vector<ScheduleEnergyRow> schedule_energy_table(const LimitSchedule& sched,
                                                     const OscillatorParams& base) {
  std::vector<ScheduleEnergyRow> rows;
  rows.reserve(sched.steps.size());
  const double target = energy_degenerate(sched.n, sched.k, base);
  for (const ScheduleStep& s : sched.steps) {
    // branches assembled from the schedule's eps directly: recovering eps
    // from lambda would lose ~eps_machine/eps^2 and the error law below is
    // s-amplified, so the detour would drown the linear term it verifies
    ScheduleEnergyRow row;
    row.n1 = s.n1;
    row.n2 = s.n2;
    row.epsilon = s.epsilon;
    row.discrete = kSqrt2 * base.omega * base.hbar * (s.n2 - s.n1);
    row.linear = -0.5 * kSqrt2 * base.omega * base.hbar * s.epsilon * (s.n1 + s.n2 + 1);
    row.total = row.discrete + row.linear;
    row.target = target;
    row.abs_err = std::fabs(row.total - target);
    rows.push_back(row);
  }
  return rows;
}

double min_positive_gap(std::vector<double> values) {
  if (values.size() < 2) return 0.0;
  std::sort(values.begin(), values.end());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double gap = values[i] - values[i - 1];
    if (gap > 0.0 && gap < best) best = gap;
  }
  return std::isfinite(best) ? best : 0.0;
}

}  // namespace pu::spectra
