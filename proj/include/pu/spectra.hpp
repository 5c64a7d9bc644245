#pragma once

#include <vector>

#include "pu/params.hpp"

// Energy levels of the two quantisation schemes and the bookkeeping for the
// equal-frequency limit.
//
// Indefinite-energy scheme (positive norms):  E = -hbar w1 (n1 + 1/2)
//                                                + hbar w2 (n2 + 1/2).
// Positive-energy scheme (indefinite metric): E = +hbar w1 (n1 + 1/2)
//                                                + hbar w2 (n2 + 1/2).
// Degenerate continuum:                       E = w hbar (sqrt(2) n
//                                                - m w hbar k^2 / 2).
//
// Near the equal-frequency point, with eps^2 = 1 - 4 lam w^2, the
// indefinite-energy levels split into a discrete branch sqrt(2) w hbar
// (n2 - n1) and a linear-in-eps branch -(sqrt(2)/2) w hbar eps (n1 + n2 + 1).

namespace pu::spectra {

struct QuantumNumbers {
  int n1 = 0;
  int n2 = 0;
};

double energy_indefinite(QuantumNumbers n, const OscillatorParams& p);
double energy_positive(QuantumNumbers n, const OscillatorParams& p);
double energy_degenerate(int n, double k, const OscillatorParams& p);

struct EnergySplit {
  double discrete;      // sqrt(2) w hbar (n2 - n1)
  double linear;        // -(sqrt(2)/2) w hbar eps (n1 + n2 + 1)
  double total() const { return discrete + linear; }
};
EnergySplit energy_split(QuantumNumbers n, const OscillatorParams& p);

// Label schedule along which the indefinite-energy levels converge onto a
// fixed degenerate state (n, k): the difference n2 - n1 = n is held fixed
// while s = n1 + n2 grows and eps = m w hbar k^2 / (sqrt(2) s).
struct ScheduleStep {
  int n1 = 0;
  int n2 = 0;
  double epsilon = 0.0;
};

struct LimitSchedule {
  int n = 0;
  double k = 0.0;
  std::vector<ScheduleStep> steps;
};

// Roughly geometric ladder of s-values ending at s_final, each adjusted so
// that n1 = (s - n)/2 is a nonnegative integer.
LimitSchedule limit_schedule(int n, double k, const OscillatorParams& base, int step_count,
                             int s_final = 2000);

struct ScheduleEnergyRow {
  int n1, n2;
  double epsilon;
  double discrete, linear, total;
  double target;   // degenerate-continuum energy of (n, k)
  double abs_err;  // |total - target|
};
std::vector<ScheduleEnergyRow> schedule_energy_table(const LimitSchedule& sched,
                                                     const OscillatorParams& base);

// Smallest gap between distinct values in a sorted list; used to confirm
// that level collisions cannot be confused with numerical coincidences.
double min_positive_gap(std::vector<double> values);

}  // namespace pu::spectra
