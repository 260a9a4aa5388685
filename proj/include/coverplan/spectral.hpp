#pragma once

#include <complex>
#include <span>
#include <vector>

#include "coverplan/ringpath.hpp"
#include "coverplan/types.hpp"

namespace coverplan {

/// Full complex DFT coefficient vector, F_k for k = 0..Q-1.
struct Spectrum {
  std::vector<std::complex<double>> coeffs;

  int size() const { return static_cast<int>(coeffs.size()); }
};

/// Real trigonometric series per axis:
///   s(t) = offset + sum_k cos_coeffs[k-1] * cos(2 pi k t / T)
///                 + sin_coeffs[k-1] * sin(2 pi k t / T)
/// Periodic with period T by construction. Yaw rides along as a sampled
/// table over one period (wrap-aware linear interpolation).
struct FourierTrajectory {
  double T = 1.0;
  Vec3 offset;
  std::vector<Vec3> cos_coeffs;  // A_k
  std::vector<Vec3> sin_coeffs;  // B_k
  YawMode yaw_mode = YawMode::fixed;
  std::vector<double> yaw_table;

  int harmonics() const { return static_cast<int>(cos_coeffs.size()); }
};

struct TrajectorySample {
  double t = 0.0;
  Vec3 position;
  Vec3 velocity;
  double yaw = 0.0;
};

struct FeasibilityReport {
  // Triangle-inequality bounds from the coefficients, per axis and on the norm.
  Vec3 analytic_v_bound;
  Vec3 analytic_a_bound;
  double analytic_v_bound_norm = 0.0;
  double analytic_a_bound_norm = 0.0;
  // Dense-sampling maxima of |v| and |a| over one period.
  double sampled_v_max = 0.0;
  double sampled_a_max = 0.0;
  bool feasible = false;
  // Smallest period at which this shape satisfies both limits; speeds scale
  // as 1/T and accelerations as 1/T^2 under period scaling.
  double min_feasible_period = 0.0;
};

// F_k = sum_t s_t e^{-j 2 pi k t / Q}.
Spectrum dft(std::span<const double> signal);

// s_t = (1/Q) sum_k F_k e^{+j 2 pi k t / Q}, real part. For conjugate-
// symmetric spectra the discarded imaginary residue is checked against
// 1e-6 of the signal scale.
std::vector<double> idft(const Spectrum& sp);

// Keeps the `terms` bins lowest in absolute frequency, ordering
// 0, +1, -1, +2, -2, ... (positive first), zeroing the rest.
Spectrum truncate(const Spectrum& sp, int terms);

// Converts per-axis spectra to the real series form:
// offset = F_0/Q, A_k = 2 Re(F_k)/Q, B_k = -2 Im(F_k)/Q.
// Requires n_harmonics <= (Q-1)/2.
FourierTrajectory to_fourier_trajectory(const Spectrum& sx, const Spectrum& sy,
                                        const Spectrum& sz, double T, int n_harmonics);

// Position by the series, velocity by its term-wise derivative.
TrajectorySample sample(const FourierTrajectory& tr, double t);

FeasibilityReport feasibility_check(const FourierTrajectory& tr, double a_max, double v_max);

}  // namespace coverplan
