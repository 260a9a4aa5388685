#pragma once

#include <vector>

#include "coverplan/geometry.hpp"
#include "coverplan/image.hpp"

namespace coverplan {

struct SensorConfig {
  double d = 0.0;      // standoff distance to the wall (m)
  double f = 0.0;      // focal length (m)
  double h_s = 0.0;    // sensor height (m)
  double o = 0.0;      // vertical overlap fraction in [0, 1)
  double v_max = 0.0;  // max speed (m/s)
  double a_max = 0.0;  // max acceleration (m/s^2)

  void validate() const;  // throws InputError
};

/// Ring layout for one building: count, altitudes and voxel layers.
/// Ring indices and voxel layers are 1-based here, matching the slicing
/// formulas; conversion to 0-based storage happens in extract_slice only.
struct SlicePlan {
  double delta_h = 0.0;
  int n = 0;
  std::vector<double> altitudes;      // h(l), l = 1..n
  std::vector<int> slice_indices;     // layer k = index(l), 1-based
};

struct Slice {
  int ring_index = 0;   // l, 1-based
  double altitude = 0.0;
  BinaryImage image;
};

// Vertical spacing between consecutive rings: (d/f) * h_s * (1 - o).
double altitude_increment(const SensorConfig& cfg);

// n = ceil(h_b / delta_h), at least 1.
int ring_count(double h_b, double delta_h);

// h(l) = (h_b / n) * (l - 1), l in 1..n.
double ring_altitude(int l, double h_b, int n);

// Voxel layer for ring l: floor(h(l)/h_b * r) + 1, clamped to [1, r].
int slice_index(int l, double h_b, int r, int n);

SlicePlan make_slice_plan(double h_b, const SensorConfig& cfg, int r);

// Occupancy layer k (1-based) as a binary image.
BinaryImage extract_layer(const VoxelGrid& g, int k);

// Layer slice_indices[l-1] of the plan, tagged with ring index and altitude.
Slice extract_slice(const VoxelGrid& g, const SlicePlan& plan, int l);

}  // namespace coverplan
