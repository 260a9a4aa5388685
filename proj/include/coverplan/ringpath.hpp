#pragma once

#include <utility>
#include <vector>

#include "coverplan/contour.hpp"
#include "coverplan/geometry.hpp"
#include "coverplan/types.hpp"

namespace coverplan {

/// One ring of the target path in world units; xs/ys/zs have equal length.
struct RingSignal {
  int ring_index = 0;
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> zs;

  size_t size() const { return xs.size(); }
};

enum class YawMode { centroid, tangent, fixed };

/// Concatenated rings plus the yaw profile.
struct TargetPath {
  std::vector<double> xs, ys, zs;
  std::vector<double> yaw;                 // radians in (-pi, pi]
  std::vector<size_t> ring_boundaries;     // start offsets of rings 2..n
};

// Splits contour points into per-axis pixel sequences, order preserved.
std::pair<std::vector<double>, std::vector<double>> contour_to_signals(const Contour& c);

// Half-open linear ramp: zs[i] = h_start + dz * i / m, i = 0..m-1.
std::vector<double> interpolate_z(int m, double h_start, double dz);

// N points equally spaced by arc length along the closed polyline through
// the input points, starting at point 0.
std::pair<std::vector<double>, std::vector<double>> resample_closed(
    const std::vector<double>& xs, const std::vector<double>& ys, int n_out);

// Pixel centers to world coordinates via the grid's x-y transform.
std::pair<std::vector<double>, std::vector<double>> pixels_to_world(
    const std::vector<double>& xs_px, const std::vector<double>& ys_px, const VoxelGrid& g);

// Rotates the contour in place so it starts at the point nearest (x, y);
// returns the rotation offset.
size_t rotate_start_to_nearest(Contour& c, double x, double y);

// Yaw toward the active ring's centroid, wrapped to (-pi, pi]. A sample that
// coincides with the centroid reuses the previous yaw (0 at the start).
std::vector<double> yaw_profile(const TargetPath& path, const std::vector<Vec2>& centroid_per_ring);

// Concatenates rings in order and attaches the yaw profile. All rings must
// share one sample count.
TargetPath build_target_path(const std::vector<RingSignal>& rings, YawMode mode,
                             const std::vector<Vec2>& centroid_per_ring, double fixed_yaw = 0.0);

}  // namespace coverplan
