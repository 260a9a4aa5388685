#pragma once

#include <utility>
#include <vector>

#include "coverplan/image.hpp"

namespace coverplan {

struct Pixel {
  int x = 0;
  int y = 0;
  bool operator==(const Pixel&) const = default;
};

/// Discrete disk: offsets with dx^2 + dy^2 <= radius^2.
struct StructuringElement {
  int radius = 1;
  std::vector<Pixel> offsets;

  static StructuringElement disk(int radius);
};

/// Ordered closed boundary pixel sequence; consecutive points (and last to
/// first) are 8-adjacent. Pixels may repeat where the border passes through
/// a one-pixel-wide neck.
struct Contour {
  std::vector<Pixel> points;
  bool closed = true;
};

// Minkowski sum of the occupied set with the kernel, clipped to image bounds.
BinaryImage dilate(const BinaryImage& img, const StructuringElement& se);

// One outer border per 8-connected occupied component (Suzuki border
// following); hole borders are not reported. Components are emitted in
// raster order of their topmost-leftmost pixel.
std::vector<Contour> find_contours(const BinaryImage& img);

// Twice the signed enclosed area is the shoelace sum; positive = CCW when y
// points up.
double signed_area(const Contour& c);

// Contour with the largest enclosed area; ties go to the higher point count,
// then to the lexicographically smallest first point. Throws EmptySliceError
// on an empty list.
const Contour& largest_contour(const std::vector<Contour>& cs);

struct OrientResult {
  Contour contour;
  bool degenerate = false;  // fewer than 3 points or zero area; passed through
};

// Reverses the point order when the signed area is negative.
OrientResult orient_ccw(Contour c);

}  // namespace coverplan
