#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coverplan/types.hpp"

namespace coverplan {

/// 2.5D building model: one altitude per ground cell.
/// Rows index y ascending, columns index x ascending, cell-center convention.
struct HeightMap {
  int width = 0;   // cells along x
  int depth = 0;   // cells along y
  double cell_size = 1.0;
  Vec2 origin;     // world coords of the (0,0) cell corner
  std::vector<double> heights;  // row-major, depth rows of width entries

  double at(int ix, int iy) const { return heights[static_cast<size_t>(iy) * width + ix]; }
  double max_height() const;
};

struct BuildingMeta {
  double h_b = 0.0;  // building height, max of the height field
  Vec2 footprint_min;
  Vec2 footprint_max;
};

/// Binary occupancy discretization of a HeightMap. z layers start at world
/// altitude 0; layer k spans [k*resolution, (k+1)*resolution).
struct VoxelGrid {
  int nx = 0, ny = 0, nz = 0;
  double resolution = 1.0;
  Vec2 origin;  // world coords of the (0,0,0) voxel corner
  std::vector<std::uint8_t> occ;  // i + nx*(j + ny*k)

  size_t index(int i, int j, int k) const {
    return static_cast<size_t>(i) + static_cast<size_t>(nx) * (static_cast<size_t>(j) + static_cast<size_t>(ny) * k);
  }
  bool occupied(int i, int j, int k) const { return occ[index(i, j, k)] != 0; }
  long long occupied_count() const;
};

// Reads a CSV altitude matrix; rows = y ascending, columns = x ascending.
HeightMap load_heightmap(const std::string& csv_path, double cell_size, Vec2 origin);

// Same, with metadata from a sidecar JSON {"cell_size": m, "origin": [x, y]}.
HeightMap load_heightmap(const std::string& csv_path, const std::string& meta_json_path);

// Throws EmptySliceError when the model has zero height.
BuildingMeta building_meta(const HeightMap& hm);

// Column fill: voxel (i,j,k) occupied iff the height of the cell covering the
// voxel's (x,y) center exceeds the voxel's center altitude (k+0.5)*resolution.
// pad_cells grows the grid footprint by that many free voxels on each x/y side.
VoxelGrid voxelize(const HeightMap& hm, double resolution, int pad_cells = 0);

// Voxel center in world coordinates.
Vec3 grid_to_world(const VoxelGrid& g, int i, int j, int k);

// Inverse of grid_to_world on voxel centers.
std::array<int, 3> world_to_grid(const VoxelGrid& g, const Vec3& p);

}  // namespace coverplan
