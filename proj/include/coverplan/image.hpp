#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coverplan {

/// Binary raster; x runs along width, y along height, row-major storage.
struct BinaryImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> px;

  BinaryImage() = default;
  BinaryImage(int w, int h) : width(w), height(h), px(static_cast<size_t>(w) * h, 0) {}

  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  bool at(int x, int y) const { return px[static_cast<size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool v) { px[static_cast<size_t>(y) * width + x] = v ? 1 : 0; }

  int count() const {
    int n = 0;
    for (auto v : px) n += v ? 1 : 0;
    return n;
  }

  bool operator==(const BinaryImage& o) const = default;
};

// Binary PGM (P5), occupied = 255.
void write_pgm(const BinaryImage& img, const std::string& path);

}  // namespace coverplan
