#pragma once

// Bitmaps of Pas(p) in the triangle T_N: m runs along x, n along y.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "pasfrac/digits.hpp"

namespace pasfrac {

struct TriangleImage {
  Prime p;
  std::uint64_t rows = 0;
  // cells[m][n] for 0 <= n <= m < rows; row m has m + 1 entries.
  std::vector<std::vector<bool>> cells;

  [[nodiscard]] bool at(std::uint64_t m, std::uint64_t n) const { return n <= m && m < rows && cells[m][n]; }
};

/// Throws DomainError for rows < 1.
[[nodiscard]] TriangleImage build_image(Prime p, std::uint64_t rows);

/// Number of member cells.
[[nodiscard]] std::uint64_t popcount(const TriangleImage& image);

/// Plain PBM text: "P1", "rows rows", then row m as space-separated bits.
[[nodiscard]] std::string to_pbm(const TriangleImage& image);
void write_pbm(const TriangleImage& image, const std::filesystem::path& path);

[[nodiscard]] std::string to_svg(const TriangleImage& image, unsigned cell_size);
/// Throws DomainError for cell_size 0 and IoError if the file cannot be written.
void write_svg(const TriangleImage& image, const std::filesystem::path& path, unsigned cell_size = 8);

}  // namespace pasfrac
