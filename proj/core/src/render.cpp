#include "pasfrac/render.hpp"

#include <fstream>

#include "pasfrac/error.hpp"

namespace pasfrac {

TriangleImage build_image(Prime p, std::uint64_t rows) {
  if (rows < 1) throw DomainError("image needs at least one row");
  TriangleImage image{p, rows, {}};
  image.cells.reserve(rows);
  for (std::uint64_t m = 0; m < rows; ++m) {
    std::vector<bool> row(m + 1);
    for (std::uint64_t n = 0; n <= m; ++n) row[n] = lucas_member(LatticePoint(m, n), p);
    image.cells.push_back(std::move(row));
  }
  return image;
}

std::uint64_t popcount(const TriangleImage& image) {
  std::uint64_t count = 0;
  for (const auto& row : image.cells) {
    for (const bool cell : row) count += cell ? 1 : 0;
  }
  return count;
}

std::string to_pbm(const TriangleImage& image) {
  std::string out = "P1\n" + std::to_string(image.rows) + " " + std::to_string(image.rows) + "\n";
  out.reserve(out.size() + image.rows * image.rows * 2);
  for (std::uint64_t m = 0; m < image.rows; ++m) {
    for (std::uint64_t n = 0; n < image.rows; ++n) {
      if (n > 0) out += ' ';
      out += image.at(m, n) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing " + path.string());
}

}  // namespace

void write_pbm(const TriangleImage& image, const std::filesystem::path& path) { write_text(path, to_pbm(image)); }

std::string to_svg(const TriangleImage& image, unsigned cell_size) {
  if (cell_size == 0) throw DomainError("cell size must be positive");
  const std::string side = std::to_string(image.rows * cell_size);
  const std::string cs = std::to_string(cell_size);
  std::string out = R"(<?xml version="1.0" encoding="UTF-8"?>)" "\n";
  out += R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width=")" + side + R"(" height=")" + side +
         R"(" viewBox="0 0 )" + side + " " + side + "\">\n";
  for (std::uint64_t m = 0; m < image.rows; ++m) {
    for (std::uint64_t n = 0; n <= m; ++n) {
      if (!image.cells[m][n]) continue;
      out += "<rect x=\"" + std::to_string(m * cell_size) + "\" y=\"" + std::to_string(n * cell_size) +
             "\" width=\"" + cs + "\" height=\"" + cs + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const TriangleImage& image, const std::filesystem::path& path, unsigned cell_size) {
  write_text(path, to_svg(image, cell_size));
}

}  // namespace pasfrac
