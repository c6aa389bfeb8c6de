#include "foothold/gridio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace foothold {

namespace {

constexpr char kMagic[4] = {'F', 'G', 'R', 'D'};
constexpr uint32_t kVersion = 1;
constexpr uint32_t kFlagMask = 1u;

struct GridHeader {
  uint32_t kind{0};
  uint32_t flags{0};
  uint32_t nx{0};
  uint32_t ny{0};
  double resolution{0.0};
  double origin_x{0.0};
  double origin_y{0.0};
  double aux{0.0};
};

void put_u32(std::ostream& out, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16),
                        static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

void put_f64(std::ostream& out, double v) {
  uint64_t bits;
  std::memcpy(&bits, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<uint64_t>(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

void put_f32(std::ostream& out, float v) {
  uint32_t bits;
  std::memcpy(&bits, &v, 4);
  put_u32(out, bits);
}

float get_f32(std::istream& in) {
  uint32_t bits = get_u32(in);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

void write_header(std::ostream& out, const GridHeader& h) {
  out.write(kMagic, 4);
  put_u32(out, kVersion);
  put_u32(out, h.kind);
  put_u32(out, h.flags);
  put_u32(out, h.nx);
  put_u32(out, h.ny);
  put_f64(out, h.resolution);
  put_f64(out, h.origin_x);
  put_f64(out, h.origin_y);
  put_f64(out, h.aux);
}

GridHeader read_header(std::istream& in, GridKind expected, const std::string& path) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("not a grid file: " + path);
  uint32_t version = get_u32(in);
  if (version != kVersion)
    throw std::runtime_error("unsupported grid version in " + path);
  GridHeader h;
  h.kind = get_u32(in);
  if (h.kind != static_cast<uint32_t>(expected))
    throw std::runtime_error("unexpected grid kind in " + path);
  h.flags = get_u32(in);
  h.nx = get_u32(in);
  h.ny = get_u32(in);
  h.resolution = get_f64(in);
  h.origin_x = get_f64(in);
  h.origin_y = get_f64(in);
  h.aux = get_f64(in);
  if (!in) throw std::runtime_error("truncated grid header in " + path);
  return h;
}

}  // namespace

void write_heightfield(const HeightField& field, const std::string& path) {
  auto out = open_out(path);
  GridHeader h{static_cast<uint32_t>(GridKind::kHeightField), kFlagMask,
               static_cast<uint32_t>(field.nx), static_cast<uint32_t>(field.ny),
               field.resolution, field.origin.x(), field.origin.y(), field.pit_depth};
  write_header(out, h);
  for (int i = 0; i < field.nx; ++i)
    for (int j = 0; j < field.ny; ++j) put_f32(out, static_cast<float>(field.heights(i, j)));
  for (int i = 0; i < field.nx; ++i)
    for (int j = 0; j < field.ny; ++j) {
      char b = field.steppable(i, j) ? 1 : 0;
      out.write(&b, 1);
    }
  if (!out) throw std::runtime_error("write failed: " + path);
}

HeightField read_heightfield(const std::string& path) {
  auto in = open_in(path);
  GridHeader h = read_header(in, GridKind::kHeightField, path);
  HeightField field;
  field.origin = {h.origin_x, h.origin_y};
  field.resolution = h.resolution;
  field.nx = static_cast<int>(h.nx);
  field.ny = static_cast<int>(h.ny);
  field.pit_depth = h.aux;
  field.heights.resize(field.nx, field.ny);
  field.steppable.resize(field.nx, field.ny);
  for (int i = 0; i < field.nx; ++i)
    for (int j = 0; j < field.ny; ++j) field.heights(i, j) = get_f32(in);
  for (int i = 0; i < field.nx; ++i)
    for (int j = 0; j < field.ny; ++j) {
      char b;
      in.read(&b, 1);
      field.steppable(i, j) = b != 0;
    }
  if (!in) throw std::runtime_error("truncated grid payload in " + path);
  return field;
}

void write_local_heightmap(const LocalHeightmap& map, const std::string& path) {
  auto out = open_out(path);
  GridHeader h{static_cast<uint32_t>(GridKind::kLocalHeightmap), 0,
               LocalHeightmap::kLengthCells, LocalHeightmap::kWidthCells,
               LocalHeightmap::kResolution, LocalHeightmap::kMinX, LocalHeightmap::kMinY,
               0.0};
  write_header(out, h);
  for (int i = 0; i < LocalHeightmap::kLengthCells; ++i)
    for (int j = 0; j < LocalHeightmap::kWidthCells; ++j)
      put_f32(out, static_cast<float>(map.height(i, j)));
  if (!out) throw std::runtime_error("write failed: " + path);
}

LocalHeightmap read_local_heightmap(const std::string& path) {
  auto in = open_in(path);
  GridHeader h = read_header(in, GridKind::kLocalHeightmap, path);
  if (h.nx != LocalHeightmap::kLengthCells || h.ny != LocalHeightmap::kWidthCells)
    throw std::runtime_error("unexpected local heightmap shape in " + path);
  LocalHeightmap map;
  for (int i = 0; i < LocalHeightmap::kLengthCells; ++i)
    for (int j = 0; j < LocalHeightmap::kWidthCells; ++j) map.height(i, j) = get_f32(in);
  if (!in) throw std::runtime_error("truncated grid payload in " + path);
  return map;
}

void write_depth_grid(const DepthImage& image, const std::string& path) {
  auto out = open_out(path);
  GridHeader h{static_cast<uint32_t>(GridKind::kDepth), 0,
               static_cast<uint32_t>(image.height), static_cast<uint32_t>(image.width),
               0.0, 0.0, 0.0, image.intrinsics.far_clip};
  write_header(out, h);
  for (int v = 0; v < image.height; ++v)
    for (int u = 0; u < image.width; ++u) put_f32(out, image.depth(v, u));
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_kde_grid(const KdeGrid& grid, const std::string& path) {
  auto out = open_out(path);
  GridHeader h{static_cast<uint32_t>(GridKind::kDensity), 0,
               static_cast<uint32_t>(grid.nx), static_cast<uint32_t>(grid.ny),
               grid.resolution, grid.origin.x(), grid.origin.y(), 0.0};
  write_header(out, h);
  for (int i = 0; i < grid.nx; ++i)
    for (int j = 0; j < grid.ny; ++j) put_f32(out, static_cast<float>(grid.density(i, j)));
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

void write_matrix_csv(const Eigen::MatrixXd& m, const std::string& path) {
  auto out = open_out(path);
  char buf[32];
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.9g", m(i, j));
      if (j) out << ',';
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void write_heightfield_csv(const HeightField& field, const std::string& heights_path,
                           const std::string& mask_path) {
  write_matrix_csv(field.heights, heights_path);
  auto out = open_out(mask_path);
  for (int i = 0; i < field.nx; ++i) {
    for (int j = 0; j < field.ny; ++j) {
      if (j) out << ',';
      out << (field.steppable(i, j) ? '1' : '0');
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + mask_path);
}

void write_local_heightmap_csv(const LocalHeightmap& map, const std::string& path) {
  write_matrix_csv(map.height, path);
}

void write_kde_csv(const KdeGrid& grid, const std::string& path) {
  write_matrix_csv(grid.density, path);
}

void write_depth_pgm(const DepthImage& image, const std::string& path) {
  auto out = open_out(path);
  out << "P5\n" << image.width << " " << image.height << "\n65535\n";
  for (int v = 0; v < image.height; ++v) {
    for (int u = 0; u < image.width; ++u) {
      double mm = std::lround(static_cast<double>(image.depth(v, u)) * 1000.0);
      uint16_t q = static_cast<uint16_t>(std::min(mm, 65535.0));
      unsigned char b[2] = {static_cast<unsigned char>(q >> 8),
                            static_cast<unsigned char>(q & 0xff)};
      out.write(reinterpret_cast<const char*>(b), 2);
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace foothold
