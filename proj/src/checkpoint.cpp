#include "kp2/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace kp2 {

namespace {

constexpr char kMagic[4] = {'K', 'P', '2', 'F'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
  char buf[4];
  std::memcpy(buf, &v, 4);
  os.write(buf, 4);
}

void put_f64(std::ostream& os, double v) {
  char buf[8];
  std::memcpy(buf, &v, 8);
  os.write(buf, 8);
}

std::uint32_t get_u32(std::istream& is) {
  char buf[4];
  is.read(buf, 4);
  std::uint32_t v;
  std::memcpy(&v, buf, 4);
  return v;
}

double get_f64(std::istream& is) {
  char buf[8];
  is.read(buf, 8);
  double v;
  std::memcpy(&v, buf, 8);
  return v;
}

void write_impl(const std::string& path, const Grid2D& g, bool spectral,
                const std::vector<cplx>& data) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open checkpoint for writing: " + path);
  os.write(kMagic, 4);
  put_u32(os, kVersion);
  put_u32(os, std::uint32_t(g.nx));
  put_u32(os, std::uint32_t(g.ny));
  put_f64(os, g.lx);
  put_f64(os, g.ly);
  put_u32(os, spectral ? 1u : 0u);
  for (const cplx& c : data) {
    put_f64(os, c.real());
    put_f64(os, c.imag());
  }
  if (!os) throw IoError("short write on checkpoint: " + path);
}

}  // namespace

void write_checkpoint(const std::string& path, const SpectralField& F) {
  write_impl(path, F.grid, true, F.coeffs);
}

void write_checkpoint(const std::string& path, const PhysicalField& f) {
  write_impl(path, f.grid, false, f.values);
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open checkpoint: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw IoError("bad checkpoint magic in " + path);
  const std::uint32_t version = get_u32(is);
  if (version != kVersion) throw IoError("unsupported checkpoint version in " + path);
  const std::uint32_t nx = get_u32(is);
  const std::uint32_t ny = get_u32(is);
  const double lx = get_f64(is);
  const double ly = get_f64(is);
  const std::uint32_t flags = get_u32(is);
  Checkpoint cp;
  cp.grid = Grid2D(int(nx), int(ny), lx, ly);
  cp.spectral = (flags & 1u) != 0;
  cp.data.resize(cp.grid.size());
  for (auto& c : cp.data) {
    const double re = get_f64(is);
    const double im = get_f64(is);
    c = cplx(re, im);
  }
  if (!is) throw IoError("truncated checkpoint: " + path);
  return cp;
}

}  // namespace kp2
