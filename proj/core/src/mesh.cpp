#include "cpdsurf/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "cpdsurf/errors.hpp"
#include "cpdsurf/geometry.hpp"
#include "cpdsurf/parallel.hpp"

namespace cpdsurf {
namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> axis_samples(const Interval& iv, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(n - 1);
    out[i] = iv.lo + (iv.hi - iv.lo) * t;
  }
  out.back() = iv.hi;
  return out;
}

void check_counts(std::size_t nx, std::size_t ny) {
  if (nx < 2 || ny < 2)
    throw ValidationError("sampling needs nx >= 2 and ny >= 2");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  return os;
}

}  // namespace

MeshGrid sample_mesh(const ParamSurface& S, std::size_t nx, std::size_t ny,
                     const FixedDirection& k) {
  check_counts(nx, ny);
  MeshGrid mesh;
  mesh.nx = nx;
  mesh.ny = ny;
  std::size_t n = nx * ny;
  mesh.vertices.resize(n);
  mesh.K.resize(n);
  mesh.H.resize(n);
  mesh.theta.resize(n);

  std::vector<double> xs = axis_samples(S.domain.x, nx);
  std::vector<double> ys = axis_samples(S.domain.y, ny);
  parallel_for(n, [&](std::size_t idx) {
    std::size_t j = idx / nx, i = idx % nx;
    SurfaceFrame fr = frame_at(S, xs[i], ys[j], k);
    mesh.vertices[idx] = fr.r;
    mesh.K[idx] = fr.A.det();
    mesh.H[idx] = fr.A.trace() / 2.0;
    mesh.theta[idx] = fr.theta.val;
  });

  mesh.faces.reserve(2 * (nx - 1) * (ny - 1));
  for (std::size_t j = 0; j + 1 < ny; ++j)
    for (std::size_t i = 0; i + 1 < nx; ++i) {
      auto a = static_cast<std::uint32_t>(j * nx + i);
      auto b = static_cast<std::uint32_t>(j * nx + i + 1);
      auto c = static_cast<std::uint32_t>((j + 1) * nx + i);
      auto d = static_cast<std::uint32_t>((j + 1) * nx + i + 1);
      mesh.faces.push_back({a, b, d});
      mesh.faces.push_back({a, d, c});
    }
  return mesh;
}

std::vector<SampleRow> sample_rows(const ParamSurface& S, std::size_t nx,
                                   std::size_t ny, const FixedDirection& k) {
  check_counts(nx, ny);
  std::vector<double> xs = axis_samples(S.domain.x, nx);
  std::vector<double> ys = axis_samples(S.domain.y, ny);
  std::vector<SampleRow> rows(nx * ny);
  parallel_for(rows.size(), [&](std::size_t idx) {
    std::size_t j = idx / nx, i = idx % nx;
    SurfaceFrame fr = frame_at(S, xs[i], ys[j], k);
    SampleRow& row = rows[idx];
    row.x = xs[i];
    row.y = ys[j];
    row.rx = fr.r.x;
    row.ry = fr.r.y;
    row.rz = fr.r.z;
    row.E = fr.E.val;
    row.F = fr.F.val;
    row.G = fr.G.val;
    row.K = fr.A.det();
    row.H = fr.A.trace() / 2.0;
    row.theta = fr.theta.val;
    row.theta_x = fr.theta.dx;
    row.theta_y = fr.theta.dy;
  });
  return rows;
}

void write_obj(std::ostream& os, const MeshGrid& mesh) {
  for (const auto& v : mesh.vertices) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
      throw ValidationError("mesh has a non-finite vertex");
    os << "v " << g17(v.x) << ' ' << g17(v.y) << ' ' << g17(v.z) << '\n';
  }
  for (const auto& f : mesh.faces)
    os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void write_ply(std::ostream& os, const MeshGrid& mesh) {
  os << "ply\n"
     << "format ascii 1.0\n"
     << "element vertex " << mesh.vertices.size() << '\n'
     << "property double x\n"
     << "property double y\n"
     << "property double z\n"
     << "property double K\n"
     << "property double H\n"
     << "property double theta\n"
     << "element face " << mesh.faces.size() << '\n'
     << "property list uchar uint vertex_indices\n"
     << "end_header\n";
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Vec3d& v = mesh.vertices[i];
    os << g17(v.x) << ' ' << g17(v.y) << ' ' << g17(v.z) << ' '
       << g17(mesh.K[i]) << ' ' << g17(mesh.H[i]) << ' '
       << g17(mesh.theta[i]) << '\n';
  }
  for (const auto& f : mesh.faces)
    os << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

void write_csv(std::ostream& os, const std::vector<SampleRow>& rows) {
  os << "x,y,rx,ry,rz,E,F,G,K,H,theta,theta_x,theta_y\n";
  for (const auto& r : rows) {
    const double cols[] = {r.x, r.y, r.rx, r.ry, r.rz, r.E, r.F, r.G,
                           r.K, r.H, r.theta, r.theta_x, r.theta_y};
    for (std::size_t i = 0; i < 13; ++i) {
      if (i) os << ',';
      os << g17(cols[i]);
    }
    os << '\n';
  }
}

void export_obj(const MeshGrid& mesh, const std::string& path) {
  auto os = open_out(path);
  write_obj(os, mesh);
}

void export_ply(const MeshGrid& mesh, const std::string& path) {
  auto os = open_out(path);
  write_ply(os, mesh);
}

void export_csv(const std::vector<SampleRow>& rows, const std::string& path) {
  auto os = open_out(path);
  write_csv(os, rows);
}

}  // namespace cpdsurf
