#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cpdsurf/surface.hpp"
#include "cpdsurf/vec.hpp"

namespace cpdsurf {

// Vertices in row-major y-then-x order: vertex (i, j) sits at index j*nx + i.
// Each grid quad is split into two triangles.
struct MeshGrid {
  std::size_t nx = 0, ny = 0;
  std::vector<Vec3d> vertices;
  std::vector<double> K, H, theta;
  std::vector<std::array<std::uint32_t, 3>> faces;
};

struct SampleRow {
  double x, y;
  double rx, ry, rz;
  double E, F, G;
  double K, H;
  double theta, theta_x, theta_y;
};

// Samples the full domain (no margins), nx columns by ny rows.
MeshGrid sample_mesh(const ParamSurface& S, std::size_t nx, std::size_t ny,
                     const FixedDirection& k = {});
std::vector<SampleRow> sample_rows(const ParamSurface& S, std::size_t nx,
                                   std::size_t ny,
                                   const FixedDirection& k = {});

void write_obj(std::ostream& os, const MeshGrid& mesh);
void write_ply(std::ostream& os, const MeshGrid& mesh);
void write_csv(std::ostream& os, const std::vector<SampleRow>& rows);

void export_obj(const MeshGrid& mesh, const std::string& path);
void export_ply(const MeshGrid& mesh, const std::string& path);
void export_csv(const std::vector<SampleRow>& rows, const std::string& path);

}  // namespace cpdsurf
