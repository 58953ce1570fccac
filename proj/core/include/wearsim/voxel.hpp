#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wearsim/array3.hpp"
#include "wearsim/dielectrics.hpp"
#include "wearsim/scene.hpp"

namespace wearsim {

// Lumped element attached to a single Yee edge after rasterization.
struct LumpedEdge {
  int axis = 0;
  int i = 0, j = 0, k = 0;
  bool is_port = false;
  double source_impedance = 50.0; // series source resistance (port)
  double load_ohms = 0.0;         // parallel resistor; 0 = none
};

// Uniform Yee grid: per-cell material indices plus perfectly conducting
// edge masks for thin-metal faces, pins and conductor volumes.
struct VoxelGrid {
  int nx = 0, ny = 0, nz = 0; // cells
  double dx_m = 0.0;
  Vec3 origin;                // world position of node (0,0,0)

  Array3<uint16_t> cell;                      // material index, dims (nx,ny,nz)
  std::vector<MaterialSpec> materials;        // [0] air
  Array3<uint8_t> pec_ex, pec_ey, pec_ez;     // dims (nx+1,ny+1,nz+1)

  std::optional<LumpedEdge> port;
  std::vector<LumpedEdge> resistors;

  // Tight index bounds around non-air content (cells and conductor edges);
  // {0,0,0}-{0,0,0} when empty.
  int content_lo[3] = {0, 0, 0};
  int content_hi[3] = {0, 0, 0}; // inclusive cell indices

  std::size_t cell_count() const { return static_cast<std::size_t>(nx) * ny * nz; }
  Vec3 cell_center(int i, int j, int k) const {
    return {origin.x + (i + 0.5) * dx_m, origin.y + (j + 0.5) * dx_m,
            origin.z + (k + 0.5) * dx_m};
  }
  std::size_t count_cells_of(const std::string& material_name) const;
};

// Material properties frozen at one frequency for the solver and the power
// integrals.
struct ResolvedMaterial {
  double eps_r = 1.0;
  double sigma = 0.0;
  double density = 0.0;
  MaterialKind kind = MaterialKind::Air;
  std::string name;
};

std::vector<ResolvedMaterial> resolve_materials(const std::vector<MaterialSpec>& materials,
                                                double f_hz);

// Center-of-cell rasterization of a scene onto a uniform grid. Padding is
// added on every side; the scene bounding box lands exactly on grid nodes.
VoxelGrid rasterize(const Scene& scene, double dx_m, int padding_cells,
                    std::size_t max_cells = 120'000'000);

// --- binary voxel/field formats ---
// Voxel phantom: 16-byte header (magic "WSVX", nx, ny, nz as u32 LE) then
// nx*ny*nz u8 tissue IDs, x-fastest. A text sidecar (<file>.map) maps
// "id tissue_name" per line.
struct VoxelImport {
  int nx = 0, ny = 0, nz = 0;
  std::vector<uint8_t> ids;
  std::map<int, std::string> id_map;
};

VoxelImport read_voxel_phantom(const std::filesystem::path& file);
void write_voxel_phantom(const std::filesystem::path& file, int nx, int ny, int nz,
                         const std::vector<uint8_t>& ids,
                         const std::map<int, std::string>& id_map);

// Field snapshot: 16-byte header (magic "WSFD", nx, ny, nz as u32 LE) then
// nx*ny*nz f32 LE, x-fastest.
void write_field_snapshot(const std::filesystem::path& file, const Array3<double>& field);
Array3<double> read_field_snapshot(const std::filesystem::path& file);

} // namespace wearsim
