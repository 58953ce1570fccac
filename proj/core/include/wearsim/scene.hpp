#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wearsim/config.hpp"
#include "wearsim/dielectrics.hpp"

namespace wearsim {

struct Vec3 {
  double x = 0, y = 0, z = 0;
  double operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  double& operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }
};

// Half-wave slot length in mm for a slot printed on a dielectric surface,
// using the effective permittivity (eps_r + 1) / 2.
double slot_design_length(double f_hz, double eps_r);

// Cavity-backed slot antenna dimensions, millimeters. Defaults are the
// optimized build: 56 x 33 x 11 mm interior cavity, 47 x 9 mm slot folded
// onto the side walls, monopole plate on a PLA support post.
//
// Geometry convention: boresight is +x (the slot face); the cavity height
// runs along x, the cavity width (slot-spanning direction) along y, and the
// major axis along z. The body, when present, sits at x < 0.
struct AntennaParams {
  double cavity_width_mm = 33.0;   // interior, y
  double cavity_length_mm = 56.0;  // interior, z (major axis)
  double cavity_height_mm = 11.0;  // interior, x
  double plate_width_mm = 27.0;    // feed plate, y
  double plate_length_mm = 34.0;   // feed plate, z
  double notch_width_mm = 5.0;     // matching notch cut into the plate, y
  double notch_depth_mm = 5.5;     // matching notch, z
  double feed_offset_mm = 23.0;    // feed pin from the near interior wall, z
  double clearance_above_plate_mm = 4.0; // plate top to cavity ceiling
  double plate_top_mm = 7.0;             // plate top above cavity floor
  double cavity_wall_mm = 1.5;     // printed wall thickness
  double slot_length_mm = 47.0;
  double slot_width_mm = 9.0;
  double plate_thickness_mm = 0.1;
  double support_width_mm = 5.0;
  double support_length_mm = 5.0;
  double support_height_mm = 6.7;
  bool notch_enabled = true;

  MaterialSpec box_material;     // defaults set by AntennaParams()
  MaterialSpec coating_material; // interior wall metallization
  MaterialSpec plate_material;
  MaterialSpec support_material;

  AntennaParams();

  double wall_fold_mm() const; // slot overhang folded onto each side wall
  void validate() const;       // throws GeometryError / InvalidArgumentError
};

struct PhantomLayer {
  std::string tissue;
  double thickness_mm = 0.0;
};

// Tissue block the antenna is placed on: either procedural layers (surface
// first, stacked inward along -x) or an imported voxel volume.
struct PhantomSpec {
  enum class Kind { Layered, VoxelImport };
  Kind kind = Kind::Layered;

  std::vector<PhantomLayer> layers; // Layered
  double lateral_width_mm = 80.0;   // y extent
  double lateral_length_mm = 120.0; // z extent

  std::filesystem::path voxel_file; // VoxelImport; sidecar map at <file>.map
  double voxel_pitch_mm = 1.0;

  double total_depth_mm() const;
  void validate() const;

  // Default limb-like stack: skin 2 / fat 5 / muscle 30 / cortical bone 20 mm.
  static PhantomSpec default_layered();
  // Fat-layer surrogate for body-mass index: 17 -> 3 mm, 29 -> 15 mm, linear.
  static double fat_thickness_mm_for_bmi(double bmi);
};

// --- scene primitives (painter's order: later entries override earlier) ---

struct SolidBox {
  Vec3 lo, hi;      // meters, world frame
  int material = 0; // index into Scene::materials
};

// Perfectly conducting rectangle lying in an axis-normal plane; rasterizes
// onto Yee cell faces (tangential-E edge clamps).
struct ConductorPlate {
  int axis = 0;    // plane normal
  double plane = 0; // meters
  Vec3 lo, hi;      // in-plane extent (lo[axis] == hi[axis] == plane)
  int material = 0; // conductor spec, used only for surface-loss accounting
};

// Removes previously painted conductor faces inside the rectangle (slot
// apertures and plate notches).
struct ConductorCut {
  int axis = 0;
  double plane = 0;
  Vec3 lo, hi;
};

using SceneOp = std::variant<SolidBox, ConductorPlate, ConductorCut>;

// Feed column from a grounded node to the driven conductor. Rasterizes to a
// perfectly conducting pin with a one-cell source gap at the live end.
struct Port {
  Vec3 ground, live; // meters; must be axis-aligned
  double impedance = 50.0;
};

// Lumped resistor across a single cell edge (matched-load fixtures).
struct Resistor {
  Vec3 a, b;
  double ohms = 50.0;
};

struct Scene {
  std::vector<MaterialSpec> materials; // [0] is always air
  std::vector<SceneOp> ops;
  std::vector<Port> ports;
  std::vector<Resistor> resistors;
  // Voxel-import pitches that the rasterization dx must divide evenly.
  std::vector<double> alignment_pitches_m;

  Scene();
  int add_material(const MaterialSpec& spec); // dedup by name
  void merge(const Scene& other);             // appends with material remap
  // Bounding box over all ops and ports; false if the scene is empty.
  bool bounds(Vec3& lo, Vec3& hi) const;
};

// Antenna assembly with its bottom (body-facing) outer face at x = bottom_x.
// The scene contains the printed shell, interior metallization minus the
// slot aperture, the feed plate with its support and notch, and one port.
Scene build_antenna(const AntennaParams& params, double bottom_x_m = 0.0);

// Phantom slab with its surface at x = 0, extending to negative x, centered
// laterally. No port.
Scene build_phantom(const PhantomSpec& spec, const TissueDatabase& db);

// --- scene description files ---

struct GridSpec {
  double dx_m = 0.75e-3;
  int padding_cells = 30;
  std::size_t max_cells = 120'000'000;
};

// Everything a scene file describes: an optional antenna, an optional
// phantom, their separation, and how to grid it.
struct SceneDescription {
  bool antenna_present = true;
  AntennaParams antenna;
  std::optional<PhantomSpec> phantom;
  double gap_m = 0.0; // antenna bottom to phantom surface
  GridSpec grid;
  std::string tissue_db; // path, or empty for the built-in table

  Scene build() const; // loads/uses the tissue database as configured
  Scene build(const TissueDatabase& db) const;

  static SceneDescription load(const std::filesystem::path& file);
  static SceneDescription from_config(const Config& cfg);
  void save(const std::filesystem::path& file) const;
  std::string to_text() const;
};

} // namespace wearsim
