#include "wearsim/scene.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "wearsim/constants.hpp"
#include "wearsim/errors.hpp"

namespace wearsim {

double slot_design_length(double f_hz, double eps_r) {
  if (f_hz <= 0.0)
    throw InvalidArgumentError("slot_design_length: frequency must be > 0");
  if (eps_r < 1.0)
    throw InvalidArgumentError("slot_design_length: eps_r must be >= 1");
  const double eps_eff = (eps_r + 1.0) / 2.0;
  const double lambda_m = kSpeedOfLight / (f_hz * std::sqrt(eps_eff));
  return lambda_m / 2.0 * 1e3;
}

AntennaParams::AntennaParams() {
  box_material = constant_from_tand("pla", 4.0, 0.02, 2.45e9);
  coating_material = MaterialSpec::perfect_conductor("silver_coating");
  coating_material.sigma = 4.3e6; // retained for the surface-loss correction
  plate_material = MaterialSpec::perfect_conductor("brass_plate");
  plate_material.sigma = 1.59e7;
  support_material = constant_from_tand("pla_support", 4.0, 0.02, 2.45e9);
}

double AntennaParams::wall_fold_mm() const {
  return std::max(0.0, (slot_length_mm - cavity_width_mm) / 2.0);
}

void AntennaParams::validate() const {
  if (slot_length_mm <= 0 || slot_width_mm <= 0)
    throw InvalidArgumentError("slot dimensions must be > 0");
  if (cavity_width_mm <= 0 || cavity_length_mm <= 0 || cavity_height_mm <= 0)
    throw InvalidArgumentError("cavity dimensions must be > 0");
  if (cavity_wall_mm <= 0)
    throw InvalidArgumentError("wall thickness must be > 0");
  if (wall_fold_mm() > cavity_height_mm)
    throw GeometryError("slot fold of " + std::to_string(wall_fold_mm()) +
                        " mm exceeds the cavity height");
  if (plate_width_mm > cavity_width_mm || plate_length_mm > cavity_length_mm)
    throw GeometryError("feed plate does not fit inside the cavity footprint");
  if (plate_top_mm > cavity_height_mm)
    throw GeometryError("feed plate sits above the cavity ceiling");
  if (plate_top_mm <= plate_thickness_mm)
    throw GeometryError("feed plate elevation must exceed its thickness");
  if (feed_offset_mm <= 0 || feed_offset_mm >= cavity_length_mm)
    throw GeometryError("feed offset must fall inside the cavity");
  // The pin must land under the centered plate.
  const double pin_z = feed_offset_mm - cavity_length_mm / 2.0;
  if (std::abs(pin_z) > plate_length_mm / 2.0)
    throw GeometryError("feed pin at offset " + std::to_string(feed_offset_mm) +
                        " mm misses the feed plate");
  if (slot_width_mm > cavity_length_mm)
    throw GeometryError("slot is wider than the cavity is long");
}

double PhantomSpec::total_depth_mm() const {
  double d = 0;
  for (const auto& l : layers)
    d += l.thickness_mm;
  return d;
}

void PhantomSpec::validate() const {
  if (kind == Kind::Layered) {
    if (layers.empty())
      throw InvalidArgumentError("layered phantom needs at least one layer");
    for (const auto& l : layers)
      if (l.thickness_mm <= 0.0)
        throw InvalidArgumentError("phantom layer '" + l.tissue + "' has non-positive thickness");
    if (total_depth_mm() < 20.0)
      throw InvalidArgumentError("phantom depth below 20 mm does not emulate a body half-space");
    if (lateral_width_mm <= 0 || lateral_length_mm <= 0)
      throw InvalidArgumentError("phantom lateral extent must be > 0");
  } else {
    if (voxel_file.empty())
      throw InvalidArgumentError("voxel phantom needs a file path");
    if (voxel_pitch_mm <= 0)
      throw InvalidArgumentError("voxel pitch must be > 0");
  }
}

PhantomSpec PhantomSpec::default_layered() {
  PhantomSpec p;
  p.kind = Kind::Layered;
  p.layers = {{"skin_dry", 2.0}, {"fat", 5.0}, {"muscle", 30.0}, {"bone_cortical", 20.0}};
  p.lateral_width_mm = 80.0;
  p.lateral_length_mm = 120.0;
  return p;
}

double PhantomSpec::fat_thickness_mm_for_bmi(double bmi) {
  // Engineering surrogate, not an anatomical claim: BMI 17 -> 3 mm fat,
  // BMI 29 -> 15 mm, linear in between and extrapolated with a 1 mm floor.
  const double t = 3.0 + (bmi - 17.0) * (15.0 - 3.0) / (29.0 - 17.0);
  return std::max(1.0, t);
}

Scene::Scene() { materials.push_back(MaterialSpec::air()); }

int Scene::add_material(const MaterialSpec& spec) {
  for (std::size_t i = 0; i < materials.size(); ++i)
    if (materials[i].name == spec.name)
      return static_cast<int>(i);
  materials.push_back(spec);
  return static_cast<int>(materials.size() - 1);
}

void Scene::merge(const Scene& other) {
  std::vector<int> remap(other.materials.size());
  for (std::size_t i = 0; i < other.materials.size(); ++i)
    remap[i] = add_material(other.materials[i]);
  for (const auto& op : other.ops) {
    SceneOp copy = op;
    if (auto* b = std::get_if<SolidBox>(&copy))
      b->material = remap[b->material];
    else if (auto* p = std::get_if<ConductorPlate>(&copy))
      p->material = remap[p->material];
    ops.push_back(copy);
  }
  ports.insert(ports.end(), other.ports.begin(), other.ports.end());
  resistors.insert(resistors.end(), other.resistors.begin(), other.resistors.end());
  alignment_pitches_m.insert(alignment_pitches_m.end(), other.alignment_pitches_m.begin(),
                             other.alignment_pitches_m.end());
}

namespace {

void expand(Vec3& lo, Vec3& hi, const Vec3& a, const Vec3& b, bool& any) {
  for (int ax = 0; ax < 3; ++ax) {
    const double mn = std::min(a[ax], b[ax]);
    const double mx = std::max(a[ax], b[ax]);
    if (!any) {
      lo[ax] = mn;
      hi[ax] = mx;
    } else {
      lo[ax] = std::min(lo[ax], mn);
      hi[ax] = std::max(hi[ax], mx);
    }
  }
  any = true;
}

} // namespace

bool Scene::bounds(Vec3& lo, Vec3& hi) const {
  bool any = false;
  for (const auto& op : ops) {
    if (const auto* b = std::get_if<SolidBox>(&op))
      expand(lo, hi, b->lo, b->hi, any);
    else if (const auto* p = std::get_if<ConductorPlate>(&op))
      expand(lo, hi, p->lo, p->hi, any);
    else if (const auto* c = std::get_if<ConductorCut>(&op))
      expand(lo, hi, c->lo, c->hi, any);
  }
  for (const auto& p : ports)
    expand(lo, hi, p.ground, p.live, any);
  for (const auto& r : resistors)
    expand(lo, hi, r.a, r.b, any);
  return any;
}

Scene build_antenna(const AntennaParams& p, double bottom_x_m) {
  p.validate();
  Scene scene;
  const double mm = 1e-3;

  const int pla = scene.add_material(p.box_material);
  const int coating = scene.add_material(p.coating_material);
  const int plate_mat = scene.add_material(p.plate_material);
  const int support = scene.add_material(p.support_material);
  const int air = 0;

  const double wall = p.cavity_wall_mm * mm;
  const double cw = p.cavity_width_mm * mm;   // y
  const double cl = p.cavity_length_mm * mm;  // z
  const double ch = p.cavity_height_mm * mm;  // x

  // Cavity interior: x in [x0, x1], centered in y and z.
  const double x0 = bottom_x_m + wall;
  const double x1 = x0 + ch;
  const double y0 = -cw / 2, y1 = cw / 2;
  const double z0 = -cl / 2, z1 = cl / 2;

  // Printed shell, then the air interior carved back out.
  scene.ops.push_back(SolidBox{{bottom_x_m, y0 - wall, z0 - wall},
                               {x1 + wall, y1 + wall, z1 + wall},
                               pla});
  scene.ops.push_back(SolidBox{{x0, y0, z0}, {x1, y1, z1}, air});

  // Interior metallization: all six inner surfaces.
  scene.ops.push_back(ConductorPlate{0, x0, {x0, y0, z0}, {x0, y1, z1}, coating}); // floor
  scene.ops.push_back(ConductorPlate{0, x1, {x1, y0, z0}, {x1, y1, z1}, coating}); // ceiling
  scene.ops.push_back(ConductorPlate{1, y0, {x0, y0, z0}, {x1, y0, z1}, coating});
  scene.ops.push_back(ConductorPlate{1, y1, {x0, y1, z0}, {x1, y1, z1}, coating});
  scene.ops.push_back(ConductorPlate{2, z0, {x0, y0, z0}, {x1, y1, z0}, coating});
  scene.ops.push_back(ConductorPlate{2, z1, {x0, y0, z1}, {x1, y1, z1}, coating});

  // Slot aperture on the ceiling, centered, folded down the side walls when
  // longer than the cavity is wide.
  const double sw = p.slot_width_mm * mm;
  const double half_span = std::min(p.slot_length_mm, p.cavity_width_mm) / 2.0 * mm;
  scene.ops.push_back(ConductorCut{0, x1, {x1, -half_span, -sw / 2}, {x1, half_span, sw / 2}});
  const double fold = p.wall_fold_mm() * mm;
  if (fold > 0.0) {
    scene.ops.push_back(ConductorCut{1, y0, {x1 - fold, y0, -sw / 2}, {x1, y0, sw / 2}});
    scene.ops.push_back(ConductorCut{1, y1, {x1 - fold, y1, -sw / 2}, {x1, y1, sw / 2}});
  }

  // Feed plate, centered in the footprint, resting on its support post.
  const double plate_x = x0 + (p.plate_top_mm - p.plate_thickness_mm) * mm;
  const double pw = p.plate_width_mm * mm, pl = p.plate_length_mm * mm;
  scene.ops.push_back(ConductorPlate{
      0, plate_x, {plate_x, -pw / 2, -pl / 2}, {plate_x, pw / 2, pl / 2}, plate_mat});
  if (p.notch_enabled && p.notch_width_mm > 0 && p.notch_depth_mm > 0) {
    scene.ops.push_back(ConductorCut{0, plate_x,
                                     {plate_x, -p.notch_width_mm / 2 * mm, -pl / 2},
                                     {plate_x, p.notch_width_mm / 2 * mm,
                                      -pl / 2 + p.notch_depth_mm * mm}});
  }

  // Support post under the plate, away from the feed pin.
  const double sup_h = std::min(p.support_height_mm * mm, plate_x - x0);
  if (sup_h > 0) {
    const double sup_zc = pl / 4.0; // quarter of the plate, opposite the feed
    scene.ops.push_back(SolidBox{{x0, -p.support_width_mm / 2 * mm, sup_zc - p.support_length_mm / 2 * mm},
                                 {x0 + sup_h, p.support_width_mm / 2 * mm,
                                  sup_zc + p.support_length_mm / 2 * mm},
                                 support});
  }

  // Feed column: grounded at the coated floor, driving the plate.
  const double pin_z = z0 + p.feed_offset_mm * mm;
  Port port;
  port.ground = {x0, 0.0, pin_z};
  port.live = {plate_x, 0.0, pin_z};
  port.impedance = 50.0;
  scene.ports.push_back(port);

  return scene;
}

Scene build_phantom(const PhantomSpec& spec, const TissueDatabase& db) {
  spec.validate();
  Scene scene;

  if (spec.kind == PhantomSpec::Kind::Layered) {
    const double mm = 1e-3;
    const double wy = spec.lateral_width_mm * mm;
    const double wz = spec.lateral_length_mm * mm;
    double x_hi = 0.0;
    for (const auto& layer : spec.layers) {
      const int mat = scene.add_material(db.material(layer.tissue));
      const double x_lo = x_hi - layer.thickness_mm * mm;
      scene.ops.push_back(SolidBox{{x_lo, -wy / 2, -wz / 2}, {x_hi, wy / 2, wz / 2}, mat});
      x_hi = x_lo;
    }
    return scene;
  }

  // Voxel import: one solid box per run of equal tissue IDs along x.
  const VoxelImport vox = read_voxel_phantom(spec.voxel_file);
  const double pitch = spec.voxel_pitch_mm * 1e-3;
  scene.alignment_pitches_m.push_back(pitch);

  std::map<int, int> mat_of_id; // voxel ID -> scene material index
  for (const auto& [id, tissue] : vox.id_map)
    mat_of_id[id] = scene.add_material(db.material(tissue));

  // Volume spans x in [-nx*pitch, 0], centered laterally; file i runs into
  // the body (i = 0 at the surface).
  const double sy = vox.ny * pitch, sz = vox.nz * pitch;
  for (int k = 0; k < vox.nz; ++k) {
    for (int j = 0; j < vox.ny; ++j) {
      int i = 0;
      while (i < vox.nx) {
        const uint8_t id = vox.ids[static_cast<std::size_t>(i) +
                                   static_cast<std::size_t>(vox.nx) *
                                       (j + static_cast<std::size_t>(vox.ny) * k)];
        int run = i + 1;
        while (run < vox.nx &&
               vox.ids[static_cast<std::size_t>(run) +
                       static_cast<std::size_t>(vox.nx) *
                           (j + static_cast<std::size_t>(vox.ny) * k)] == id)
          ++run;
        if (id != 0) { // ID 0 is empty space
          auto it = mat_of_id.find(id);
          if (it == mat_of_id.end())
            throw DataError("voxel file uses tissue ID " + std::to_string(id) +
                            " missing from the sidecar map");
          scene.ops.push_back(SolidBox{{-(run)*pitch, -sy / 2 + j * pitch, -sz / 2 + k * pitch},
                                       {-(i)*pitch, -sy / 2 + (j + 1) * pitch,
                                        -sz / 2 + (k + 1) * pitch},
                                       it->second});
        }
        i = run;
      }
    }
  }
  return scene;
}

// --- scene description files ---

Scene SceneDescription::build(const TissueDatabase& db) const {
  Scene scene;
  if (phantom) {
    Scene ph = build_phantom(*phantom, db);
    scene.merge(ph);
  }
  if (antenna_present) {
    Scene ant = build_antenna(antenna, gap_m);
    scene.merge(ant);
  }
  return scene;
}

Scene SceneDescription::build() const {
  if (tissue_db.empty())
    return build(TissueDatabase::builtin());
  return build(TissueDatabase::load(tissue_db));
}

SceneDescription SceneDescription::from_config(const Config& cfg) {
  SceneDescription d;

  const auto& mat = cfg.section("materials");
  d.tissue_db = mat.get_string("tissue_db", "");

  const auto& ant = cfg.section("antenna");
  d.antenna_present = ant.get_bool("present", true);
  if (d.antenna_present) {
    AntennaParams& a = d.antenna;
    auto len = [&](const char* key, double dflt_mm) {
      return ant.has(key) ? ant.get_length_m(key) * 1e3 : dflt_mm;
    };
    a.cavity_width_mm = len("cavity_width", a.cavity_width_mm);
    a.cavity_length_mm = len("cavity_length", a.cavity_length_mm);
    a.cavity_height_mm = len("cavity_height", a.cavity_height_mm);
    a.plate_width_mm = len("plate_width", a.plate_width_mm);
    a.plate_length_mm = len("plate_length", a.plate_length_mm);
    a.notch_width_mm = len("notch_width", a.notch_width_mm);
    a.notch_depth_mm = len("notch_depth", a.notch_depth_mm);
    a.feed_offset_mm = len("feed_offset", a.feed_offset_mm);
    a.clearance_above_plate_mm = len("clearance_above_plate", a.clearance_above_plate_mm);
    a.plate_top_mm = len("plate_top", a.plate_top_mm);
    a.cavity_wall_mm = len("wall_thickness", a.cavity_wall_mm);
    a.slot_length_mm = len("slot_length", a.slot_length_mm);
    a.slot_width_mm = len("slot_width", a.slot_width_mm);
    a.plate_thickness_mm = len("plate_thickness", a.plate_thickness_mm);
    a.support_width_mm = len("support_width", a.support_width_mm);
    a.support_length_mm = len("support_length", a.support_length_mm);
    a.support_height_mm = len("support_height", a.support_height_mm);
    a.notch_enabled = ant.get_bool("notch", a.notch_enabled);
    if (ant.has("pla_eps_r") || ant.has("pla_tan_delta") || ant.has("pla_reference")) {
      const double er = ant.get_number("pla_eps_r", 4.0);
      const double td = ant.get_number("pla_tan_delta", 0.02);
      const double fr = ant.get_frequency_hz("pla_reference", 2.45e9);
      a.box_material = constant_from_tand("pla", er, td, fr);
      a.support_material = constant_from_tand("pla_support", er, td, fr);
    }
  }

  if (cfg.has_section("phantom")) {
    const auto& ph = cfg.section("phantom");
    const std::string kind = ph.get_string("kind", "layered");
    if (kind == "none") {
      ph.finish();
    } else {
      PhantomSpec spec;
      if (kind == "layered") {
        spec.kind = PhantomSpec::Kind::Layered;
        spec.layers.clear();
        for (const auto& text : ph.get_all("layer")) {
          std::istringstream ls(text);
          std::string tissue, thick, unit;
          ls >> tissue >> thick >> unit;
          if (tissue.empty() || thick.empty())
            throw ParseError(cfg.origin(), 0, "layer entries need 'tissue thickness unit'");
          spec.layers.push_back({tissue, parse_length_m(thick + " " + unit) * 1e3});
        }
        if (spec.layers.empty())
          spec = PhantomSpec::default_layered();
      } else if (kind == "voxel") {
        spec.kind = PhantomSpec::Kind::VoxelImport;
        spec.voxel_file = ph.get_string("voxel_file");
        spec.voxel_pitch_mm = ph.get_length_m("voxel_pitch") * 1e3;
      } else {
        throw ParseError(cfg.origin(), 0, "phantom kind must be layered, voxel or none");
      }
      if (ph.has("lateral_width"))
        spec.lateral_width_mm = ph.get_length_m("lateral_width") * 1e3;
      if (ph.has("lateral_length"))
        spec.lateral_length_mm = ph.get_length_m("lateral_length") * 1e3;
      if (ph.has("bmi")) {
        const double bmi = ph.get_number("bmi");
        for (auto& l : spec.layers)
          if (l.tissue == "fat")
            l.thickness_mm = PhantomSpec::fat_thickness_mm_for_bmi(bmi);
      }
      d.phantom = spec;
    }
  }

  const auto& place = cfg.section("placement");
  d.gap_m = place.get_length_m("gap", 0.0);

  const auto& grid = cfg.section("grid");
  d.grid.dx_m = grid.get_length_m("dx", d.grid.dx_m);
  d.grid.padding_cells = grid.get_int("padding_cells", d.grid.padding_cells);
  d.grid.max_cells = static_cast<std::size_t>(grid.get_number("max_cells", static_cast<double>(d.grid.max_cells)));

  cfg.finish();
  return d;
}

SceneDescription SceneDescription::load(const std::filesystem::path& file) {
  return from_config(Config::load(file));
}

std::string SceneDescription::to_text() const {
  std::ostringstream out;
  out.precision(12);
  out << "[materials]\n";
  if (!tissue_db.empty())
    out << "tissue_db = " << tissue_db << "\n";
  out << "\n[antenna]\n";
  out << "present = " << (antenna_present ? "true" : "false") << "\n";
  if (antenna_present) {
    const AntennaParams& a = antenna;
    out << "cavity_width = " << a.cavity_width_mm << " mm\n";
    out << "cavity_length = " << a.cavity_length_mm << " mm\n";
    out << "cavity_height = " << a.cavity_height_mm << " mm\n";
    out << "plate_width = " << a.plate_width_mm << " mm\n";
    out << "plate_length = " << a.plate_length_mm << " mm\n";
    out << "notch_width = " << a.notch_width_mm << " mm\n";
    out << "notch_depth = " << a.notch_depth_mm << " mm\n";
    out << "feed_offset = " << a.feed_offset_mm << " mm\n";
    out << "clearance_above_plate = " << a.clearance_above_plate_mm << " mm\n";
    out << "plate_top = " << a.plate_top_mm << " mm\n";
    out << "wall_thickness = " << a.cavity_wall_mm << " mm\n";
    out << "slot_length = " << a.slot_length_mm << " mm\n";
    out << "slot_width = " << a.slot_width_mm << " mm\n";
    out << "plate_thickness = " << a.plate_thickness_mm << " mm\n";
    out << "support_width = " << a.support_width_mm << " mm\n";
    out << "support_length = " << a.support_length_mm << " mm\n";
    out << "support_height = " << a.support_height_mm << " mm\n";
    out << "notch = " << (a.notch_enabled ? "on" : "off") << "\n";
  }
  out << "\n[phantom]\n";
  if (!phantom) {
    out << "kind = none\n";
  } else if (phantom->kind == PhantomSpec::Kind::Layered) {
    out << "kind = layered\n";
    for (const auto& l : phantom->layers)
      out << "layer = " << l.tissue << " " << l.thickness_mm << " mm\n";
    out << "lateral_width = " << phantom->lateral_width_mm << " mm\n";
    out << "lateral_length = " << phantom->lateral_length_mm << " mm\n";
  } else {
    out << "kind = voxel\n";
    out << "voxel_file = " << phantom->voxel_file.string() << "\n";
    out << "voxel_pitch = " << phantom->voxel_pitch_mm << " mm\n";
    out << "lateral_width = " << phantom->lateral_width_mm << " mm\n";
    out << "lateral_length = " << phantom->lateral_length_mm << " mm\n";
  }
  out << "\n[placement]\n";
  out << "gap = " << gap_m * 1e3 << " mm\n";
  out << "\n[grid]\n";
  out << "dx = " << grid.dx_m * 1e3 << " mm\n";
  out << "padding_cells = " << grid.padding_cells << "\n";
  out << "max_cells = " << grid.max_cells << "\n";
  return out.str();
}

void SceneDescription::save(const std::filesystem::path& file) const {
  std::ofstream out(file);
  if (!out)
    throw DataError("cannot write scene file: " + file.string());
  out << to_text();
}

} // namespace wearsim
