#pragma once

#include <array>
#include <complex>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace wearsim {

// One relaxation term of the four-term Cole-Cole dispersion model.
struct ColeColeTerm {
  double delta_eps = 0.0; // dimensionless dispersion magnitude, >= 0
  double tau_s = 1.0;     // relaxation time, seconds, > 0
  double alpha = 0.0;     // distribution broadening, in [0, 1)
};

// Four-term Cole-Cole parameter set plus static ionic conductivity.
struct ColeColeParams {
  double eps_inf = 1.0;
  std::array<ColeColeTerm, 4> terms{};
  double sigma_ionic = 0.0; // S/m

  void validate() const; // throws InvalidArgumentError on bad parameters
};

// Complex relative permittivity eps' - j*eps'' at frequency f.
// Uses the principal branch for the fractional power (j*w*tau)^(1-alpha).
std::complex<double> evaluate_cole_cole(const ColeColeParams& params, double f_hz);

// sigma_eff = w * eps0 * eps'' bridging the dispersive loss to the
// conduction term of the time-domain solver and the absorption integrals.
double effective_conductivity(std::complex<double> eps_rel, double f_hz);

// How a material behaves in the discretized model.
enum class MaterialKind {
  Air,
  DispersiveTissue,   // Cole-Cole evaluated, frozen to (eps_r, sigma) per run
  ConstantDielectric, // fixed eps_r + sigma
  Conductor,          // finite conductivity, nonmagnetic
  PerfectConductor,
};

struct MaterialSpec {
  std::string name;
  MaterialKind kind = MaterialKind::Air;
  ColeColeParams cole{};  // DispersiveTissue only
  double eps_r = 1.0;     // ConstantDielectric only
  double sigma = 0.0;     // ConstantDielectric / Conductor
  double density = 1.2;   // kg/m^3; air fixed at 1.2

  bool is_tissue() const { return kind == MaterialKind::DispersiveTissue; }
  // Dielectric/conductor parts of the antenna assembly, i.e. everything
  // lossy that is not tissue and not air.
  bool is_antenna_material() const {
    return kind == MaterialKind::ConstantDielectric || kind == MaterialKind::Conductor;
  }

  // Frozen (relative permittivity, conductivity) pair at f for the solver.
  std::pair<double, double> eps_sigma_at(double f_hz) const;

  static MaterialSpec air();
  static MaterialSpec perfect_conductor(std::string name);
  static MaterialSpec conductor(std::string name, double sigma_s_per_m, double density = 8490.0);
  static MaterialSpec tissue(std::string name, const ColeColeParams& cole, double density);
};

// Narrowband constant-sigma model of a tan-delta dielectric:
// sigma = 2*pi*f_ref*eps0*eps_r*tan_delta.
MaterialSpec constant_from_tand(std::string name, double eps_r, double tan_delta,
                                double f_ref_hz, double density = 1250.0);

// Tissue name -> (Cole-Cole parameters, mass density).
class TissueDatabase {
public:
  struct Entry {
    ColeColeParams cole;
    double density = 0.0; // kg/m^3
  };

  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  const Entry& entry(const std::string& name) const; // throws DataError + suggestions
  MaterialSpec material(const std::string& name) const;
  std::vector<std::string> names() const;
  std::size_t size() const { return entries_.size(); }
  void insert(const std::string& name, const Entry& e) { entries_[name] = e; }

  // Line-oriented text file: one record per tissue,
  //   name eps_inf 4x(delta_eps tau_s alpha) sigma_ionic density
  static TissueDatabase load(const std::filesystem::path& file);
  static TissueDatabase parse(const std::string& text, const std::string& origin);
  // The table compiled into the library (same format, same parser).
  static const TissueDatabase& builtin();

private:
  std::map<std::string, Entry> entries_;
};

} // namespace wearsim
