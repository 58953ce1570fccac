#include "wearsim/dielectrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wearsim/constants.hpp"
#include "wearsim/errors.hpp"

namespace wearsim {

void ColeColeParams::validate() const {
  if (eps_inf < 1.0)
    throw InvalidArgumentError("Cole-Cole eps_inf must be >= 1");
  for (const auto& t : terms) {
    if (t.delta_eps < 0.0)
      throw InvalidArgumentError("Cole-Cole delta_eps must be >= 0");
    if (t.tau_s <= 0.0)
      throw InvalidArgumentError("Cole-Cole tau must be > 0");
    if (t.alpha < 0.0 || t.alpha >= 1.0)
      throw InvalidArgumentError("Cole-Cole alpha must be in [0, 1)");
  }
  if (sigma_ionic < 0.0)
    throw InvalidArgumentError("Cole-Cole sigma_ionic must be >= 0");
}

std::complex<double> evaluate_cole_cole(const ColeColeParams& params, double f_hz) {
  if (f_hz <= 0.0)
    throw InvalidArgumentError("evaluate_cole_cole: frequency must be > 0");
  const double w = 2.0 * kPi * f_hz;
  std::complex<double> eps(params.eps_inf, 0.0);
  for (const auto& t : params.terms) {
    if (t.delta_eps == 0.0)
      continue;
    // principal branch of (j*w*tau)^(1-alpha)
    const std::complex<double> jwt(0.0, w * t.tau_s);
    eps += t.delta_eps / (1.0 + std::pow(jwt, 1.0 - t.alpha));
  }
  eps += params.sigma_ionic / (std::complex<double>(0.0, w * kVacuumPermittivity));
  return eps;
}

double effective_conductivity(std::complex<double> eps_rel, double f_hz) {
  if (f_hz <= 0.0)
    throw InvalidArgumentError("effective_conductivity: frequency must be > 0");
  return 2.0 * kPi * f_hz * kVacuumPermittivity * (-eps_rel.imag());
}

std::pair<double, double> MaterialSpec::eps_sigma_at(double f_hz) const {
  switch (kind) {
  case MaterialKind::Air:
    return {1.0, 0.0};
  case MaterialKind::DispersiveTissue: {
    const auto eps = evaluate_cole_cole(cole, f_hz);
    return {eps.real(), effective_conductivity(eps, f_hz)};
  }
  case MaterialKind::ConstantDielectric:
    return {eps_r, sigma};
  case MaterialKind::Conductor:
    return {1.0, sigma};
  case MaterialKind::PerfectConductor:
    return {1.0, 0.0}; // handled as edge clamps, never as a medium
  }
  return {1.0, 0.0};
}

MaterialSpec MaterialSpec::air() {
  MaterialSpec m;
  m.name = "air";
  m.kind = MaterialKind::Air;
  m.density = kAirDensity;
  return m;
}

MaterialSpec MaterialSpec::perfect_conductor(std::string name) {
  MaterialSpec m;
  m.name = std::move(name);
  m.kind = MaterialKind::PerfectConductor;
  m.density = 8490.0;
  return m;
}

MaterialSpec MaterialSpec::conductor(std::string name, double sigma_s_per_m, double density) {
  if (sigma_s_per_m < 0.0)
    throw InvalidArgumentError("conductor sigma must be >= 0");
  MaterialSpec m;
  m.name = std::move(name);
  m.kind = MaterialKind::Conductor;
  m.sigma = sigma_s_per_m;
  m.density = density;
  return m;
}

MaterialSpec MaterialSpec::tissue(std::string name, const ColeColeParams& cole, double density) {
  cole.validate();
  if (density <= 0.0)
    throw InvalidArgumentError("tissue density must be > 0");
  MaterialSpec m;
  m.name = std::move(name);
  m.kind = MaterialKind::DispersiveTissue;
  m.cole = cole;
  m.density = density;
  return m;
}

MaterialSpec constant_from_tand(std::string name, double eps_r, double tan_delta,
                                double f_ref_hz, double density) {
  if (eps_r < 1.0)
    throw InvalidArgumentError("constant_from_tand: eps_r must be >= 1");
  if (tan_delta < 0.0)
    throw InvalidArgumentError("constant_from_tand: tan_delta must be >= 0");
  if (f_ref_hz <= 0.0)
    throw InvalidArgumentError("constant_from_tand: f_ref must be > 0");
  MaterialSpec m;
  m.name = std::move(name);
  m.kind = MaterialKind::ConstantDielectric;
  m.eps_r = eps_r;
  m.sigma = 2.0 * kPi * f_ref_hz * kVacuumPermittivity * eps_r * tan_delta;
  m.density = density;
  return m;
}

namespace {

// Common shorthand accepted for database lookups.
const std::map<std::string, std::string>& tissue_aliases() {
  static const std::map<std::string, std::string> aliases = {
      {"skin", "skin_dry"},
      {"bone", "bone_cortical"},
      {"lung", "lung_inflated"},
      {"grey_matter", "brain_grey"},
      {"white_matter", "brain_white"},
  };
  return aliases;
}

std::string resolve_name(const std::map<std::string, TissueDatabase::Entry>& entries,
                         const std::string& name) {
  if (entries.count(name))
    return name;
  auto it = tissue_aliases().find(name);
  if (it != tissue_aliases().end() && entries.count(it->second))
    return it->second;
  return {};
}

} // namespace

const TissueDatabase::Entry& TissueDatabase::entry(const std::string& name) const {
  const std::string resolved = resolve_name(entries_, name);
  if (!resolved.empty())
    return entries_.at(resolved);

  // Suggest entries sharing the first few letters.
  std::string suggestions;
  for (const auto& [known, _] : entries_) {
    if (known.rfind(name.substr(0, std::min<std::size_t>(3, name.size())), 0) == 0) {
      if (!suggestions.empty())
        suggestions += ", ";
      suggestions += known;
    }
  }
  std::string msg = "unknown tissue '" + name + "'";
  if (!suggestions.empty())
    msg += " (did you mean: " + suggestions + "?)";
  throw DataError(msg);
}

MaterialSpec TissueDatabase::material(const std::string& name) const {
  const std::string resolved = resolve_name(entries_, name);
  const Entry& e = entry(name);
  return MaterialSpec::tissue(resolved.empty() ? name : resolved, e.cole, e.density);
}

std::vector<std::string> TissueDatabase::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [name, _] : entries_)
    out.push_back(name);
  return out;
}

TissueDatabase TissueDatabase::parse(const std::string& text, const std::string& origin) {
  TissueDatabase db;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name))
      continue; // blank or comment-only line
    Entry e;
    ls >> e.cole.eps_inf;
    for (auto& t : e.cole.terms)
      ls >> t.delta_eps >> t.tau_s >> t.alpha;
    ls >> e.cole.sigma_ionic >> e.density;
    if (ls.fail())
      throw ParseError(origin, line_no,
                       "expected: name eps_inf 4x(delta_eps tau alpha) sigma_ionic density");
    try {
      e.cole.validate();
      if (e.density <= 0.0)
        throw InvalidArgumentError("density must be > 0");
    } catch (const Error& err) {
      throw ParseError(origin, line_no, std::string(err.what()) + " (tissue '" + name + "')");
    }
    db.entries_[name] = e;
  }
  return db;
}

TissueDatabase TissueDatabase::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw DataError("cannot open tissue database file: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), file.string());
}

// Generated from core/data/tissues.txt at configure time.
extern const char* kBuiltinTissueTable;

const TissueDatabase& TissueDatabase::builtin() {
  static const TissueDatabase db = parse(kBuiltinTissueTable, "<builtin tissue table>");
  return db;
}

} // namespace wearsim
