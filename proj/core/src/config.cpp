#include "wearsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wearsim/errors.hpp"

namespace wearsim {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

struct Unit {
  const char* suffix;
  double scale;
};

double parse_with_units(const std::string& text, const Unit* units, std::size_t n_units,
                        const char* what, bool allow_bare) {
  const std::string s = trim(text);
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw InvalidArgumentError(std::string("cannot parse ") + what + " from '" + text + "'");
  }
  const std::string suffix = trim(s.substr(pos));
  if (suffix.empty()) {
    if (allow_bare)
      return value;
    throw InvalidArgumentError(std::string(what) + " '" + text + "' is missing a unit suffix");
  }
  for (std::size_t i = 0; i < n_units; ++i) {
    if (suffix == units[i].suffix)
      return value * units[i].scale;
  }
  throw InvalidArgumentError(std::string("unknown ") + what + " unit '" + suffix + "' in '" + text + "'");
}

const Unit kLengthUnits[] = {{"mm", 1e-3}, {"cm", 1e-2}, {"m", 1.0}, {"um", 1e-6}};
const Unit kFrequencyUnits[] = {{"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}};
const Unit kPowerUnits[] = {{"W", 1.0}, {"mW", 1e-3}, {"uW", 1e-6}};
const Unit kDbUnits[] = {{"dB", 1.0}};

} // namespace

double parse_length_m(const std::string& text) {
  return parse_with_units(text, kLengthUnits, std::size(kLengthUnits), "length", false);
}
double parse_frequency_hz(const std::string& text) {
  return parse_with_units(text, kFrequencyUnits, std::size(kFrequencyUnits), "frequency", false);
}
double parse_power_w(const std::string& text) {
  return parse_with_units(text, kPowerUnits, std::size(kPowerUnits), "power", false);
}

bool Config::Section::has(const std::string& key) const {
  return try_fetch(key) != nullptr;
}

const Config::Item* Config::Section::try_fetch(const std::string& key) const {
  for (const auto& [k, item] : items_) {
    if (k == key) {
      item.consumed = true;
      return &item;
    }
  }
  return nullptr;
}

const Config::Item& Config::Section::fetch(const std::string& key) const {
  const Item* item = try_fetch(key);
  if (!item)
    throw ParseError(origin_, 0, "missing required key '" + key + "' in section [" + name_ + "]");
  return *item;
}

void Config::Section::fail(const std::string& key, const std::string& msg, int line) const {
  throw ParseError(origin_, line, "key '" + key + "' in [" + name_ + "]: " + msg);
}

std::string Config::Section::get_string(const std::string& key) const {
  return fetch(key).value;
}

std::string Config::Section::get_string(const std::string& key, const std::string& fallback) const {
  const Item* item = try_fetch(key);
  return item ? item->value : fallback;
}

double Config::Section::get_number(const std::string& key) const {
  const Item& item = fetch(key);
  try {
    return parse_with_units(item.value, nullptr, 0, "number", true);
  } catch (const Error& e) {
    fail(key, e.what(), item.line);
  }
}

double Config::Section::get_number(const std::string& key, double fallback) const {
  return has(key) ? get_number(key) : fallback;
}

int Config::Section::get_int(const std::string& key) const {
  const Item& item = fetch(key);
  int value = 0;
  const std::string s = trim(item.value);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || p != s.data() + s.size())
    fail(key, "expected an integer, got '" + item.value + "'", item.line);
  return value;
}

int Config::Section::get_int(const std::string& key, int fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool Config::Section::get_bool(const std::string& key, bool fallback) const {
  const Item* item = try_fetch(key);
  if (!item)
    return fallback;
  const std::string v = trim(item->value);
  if (v == "true" || v == "on" || v == "yes" || v == "1")
    return true;
  if (v == "false" || v == "off" || v == "no" || v == "0")
    return false;
  fail(key, "expected a boolean, got '" + item->value + "'", item->line);
}

#define WEARSIM_UNIT_GETTER(method, parser)                                        \
  double Config::Section::method(const std::string& key) const {                  \
    const Item& item = fetch(key);                                                \
    try {                                                                         \
      return parser(item.value);                                                  \
    } catch (const Error& e) {                                                    \
      fail(key, e.what(), item.line);                                             \
    }                                                                             \
  }                                                                               \
  double Config::Section::method(const std::string& key, double fallback) const { \
    return has(key) ? method(key) : fallback;                                     \
  }

WEARSIM_UNIT_GETTER(get_length_m, parse_length_m)
WEARSIM_UNIT_GETTER(get_frequency_hz, parse_frequency_hz)
WEARSIM_UNIT_GETTER(get_power_w, parse_power_w)
#undef WEARSIM_UNIT_GETTER

double Config::Section::get_db(const std::string& key, double fallback) const {
  const Item* item = try_fetch(key);
  if (!item)
    return fallback;
  try {
    return parse_with_units(item->value, kDbUnits, std::size(kDbUnits), "level", true);
  } catch (const Error& e) {
    fail(key, e.what(), item->line);
  }
}

std::vector<double> Config::Section::get_frequency_list_hz(const std::string& key) const {
  const Item& item = fetch(key);
  std::vector<double> out;
  std::stringstream ss(item.value);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(parse_frequency_hz(part));
    } catch (const Error& e) {
      fail(key, e.what(), item.line);
    }
  }
  if (out.empty())
    fail(key, "expected a comma-separated frequency list", item.line);
  return out;
}

std::vector<std::string> Config::Section::get_all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, item] : items_) {
    if (k == key) {
      item.consumed = true;
      out.push_back(item.value);
    }
  }
  return out;
}

void Config::Section::finish() const {
  std::string unknown;
  int first_line = 0;
  for (const auto& [k, item] : items_) {
    if (!item.consumed) {
      if (!unknown.empty())
        unknown += ", ";
      else
        first_line = item.line;
      unknown += "'" + k + "'";
    }
  }
  if (!unknown.empty())
    throw ParseError(origin_, first_line,
                     "unknown key(s) in section [" + name_ + "]: " + unknown);
}

Config Config::parse(const std::string& text, const std::string& origin) {
  Config cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::string current;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError(origin, line_no, "malformed section header: " + line);
      current = trim(line.substr(1, line.size() - 2));
      if (current.empty())
        throw ParseError(origin, line_no, "empty section name");
      if (!cfg.sections_.count(current)) {
        cfg.sections_.emplace(current, Section(current, origin));
        cfg.order_.push_back(current);
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(origin, line_no, "expected 'key = value', got: " + line);
    if (current.empty())
      throw ParseError(origin, line_no, "key outside of any [section]");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ParseError(origin, line_no, "empty key");
    cfg.sections_.at(current).items_.emplace_back(key, Item{value, line_no, false});
  }
  return cfg;
}

Config Config::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw DataError("cannot open config file: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), file.string());
}

bool Config::has_section(const std::string& name) const {
  return sections_.count(name) != 0;
}

const Config::Section& Config::section(const std::string& name) const {
  static const Section empty;
  auto it = sections_.find(name);
  return it == sections_.end() ? empty : it->second;
}

std::vector<std::string> Config::section_names() const {
  return order_;
}

void Config::finish() const {
  for (const auto& name : order_)
    sections_.at(name).finish();
}

} // namespace wearsim
