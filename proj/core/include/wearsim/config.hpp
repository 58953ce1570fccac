#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace wearsim {

// Sectioned key-value configuration text with explicit unit suffixes:
//
//   [grid]
//   dx = 0.75 mm          # comment
//   padding = 14
//
//   [phantom]
//   layer = skin 2 mm     # keys may repeat
//
// Every key must be consumed by the reader; unknown keys are hard errors so
// a typo cannot silently fall back to a default.
class Config {
public:
  struct Item {
    std::string value;
    int line = 0;
    mutable bool consumed = false;
  };

  class Section {
  public:
    Section() = default;
    Section(std::string name, std::string origin) : name_(std::move(name)), origin_(std::move(origin)) {}

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_number(const std::string& key) const;                 // dimensionless
    double get_number(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    double get_length_m(const std::string& key) const;               // mm/cm/m/um suffix required
    double get_length_m(const std::string& key, double fallback) const;
    double get_frequency_hz(const std::string& key) const;           // Hz/kHz/MHz/GHz
    double get_frequency_hz(const std::string& key, double fallback) const;
    double get_power_w(const std::string& key) const;                // W/mW/uW
    double get_power_w(const std::string& key, double fallback) const;
    double get_db(const std::string& key, double fallback) const;    // returns the dB figure
    std::vector<double> get_frequency_list_hz(const std::string& key) const;
    // All values for a repeated key, in file order.
    std::vector<std::string> get_all(const std::string& key) const;

    const std::string& name() const { return name_; }
    // Throws ParseError naming every unconsumed key.
    void finish() const;

  private:
    friend class Config;
    const Item& fetch(const std::string& key) const;
    const Item* try_fetch(const std::string& key) const;
    [[noreturn]] void fail(const std::string& key, const std::string& msg, int line) const;

    std::string name_;
    std::string origin_;
    std::vector<std::pair<std::string, Item>> items_;
  };

  static Config load(const std::filesystem::path& file);
  static Config parse(const std::string& text, const std::string& origin);

  bool has_section(const std::string& name) const;
  // Missing sections come back empty (so optional sections read cleanly).
  const Section& section(const std::string& name) const;
  std::vector<std::string> section_names() const; // file order, deduplicated

  // Throws if any key in any section was never consumed.
  void finish() const;
  const std::string& origin() const { return origin_; }

private:
  std::string origin_;
  std::vector<std::string> order_;
  std::map<std::string, Section> sections_;
};

// Quantity parsing shared with CLI flags ("2.45 GHz", "0.75mm", "100 mW").
double parse_length_m(const std::string& text);
double parse_frequency_hz(const std::string& text);
double parse_power_w(const std::string& text);

} // namespace wearsim
