#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscdyn {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0
                               ? "line " + std::to_string(line) + ": " + what
                               : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// INI-style scenario document:
//
//   version = 1            # required, before any section
//   [section] / [section.sub]
//   key = value            # '#' starts a comment
//
// Parsing keeps every key's source line so schema errors can point at it.
// Values stay strings here; typed access lives in the section view.
class ConfigDoc {
 public:
  struct Entry {
    std::string value;
    int line = 0;
    mutable bool used = false;  // consumed-key tracking for unknown-key errors
  };

  static ConfigDoc parse_string(const std::string& text);
  static ConfigDoc parse_file(const std::string& path);

  int version() const { return version_; }
  bool has_section(const std::string& name) const;
  std::vector<std::string> section_names() const;  // in file order

  // Typed access; `require_*` throws ConfigError naming the key.
  bool has_key(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  std::string require_string(const std::string& section,
                             const std::string& key) const;
  double get_number(const std::string& section, const std::string& key,
                    double fallback) const;
  double require_number(const std::string& section,
                        const std::string& key) const;
  int get_int(const std::string& section, const std::string& key,
              int fallback) const;

  // After a loader consumed everything it understands, any untouched key is a
  // hard error pointing at its line.
  void reject_unused() const;
  void mark_section_used(const std::string& section) const;

 private:
  const Entry* find(const std::string& section, const std::string& key) const;

  int version_ = 0;
  std::vector<std::string> order_;
  std::map<std::string, std::map<std::string, Entry>> sections_;
};

}  // namespace oscdyn
