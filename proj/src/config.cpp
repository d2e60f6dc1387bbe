#include "oscdyn/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace oscdyn {
namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string strip_comment(const std::string& s) {
  const size_t pos = s.find('#');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' &&
        c != '-')
      return false;
  return true;
}

}  // namespace

ConfigDoc ConfigDoc::parse_string(const std::string& text) {
  ConfigDoc doc;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  bool seen_version = false;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("unterminated section header", lineno);
      section = trim(line.substr(1, line.size() - 2));
      if (!valid_name(section))
        throw ConfigError("bad section name '" + section + "'", lineno);
      if (!seen_version)
        throw ConfigError("version must come before the first section", lineno);
      if (doc.sections_.count(section))
        throw ConfigError("duplicate section [" + section + "]", lineno);
      doc.order_.push_back(section);
      doc.sections_[section];  // create, may stay empty
      continue;
    }

    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected key = value", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!valid_name(key)) throw ConfigError("bad key '" + key + "'", lineno);
    if (value.empty()) throw ConfigError("empty value for '" + key + "'", lineno);

    if (section.empty()) {
      if (key != "version")
        throw ConfigError("only 'version' may appear before sections", lineno);
      if (seen_version) throw ConfigError("duplicate version", lineno);
      try {
        size_t used = 0;
        doc.version_ = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ConfigError("version must be an integer", lineno);
      }
      if (doc.version_ != 1)
        throw ConfigError("unsupported version " + value, lineno);
      seen_version = true;
      continue;
    }

    auto& entries = doc.sections_[section];
    if (entries.count(key))
      throw ConfigError("duplicate key '" + key + "' in [" + section + "]",
                        lineno);
    entries[key] = Entry{value, lineno, false};
  }
  if (!seen_version) throw ConfigError("missing 'version = 1' line");
  return doc;
}

ConfigDoc ConfigDoc::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

bool ConfigDoc::has_section(const std::string& name) const {
  return sections_.count(name) != 0;
}

std::vector<std::string> ConfigDoc::section_names() const { return order_; }

const ConfigDoc::Entry* ConfigDoc::find(const std::string& section,
                                        const std::string& key) const {
  const auto sit = sections_.find(section);
  if (sit == sections_.end()) return nullptr;
  const auto kit = sit->second.find(key);
  if (kit == sit->second.end()) return nullptr;
  kit->second.used = true;
  return &kit->second;
}

bool ConfigDoc::has_key(const std::string& section,
                        const std::string& key) const {
  return find(section, key) != nullptr;
}

std::string ConfigDoc::get_string(const std::string& section,
                                  const std::string& key,
                                  const std::string& fallback) const {
  const Entry* e = find(section, key);
  return e ? e->value : fallback;
}

std::string ConfigDoc::require_string(const std::string& section,
                                      const std::string& key) const {
  const Entry* e = find(section, key);
  if (!e)
    throw ConfigError("missing required key '" + key + "' in [" + section +
                      "]");
  return e->value;
}

double ConfigDoc::get_number(const std::string& section, const std::string& key,
                             double fallback) const {
  const Entry* e = find(section, key);
  if (!e) return fallback;
  try {
    size_t used = 0;
    const double v = std::stod(e->value, &used);
    if (used != e->value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' is not a number: " + e->value,
                      e->line);
  }
}

double ConfigDoc::require_number(const std::string& section,
                                 const std::string& key) const {
  if (!has_key(section, key))
    throw ConfigError("missing required key '" + key + "' in [" + section +
                      "]");
  return get_number(section, key, 0.0);
}

int ConfigDoc::get_int(const std::string& section, const std::string& key,
                       int fallback) const {
  const Entry* e = find(section, key);
  if (!e) return fallback;
  try {
    size_t used = 0;
    const int v = std::stoi(e->value, &used);
    if (used != e->value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' is not an integer: " + e->value,
                      e->line);
  }
}

void ConfigDoc::reject_unused() const {
  for (const auto& [section, entries] : sections_)
    for (const auto& [key, entry] : entries)
      if (!entry.used)
        throw ConfigError("unknown key '" + key + "' in [" + section + "]",
                          entry.line);
}

void ConfigDoc::mark_section_used(const std::string& section) const {
  const auto sit = sections_.find(section);
  if (sit == sections_.end()) return;
  for (const auto& [key, entry] : sit->second) entry.used = true;
}

}  // namespace oscdyn
