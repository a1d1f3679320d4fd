#include "franel/cache.hpp"

#include <fstream>

#include <json.hpp>

#include "franel/sequences.hpp"

namespace franel {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kFormatTag = "franel-cache-v1";

}  // namespace

bool cache_load(const std::string& path, std::vector<std::string>& warnings) {
  std::ifstream in(path);
  if (!in) {
    warnings.push_back("cache: cannot read " + path);
    return false;
  }
  ordered_json doc = ordered_json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object() || doc.value("format", "") != kFormatTag) {
    warnings.push_back("cache: " + path + " is not a " + kFormatTag + " file; ignored");
    return false;
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    warnings.push_back("cache: " + path + " has no entries array; ignored");
    return false;
  }
  for (const auto& entry : doc["entries"]) {
    if (!entry.is_object() || !entry.contains("family") || !entry.contains("values")
        || !entry["values"].is_array()) {
      warnings.push_back("cache: skipping malformed entry");
      continue;
    }
    auto family = family_from_name(entry["family"].get<std::string>());
    if (!family) {
      warnings.push_back("cache: skipping entry with unknown family "
                         + entry["family"].get<std::string>());
      continue;
    }
    FamilyKey key{*family, entry.value("m", 0L), entry.value("r", 0L)};
    std::vector<Integer> values;
    values.reserve(entry["values"].size());
    bool parsed = true;
    for (const auto& text : entry["values"]) {
      if (!text.is_string()) {
        parsed = false;
        break;
      }
      try {
        values.emplace_back(text.get<std::string>());
      } catch (const std::runtime_error&) {
        parsed = false;
        break;
      }
    }
    if (!parsed) {
      warnings.push_back("cache: skipping " + family_name(key.family)
                         + " entry with non-decimal values");
      continue;
    }
    if (!store_seed(key, values)) {
      warnings.push_back("cache: " + family_name(key.family) + " (m=" + std::to_string(key.m)
                         + ", r=" + std::to_string(key.r)
                         + ") failed re-validation; entry discarded");
    }
  }
  return true;
}

bool cache_save(const std::string& path, std::string& error) {
  ordered_json doc;
  doc["format"] = kFormatTag;
  ordered_json entries = ordered_json::array();
  for (const auto& [key, values] : store_snapshot()) {
    ordered_json entry;
    entry["family"] = family_name(key.family);
    entry["m"] = key.m;
    entry["r"] = key.r;
    ordered_json list = ordered_json::array();
    for (const Integer& value : values) {
      list.push_back(value.str());
    }
    entry["values"] = std::move(list);
    entries.push_back(std::move(entry));
  }
  doc["entries"] = std::move(entries);

  std::ofstream out(path);
  if (!out) {
    error = "cache: cannot write " + path;
    return false;
  }
  out << doc.dump(2) << "\n";
  out.flush();
  if (!out) {
    error = "cache: write to " + path + " failed";
    return false;
  }
  return true;
}

}  // namespace franel
