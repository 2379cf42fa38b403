#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "specht/bigint.hpp"
#include "specht/characters.hpp"
#include "specht/partition.hpp"

namespace specht {

inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("SPECHT_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::path(".specht-cache");
}

inline std::filesystem::path table_cache_path(const std::filesystem::path& dir,
                                              int n) {
  return dir / ("s" + std::to_string(n) + ".json");
}

// Serializes a table to versioned JSON.  Values are decimal strings so no
// magnitude is ever lost.
inline nlohmann::ordered_json table_to_json(const CharacterTable& t) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["n"] = t.n;
  auto parts_list = [](const std::vector<Partition>& ps) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Partition& p : ps) arr.push_back(p.parts());
    return arr;
  };
  j["labels"] = parts_list(t.labels);
  j["classes"] = parts_list(t.classes);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.values) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Int& v : row) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  j["values"] = std::move(rows);
  return j;
}

// Parses and fully validates a serialized table: schema version, label and
// class lists matching the canonical enumeration, and row orthogonality of
// the values.  Throws std::runtime_error when anything is off.
inline CharacterTable table_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("schema_version") ||
      !j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != 1)
    throw std::runtime_error("table: unsupported schema");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::runtime_error("table: missing group size");
  CharacterTable t;
  t.n = j["n"].get<int>();
  if (t.n < 0) throw std::runtime_error("table: negative group size");
  auto read_parts = [](const nlohmann::json& arr) {
    std::vector<Partition> out;
    if (!arr.is_array()) throw std::runtime_error("table: bad partition list");
    for (const auto& item : arr) {
      if (!item.is_array())
        throw std::runtime_error("table: bad partition entry");
      std::vector<int> parts;
      for (const auto& x : item) {
        if (!x.is_number_integer())
          throw std::runtime_error("table: bad partition part");
        parts.push_back(x.get<int>());
      }
      out.emplace_back(std::move(parts));
    }
    return out;
  };
  if (!j.contains("labels") || !j.contains("classes") ||
      !j.contains("values"))
    throw std::runtime_error("table: missing fields");
  try {
    t.labels = read_parts(j["labels"]);
    t.classes = read_parts(j["classes"]);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("table: ") + e.what());
  }
  if (t.labels != partitions_of(t.n) || t.classes != partitions_of(t.n))
    throw std::runtime_error("table: labels out of order");
  const auto& rows = j["values"];
  if (!rows.is_array() || rows.size() != t.labels.size())
    throw std::runtime_error("table: wrong row count");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != t.classes.size())
      throw std::runtime_error("table: wrong column count");
    std::vector<Int> vals;
    vals.reserve(row.size());
    for (const auto& cell : row) {
      if (!cell.is_string())
        throw std::runtime_error("table: values must be decimal strings");
      try {
        vals.emplace_back(cell.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw std::runtime_error("table: malformed value");
      }
    }
    t.values.push_back(std::move(vals));
  }
  if (!rows_orthogonal(t))
    throw std::runtime_error("table: row orthogonality failed");
  return t;
}

// Writes the table under the cache directory, going through a temporary
// file and a rename so readers never observe a partial file.
inline std::filesystem::path save_table(const CharacterTable& t,
                                        const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::filesystem::path path = table_cache_path(dir, t.n);
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out)
      throw std::runtime_error("save_table: cannot write " + tmp.string());
    out << table_to_json(t).dump(1) << "\n";
    if (!out)
      throw std::runtime_error("save_table: write failed " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
  return path;
}

// Loads a previously saved table.  Returns nothing when the file is absent
// or fails any validation step, so callers can silently recompute.
inline std::optional<CharacterTable> load_table(
    const std::filesystem::path& dir, int n) {
  std::filesystem::path path = table_cache_path(dir, n);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    return table_from_json(j);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace specht
