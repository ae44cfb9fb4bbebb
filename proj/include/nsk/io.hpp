// JSON, CSV and Markdown output of classification records, and the result cache.
#pragma once

#include "nsk/classifier.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace nsk {

extern const char* const kVersion;

nlohmann::json matrix_json(const IntMatrix& m);
nlohmann::json classes_json(const std::vector<Vec>& v, const Lattice& L);
// Certificate bytes are included only when with_bytes is set (cache files).
nlohmann::json to_json(const LatticeClassRecord& r, bool with_bytes = false);
LatticeClassRecord record_from_json(const nlohmann::json& j);

std::string records_csv(const std::vector<LatticeClassRecord>& recs);
std::string records_markdown(const std::vector<LatticeClassRecord>& recs);

std::string to_hex(const std::string& bytes);
std::string from_hex(const std::string& hex);

// Directory from NSK_CACHE, else XDG_CACHE_HOME/nsk, else ~/.cache/nsk.
std::string cache_directory();
std::optional<std::vector<LatticeClassRecord>> load_cached_classification(int degree, Scope scope);
void save_cached_classification(int degree, Scope scope, const std::vector<LatticeClassRecord>& recs);

}  // namespace nsk
