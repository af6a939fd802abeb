#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace agiven::io {

using Row = nlohmann::ordered_json;

// CSV with one '#'-prefixed metadata line, a header row, then data rows.
// Every double is rendered with the shortest round-trip form, so identical
// inputs give byte-identical files.
void write_csv(const std::string& path, const std::string& meta, const std::vector<Row>& rows);

// JSON mirror of the same records.
void write_json(const std::string& path, const std::string& meta, const std::vector<Row>& rows);

std::string render_cell(const Row& row, const std::string& key);

}  // namespace agiven::io
