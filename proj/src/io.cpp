#include "agiven/io.hpp"

#include <fstream>

#include "agiven/errors.hpp"
#include "agiven/units.hpp"

namespace agiven::io {

std::string render_cell(const Row& row, const std::string& key) {
    const auto& v = row.at(key);
    if (v.is_number_float()) return units::format_double(v.get<double>());
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void write_csv(const std::string& path, const std::string& meta, const std::vector<Row>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write output file: " + path);
    out << "# " << meta << "\n";
    if (rows.empty()) return;
    bool first = true;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
        if (!first) out << ",";
        out << it.key();
        first = false;
    }
    out << "\n";
    for (const auto& row : rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!first) out << ",";
            out << render_cell(row, it.key());
            first = false;
        }
        out << "\n";
    }
    if (!out) throw IoError("failed while writing: " + path);
}

void write_json(const std::string& path, const std::string& meta, const std::vector<Row>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write output file: " + path);
    nlohmann::ordered_json doc;
    doc["meta"] = meta;
    doc["rows"] = rows;
    out << doc.dump(2) << "\n";
    if (!out) throw IoError("failed while writing: " + path);
}

}  // namespace agiven::io
