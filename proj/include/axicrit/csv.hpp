#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "axicrit/diagnostics.hpp"
#include "axicrit/errors.hpp"

namespace axicrit {

/// Streaming CSV writer for diagnostics rows. Values are printed with 17
/// significant digits so they round-trip 64-bit floats exactly; each row is
/// flushed so a blow-up still leaves the partial series on disk.
class DiagnosticsCsvWriter {
public:
    explicit DiagnosticsCsvWriter(const std::string& path) : out_(path) {
        if (!out_) throw ConfigError("csv: cannot open '" + path + "' for writing");
        const auto& names = DiagnosticsRow::column_names();
        for (std::size_t i = 0; i < names.size(); ++i)
            out_ << (i ? "," : "") << names[i];
        out_ << "\n";
        out_.flush();
    }

    void write(const DiagnosticsRow& row) {
        const auto vals = row.values();
        char buf[64];
        for (std::size_t i = 0; i < vals.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", vals[i]);
            out_ << (i ? "," : "") << buf;
        }
        out_ << "\n";
        out_.flush();
    }

private:
    std::ofstream out_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

inline CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("csv: cannot open '" + path + "'");
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("csv: empty file '" + path + "'");
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) t.header.push_back(cell);
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != t.header.size())
            throw ConfigError("csv: ragged row in '" + path + "'");
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace axicrit
