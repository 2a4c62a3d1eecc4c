#include "sdaas/csv.hpp"

#include "sdaas/errors.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sdaas::csv {

std::string format_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::vector<std::string> split_row(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            out.emplace_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

namespace {

std::string_view trim(std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
}

} // namespace

double parse_double(std::string_view field, std::string_view context) {
    std::string_view t = trim(field);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw ValidationError(std::string(context) + ": expected a number, got '" + std::string(field) + "'");
    }
    return value;
}

std::int64_t parse_int(std::string_view field, std::string_view context) {
    std::string_view t = trim(field);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw ValidationError(std::string(context) + ": expected an integer, got '" + std::string(field) + "'");
    }
    return value;
}

std::size_t Table::column(std::string_view name, std::string_view context) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw ValidationError(std::string(context) + ": missing column '" + std::string(name) + "'");
}

Table parse_table(std::string_view text, std::string_view context) {
    Table table;
    std::size_t pos = 0;
    bool first = true;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) {
            auto fields = split_row(line);
            if (first) {
                for (auto& f : fields) table.header.push_back(std::string(trim(f)));
                first = false;
            } else {
                if (fields.size() != table.header.size()) {
                    throw ValidationError(std::string(context) + ": row has " +
                                          std::to_string(fields.size()) + " fields, expected " +
                                          std::to_string(table.header.size()));
                }
                table.rows.push_back(std::move(fields));
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (first) throw ValidationError(std::string(context) + ": empty input, header row required");
    return table;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on '" + path.string() + "'");
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failure on '" + path.string() + "'");
}

} // namespace sdaas::csv
