#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sdaas::csv {

// Fixed 6-decimal formatting used by every CSV writer (bit-stable output).
std::string format_fixed(double value);

std::vector<std::string> split_row(std::string_view line);

// Strict numeric parsers: the whole (trimmed) field must be consumed.
double parse_double(std::string_view field, std::string_view context);
std::int64_t parse_int(std::string_view field, std::string_view context);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a required column; throws ValidationError when absent.
    std::size_t column(std::string_view name, std::string_view context) const;
};

// Parses CSV text with a header row. Blank trailing lines are ignored.
Table parse_table(std::string_view text, std::string_view context);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace sdaas::csv
