#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace denominal::util {

std::vector<std::string> split(std::string_view text, char sep);
std::vector<std::string> split_ws(std::string_view text);
std::string_view trim(std::string_view text);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Reads a whole file, throwing Error(Io) when it cannot be opened.
std::string read_file(const std::filesystem::path& path);
std::vector<std::string> read_lines(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// printf-style "%.*g" formatting, locale independent.
std::string format_double(double value, int significant = 12);

}  // namespace denominal::util
