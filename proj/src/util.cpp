#include "denominal/util.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "denominal/error.hpp"

namespace denominal {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::NoTemplaticConsonant: return "NoTemplaticConsonant";
    case ErrorKind::NoPluralPattern: return "NoPluralPattern";
    case ErrorKind::MalformedInventory: return "MalformedInventory";
    case ErrorKind::MalformedAlphabet: return "MalformedAlphabet";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::MalformedReviewFile: return "MalformedReviewFile";
    case ErrorKind::InvalidDataPoint: return "InvalidDataPoint";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonNumericComponent: return "NonNumericComponent";
    case ErrorKind::EmptyFile: return "EmptyFile";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::AllZeros: return "AllZeros";
    case ErrorKind::EmptySample: return "EmptySample";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

bool is_statistical(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DegenerateInput:
    case ErrorKind::AllZeros:
    case ErrorKind::EmptySample:
    case ErrorKind::InsufficientData:
    case ErrorKind::TooFewPoints:
        return true;
    default:
        return false;
    }
}

namespace {
std::string decorate(ErrorKind kind, const std::string& message, std::size_t line) {
    std::string out = to_string(kind);
    if (line != 0) {
        out += " (line " + std::to_string(line) + ")";
    }
    if (!message.empty()) {
        out += ": " + message;
    }
    return out;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::size_t line)
    : std::runtime_error(decorate(kind, message, line)), kind_(kind), line_(line) {}

namespace util {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(text.substr(start));
            break;
        }
        out.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> split_ws(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
        out.emplace_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string_view trim(std::string_view text) {
    const char* ws = " \t\r\n";
    auto b = text.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = text.find_last_not_of(ws);
    return text.substr(b, e - b + 1);
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    auto content = read_file(path);
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < content.size()) {
        auto pos = content.find('\n', start);
        if (pos == std::string::npos) pos = content.size();
        std::string line = content.substr(start, pos - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        start = pos + 1;
    }
    return lines;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot write " + path.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw Error(ErrorKind::Io, "write failed for " + path.string());
    }
}

std::string format_double(double value, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, value);
    return buf;
}

}  // namespace util
}  // namespace denominal
