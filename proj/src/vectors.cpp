#include "denominal/vectors.hpp"

#include <charconv>
#include <cmath>

#include "denominal/error.hpp"
#include "denominal/util.hpp"

namespace denominal {

std::optional<VectorFormat> parse_vector_format(std::string_view text) {
    if (text == "auto") return VectorFormat::Auto;
    if (text == "word2vec" || text == "word2vec_text" || text == "fasttext") return VectorFormat::Word2VecText;
    if (text == "glove" || text == "glove_text") return VectorFormat::GloveText;
    return std::nullopt;
}

EmbeddingSpace::EmbeddingSpace(std::size_t dim, std::string label) : dim_(dim), label_(std::move(label)) {
    if (dim_ == 0) throw Error(ErrorKind::DimensionMismatch, "dimension must be positive");
}

void EmbeddingSpace::add(const std::string& token, std::span<const double> values) {
    if (values.size() != dim_) {
        throw Error(ErrorKind::DimensionMismatch,
                    token + " has " + std::to_string(values.size()) + " components, expected " + std::to_string(dim_));
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw Error(ErrorKind::NonNumericComponent, token + " has a non-finite component");
    }
    if (auto it = exact_.find(token); it != exact_.end()) {
        std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(it->second * dim_));
        ++duplicates_;
        return;
    }
    const std::size_t index = tokens_.size();
    tokens_.push_back(token);
    data_.insert(data_.end(), values.begin(), values.end());
    exact_.emplace(token, index);
    normalized_[key(token)] = index;
}

std::string EmbeddingSpace::key(std::string_view token) const {
    return normalizer_ ? normalizer_->normalize(token) : std::string(token);
}

void EmbeddingSpace::reindex() {
    normalized_.clear();
    for (std::size_t i = 0; i < tokens_.size(); ++i) normalized_[key(tokens_[i])] = i;
}

void EmbeddingSpace::set_normalizer(Alphabet alphabet) {
    normalizer_ = std::move(alphabet);
    reindex();
}

std::optional<std::span<const double>> EmbeddingSpace::lookup(std::string_view token) const {
    if (auto it = exact_.find(token); it != exact_.end()) return row(it->second);
    if (auto it = normalized_.find(key(token)); it != normalized_.end()) return row(it->second);
    return std::nullopt;
}

std::string EmbeddingSpace::to_word2vec_text() const {
    std::string out = std::to_string(size()) + " " + std::to_string(dim_) + "\n";
    for (std::size_t i = 0; i < size(); ++i) {
        out += tokens_[i];
        for (double v : row(i)) {
            out += ' ';
            out += util::format_double(v, 9);
        }
        out += '\n';
    }
    return out;
}

void EmbeddingSpace::save(const std::filesystem::path& path) const { util::write_file(path, to_word2vec_text()); }

namespace {

bool parse_double(std::string_view text, double& out) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

bool parse_size(std::string_view text, std::size_t& out) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && !text.empty();
}

}  // namespace

EmbeddingSpace parse_vectors(std::string_view text, VectorFormat format) {
    auto lines = util::split(text, '\n');
    std::size_t first = 0;
    while (first < lines.size() && util::trim(lines[first]).empty()) ++first;
    if (first == lines.size()) throw Error(ErrorKind::EmptyFile, "no vectors");

    std::size_t declared_rows = 0;
    std::size_t dim = 0;
    bool header = false;
    auto head = util::split_ws(lines[first]);
    std::size_t rows_n = 0, dim_n = 0;
    const bool looks_like_header = head.size() == 2 && parse_size(head[0], rows_n) && parse_size(head[1], dim_n);
    if (format == VectorFormat::Word2VecText || (format == VectorFormat::Auto && looks_like_header)) {
        if (!looks_like_header) throw Error(ErrorKind::DimensionMismatch, "expected 'count dim' header", first + 1);
        header = true;
        declared_rows = rows_n;
        dim = dim_n;
        if (dim == 0) throw Error(ErrorKind::DimensionMismatch, "header declares dimension 0", first + 1);
        ++first;
    }

    EmbeddingSpace space;
    std::vector<double> values;
    std::size_t rows = 0;
    for (std::size_t n = first; n < lines.size(); ++n) {
        auto fields = util::split_ws(lines[n]);
        if (fields.empty()) continue;
        const std::size_t lineno = n + 1;
        if (dim == 0) dim = fields.size() - 1;
        if (dim == 0) throw Error(ErrorKind::DimensionMismatch, "row has no components", lineno);
        if (space.dim() == 0) space = EmbeddingSpace(dim);
        if (fields.size() != dim + 1) {
            throw Error(ErrorKind::DimensionMismatch,
                        "expected " + std::to_string(dim) + " components, got " + std::to_string(fields.size() - 1),
                        lineno);
        }
        values.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            if (!parse_double(fields[j + 1], values[j]) || !std::isfinite(values[j])) {
                throw Error(ErrorKind::NonNumericComponent, "bad component '" + fields[j + 1] + "'", lineno);
            }
        }
        space.add(fields[0], values);
        ++rows;
    }
    if (rows == 0) throw Error(ErrorKind::EmptyFile, "no vectors");
    if (header && rows != declared_rows) {
        throw Error(ErrorKind::DimensionMismatch,
                    "header declares " + std::to_string(declared_rows) + " rows, file has " + std::to_string(rows));
    }
    return space;
}

EmbeddingSpace load_vectors(const std::filesystem::path& path, VectorFormat format, std::string label) {
    auto space = parse_vectors(util::read_file(path), format);
    space.set_label(label.empty() ? path.stem().string() : std::move(label));
    return space;
}

const char* to_string(DropReason reason) {
    switch (reason) {
    case DropReason::NounMissing: return "noun_missing";
    case DropReason::DenominalMissing: return "denominal_missing";
    case DropReason::RootVerbMissing: return "root_verb_missing";
    case DropReason::NoRootVerbsLeft: return "no_root_verbs_left";
    }
    return "?";
}

std::size_t CoverageReport::dropped_points() const {
    std::size_t n = 0;
    for (const auto& issue : issues) n += issue.point_dropped;
    return n;
}

std::string CoverageReport::to_tsv() const {
    std::string out = "point_id\ttoken\treason\taction\n";
    for (const auto& i : issues) {
        out += i.point_id + "\t" + i.token + "\t" + to_string(i.reason) + "\t" +
               (i.point_dropped ? "point_dropped" : "root_verb_dropped") + "\n";
    }
    return out;
}

CoverageReport coverage_report(const std::vector<DataPoint>& points, const EmbeddingSpace& space) {
    CoverageReport report;
    for (const auto& p : points) {
        const auto id = p.id();
        if (!space.contains(p.noun_lookup_form)) {
            report.issues.push_back({id, p.noun_lookup_form, DropReason::NounMissing, true});
            continue;
        }
        if (!space.contains(p.denominal.text)) {
            report.issues.push_back({id, p.denominal.text, DropReason::DenominalMissing, true});
            continue;
        }
        DataPoint kept = p;
        kept.root_verbs.clear();
        std::vector<CoverageIssue> verb_issues;
        for (const auto& v : p.root_verbs) {
            if (space.contains(v.text)) {
                kept.root_verbs.push_back(v);
            } else {
                verb_issues.push_back({id, v.text, DropReason::RootVerbMissing, false});
            }
        }
        report.issues.insert(report.issues.end(), verb_issues.begin(), verb_issues.end());
        if (kept.root_verbs.empty()) {
            report.issues.push_back({id, "-", DropReason::NoRootVerbsLeft, true});
            continue;
        }
        report.points.push_back(std::move(kept));
    }
    return report;
}

}  // namespace denominal
