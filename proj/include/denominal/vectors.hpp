#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "denominal/alphabet.hpp"
#include "denominal/datasetgen.hpp"

namespace denominal {

enum class VectorFormat { Auto, Word2VecText, GloveText };

std::optional<VectorFormat> parse_vector_format(std::string_view text);

/// Token -> dense vector table of fixed dimension.
///
/// With a normalizer alphabet, lookups compare final-form-normalized
/// spellings; otherwise tokens must match exactly.
class EmbeddingSpace {
public:
    EmbeddingSpace() = default;
    explicit EmbeddingSpace(std::size_t dim, std::string label = {});

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return tokens_.size(); }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
    /// Number of rows replaced by a later row with the same token.
    std::size_t duplicates() const { return duplicates_; }

    /// Adds or replaces (last wins). Throws DimensionMismatch / NonNumericComponent.
    void add(const std::string& token, std::span<const double> values);

    void set_normalizer(Alphabet alphabet);
    std::optional<std::span<const double>> lookup(std::string_view token) const;
    bool contains(std::string_view token) const { return lookup(token).has_value(); }

    /// word2vec text: "N D" header, then "token v1 ... vD" with 9 significant digits.
    std::string to_word2vec_text() const;
    void save(const std::filesystem::path& path) const;

private:
    std::string key(std::string_view token) const;
    void reindex();

    std::size_t dim_ = 0;
    std::string label_;
    std::vector<std::string> tokens_;
    std::vector<double> data_;
    std::map<std::string, std::size_t, std::less<>> exact_;
    std::map<std::string, std::size_t, std::less<>> normalized_;
    std::optional<Alphabet> normalizer_;
    std::size_t duplicates_ = 0;
};

/// Reads word2vec/fastText text (header "N D") or headerless GloVe text.
/// Auto mode takes a first line of exactly two integers as the header.
/// Throws EmptyFile, DimensionMismatch(line), NonNumericComponent(line).
EmbeddingSpace parse_vectors(std::string_view text, VectorFormat format = VectorFormat::Auto);
EmbeddingSpace load_vectors(const std::filesystem::path& path, VectorFormat format = VectorFormat::Auto,
                            std::string label = {});

enum class DropReason { NounMissing, DenominalMissing, RootVerbMissing, NoRootVerbsLeft };

const char* to_string(DropReason reason);

struct CoverageIssue {
    std::string point_id;
    std::string token;
    DropReason reason;
    /// True when the whole point was dropped, false for a single root verb.
    bool point_dropped = false;
};

struct CoverageReport {
    /// Surviving points with missing root verbs removed, in input order.
    std::vector<DataPoint> points;
    std::vector<CoverageIssue> issues;

    std::size_t dropped_points() const;
    /// TSV: point_id, token, reason, action.
    std::string to_tsv() const;
};

CoverageReport coverage_report(const std::vector<DataPoint>& points, const EmbeddingSpace& space);

}  // namespace denominal
