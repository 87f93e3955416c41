#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "denominal/inventory.hpp"
#include "denominal/morphology.hpp"

namespace denominal {

/// Column layout and tag sets of a tagged-token corpus file.
struct CorpusConfig {
    std::size_t surface_column = 0;
    std::size_t pos_column = 1;
    char separator = '\t';
    std::set<std::string> noun_tags{"N"};
    std::set<std::string> verb_tags{"V"};
};

/// Noun and verb views of a tagged corpus; tokens are stored normalized.
struct Corpus {
    std::set<std::string> nouns;
    std::set<std::string> verbs;
    std::map<std::string, std::size_t> token_counts;
};

/// One token per line. Blank lines and `#` comments are skipped; a line
/// short of the configured columns throws MalformedLine, a corpus with no
/// token lines throws EmptyCorpus.
Corpus ingest_corpus(std::string_view text, const Alphabet& alphabet, const CorpusConfig& config = {});
Corpus load_corpus(const std::filesystem::path& path, const Alphabet& alphabet, const CorpusConfig& config = {});

enum class ReviewStatus { Auto, Kept, Discarded };

const char* to_string(ReviewStatus status);

/// A noun, its denominal verb and the verbs built directly on its root.
struct DataPoint {
    static constexpr std::size_t kMaxRootVerbs = 5;

    SurfaceForm noun;
    std::string noun_lookup_form;
    SurfaceForm denominal;
    std::vector<SurfaceForm> root_verbs;
    Root root;
    ReviewStatus status = ReviewStatus::Auto;

    /// "noun/denominal", unique within a dataset.
    std::string id() const;

    /// Throws InvalidDataPoint when a structural invariant is broken: 1-5 root
    /// verbs, noun and root verbs analysed on `root`, denominal root one
    /// consonant longer, denominal distinct from every root verb.
    void check() const;

    bool operator==(const DataPoint&) const = default;
};

/// Placeholder consonant for an augmented root whose templatic letter is
/// unknown (synthetic data, or a review file read without its inventory).
inline constexpr const char* kUnknownTemplatic = "+";

struct GenerationResult {
    std::vector<DataPoint> points;
    /// (noun, denominal) pairs dropped because no root verb was attested.
    std::size_t n_without_root_verbs = 0;
};

/// Predicate for the optional vocabulary check on root-verb infinitives.
using VocabularyCheck = std::function<bool(const std::string&)>;

/// Matches every corpus noun against the mapped nominal templates and builds
/// candidate points. A root verb counts when one of its inflected forms is a
/// corpus verb, or when `in_vocabulary` accepts its infinitive. Output is
/// sorted by noun, then denominal template id, with (noun, denominal)
/// duplicates removed.
GenerationResult generate_candidates(const Corpus& corpus, const TemplateInventory& inventory,
                                     const VocabularyCheck& in_vocabulary = {});

struct FunnelReport {
    std::size_t n_candidates = 0;
    std::size_t n_auto_rejected = 0;
    std::size_t n_for_review = 0;
    std::size_t n_final = 0;
    std::size_t n_without_root_verbs = 0;

    std::string to_text() const;
};

struct AttestationResult {
    std::vector<DataPoint> kept;
    std::vector<DataPoint> rejected;
    FunnelReport report;
};

/// Keeps a point iff some inflected form of its denominal is a corpus verb.
AttestationResult attestation_filter(const std::vector<DataPoint>& points, const Corpus& corpus,
                                     const TemplateInventory& inventory);

/// Header row of the review / dataset TSV.
inline constexpr const char* kReviewHeader =
    "noun\tnoun_template\tnoun_lookup_form\troot\tdenominal\tdenominal_template\troot_verbs\tstatus";

/// Serializes points; `auto` is written as `kept`.
std::string format_review(const std::vector<DataPoint>& points);
void export_for_review(const std::vector<DataPoint>& points, const std::filesystem::path& path);

/// Parses a review file. With an inventory, the denominal's augmented root
/// and the root verbs' templates are recovered and checked against the
/// surface strings; without one (or for templates it does not know) the
/// augmented root uses kUnknownTemplatic and root-verb templates stay empty.
/// Throws MalformedReviewFile(line).
std::vector<DataPoint> parse_review(std::string_view text, const TemplateInventory* inventory = nullptr);
std::vector<DataPoint> import_review(const std::filesystem::path& path, const TemplateInventory* inventory = nullptr);

}  // namespace denominal
