#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "denominal/alphabet.hpp"

namespace denominal {

/// Consonantal root, e.g. x-f-v.
class Root {
public:
    Root() = default;
    /// Throws ArityMismatch unless 2 <= size <= 4.
    explicit Root(std::vector<std::string> consonants);

    /// Parses the dotted form written to data files ("x.f.v").
    static Root parse(std::string_view dotted);
    std::string dotted() const;

    const std::vector<std::string>& consonants() const { return consonants_; }
    std::size_t size() const { return consonants_.size(); }
    const std::string& operator[](std::size_t i) const { return consonants_[i]; }

    auto operator<=>(const Root&) const = default;

private:
    std::vector<std::string> consonants_;
};

struct Segment {
    enum class Kind { Fixed, Slot };
    Kind kind = Kind::Fixed;
    std::string text;  // Fixed: letters as written
    int slot = 0;      // Slot: 1-based root position

    static Segment fixed(std::string text) { return {Kind::Fixed, std::move(text), 0}; }
    static Segment slot_at(int i) { return {Kind::Slot, {}, i}; }
    bool operator==(const Segment&) const = default;
};

using Pattern = std::vector<Segment>;

/// "t{1}{2}i{3}" -> [Fixed t, Slot 1, Slot 2, Fixed i, Slot 3]
Pattern parse_pattern(std::string_view text);
std::string format_pattern(const Pattern& pattern);
/// Number of slots; throws MalformedInventory unless slots are exactly 1..a in order.
int pattern_arity(const Pattern& pattern);

enum class PartOfSpeech { Noun, Adjective, VerbInfinitive, VerbInflected };
enum class AmbiguityClass {
    Unambiguous,
    ImperativeHomograph,
    PresentOrDenominalHomograph,
    DenominalPastHomograph,
};

const char* to_string(PartOfSpeech pos);
const char* to_string(AmbiguityClass cls);
std::optional<PartOfSpeech> parse_pos(std::string_view text);
std::optional<AmbiguityClass> parse_ambiguity(std::string_view text);

struct Inflection {
    std::string tag;
    Pattern pattern;
    bool operator==(const Inflection&) const = default;
};

/// One arity-specific shape of a template (one row of the inventory file).
struct TemplateVariant {
    int arity = 0;
    Pattern pattern;
    std::optional<Pattern> plural;
    /// Set when the plural was declared as "+suffix" on the singular.
    std::optional<std::string> plural_suffix;
    std::vector<Inflection> inflections;
    bool operator==(const TemplateVariant&) const = default;
};

struct Template {
    std::string id;
    PartOfSpeech pos = PartOfSpeech::Noun;
    std::vector<TemplateVariant> variants;
    std::vector<std::string> templatic_consonants;
    AmbiguityClass ambiguity = AmbiguityClass::Unambiguous;
    /// Letter swapped with a sibilant first radical (hitpael t).
    std::optional<std::string> metathesis;
    bool root_verb = false;
    std::vector<std::string> denominal_targets;

    std::set<int> arities() const;
    const TemplateVariant* variant_for(int arity) const;
    bool is_nominal() const { return pos == PartOfSpeech::Noun || pos == PartOfSpeech::Adjective; }
    bool is_verb() const { return pos == PartOfSpeech::VerbInfinitive || pos == PartOfSpeech::VerbInflected; }
    bool operator==(const Template&) const = default;
};

struct Analysis {
    std::string template_id;
    Root root;
    auto operator<=>(const Analysis&) const = default;
};

struct SurfaceForm {
    std::string text;
    Analysis analysis;
    auto operator<=>(const SurfaceForm&) const = default;
};

/// Fills the pattern's slots with the root, applies sibilant metathesis
/// when the template is flagged, and writes the last letter in its final
/// form. Throws ArityMismatch / UnknownLetter.
SurfaceForm apply_template(const Alphabet& alphabet, const Root& root, const Template& tmpl);

/// Same, for an explicit pattern of the template (plural or inflection).
std::string apply_pattern(const Alphabet& alphabet, const Root& root, const Template& tmpl,
                          const Pattern& pattern);

/// Every root r with apply_template(r, tmpl).text == normalize(word).
/// Returns an empty list when the word does not fit the template.
std::vector<Root> extract_roots(const Alphabet& alphabet, std::string_view word, const Template& tmpl);

/// The root augmented with the nominal template's templatic consonant at
/// the position it occupies in the noun (maCCeC: m-x-f-v; CeCCon: x-f-v-n).
/// The first templatic letter in surface order is used.
Root denominal_root(const Alphabet& alphabet, const SurfaceForm& noun, const Template& noun_template);

/// Plural of a noun, built from its surface text. Throws NoPluralPattern.
std::string pluralize(const Alphabet& alphabet, const SurfaceForm& noun, const Template& noun_template);

/// (tag, surface) for each inflection pattern of a verb template.
std::vector<std::pair<std::string, std::string>> inflect(const Alphabet& alphabet, const Root& root,
                                                         const Template& tmpl);

inline AmbiguityClass ambiguity_of(const Template& tmpl) { return tmpl.ambiguity; }

}  // namespace denominal
