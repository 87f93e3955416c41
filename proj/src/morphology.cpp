#include "denominal/morphology.hpp"

#include <algorithm>

#include "denominal/error.hpp"
#include "denominal/util.hpp"

namespace denominal {

Root::Root(std::vector<std::string> consonants) : consonants_(std::move(consonants)) {
    if (consonants_.size() < 2 || consonants_.size() > 4) {
        throw Error(ErrorKind::ArityMismatch,
                    "root must have 2-4 consonants, got " + std::to_string(consonants_.size()));
    }
}

Root Root::parse(std::string_view dotted) {
    return Root(util::split(dotted, '.'));
}

std::string Root::dotted() const {
    return util::join(consonants_, ".");
}

Pattern parse_pattern(std::string_view text) {
    Pattern out;
    std::string fixed;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '{') {
            auto close = text.find('}', i);
            if (close == std::string_view::npos) {
                throw Error(ErrorKind::MalformedInventory, "unterminated slot in '" + std::string(text) + "'");
            }
            auto digits = text.substr(i + 1, close - i - 1);
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw Error(ErrorKind::MalformedInventory, "bad slot index in '" + std::string(text) + "'");
            }
            if (!fixed.empty()) {
                out.push_back(Segment::fixed(std::move(fixed)));
                fixed.clear();
            }
            out.push_back(Segment::slot_at(std::stoi(std::string(digits))));
            i = close + 1;
        } else {
            fixed += text[i++];
        }
    }
    if (!fixed.empty()) out.push_back(Segment::fixed(std::move(fixed)));
    return out;
}

std::string format_pattern(const Pattern& pattern) {
    std::string out;
    for (const auto& seg : pattern) {
        if (seg.kind == Segment::Kind::Fixed) {
            out += seg.text;
        } else {
            out += "{" + std::to_string(seg.slot) + "}";
        }
    }
    return out;
}

int pattern_arity(const Pattern& pattern) {
    int expected = 1;
    for (const auto& seg : pattern) {
        if (seg.kind != Segment::Kind::Slot) continue;
        if (seg.slot != expected) {
            throw Error(ErrorKind::MalformedInventory,
                        "slots must be {1}..{a} in order: '" + format_pattern(pattern) + "'");
        }
        ++expected;
    }
    if (expected == 1) {
        throw Error(ErrorKind::MalformedInventory, "pattern without slots: '" + format_pattern(pattern) + "'");
    }
    return expected - 1;
}

const char* to_string(PartOfSpeech pos) {
    switch (pos) {
    case PartOfSpeech::Noun: return "noun";
    case PartOfSpeech::Adjective: return "adjective";
    case PartOfSpeech::VerbInfinitive: return "verb_infinitive";
    case PartOfSpeech::VerbInflected: return "verb_inflected";
    }
    return "?";
}

const char* to_string(AmbiguityClass cls) {
    switch (cls) {
    case AmbiguityClass::Unambiguous: return "unambiguous";
    case AmbiguityClass::ImperativeHomograph: return "imperative_homograph";
    case AmbiguityClass::PresentOrDenominalHomograph: return "present_or_denominal_homograph";
    case AmbiguityClass::DenominalPastHomograph: return "denominal_past_homograph";
    }
    return "?";
}

std::optional<PartOfSpeech> parse_pos(std::string_view text) {
    for (auto pos : {PartOfSpeech::Noun, PartOfSpeech::Adjective, PartOfSpeech::VerbInfinitive,
                     PartOfSpeech::VerbInflected}) {
        if (text == to_string(pos)) return pos;
    }
    return std::nullopt;
}

std::optional<AmbiguityClass> parse_ambiguity(std::string_view text) {
    if (text == "-") return AmbiguityClass::Unambiguous;
    for (auto cls : {AmbiguityClass::Unambiguous, AmbiguityClass::ImperativeHomograph,
                     AmbiguityClass::PresentOrDenominalHomograph, AmbiguityClass::DenominalPastHomograph}) {
        if (text == to_string(cls)) return cls;
    }
    return std::nullopt;
}

std::set<int> Template::arities() const {
    std::set<int> out;
    for (const auto& v : variants) out.insert(v.arity);
    return out;
}

const TemplateVariant* Template::variant_for(int arity) const {
    for (const auto& v : variants) {
        if (v.arity == arity) return &v;
    }
    return nullptr;
}

namespace {

// A pattern flattened to single letters: slot > 0 marks a root position,
// otherwise `letter` holds a base letter of the template.
struct Item {
    int slot = 0;
    std::string letter;
};

std::vector<Item> flatten(const Alphabet& alphabet, const Pattern& pattern) {
    std::vector<Item> items;
    for (const auto& seg : pattern) {
        if (seg.kind == Segment::Kind::Slot) {
            items.push_back({seg.slot, {}});
        } else {
            for (const auto& sym : alphabet.symbols(seg.text)) {
                items.push_back({0, alphabet.base_of(sym)});
            }
        }
    }
    return items;
}

// Index of the item holding slot 1 when metathesis can apply to it.
std::optional<std::size_t> metathesis_site(const Alphabet& alphabet, const Template& tmpl,
                                           const std::vector<Item>& items) {
    if (!tmpl.metathesis) return std::nullopt;
    const auto target = alphabet.base_of(*tmpl.metathesis);
    for (std::size_t i = 1; i < items.size(); ++i) {
        if (items[i].slot == 1 && items[i - 1].slot == 0 && items[i - 1].letter == target) {
            return i;
        }
    }
    return std::nullopt;
}

void check_letters(const Alphabet& alphabet, const Root& root) {
    for (const auto& c : root.consonants()) {
        if (!alphabet.contains(c)) {
            throw Error(ErrorKind::UnknownLetter, "'" + c + "' is not in the alphabet");
        }
    }
}

const TemplateVariant& require_variant(const Template& tmpl, const Root& root) {
    const auto* variant = tmpl.variant_for(static_cast<int>(root.size()));
    if (variant == nullptr) {
        throw Error(ErrorKind::ArityMismatch,
                    "template " + tmpl.id + " does not take " + std::to_string(root.size()) + "-consonant roots");
    }
    return *variant;
}

void match(const std::vector<Item>& items, std::size_t item, std::string_view rest,
           std::vector<std::string>& assignment, const Alphabet& alphabet, std::vector<Root>& out) {
    if (item == items.size()) {
        if (rest.empty()) out.emplace_back(assignment);
        return;
    }
    const auto& it = items[item];
    if (it.slot == 0) {
        if (rest.substr(0, it.letter.size()) == it.letter) {
            match(items, item + 1, rest.substr(it.letter.size()), assignment, alphabet, out);
        }
        return;
    }
    for (const auto& letter : alphabet.letters()) {
        if (rest.substr(0, letter.size()) == letter) {
            assignment[it.slot - 1] = letter;
            match(items, item + 1, rest.substr(letter.size()), assignment, alphabet, out);
        }
    }
}

}  // namespace

std::string apply_pattern(const Alphabet& alphabet, const Root& root, const Template& tmpl,
                          const Pattern& pattern) {
    if (pattern_arity(pattern) != static_cast<int>(root.size())) {
        throw Error(ErrorKind::ArityMismatch, "pattern " + format_pattern(pattern) + " of " + tmpl.id +
                                                  " does not take " + std::to_string(root.size()) +
                                                  "-consonant roots");
    }
    check_letters(alphabet, root);
    auto items = flatten(alphabet, pattern);
    for (auto& it : items) {
        if (it.slot > 0) it.letter = root[static_cast<std::size_t>(it.slot - 1)];
    }
    if (alphabet.is_sibilant(root[0])) {
        if (auto site = metathesis_site(alphabet, tmpl, flatten(alphabet, pattern))) {
            std::swap(items[*site - 1], items[*site]);
        }
    }
    std::string text;
    for (const auto& it : items) text += it.letter;
    return alphabet.finalize(text);
}

SurfaceForm apply_template(const Alphabet& alphabet, const Root& root, const Template& tmpl) {
    const auto& variant = require_variant(tmpl, root);
    return {apply_pattern(alphabet, root, tmpl, variant.pattern), {tmpl.id, root}};
}

std::vector<Root> extract_roots(const Alphabet& alphabet, std::string_view word, const Template& tmpl) {
    const std::string target = alphabet.definalize(word);
    const std::string expected = alphabet.normalize(word);
    std::vector<Root> out;
    for (const auto& variant : tmpl.variants) {
        auto items = flatten(alphabet, variant.pattern);
        std::vector<std::vector<Item>> shapes{items};
        if (auto site = metathesis_site(alphabet, tmpl, items)) {
            auto swapped = items;
            std::swap(swapped[*site - 1], swapped[*site]);
            shapes.push_back(std::move(swapped));
        }
        for (const auto& shape : shapes) {
            std::vector<Root> found;
            std::vector<std::string> assignment(static_cast<std::size_t>(variant.arity));
            match(shape, 0, target, assignment, alphabet, found);
            for (auto& root : found) {
                // Re-application rejects e.g. a metathesized parse of a non-sibilant radical.
                if (apply_pattern(alphabet, root, tmpl, variant.pattern) != expected) continue;
                if (std::find(out.begin(), out.end(), root) == out.end()) out.push_back(std::move(root));
            }
        }
    }
    return out;
}

Root denominal_root(const Alphabet& alphabet, const SurfaceForm& noun, const Template& noun_template) {
    const auto& root = noun.analysis.root;
    const auto& variant = require_variant(noun_template, root);
    std::set<std::string> templatic;
    for (const auto& t : noun_template.templatic_consonants) templatic.insert(alphabet.base_of(t));

    std::size_t slots_before = 0;
    for (const auto& it : flatten(alphabet, variant.pattern)) {
        if (it.slot > 0) {
            ++slots_before;
        } else if (templatic.count(it.letter)) {
            auto consonants = root.consonants();
            consonants.insert(consonants.begin() + static_cast<std::ptrdiff_t>(slots_before), it.letter);
            return Root(std::move(consonants));
        }
    }
    throw Error(ErrorKind::NoTemplaticConsonant, "template " + noun_template.id + " has no templatic consonant");
}

std::string pluralize(const Alphabet& alphabet, const SurfaceForm& noun, const Template& noun_template) {
    const auto& variant = require_variant(noun_template, noun.analysis.root);
    if (!variant.plural) {
        throw Error(ErrorKind::NoPluralPattern, "template " + noun_template.id + " has no plural");
    }
    if (variant.plural_suffix) {
        return alphabet.finalize(alphabet.definalize(noun.text) + alphabet.definalize(*variant.plural_suffix));
    }
    return apply_pattern(alphabet, noun.analysis.root, noun_template, *variant.plural);
}

std::vector<std::pair<std::string, std::string>> inflect(const Alphabet& alphabet, const Root& root,
                                                         const Template& tmpl) {
    const auto& variant = require_variant(tmpl, root);
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(variant.inflections.size());
    for (const auto& infl : variant.inflections) {
        out.emplace_back(infl.tag, apply_pattern(alphabet, root, tmpl, infl.pattern));
    }
    return out;
}

}  // namespace denominal
