#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace denominal {

/// Letter inventory of a consonantal script.
///
/// Letters are UTF-8 strings of one or more bytes (a Hebrew letter is one
/// code point, a transliteration may use digraphs). Two normalizations are
/// supported: word-final variants (Hebrew kaf/final kaf, ...) that only
/// surface at the end of a word, and free orthographic variants that are
/// always folded onto a base letter.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::vector<std::string> letters,
             std::map<std::string, std::string> final_forms,
             std::map<std::string, std::string> variants,
             std::set<std::string> sibilants);

    /// Parses the line-based alphabet file:
    ///   letters    <letter> <letter> ...
    ///   final      <base>=<final> ...
    ///   variants   <variant>=<base> ...
    ///   sibilants  <letter> ...
    static Alphabet parse(std::string_view text);
    static Alphabet load(const std::filesystem::path& path);
    std::string serialize() const;

    const std::vector<std::string>& letters() const { return letters_; }
    const std::map<std::string, std::string>& final_forms() const { return final_forms_; }
    const std::map<std::string, std::string>& variants() const { return variants_; }
    const std::set<std::string>& sibilants() const { return sibilants_; }

    bool contains(std::string_view letter) const;
    bool is_sibilant(std::string_view letter) const;

    /// Splits a word into symbols by greedy longest match over letters and
    /// their variants. Unknown bytes become single code-point symbols.
    std::vector<std::string> symbols(std::string_view word) const;

    /// Maps every symbol to its base letter (final and free variants folded).
    std::string definalize(std::string_view word) const;
    /// Base-letter form with the last letter written in its final variant.
    std::string normalize(std::string_view word) const;
    /// Replaces the last letter of a base-letter word with its final form.
    std::string finalize(std::string_view word) const;

    /// Base letter for a symbol, or the symbol itself when it is not known.
    std::string base_of(std::string_view symbol) const;

    bool operator==(const Alphabet&) const = default;

private:
    void validate() const;
    void index();

    std::vector<std::string> letters_;
    std::map<std::string, std::string> final_forms_;
    std::map<std::string, std::string> variants_;
    std::set<std::string> sibilants_;

    // symbol -> base letter, for letters and every variant spelling
    std::map<std::string, std::string, std::less<>> to_base_;
    std::size_t longest_symbol_ = 1;
};

}  // namespace denominal
