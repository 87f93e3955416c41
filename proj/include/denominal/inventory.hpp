#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "denominal/alphabet.hpp"
#include "denominal/morphology.hpp"

namespace denominal {

/// Templates plus the alphabet they are written in.
///
/// File format, one variant per line, tab separated:
///
///   id  pos  pattern  arities  templatic  ambiguity  flags
///
/// Rows sharing an id are arity variants of one template. `templatic` is a
/// comma-separated letter list, `flags` a `;`-separated list of
/// `plural=+suffix`, `plural=<pattern>`, `denominal=id,id`, `root_verb`,
/// `metathesis=<letter>` and `infl=tag:pattern|tag:pattern`. Empty optional
/// fields are written as `-`; `#` starts a comment line.
class TemplateInventory {
public:
    static constexpr std::size_t kRootVerbTemplates = 5;

    TemplateInventory() = default;
    TemplateInventory(Alphabet alphabet, std::vector<Template> templates);

    static TemplateInventory parse(std::string_view text, Alphabet alphabet);
    /// Reads `path`; the alphabet comes from `alphabet_path`, or from the
    /// sidecar `<stem>.alphabet` next to the inventory when empty.
    static TemplateInventory load(const std::filesystem::path& path,
                                  const std::filesystem::path& alphabet_path = {});
    std::string serialize() const;

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Template>& templates() const { return templates_; }
    const Template* find(std::string_view id) const;
    /// Throws MalformedInventory when the id is unknown.
    const Template& get(std::string_view id) const;

    /// Nominal templates that map to at least one denominal template.
    std::vector<const Template*> nominal_templates() const;
    std::map<std::string, std::vector<std::string>> denominal_map() const;
    std::vector<const Template*> root_verb_templates() const;

    /// Checks what dataset generation relies on: every denominal target
    /// resolves to a verb_infinitive, exactly five root-verb infinitives,
    /// and each mapped nominal template has a templatic consonant.
    void validate_for_generation() const;

private:
    void validate() const;

    Alphabet alphabet_;
    std::vector<Template> templates_;
};

}  // namespace denominal
