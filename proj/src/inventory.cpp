#include "denominal/inventory.hpp"

#include <algorithm>
#include <set>

#include "denominal/error.hpp"
#include "denominal/util.hpp"

namespace denominal {

namespace {

constexpr std::size_t kColumns = 7;

[[noreturn]] void bad(const std::string& message, std::size_t line) {
    throw Error(ErrorKind::MalformedInventory, message, line);
}

std::string dash_if_empty(const std::string& s) { return s.empty() ? "-" : s; }

std::string format_flags(const Template& t, const TemplateVariant& v) {
    std::vector<std::string> flags;
    if (v.plural_suffix) {
        flags.push_back("plural=+" + *v.plural_suffix);
    } else if (v.plural) {
        flags.push_back("plural=" + format_pattern(*v.plural));
    }
    if (!t.denominal_targets.empty()) flags.push_back("denominal=" + util::join(t.denominal_targets, ","));
    if (t.root_verb) flags.push_back("root_verb");
    if (t.metathesis) flags.push_back("metathesis=" + *t.metathesis);
    if (!v.inflections.empty()) {
        std::vector<std::string> items;
        for (const auto& infl : v.inflections) items.push_back(infl.tag + ":" + format_pattern(infl.pattern));
        flags.push_back("infl=" + util::join(items, "|"));
    }
    return dash_if_empty(util::join(flags, ";"));
}

}  // namespace

TemplateInventory::TemplateInventory(Alphabet alphabet, std::vector<Template> templates)
    : alphabet_(std::move(alphabet)), templates_(std::move(templates)) {
    validate();
}

void TemplateInventory::validate() const {
    std::set<std::string> ids;
    for (const auto& t : templates_) {
        if (!ids.insert(t.id).second) bad("duplicate template id " + t.id, 0);
        if (t.variants.empty()) bad("template " + t.id + " has no pattern", 0);
        std::set<int> arities;
        for (const auto& v : t.variants) {
            if (v.arity < 2 || v.arity > 4) bad("template " + t.id + ": arity must be 2-4", 0);
            if (!arities.insert(v.arity).second) bad("template " + t.id + ": arity listed twice", 0);
            if (pattern_arity(v.pattern) != v.arity) bad("template " + t.id + ": arity column disagrees with pattern", 0);
            if (v.plural && pattern_arity(*v.plural) != v.arity) bad("template " + t.id + ": plural arity", 0);
            for (const auto& infl : v.inflections) {
                if (pattern_arity(infl.pattern) != v.arity) bad("template " + t.id + ": inflection " + infl.tag + " arity", 0);
            }
        }
        // templatic consonants must be letters written in the template itself
        for (const auto& c : t.templatic_consonants) {
            const auto base = alphabet_.base_of(c);
            if (!alphabet_.contains(base)) bad("template " + t.id + ": templatic '" + c + "' not in alphabet", 0);
            bool present = false;
            for (const auto& v : t.variants) {
                for (const auto& seg : v.pattern) {
                    if (seg.kind != Segment::Kind::Fixed) continue;
                    for (const auto& sym : alphabet_.symbols(seg.text)) {
                        present = present || alphabet_.base_of(sym) == base;
                    }
                }
            }
            if (!present) bad("template " + t.id + ": templatic '" + c + "' is not a fixed letter", 0);
        }
        if (t.metathesis && !alphabet_.contains(alphabet_.base_of(*t.metathesis))) {
            bad("template " + t.id + ": metathesis letter not in alphabet", 0);
        }
    }
    for (const auto& t : templates_) {
        for (const auto& target : t.denominal_targets) {
            if (!ids.count(target)) bad("template " + t.id + ": denominal target " + target + " is undefined", 0);
        }
    }
}

void TemplateInventory::validate_for_generation() const {
    const auto roots = root_verb_templates();
    if (roots.size() != kRootVerbTemplates) {
        bad("expected " + std::to_string(kRootVerbTemplates) + " root_verb templates, found " +
                std::to_string(roots.size()), 0);
    }
    for (const auto* t : roots) {
        if (t->pos != PartOfSpeech::VerbInfinitive) bad("root_verb template " + t->id + " is not verb_infinitive", 0);
    }
    for (const auto& [noun, targets] : denominal_map()) {
        const auto& nt = get(noun);
        if (!nt.is_nominal()) bad("denominal source " + noun + " is not nominal", 0);
        if (nt.templatic_consonants.empty()) bad("denominal source " + noun + " has no templatic consonant", 0);
        for (const auto& id : targets) {
            if (get(id).pos != PartOfSpeech::VerbInfinitive) bad("denominal target " + id + " is not verb_infinitive", 0);
        }
    }
}

TemplateInventory TemplateInventory::parse(std::string_view text, Alphabet alphabet) {
    std::vector<Template> templates;
    auto lines = util::split(text, '\n');
    for (std::size_t n = 0; n < lines.size(); ++n) {
        std::string line = lines[n];
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (util::trim(line).empty() || line.front() == '#') continue;
        const std::size_t lineno = n + 1;
        auto cols = util::split(line, '\t');
        if (cols.size() != kColumns) {
            bad("expected " + std::to_string(kColumns) + " tab-separated columns, got " + std::to_string(cols.size()),
                lineno);
        }
        const auto& id = cols[0];
        auto pos = parse_pos(cols[1]);
        if (!pos) bad("unknown part of speech '" + cols[1] + "'", lineno);
        TemplateVariant variant;
        try {
            variant.pattern = parse_pattern(cols[2]);
            variant.arity = std::stoi(cols[3]);
            if (std::to_string(variant.arity) != cols[3]) throw std::invalid_argument(cols[3]);
        } catch (const Error& e) {
            bad(e.what(), lineno);
        } catch (const std::exception&) {
            bad("bad arity '" + cols[3] + "'", lineno);
        }
        std::vector<std::string> templatic;
        if (cols[4] != "-") templatic = util::split(cols[4], ',');
        auto ambiguity = parse_ambiguity(cols[5]);
        if (!ambiguity) bad("unknown ambiguity class '" + cols[5] + "'", lineno);

        std::optional<std::string> metathesis;
        bool root_verb = false;
        std::vector<std::string> denominal;
        if (cols[6] != "-") {
            for (const auto& flag : util::split(cols[6], ';')) {
                auto eq = flag.find('=');
                std::string key = flag.substr(0, eq);
                std::string value = eq == std::string::npos ? "" : flag.substr(eq + 1);
                try {
                    if (key == "plural") {
                        if (!value.empty() && value.front() == '+') {
                            variant.plural_suffix = value.substr(1);
                            auto p = variant.pattern;
                            p.push_back(Segment::fixed(value.substr(1)));
                            variant.plural = std::move(p);
                        } else {
                            variant.plural = parse_pattern(value);
                        }
                    } else if (key == "denominal") {
                        denominal = util::split(value, ',');
                    } else if (key == "root_verb" && value.empty()) {
                        root_verb = true;
                    } else if (key == "metathesis" && !value.empty()) {
                        metathesis = value;
                    } else if (key == "infl") {
                        for (const auto& item : util::split(value, '|')) {
                            auto colon = item.find(':');
                            if (colon == std::string::npos) bad("inflection without tag: '" + item + "'", lineno);
                            variant.inflections.push_back({item.substr(0, colon), parse_pattern(item.substr(colon + 1))});
                        }
                    } else {
                        bad("unknown flag '" + flag + "'", lineno);
                    }
                } catch (const Error& e) {
                    if (e.line() != 0) throw;
                    bad(e.what(), lineno);
                }
            }
        }

        auto existing = std::find_if(templates.begin(), templates.end(), [&](const Template& t) { return t.id == id; });
        if (existing == templates.end()) {
            Template t;
            t.id = id;
            t.pos = *pos;
            t.templatic_consonants = std::move(templatic);
            t.ambiguity = *ambiguity;
            t.metathesis = std::move(metathesis);
            t.root_verb = root_verb;
            t.denominal_targets = std::move(denominal);
            t.variants.push_back(std::move(variant));
            templates.push_back(std::move(t));
        } else {
            if (existing->pos != *pos || existing->templatic_consonants != templatic ||
                existing->ambiguity != *ambiguity || existing->metathesis != metathesis ||
                existing->root_verb != root_verb || existing->denominal_targets != denominal) {
                bad("variant of " + id + " disagrees with its first row", lineno);
            }
            existing->variants.push_back(std::move(variant));
        }
    }
    return TemplateInventory(std::move(alphabet), std::move(templates));
}

TemplateInventory TemplateInventory::load(const std::filesystem::path& path,
                                          const std::filesystem::path& alphabet_path) {
    auto alpha_path = alphabet_path;
    if (alpha_path.empty()) {
        alpha_path = path;
        alpha_path.replace_extension(".alphabet");
    }
    return parse(util::read_file(path), Alphabet::load(alpha_path));
}

std::string TemplateInventory::serialize() const {
    std::string out = "# id\tpos\tpattern\tarities\ttemplatic\tambiguity\tflags\n";
    for (const auto& t : templates_) {
        for (const auto& v : t.variants) {
            out += t.id;
            out += '\t';
            out += to_string(t.pos);
            out += '\t';
            out += format_pattern(v.pattern);
            out += '\t';
            out += std::to_string(v.arity);
            out += '\t';
            out += dash_if_empty(util::join(t.templatic_consonants, ","));
            out += '\t';
            out += t.ambiguity == AmbiguityClass::Unambiguous ? "-" : to_string(t.ambiguity);
            out += '\t';
            out += format_flags(t, v);
            out += '\n';
        }
    }
    return out;
}

const Template* TemplateInventory::find(std::string_view id) const {
    for (const auto& t : templates_) {
        if (t.id == id) return &t;
    }
    return nullptr;
}

const Template& TemplateInventory::get(std::string_view id) const {
    const auto* t = find(id);
    if (t == nullptr) bad("unknown template id " + std::string(id), 0);
    return *t;
}

std::vector<const Template*> TemplateInventory::nominal_templates() const {
    std::vector<const Template*> out;
    for (const auto& t : templates_) {
        if (t.is_nominal() && !t.denominal_targets.empty()) out.push_back(&t);
    }
    return out;
}

std::map<std::string, std::vector<std::string>> TemplateInventory::denominal_map() const {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& t : templates_) {
        if (!t.denominal_targets.empty()) out[t.id] = t.denominal_targets;
    }
    return out;
}

std::vector<const Template*> TemplateInventory::root_verb_templates() const {
    std::vector<const Template*> out;
    for (const auto& t : templates_) {
        if (t.root_verb) out.push_back(&t);
    }
    return out;
}

}  // namespace denominal
