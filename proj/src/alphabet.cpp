#include "denominal/alphabet.hpp"

#include <algorithm>

#include "denominal/error.hpp"
#include "denominal/util.hpp"

namespace denominal {

namespace {

std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xE) return 3;
    if ((lead >> 3) == 0x1E) return 4;
    return 1;
}

std::pair<std::string, std::string> split_pair(const std::string& item, std::size_t line) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
        throw Error(ErrorKind::MalformedAlphabet, "expected a=b, got '" + item + "'", line);
    }
    return {item.substr(0, eq), item.substr(eq + 1)};
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters,
                   std::map<std::string, std::string> final_forms,
                   std::map<std::string, std::string> variants,
                   std::set<std::string> sibilants)
    : letters_(std::move(letters)),
      final_forms_(std::move(final_forms)),
      variants_(std::move(variants)),
      sibilants_(std::move(sibilants)) {
    validate();
    index();
}

void Alphabet::validate() const {
    if (letters_.empty()) {
        throw Error(ErrorKind::MalformedAlphabet, "no letters");
    }
    std::set<std::string> seen;
    for (const auto& l : letters_) {
        if (l.empty()) throw Error(ErrorKind::MalformedAlphabet, "empty letter");
        if (!seen.insert(l).second) throw Error(ErrorKind::MalformedAlphabet, "duplicate letter " + l);
    }
    std::set<std::string> variant_symbols;
    for (const auto& [base, fin] : final_forms_) {
        if (!seen.count(base)) throw Error(ErrorKind::MalformedAlphabet, "final form for unknown letter " + base);
        if (base == fin) throw Error(ErrorKind::MalformedAlphabet, "letter " + base + " maps to itself");
        if (seen.count(fin)) throw Error(ErrorKind::MalformedAlphabet, "final form " + fin + " is also a base letter");
        variant_symbols.insert(fin);
    }
    for (const auto& [variant, base] : variants_) {
        if (!seen.count(base)) throw Error(ErrorKind::MalformedAlphabet, "variant of unknown letter " + base);
        if (variant == base) throw Error(ErrorKind::MalformedAlphabet, "letter " + base + " maps to itself");
        if (seen.count(variant)) throw Error(ErrorKind::MalformedAlphabet, "variant " + variant + " is also a base letter");
        if (!variant_symbols.insert(variant).second) {
            throw Error(ErrorKind::MalformedAlphabet, "variant " + variant + " declared twice");
        }
    }
    for (const auto& s : sibilants_) {
        if (!seen.count(s)) throw Error(ErrorKind::MalformedAlphabet, "sibilant " + s + " is not a letter");
    }
}

void Alphabet::index() {
    to_base_.clear();
    for (const auto& l : letters_) to_base_.emplace(l, l);
    for (const auto& [base, fin] : final_forms_) to_base_.emplace(fin, base);
    for (const auto& [variant, base] : variants_) to_base_.emplace(variant, base);
    longest_symbol_ = 1;
    for (const auto& [sym, base] : to_base_) longest_symbol_ = std::max(longest_symbol_, sym.size());
}

Alphabet Alphabet::parse(std::string_view text) {
    std::vector<std::string> letters;
    std::map<std::string, std::string> finals;
    std::map<std::string, std::string> variants;
    std::set<std::string> sibilants;

    auto lines = util::split(text, '\n');
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto line = util::trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;
        auto fields = util::split_ws(line);
        const auto& key = fields.front();
        std::vector<std::string> values(fields.begin() + 1, fields.end());
        if (key == "letters") {
            letters.insert(letters.end(), values.begin(), values.end());
        } else if (key == "final") {
            for (const auto& v : values) {
                auto [a, b] = split_pair(v, i + 1);
                finals[a] = b;
            }
        } else if (key == "variants") {
            for (const auto& v : values) {
                auto [a, b] = split_pair(v, i + 1);
                variants[a] = b;
            }
        } else if (key == "sibilants") {
            sibilants.insert(values.begin(), values.end());
        } else {
            throw Error(ErrorKind::MalformedAlphabet, "unknown key '" + key + "'", i + 1);
        }
    }
    return Alphabet(std::move(letters), std::move(finals), std::move(variants), std::move(sibilants));
}

Alphabet Alphabet::load(const std::filesystem::path& path) {
    return parse(util::read_file(path));
}

std::string Alphabet::serialize() const {
    std::string out = "letters\t" + util::join(letters_, " ") + "\n";
    std::vector<std::string> items;
    for (const auto& [a, b] : final_forms_) items.push_back(a + "=" + b);
    if (!items.empty()) out += "final\t" + util::join(items, " ") + "\n";
    items.clear();
    for (const auto& [a, b] : variants_) items.push_back(a + "=" + b);
    if (!items.empty()) out += "variants\t" + util::join(items, " ") + "\n";
    if (!sibilants_.empty()) {
        out += "sibilants\t" + util::join(std::vector<std::string>(sibilants_.begin(), sibilants_.end()), " ") + "\n";
    }
    return out;
}

bool Alphabet::contains(std::string_view letter) const {
    return std::find(letters_.begin(), letters_.end(), letter) != letters_.end();
}

bool Alphabet::is_sibilant(std::string_view letter) const {
    return sibilants_.count(std::string(letter)) != 0;
}

std::vector<std::string> Alphabet::symbols(std::string_view word) const {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t take = 0;
        for (std::size_t len = std::min(longest_symbol_, word.size() - i); len > 0; --len) {
            if (to_base_.find(word.substr(i, len)) != to_base_.end()) {
                take = len;
                break;
            }
        }
        if (take == 0) {
            take = std::min(utf8_length(static_cast<unsigned char>(word[i])), word.size() - i);
        }
        out.emplace_back(word.substr(i, take));
        i += take;
    }
    return out;
}

std::string Alphabet::base_of(std::string_view symbol) const {
    auto it = to_base_.find(symbol);
    return it == to_base_.end() ? std::string(symbol) : it->second;
}

std::string Alphabet::definalize(std::string_view word) const {
    std::string out;
    for (const auto& s : symbols(word)) out += base_of(s);
    return out;
}

std::string Alphabet::finalize(std::string_view word) const {
    auto syms = symbols(word);
    if (syms.empty()) return {};
    auto it = final_forms_.find(base_of(syms.back()));
    if (it != final_forms_.end()) syms.back() = it->second;
    std::string out;
    for (const auto& s : syms) out += s;
    return out;
}

std::string Alphabet::normalize(std::string_view word) const {
    return finalize(definalize(word));
}

}  // namespace denominal
