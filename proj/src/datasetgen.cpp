#include "denominal/datasetgen.hpp"

#include <algorithm>
#include <tuple>

#include "denominal/error.hpp"
#include "denominal/util.hpp"

namespace denominal {

Corpus ingest_corpus(std::string_view text, const Alphabet& alphabet, const CorpusConfig& config) {
    Corpus corpus;
    const std::size_t needed = std::max(config.surface_column, config.pos_column) + 1;
    std::size_t tokens = 0;
    auto lines = util::split(text, '\n');
    for (std::size_t n = 0; n < lines.size(); ++n) {
        std::string line = lines[n];
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (util::trim(line).empty() || line.front() == '#') continue;
        auto cols = util::split(line, config.separator);
        if (cols.size() < needed) {
            throw Error(ErrorKind::MalformedLine,
                        "expected at least " + std::to_string(needed) + " columns, got " + std::to_string(cols.size()),
                        n + 1);
        }
        const std::string surface(util::trim(cols[config.surface_column]));
        const std::string tag(util::trim(cols[config.pos_column]));
        if (surface.empty()) throw Error(ErrorKind::MalformedLine, "empty token", n + 1);
        const auto token = alphabet.normalize(surface);
        ++tokens;
        ++corpus.token_counts[token];
        if (config.noun_tags.count(tag)) corpus.nouns.insert(token);
        if (config.verb_tags.count(tag)) corpus.verbs.insert(token);
    }
    if (tokens == 0) throw Error(ErrorKind::EmptyCorpus, "corpus has no tokens");
    return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, const Alphabet& alphabet, const CorpusConfig& config) {
    return ingest_corpus(util::read_file(path), alphabet, config);
}

const char* to_string(ReviewStatus status) {
    switch (status) {
    case ReviewStatus::Auto: return "auto";
    case ReviewStatus::Kept: return "kept";
    case ReviewStatus::Discarded: return "discarded";
    }
    return "?";
}

std::string DataPoint::id() const { return noun.text + "/" + denominal.text; }

void DataPoint::check() const {
    auto fail = [&](const std::string& what) { throw Error(ErrorKind::InvalidDataPoint, id() + ": " + what); };
    if (root_verbs.empty() || root_verbs.size() > kMaxRootVerbs) fail("needs 1-5 root verbs");
    if (noun.text.empty() || noun_lookup_form.empty() || denominal.text.empty()) fail("empty surface form");
    if (noun.analysis.root != root) fail("noun is not analysed on the point's root");
    if (denominal.analysis.root.size() != root.size() + 1) fail("denominal root must add one consonant");
    for (const auto& v : root_verbs) {
        if (v.text.empty()) fail("empty root verb");
        if (v.analysis.root != root) fail("root verb " + v.text + " is not analysed on the point's root");
        if (v.text == denominal.text) fail("denominal repeated among root verbs");
    }
}

namespace {

bool attested(const Corpus& corpus, const Alphabet& alphabet, const Root& root, const Template& tmpl,
              const std::string& infinitive) {
    if (corpus.verbs.count(alphabet.normalize(infinitive))) return true;
    for (const auto& [tag, form] : inflect(alphabet, root, tmpl)) {
        if (corpus.verbs.count(alphabet.normalize(form))) return true;
    }
    return false;
}

auto sort_key(const DataPoint& p) {
    return std::tie(p.noun.text, p.denominal.analysis.template_id, p.noun.analysis.template_id, p.root);
}

}  // namespace

GenerationResult generate_candidates(const Corpus& corpus, const TemplateInventory& inventory,
                                     const VocabularyCheck& in_vocabulary) {
    const auto& alphabet = inventory.alphabet();
    const auto root_templates = inventory.root_verb_templates();
    GenerationResult result;
    std::set<std::pair<std::string, std::string>> dropped;

    for (const auto& word : corpus.nouns) {
        for (const auto* tmpl : inventory.nominal_templates()) {
            for (const auto& root : extract_roots(alphabet, word, *tmpl)) {
                auto noun = apply_template(alphabet, root, *tmpl);
                const auto* variant = tmpl->variant_for(static_cast<int>(root.size()));
                auto lookup = variant->plural ? pluralize(alphabet, noun, *tmpl) : noun.text;
                if (root.size() + 1 > 4) continue;
                const auto augmented = denominal_root(alphabet, noun, *tmpl);

                std::vector<SurfaceForm> verbs;
                for (const auto* rv : root_templates) {
                    if (!rv->variant_for(static_cast<int>(root.size()))) continue;
                    auto verb = apply_template(alphabet, root, *rv);
                    const bool seen = std::any_of(verbs.begin(), verbs.end(),
                                                  [&](const SurfaceForm& v) { return v.text == verb.text; });
                    if (seen) continue;
                    if (attested(corpus, alphabet, root, *rv, verb.text) || (in_vocabulary && in_vocabulary(verb.text))) {
                        verbs.push_back(std::move(verb));
                    }
                }

                for (const auto& target_id : tmpl->denominal_targets) {
                    const auto& target = inventory.get(target_id);
                    if (!target.variant_for(static_cast<int>(augmented.size()))) continue;
                    DataPoint p;
                    p.noun = noun;
                    p.noun_lookup_form = lookup;
                    p.denominal = apply_template(alphabet, augmented, target);
                    p.root = root;
                    for (const auto& v : verbs) {
                        if (v.text != p.denominal.text) p.root_verbs.push_back(v);
                    }
                    if (p.root_verbs.empty()) {
                        dropped.emplace(p.noun.text, p.denominal.text);
                        continue;
                    }
                    p.check();
                    result.points.push_back(std::move(p));
                }
            }
        }
    }

    std::sort(result.points.begin(), result.points.end(),
              [](const DataPoint& a, const DataPoint& b) { return sort_key(a) < sort_key(b); });
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<DataPoint> unique;
    for (auto& p : result.points) {
        if (seen.emplace(p.noun.text, p.denominal.text).second) unique.push_back(std::move(p));
    }
    result.points = std::move(unique);
    for (const auto& key : dropped) {
        if (!seen.count(key)) ++result.n_without_root_verbs;
    }
    return result;
}

std::string FunnelReport::to_text() const {
    std::string out;
    out += "candidates\t" + std::to_string(n_candidates) + "\n";
    out += "auto_rejected\t" + std::to_string(n_auto_rejected) + "\n";
    out += "for_review\t" + std::to_string(n_for_review) + "\n";
    out += "final\t" + std::to_string(n_final) + "\n";
    out += "without_root_verbs\t" + std::to_string(n_without_root_verbs) + "\n";
    return out;
}

AttestationResult attestation_filter(const std::vector<DataPoint>& points, const Corpus& corpus,
                                     const TemplateInventory& inventory) {
    AttestationResult out;
    for (const auto& p : points) {
        const auto& tmpl = inventory.get(p.denominal.analysis.template_id);
        if (attested(corpus, inventory.alphabet(), p.denominal.analysis.root, tmpl, p.denominal.text)) {
            out.kept.push_back(p);
        } else {
            out.rejected.push_back(p);
        }
    }
    out.report.n_candidates = points.size();
    out.report.n_auto_rejected = out.rejected.size();
    out.report.n_for_review = out.kept.size();
    return out;
}

namespace {

void check_field(const std::string& field, bool in_list) {
    const bool bad = field.empty() || field.find_first_of(in_list ? "\t\n\r," : "\t\n\r") != std::string::npos;
    if (bad) throw Error(ErrorKind::MalformedReviewFile, "field '" + field + "' cannot be written to a TSV row");
}

}  // namespace

std::string format_review(const std::vector<DataPoint>& points) {
    std::string out = std::string(kReviewHeader) + "\n";
    for (const auto& p : points) {
        std::vector<std::string> verbs;
        for (const auto& v : p.root_verbs) {
            check_field(v.text, true);
            verbs.push_back(v.text);
        }
        const auto status = p.status == ReviewStatus::Discarded ? ReviewStatus::Discarded : ReviewStatus::Kept;
        std::vector<std::string> row{p.noun.text,     p.noun.analysis.template_id,      p.noun_lookup_form,
                                     p.root.dotted(), p.denominal.text,                 p.denominal.analysis.template_id,
                                     util::join(verbs, ","), to_string(status)};
        for (const auto& f : row) check_field(f, false);
        out += util::join(row, "\t") + "\n";
    }
    return out;
}

void export_for_review(const std::vector<DataPoint>& points, const std::filesystem::path& path) {
    util::write_file(path, format_review(points));
}

namespace {

DataPoint parse_row(const std::vector<std::string>& cols, const TemplateInventory* inventory) {
    DataPoint p;
    p.root = Root::parse(cols[3]);
    p.noun = {cols[0], {cols[1], p.root}};
    p.noun_lookup_form = cols[2];
    p.denominal.text = cols[4];
    p.denominal.analysis.template_id = cols[5];

    if (cols[7] == "kept") {
        p.status = ReviewStatus::Kept;
    } else if (cols[7] == "discarded") {
        p.status = ReviewStatus::Discarded;
    } else {
        throw Error(ErrorKind::MalformedReviewFile, "status must be kept or discarded, got '" + cols[7] + "'");
    }

    const Template* noun_tmpl = inventory ? inventory->find(cols[1]) : nullptr;
    const Template* denom_tmpl = inventory ? inventory->find(cols[5]) : nullptr;
    if (noun_tmpl && denom_tmpl) {
        const auto& alphabet = inventory->alphabet();
        if (apply_template(alphabet, p.root, *noun_tmpl).text != p.noun.text) {
            throw Error(ErrorKind::MalformedReviewFile, "noun " + p.noun.text + " is not " + cols[1] + " of " + cols[3]);
        }
        auto augmented = denominal_root(alphabet, p.noun, *noun_tmpl);
        if (apply_template(alphabet, augmented, *denom_tmpl).text != p.denominal.text) {
            throw Error(ErrorKind::MalformedReviewFile,
                        "denominal " + p.denominal.text + " is not " + cols[5] + " of " + augmented.dotted());
        }
        p.denominal.analysis.root = std::move(augmented);
    } else {
        auto consonants = p.root.consonants();
        consonants.push_back(kUnknownTemplatic);
        p.denominal.analysis.root = Root(std::move(consonants));
    }

    for (const auto& text : util::split(cols[6], ',')) {
        SurfaceForm verb{text, {"", p.root}};
        if (inventory) {
            for (const auto* rv : inventory->root_verb_templates()) {
                if (!rv->variant_for(static_cast<int>(p.root.size()))) continue;
                if (apply_template(inventory->alphabet(), p.root, *rv).text == text) {
                    verb.analysis.template_id = rv->id;
                    break;
                }
            }
        }
        p.root_verbs.push_back(std::move(verb));
    }
    p.check();
    return p;
}

}  // namespace

std::vector<DataPoint> parse_review(std::string_view text, const TemplateInventory* inventory) {
    std::vector<DataPoint> points;
    std::set<std::string> ids;
    bool header = false;
    auto lines = util::split(text, '\n');
    for (std::size_t n = 0; n < lines.size(); ++n) {
        std::string line = lines[n];
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t lineno = n + 1;
        if (!header) {
            if (line != kReviewHeader) throw Error(ErrorKind::MalformedReviewFile, "missing or wrong header row", lineno);
            header = true;
            continue;
        }
        auto cols = util::split(line, '\t');
        if (cols.size() != 8) {
            throw Error(ErrorKind::MalformedReviewFile, "expected 8 columns, got " + std::to_string(cols.size()), lineno);
        }
        try {
            auto p = parse_row(cols, inventory);
            if (!ids.insert(p.id()).second) throw Error(ErrorKind::MalformedReviewFile, "duplicate point " + p.id());
            points.push_back(std::move(p));
        } catch (const Error& e) {
            throw Error(ErrorKind::MalformedReviewFile, e.what(), lineno);
        }
    }
    if (!header) throw Error(ErrorKind::MalformedReviewFile, "missing header row", 1);
    return points;
}

std::vector<DataPoint> import_review(const std::filesystem::path& path, const TemplateInventory* inventory) {
    return parse_review(util::read_file(path), inventory);
}

}  // namespace denominal
