#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "denominal/datasetgen.hpp"
#include "denominal/error.hpp"
#include "denominal/hypotheses.hpp"
#include "denominal/inventory.hpp"
#include "denominal/reduction.hpp"
#include "denominal/synthgeom.hpp"
#include "denominal/util.hpp"
#include "denominal/vectors.hpp"
#include "svg.hpp"

namespace fs = std::filesystem;

namespace denominal::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string inventory;
    std::string alphabet;
    std::string corpus;
    std::vector<std::string> vectors;
    std::string dataset;
    std::string out;
    std::string format = "auto";
    std::optional<std::size_t> force_dim;
    std::uint64_t seed = 1;
    std::size_t min_n = 5;
    std::size_t crossover = 20;
    // corpus layout
    std::size_t surface_column = 0;
    std::size_t pos_column = 1;
    std::vector<std::string> noun_tags{"N"};
    std::vector<std::string> verb_tags{"V"};
    // synth
    int n_roots = 60;
    int k_verbs = 4;
    int dim = 50;
    double region_radius = 0.5;
    double denominal_noise = 0.1;
};

struct VectorSource {
    std::string label;
    fs::path path;
};

void require(const std::string& value, const char* flag) {
    if (value.empty()) throw UsageError(std::string("missing required option ") + flag);
}

std::vector<VectorSource> vector_sources(const Options& o) {
    std::vector<VectorSource> out;
    for (const auto& item : o.vectors) {
        VectorSource s;
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            s.path = item;
            s.label = s.path.stem().string();
        } else {
            s.label = item.substr(0, eq);
            s.path = item.substr(eq + 1);
        }
        if (s.label.empty() || s.path.empty()) throw UsageError("--vectors expects label=path, got '" + item + "'");
        if (s.label.find_first_of(",/\\ \t") != std::string::npos) {
            throw UsageError("vector label '" + s.label + "' may not contain separators or spaces");
        }
        for (const auto& prev : out) {
            if (prev.label == s.label) throw UsageError("duplicate vector label " + s.label);
        }
        out.push_back(std::move(s));
    }
    return out;
}

VectorFormat vector_format(const Options& o) {
    auto f = parse_vector_format(o.format);
    if (!f) throw UsageError("unknown vector format '" + o.format + "' (auto, word2vec, glove)");
    return *f;
}

std::optional<TemplateInventory> load_inventory(const Options& o) {
    if (o.inventory.empty()) return std::nullopt;
    return TemplateInventory::load(o.inventory, o.alphabet);
}

std::optional<Alphabet> normalizer(const Options& o, const std::optional<TemplateInventory>& inv) {
    if (inv) return inv->alphabet();
    if (!o.alphabet.empty()) return Alphabet::load(o.alphabet);
    return std::nullopt;
}

EmbeddingSpace load_space(const VectorSource& src, const Options& o, const std::optional<Alphabet>& alphabet) {
    auto space = load_vectors(src.path, vector_format(o), src.label);
    if (alphabet) space.set_normalizer(*alphabet);
    return space;
}

// Writes all files only after every one of them has been produced.
void write_all(const fs::path& dir, const std::vector<std::pair<std::string, std::string>>& files) {
    fs::create_directories(dir);
    for (const auto& [name, content] : files) util::write_file(dir / name, content);
}

int cmd_gen(const Options& o, std::ostream& out) {
    require(o.inventory, "--inventory");
    require(o.corpus, "--corpus");
    require(o.out, "--out");
    vector_format(o);
    const auto inv = *load_inventory(o);
    inv.validate_for_generation();
    CorpusConfig cc;
    cc.surface_column = o.surface_column;
    cc.pos_column = o.pos_column;
    cc.noun_tags = {o.noun_tags.begin(), o.noun_tags.end()};
    cc.verb_tags = {o.verb_tags.begin(), o.verb_tags.end()};
    const auto corpus = load_corpus(o.corpus, inv.alphabet(), cc);

    std::vector<EmbeddingSpace> spaces;
    for (const auto& src : vector_sources(o)) spaces.push_back(load_space(src, o, inv.alphabet()));
    VocabularyCheck vocab;
    if (!spaces.empty()) {
        vocab = [&](const std::string& token) {
            for (const auto& s : spaces) {
                if (s.contains(token)) return true;
            }
            return false;
        };
    }
    const auto generated = generate_candidates(corpus, inv, vocab);
    auto filtered = attestation_filter(generated.points, corpus, inv);
    filtered.report.n_without_root_verbs = generated.n_without_root_verbs;

    write_all(o.out, {{"candidates.tsv", format_review(filtered.kept)},
                      {"rejected.tsv", format_review(filtered.rejected)},
                      {"funnel.txt", filtered.report.to_text()}});
    out << filtered.report.to_text();
    return kOk;
}

int cmd_review_export(const Options& o, std::ostream& out) {
    require(o.dataset, "--dataset");
    require(o.out, "--out");
    const auto inv = load_inventory(o);
    const auto points = import_review(o.dataset, inv ? &*inv : nullptr);
    write_all(o.out, {{"review.tsv", format_review(points)}});
    out << "exported " << points.size() << " points for review\n";
    return kOk;
}

int cmd_review_import(const Options& o, std::ostream& out) {
    require(o.dataset, "--dataset");
    require(o.out, "--out");
    const auto inv = load_inventory(o);
    const auto points = import_review(o.dataset, inv ? &*inv : nullptr);
    std::vector<DataPoint> kept;
    for (const auto& p : points) {
        if (p.status == ReviewStatus::Kept) kept.push_back(p);
    }
    FunnelReport report;
    report.n_for_review = points.size();
    report.n_final = kept.size();
    write_all(o.out, {{"dataset.tsv", format_review(kept)}});
    out << "for_review\t" << report.n_for_review << "\nfinal\t" << report.n_final << "\n";
    return kOk;
}

std::vector<DataPoint> read_dataset(const Options& o, const std::optional<TemplateInventory>& inv) {
    require(o.dataset, "--dataset");
    return import_review(o.dataset, inv ? &*inv : nullptr);
}

int cmd_test(const Options& o, std::ostream& out) {
    require(o.out, "--out");
    const auto sources = vector_sources(o);
    if (sources.empty()) throw UsageError("missing required option --vectors");
    vector_format(o);
    const auto inv = load_inventory(o);
    const auto alphabet = normalizer(o, inv);
    const auto points = read_dataset(o, inv);

    SuiteConfig config;
    config.min_n = o.min_n;
    config.crossover = o.crossover;
    config.force_dim = o.force_dim;

    std::vector<std::pair<std::string, std::string>> files;
    std::string summary = std::string(kSummaryHeader) + "\n";
    for (const auto& src : sources) {
        const auto space = load_space(src, o, alphabet);
        const auto report = run_suite(points, space, config);
        summary += report.summary_rows();
        files.emplace_back("points_" + src.label + ".csv", report.points_csv());
        files.emplace_back("coverage_" + src.label + ".tsv", report.coverage.to_tsv());
        out << src.label << ": n=" << report.records.size() << " dim " << report.original_dim << "->"
            << report.reduced_dim << "  H1 p=" << util::format_double(report.h1.p_value, 4)
            << " delta=" << util::format_double(report.h1.cliffs_delta, 3) << " (" << to_string(report.h1.magnitude)
            << ")  H2 p=" << util::format_double(report.h2.p_value, 4)
            << " delta=" << util::format_double(report.h2.cliffs_delta, 3) << " (" << to_string(report.h2.magnitude)
            << ")\n";
        if (report.h2_without_h1(config.alpha)) {
            out << src.label << ": note: H2 is significant while H1 is not\n";
        }
    }
    files.emplace_back("summary.csv", summary);
    write_all(o.out, files);
    return kOk;
}

int cmd_plot(const Options& o, std::ostream& out) {
    require(o.out, "--out");
    const auto sources = vector_sources(o);
    if (sources.empty()) throw UsageError("missing required option --vectors");
    vector_format(o);
    const auto inv = load_inventory(o);
    const auto alphabet = normalizer(o, inv);
    const auto points = read_dataset(o, inv);

    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& src : sources) {
        const auto space = load_space(src, o, alphabet);
        const auto coverage = coverage_report(points, space);
        std::size_t index = 0;
        for (const auto& p : coverage.points) {
            if (p.status == ReviewStatus::Discarded) continue;
            std::vector<std::pair<std::string, Role>> items{{p.noun_lookup_form, Role::Noun},
                                                            {p.denominal.text, Role::Denominal}};
            for (const auto& v : p.root_verbs) items.emplace_back(v.text, Role::RootVerb);
            if (items.size() < 3) continue;
            Matrix rows(items.size(), space.dim());
            for (std::size_t i = 0; i < items.size(); ++i) {
                const auto v = *space.lookup(items[i].first);
                std::copy(v.begin(), v.end(), &rows.data[i * space.dim()]);
            }
            const auto xy = project2d_cosine_kernel(rows);
            std::vector<PlotPoint> plot;
            for (std::size_t i = 0; i < items.size(); ++i) plot.push_back({items[i].first, items[i].second, xy(i, 0), xy(i, 1)});
            char name[64];
            std::snprintf(name, sizeof name, "%s_point%03zu", src.label.c_str(), index++);
            files.emplace_back(std::string(name) + ".svg", render_svg(src.label + ": " + p.id(), plot));
            files.emplace_back(std::string(name) + ".csv", render_csv(plot));
        }
        out << src.label << ": " << index << " plots\n";
    }
    write_all(o.out, files);
    return kOk;
}

int cmd_synth(const Options& o, std::ostream& out) {
    require(o.out, "--out");
    SynthConfig config;
    config.n_roots = o.n_roots;
    config.k_verbs = o.k_verbs;
    config.dim = o.dim;
    config.region_radius = o.region_radius;
    config.denominal_noise = o.denominal_noise;
    config.seed = o.seed;
    const auto data = generate(config);
    write_all(o.out, {{"dataset.tsv", format_review(data.points)},
                      {"vectors.vec", data.space.to_word2vec_text()},
                      {"synth_meta.txt", config.describe()}});
    out << "wrote " << data.points.size() << " synthetic points\n";
    return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Root-and-pattern dataset generation and embedding-space hypothesis tests"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value configuration file; command-line flags override it");

    Options o;
    app.add_option("--inventory", o.inventory, "template inventory TSV");
    app.add_option("--alphabet", o.alphabet, "alphabet file (default: <inventory stem>.alphabet)");
    app.add_option("--corpus", o.corpus, "tagged corpus, one token per line");
    app.add_option("--vectors", o.vectors, "vector file as label=path (repeatable)");
    app.add_option("--dataset", o.dataset, "dataset / review TSV");
    app.add_option("--out", o.out, "output directory");
    app.add_option("--format", o.format, "vector format: auto, word2vec, glove");
    app.add_option("--force-dim", o.force_dim, "PCA dimension override");
    app.add_option("--seed", o.seed, "seed for synth");
    app.add_option("--min-n", o.min_n, "minimum covered points for test");
    app.add_option("--crossover", o.crossover, "largest n tested by exact Wilcoxon enumeration");
    app.add_option("--surface-column", o.surface_column, "0-based corpus column of the token");
    app.add_option("--pos-column", o.pos_column, "0-based corpus column of the PoS tag");
    app.add_option("--noun-tags", o.noun_tags, "PoS tags read as nouns")->delimiter(',');
    app.add_option("--verb-tags", o.verb_tags, "PoS tags read as verbs")->delimiter(',');
    app.add_option("--n-roots", o.n_roots, "synth: number of roots");
    app.add_option("--k-verbs", o.k_verbs, "synth: root-derived verbs per root");
    app.add_option("--dim", o.dim, "synth: dimension");
    app.add_option("--region-radius", o.region_radius, "synth: angular radius of a root region");
    app.add_option("--denominal-noise", o.denominal_noise, "synth: angular spread of the denominal");

    std::map<std::string, int (*)(const Options&, std::ostream&)> commands{
        {"gen", cmd_gen},       {"review-export", cmd_review_export}, {"review-import", cmd_review_import},
        {"test", cmd_test},     {"plot", cmd_plot},                   {"synth", cmd_synth}};
    const std::map<std::string, std::string> help{
        {"gen", "corpus + inventory -> candidate data points and funnel counts"},
        {"review-export", "write a review TSV for manual curation"},
        {"review-import", "read a curated review TSV and keep the kept points"},
        {"test", "coverage, PCA reduction and H1/H2 tests per vector file"},
        {"plot", "cosine-kernel 2D projection of each data point (SVG + CSV)"},
        {"synth", "synthetic dataset and vectors with planted geometry"}};
    for (const auto& [name, fn] : commands) app.add_subcommand(name, help.at(name))->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    const auto* sub = app.get_subcommands().front();
    try {
        return commands.at(sub->get_name())(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_statistical(e.kind()) ? kStatistical : kDataError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    }
}

}  // namespace denominal::cli
