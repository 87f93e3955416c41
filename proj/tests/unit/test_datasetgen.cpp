#include <gtest/gtest.h>

#include <algorithm>

#include "denominal/datasetgen.hpp"
#include "denominal/error.hpp"
#include "denominal/util.hpp"
#include "support.hpp"

using namespace denominal;
using test_support::translit;

namespace {

const Alphabet& latin() { return translit().alphabet(); }

Corpus corpus_of(const std::string& text) { return ingest_corpus(text, latin()); }

// maxfev / xefbon / taklit with verbs attesting some root and denominal forms.
const char* kLatinCorpus =
    "maxfev\tN\n"
    "xefbon\tN\n"
    "taklit\tN\n"
    "xifev\tV\n"        // leCaCeC past of x.f.v
    "lixfov\tV\n"       // liCCoC
    "mixfev\tV\n"       // lemaCCeC past
    "hitxafben\tV\n"    // lehitCaCCen past, b written for v
    "hiklit\tV\n";      // lehaCCiC past of k.l.t

const DataPoint* find(const std::vector<DataPoint>& points, const std::string& denominal) {
    for (const auto& p : points) {
        if (p.denominal.text == denominal) return &p;
    }
    return nullptr;
}

}  // namespace

TEST(Corpus, SplitsByTag) {
    auto c = corpus_of("a\tN\nb\tV\nd\tN\n");
    EXPECT_EQ(c.nouns.size(), 2u);
    EXPECT_EQ(c.verbs.size(), 1u);
}

TEST(Corpus, CountsDuplicates) {
    auto c = corpus_of("maxfev\tN\nmaxfev\tN\nmaxfev\tV\n");
    EXPECT_EQ(c.token_counts.at("maxfev"), 3u);
    EXPECT_EQ(c.nouns.size(), 1u);
    EXPECT_EQ(c.verbs.size(), 1u);
}

TEST(Corpus, NormalizesTokens) {
    const auto& heb = test_support::hebrew().alphabet();
    auto c = ingest_corpus("מלכ\tN\n", heb);
    EXPECT_TRUE(c.nouns.count("מלך"));
}

TEST(Corpus, ConfigurableColumns) {
    CorpusConfig cfg;
    cfg.surface_column = 1;
    cfg.pos_column = 2;
    cfg.noun_tags = {"NN", "NNP"};
    cfg.verb_tags = {"VB"};
    auto c = ingest_corpus("1\tmaxfev\tNN\n2\txifev\tVB\n3\txefbon\tNNP\n", latin(), cfg);
    EXPECT_EQ(c.nouns, (std::set<std::string>{"maxfev", "xefvon"}));
    EXPECT_EQ(c.verbs, (std::set<std::string>{"xifev"}));
}

TEST(Corpus, Errors) {
    try {
        corpus_of("a\tN\n# comment\nlonely\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MalformedLine);
        EXPECT_EQ(e.line(), 3u);
    }
    try {
        corpus_of("\n# nothing\n\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EmptyCorpus);
    }
}

TEST(Generate, ComputerNoun) {
    auto result = generate_candidates(corpus_of(kLatinCorpus), translit());
    const auto* p = find(result.points, "lemaxfev");
    ASSERT_NE(p, nullptr);
    EXPECT_EQ(p->noun.text, "maxfev");
    EXPECT_EQ(p->root, Root({"x", "f", "v"}));
    EXPECT_EQ(p->denominal.analysis.root, Root({"m", "x", "f", "v"}));
    std::vector<std::string> verbs;
    for (const auto& v : p->root_verbs) verbs.push_back(v.text);
    EXPECT_EQ(verbs, (std::vector<std::string>{"lixfov", "lexafev"}));
    EXPECT_EQ(p->status, ReviewStatus::Auto);
}

TEST(Generate, BillNounGivesTwoPoints) {
    auto result = generate_candidates(corpus_of(kLatinCorpus), translit());
    EXPECT_NE(find(result.points, "lexafven"), nullptr);
    EXPECT_NE(find(result.points, "lehitxafven"), nullptr);
}

TEST(Generate, PluralLookupForTaCCiC) {
    auto result = generate_candidates(corpus_of(kLatinCorpus), translit());
    const auto* p = find(result.points, "letaklet");
    ASSERT_NE(p, nullptr);
    EXPECT_EQ(p->noun_lookup_form, "taklitim");
    EXPECT_EQ(find(result.points, "lemaxfev")->noun_lookup_form, "maxfev");
}

TEST(Generate, EmptyCorpusGivesNothing) {
    EXPECT_TRUE(generate_candidates(Corpus{}, translit()).points.empty());
}

TEST(Generate, NoAttestedRootVerbIsCounted) {
    auto result = generate_candidates(corpus_of("maxfev\tN\n"), translit());
    EXPECT_TRUE(result.points.empty());
    EXPECT_EQ(result.n_without_root_verbs, 2u);
}

TEST(Generate, VocabularyAttestsRootVerbs) {
    auto result = generate_candidates(corpus_of("maxfev\tN\n"), translit(),
                                      [](const std::string& t) { return t == "lehaxfiv"; });
    ASSERT_EQ(result.points.size(), 2u);
    EXPECT_EQ(result.points[0].root_verbs.size(), 1u);
    EXPECT_EQ(result.points[0].root_verbs[0].text, "lehaxfiv");
}

TEST(Generate, SortedDeterministicAndInvariant) {
    auto a = generate_candidates(corpus_of(kLatinCorpus), translit());
    auto b = generate_candidates(corpus_of(kLatinCorpus), translit());
    EXPECT_EQ(a.points, b.points);
    for (std::size_t i = 1; i < a.points.size(); ++i) {
        const auto& x = a.points[i - 1];
        const auto& y = a.points[i];
        EXPECT_LE(std::tie(x.noun.text, x.denominal.analysis.template_id),
                  std::tie(y.noun.text, y.denominal.analysis.template_id));
    }
    for (const auto& p : a.points) {
        EXPECT_NO_THROW(p.check());
        EXPECT_EQ(p.denominal.analysis.root, denominal_root(latin(), p.noun, translit().get(p.noun.analysis.template_id)));
        for (const auto& v : p.root_verbs) EXPECT_NE(v.text, p.denominal.text);
    }
}

// maCCeC and miCCaC share a spelling in unvocalized script: one point per
// (noun, denominal) survives.
TEST(Generate, DuplicatesCollapse) {
    const auto& heb = test_support::hebrew();
    auto corpus = ingest_corpus("מחשב\tN\nלחשוב\tV\n", heb.alphabet());
    auto result = generate_candidates(corpus, heb);
    std::set<std::pair<std::string, std::string>> keys;
    for (const auto& p : result.points) EXPECT_TRUE(keys.emplace(p.noun.text, p.denominal.text).second);
    EXPECT_EQ(result.points.size(), 2u);
    EXPECT_EQ(result.points[0].noun.analysis.template_id, "maCCeC");
}

TEST(Attestation, KeepsInflectedDenominals) {
    const auto corpus = corpus_of(kLatinCorpus);
    auto gen = generate_candidates(corpus, translit());
    auto r = attestation_filter(gen.points, corpus, translit());
    EXPECT_EQ(r.report.n_candidates, r.report.n_auto_rejected + r.report.n_for_review);
    EXPECT_EQ(r.kept.size() + r.rejected.size(), gen.points.size());
    EXPECT_NE(find(r.kept, "lemaxfev"), nullptr);      // past "mixfev" attested
    EXPECT_NE(find(r.kept, "lehitxafven"), nullptr);   // past written with b
    EXPECT_NE(find(r.rejected, "lehitmaxfev"), nullptr);
    EXPECT_NE(find(r.rejected, "lexafven"), nullptr);
}

TEST(Review, ExportImportIdentity) {
    const auto corpus = corpus_of(kLatinCorpus);
    auto points = generate_candidates(corpus, translit()).points;
    ASSERT_FALSE(points.empty());
    auto text = format_review(points);
    auto back = parse_review(text, &translit());
    for (auto& p : points) p.status = ReviewStatus::Kept;
    EXPECT_EQ(back, points);
    EXPECT_EQ(format_review(back), text);
}

TEST(Review, HeaderIsBitExact) {
    auto text = format_review({});
    EXPECT_EQ(text, "noun\tnoun_template\tnoun_lookup_form\troot\tdenominal\tdenominal_template\troot_verbs\tstatus\n");
}

TEST(Review, DiscardedRowsAreKeptAsSuch) {
    auto points = generate_candidates(corpus_of(kLatinCorpus), translit()).points;
    auto text = format_review(points);
    auto pos = text.find("\tkept\n");
    text.replace(pos, 6, "\tdiscarded\n");
    auto back = parse_review(text, &translit());
    EXPECT_EQ(back[0].status, ReviewStatus::Discarded);
    EXPECT_EQ(std::count_if(back.begin(), back.end(), [](const DataPoint& p) { return p.status == ReviewStatus::Kept; }),
              static_cast<long>(points.size() - 1));
}

TEST(Review, RejectsBadFiles) {
    auto points = generate_candidates(corpus_of(kLatinCorpus), translit()).points;
    auto text = format_review(points);
    auto expect_line = [](const std::string& t, std::size_t line) {
        try {
            parse_review(t, &translit());
            FAIL() << t;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::MalformedReviewFile);
            EXPECT_EQ(e.line(), line);
        }
    };
    auto edited = text;
    edited.replace(edited.find("\tkept\n"), 6, "\tmaybe\n");
    expect_line(edited, 2);
    expect_line("noun\tstatus\n", 1);
    expect_line(std::string(kReviewHeader) + "\nmaxfev\tmaCCeC\n", 2);
    // surface string inconsistent with its template and root
    expect_line(std::string(kReviewHeader) + "\nmaxfev\tmaCCeC\tmaxfev\tk.t.v\tlemaxfev\tlemaCCeC\tlixfov\tkept\n", 2);
    expect_line(std::string(kReviewHeader) + "\nmaxfev\tmaCCeC\tmaxfev\tx.f.v\tlemaxfev\tlemaCCeC\t\tkept\n", 2);
}

TEST(Review, WithoutInventoryUsesPlaceholder) {
    auto text = std::string(kReviewHeader) + "\nr1_noun\tsynth_noun\tr1_noun\tr.1\tr1_denom\tsynth_denominal\tr1_v0,r1_v1\tkept\n";
    auto points = parse_review(text);
    ASSERT_EQ(points.size(), 1u);
    EXPECT_EQ(points[0].denominal.analysis.root, Root({"r", "1", "+"}));
    EXPECT_EQ(points[0].root_verbs.size(), 2u);
    EXPECT_EQ(format_review(points), text);
}

TEST(DataPoint, InvariantViolations) {
    const Root r({"x", "f", "v"});
    DataPoint p;
    p.root = r;
    p.noun = {"maxfev", {"maCCeC", r}};
    p.noun_lookup_form = "maxfev";
    p.denominal = {"lemaxfev", {"lemaCCeC", Root({"m", "x", "f", "v"})}};
    EXPECT_THROW(p.check(), Error);  // no root verbs
    p.root_verbs = {{"lixfov", {"liCCoC", r}}};
    EXPECT_NO_THROW(p.check());
    p.root_verbs.push_back({"lemaxfev", {"x", r}});
    EXPECT_THROW(p.check(), Error);
    p.root_verbs.pop_back();
    for (int i = 0; i < 5; ++i) p.root_verbs.push_back({"v" + std::to_string(i), {"", r}});
    EXPECT_THROW(p.check(), Error);
}

TEST(Funnel, Text) {
    FunnelReport f{10, 7, 3, 2, 1};
    EXPECT_EQ(f.to_text(), "candidates\t10\nauto_rejected\t7\nfor_review\t3\nfinal\t2\nwithout_root_verbs\t1\n");
}
