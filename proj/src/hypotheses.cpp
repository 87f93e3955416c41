#include "denominal/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "denominal/error.hpp"
#include "denominal/kernels.hpp"
#include "denominal/reduction.hpp"
#include "denominal/special.hpp"
#include "denominal/util.hpp"

namespace denominal {

double cosine_similarity(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vectors of length " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
    }
    double su = 0, sv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        su = std::max(su, std::abs(u[i]));
        sv = std::max(sv, std::abs(v[i]));
    }
    if (su == 0 || sv == 0) throw Error(ErrorKind::ZeroVector, "cosine of a zero vector");
    // components scaled by the largest magnitude
    double uv = 0, uu = 0, vv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double a = u[i] / su, b = v[i] / sv;
        uv += a * b;
        uu += a * a;
        vv += b * b;
    }
    return std::clamp(uv / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

SimilarityRecord make_record(std::string point_id, double s_denom, std::vector<double> s_root) {
    if (s_root.empty()) throw Error(ErrorKind::EmptySample, point_id + ": no root-verb similarities");
    SimilarityRecord r;
    r.point_id = std::move(point_id);
    r.s_denom = s_denom;
    r.mean_s_root = std::accumulate(s_root.begin(), s_root.end(), 0.0) / static_cast<double>(s_root.size());
    r.max_s_root = *std::max_element(s_root.begin(), s_root.end());
    // The mean of k equal values can round above their max.
    r.mean_s_root = std::min(r.mean_s_root, r.max_s_root);
    r.s_root = std::move(s_root);
    r.d_h1 = r.s_denom - r.mean_s_root;
    r.d_h2 = r.s_denom - r.max_s_root;
    return r;
}

std::vector<SimilarityRecord> similarity_records(const std::vector<DataPoint>& points, const EmbeddingSpace& space) {
    auto vec = [&](const DataPoint& p, const std::string& token) {
        auto v = space.lookup(token);
        if (!v) throw Error(ErrorKind::InvalidDataPoint, p.id() + ": '" + token + "' has no vector");
        return *v;
    };
    std::vector<SimilarityRecord> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        const auto noun = vec(p, p.noun_lookup_form);
        std::vector<double> s_root;
        for (const auto& v : p.root_verbs) s_root.push_back(cosine_similarity(noun, vec(p, v.text)));
        out.push_back(make_record(p.id(), cosine_similarity(noun, vec(p, p.denominal.text)), std::move(s_root)));
    }
    return out;
}

const char* to_string(TestMethod method) { return method == TestMethod::Exact ? "exact" : "normal_approx"; }

WilcoxonResult wilcoxon_one_tailed(std::span<const double> diffs, std::size_t crossover) {
    std::vector<double> v;
    for (double d : diffs) {
        if (std::isnan(d)) throw Error(ErrorKind::DegenerateInput, "NaN difference");
        if (d != 0) v.push_back(d);
    }
    if (v.empty()) throw Error(ErrorKind::AllZeros, "every paired difference is zero");
    const std::size_t n = v.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return std::fabs(v[a]) < std::fabs(v[b]); });

    // Doubled average ranks are integers: a tie block at sorted positions
    // [lo, hi] has rank (lo + hi + 2) / 2.
    std::vector<std::int64_t> rank2(n);
    double tie_term = 0;
    for (std::size_t lo = 0; lo < n;) {
        std::size_t hi = lo;
        while (hi + 1 < n && std::fabs(v[order[hi + 1]]) == std::fabs(v[order[lo]])) ++hi;
        for (std::size_t i = lo; i <= hi; ++i) rank2[order[i]] = static_cast<std::int64_t>(lo + hi + 2);
        const double t = static_cast<double>(hi - lo + 1);
        tie_term += t * t * t - t;
        lo = hi + 1;
    }
    std::int64_t w2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] > 0) w2 += rank2[i];
    }

    WilcoxonResult r;
    r.n = n;
    r.w_plus = static_cast<double>(w2) / 2;
    if (n <= crossover) {
        r.method = TestMethod::Exact;
        const auto hits = kernels::parallel::sign_enumeration_count(rank2, w2);
        r.p_value = std::ldexp(static_cast<double>(hits), -static_cast<int>(n));
    } else {
        r.method = TestMethod::NormalApprox;
        const double nd = static_cast<double>(n);
        const double mean = nd * (nd + 1) / 4;
        const double var = nd * (nd + 1) * (2 * nd + 1) / 24 - tie_term / 48;
        const double z = (r.w_plus - mean - 0.5) / std::sqrt(var);
        r.p_value = special::normal_upper_tail(z);
    }
    return r;
}

const char* to_string(Magnitude magnitude) {
    switch (magnitude) {
    case Magnitude::Negligible: return "negligible";
    case Magnitude::Small: return "small";
    case Magnitude::Medium: return "medium";
    case Magnitude::Large: return "large";
    }
    return "?";
}

Magnitude magnitude_of(double delta) {
    const double a = std::fabs(delta);
    if (a < 0.147) return Magnitude::Negligible;
    if (a < 0.33) return Magnitude::Small;
    if (a < 0.474) return Magnitude::Medium;
    return Magnitude::Large;
}

CliffsDelta cliffs_delta(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw Error(ErrorKind::EmptySample, "Cliff's delta needs two non-empty samples");
    const auto counts = kernels::parallel::dominance_counts(a, b);
    CliffsDelta out;
    out.numerator = counts.greater - counts.less;
    out.pairs = static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size());
    out.delta = static_cast<double>(out.numerator) / static_cast<double>(out.pairs);
    out.magnitude = magnitude_of(out.delta);
    return out;
}

LeveneResult levene_test(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) throw Error(ErrorKind::InsufficientData, "Levene test needs 2+ values per group");
    auto deviations = [](std::span<const double> x) {
        const double m = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
        std::vector<double> z;
        for (double v : x) z.push_back(std::fabs(v - m));
        return z;
    };
    const auto za = deviations(a), zb = deviations(b);
    const double na = static_cast<double>(za.size()), nb = static_cast<double>(zb.size());
    const double ma = std::accumulate(za.begin(), za.end(), 0.0) / na;
    const double mb = std::accumulate(zb.begin(), zb.end(), 0.0) / nb;
    const double grand = (ma * na + mb * nb) / (na + nb);
    const double between = na * (ma - grand) * (ma - grand) + nb * (mb - grand) * (mb - grand);
    double within = 0;
    for (double z : za) within += (z - ma) * (z - ma);
    for (double z : zb) within += (z - mb) * (z - mb);
    const double d2 = na + nb - 2;

    LeveneResult r;
    if (between == 0) return r;
    if (within == 0) {
        r.statistic = INFINITY;
        r.p_value = 0;
        return r;
    }
    r.statistic = d2 * between / within;
    r.p_value = special::f_upper_tail(r.statistic, 1, d2);
    return r;
}

const char* to_string(Hypothesis h) { return h == Hypothesis::H1 ? "H1" : "H2"; }

std::string SuiteReport::points_csv() const {
    std::string out = "point_id,s_denom,k,mean_s_root,max_s_root,d_h1,d_h2\n";
    for (const auto& r : records) {
        out += r.point_id + "," + util::format_double(r.s_denom) + "," + std::to_string(r.s_root.size()) + "," +
               util::format_double(r.mean_s_root) + "," + util::format_double(r.max_s_root) + "," +
               util::format_double(r.d_h1) + "," + util::format_double(r.d_h2) + "\n";
    }
    return out;
}

std::string SuiteReport::summary_rows() const {
    std::string out;
    for (const auto* t : {&h1, &h2}) {
        out += label + "," + to_string(t->hypothesis) + "," + std::to_string(t->n) + "," +
               util::format_double(t->p_value, 10) + "," + util::format_double(t->cliffs_delta, 10) + "," +
               to_string(t->magnitude) + "," + util::format_double(t->levene_p, 10) + "," + to_string(t->method) + "\n";
    }
    return out;
}

namespace {

TestResult run_test(Hypothesis h, const std::vector<SimilarityRecord>& records, std::size_t crossover) {
    std::vector<double> diffs, denom, aggregate;
    for (const auto& r : records) {
        diffs.push_back(h == Hypothesis::H1 ? r.d_h1 : r.d_h2);
        denom.push_back(r.s_denom);
        aggregate.push_back(h == Hypothesis::H1 ? r.mean_s_root : r.max_s_root);
    }
    TestResult t;
    t.hypothesis = h;
    t.n = records.size();
    const auto w = wilcoxon_one_tailed(diffs, crossover);
    t.p_value = w.p_value;
    t.w_plus = w.w_plus;
    t.method = w.method;
    const auto cd = cliffs_delta(denom, aggregate);
    t.cliffs_delta = cd.delta;
    t.magnitude = cd.magnitude;
    t.levene_p = levene_test(denom, aggregate).p_value;
    return t;
}

}  // namespace

SuiteReport run_suite(const std::vector<DataPoint>& points, const EmbeddingSpace& space, const SuiteConfig& config) {
    std::vector<DataPoint> active;
    for (const auto& p : points) {
        if (p.status != ReviewStatus::Discarded) active.push_back(p);
    }
    SuiteReport report;
    report.label = space.label();
    report.coverage = coverage_report(active, space);
    const auto& kept = report.coverage.points;
    if (kept.size() < std::max<std::size_t>(config.min_n, 1)) {
        throw Error(ErrorKind::TooFewPoints, std::to_string(kept.size()) + " points have vectors in " + space.label() +
                                                 ", need " + std::to_string(std::max<std::size_t>(config.min_n, 1)));
    }

    // PCA population: every distinct word form of the covered dataset.
    std::vector<std::string> tokens;
    std::map<std::string, std::size_t> index;
    auto add = [&](const std::string& t) {
        if (index.emplace(t, tokens.size()).second) tokens.push_back(t);
    };
    for (const auto& p : kept) {
        add(p.noun_lookup_form);
        add(p.denominal.text);
        for (const auto& v : p.root_verbs) add(v.text);
    }
    Matrix rows(tokens.size(), space.dim());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto v = *space.lookup(tokens[i]);
        std::copy(v.begin(), v.end(), &rows.data[i * space.dim()]);
    }
    const auto reduced = reduce(rows, config.force_dim);
    report.original_dim = space.dim();
    report.reduced_dim = reduced.dim;

    EmbeddingSpace reduced_space(reduced.dim, space.label());
    for (std::size_t i = 0; i < tokens.size(); ++i) reduced_space.add(tokens[i], reduced.rows.row(i));

    report.records = similarity_records(kept, reduced_space);
    report.h1 = run_test(Hypothesis::H1, report.records, config.crossover);
    report.h2 = run_test(Hypothesis::H2, report.records, config.crossover);
    return report;
}

}  // namespace denominal
