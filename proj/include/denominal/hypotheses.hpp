#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "denominal/datasetgen.hpp"
#include "denominal/vectors.hpp"

namespace denominal {

/// Cosine of the angle between u and v, clamped to [-1, 1].
/// Throws DimensionMismatch / ZeroVector.
double cosine_similarity(std::span<const double> u, std::span<const double> v);

struct SimilarityRecord {
    std::string point_id;
    double s_denom = 0;
    std::vector<double> s_root;
    double mean_s_root = 0;
    double max_s_root = 0;
    /// s_denom - mean(s_root)
    double d_h1 = 0;
    /// s_denom - max(s_root)
    double d_h2 = 0;
};

SimilarityRecord make_record(std::string point_id, double s_denom, std::vector<double> s_root);

/// One record per point; every token must resolve in `space`.
std::vector<SimilarityRecord> similarity_records(const std::vector<DataPoint>& points, const EmbeddingSpace& space);

enum class TestMethod { Exact, NormalApprox };
const char* to_string(TestMethod method);

struct WilcoxonResult {
    /// Nonzero differences actually ranked.
    std::size_t n = 0;
    double w_plus = 0;
    double p_value = 1;
    TestMethod method = TestMethod::Exact;
};

/// Signed-rank test of "location > 0". Zeros are dropped, ties get average
/// ranks. Exact enumeration of the 2^n sign patterns when n <= crossover,
/// otherwise the normal approximation with tie-corrected variance and a
/// 0.5 continuity correction. Throws AllZeros.
WilcoxonResult wilcoxon_one_tailed(std::span<const double> diffs, std::size_t crossover = 20);

enum class Magnitude { Negligible, Small, Medium, Large };
const char* to_string(Magnitude magnitude);

/// |delta| < 0.147 negligible, < 0.33 small, < 0.474 medium, else large.
Magnitude magnitude_of(double delta);

struct CliffsDelta {
    /// #(a_i > b_j) - #(a_i < b_j)
    std::int64_t numerator = 0;
    /// |a| * |b|
    std::int64_t pairs = 0;
    double delta = 0;
    Magnitude magnitude = Magnitude::Negligible;
};

/// Throws EmptySample.
CliffsDelta cliffs_delta(std::span<const double> a, std::span<const double> b);

struct LeveneResult {
    double statistic = 0;
    double p_value = 1;
};

/// Two-group Levene test on absolute deviations from the group means, F(1, n_a + n_b - 2).
/// Throws InsufficientData unless both groups have at least 2 values.
LeveneResult levene_test(std::span<const double> a, std::span<const double> b);

enum class Hypothesis { H1, H2 };
const char* to_string(Hypothesis h);

struct TestResult {
    Hypothesis hypothesis = Hypothesis::H1;
    std::size_t n = 0;
    double p_value = 1;
    double w_plus = 0;
    double cliffs_delta = 0;
    Magnitude magnitude = Magnitude::Negligible;
    double levene_p = 1;
    TestMethod method = TestMethod::Exact;
};

struct SuiteConfig {
    std::size_t min_n = 5;
    std::size_t crossover = 20;
    std::optional<std::size_t> force_dim;
    double alpha = 0.05;
};

struct SuiteReport {
    std::string label;
    CoverageReport coverage;
    std::size_t original_dim = 0;
    std::size_t reduced_dim = 0;
    std::vector<SimilarityRecord> records;
    TestResult h1;
    TestResult h2;

    /// H2 significant at alpha while H1 is not; expected never to happen.
    bool h2_without_h1(double alpha) const { return h2.p_value < alpha && !(h1.p_value < alpha); }

    /// point_id,s_denom,k,mean_s_root,max_s_root,d_h1,d_h2
    std::string points_csv() const;
    /// Two rows (H1, H2) without header.
    std::string summary_rows() const;
};

inline constexpr const char* kSummaryHeader = "model_label,hypothesis,n,p_value,delta,magnitude,levene_p,method";

/// Coverage filter, PCA reduction of the dataset's word forms, similarity
/// records, then Wilcoxon / Cliff's delta / Levene for both hypotheses.
/// Throws TooFewPoints when fewer than config.min_n points survive coverage.
SuiteReport run_suite(const std::vector<DataPoint>& points, const EmbeddingSpace& space, const SuiteConfig& config = {});

}  // namespace denominal
