#pragma once

#include "mebsmote/dataset.hpp"
#include "mebsmote/metrics.hpp"
#include "mebsmote/sampling.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mebsmote {

struct Fold {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

struct FoldSplit {
    std::size_t fold_count = 0;
    std::vector<Fold> folds;
};

// Shuffles each class with the seeded generator and deals its rows
// round-robin over the folds; the majority deal continues where the
// minority deal stopped so fold sizes differ by at most one.
// Index lists are ascending.
FoldSplit stratified_kfold(const Dataset& dataset, std::size_t folds, std::uint64_t seed);

// Share of minority rows among the k nearest training rows of each test
// point. A test point is predicted positive when its score is >= 0.5.
std::vector<double> knn_predict_scores(const Dataset& train,
                                       std::span<const Point> test_points,
                                       std::size_t k);

inline constexpr double kDecisionThreshold = 0.5;

enum class Metric { Acc, Precision, Recall, F1, Auc };
inline constexpr std::array<Metric, 5> kAllMetrics{Metric::Acc, Metric::Precision, Metric::Recall,
                                                   Metric::F1, Metric::Auc};
std::string_view to_string(Metric metric);

struct MetricSummary {
    std::vector<double> folds;
    double mean = 0.0;
    // Population standard deviation over folds.
    double std = 0.0;
};

struct MetricsReport {
    // "none" for the baseline without oversampling.
    std::string method;
    std::size_t fold_count = 0;
    std::array<MetricSummary, 5> summaries;
    // Folds whose precision (recall) had a zero denominator and was reported as 0.
    std::size_t precision_undefined_folds = 0;
    std::size_t recall_undefined_folds = 0;
    std::vector<ConfusionMatrix> confusion;

    const MetricSummary& operator[](Metric m) const
    {
        return summaries[static_cast<std::size_t>(m)];
    }
};

struct EvaluateConfig {
    // Neighbour count of the oversampler.
    std::size_t k_neighbors = 5;
    // Neighbour count of the k-NN scorer.
    std::size_t classifier_k = 5;
    std::size_t folds = 5;
    std::uint64_t seed = 42;
    bool mirror = false;
    bool meb_includes_base = false;
    // Evaluate folds on worker threads; results do not depend on it.
    bool parallel = true;
};

// Everything one fold produced, including the synthesis audit trail with
// base indices mapped back to rows of the evaluated dataset.
struct FoldOutcome {
    ClassificationMetrics metrics;
    ConfusionMatrix confusion;
    double auc = 0.0;
    std::vector<std::size_t> train_rows;
    std::vector<std::size_t> test_rows;
    std::vector<SynthesisRecord> records;
    std::vector<std::string> warnings;
};

// Oversamples the training rows only, scores the test rows, computes metrics.
FoldOutcome evaluate_fold(const Dataset& dataset,
                          const Fold& fold,
                          std::optional<Method> method,
                          const EvaluateConfig& config,
                          std::uint64_t oversample_seed);

// Cross-validation over an explicit split. Fold i oversamples with
// mix_seed(oversample_seed, i).
MetricsReport evaluate_split(const Dataset& dataset,
                             const FoldSplit& split,
                             std::optional<Method> method,
                             const EvaluateConfig& config,
                             std::uint64_t oversample_seed,
                             std::vector<FoldOutcome>* outcomes = nullptr);

// Stratified k-fold evaluation. The split uses config.seed directly and
// the oversampling streams derive from it, so one seed fixes everything.
MetricsReport evaluate(const Dataset& dataset,
                       std::optional<Method> method,
                       const EvaluateConfig& config);

// Method name or "none".
std::optional<Method> parse_method_or_none(std::string_view name);

// Key/value text: one `key=value` line per entry, per-fold values comma separated.
std::string to_key_value(const MetricsReport& report);

// Header and row of the comma-separated summary (means and deviations).
std::string summary_csv_header();
std::string summary_csv_row(const MetricsReport& report);

// Fixed two-dimensional scenario: a correctly labelled base sample whose
// neighbours are a dense cluster of mislabelled points plus one distant
// point on the base's side.
struct NoiseScenario {
    Dataset dataset;
    std::size_t base_row = 0;
    Point base;
    std::vector<Point> neighbors;
    std::vector<Point> noise_cluster;
    Point meb_center;
    double meb_radius = 0.0;
    Point centroid;
    Point noise_centroid;
};

NoiseScenario noise_scenario();

// Distances from `draws` seeded samples of each sampler to the noise
// cluster centroid, evaluated on noise_scenario().
struct NoiseSimulation {
    std::vector<double> meb_distances;
    std::vector<double> centroid_distances;
    std::vector<double> smote_distances;
    double meb_median = 0.0;
    double centroid_median = 0.0;
    double smote_median = 0.0;
};

NoiseSimulation simulate_noise_scenario(std::size_t draws, std::uint64_t seed);

double median(std::vector<double> values);

} // namespace mebsmote
