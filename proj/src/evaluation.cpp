#include "mebsmote/evaluation.hpp"

#include "mebsmote/errors.hpp"
#include "mebsmote/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>

namespace mebsmote {

namespace {

MetricSummary summarize(std::vector<double> values)
{
    MetricSummary s;
    const double n = static_cast<double>(values.size());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) {
        ss += (v - s.mean) * (v - s.mean);
    }
    s.std = std::sqrt(ss / n);
    // Summation rounding must not push the mean outside the fold range.
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.mean = std::clamp(s.mean, *lo, *hi);
    s.folds = std::move(values);
    return s;
}

} // namespace

FoldSplit stratified_kfold(const Dataset& dataset, std::size_t folds, std::uint64_t seed)
{
    if (folds < 2) {
        throw InvalidArgument("stratified k-fold needs at least 2 folds, got " + std::to_string(folds));
    }
    auto minority = dataset.minority_indices();
    auto majority = dataset.majority_indices();
    if (minority.size() < folds || majority.size() < folds) {
        const bool min_short = minority.size() < folds;
        throw InvalidArgument(std::string(min_short ? "minority" : "majority") + " class has " +
                              std::to_string(min_short ? minority.size() : majority.size()) +
                              " samples, fewer than the " + std::to_string(folds) +
                              " folds requested");
    }

    SeededRng rng(seed);
    rng.shuffle(std::span<std::size_t>(minority));
    rng.shuffle(std::span<std::size_t>(majority));

    FoldSplit split;
    split.fold_count = folds;
    split.folds.resize(folds);
    std::size_t slot = 0;
    for (const auto* cls : {&minority, &majority}) {
        for (std::size_t row : *cls) {
            split.folds[slot % folds].test.push_back(row);
            ++slot;
        }
    }
    for (std::size_t f = 0; f < folds; ++f) {
        auto& test = split.folds[f].test;
        std::sort(test.begin(), test.end());
    }
    std::vector<std::size_t> fold_of(dataset.size());
    for (std::size_t f = 0; f < folds; ++f) {
        for (std::size_t row : split.folds[f].test) {
            fold_of[row] = f;
        }
    }
    for (std::size_t row = 0; row < dataset.size(); ++row) {
        for (std::size_t f = 0; f < folds; ++f) {
            if (fold_of[row] != f) {
                split.folds[f].train.push_back(row);
            }
        }
    }
    return split;
}

std::vector<double> knn_predict_scores(const Dataset& train,
                                       std::span<const Point> test_points,
                                       std::size_t k)
{
    if (test_points.empty()) {
        throw InvalidArgument("knn scorer: no test points");
    }
    if (k == 0) {
        throw InvalidArgument("knn scorer: k must be positive");
    }
    if (train.size() < k) {
        throw InsufficientNeighbors(train.size(), k);
    }
    std::vector<double> scores;
    scores.reserve(test_points.size());
    for (const Point& p : test_points) {
        const auto nn = k_nearest_to(p, train.rows(), k);
        const auto minority = std::count_if(nn.begin(), nn.end(),
                                            [&](std::size_t j) { return train.is_minority(j); });
        scores.push_back(static_cast<double>(minority) / static_cast<double>(k));
    }
    return scores;
}

std::string_view to_string(Metric metric)
{
    switch (metric) {
    case Metric::Acc:
        return "acc";
    case Metric::Precision:
        return "precision";
    case Metric::Recall:
        return "recall";
    case Metric::F1:
        return "f1";
    case Metric::Auc:
        return "auc";
    }
    return "unknown";
}

FoldOutcome evaluate_fold(const Dataset& dataset,
                          const Fold& fold,
                          std::optional<Method> method,
                          const EvaluateConfig& config,
                          std::uint64_t oversample_seed)
{
    FoldOutcome out;
    out.train_rows = fold.train;
    out.test_rows = fold.test;

    const Dataset train = dataset.subset(fold.train);
    const Dataset test = dataset.subset(fold.test);
    if (test.count(Label::Minority) == 0 || test.count(Label::Majority) == 0) {
        throw SingleClass("a test fold contains a single class; reduce the fold count");
    }

    Dataset fitted = train;
    if (method) {
        SamplerOptions options;
        options.k = config.k_neighbors;
        options.mirror = config.mirror;
        options.meb_includes_base = config.meb_includes_base;
        const SamplingPlan p = plan(train, *method, config.k_neighbors, oversample_seed);
        out.warnings = p.warnings;
        Oversampled res = oversample(train, p, options);
        for (auto& rec : res.records) {
            rec.base_index = fold.train[rec.base_index];
        }
        out.records = std::move(res.records);
        fitted = std::move(res.dataset);
    }

    const auto scores = knn_predict_scores(fitted, test.rows(), config.classifier_k);
    std::vector<Label> predicted;
    predicted.reserve(scores.size());
    for (double s : scores) {
        predicted.push_back(s >= kDecisionThreshold ? Label::Minority : Label::Majority);
    }
    out.confusion = confusion(test.labels(), predicted);
    out.metrics = metrics(out.confusion);
    out.auc = roc_auc(test.labels(), scores);
    return out;
}

MetricsReport evaluate_split(const Dataset& dataset,
                             const FoldSplit& split,
                             std::optional<Method> method,
                             const EvaluateConfig& config,
                             std::uint64_t oversample_seed,
                             std::vector<FoldOutcome>* outcomes)
{
    const std::size_t n = split.folds.size();
    if (n == 0) {
        throw InvalidArgument("split has no folds");
    }
    std::vector<FoldOutcome> results;
    results.reserve(n);
    if (config.parallel && n > 1) {
        std::vector<std::future<FoldOutcome>> pending;
        pending.reserve(n);
        for (std::size_t f = 0; f < n; ++f) {
            pending.push_back(std::async(std::launch::async, [&, f] {
                return evaluate_fold(dataset, split.folds[f], method, config,
                                     mix_seed(oversample_seed, f));
            }));
        }
        for (auto& fut : pending) {
            results.push_back(fut.get());
        }
    } else {
        for (std::size_t f = 0; f < n; ++f) {
            results.push_back(evaluate_fold(dataset, split.folds[f], method, config,
                                            mix_seed(oversample_seed, f)));
        }
    }

    MetricsReport report;
    report.method = method ? std::string(to_string(*method)) : "none";
    report.fold_count = n;
    std::array<std::vector<double>, 5> values;
    for (const auto& r : results) {
        values[0].push_back(r.metrics.acc);
        values[1].push_back(r.metrics.precision);
        values[2].push_back(r.metrics.recall);
        values[3].push_back(r.metrics.f1);
        values[4].push_back(r.auc);
        report.precision_undefined_folds += r.metrics.precision_undefined ? 1 : 0;
        report.recall_undefined_folds += r.metrics.recall_undefined ? 1 : 0;
        report.confusion.push_back(r.confusion);
    }
    for (std::size_t m = 0; m < values.size(); ++m) {
        report.summaries[m] = summarize(std::move(values[m]));
    }
    if (outcomes) {
        *outcomes = std::move(results);
    }
    return report;
}

MetricsReport evaluate(const Dataset& dataset,
                       std::optional<Method> method,
                       const EvaluateConfig& config)
{
    const FoldSplit split = stratified_kfold(dataset, config.folds, config.seed);
    return evaluate_split(dataset, split, method, config, config.seed);
}

std::optional<Method> parse_method_or_none(std::string_view name)
{
    if (name == "none") {
        return std::nullopt;
    }
    return parse_method(name);
}

double median(std::vector<double> values)
{
    if (values.empty()) {
        throw InvalidArgument("median of an empty list");
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

} // namespace mebsmote
