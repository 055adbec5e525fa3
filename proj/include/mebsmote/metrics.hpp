#pragma once

#include "mebsmote/dataset.hpp"

#include <cstddef>
#include <span>

namespace mebsmote {

struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;

    std::size_t total() const noexcept { return tp + fp + fn + tn; }
    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

// Minority is the positive class.
ConfusionMatrix confusion(std::span<const Label> y_true, std::span<const Label> y_pred);

// Accuracy, precision, recall and F1. A zero denominator yields 0 and
// sets the matching `*_undefined` flag instead of producing NaN.
struct ClassificationMetrics {
    double acc = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    bool precision_undefined = false;
    bool recall_undefined = false;
};

ClassificationMetrics metrics(const ConfusionMatrix& cm);

// Probability that a random positive outscores a random negative, ties
// counted as one half. Computed from tie-grouped ranks with integer
// pair counts, so it equals the pairwise definition exactly.
// Throws SingleClass when either class is missing.
double roc_auc(std::span<const Label> y_true, std::span<const double> scores);

} // namespace mebsmote
