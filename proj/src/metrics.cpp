#include "mebsmote/metrics.hpp"

#include "mebsmote/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace mebsmote {

ConfusionMatrix confusion(std::span<const Label> y_true, std::span<const Label> y_pred)
{
    if (y_true.size() != y_pred.size()) {
        throw DimensionMismatch("confusion: " + std::to_string(y_true.size()) + " true labels vs " +
                              std::to_string(y_pred.size()) + " predictions");
    }
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const bool actual = y_true[i] == Label::Minority;
        const bool predicted = y_pred[i] == Label::Minority;
        if (actual && predicted) {
            ++cm.tp;
        } else if (!actual && predicted) {
            ++cm.fp;
        } else if (actual) {
            ++cm.fn;
        } else {
            ++cm.tn;
        }
    }
    return cm;
}

ClassificationMetrics metrics(const ConfusionMatrix& cm)
{
    if (cm.total() == 0) {
        throw InvalidArgument("metrics: confusion matrix is empty");
    }
    ClassificationMetrics m;
    m.acc = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
    if (cm.tp + cm.fp == 0) {
        m.precision_undefined = true;
    } else {
        m.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
    }
    if (cm.tp + cm.fn == 0) {
        m.recall_undefined = true;
    } else {
        m.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
    }
    if (m.precision + m.recall > 0.0) {
        m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
    }
    return m;
}

double roc_auc(std::span<const Label> y_true, std::span<const double> scores)
{
    if (y_true.size() != scores.size()) {
        throw DimensionMismatch("roc_auc: " + std::to_string(y_true.size()) + " labels vs " +
                              std::to_string(scores.size()) + " scores");
    }
    for (double s : scores) {
        if (std::isnan(s)) {
            throw InvalidArgument("roc_auc: score is NaN");
        }
    }
    const auto positives = static_cast<std::size_t>(
        std::count(y_true.begin(), y_true.end(), Label::Minority));
    const std::size_t negatives = y_true.size() - positives;
    if (positives == 0 || negatives == 0) {
        throw SingleClass("roc_auc is undefined without both positive and negative samples");
    }

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Twice the Mann-Whitney U: each positive earns 2 per negative scored
    // strictly below it and 1 per negative tied with it.
    unsigned long long twice_u = 0;
    std::size_t negatives_below = 0;
    for (std::size_t lo = 0; lo < order.size();) {
        std::size_t hi = lo;
        std::size_t pos_in_group = 0;
        std::size_t neg_in_group = 0;
        while (hi < order.size() && scores[order[hi]] == scores[order[lo]]) {
            (y_true[order[hi]] == Label::Minority ? pos_in_group : neg_in_group) += 1;
            ++hi;
        }
        twice_u += static_cast<unsigned long long>(pos_in_group) * (2 * negatives_below + neg_in_group);
        negatives_below += neg_in_group;
        lo = hi;
    }
    return static_cast<double>(twice_u) /
           (2.0 * static_cast<double>(positives) * static_cast<double>(negatives));
}

} // namespace mebsmote
