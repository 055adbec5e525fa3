#include "mebsmote/dataset.hpp"

#include "mebsmote/errors.hpp"

#include <algorithm>
#include <charconv>
#include <system_error>

namespace mebsmote {

Dataset::Dataset(std::vector<Point> rows,
                 std::vector<Label> labels,
                 std::vector<std::string> feature_names,
                 std::string label_name,
                 std::string minority_value,
                 std::string majority_value)
    : rows_(std::move(rows))
    , labels_(std::move(labels))
    , feature_names_(std::move(feature_names))
    , label_name_(std::move(label_name))
    , minority_value_(std::move(minority_value))
    , majority_value_(std::move(majority_value))
{
    if (rows_.empty()) {
        throw InvalidArgument("dataset must contain at least one row");
    }
    if (rows_.size() != labels_.size()) {
        throw InvalidArgument("dataset has " + std::to_string(rows_.size()) + " rows but " +
                              std::to_string(labels_.size()) + " labels");
    }
    dim_ = validate_point_set(rows_);
    if (feature_names_.empty()) {
        for (std::size_t c = 0; c < dim_; ++c) {
            feature_names_.push_back("x" + std::to_string(c));
        }
    }
    if (feature_names_.size() != dim_) {
        throw InvalidArgument("expected " + std::to_string(dim_) + " feature names, got " +
                              std::to_string(feature_names_.size()));
    }
    if (minority_value_ == majority_value_) {
        throw InvalidArgument("minority and majority label values must differ");
    }
}

std::vector<std::size_t> Dataset::minority_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == Label::Minority) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> Dataset::majority_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == Label::Majority) {
            out.push_back(i);
        }
    }
    return out;
}

std::size_t Dataset::count(Label label) const
{
    return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const
{
    std::vector<Point> rows;
    std::vector<Label> labels;
    rows.reserve(indices.size());
    labels.reserve(indices.size());
    for (std::size_t i : indices) {
        rows.push_back(rows_.at(i));
        labels.push_back(labels_.at(i));
    }
    return Dataset(std::move(rows), std::move(labels), feature_names_, label_name_,
                   minority_value_, majority_value_);
}

Dataset Dataset::appended(std::span<const Point> extra, Label label) const
{
    std::vector<Point> rows = rows_;
    std::vector<Label> labels = labels_;
    rows.insert(rows.end(), extra.begin(), extra.end());
    labels.insert(labels.end(), extra.size(), label);
    return Dataset(std::move(rows), std::move(labels), feature_names_, label_name_,
                   minority_value_, majority_value_);
}

Dataset Dataset::with_rows(std::vector<Point> rows) const
{
    return Dataset(std::move(rows), labels_, feature_names_, label_name_, minority_value_,
                   majority_value_);
}

ClassStats stats_from_counts(std::size_t n_min, std::size_t n_maj, std::size_t dim)
{
    if (n_min == 0 || n_maj == 0) {
        throw SingleClass("imbalance ratio undefined: dataset has " + std::to_string(n_min) +
                          " minority and " + std::to_string(n_maj) + " majority samples");
    }
    return ClassStats{n_min, n_maj, static_cast<double>(n_maj) / static_cast<double>(n_min), dim,
                      n_min + n_maj};
}

ClassStats stats(const Dataset& dataset)
{
    return stats_from_counts(dataset.count(Label::Minority), dataset.count(Label::Majority),
                             dataset.dim());
}

Point MinMaxTable::transform(std::span<const double> p) const
{
    if (p.size() != min.size()) {
        throw DimensionMismatch("min/max table has " + std::to_string(min.size()) +
                                " features, point has " + std::to_string(p.size()));
    }
    std::vector<double> out(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) {
        out[c] = constant[c] ? 0.0 : (p[c] - min[c]) / (max[c] - min[c]);
    }
    return Point(std::move(out));
}

Point MinMaxTable::inverse(std::span<const double> p) const
{
    if (p.size() != min.size()) {
        throw DimensionMismatch("min/max table has " + std::to_string(min.size()) +
                                " features, point has " + std::to_string(p.size()));
    }
    std::vector<double> out(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) {
        out[c] = constant[c] ? min[c] : min[c] + p[c] * (max[c] - min[c]);
    }
    return Point(std::move(out));
}

Normalized minmax_normalize(const Dataset& dataset)
{
    const std::size_t dim = dataset.dim();
    MinMaxTable table;
    table.min.assign(dim, 0.0);
    table.max.assign(dim, 0.0);
    table.constant.assign(dim, false);
    for (std::size_t c = 0; c < dim; ++c) {
        double lo = dataset.row(0)[c];
        double hi = lo;
        for (const Point& p : dataset.rows()) {
            lo = std::min(lo, p[c]);
            hi = std::max(hi, p[c]);
        }
        table.min[c] = lo;
        table.max[c] = hi;
        table.constant[c] = !(hi > lo);
    }

    std::vector<Point> rows;
    rows.reserve(dataset.size());
    for (const Point& p : dataset.rows()) {
        rows.push_back(table.transform(p));
    }
    return Normalized{dataset.with_rows(std::move(rows)), std::move(table)};
}

std::string format_double(double value)
{
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    if (result.ec != std::errc{}) {
        throw InvalidArgument("cannot format value");
    }
    return std::string(buf, result.ptr);
}

} // namespace mebsmote
