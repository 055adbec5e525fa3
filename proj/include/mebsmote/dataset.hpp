#pragma once

#include "mebsmote/geometry.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mebsmote {

// Minority samples are the positive class throughout.
enum class Label : unsigned char { Minority, Majority };

// Immutable binary-labelled feature matrix. Rows share one dimension and
// hold finite values only.
class Dataset {
public:
    Dataset(std::vector<Point> rows,
            std::vector<Label> labels,
            std::vector<std::string> feature_names = {},
            std::string label_name = "label",
            std::string minority_value = "1",
            std::string majority_value = "0");

    std::size_t size() const noexcept { return rows_.size(); }
    std::size_t dim() const noexcept { return dim_; }

    std::span<const Point> rows() const noexcept { return rows_; }
    const Point& row(std::size_t i) const { return rows_.at(i); }
    std::span<const Label> labels() const noexcept { return labels_; }
    Label label(std::size_t i) const { return labels_.at(i); }
    bool is_minority(std::size_t i) const { return labels_.at(i) == Label::Minority; }

    const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
    const std::string& label_name() const noexcept { return label_name_; }
    const std::string& minority_value() const noexcept { return minority_value_; }
    const std::string& majority_value() const noexcept { return majority_value_; }

    // Row indices of each class, ascending.
    std::vector<std::size_t> minority_indices() const;
    std::vector<std::size_t> majority_indices() const;
    std::size_t count(Label label) const;

    // Rows selected by `indices`, same metadata.
    Dataset subset(std::span<const std::size_t> indices) const;

    // This dataset followed by `extra` rows, all labelled `label`.
    Dataset appended(std::span<const Point> extra, Label label) const;

    // Same labels and metadata, different feature values.
    Dataset with_rows(std::vector<Point> rows) const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::vector<Point> rows_;
    std::vector<Label> labels_;
    std::vector<std::string> feature_names_;
    std::string label_name_;
    std::string minority_value_;
    std::string majority_value_;
    std::size_t dim_ = 0;
};

struct ClassStats {
    std::size_t n_min = 0;
    std::size_t n_maj = 0;
    double ir = 0.0;
    std::size_t dim = 0;
    std::size_t total = 0;
};

// Class counts and imbalance ratio n_maj / n_min. Throws SingleClass when
// either class is absent.
ClassStats stats(const Dataset& dataset);
ClassStats stats_from_counts(std::size_t n_min, std::size_t n_maj, std::size_t dim = 0);

// Per-feature range recorded by minmax_normalize.
struct MinMaxTable {
    std::vector<double> min;
    std::vector<double> max;
    std::vector<bool> constant;

    Point transform(std::span<const double> p) const;
    Point inverse(std::span<const double> p) const;
};

struct Normalized {
    Dataset dataset;
    MinMaxTable table;
};

// Rescales every feature to [0, 1]. Constant features map to 0 and are
// flagged in the table.
Normalized minmax_normalize(const Dataset& dataset);

struct CsvOptions {
    // Header name of the label column; the last column when unset.
    std::optional<std::string> label_column;
    // Label value of the minority class; the less frequent value when unset.
    std::optional<std::string> positive_label;
};

struct CsvLoad {
    Dataset dataset;
    std::vector<std::string> warnings;
};

// Reads a comma-separated file with a mandatory header row. Exactly two
// distinct label values are accepted; every other column must be numeric.
CsvLoad load_csv(const std::filesystem::path& path, const CsvOptions& options = {});

// Reads a headerless or headed CSV of raw coordinates (no label column).
std::vector<Point> load_points_csv(const std::filesystem::path& path);

struct SyntheticColumn {
    std::string name = "synthetic";
    std::vector<bool> flags;
};

// Writes header and rows, label column last. Values use the shortest
// representation that reads back to the identical double.
void write_csv(const Dataset& dataset,
               const std::filesystem::path& path,
               const std::optional<SyntheticColumn>& synthetic = std::nullopt);

// Shortest round-trip decimal form of a double.
std::string format_double(double value);

} // namespace mebsmote
