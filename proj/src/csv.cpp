#include "mebsmote/dataset.hpp"

#include "mebsmote/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace mebsmote {

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

// Splits one CSV record. Double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_record(std::string_view line, std::size_t line_no)
{
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"') {
            quoted = true;
            was_quoted = true;
        } else if (ch == ',') {
            fields.push_back(was_quoted ? field : trim(field));
            field.clear();
            was_quoted = false;
        } else {
            field.push_back(ch);
        }
    }
    if (quoted) {
        throw ParseError("line " + std::to_string(line_no) + ": unterminated quoted field");
    }
    fields.push_back(was_quoted ? field : trim(field));
    return fields;
}

std::optional<double> parse_real(const std::string& text)
{
    if (text.empty()) {
        return std::nullopt;
    }
    std::string_view view = text;
    if (view.front() == '+') {
        view.remove_prefix(1);
    }
    double value = 0.0;
    const auto result = std::from_chars(view.data(), view.data() + view.size(), value);
    if (result.ec != std::errc{} || result.ptr != view.data() + view.size() ||
        !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

struct RawTable {
    std::vector<std::vector<std::string>> records;
    std::vector<std::size_t> line_numbers;
};

RawTable read_records(const std::filesystem::path& path)
{
    if (path.empty()) {
        throw IoError("no input path given");
    }
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    RawTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) {
            line.erase(0, 3);
        }
        if (trim(line).empty()) {
            continue;
        }
        table.records.push_back(split_record(line, line_no));
        table.line_numbers.push_back(line_no);
    }
    if (in.bad()) {
        throw IoError("error while reading '" + path.string() + "'");
    }
    if (table.records.empty()) {
        throw ParseError("'" + path.string() + "' is empty");
    }
    return table;
}

std::string quote_if_needed(const std::string& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') {
            out.push_back('"');
        }
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

} // namespace

CsvLoad load_csv(const std::filesystem::path& path, const CsvOptions& options)
{
    const RawTable table = read_records(path);
    const std::vector<std::string>& header = table.records.front();
    if (header.size() < 2) {
        throw ParseError("'" + path.string() + "': need at least one feature and a label column");
    }

    std::size_t label_col = header.size() - 1;
    if (options.label_column) {
        const auto it = std::find(header.begin(), header.end(), *options.label_column);
        if (it == header.end()) {
            throw ParseError("'" + path.string() + "': no column named '" +
                             *options.label_column + "'");
        }
        label_col = static_cast<std::size_t>(it - header.begin());
    }

    std::vector<std::string> feature_names;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c != label_col) {
            feature_names.push_back(header[c]);
        }
    }

    if (table.records.size() < 2) {
        throw ParseError("'" + path.string() + "' has a header but no data rows");
    }

    std::vector<Point> rows;
    std::vector<std::string> raw_labels;
    rows.reserve(table.records.size() - 1);
    raw_labels.reserve(table.records.size() - 1);
    std::vector<std::string> bad_rows;
    for (std::size_t r = 1; r < table.records.size(); ++r) {
        const auto& rec = table.records[r];
        const std::size_t line_no = table.line_numbers[r];
        if (rec.size() != header.size()) {
            throw ParseError("'" + path.string() + "' line " + std::to_string(line_no) +
                             ": expected " + std::to_string(header.size()) + " fields, found " +
                             std::to_string(rec.size()));
        }
        std::vector<double> values;
        values.reserve(header.size() - 1);
        bool ok = true;
        for (std::size_t c = 0; c < rec.size(); ++c) {
            if (c == label_col) {
                continue;
            }
            const auto v = parse_real(rec[c]);
            if (!v) {
                ok = false;
                break;
            }
            values.push_back(*v);
        }
        if (!ok) {
            bad_rows.push_back(std::to_string(line_no));
            continue;
        }
        if (rec[label_col].empty()) {
            throw ParseError("'" + path.string() + "' line " + std::to_string(line_no) +
                             ": missing label");
        }
        rows.emplace_back(std::move(values));
        raw_labels.push_back(rec[label_col]);
    }
    if (!bad_rows.empty()) {
        std::string list;
        for (std::size_t i = 0; i < bad_rows.size() && i < 20; ++i) {
            list += (i ? "," : "") + bad_rows[i];
        }
        if (bad_rows.size() > 20) {
            list += ",...";
        }
        throw ParseError("'" + path.string() + "': missing or non-numeric feature values on line(s) " +
                         list);
    }

    std::map<std::string, std::size_t> counts;
    for (const auto& l : raw_labels) {
        ++counts[l];
    }
    if (counts.size() == 1) {
        throw SingleClass("'" + path.string() + "': label column '" + header[label_col] +
                          "' has a single class '" + counts.begin()->first + "'");
    }
    if (counts.size() > 2) {
        throw ParseError("'" + path.string() + "': label column '" + header[label_col] + "' has " +
                         std::to_string(counts.size()) + " distinct values, expected 2");
    }

    const auto first = counts.begin();
    const auto second = std::next(first);
    std::string positive;
    std::string negative;
    std::vector<std::string> warnings;
    if (options.positive_label) {
        if (!counts.contains(*options.positive_label)) {
            throw ParseError("'" + path.string() + "': positive label '" + *options.positive_label +
                             "' does not occur in column '" + header[label_col] + "'");
        }
        positive = *options.positive_label;
        negative = positive == first->first ? second->first : first->first;
        if (counts[positive] > counts[negative]) {
            warnings.push_back("positive label '" + positive +
                               "' is the more frequent class; imbalance ratio is below 1");
        }
    } else {
        // Less frequent value wins; on a tie the lexicographically greater one.
        positive = first->second < second->second ? first->first : second->first;
        negative = positive == first->first ? second->first : first->first;
    }

    std::vector<Label> labels;
    labels.reserve(raw_labels.size());
    for (const auto& l : raw_labels) {
        labels.push_back(l == positive ? Label::Minority : Label::Majority);
    }
    return CsvLoad{Dataset(std::move(rows), std::move(labels), std::move(feature_names),
                           header[label_col], positive, negative),
                   std::move(warnings)};
}

std::vector<Point> load_points_csv(const std::filesystem::path& path)
{
    const RawTable table = read_records(path);
    std::size_t start = 0;
    const auto& first = table.records.front();
    if (!std::all_of(first.begin(), first.end(),
                     [](const std::string& f) { return parse_real(f).has_value(); })) {
        start = 1;
    }
    std::vector<Point> points;
    for (std::size_t r = start; r < table.records.size(); ++r) {
        std::vector<double> values;
        for (const auto& f : table.records[r]) {
            const auto v = parse_real(f);
            if (!v) {
                throw ParseError("'" + path.string() + "' line " +
                                 std::to_string(table.line_numbers[r]) + ": non-numeric value '" +
                                 f + "'");
            }
            values.push_back(*v);
        }
        if (!points.empty() && values.size() != points.front().dim()) {
            throw ParseError("'" + path.string() + "' line " +
                             std::to_string(table.line_numbers[r]) + ": expected " +
                             std::to_string(points.front().dim()) + " coordinates");
        }
        points.emplace_back(std::move(values));
    }
    if (points.empty()) {
        throw ParseError("'" + path.string() + "' contains no points");
    }
    return points;
}

void write_csv(const Dataset& dataset,
               const std::filesystem::path& path,
               const std::optional<SyntheticColumn>& synthetic)
{
    if (path.empty()) {
        throw IoError("no output path given");
    }
    if (synthetic && synthetic->flags.size() != dataset.size()) {
        throw InvalidArgument("synthetic flag column has " + std::to_string(synthetic->flags.size()) +
                              " entries for " + std::to_string(dataset.size()) + " rows");
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }

    std::ostringstream buf;
    for (const auto& name : dataset.feature_names()) {
        buf << quote_if_needed(name) << ',';
    }
    if (synthetic) {
        buf << quote_if_needed(synthetic->name) << ',';
    }
    buf << quote_if_needed(dataset.label_name()) << '\n';

    const std::string& pos = quote_if_needed(dataset.minority_value());
    const std::string& neg = quote_if_needed(dataset.majority_value());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        for (double v : dataset.row(i).coords()) {
            buf << format_double(v) << ',';
        }
        if (synthetic) {
            buf << (synthetic->flags[i] ? '1' : '0') << ',';
        }
        buf << (dataset.is_minority(i) ? pos : neg) << '\n';
    }
    out << buf.str();
    out.flush();
    if (!out) {
        throw IoError("error while writing '" + path.string() + "'");
    }
}

} // namespace mebsmote
