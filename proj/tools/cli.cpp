#include "cli.hpp"

#include "mebsmote/dataset.hpp"
#include "mebsmote/errors.hpp"
#include "mebsmote/evaluation.hpp"
#include "mebsmote/geometry.hpp"
#include "mebsmote/sampling.hpp"
#include "mebsmote/synthetic.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace mebsmote::cli {

namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  usage error (bad flags)\n"
    "  2  I/O error (missing or unwritable file)\n"
    "  3  parse error (malformed CSV, non-numeric feature, more than two classes)\n"
    "  4  insufficient neighbours (minority class smaller than k + 1)\n"
    "  5  single-class data (imbalance ratio or AUC undefined)\n"
    "  6  invalid input (bad option value, degenerate geometry)\n";

struct RunConfig {
    std::string input;
    std::string output;
    std::string method = "meb-smote";
    std::string methods = "none,smote,adasyn,centroid-smote,meb-smote";
    std::size_t k = 5;
    std::size_t classifier_k = 5;
    std::size_t folds = 5;
    std::uint64_t seed = 42;
    std::string label_column;
    std::string positive_label;
    bool normalize = false;
    bool mirror = false;
    bool meb_includes_base = false;
    bool structured = false;
    std::string audit;
    std::string synthetic_column;
    std::string summary_csv;
    std::string profile;
    std::size_t draws = 100;
    std::size_t n_min = 50;
    std::size_t n_maj = 500;
    std::size_t dim = 2;
    double separation = 2.0;
};

std::string fmt(const char* pattern, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

std::string format_point(const Point& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        out += (i ? " " : "") + fmt("%.12g", p[i]);
    }
    return out;
}

std::string stats_line(const ClassStats& s)
{
    return "Min " + std::to_string(s.n_min) + "  Maj " + std::to_string(s.n_maj) + "  IR " +
           fmt("%.2f", s.ir) + "  Att " + std::to_string(s.dim);
}

CsvLoad load(const RunConfig& cfg, std::ostream& err)
{
    CsvOptions options;
    if (!cfg.label_column.empty()) {
        options.label_column = cfg.label_column;
    }
    if (!cfg.positive_label.empty()) {
        options.positive_label = cfg.positive_label;
    }
    CsvLoad loaded = load_csv(cfg.input, options);
    for (const auto& w : loaded.warnings) {
        err << "warning: " << w << '\n';
    }
    return loaded;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    f << text;
    if (!f) {
        throw IoError("error while writing '" + path + "'");
    }
}

int cmd_resample(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Method method = parse_method(cfg.method);
    const CsvLoad loaded = load(cfg, err);
    const Dataset& original = loaded.dataset;
    out << "before: " << stats_line(stats(original)) << '\n';

    std::optional<Normalized> normalized;
    if (cfg.normalize) {
        normalized = minmax_normalize(original);
    }
    const Dataset& working = normalized ? normalized->dataset : original;

    SamplerOptions options;
    options.k = cfg.k;
    options.mirror = cfg.mirror;
    options.meb_includes_base = cfg.meb_includes_base;
    const SamplingPlan p = plan(working, method, cfg.k, cfg.seed);
    for (const auto& w : p.warnings) {
        err << "warning: " << w << '\n';
    }
    Oversampled result = oversample(working, p, options);

    // Original rows are written verbatim; only synthetic rows are mapped
    // back from the normalized space.
    std::vector<Point> synthetic;
    synthetic.reserve(result.records.size());
    for (auto& rec : result.records) {
        if (normalized) {
            rec.sample = normalized->table.inverse(rec.sample);
            rec.partner = normalized->table.inverse(rec.partner);
            rec.base = normalized->table.inverse(rec.base);
        }
        synthetic.push_back(rec.sample);
    }
    const Dataset balanced = original.appended(synthetic, Label::Minority);

    std::optional<SyntheticColumn> flags;
    if (!cfg.synthetic_column.empty()) {
        SyntheticColumn col;
        col.name = cfg.synthetic_column;
        col.flags.assign(balanced.size(), false);
        for (std::size_t i = original.size(); i < balanced.size(); ++i) {
            col.flags[i] = true;
        }
        flags = std::move(col);
    }
    write_csv(balanced, cfg.output, flags);
    if (!cfg.audit.empty()) {
        write_text(cfg.audit, audit_table(result.records, method));
    }

    out << "after:  " << stats_line(stats(balanced)) << '\n';
    out << "synthesized " << p.n_new << " samples with " << to_string(method) << " (k=" << cfg.k
        << ", seed=" << cfg.seed << ")\n";
    return kOk;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<std::pair<std::string, std::optional<Method>>> methods;
    for (const auto& name : split_list(cfg.methods)) {
        methods.emplace_back(name, parse_method_or_none(name));
    }
    if (methods.empty()) {
        throw InvalidArgument("no methods given");
    }
    const CsvLoad loaded = load(cfg, err);
    const Dataset dataset = cfg.normalize ? minmax_normalize(loaded.dataset).dataset : loaded.dataset;

    EvaluateConfig ec;
    ec.k_neighbors = cfg.k;
    ec.classifier_k = cfg.classifier_k;
    ec.folds = cfg.folds;
    ec.seed = cfg.seed;
    ec.mirror = cfg.mirror;
    ec.meb_includes_base = cfg.meb_includes_base;

    std::vector<MetricsReport> reports;
    for (const auto& [name, method] : methods) {
        reports.push_back(evaluate(dataset, method, ec));
    }

    if (cfg.structured) {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            out << (i ? "\n" : "") << to_key_value(reports[i]);
        }
    } else {
        char line[160];
        std::snprintf(line, sizeof(line), "%-18s %-17s %-17s %s\n", "method", "ACC", "F1", "AUC");
        out << line;
        for (const auto& r : reports) {
            auto cell = [&](Metric m) {
                return fmt("%.4f", r[m].mean) + "\xC2\xB1" + fmt("%.4f", r[m].std);
            };
            std::snprintf(line, sizeof(line), "%-18s %-18s %-18s %-18s\n", r.method.c_str(),
                          cell(Metric::Acc).c_str(), cell(Metric::F1).c_str(),
                          cell(Metric::Auc).c_str());
            std::string row = line;
            while (!row.empty() && (row.back() == ' ' || row.back() == '\n')) {
                row.pop_back();
            }
            out << row << '\n';
        }
    }
    if (!cfg.summary_csv.empty()) {
        std::string text = summary_csv_header() + "\n";
        for (const auto& r : reports) {
            text += summary_csv_row(r) + "\n";
        }
        write_text(cfg.summary_csv, text);
    }
    return kOk;
}

int cmd_meb(const RunConfig& cfg, std::ostream& out)
{
    const auto points = load_points_csv(cfg.input);
    SeededRng rng(cfg.seed);
    const Ball ball = welzl_meb(points, rng);
    out << "center " << format_point(ball.center) << ", radius " << fmt("%.12g", ball.radius)
        << '\n';
    return kOk;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const CsvLoad loaded = load(cfg, err);
    const ClassStats s = stats(loaded.dataset);
    if (cfg.structured) {
        out << "min=" << s.n_min << "\nmaj=" << s.n_maj << "\nir=" << format_double(s.ir)
            << "\natt=" << s.dim << "\ntotal=" << s.total << "\nminority_label="
            << loaded.dataset.minority_value() << "\nmajority_label="
            << loaded.dataset.majority_value() << '\n';
    } else {
        out << stats_line(s) << '\n';
    }
    return kOk;
}

int cmd_demo_noise(const RunConfig& cfg, std::ostream& out)
{
    const NoiseScenario s = noise_scenario();
    out << "base " << format_point(s.base) << '\n';
    for (const auto& p : s.neighbors) {
        out << "neighbor " << format_point(p) << '\n';
    }
    out << "meb center " << format_point(s.meb_center) << ", radius " << fmt("%.12g", s.meb_radius)
        << '\n';
    out << "centroid " << format_point(s.centroid) << '\n';
    out << "noise centroid " << format_point(s.noise_centroid) << '\n';

    const double d_meb = euclidean_distance(s.meb_center, s.base);
    const double d_centroid = euclidean_distance(s.centroid, s.base);
    out << "distance to base: meb center " << fmt("%.12g", d_meb) << ", centroid "
        << fmt("%.12g", d_centroid) << '\n';
    if (d_meb < d_centroid) {
        out << "verdict: MEB center is nearer the normal region than the centroid\n";
    } else {
        out << "verdict: centroid is nearer the normal region than the MEB center\n";
    }

    const NoiseSimulation sim = simulate_noise_scenario(cfg.draws, cfg.seed);
    out << "median distance to noise centroid over " << cfg.draws << " draws: meb-smote "
        << fmt("%.6f", sim.meb_median) << ", centroid-smote " << fmt("%.6f", sim.centroid_median)
        << ", smote " << fmt("%.6f", sim.smote_median) << '\n';
    return kOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out)
{
    Dataset d = cfg.profile.empty()
                    ? make_two_gaussians(cfg.n_min, cfg.n_maj, cfg.dim, cfg.separation, cfg.seed)
                    : make_profile_dataset(benchmark_profile(cfg.profile), cfg.seed);
    write_csv(d, cfg.output);
    out << "wrote " << d.size() << " rows to " << cfg.output << ": " << stats_line(stats(d)) << '\n';
    return kOk;
}

void add_label_options(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--label-column", cfg.label_column, "Label column name (default: last column)");
    cmd->add_option("--positive-label", cfg.positive_label,
                    "Label value of the minority class (default: less frequent value)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Minimum-enclosing-ball SMOTE and baseline oversamplers for imbalanced binary data",
                 "mebsmote"};
    app.footer(kExitCodeHelp);
    app.require_subcommand(1);

    auto* resample = app.add_subcommand("resample", "Balance a dataset with synthetic minority samples");
    resample->add_option("--in", cfg.input, "Input CSV")->required();
    resample->add_option("--out", cfg.output, "Output CSV")->required();
    resample->add_option("--method", cfg.method,
                         "smote, centroid-smote, meb-smote, adasyn or borderline-smote")
        ->capture_default_str();
    resample->add_option("--k", cfg.k, "Neighbours per sample")->capture_default_str()->check(
        CLI::PositiveNumber);
    resample->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    add_label_options(resample, cfg);
    resample->add_flag("--normalize", cfg.normalize, "Min-max scale features before synthesis");
    resample->add_flag("--mirror", cfg.mirror, "Extrapolate away from the partner point");
    resample->add_flag("--meb-include-base", cfg.meb_includes_base,
                       "Include the base sample in the enclosing ball");
    resample->add_option("--audit", cfg.audit, "Write the synthesis audit trail to this CSV");
    resample->add_option("--synthetic-column", cfg.synthetic_column,
                         "Add a 0/1 column with this name, before the label, marking synthetic rows");

    auto* evaluate_cmd = app.add_subcommand("evaluate", "Stratified cross-validation of oversamplers");
    evaluate_cmd->add_option("--in", cfg.input, "Input CSV")->required();
    evaluate_cmd->add_option("--methods", cfg.methods, "Comma-separated methods, 'none' for baseline")
        ->capture_default_str();
    evaluate_cmd->add_option("--k", cfg.k, "Oversampler neighbours")->capture_default_str()->check(
        CLI::PositiveNumber);
    evaluate_cmd->add_option("--classifier-k", cfg.classifier_k, "k-NN scorer neighbours")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    evaluate_cmd->add_option("--folds", cfg.folds, "Cross-validation folds")->capture_default_str();
    evaluate_cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    add_label_options(evaluate_cmd, cfg);
    evaluate_cmd->add_flag("--normalize", cfg.normalize, "Min-max scale features");
    evaluate_cmd->add_flag("--mirror", cfg.mirror, "Extrapolate away from the partner point");
    evaluate_cmd->add_flag("--meb-include-base", cfg.meb_includes_base,
                           "Include the base sample in the enclosing ball");
    evaluate_cmd->add_flag("--structured", cfg.structured, "Print key=value reports");
    evaluate_cmd->add_option("--summary-csv", cfg.summary_csv, "Write a summary row per method");

    auto* meb = app.add_subcommand("meb", "Minimum enclosing ball of a CSV of points");
    meb->add_option("--in,input", cfg.input, "CSV of coordinates, one point per row")->required();
    meb->add_option("--seed", cfg.seed, "Shuffle seed (does not affect the ball)")
        ->capture_default_str();

    auto* stats_cmd = app.add_subcommand("stats", "Class counts and imbalance ratio");
    stats_cmd->add_option("--in,input", cfg.input, "Input CSV")->required();
    add_label_options(stats_cmd, cfg);
    stats_cmd->add_flag("--structured", cfg.structured, "Print key=value output");

    auto* demo = app.add_subcommand("demo-noise", "Representative points in the noisy-neighbour scenario");
    demo->add_option("--draws", cfg.draws, "Samples drawn per method")->capture_default_str()->check(
        CLI::PositiveNumber);
    demo->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

    auto* generate = app.add_subcommand("generate", "Write a synthetic imbalanced dataset");
    generate->add_option("--out", cfg.output, "Output CSV")->required();
    generate->add_option("--profile", cfg.profile,
                         "Benchmark profile name (class counts and attributes), e.g. jedit-3.2");
    generate->add_option("--n-min", cfg.n_min, "Minority size (two-Gaussian mode)")
        ->capture_default_str();
    generate->add_option("--n-maj", cfg.n_maj, "Majority size (two-Gaussian mode)")
        ->capture_default_str();
    generate->add_option("--dim", cfg.dim, "Dimensions (two-Gaussian mode)")->capture_default_str();
    generate->add_option("--separation", cfg.separation, "Distance between cluster centres")
        ->capture_default_str();
    generate->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

    std::vector<std::string> argv_store{"mebsmote"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (resample->parsed()) {
            return cmd_resample(cfg, out, err);
        }
        if (evaluate_cmd->parsed()) {
            return cmd_evaluate(cfg, out, err);
        }
        if (meb->parsed()) {
            return cmd_meb(cfg, out);
        }
        if (stats_cmd->parsed()) {
            return cmd_stats(cfg, out, err);
        }
        if (demo->parsed()) {
            return cmd_demo_noise(cfg, out);
        }
        if (generate->parsed()) {
            return cmd_generate(cfg, out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const InsufficientNeighbors& e) {
        err << "error: " << e.what() << '\n';
        return kInsufficientNeighbors;
    } catch (const SingleClass& e) {
        err << "error: " << e.what() << '\n';
        return kSingleClass;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kUsage;
}

} // namespace mebsmote::cli
