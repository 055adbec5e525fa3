#include "mebsmote/evaluation.hpp"

#include "mebsmote/errors.hpp"
#include "mebsmote/geometry.hpp"
#include "mebsmote/neighbors.hpp"

#include <sstream>

namespace mebsmote {

std::string to_key_value(const MetricsReport& report)
{
    std::ostringstream out;
    out << "method=" << report.method << '\n';
    out << "folds=" << report.fold_count << '\n';
    for (Metric m : kAllMetrics) {
        const auto& s = report[m];
        out << to_string(m) << ".folds=";
        for (std::size_t i = 0; i < s.folds.size(); ++i) {
            out << (i ? "," : "") << format_double(s.folds[i]);
        }
        out << '\n';
        out << to_string(m) << ".mean=" << format_double(s.mean) << '\n';
        out << to_string(m) << ".std=" << format_double(s.std) << '\n';
    }
    out << "precision.undefined_folds=" << report.precision_undefined_folds << '\n';
    out << "recall.undefined_folds=" << report.recall_undefined_folds << '\n';
    return out.str();
}

std::string summary_csv_header()
{
    std::string out = "method,folds";
    for (Metric m : kAllMetrics) {
        out += ",";
        out += to_string(m);
        out += "_mean,";
        out += to_string(m);
        out += "_std";
    }
    return out;
}

std::string summary_csv_row(const MetricsReport& report)
{
    std::string out = report.method + "," + std::to_string(report.fold_count);
    for (Metric m : kAllMetrics) {
        out += "," + format_double(report[m].mean) + "," + format_double(report[m].std);
    }
    return out;
}

NoiseScenario noise_scenario()
{
    const Point base{0.0, 0.0};
    std::vector<Point> noise_cluster{Point{5.0, 0.1}, Point{5.0, -0.1}, Point{5.1, 0.0},
                                     Point{4.9, 0.0}};
    std::vector<Point> neighbors = noise_cluster;
    neighbors.push_back(Point{1.0, 0.0});

    // Minority rows: the base, then its five neighbours. The majority class
    // surrounds the mislabelled cluster.
    std::vector<Point> rows{base};
    rows.insert(rows.end(), neighbors.begin(), neighbors.end());
    std::vector<Label> labels(rows.size(), Label::Minority);
    for (const Point& p : {Point{5.5, 0.5}, Point{5.5, -0.5}, Point{6.0, 0.0}, Point{4.5, 0.6},
                           Point{4.5, -0.6}, Point{6.0, 1.0}, Point{6.0, -1.0}, Point{5.0, 1.0},
                           Point{5.0, -1.0}}) {
        rows.push_back(p);
        labels.push_back(Label::Majority);
    }

    SeededRng rng(0);
    Ball ball = welzl_meb(neighbors, rng);
    Point neighbor_centroid = centroid(neighbors);
    Point noise_centroid = centroid(noise_cluster);
    return NoiseScenario{Dataset(std::move(rows), std::move(labels), {"x", "y"}),
                         0,
                         base,
                         std::move(neighbors),
                         std::move(noise_cluster),
                         std::move(ball.center),
                         ball.radius,
                         std::move(neighbor_centroid),
                         std::move(noise_centroid)};
}

NoiseSimulation simulate_noise_scenario(std::size_t draws, std::uint64_t seed)
{
    if (draws == 0) {
        throw InvalidArgument("simulation needs at least one draw");
    }
    const NoiseScenario s = noise_scenario();
    NoiseSimulation sim;
    for (std::size_t i = 0; i < draws; ++i) {
        SeededRng meb_rng(mix_seed(seed, i));
        SeededRng centroid_rng(mix_seed(seed, i));
        SeededRng smote_rng(mix_seed(seed, i));
        sim.meb_distances.push_back(
            euclidean_distance(meb_smote_sample(s.base, s.neighbors, meb_rng).sample, s.noise_centroid));
        sim.centroid_distances.push_back(euclidean_distance(
            centroid_smote_sample(s.base, s.neighbors, centroid_rng).sample, s.noise_centroid));
        sim.smote_distances.push_back(
            euclidean_distance(smote_sample(s.base, s.neighbors, smote_rng).sample, s.noise_centroid));
    }
    sim.meb_median = median(sim.meb_distances);
    sim.centroid_median = median(sim.centroid_distances);
    sim.smote_median = median(sim.smote_distances);
    return sim;
}

} // namespace mebsmote
