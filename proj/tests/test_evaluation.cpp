#include "mebsmote/errors.hpp"
#include "mebsmote/evaluation.hpp"
#include "mebsmote/synthetic.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace mebsmote;

namespace {

Dataset pos_neg(std::size_t n_pos, std::size_t n_neg)
{
    std::vector<Point> rows;
    std::vector<Label> labels;
    for (std::size_t i = 0; i < n_pos + n_neg; ++i) {
        rows.push_back(Point{double(i)});
        labels.push_back(i < n_pos ? Label::Minority : Label::Majority);
    }
    return Dataset(std::move(rows), std::move(labels));
}

void expect_partition(const Dataset& d, const FoldSplit& split)
{
    std::vector<int> seen(d.size(), 0);
    for (const auto& f : split.folds) {
        for (auto i : f.test) {
            ++seen[i];
        }
        std::vector<std::size_t> all = f.train;
        all.insert(all.end(), f.test.begin(), f.test.end());
        std::sort(all.begin(), all.end());
        ASSERT_EQ(all.size(), d.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            ASSERT_EQ(all[i], i);
        }
    }
    for (int s : seen) {
        ASSERT_EQ(s, 1);
    }
}

} // namespace

TEST(StratifiedKFold, ExactDivision)
{
    const Dataset d = pos_neg(10, 20);
    const FoldSplit split = stratified_kfold(d, 5, 42);
    ASSERT_EQ(split.folds.size(), 5u);
    for (const auto& f : split.folds) {
        const auto pos = std::count_if(f.test.begin(), f.test.end(), [&](auto i) { return d.is_minority(i); });
        EXPECT_EQ(pos, 2);
        EXPECT_EQ(f.test.size() - pos, 4u);
    }
    expect_partition(d, split);
}

TEST(StratifiedKFold, RemainderAndDeterminism)
{
    const Dataset d = pos_neg(11, 23);
    const FoldSplit split = stratified_kfold(d, 5, 7);
    std::vector<std::size_t> pos;
    for (const auto& f : split.folds) {
        pos.push_back(static_cast<std::size_t>(
            std::count_if(f.test.begin(), f.test.end(), [&](auto i) { return d.is_minority(i); })));
    }
    std::sort(pos.begin(), pos.end());
    EXPECT_EQ(pos, (std::vector<std::size_t>{2, 2, 2, 2, 3}));
    expect_partition(d, split);

    const FoldSplit again = stratified_kfold(d, 5, 7);
    for (std::size_t f = 0; f < 5; ++f) {
        EXPECT_EQ(split.folds[f].test, again.folds[f].test);
    }
}

TEST(StratifiedKFoldProperty, BalancedWithinOnePerClass)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SeededRng rng(seed);
        const std::size_t folds = 2 + rng.uniform_below(6);
        const std::size_t n_pos = folds + rng.uniform_below(20);
        const std::size_t n_neg = folds + rng.uniform_below(60);
        const Dataset d = pos_neg(n_pos, n_neg);
        const FoldSplit split = stratified_kfold(d, folds, seed);
        expect_partition(d, split);
        std::size_t lo_p = SIZE_MAX, hi_p = 0, lo_n = SIZE_MAX, hi_n = 0, lo = SIZE_MAX, hi = 0;
        for (const auto& f : split.folds) {
            const auto p = static_cast<std::size_t>(
                std::count_if(f.test.begin(), f.test.end(), [&](auto i) { return d.is_minority(i); }));
            lo_p = std::min(lo_p, p);
            hi_p = std::max(hi_p, p);
            lo_n = std::min(lo_n, f.test.size() - p);
            hi_n = std::max(hi_n, f.test.size() - p);
            lo = std::min(lo, f.test.size());
            hi = std::max(hi, f.test.size());
        }
        ASSERT_LE(hi_p - lo_p, 1u);
        ASSERT_LE(hi_n - lo_n, 1u);
        ASSERT_LE(hi - lo, 1u);
    }
}

TEST(StratifiedKFold, TooFewSamplesNamesClassSize)
{
    const Dataset d = pos_neg(3, 20);
    try {
        stratified_kfold(d, 5, 1);
        FAIL();
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("minority class has 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(stratified_kfold(d, 1, 1), InvalidArgument);
}

TEST(KnnScores, Examples)
{
    // Three minority and two majority rows nearest the origin, then a far majority cluster.
    const Dataset train({Point{0.1}, Point{-0.1}, Point{0.2}, Point{0.3}, Point{-0.3}, Point{50}, Point{51},
                         Point{52}, Point{53}, Point{54}},
                        {Label::Minority, Label::Minority, Label::Minority, Label::Majority, Label::Majority,
                         Label::Majority, Label::Majority, Label::Majority, Label::Majority, Label::Majority});
    const auto s = knn_predict_scores(train, std::vector<Point>{Point{0}, Point{52}}, 5);
    EXPECT_DOUBLE_EQ(s[0], 0.6);
    EXPECT_GE(s[0], kDecisionThreshold);
    EXPECT_EQ(s[1], 0.0);
    EXPECT_EQ(knn_predict_scores(train, std::vector<Point>{Point{0.2}}, 1)[0], 1.0);
    EXPECT_THROW(knn_predict_scores(train, {}, 5), InvalidArgument);
    EXPECT_THROW(knn_predict_scores(train, std::vector<Point>{Point{0}}, 11), InsufficientNeighbors);
}

TEST(Evaluate, ReportShapeAndInvariants)
{
    const Dataset d = make_two_gaussians(50, 500, 2, 2.0, 1);
    EvaluateConfig cfg;
    const MetricsReport r = evaluate(d, Method::MebSmote, cfg);
    EXPECT_EQ(r.method, "meb-smote");
    EXPECT_EQ(r.fold_count, 5u);
    EXPECT_EQ(r.confusion.size(), 5u);
    for (Metric m : kAllMetrics) {
        const auto& s = r[m];
        ASSERT_EQ(s.folds.size(), 5u);
        const auto [lo, hi] = std::minmax_element(s.folds.begin(), s.folds.end());
        EXPECT_GE(s.mean, *lo);
        EXPECT_LE(s.mean, *hi);
        EXPECT_GE(s.std, 0.0);
        for (double v : s.folds) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
    std::size_t total = 0;
    for (std::size_t f = 0; f < 5; ++f) {
        const auto& cm = r.confusion[f];
        total += cm.total();
        EXPECT_DOUBLE_EQ(r[Metric::Acc].folds[f], double(cm.tp + cm.tn) / double(cm.total()));
        const double p = r[Metric::Precision].folds[f];
        const double q = r[Metric::Recall].folds[f];
        if (p + q > 0) {
            EXPECT_NEAR(r[Metric::F1].folds[f], 2 * p * q / (p + q), 1e-15);
        }
    }
    EXPECT_EQ(total, d.size());
}

TEST(Evaluate, MebSmoteRaisesRecallOverBaseline)
{
    const Dataset d = make_two_gaussians(50, 500, 2, 2.0, 3);
    EvaluateConfig cfg;
    cfg.seed = 3;
    const auto none = evaluate(d, std::nullopt, cfg);
    const auto meb = evaluate(d, Method::MebSmote, cfg);
    EXPECT_EQ(none.method, "none");
    EXPECT_GT(meb[Metric::Recall].mean, none[Metric::Recall].mean);
}

TEST(Evaluate, IdenticalDistributionsGiveChanceAuc)
{
    double sum = 0.0;
    const int runs = 10;
    for (int seed = 0; seed < runs; ++seed) {
        const Dataset d = make_two_gaussians(60, 120, 2, 0.0, 100 + seed);
        EvaluateConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(seed);
        sum += evaluate(d, Method::Smote, cfg)[Metric::Auc].mean;
    }
    EXPECT_NEAR(sum / runs, 0.5, 0.1);
}

TEST(Evaluate, NoLeakageIntoTestFolds)
{
    const Dataset d = make_two_gaussians(30, 120, 3, 1.5, 8);
    const FoldSplit split = stratified_kfold(d, 5, 8);
    for (Method m : all_methods()) {
        std::vector<FoldOutcome> outcomes;
        evaluate_split(d, split, m, EvaluateConfig{}, 99, &outcomes);
        ASSERT_EQ(outcomes.size(), 5u);
        for (std::size_t f = 0; f < 5; ++f) {
            const std::set<std::size_t> test(split.folds[f].test.begin(), split.folds[f].test.end());
            ASSERT_FALSE(outcomes[f].records.empty());
            for (const auto& rec : outcomes[f].records) {
                ASSERT_EQ(test.count(rec.base_index), 0u) << to_string(m);
                ASSERT_TRUE(d.is_minority(rec.base_index));
                ASSERT_EQ(d.row(rec.base_index), rec.base);
            }
        }
    }
}

TEST(Evaluate, BaselineIgnoresOversamplingSeed)
{
    const Dataset d = make_two_gaussians(20, 80, 2, 1.0, 2);
    const FoldSplit split = stratified_kfold(d, 5, 2);
    const auto a = evaluate_split(d, split, std::nullopt, EvaluateConfig{}, 1);
    const auto b = evaluate_split(d, split, std::nullopt, EvaluateConfig{}, 123456);
    EXPECT_EQ(to_key_value(a), to_key_value(b));
    const auto c = evaluate_split(d, split, Method::Smote, EvaluateConfig{}, 1);
    const auto e = evaluate_split(d, split, Method::Smote, EvaluateConfig{}, 123456);
    EXPECT_NE(to_key_value(c), to_key_value(e));
}

TEST(Evaluate, ParallelMatchesSerial)
{
    const Dataset d = make_two_gaussians(25, 100, 2, 1.5, 4);
    EvaluateConfig par;
    EvaluateConfig ser;
    ser.parallel = false;
    for (Method m : all_methods()) {
        EXPECT_EQ(to_key_value(evaluate(d, m, par)), to_key_value(evaluate(d, m, ser)));
    }
}

TEST(Evaluate, SingleClassTestFoldAborts)
{
    const Dataset d = pos_neg(6, 20);
    FoldSplit split = stratified_kfold(d, 2, 1);
    // Move every minority row of fold 0 into training.
    auto& f = split.folds[0];
    std::erase_if(f.test, [&](auto i) { return d.is_minority(i); });
    EXPECT_THROW(evaluate_fold(d, f, std::nullopt, EvaluateConfig{}, 1), SingleClass);
}

TEST(Report, KeyValueAndCsv)
{
    const Dataset d = pos_neg(10, 20);
    EvaluateConfig cfg;
    cfg.k_neighbors = 3;
    const auto r = evaluate(d, Method::Smote, cfg);
    const std::string kv = to_key_value(r);
    EXPECT_EQ(kv.substr(0, kv.find('\n')), "method=smote");
    EXPECT_NE(kv.find("\nfolds=5\n"), std::string::npos);
    EXPECT_NE(kv.find("\nauc.std="), std::string::npos);
    const auto pos = kv.find("acc.folds=");
    ASSERT_NE(pos, std::string::npos);
    const std::string line = kv.substr(pos, kv.find('\n', pos) - pos);
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);

    EXPECT_EQ(summary_csv_header(),
              "method,folds,acc_mean,acc_std,precision_mean,precision_std,recall_mean,recall_std,"
              "f1_mean,f1_std,auc_mean,auc_std");
    const std::string row = summary_csv_row(r);
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 11);
    EXPECT_EQ(row.substr(0, 8), "smote,5,");
}

TEST(MethodOrNone, Parses)
{
    EXPECT_FALSE(parse_method_or_none("none").has_value());
    EXPECT_EQ(parse_method_or_none("adasyn"), Method::Adasyn);
    EXPECT_THROW(parse_method_or_none("xgboost"), InvalidArgument);
}

TEST(NoiseSimulation, MebSamplesStayFartherFromNoise)
{
    const NoiseScenario s = noise_scenario();
    EXPECT_NEAR(s.meb_center[0], 3.05, 1e-12);
    EXPECT_NEAR(s.meb_radius, 2.05, 1e-12);
    EXPECT_NEAR(s.centroid[0], 4.2, 1e-12);
    EXPECT_TRUE(s.dataset.is_minority(s.base_row));
    const NoiseSimulation sim = simulate_noise_scenario(100, 42);
    EXPECT_EQ(sim.meb_distances.size(), 100u);
    EXPECT_GT(sim.meb_median, sim.centroid_median);
    EXPECT_EQ(median({3.0, 1.0, 2.0}), 2.0);
    EXPECT_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
}
