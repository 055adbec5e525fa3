#include "mebsmote/errors.hpp"
#include "mebsmote/evaluation.hpp"
#include "mebsmote/neighbors.hpp"
#include "mebsmote/sampling.hpp"
#include "mebsmote/synthetic.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace mebsmote;

namespace {

Dataset counts_dataset(std::size_t n_min, std::size_t n_maj, std::uint64_t seed = 1)
{
    return make_two_gaussians(n_min, n_maj, 2, 2.0, seed);
}

// Independent re-evaluation of the audit record, one coordinate at a time.
void expect_record_consistent(const SynthesisRecord& r)
{
    ASSERT_GE(r.coefficient, 0.0);
    ASSERT_LE(r.coefficient, 1.0);
    for (std::size_t c = 0; c < r.sample.dim(); ++c) {
        const double dir = r.mirrored ? r.base[c] - r.partner[c] : r.partner[c] - r.base[c];
        ASSERT_NEAR(r.sample[c], r.base[c] + r.coefficient * dir, 1e-12);
    }
    if (!r.mirrored) {
        ASSERT_LE(euclidean_distance(r.sample, r.base), euclidean_distance(r.partner, r.base) + 1e-12);
        for (std::size_t c = 0; c < r.sample.dim(); ++c) {
            ASSERT_GE(r.sample[c], std::min(r.base[c], r.partner[c]) - 1e-12);
            ASSERT_LE(r.sample[c], std::max(r.base[c], r.partner[c]) + 1e-12);
        }
    }
}

} // namespace

TEST(Interpolate, Examples)
{
    EXPECT_EQ(interpolate(Point{0, 0}, Point{2, 4}, 0.5), (Point{1, 2}));
    EXPECT_EQ(interpolate(Point{0, 0}, Point{2, 4}, 0.0), (Point{0, 0}));
    EXPECT_EQ(interpolate(Point{0, 0}, Point{2, 4}, 1.0), (Point{2, 4}));
    EXPECT_EQ(interpolate(Point{0, 0}, Point{2, 2}, 0.5), (Point{1, 1}));
    EXPECT_EQ(interpolate(Point{1, 1}, Point{2, 3}, 1.0, true), (Point{0, -1}));
    EXPECT_THROW(interpolate(Point{0}, Point{1, 1}, 0.5), DimensionMismatch);
}

TEST(Samplers, PartnersFollowTheirDefinition)
{
    const Point base{0, 0};
    const std::vector<Point> nb{Point{2, 0}, Point{0, 2}, Point{4, 4}};
    SeededRng rng(1);
    EXPECT_EQ(centroid_smote_sample(base, nb, rng).partner, (Point{2, 2}));

    const std::vector<Point> same(3, Point{3, 0});
    EXPECT_EQ(centroid_smote_sample(base, same, rng).partner, (Point{3, 0}));

    for (int i = 0; i < 50; ++i) {
        const auto r = smote_sample(base, nb, rng);
        EXPECT_NE(std::find(nb.begin(), nb.end(), r.partner), nb.end());
        expect_record_consistent(r);
    }
    EXPECT_THROW(smote_sample(base, {}, rng), InvalidArgument);
    EXPECT_THROW(centroid_smote_sample(base, {}, rng), InvalidArgument);
    EXPECT_THROW(meb_smote_sample(base, {}, rng), InvalidArgument);
}

TEST(Samplers, MebPartnerIsBallCenter)
{
    const Point base{0, 0};
    const std::vector<Point> nb{Point{1, 0}, Point{3, 0}};
    SeededRng rng(2);
    const auto r = meb_smote_sample(base, nb, rng);
    EXPECT_NEAR(r.partner[0], 2.0, 1e-12);
    EXPECT_NEAR(r.partner[1], 0.0, 1e-12);
    EXPECT_EQ(interpolate(base, r.partner, 0.5), (Point{1, 0}));
    expect_record_consistent(r);

    // Including the base widens the ball to span [0, 3].
    SeededRng rng2(2);
    const auto rb = meb_smote_sample(base, nb, rng2, SamplerOptions{5, false, true});
    EXPECT_NEAR(rb.partner[0], 1.5, 1e-12);
}

TEST(Samplers, MirrorPointsAwayFromPartner)
{
    const Point base{0, 0};
    const std::vector<Point> nb{Point{1, 0}, Point{3, 0}};
    SeededRng a(3), b(3);
    const auto plain = meb_smote_sample(base, nb, a);
    const auto mirrored = meb_smote_sample(base, nb, b, SamplerOptions{5, true, false});
    EXPECT_TRUE(mirrored.mirrored);
    EXPECT_EQ(plain.coefficient, mirrored.coefficient);
    EXPECT_NEAR(mirrored.sample[0], -plain.sample[0], 1e-12);
    expect_record_consistent(mirrored);
}

TEST(NoiseScenario, MebCenterNearerBaseThanCentroid)
{
    const NoiseScenario s = noise_scenario();
    SeededRng rng(0);
    const Ball b = welzl_meb(s.neighbors, rng);
    const Ball oracle = brute_force_meb(s.neighbors);
    EXPECT_NEAR(b.radius, oracle.radius, 1e-12);
    EXPECT_NEAR(b.center[0], s.meb_center[0], 1e-12);
    const Point g = centroid(s.neighbors);
    EXPECT_EQ(g, s.centroid);
    EXPECT_LT(euclidean_distance(b.center, s.base), euclidean_distance(g, s.base));
    EXPECT_GT(euclidean_distance(b.center, s.noise_centroid), euclidean_distance(g, s.noise_centroid));
    EXPECT_TRUE(contains(b, g, 0.0));
}

TEST(Plan, BenchmarkCounts)
{
    const Dataset jedit = make_profile_dataset(benchmark_profile("jedit-3.2"), 3);
    const SamplingPlan p = plan(jedit, Method::MebSmote, 5, 7);
    EXPECT_EQ(p.n_new, 92u);
    EXPECT_EQ(p.base_indices.size(), 92u);
    for (auto i : p.base_indices) {
        EXPECT_TRUE(jedit.is_minority(i));
    }

    const Dataset pc1 = make_profile_dataset(benchmark_profile("PC1"), 3);
    const SamplingPlan q = plan(pc1, Method::Smote, 5, 7);
    EXPECT_EQ(q.n_new, 569u);
    EXPECT_EQ(q.base_indices.size(), 569u);

    const Dataset even = counts_dataset(6, 6);
    const SamplingPlan r = plan(even, Method::Smote, 5, 7);
    EXPECT_EQ(r.n_new, 0u);
    EXPECT_TRUE(r.base_indices.empty());
    EXPECT_FALSE(r.warnings.empty());
    const Oversampled o = oversample(even, r);
    EXPECT_EQ(o.dataset, even);
    EXPECT_TRUE(o.records.empty());
}

TEST(Plan, Errors)
{
    EXPECT_THROW(plan(counts_dataset(4, 20), Method::Smote, 5, 1), InsufficientNeighbors);
    EXPECT_NO_THROW(plan(counts_dataset(6, 20), Method::Smote, 5, 1));
    const Dataset single({Point{1}, Point{2}}, {Label::Majority, Label::Majority});
    EXPECT_THROW(plan(single, Method::Smote, 1, 1), SingleClass);
}

TEST(Apportion, Examples)
{
    const std::vector<std::size_t> a{1, 4};
    EXPECT_EQ(apportion(a, 5), (std::vector<std::size_t>{1, 4}));
    const std::vector<std::size_t> b(5, 3);
    EXPECT_EQ(apportion(b, 10), (std::vector<std::size_t>(5, 2)));
    const std::vector<std::size_t> zero{0, 0, 0};
    EXPECT_EQ(apportion(zero, 4), (std::vector<std::size_t>{2, 1, 1}));
    const std::vector<std::size_t> mixed{0, 2, 0, 3};
    const auto c = apportion(mixed, 7);
    EXPECT_EQ(c[0], 0u);
    EXPECT_EQ(c[2], 0u);
    EXPECT_EQ(c[1] + c[3], 7u);
}

TEST(ApportionProperty, SumsToTotalAndRespectsZeros)
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        SeededRng rng(seed);
        std::vector<std::size_t> w(1 + rng.uniform_below(20));
        for (auto& x : w) {
            x = rng.uniform_below(3) == 0 ? 0 : rng.uniform_below(6);
        }
        const std::size_t n = rng.uniform_below(500);
        const auto c = apportion(w, n);
        ASSERT_EQ(std::accumulate(c.begin(), c.end(), std::size_t{0}), n);
        const auto total = std::accumulate(w.begin(), w.end(), std::size_t{0});
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (total > 0) {
                // Largest remainder never strays more than one from the exact quota.
                const double quota = double(w[i]) * double(n) / double(total);
                ASSERT_LT(std::abs(double(c[i]) - quota), 1.0);
                if (w[i] == 0) {
                    ASSERT_EQ(c[i], 0u);
                }
            }
        }
    }
}

TEST(Adasyn, CountsMatchMajorityNeighbours)
{
    const Dataset d = counts_dataset(15, 60, 4);
    const auto m = majority_neighbor_counts(d, 5);
    ASSERT_EQ(m.size(), 15u);
    // Oracle: brute-force neighbour search over the full dataset.
    const auto minority = d.minority_indices();
    for (std::size_t i = 0; i < minority.size(); ++i) {
        std::vector<std::pair<double, std::size_t>> all;
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (j != minority[i]) {
                all.emplace_back(euclidean_distance(d.row(minority[i]), d.row(j)), j);
            }
        }
        std::sort(all.begin(), all.end());
        std::size_t maj = 0;
        for (std::size_t t = 0; t < 5; ++t) {
            maj += d.is_minority(all[t].second) ? 0 : 1;
        }
        EXPECT_EQ(m[i], maj);
    }
    const auto counts = adasyn_counts(d, 5, 45);
    EXPECT_EQ(counts, apportion(m, 45));
}

TEST(Borderline, Classification)
{
    EXPECT_EQ(classify_borderline(5, 5), BorderlineClass::Noise);
    EXPECT_EQ(classify_borderline(3, 5), BorderlineClass::Danger);
    EXPECT_EQ(classify_borderline(1, 5), BorderlineClass::Safe);
    EXPECT_EQ(classify_borderline(2, 4), BorderlineClass::Danger);
    EXPECT_EQ(classify_borderline(2, 5), BorderlineClass::Safe);
}

TEST(Borderline, EmptyDangerSetFallsBackWithWarning)
{
    // Far-apart clusters: every minority row is safe.
    const Dataset d = make_two_gaussians(10, 30, 2, 50.0, 1);
    EXPECT_TRUE(borderline_danger_set(d, 5).empty());
    const SamplingPlan p = plan(d, Method::BorderlineSmote, 5, 1);
    EXPECT_EQ(p.n_new, 20u);
    EXPECT_FALSE(p.warnings.empty());
}

TEST(Borderline, BasesComeFromDangerSet)
{
    const Dataset d = counts_dataset(30, 90, 2);
    const auto danger = borderline_danger_set(d, 5);
    ASSERT_FALSE(danger.empty());
    const SamplingPlan p = plan(d, Method::BorderlineSmote, 5, 3);
    for (auto i : p.base_indices) {
        EXPECT_NE(std::find(danger.begin(), danger.end(), i), danger.end());
    }
}

TEST(Oversample, BalancesEveryMethodAndRecordsAreExact)
{
    for (Method m : all_methods()) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Dataset d = counts_dataset(12, 40 + seed * 7, seed);
            const Oversampled o = rebalance(d, m, seed);
            const ClassStats s = stats(o.dataset);
            ASSERT_EQ(s.n_min, s.n_maj) << to_string(m);
            ASSERT_EQ(s.ir, 1.0);
            ASSERT_EQ(o.records.size(), d.count(Label::Majority) - d.count(Label::Minority));
            for (std::size_t i = 0; i < d.size(); ++i) {
                ASSERT_EQ(o.dataset.row(i), d.row(i));
            }
            for (std::size_t i = 0; i < o.records.size(); ++i) {
                const auto& r = o.records[i];
                ASSERT_EQ(o.dataset.row(d.size() + i), r.sample);
                ASSERT_TRUE(d.is_minority(r.base_index));
                ASSERT_EQ(d.row(r.base_index), r.base);
                expect_record_consistent(r);
            }
        }
    }
}

TEST(Oversample, AdasynFollowsItsCounts)
{
    const Dataset d = counts_dataset(15, 60, 4);
    const SamplingPlan p = plan(d, Method::Adasyn, 5, 9);
    const auto counts = adasyn_counts(d, 5, 45);
    const auto minority = d.minority_indices();
    for (std::size_t i = 0; i < minority.size(); ++i) {
        EXPECT_EQ(static_cast<std::size_t>(std::count(p.base_indices.begin(), p.base_indices.end(), minority[i])),
                  counts[i]);
    }
}

TEST(Oversample, MebPartnerIsCenterOfBaseNeighbours)
{
    const Dataset d = counts_dataset(10, 25, 6);
    const Oversampled o = rebalance(d, Method::MebSmote, 4);
    const auto minority = d.minority_indices();
    const auto pool = gather(d.rows(), minority);
    for (const auto& r : o.records) {
        const auto pos = static_cast<std::size_t>(std::find(minority.begin(), minority.end(), r.base_index) -
                                                  minority.begin());
        const auto nb = gather(pool, k_nearest(pos, pool, 5).neighbor_indices);
        const Ball oracle = brute_force_meb(nb);
        EXPECT_LE(euclidean_distance(oracle.center, r.partner), 1e-9);
    }
}

TEST(Oversample, DeterministicPerSeed)
{
    const Dataset d = counts_dataset(10, 30, 5);
    for (Method m : all_methods()) {
        const auto a = rebalance(d, m, 11);
        const auto b = rebalance(d, m, 11);
        const auto c = rebalance(d, m, 12);
        EXPECT_EQ(a.dataset, b.dataset);
        EXPECT_EQ(audit_table(a.records, m), audit_table(b.records, m));
        if (m != Method::Adasyn && m != Method::BorderlineSmote) {
            EXPECT_NE(a.dataset, c.dataset);
        }
    }
}

TEST(AuditTable, HeaderAndRows)
{
    const Dataset d = counts_dataset(6, 8, 1);
    const auto o = rebalance(d, Method::Smote, 1);
    const std::string t = audit_table(o.records, Method::Smote);
    EXPECT_EQ(t.substr(0, t.find('\n')), "ordinal,method,base_index,partner_0,partner_1,coefficient,sample_0,sample_1");
    EXPECT_EQ(static_cast<std::size_t>(std::count(t.begin(), t.end(), '\n')), 3u);
}

TEST(MethodNames, RoundTrip)
{
    for (Method m : all_methods()) {
        EXPECT_EQ(parse_method(to_string(m)), m);
    }
    EXPECT_THROW(parse_method("smote2"), InvalidArgument);
}
