#pragma once

#include "mebsmote/dataset.hpp"
#include "mebsmote/geometry.hpp"
#include "mebsmote/neighbors.hpp"
#include "mebsmote/random.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mebsmote {

enum class Method { Smote, CentroidSmote, MebSmote, Adasyn, BorderlineSmote };

// Kebab-case name: smote, centroid-smote, meb-smote, adasyn, borderline-smote.
std::string_view to_string(Method method);
Method parse_method(std::string_view name);
std::span<const Method> all_methods();

struct SamplerOptions {
    std::size_t k = 5;
    // Use sample = base + c * (base - partner) instead of interpolating
    // toward the partner.
    bool mirror = false;
    // Include the base sample in the point set whose enclosing ball is solved.
    bool meb_includes_base = false;
};

// How many samples to synthesize and from which minority rows.
struct SamplingPlan {
    std::size_t n_new = 0;
    // Dataset row indices of the synthesis bases, one per new sample.
    std::vector<std::size_t> base_indices;
    Method method = Method::Smote;
    std::size_t k = 5;
    std::uint64_t seed = 0;
    std::vector<std::string> warnings;
};

// One synthetic sample and how it was made.
struct SynthesisRecord {
    Point sample;
    std::size_t base_index = 0;
    Point base;
    // Neighbour, neighbour centroid or enclosing-ball center.
    Point partner;
    double coefficient = 0.0;
    bool mirrored = false;
};

// base + coefficient * (partner - base), or base + coefficient * (base - partner)
// when mirrored. Coordinates are computed exactly as written so the audit
// trail can be re-evaluated bit for bit.
Point interpolate(std::span<const double> base,
                  std::span<const double> partner,
                  double coefficient,
                  bool mirror = false);

// Random neighbour, coefficient uniform on [0, 1].
SynthesisRecord smote_sample(const Point& base,
                             std::span<const Point> neighbors,
                             SeededRng& rng,
                             bool mirror = false);

// Partner is the neighbours' centroid.
SynthesisRecord centroid_smote_sample(const Point& base,
                                      std::span<const Point> neighbors,
                                      SeededRng& rng,
                                      bool mirror = false);

// Partner is the center of the minimum enclosing ball of the neighbours.
SynthesisRecord meb_smote_sample(const Point& base,
                                 std::span<const Point> neighbors,
                                 SeededRng& rng,
                                 const SamplerOptions& options = {});

// Number of majority rows among each minority row's k nearest neighbours
// in the full dataset. Aligned with dataset.minority_indices().
std::vector<std::size_t> majority_neighbor_counts(const Dataset& dataset, std::size_t k);

// Per-minority synthesis counts weighted by difficulty (share of majority
// neighbours). Largest-remainder rounding, so the counts sum to n_new.
// Falls back to uniform counts when no minority row has a majority neighbour.
std::vector<std::size_t> adasyn_counts(const Dataset& dataset, std::size_t k, std::size_t n_new);

// Same rounding rule on precomputed majority-neighbour counts.
std::vector<std::size_t> apportion(std::span<const std::size_t> weights, std::size_t n_new);

enum class BorderlineClass { Safe, Danger, Noise };

// m majority neighbours out of k: noise if m == k, danger if k/2 <= m < k,
// safe otherwise.
BorderlineClass classify_borderline(std::size_t majority_neighbors, std::size_t k);

// Row indices of minority samples in danger.
std::vector<std::size_t> borderline_danger_set(const Dataset& dataset, std::size_t k);

// n_new = n_maj - n_min (clamped at 0) bases drawn with replacement.
// Adasyn expands its per-sample counts in row order; borderline-smote
// draws from the danger set and falls back to all minority rows (with a
// warning) when that set is empty.
SamplingPlan plan(const Dataset& dataset, Method method, std::size_t k, std::uint64_t seed);

struct Oversampled {
    Dataset dataset;
    std::vector<SynthesisRecord> records;
};

// Original rows followed by one synthetic minority row per plan entry.
// Sample i draws from its own generator seeded mix_seed(plan.seed, i).
Oversampled oversample(const Dataset& dataset,
                       const SamplingPlan& plan,
                       const SamplerOptions& options = {});

// plan + oversample.
Oversampled rebalance(const Dataset& dataset,
                      Method method,
                      std::uint64_t seed,
                      const SamplerOptions& options = {});

// Audit trail as CSV: ordinal, method, base_index, partner_*, coefficient, sample_*.
std::string audit_table(std::span<const SynthesisRecord> records, Method method);

} // namespace mebsmote
