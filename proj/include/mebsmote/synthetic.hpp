#pragma once

#include "mebsmote/dataset.hpp"
#include "mebsmote/random.hpp"

#include <cstdint>
#include <span>
#include <string_view>

namespace mebsmote {

// Standard normal deviate (Box-Muller on SeededRng uniforms).
double standard_normal(SeededRng& rng);

// Two isotropic unit-variance Gaussian clusters: minority centred at the
// origin, majority at (separation, 0, ..., 0).
Dataset make_two_gaussians(std::size_t n_min,
                           std::size_t n_maj,
                           std::size_t dim,
                           double separation,
                           std::uint64_t seed);

// Class counts and attribute count of a public benchmark dataset.
struct BenchmarkProfile {
    std::string_view name;
    std::size_t attributes;
    std::size_t n_min;
    std::size_t n_maj;
    double ir;
};

// The fifteen benchmark datasets (software defect prediction, medical
// diagnosis, fraud and fault detection) with their reported class counts.
std::span<const BenchmarkProfile> benchmark_profiles();

// Profile by name; throws InvalidArgument when unknown.
const BenchmarkProfile& benchmark_profile(std::string_view name);

// Synthetic stand-in with the profile's exact class counts and attribute
// count: overlapping Gaussian clusters, minority shifted by two standard
// deviations along the first axis.
Dataset make_profile_dataset(const BenchmarkProfile& profile, std::uint64_t seed);

} // namespace mebsmote
