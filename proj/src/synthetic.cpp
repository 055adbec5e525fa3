#include "mebsmote/synthetic.hpp"

#include "mebsmote/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace mebsmote {

namespace {

constexpr std::array<BenchmarkProfile, 15> kProfiles{{
    {"jedit-3.2", 20, 90, 182, 2.02},
    {"jedit-4.0", 20, 75, 231, 3.08},
    {"ant-1.7", 20, 166, 579, 3.49},
    {"ivy-2.0", 20, 40, 312, 7.80},
    {"poi-2.0", 20, 37, 277, 7.49},
    {"camel-1.6", 20, 188, 777, 4.13},
    {"velocity-1.6", 20, 78, 151, 1.94},
    {"KC1", 21, 294, 868, 2.95},
    {"PC1", 37, 55, 624, 11.35},
    {"bupa-liver", 6, 145, 200, 1.38},
    {"wdbc", 30, 212, 357, 1.68},
    {"creditcard", 30, 492, 284315, 577.88},
    {"manufacturing", 16, 517, 2723, 5.27},
    {"ionosphere", 34, 126, 225, 1.79},
    {"pageblocks", 10, 560, 4913, 8.77},
}};

Point gaussian_point(SeededRng& rng, std::size_t dim, double shift)
{
    std::vector<double> coords(dim);
    for (double& c : coords) {
        c = standard_normal(rng);
    }
    coords[0] += shift;
    return Point(std::move(coords));
}

Dataset gaussian_pair(std::size_t n_min, std::size_t n_maj, std::size_t dim, double separation,
                      std::uint64_t seed)
{
    if (n_min == 0 || n_maj == 0 || dim == 0) {
        throw InvalidArgument("synthetic dataset needs both classes and at least one feature");
    }
    SeededRng rng(seed);
    std::vector<Point> rows;
    std::vector<Label> labels;
    rows.reserve(n_min + n_maj);
    labels.reserve(n_min + n_maj);
    for (std::size_t i = 0; i < n_min; ++i) {
        rows.push_back(gaussian_point(rng, dim, 0.0));
        labels.push_back(Label::Minority);
    }
    for (std::size_t i = 0; i < n_maj; ++i) {
        rows.push_back(gaussian_point(rng, dim, separation));
        labels.push_back(Label::Majority);
    }
    return Dataset(std::move(rows), std::move(labels));
}

} // namespace

double standard_normal(SeededRng& rng)
{
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - rng.uniform_closed01() * (1.0 - 0x1p-53);
    const double u2 = rng.uniform_closed01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Dataset make_two_gaussians(std::size_t n_min,
                           std::size_t n_maj,
                           std::size_t dim,
                           double separation,
                           std::uint64_t seed)
{
    return gaussian_pair(n_min, n_maj, dim, separation, seed);
}

std::span<const BenchmarkProfile> benchmark_profiles()
{
    return kProfiles;
}

const BenchmarkProfile& benchmark_profile(std::string_view name)
{
    for (const auto& p : kProfiles) {
        if (p.name == name) {
            return p;
        }
    }
    throw InvalidArgument("unknown benchmark profile '" + std::string(name) + "'");
}

Dataset make_profile_dataset(const BenchmarkProfile& profile, std::uint64_t seed)
{
    return gaussian_pair(profile.n_min, profile.n_maj, profile.attributes, 2.0, seed);
}

} // namespace mebsmote
