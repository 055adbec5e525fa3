#include "mebsmote/sampling.hpp"

#include "mebsmote/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace mebsmote {

namespace {

constexpr std::array<Method, 5> kMethods{Method::Smote, Method::CentroidSmote, Method::MebSmote,
                                         Method::Adasyn, Method::BorderlineSmote};

// Stream ordinal reserved for base selection; samples use 0, 1, 2, ...
constexpr std::uint64_t kPlanStream = ~std::uint64_t{0};

void require_neighbors(std::span<const Point> neighbors)
{
    if (neighbors.empty()) {
        throw InvalidArgument("neighbor set is empty");
    }
}

SynthesisRecord make_record(const Point& base, Point partner, double coefficient, bool mirror)
{
    Point sample = interpolate(base, partner, coefficient, mirror);
    return SynthesisRecord{std::move(sample), 0, base, std::move(partner), coefficient, mirror};
}

// Majority neighbour count per minority row, searching the full dataset.
std::vector<std::size_t> count_majority_neighbors(const Dataset& dataset,
                                                  std::span<const std::size_t> minority_rows,
                                                  std::size_t k)
{
    if (dataset.size() < k + 1) {
        throw InsufficientNeighbors(dataset.size(), k);
    }
    std::vector<std::size_t> counts;
    counts.reserve(minority_rows.size());
    for (std::size_t row : minority_rows) {
        const auto nn = k_nearest_to(dataset.row(row), dataset.rows(), k, row);
        counts.push_back(static_cast<std::size_t>(std::count_if(
            nn.begin(), nn.end(), [&](std::size_t j) { return !dataset.is_minority(j); })));
    }
    return counts;
}

std::vector<std::size_t> draw_with_replacement(std::span<const std::size_t> from,
                                               std::size_t n,
                                               SeededRng& rng)
{
    std::vector<std::size_t> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(from[static_cast<std::size_t>(rng.uniform_below(from.size()))]);
    }
    return out;
}

} // namespace

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::Smote:
        return "smote";
    case Method::CentroidSmote:
        return "centroid-smote";
    case Method::MebSmote:
        return "meb-smote";
    case Method::Adasyn:
        return "adasyn";
    case Method::BorderlineSmote:
        return "borderline-smote";
    }
    return "unknown";
}

Method parse_method(std::string_view name)
{
    for (Method m : kMethods) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw InvalidArgument("unknown oversampling method '" + std::string(name) +
                          "' (expected smote, centroid-smote, meb-smote, adasyn or borderline-smote)");
}

std::span<const Method> all_methods()
{
    return kMethods;
}

Point interpolate(std::span<const double> base,
                  std::span<const double> partner,
                  double coefficient,
                  bool mirror)
{
    if (base.size() != partner.size()) {
        throw DimensionMismatch("interpolation endpoints differ in dimension");
    }
    std::vector<double> out(base.size());
    for (std::size_t c = 0; c < base.size(); ++c) {
        out[c] = mirror ? base[c] + coefficient * (base[c] - partner[c])
                        : base[c] + coefficient * (partner[c] - base[c]);
    }
    return Point(std::move(out));
}

SynthesisRecord smote_sample(const Point& base,
                             std::span<const Point> neighbors,
                             SeededRng& rng,
                             bool mirror)
{
    require_neighbors(neighbors);
    const auto pick = static_cast<std::size_t>(rng.uniform_below(neighbors.size()));
    const double delta = rng.uniform_closed01();
    return make_record(base, neighbors[pick], delta, mirror);
}

SynthesisRecord centroid_smote_sample(const Point& base,
                                      std::span<const Point> neighbors,
                                      SeededRng& rng,
                                      bool mirror)
{
    require_neighbors(neighbors);
    const double coeff = rng.uniform_closed01();
    return make_record(base, centroid(neighbors), coeff, mirror);
}

SynthesisRecord meb_smote_sample(const Point& base,
                                 std::span<const Point> neighbors,
                                 SeededRng& rng,
                                 const SamplerOptions& options)
{
    require_neighbors(neighbors);
    const double alpha = rng.uniform_closed01();
    Ball ball;
    if (options.meb_includes_base) {
        std::vector<Point> with_base(neighbors.begin(), neighbors.end());
        with_base.push_back(base);
        ball = welzl_meb(with_base, rng);
    } else {
        ball = welzl_meb(neighbors, rng);
    }
    return make_record(base, std::move(ball.center), alpha, options.mirror);
}

std::vector<std::size_t> majority_neighbor_counts(const Dataset& dataset, std::size_t k)
{
    const auto minority = dataset.minority_indices();
    return count_majority_neighbors(dataset, minority, k);
}

std::vector<std::size_t> apportion(std::span<const std::size_t> weights, std::size_t n_new)
{
    if (weights.empty()) {
        throw InvalidArgument("cannot apportion samples over an empty minority class");
    }
    std::vector<std::size_t> w(weights.begin(), weights.end());
    std::size_t total = std::accumulate(w.begin(), w.end(), std::size_t{0});
    if (total == 0) {
        std::fill(w.begin(), w.end(), std::size_t{1});
        total = w.size();
    }

    // Exact integer largest-remainder: quota_i = w_i * n_new / total.
    std::vector<std::size_t> counts(w.size());
    std::vector<std::size_t> remainders(w.size());
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const std::size_t scaled = w[i] * n_new;
        counts[i] = static_cast<std::size_t>(scaled / total);
        remainders[i] = static_cast<std::size_t>(scaled % total);
        assigned += counts[i];
    }
    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
    for (std::size_t i = 0; assigned < n_new; ++i) {
        ++counts[order[i]];
        ++assigned;
    }
    return counts;
}

std::vector<std::size_t> adasyn_counts(const Dataset& dataset, std::size_t k, std::size_t n_new)
{
    if (dataset.count(Label::Minority) == 0) {
        throw InvalidArgument("adasyn: dataset has no minority samples");
    }
    if (k == 0) {
        throw InvalidArgument("k must be positive");
    }
    return apportion(majority_neighbor_counts(dataset, k), n_new);
}

BorderlineClass classify_borderline(std::size_t majority_neighbors, std::size_t k)
{
    if (majority_neighbors >= k) {
        return BorderlineClass::Noise;
    }
    if (2 * majority_neighbors >= k) {
        return BorderlineClass::Danger;
    }
    return BorderlineClass::Safe;
}

std::vector<std::size_t> borderline_danger_set(const Dataset& dataset, std::size_t k)
{
    if (k == 0) {
        throw InvalidArgument("k must be positive");
    }
    const auto minority = dataset.minority_indices();
    const auto counts = count_majority_neighbors(dataset, minority, k);
    std::vector<std::size_t> danger;
    for (std::size_t i = 0; i < minority.size(); ++i) {
        if (classify_borderline(counts[i], k) == BorderlineClass::Danger) {
            danger.push_back(minority[i]);
        }
    }
    return danger;
}

SamplingPlan plan(const Dataset& dataset, Method method, std::size_t k, std::uint64_t seed)
{
    if (k == 0) {
        throw InvalidArgument("k must be positive");
    }
    const std::size_t n_min = dataset.count(Label::Minority);
    const std::size_t n_maj = dataset.count(Label::Majority);
    if (n_min == 0 || n_maj == 0) {
        throw SingleClass("oversampling needs both classes; dataset has " + std::to_string(n_min) +
                          " minority and " + std::to_string(n_maj) + " majority samples");
    }

    SamplingPlan out;
    out.method = method;
    out.k = k;
    out.seed = seed;
    out.n_new = n_maj > n_min ? n_maj - n_min : 0;
    if (out.n_new == 0) {
        out.warnings.push_back("dataset is already balanced; nothing to synthesize");
        return out;
    }
    if (n_min < k + 1) {
        throw InsufficientNeighbors(n_min, k);
    }

    const auto minority = dataset.minority_indices();
    SeededRng rng(mix_seed(seed, kPlanStream));
    switch (method) {
    case Method::Smote:
    case Method::CentroidSmote:
    case Method::MebSmote:
        out.base_indices = draw_with_replacement(minority, out.n_new, rng);
        break;
    case Method::Adasyn: {
        const auto counts = adasyn_counts(dataset, k, out.n_new);
        for (std::size_t i = 0; i < minority.size(); ++i) {
            out.base_indices.insert(out.base_indices.end(), counts[i], minority[i]);
        }
        break;
    }
    case Method::BorderlineSmote: {
        const auto danger = borderline_danger_set(dataset, k);
        if (danger.empty()) {
            out.warnings.push_back(
                "borderline-smote: no minority sample is in danger; falling back to plain smote bases");
            out.base_indices = draw_with_replacement(minority, out.n_new, rng);
        } else {
            out.base_indices = draw_with_replacement(danger, out.n_new, rng);
        }
        break;
    }
    }
    return out;
}

Oversampled oversample(const Dataset& dataset, const SamplingPlan& plan, const SamplerOptions& options)
{
    if (plan.base_indices.size() != plan.n_new) {
        throw InvalidArgument("plan lists " + std::to_string(plan.base_indices.size()) +
                              " bases for " + std::to_string(plan.n_new) + " new samples");
    }
    if (plan.n_new == 0) {
        return Oversampled{dataset, {}};
    }

    const auto minority = dataset.minority_indices();
    std::vector<std::size_t> pool_pos(dataset.size(), minority.size());
    for (std::size_t i = 0; i < minority.size(); ++i) {
        pool_pos[minority[i]] = i;
    }
    const std::vector<Point> pool = gather(dataset.rows(), minority);
    if (pool.size() < plan.k + 1) {
        throw InsufficientNeighbors(pool.size(), plan.k);
    }

    std::vector<std::optional<std::vector<Point>>> neighbor_cache(pool.size());
    std::vector<SynthesisRecord> records;
    records.reserve(plan.n_new);
    std::vector<Point> synthetic;
    synthetic.reserve(plan.n_new);

    SamplerOptions sampler = options;
    sampler.k = plan.k;
    for (std::size_t i = 0; i < plan.n_new; ++i) {
        const std::size_t row = plan.base_indices[i];
        if (row >= dataset.size() || !dataset.is_minority(row)) {
            throw InvalidArgument("plan base " + std::to_string(row) + " is not a minority row");
        }
        const std::size_t pos = pool_pos[row];
        auto& neighbors = neighbor_cache[pos];
        if (!neighbors) {
            neighbors = gather(pool, k_nearest(pos, pool, plan.k).neighbor_indices);
        }

        SeededRng rng(mix_seed(plan.seed, i));
        SynthesisRecord rec;
        switch (plan.method) {
        case Method::Smote:
        case Method::Adasyn:
        case Method::BorderlineSmote:
            rec = smote_sample(pool[pos], *neighbors, rng, sampler.mirror);
            break;
        case Method::CentroidSmote:
            rec = centroid_smote_sample(pool[pos], *neighbors, rng, sampler.mirror);
            break;
        case Method::MebSmote:
            rec = meb_smote_sample(pool[pos], *neighbors, rng, sampler);
            break;
        }
        rec.base_index = row;
        synthetic.push_back(rec.sample);
        records.push_back(std::move(rec));
    }
    return Oversampled{dataset.appended(synthetic, Label::Minority), std::move(records)};
}

Oversampled rebalance(const Dataset& dataset,
                      Method method,
                      std::uint64_t seed,
                      const SamplerOptions& options)
{
    return oversample(dataset, plan(dataset, method, options.k, seed), options);
}

std::string audit_table(std::span<const SynthesisRecord> records, Method method)
{
    std::ostringstream out;
    const std::size_t dim = records.empty() ? 0 : records.front().sample.dim();
    out << "ordinal,method,base_index";
    for (std::size_t c = 0; c < dim; ++c) {
        out << ",partner_" << c;
    }
    out << ",coefficient";
    for (std::size_t c = 0; c < dim; ++c) {
        out << ",sample_" << c;
    }
    out << '\n';
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << i << ',' << to_string(method) << ',' << r.base_index;
        for (double v : r.partner.coords()) {
            out << ',' << format_double(v);
        }
        out << ',' << format_double(r.coefficient);
        for (double v : r.sample.coords()) {
            out << ',' << format_double(v);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace mebsmote
