#include "mebsmote/neighbors.hpp"

#include "mebsmote/errors.hpp"

#include <algorithm>
#include <utility>

namespace mebsmote {

std::vector<std::size_t> k_nearest_to(std::span<const double> query,
                                      std::span<const Point> pool,
                                      std::size_t k,
                                      std::optional<std::size_t> exclude)
{
    if (k == 0) {
        throw InvalidArgument("k must be positive");
    }
    const std::size_t available = pool.size() - (exclude && *exclude < pool.size() ? 1 : 0);
    if (available < k) {
        throw InsufficientNeighbors(pool.size(), k);
    }

    std::vector<std::pair<double, std::size_t>> candidates;
    candidates.reserve(available);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (exclude && *exclude == i) {
            continue;
        }
        candidates.emplace_back(euclidean_distance(query, pool[i]), i);
    }
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                      candidates.end());

    std::vector<std::size_t> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        out[i] = candidates[i].second;
    }
    return out;
}

NeighborSet k_nearest(std::size_t query_index, std::span<const Point> pool, std::size_t k)
{
    if (pool.size() < k + 1) {
        throw InsufficientNeighbors(pool.size(), k);
    }
    if (query_index >= pool.size()) {
        throw InvalidArgument("query index out of range");
    }
    return NeighborSet{query_index, k_nearest_to(pool[query_index], pool, k, query_index), k};
}

Point centroid(std::span<const Point> points)
{
    const std::size_t dim = validate_point_set(points);
    std::vector<double> sum(dim, 0.0);
    for (const Point& p : points) {
        for (std::size_t c = 0; c < dim; ++c) {
            sum[c] += p[c];
        }
    }
    const double n = static_cast<double>(points.size());
    for (double& s : sum) {
        s /= n;
    }
    return Point(std::move(sum));
}

std::vector<Point> gather(std::span<const Point> pool, std::span<const std::size_t> indices)
{
    std::vector<Point> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) {
        out.push_back(pool[i]);
    }
    return out;
}

} // namespace mebsmote
