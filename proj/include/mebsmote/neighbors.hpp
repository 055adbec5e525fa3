#pragma once

#include "mebsmote/geometry.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mebsmote {

// The k nearest neighbours of one pool member, nearest first.
struct NeighborSet {
    std::size_t base_index = 0;
    std::vector<std::size_t> neighbor_indices;
    std::size_t k = 0;
};

// k nearest pool members to pool[query_index], excluding the query itself.
// Ordered by ascending distance, ties by ascending pool index.
// Throws InsufficientNeighbors when pool.size() < k + 1.
NeighborSet k_nearest(std::size_t query_index, std::span<const Point> pool, std::size_t k);

// k nearest pool members to an arbitrary query point. `exclude` removes
// one pool index from consideration (the query's own row, typically).
std::vector<std::size_t> k_nearest_to(std::span<const double> query,
                                      std::span<const Point> pool,
                                      std::size_t k,
                                      std::optional<std::size_t> exclude = std::nullopt);

// Coordinate-wise mean.
Point centroid(std::span<const Point> points);

// Gathers pool[indices[i]] into a new vector.
std::vector<Point> gather(std::span<const Point> pool, std::span<const std::size_t> indices);

} // namespace mebsmote
