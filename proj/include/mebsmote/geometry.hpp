#pragma once

#include "mebsmote/random.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mebsmote {

// A point in n-dimensional feature space. Coordinates are always finite.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);
    explicit Point(std::span<const double> coords);

    // Origin of the given dimension.
    static Point zeros(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const noexcept { return coords_; }
    operator std::span<const double>() const noexcept { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

struct Ball {
    Point center;
    double radius = 0.0;
    // Set only for the ball of an empty support set.
    bool empty = false;

    std::size_t dim() const noexcept { return center.dim(); }
};

// Points assumed to lie on the boundary of the current ball.
// Never holds more than dim + 1 points.
using SupportSet = std::vector<Point>;

// Ball plus the support set that determines it.
struct MebSolution {
    Ball ball;
    SupportSet support;
};

// Relative containment slack used by the solver: 1e-9 * (1 + r).
double containment_tolerance(double radius) noexcept;

double euclidean_distance(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);

// True iff distance(p, ball.center) <= ball.radius + tol.
bool contains(const Ball& ball, std::span<const double> p, double tol);

// Smallest ball whose boundary passes through every support point. The
// center lies in the affine hull of the support. Affinely dependent
// supports are reduced to a maximal independent subset whose ball covers
// the remaining support points.
//
// `dim` is only consulted for an empty support, which yields a radius-0
// ball at the origin with `empty` set.
Ball ball_from_support(std::span<const Point> support, std::size_t dim);

// Exact minimum enclosing ball by Welzl's randomized algorithm. The rng
// only shuffles the input; the ball itself is unique. Inputs above
// kMoveToFrontThreshold points use the move-to-front variant, whose
// recursion depth is bounded by dim + 1.
Ball welzl_meb(std::span<const Point> points, SeededRng& rng);

// Same as welzl_meb, also returning the final support set.
MebSolution solve_meb(std::span<const Point> points, SeededRng& rng);

inline constexpr std::size_t kMoveToFrontThreshold = 1000;

// Exhaustive oracle: tries every subset of at most dim + 1 points and keeps
// the smallest ball that encloses the whole set. Exponential; meant for
// verification on a dozen points or fewer.
Ball brute_force_meb(std::span<const Point> points);

// Throws unless `points` is non-empty with a single dimension >= 1.
std::size_t validate_point_set(std::span<const Point> points);

} // namespace mebsmote
