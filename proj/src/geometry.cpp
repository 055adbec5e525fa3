#include "mebsmote/geometry.hpp"

#include "mebsmote/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <optional>
#include <string>

namespace mebsmote {

namespace {

void require_finite(std::span<const double> coords)
{
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!std::isfinite(coords[i])) {
            throw InvalidArgument("point coordinate " + std::to_string(i) + " is not finite");
        }
    }
}

void require_same_dim(std::size_t a, std::size_t b)
{
    if (a != b) {
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
    }
}

constexpr double kPivotThreshold = 1e-12;
constexpr double kResidualTolerance = 1e-7;

double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

struct Circumball {
    Ball ball;
    std::vector<std::size_t> independent;
    std::vector<std::size_t> dependent;
};

// Circumsphere of the points selected by `order`, restricted to the affine
// hull. The first selected point anchors the hull; each later difference
// vector is orthogonalized against the basis so far (modified Gram-Schmidt,
// applied twice) and dropped when what is left falls under the pivot
// threshold. With v_j = sum_i R(i,j) q_i and c - p0 = sum_i y_i q_i, the
// equidistance constraints 2 v_j . (c - p0) = |v_j|^2 are the lower
// triangular system R^T y = |v|^2 / 2.
Circumball circumball(std::span<const Point> pts, std::span<const std::size_t> order)
{
    const std::size_t dim = pts[order[0]].dim();
    const Point& anchor = pts[order[0]];

    std::vector<std::vector<double>> diffs;
    diffs.reserve(order.size() - 1);
    double scale = 0.0;
    for (std::size_t j = 1; j < order.size(); ++j) {
        std::vector<double> v(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            v[c] = pts[order[j]][c] - anchor[c];
        }
        scale = std::max(scale, std::sqrt(dot(v, v)));
        diffs.push_back(std::move(v));
    }

    Circumball out;
    out.independent.push_back(order[0]);

    std::vector<std::vector<double>> basis;
    std::vector<std::vector<double>> r_cols; // r_cols[j][i] = R(i, j)
    std::vector<double> rhs;
    for (std::size_t j = 0; j < diffs.size(); ++j) {
        std::vector<double> w = diffs[j];
        std::vector<double> coeffs(basis.size(), 0.0);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const double proj = dot(w, basis[i]);
                coeffs[i] += proj;
                for (std::size_t c = 0; c < dim; ++c) {
                    w[c] -= proj * basis[i][c];
                }
            }
        }
        const double residual = std::sqrt(dot(w, w));
        if (residual <= kPivotThreshold * scale || residual == 0.0) {
            out.dependent.push_back(order[j + 1]);
            continue;
        }
        for (double& x : w) {
            x /= residual;
        }
        coeffs.push_back(residual);
        basis.push_back(std::move(w));
        r_cols.push_back(std::move(coeffs));
        rhs.push_back(0.5 * dot(diffs[j], diffs[j]));
        out.independent.push_back(order[j + 1]);
    }

    std::vector<double> y(basis.size(), 0.0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        double acc = rhs[j];
        for (std::size_t i = 0; i < j; ++i) {
            acc -= r_cols[j][i] * y[i];
        }
        y[j] = acc / r_cols[j][j];
    }

    std::vector<double> center(anchor.coords().begin(), anchor.coords().end());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t c = 0; c < dim; ++c) {
            center[c] += y[i] * basis[i][c];
        }
    }

    double radius = 0.0;
    double min_radius = std::numeric_limits<double>::infinity();
    for (std::size_t idx : out.independent) {
        const double d = euclidean_distance(center, pts[idx]);
        radius = std::max(radius, d);
        min_radius = std::min(min_radius, d);
    }
    if (radius - min_radius > kResidualTolerance * (1.0 + radius)) {
        throw GeometryError("support ball residual " + std::to_string(radius - min_radius) +
                            " exceeds tolerance");
    }
    out.ball = Ball{Point(std::move(center)), radius, false};
    return out;
}

bool covers(const Ball& ball, std::span<const Point> pts, std::span<const std::size_t> which)
{
    const double tol = containment_tolerance(ball.radius);
    return std::all_of(which.begin(), which.end(),
                       [&](std::size_t i) { return contains(ball, pts[i], tol); });
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn)
{
    if (k > n) {
        return;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    while (true) {
        fn(std::span<const std::size_t>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

std::vector<Point> deduplicated(std::span<const Point> points)
{
    std::vector<Point> unique(points.begin(), points.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    return unique;
}

class WelzlSolver {
public:
    WelzlSolver(std::span<const Point> points, std::size_t dim) : pts_(points), dim_(dim) {}

    // Classic recursion over a prefix of the shuffled points; depth is n.
    MebSolution recursive(std::size_t n)
    {
        if (n == 0 || support_.size() == dim_ + 1) {
            return MebSolution{ball_from_support(support_, dim_), support_};
        }
        const Point& p = pts_[n - 1];
        MebSolution sol = recursive(n - 1);
        if (!sol.ball.empty && contains(sol.ball, p, containment_tolerance(sol.ball.radius))) {
            return sol;
        }
        support_.push_back(p);
        sol = recursive(n - 1);
        support_.pop_back();
        return sol;
    }

    // Move-to-front variant: iterates over the list and recurses only when a
    // point has to join the support, so depth never exceeds dim + 1.
    MebSolution move_to_front()
    {
        order_.clear();
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            order_.push_back(i);
        }
        current_ = MebSolution{ball_from_support(support_, dim_), support_};
        mtf(order_.end());
        return current_;
    }

private:
    void mtf(std::list<std::size_t>::iterator end)
    {
        current_ = MebSolution{ball_from_support(support_, dim_), support_};
        if (support_.size() == dim_ + 1) {
            return;
        }
        for (auto it = order_.begin(); it != end;) {
            auto next = std::next(it);
            const Point& p = pts_[*it];
            if (current_.ball.empty ||
                !contains(current_.ball, p, containment_tolerance(current_.ball.radius))) {
                support_.push_back(p);
                mtf(it);
                support_.pop_back();
                order_.splice(order_.begin(), order_, it);
            }
            it = next;
        }
    }

    std::span<const Point> pts_;
    std::size_t dim_;
    SupportSet support_;
    std::list<std::size_t> order_;
    MebSolution current_;
};

} // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords))
{
    require_finite(coords_);
}

Point::Point(std::initializer_list<double> coords) : coords_(coords)
{
    require_finite(coords_);
}

Point::Point(std::span<const double> coords) : coords_(coords.begin(), coords.end())
{
    require_finite(coords_);
}

double containment_tolerance(double radius) noexcept
{
    return 1e-9 * (1.0 + radius);
}

double squared_distance(std::span<const double> a, std::span<const double> b)
{
    require_same_dim(a.size(), b.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b)
{
    return std::sqrt(squared_distance(a, b));
}

bool contains(const Ball& ball, std::span<const double> p, double tol)
{
    if (tol < 0.0) {
        throw InvalidArgument("containment tolerance must be non-negative");
    }
    require_same_dim(ball.center.dim(), p.size());
    if (ball.empty) {
        return false;
    }
    return euclidean_distance(p, ball.center) <= ball.radius + tol;
}

std::size_t validate_point_set(std::span<const Point> points)
{
    if (points.empty()) {
        throw InvalidArgument("point set is empty");
    }
    const std::size_t dim = points.front().dim();
    if (dim == 0) {
        throw InvalidArgument("points must have at least one coordinate");
    }
    for (const Point& p : points) {
        require_same_dim(dim, p.dim());
    }
    return dim;
}

Ball ball_from_support(std::span<const Point> support, std::size_t dim)
{
    if (support.empty()) {
        return Ball{Point::zeros(dim), 0.0, true};
    }
    const std::size_t d = support.front().dim();
    for (const Point& p : support) {
        require_same_dim(d, p.dim());
    }
    if (support.size() > d + 1) {
        throw InvalidArgument("support set of " + std::to_string(support.size()) +
                              " points exceeds dim + 1 = " + std::to_string(d + 1));
    }
    if (support.size() == 1) {
        return Ball{support.front(), 0.0, false};
    }

    std::vector<std::size_t> all(support.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    Circumball first = circumball(support, all);
    if (first.dependent.empty() || covers(first.ball, support, first.dependent)) {
        return first.ball;
    }

    // Degenerate support: among the subsets of full affine rank, keep the
    // smallest ball that still covers every support point.
    const std::size_t rank_plus_one = first.independent.size();
    std::optional<Ball> best;
    for_each_combination(support.size(), rank_plus_one, [&](std::span<const std::size_t> subset) {
        Circumball cand;
        try {
            cand = circumball(support, subset);
        } catch (const GeometryError&) {
            return;
        }
        if (covers(cand.ball, support, all) && (!best || cand.ball.radius < best->radius)) {
            best = cand.ball;
        }
    });
    if (!best) {
        throw GeometryError("no affinely independent subset of the support covers it");
    }
    return *best;
}

MebSolution solve_meb(std::span<const Point> points, SeededRng& rng)
{
    const std::size_t dim = validate_point_set(points);
    std::vector<Point> unique = deduplicated(points);
    rng.shuffle(std::span<Point>(unique));

    WelzlSolver solver(unique, dim);
    if (unique.size() > kMoveToFrontThreshold) {
        return solver.move_to_front();
    }
    return solver.recursive(unique.size());
}

Ball welzl_meb(std::span<const Point> points, SeededRng& rng)
{
    return solve_meb(points, rng).ball;
}

Ball brute_force_meb(std::span<const Point> points)
{
    const std::size_t dim = validate_point_set(points);
    const std::vector<Point> unique = deduplicated(points);

    std::vector<std::size_t> all(unique.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }

    std::optional<Ball> best;
    const std::size_t max_size = std::min(unique.size(), dim + 1);
    for (std::size_t size = 1; size <= max_size; ++size) {
        for_each_combination(unique.size(), size, [&](std::span<const std::size_t> subset) {
            std::vector<Point> support;
            support.reserve(subset.size());
            for (std::size_t i : subset) {
                support.push_back(unique[i]);
            }
            Ball ball;
            try {
                ball = ball_from_support(support, dim);
            } catch (const GeometryError&) {
                return;
            }
            if ((!best || ball.radius < best->radius) && covers(ball, unique, all)) {
                best = std::move(ball);
            }
        });
    }
    if (!best) {
        throw GeometryError("brute force found no enclosing support ball");
    }
    return *best;
}

} // namespace mebsmote
