#include "admetric/geometry.hpp"

#include <cmath>
#include <limits>

namespace admetric::geom {

void validate_point(std::span<const double> x) {
    if (x.empty()) throw InputError("point must have dimension >= 1");
    for (double c : x)
        if (!std::isfinite(c)) throw InputError("point coordinate is not finite");
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

double point_segment_distance(std::span<const double> x, std::span<const double> a,
                              std::span<const double> b) {
    double ab2 = 0.0, ax_ab = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = b[i] - a[i];
        ab2 += d * d;
        ax_ab += (x[i] - a[i]) * d;
    }
    double t = ab2 > 0.0 ? ax_ab / ab2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - (a[i] + t * (b[i] - a[i]));
        s += d * d;
    }
    return std::sqrt(s);
}

PointSet::PointSet(const std::vector<Point>& points) {
    if (points.empty()) throw InputError("point set must be nonempty");
    dim_ = static_cast<int>(points.front().size());
    flat_.reserve(points.size() * dim_);
    for (const auto& p : points) {
        validate_point(p);
        if (static_cast<int>(p.size()) != dim_)
            throw InputError("point set has inconsistent dimensions");
        flat_.insert(flat_.end(), p.begin(), p.end());
    }
}

PointSet::PointSet(std::vector<double> flat, int dim) : flat_(std::move(flat)), dim_(dim) {
    if (dim_ < 1) throw InputError("point set dimension must be >= 1");
    if (flat_.empty() || flat_.size() % dim_ != 0)
        throw InputError("flat coordinate array size is not a multiple of the dimension");
    validate_point(flat_);
}

bool PointSet::subset_of(const PointSet& other, double tol) const {
    if (dim_ != other.dim_) return false;
    const double tol2 = tol * tol;
    for (std::size_t i = 0; i < size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < other.size() && !found; ++j)
            found = squared_distance(point(i), other.point(j)) <= tol2;
        if (!found) return false;
    }
    return true;
}

LandmarkSet::LandmarkSet(std::vector<LandmarkPrimitive> primitives)
    : primitives_(std::move(primitives)) {
    if (primitives_.empty()) throw InputError("landmark set must be nonempty");
    dim_ = static_cast<int>(primitives_.front().a.size());
    for (const auto& prim : primitives_) {
        validate_point(prim.a);
        if (static_cast<int>(prim.a.size()) != dim_)
            throw InputError("landmark primitives have inconsistent dimensions");
        if (prim.kind == LandmarkPrimitive::Kind::segment) {
            validate_point(prim.b);
            if (static_cast<int>(prim.b.size()) != dim_)
                throw InputError("landmark primitives have inconsistent dimensions");
            if (squared_distance(prim.a, prim.b) == 0.0)
                throw InputError("segment endpoints must be distinct");
        }
    }
}

LandmarkSet LandmarkSet::single_point(Point p) {
    LandmarkPrimitive prim;
    prim.kind = LandmarkPrimitive::Kind::point;
    prim.a = std::move(p);
    return LandmarkSet({std::move(prim)});
}

void LandmarkSet::bounds(Point& lo, Point& hi) const {
    lo.assign(dim_, std::numeric_limits<double>::infinity());
    hi.assign(dim_, -std::numeric_limits<double>::infinity());
    auto take = [&](const Point& p) {
        for (int i = 0; i < dim_; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    };
    for (const auto& prim : primitives_) {
        take(prim.a);
        if (prim.kind == LandmarkPrimitive::Kind::segment) take(prim.b);
    }
}

double LandmarkSet::distance_to(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw InputError("query point dimension does not match landmark set");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& prim : primitives_) {
        const double d = prim.kind == LandmarkPrimitive::Kind::point
                             ? distance(x, prim.a)
                             : point_segment_distance(x, prim.a, prim.b);
        best = std::min(best, d);
    }
    return best;
}

double landmark_distance(std::span<const double> x, const LandmarkSet& L) {
    return L.distance_to(x);
}

double euclidean_set_distance(std::span<const double> x, const PointSet& Y) {
    if (static_cast<int>(x.size()) != Y.dimension())
        throw InputError("query point dimension does not match point set");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < Y.size(); ++i)
        best = std::min(best, squared_distance(x, Y.point(i)));
    return std::sqrt(best);
}

bool euclidean_offset_contains(std::span<const double> x, const LandmarkSet& L, double beta) {
    if (beta < 0.0) throw InputError("offset radius must be nonnegative");
    return landmark_distance(x, L) <= beta;
}

}  // namespace admetric::geom
