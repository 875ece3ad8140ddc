// Euclidean primitives: points, point sets, landmark sets (points and
// segments), distance-to-set functions and Euclidean offsets.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "admetric/errors.hpp"

namespace admetric::geom {

using Point = std::vector<double>;

// Throws InputError unless all coordinates are finite and dimension >= 1.
void validate_point(std::span<const double> x);

double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);

// Distance from x to the closed segment [a, b], any dimension.
double point_segment_distance(std::span<const double> x, std::span<const double> a,
                              std::span<const double> b);

// Finite ordered list of points of a common dimension. Immutable after
// construction; coordinates are stored flat for cache-friendly scans.
class PointSet {
  public:
    explicit PointSet(const std::vector<Point>& points);
    PointSet(std::vector<double> flat, int dim);

    int dimension() const { return dim_; }
    std::size_t size() const { return flat_.size() / dim_; }
    std::span<const double> point(std::size_t i) const {
        return {flat_.data() + i * dim_, static_cast<std::size_t>(dim_)};
    }
    Point point_copy(std::size_t i) const {
        auto p = point(i);
        return Point(p.begin(), p.end());
    }
    const std::vector<double>& flat() const { return flat_; }

    // True if every point of this set coincides with some point of other
    // within tol (used for sample-inclusion preconditions).
    bool subset_of(const PointSet& other, double tol = 1e-12) const;

  private:
    std::vector<double> flat_;
    int dim_ = 0;
};

struct LandmarkPrimitive {
    enum class Kind { point, segment };
    Kind kind = Kind::point;
    Point a;  // the point, or the first endpoint
    Point b;  // second endpoint (segments only)
};

// Finite union of points and segments with exact Euclidean distance queries.
class LandmarkSet {
  public:
    explicit LandmarkSet(std::vector<LandmarkPrimitive> primitives);

    static LandmarkSet single_point(Point p);

    int dimension() const { return dim_; }
    std::size_t size() const { return primitives_.size(); }
    const LandmarkPrimitive& primitive(std::size_t i) const { return primitives_[i]; }
    const std::vector<LandmarkPrimitive>& primitives() const { return primitives_; }

    // Axis-aligned bounding box of all primitives.
    void bounds(Point& lo, Point& hi) const;

    double distance_to(std::span<const double> x) const;

  private:
    std::vector<LandmarkPrimitive> primitives_;
    int dim_ = 0;
};

// f_L(x): exact minimum Euclidean distance from x to the landmark set.
double landmark_distance(std::span<const double> x, const LandmarkSet& L);

// f_Y(x): exact minimum Euclidean distance from x to a finite point set.
double euclidean_set_distance(std::span<const double> x, const PointSet& Y);

// Membership in the closed Euclidean offset L^beta = { f_L <= beta }.
bool euclidean_offset_contains(std::span<const double> x, const LandmarkSet& L, double beta);

}  // namespace admetric::geom
