// Certified line integrals of 1/f along straight segments, where f is any
// positive 1-Lipschitz weight (the landmark distance f_L or its mollified
// variant). Recursive midpoint bisection: on a piece of length len with
// midpoint m, 1-Lipschitzness pins the piece integral inside
//   [ len / (f(m) + len/2) , len / (f(m) - len/2) ],
// and pieces are split until the enclosure is tight relative to its lower end.
#pragma once

#include <memory>
#include <span>

#include "admetric/geometry.hpp"

namespace admetric::metric {

// Positive 1-Lipschitz scalar field used as the metric's conformal weight.
class WeightField {
  public:
    virtual ~WeightField() = default;
    virtual double eval(std::span<const double> x) const = 0;
    virtual int dimension() const = 0;
};

class LandmarkWeight final : public WeightField {
  public:
    explicit LandmarkWeight(geom::LandmarkSet landmarks) : landmarks_(std::move(landmarks)) {}
    double eval(std::span<const double> x) const override { return landmarks_.distance_to(x); }
    int dimension() const override { return landmarks_.dimension(); }
    const geom::LandmarkSet& landmarks() const { return landmarks_; }

  private:
    geom::LandmarkSet landmarks_;
};

// Certified enclosure of a nonnegative integral.
struct CertifiedValue {
    double lower = 0.0;
    double upper = 0.0;
    double estimate() const { return 0.5 * (lower + upper); }
};

// Enclosure of the integral of 1/w over the straight segment [a, b] with
// upper - lower <= rel_tol * lower. Endpoint order does not affect the result
// (the segment is canonicalized first). Throws DivergentIntegralError when a
// finite enclosure cannot be certified (the segment approaches { w = 0 }).
CertifiedValue segment_cost_certified(std::span<const double> a, std::span<const double> b,
                                      const WeightField& weight, double rel_tol);

// Midpoint of the certified enclosure: within relative error rel_tol of the
// exact line integral of 1/f_L over [a, b].
double segment_cost(std::span<const double> a, std::span<const double> b,
                    const geom::LandmarkSet& L, double rel_tol);

}  // namespace admetric::metric
