// Mollified landmark distance. f_L is convolved with a fixed C-infinity bump
// of radius kernel_radius = beta * alpha, evaluated by a fixed-order
// tensor-product Gauss-Legendre rule restricted to the unit ball of the bump.
// Discrete weights are normalized to unit mass, so every evaluation is a
// convex combination of f_L values taken strictly inside the kernel radius;
// this yields |f~_L(x) - f_L(x)| < beta * alpha pointwise and therefore the
// strict (1 +- alpha) envelope outside the closed offset L^beta.
#pragma once

#include <string>
#include <vector>

#include "admetric/quadrature.hpp"

namespace admetric::metric {

struct SmoothingConfig {
    double alpha = 0.0;           // relative envelope, in (0,1)
    double beta = 0.0;            // offset kept clear of the landmarks, in (0,1)
    std::string kernel = "poly-exp-bump";
    int quadrature_order = 0;     // points per axis; 0 = dimension-based default

    double kernel_radius() const { return beta * alpha; }
    void validate() const;
};

// Discrete mollifier: unit-radius offsets and unit-mass weights.
class MollifierKernel {
  public:
    MollifierKernel(int dim, int order);

    int dimension() const { return dim_; }
    std::size_t size() const { return weights_.size(); }
    std::span<const double> offset(std::size_t i) const {
        return {offsets_.data() + i * dim_, static_cast<std::size_t>(dim_)};
    }
    double weight(std::size_t i) const { return weights_[i]; }

    // Convolves an arbitrary scalar function with the kernel scaled to
    // radius at the point x.
    template <typename Fn>
    double convolve(std::span<const double> x, double radius, Fn&& f) const {
        std::vector<double> y(dim_);
        double acc = 0.0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            auto u = offset(i);
            for (int k = 0; k < dim_; ++k) y[k] = x[k] - radius * u[k];
            acc += weights_[i] * f(std::span<const double>(y));
        }
        return acc;
    }

    static int default_order(int dim);

  private:
    int dim_;
    std::vector<double> offsets_;  // size * dim, all strictly inside the unit ball
    std::vector<double> weights_;  // positive, sums to 1
};

// f~_L(x) for x outside L^beta. Throws InputError inside the offset (the
// envelope guarantee only holds on the complement of L^beta).
double smoothed_landmark_distance(std::span<const double> x, const geom::LandmarkSet& L,
                                  const SmoothingConfig& cfg);

// The same convolution as an unguarded weight field (defined everywhere, so
// quadrature may probe points near the offset boundary). 1-Lipschitz.
class SmoothedWeight final : public WeightField {
  public:
    SmoothedWeight(geom::LandmarkSet landmarks, const SmoothingConfig& cfg);
    double eval(std::span<const double> x) const override;
    int dimension() const override { return landmarks_.dimension(); }
    const geom::LandmarkSet& landmarks() const { return landmarks_; }
    const MollifierKernel& kernel() const { return kernel_; }
    double radius() const { return radius_; }

  private:
    geom::LandmarkSet landmarks_;
    MollifierKernel kernel_;
    double radius_;
};

}  // namespace admetric::metric
