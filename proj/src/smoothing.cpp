#include "admetric/smoothing.hpp"

#include <cmath>

namespace admetric::metric {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

// C-infinity bump profile on the open unit ball, zero outside.
double bump(double r2) {
    if (r2 >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - r2));
}

}  // namespace

void SmoothingConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("smoothing alpha must lie in (0,1)");
    if (!(beta > 0.0 && beta < 1.0)) throw InputError("smoothing beta must lie in (0,1)");
    if (quadrature_order < 0 || quadrature_order > 64)
        throw InputError("smoothing quadrature order out of range");
}

int MollifierKernel::default_order(int dim) {
    if (dim <= 2) return 8;
    if (dim == 3) return 6;
    return 4;
}

MollifierKernel::MollifierKernel(int dim, int order) : dim_(dim) {
    if (dim < 1) throw InputError("kernel dimension must be >= 1");
    if (order <= 0) order = default_order(dim);
    std::vector<double> nodes, weights;
    gauss_legendre(order, nodes, weights);

    std::vector<int> idx(dim, 0);
    std::vector<double> u(dim);
    double mass = 0.0;
    while (true) {
        double w = 1.0, r2 = 0.0;
        for (int k = 0; k < dim; ++k) {
            u[k] = nodes[idx[k]];
            w *= weights[idx[k]];
            r2 += u[k] * u[k];
        }
        const double phi = bump(r2);
        if (phi > 0.0) {
            offsets_.insert(offsets_.end(), u.begin(), u.end());
            weights_.push_back(w * phi);
            mass += w * phi;
        }
        int k = 0;
        for (; k < dim; ++k) {
            if (++idx[k] < order) break;
            idx[k] = 0;
        }
        if (k == dim) break;
    }
    for (double& w : weights_) w /= mass;
}

double smoothed_landmark_distance(std::span<const double> x, const geom::LandmarkSet& L,
                                  const SmoothingConfig& cfg) {
    cfg.validate();
    if (geom::landmark_distance(x, L) <= cfg.beta)
        throw InputError("smoothed landmark distance queried inside the excluded offset L^beta");
    const int order = cfg.quadrature_order > 0 ? cfg.quadrature_order
                                               : MollifierKernel::default_order(L.dimension());
    static thread_local std::unique_ptr<MollifierKernel> cached;
    static thread_local int cached_order = -1;
    if (!cached || cached->dimension() != L.dimension() || cached_order != order) {
        cached = std::make_unique<MollifierKernel>(L.dimension(), order);
        cached_order = order;
    }
    return cached->convolve(x, cfg.kernel_radius(),
                            [&](std::span<const double> y) { return L.distance_to(y); });
}

SmoothedWeight::SmoothedWeight(geom::LandmarkSet landmarks, const SmoothingConfig& cfg)
    : landmarks_(std::move(landmarks)),
      kernel_(landmarks_.dimension(), cfg.quadrature_order > 0
                                          ? cfg.quadrature_order
                                          : MollifierKernel::default_order(landmarks_.dimension())),
      radius_(cfg.kernel_radius()) {
    cfg.validate();
}

double SmoothedWeight::eval(std::span<const double> x) const {
    return kernel_.convolve(x, radius_,
                            [&](std::span<const double> y) { return landmarks_.distance_to(y); });
}

}  // namespace admetric::metric
