#include "admetric/quadrature.hpp"

#include <cmath>
#include <vector>

namespace admetric::metric {

namespace {

struct Piece {
    double t0, t1;  // parameter range in [0, 1] along the canonical segment
};

}  // namespace

CertifiedValue segment_cost_certified(std::span<const double> a, std::span<const double> b,
                                      const WeightField& weight, double rel_tol) {
    const std::size_t dim = a.size();
    if (b.size() != dim || static_cast<int>(dim) != weight.dimension())
        throw InputError("segment endpoints and weight field dimensions differ");
    geom::validate_point(a);
    geom::validate_point(b);
    if (!(rel_tol > 0.0)) throw InputError("rel_tol must be positive");

    // Canonical orientation: results are symmetric in (a, b) by construction.
    std::span<const double> lo_pt = a, hi_pt = b;
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i] < b[i]) break;
        if (a[i] > b[i]) {
            lo_pt = b;
            hi_pt = a;
            break;
        }
    }

    const double total_len = geom::distance(lo_pt, hi_pt);
    if (total_len == 0.0) return {0.0, 0.0};

    const double min_piece = 1e-12;  // parameter-space floor before declaring divergence
    std::vector<double> mid(dim);
    CertifiedValue sum;
    std::vector<Piece> stack{{0.0, 1.0}};
    while (!stack.empty()) {
        const Piece piece = stack.back();
        stack.pop_back();
        const double tm = 0.5 * (piece.t0 + piece.t1);
        for (std::size_t i = 0; i < dim; ++i)
            mid[i] = lo_pt[i] + tm * (hi_pt[i] - lo_pt[i]);
        const double len = (piece.t1 - piece.t0) * total_len;
        const double fm = weight.eval(mid);
        const double margin = fm - 0.5 * len;
        if (margin > 0.0) {
            const double lower = len / (fm + 0.5 * len);
            const double upper = len / margin;
            if (upper - lower <= rel_tol * lower) {
                sum.lower += lower;
                sum.upper += upper;
                continue;
            }
        }
        if (piece.t1 - piece.t0 < min_piece)
            throw DivergentIntegralError(
                "segment cost enclosure diverges: the segment approaches the landmark set");
        stack.push_back({piece.t0, tm});
        stack.push_back({tm, piece.t1});
    }
    return sum;
}

double segment_cost(std::span<const double> a, std::span<const double> b,
                    const geom::LandmarkSet& L, double rel_tol) {
    LandmarkWeight w(L);
    return segment_cost_certified(a, b, w, rel_tol).estimate();
}

}  // namespace admetric::metric
