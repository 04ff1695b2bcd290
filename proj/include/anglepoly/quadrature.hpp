#ifndef ANGLEPOLY_QUADRATURE_HPP
#define ANGLEPOLY_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace anglepoly {

struct QuadratureRule
{
    std::vector<double> nodes;     // on [-1, 1]
    std::vector<double> weights;
};

/// N-point Gauss rule for the weight (1 - x)^a (1 + x)^b on [-1, 1], a, b > -1 (Golub-Welsch).
QuadratureRule gauss_jacobi(int points, double a, double b);

inline QuadratureRule gauss_legendre(int points) { return gauss_jacobi(points, 0.0, 0.0); }

/**
 * Integrates (t - lo)^{-left} (hi - t)^{-right} g(t) over [lo, hi] for smooth g.
 * Panels shrink geometrically (ratio 1/2) toward each end until they are no
 * wider than `resolve`, so that singularities of g lying just outside the
 * interval, at distance about `resolve`, are still integrated accurately.
 * The two end panels carry the algebraic weight; the rest use Gauss-Legendre.
 */
double integrate_singular_ends(const std::function<double(double)>& g, double lo, double hi,
                               double left, double right, double resolve, int points);

}   // namespace anglepoly

#endif
