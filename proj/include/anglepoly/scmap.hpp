#ifndef ANGLEPOLY_SCMAP_HPP
#define ANGLEPOLY_SCMAP_HPP

#include <complex>
#include <vector>

#include "anglepoly/necklace.hpp"

namespace anglepoly {

/**
 * A convex polygon with prescribed edge lengths s_1..s_n.  Edge k has heading
 * psi_k, with psi_1 = base_heading and psi_{k+1} = psi_k + turns[k - 1].
 */
struct FixedLengthsShape
{
    std::vector<double> lengths;
    std::vector<double> turns;
    double base_heading = 0;

    int size() const { return static_cast<int>(lengths.size()); }
    std::vector<double> edge_headings() const;
    /// |sum s_k e^{i psi_k}|.
    double closure_residual() const;
};

/// Checks lengths and turns are nonnegative, the turns sum to 2 pi and the polygon closes.
void validate_shape(const FixedLengthsShape& shape);

/// Builds a shape from consecutive edge vectors of a ccw convex polygon.
FixedLengthsShape shape_from_edges(const std::vector<std::complex<double>>& edges);

/// All edges equal turns: the regular polygon when the lengths agree.
FixedLengthsShape equiangular_shape(const std::vector<double>& lengths);

/// Convex polygon inscribed in a circle with the given side lengths (max < sum of the rest).
FixedLengthsShape inscribed_shape(const std::vector<double>& lengths);

/**
 * Shape with the given lengths whose turn between edges k and k + 1 is rho:
 * those two edges are fused into one side of an inscribed polygon and then
 * bent by rho, the bend being taken up by the neighbouring turns.
 */
FixedLengthsShape bent_shape(const Necklace& s, int k, double rho);

/// Points e^{i psi_k} on the unit circle.  Rejects a zero turn (a boundary shape).
std::vector<std::complex<double>> prevertices(const FixedLengthsShape& shape);

/// alpha_k = 2 s_k / S.
std::vector<double> sc_exponents(const Necklace& s);

struct KMResult
{
    /// Image edge lengths at unit perimeter; lengths[j - 1] is the edge from vertex s_{j-1} to s_j.
    std::vector<double> lengths;
    /// The same lengths before scaling (Schwarz-Christoffel constant fixed at 1).
    std::vector<double> raw_lengths;
    double closure_residual = 0;
    /// Largest relative change of an edge length between the two quadrature levels.
    double self_convergence = 0;
    int nodes = 0;
};

inline constexpr int kDefaultScNodes = 24;
inline constexpr double kScTolerance = 1e-8;

KMResult km_map(const Necklace& s, const FixedLengthsShape& shape, int nodes = kDefaultScNodes);

struct ExponentProbe
{
    int k = 1;
    double q_analytic = 0;
    /// Slope of log r against log rho with the Schwarz-Christoffel constant held fixed.
    double q_hat = 0;
    double fit_residual = 0;
    /// Slope of the same fit after unit-perimeter scaling.
    double q_hat_normalized = 0;
    std::vector<double> rhos;
    std::vector<double> r_raw;
    std::vector<double> r_normalized;
};

ExponentProbe boundary_exponent_probe(const Necklace& s, int k, const std::vector<double>& rhos);

/// count points spaced evenly in log between lo and hi, decreasing.
std::vector<double> log_grid(double hi, double lo, int count);

}   // namespace anglepoly

#endif
