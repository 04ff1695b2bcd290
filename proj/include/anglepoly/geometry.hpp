#ifndef ANGLEPOLY_GEOMETRY_HPP
#define ANGLEPOLY_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "anglepoly/fixed_angles.hpp"
#include "anglepoly/necklace.hpp"

namespace anglepoly {

/// Relative tolerances for every floating-point verdict in the library.
struct Tolerances
{
    double feasibility = 1e-9;
    double construction = 1e-12;
    double eigenvalue = 1e-9;
    double rank = 1e-9;
    double eigen_residual = 1e-10;
};

/// phi_1 = 0 and phi_{k+1} = phi_k + 2 pi s_k / S: the heading of edge eps_k.
std::vector<double> headings(const Necklace& s);

struct Point2
{
    double x = 0;
    double y = 0;
};

/**
 * A concrete polygon with the necklace's vertex angles.  Vertex v_k (shangle
 * s_k) is v_{k-1} + l_k (cos phi_k, sin phi_k), starting from v_0 = origin;
 * `vertices` holds v_1..v_n, so a closed polygon has v_n at the origin.
 */
struct PolygonRealization
{
    std::vector<double> lengths;
    std::vector<double> headings;
    std::vector<Point2> vertices;
    /// Some length that should be positive came within tolerance of zero.
    bool marginal = false;

    double perimeter() const;
    /// |sum l_k e^{i phi_k}|.
    double closure_residual() const;
};

/// Lay out the given edge lengths with the necklace's headings.
PolygonRealization realize(const Necklace& s, std::vector<double> lengths, const Tolerances& tol = {});

/// 2 x n matrix with columns (cos phi_k, sin phi_k); its kernel holds the closed length vectors.
Eigen::MatrixXd closure_matrix(const Necklace& s);
int closure_rank(const Necklace& s, const Tolerances& tol = {});

/// Polygon circumscribed about a circle, at unit perimeter.  Needs max entry < S/2.
PolygonRealization tangential_polygon(const Necklace& s, const Tolerances& tol = {});

/// The triangle (trigon vertex) or unit-perimeter digon at a vertex of the lattice.
PolygonRealization vertex_realization(const Necklace& s, const Face& v, const Tolerances& tol = {});

/// Shoelace area.
double area(const PolygonRealization& p);

struct AreaSignature
{
    int plus = 0;
    int minus = 0;
    /// Some eigenvalue fell within tolerance of zero; plus/minus are not reported.
    bool degenerate = false;
    std::vector<double> eigenvalues;
};

/// Inertia of the area quadratic form on the (n-2)-dimensional space of closed length vectors.
AreaSignature area_form_signature(const Necklace& s, const Tolerances& tol = {});

struct Feasibility
{
    enum class Status { Witness, Digon, Infeasible };

    Status status = Status::Infeasible;
    std::optional<PolygonRealization> realization;
    /// For Infeasible: the vertex labels of a heavy merged run and its weight.
    std::vector<int> offending_run;
    Rational run_weight;
    std::string reason;
};
const char* to_string(Feasibility::Status s);

/// Numeric confirmation of a zero set: a polygon with exactly those edges shrunk, or why none exists.
Feasibility feasibility_witness(const Necklace& s, const ZeroSet& z, const Tolerances& tol = {});

}   // namespace anglepoly

#endif
