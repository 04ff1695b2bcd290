#ifndef ANGLEPOLY_CYCLIC_HPP
#define ANGLEPOLY_CYCLIC_HPP

#include <optional>
#include <vector>

#include "anglepoly/index_set.hpp"
#include "anglepoly/necklace.hpp"

/**
 * Cyclic polytopes C_d(m): the convex hull of m points on the moment curve
 * t -> (t, t^2, ..., t^d).  Vertices are labelled 1..m in curve order.
 */
namespace anglepoly {

using VertexSet = IndexSet;

struct VertexFace
{
    VertexSet vertices;
    int dim = 0;

    bool operator==(const VertexFace&) const = default;
};

/**
 * A face lattice described by the vertex sets of its proper nonempty faces.
 * For cyclic polytopes every face is a simplex (dim = |vertices| - 1); the
 * same shape also carries formal duals of non-simplicial lattices.
 */
struct CyclicLattice
{
    int d = 0;
    int m = 0;
    std::vector<VertexSet> facets;    // sorted
    std::vector<VertexFace> faces;    // sorted by (dim, vertices)
    std::vector<std::size_t> fvector; // f_0 .. f_{d-1}

    bool has_face(const VertexSet& v) const;
    /// Labels that are actual vertices.
    VertexSet vertex_labels() const;
};

/// Facets of C_d(m) by Gale's evenness condition; requires 1 <= d < m <= 62.
std::vector<VertexSet> gale_facets(int d, int m);

/// Between any two non-members of F, an even number of members of F.
bool satisfies_evenness(const VertexSet& f, int m);

/**
 * Facets of C_d(m) found independently by exact orientation tests on the
 * points (t_i, t_i^2, ..., t_i^d).  `params` must be strictly increasing
 * (defaults to 1..m).  Limited to d <= 8, m <= 14.
 */
std::vector<VertexSet> moment_oracle_facets(int d, int m, std::vector<long long> params = {});

/// Determinant by fraction-free Gaussian elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a);

/// Downward closure of a simplicial facet list.
CyclicLattice simplicial_lattice(int d, int m, std::vector<VertexSet> facets);

CyclicLattice face_lattice(int d, int m);

/// Every set of floor(d/2) vertices is a face.
bool is_neighborly(int d, int m);

/// The candidate f-vector equals that of C_d(m) entrywise.
bool max_faced_check(const std::vector<std::size_t>& candidate, int d, int m);

/// Facets through v with v removed, relabelled order-preservingly into 1..m-1.
CyclicLattice vertex_figure_lattice(int d, int m, int v);

/**
 * A vertex bijection carrying the faces of `a` exactly onto those of `b`,
 * as map[label_a - 1] = label_b (0 for labels that are not vertices), or
 * nullopt if the lattices are not isomorphic.
 */
std::optional<std::vector<int>> find_isomorphism(const CyclicLattice& a, const CyclicLattice& b);

}   // namespace anglepoly

#endif
