#ifndef ANGLEPOLY_FIXED_ANGLES_HPP
#define ANGLEPOLY_FIXED_ANGLES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "anglepoly/index_set.hpp"
#include "anglepoly/necklace.hpp"

/**
 * Combinatorics of the fixed-angles polytope A^n[s]: unit-perimeter convex
 * n-gons whose k-th vertex has external angle 2 pi s_k / S.
 *
 * Edge eps_k joins the vertices with shangles s_{k-1} and s_k, so edge 1
 * joins s_n and s_1.  A face is the set of polygons in which a given set of
 * edges has length zero; faces are identified by their closed zero-edge set.
 */
namespace anglepoly {

using ZeroSet = IndexSet;

enum class PolytopeClass { Empty, Point, FullDim };
const char* to_string(PolytopeClass c);

PolytopeClass classify_polytope(const Necklace& s);

/// Necklace obtained by shrinking the edges in a zero set.
struct MergeResult
{
    std::vector<Rational> entries;
    /// groups[t] lists the original vertex labels coalesced into entry t,
    /// in necklace order; groups are ordered by their first vertex.
    std::vector<std::vector<int>> groups;

    /// Fewer than three supervertices: not a polygon any more.
    bool degenerate() const { return entries.size() < 3; }
};

/// Throws DomainError when z contains every edge.
MergeResult merge(const Necklace& s, const ZeroSet& z);

enum class FaceKind { Generic, TrigonVertex, DigonVertex };
const char* to_string(FaceKind k);

struct Face
{
    ZeroSet closed_zero_set;
    FaceKind kind = FaceKind::Generic;
    int dim = 0;

    bool operator==(const Face&) const = default;
};

/// Faces sort by (dim, zero set).
bool face_less(const Face& a, const Face& b);

/**
 * The face on which every edge in z has length zero, or nullopt when no
 * such polygon exists.  Requires a full-dimensional polytope.
 */
std::optional<Face> face_of_zero_set(const Necklace& s, const ZeroSet& z);

inline constexpr int kDefaultFaceCap = 20;

class FaceLattice
{
    private:
        int n_ = 0;
        int dim_ = 0;
        std::vector<Face> faces_;           // sorted by face_less, includes the polytope itself
        std::vector<std::size_t> fvector_;  // f_0 .. f_{dim-1}
        IndexSet facet_edges_;
        std::vector<std::pair<int, ZeroSet>> facet_labels_;   // least edge of each facet, with its closed zero set

    public:
        FaceLattice(int n, std::vector<Face> faces);

        int n() const { return n_; }
        int dim() const { return dim_; }
        const std::vector<Face>& faces() const { return faces_; }
        const std::vector<std::size_t>& fvector() const { return fvector_; }

        /// One edge per facet: the least label in its closed zero set.
        /// For n >= 5 this is exactly the edge whose zero set is the facet.
        const IndexSet& facet_edges() const { return facet_edges_; }
        std::vector<Face> faces_of_dim(int d) const;
        std::vector<Face> vertices() const { return faces_of_dim(0); }
        std::vector<Face> facets() const { return faces_of_dim(dim_ - 1); }

        std::optional<Face> find(const ZeroSet& closed) const;
        /// a is a face of b.
        static bool leq(const Face& a, const Face& b) { return b.closed_zero_set.is_subset_of(a.closed_zero_set); }
        /// Facets containing the face, as edge labels.
        IndexSet incident_facets(const Face& f) const;
        std::vector<Face> vertices_of(const Face& f) const;
        /// Vertex count of every facet, ascending.
        std::vector<int> facet_sizes() const;
        /// Alternating sum f_0 - f_1 + ... over proper faces.
        long long euler_characteristic() const;
};

/// Throws DomainError unless the polytope is full-dimensional and n <= cap.
FaceLattice enumerate_faces(const Necklace& s, int cap = kDefaultFaceCap);

/// (i, j, k), i < j < k: the three substrings cut by edges eps_i, eps_j, eps_k are all light.
std::vector<std::array<int, 3>> trigon_vertices(const Necklace& s);

struct DigonVertex
{
    TieRecord tie;
    Face face;
};

std::vector<DigonVertex> digon_vertices(const Necklace& s);

/// The product of simplices Delta_a x Delta_b; a simplex is stored as (a, 0).
struct VertexFigureShape
{
    int a = 0;
    int b = 0;

    static VertexFigureShape product(int a, int b);
    bool is_simplex() const { return b == 0; }
    bool is_empty() const { return a < 0 || b < 0; }
    /// Facets of the figure, i.e. polytope facets through the vertex.
    int facet_count() const;
    bool operator==(const VertexFigureShape&) const = default;
};

VertexFigureShape vertex_figure(const Necklace& s, const Face& v);

bool is_simple(const Necklace& s);

/// Every set of at most floor((n-3)/2) facets meets in a nonempty face.
bool dual_is_neighborly(const Necklace& s);

}   // namespace anglepoly

#endif
