#ifndef ANGLEPOLY_DUALITY_HPP
#define ANGLEPOLY_DUALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "anglepoly/cyclic.hpp"
#include "anglepoly/fixed_angles.hpp"
#include "anglepoly/necklace.hpp"

namespace anglepoly {

/// Facet eps_i of A^n[s] <-> vertex i' of C_{n-3}(n), i' = -2i mod n in 1..n.  Odd n only.
int facet_vertex_map(int n, int i);
/// The inverse, multiplication by m = (n - 1) / 2.
int facet_vertex_map_inverse(int n, int v);

enum class DualityMethod { ExplicitOddMap, EvenReduction, ExhaustiveSearch };
const char* to_string(DualityMethod m);

struct DualityCertificate
{
    std::string reason;
    IndexSet facets;   // facet (edge) labels of the fixed-angles polytope
};

struct DualityReport
{
    bool verdict = false;
    DualityMethod method = DualityMethod::ExhaustiveSearch;
    int n = 0;
    /// witness[i - 1] = vertex label matched with facet eps_i, 0 if eps_i is not a facet.
    std::vector<int> witness;
    std::optional<DualityCertificate> failure_certificate;
    std::optional<DipolePoles> poles;
    /// Even n with dipole tie-breaking: the lattice, rotated to put the heavy
    /// pole last, coincides with that of [1, ..., 1, 2].
    std::optional<bool> reduction_matches;
};

/**
 * Checks that `seed` (facet label -> vertex label, same layout as
 * DualityReport::witness) induces an inclusion-reversing bijection between
 * the proper faces of `a` and those of `b`.  Without a seed, searches facet
 * <-> vertex bijections in lexicographic order and reports the first.
 */
DualityReport anti_isomorphic(const FaceLattice& a, const CyclicLattice& b,
                              const std::optional<std::vector<int>>& seed = std::nullopt);

/// Every witness bijection, in lexicographic order.
std::vector<std::vector<int>> all_anti_isomorphisms(const FaceLattice& a, const CyclicLattice& b);

/// Odd n >= 5, majority dominant: explicit check of the -2i map.
DualityReport verify_prop4(const Necklace& s);

/// Even n >= 4, majority dominant: search for a duality with C_{n-3}(n).
DualityReport verify_prop6(const Necklace& s);

/// The face lattice read upside down, with facet labels as vertices.
CyclicLattice formal_dual(const FaceLattice& a);

std::vector<std::size_t> dual_fvector(const FaceLattice& a);

/// The dual of `a` has as many faces of each dimension as C_d(m).
bool max_faced_check(const FaceLattice& a, int d, int m);

}   // namespace anglepoly

#endif
