#ifndef ANGLEPOLY_SWEEP_HPP
#define ANGLEPOLY_SWEEP_HPP

#include <string_view>
#include <vector>

#include "anglepoly/fixed_angles.hpp"
#include "anglepoly/necklace.hpp"

namespace anglepoly {

/// A necklace with one entry left free, written with a `?` token, e.g. `1,3,1,4,2,?`.
struct SweepTemplate
{
    std::vector<Rational> entries;   // entries[marked - 1] is a placeholder
    int marked = 1;

    int size() const { return static_cast<int>(entries.size()); }
    Necklace instantiate(const Rational& value) const;
};

SweepTemplate parse_sweep_template(std::string_view text);

/// Every positive value of the marked entry at which some substring tie exists.
std::vector<Rational> critical_values(const SweepTemplate& t);
/// Critical values restricted to [lo, hi].
std::vector<Rational> critical_values(const SweepTemplate& t, const Rational& lo, const Rational& hi);

/**
 * What a tie does as the marked entry passes through the critical value:
 * the digon vertex is a shrunken Delta_{below_dim} on one side and grows
 * into a Delta_{above_dim} on the other.  A dimension of -1 means the face
 * vanishes.
 */
struct Transition
{
    TieRecord tie;
    int below_dim = 0;
    int above_dim = 0;
};

struct SweepReport
{
    Rational value;
    PolytopeClass polytope = PolytopeClass::Empty;
    std::vector<std::size_t> fvector;   // empty unless full-dimensional
    std::vector<int> facet_sizes;
    std::vector<TieRecord> ties;
    bool critical = false;
    std::vector<Transition> transitions;
};

/// One report per value; values must be positive.
std::vector<SweepReport> sweep(const SweepTemplate& t, const std::vector<Rational>& values, int cap = kDefaultFaceCap);

/**
 * Sample points covering [lo, hi]: the endpoints, every critical value inside,
 * and the midpoint of every interval between consecutive breakpoints (the
 * combinatorial type is constant on each open interval).
 */
std::vector<Rational> sweep_samples(const SweepTemplate& t, const Rational& lo, const Rational& hi);

}   // namespace anglepoly

#endif
