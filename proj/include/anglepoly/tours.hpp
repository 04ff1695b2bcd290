#ifndef ANGLEPOLY_TOURS_HPP
#define ANGLEPOLY_TOURS_HPP

#include <array>
#include <compare>
#include <set>
#include <vector>

namespace anglepoly {

/**
 * A tour: a length-3 necklace [p, q, r] of distinct residues mod n, n odd.
 *
 * Stored in normal form (i, j, k): representatives in 1..n, cyclic order
 * preserved, smallest first.  Once-around tours have i < j < k,
 * twice-around tours i < k < j.
 */
class Tour
{
    private:
        int n_ = 3;
        std::array<int, 3> form_{1, 2, 3};

    public:
        /// Throws DomainError for even n, n < 3, or repeated residues.
        Tour(int n, long long p, long long q, long long r);

        int n() const { return n_; }
        const std::array<int, 3>& normal_form() const { return form_; }

        /// (q - p, r - q, p - r) reduced into 1..n-1.
        std::array<int, 3> steps() const;
        bool is_once_around() const;
        /// All steps in 1..(n-1)/2.
        bool is_small() const;
        /// All steps odd as representatives in 1..n-1.
        bool is_odd() const;

        /// Multiply every residue by `factor`; must stay a tour (factor a unit).
        Tour scaled(long long factor) const;

        bool operator==(const Tour&) const = default;
        auto operator<=>(const Tour& o) const { return form_ <=> o.form_; }
};

std::array<int, 3> normal_form(int n, long long p, long long q, long long r);

/// [p, q, r] -> [-2p, -2q, -2r]: small tours onto odd tours.
Tour map_neg2(const Tour& t);
/// [p, q, r] -> [mp, mq, mr] with m = (n - 1) / 2, the inverse of map_neg2.
Tour map_m(const Tour& t);

std::vector<Tour> enumerate_tours(int n);
std::vector<Tour> enumerate_small(int n);
std::vector<Tour> enumerate_odd(int n);

/// (1/4) C(n+1, 3).
long long small_tour_count(int n);

/// The residue classes {1..m}, {m+1..2m}, odd and even representatives in 1..n-1.
struct ResidueClasses
{
    std::set<int> small, large, odd, even;
};

ResidueClasses residue_classes(int n);
/// {factor * x mod n}, represented in 0..n-1.
std::set<int> scale_residues(const std::set<int>& xs, long long factor, int n);

}   // namespace anglepoly

#endif
