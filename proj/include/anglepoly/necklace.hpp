#ifndef ANGLEPOLY_NECKLACE_HPP
#define ANGLEPOLY_NECKLACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "anglepoly/index_set.hpp"

namespace anglepoly {

/// Exact rational, always normalized (lowest terms, positive denominator).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const Rational& q);

/// Parse `int` or `int/int`; throws ParseError naming the token.
Rational parse_rational(std::string_view token);

/**
 * A cyclic sequence of n >= 3 strictly positive rationals s_1..s_n, read
 * either as shangles (vertex angle shares) or as fixed edge lengths.
 *
 * All public indices are 1-based and cyclic: `at(0) == at(n)`,
 * `at(n + 1) == at(1)`.
 */
class Necklace
{
    private:
        std::vector<Rational> entries_;
        Rational total_;

    public:
        explicit Necklace(std::vector<Rational> entries);
        Necklace(std::initializer_list<long long> entries);

        int size() const { return static_cast<int>(entries_.size()); }
        const std::vector<Rational>& entries() const { return entries_; }
        const Rational& total() const { return total_; }
        Rational half() const { return total_ / 2; }

        /// Wrap an arbitrary integer into 1..n.
        int wrap(long long k) const
        {
            long long n = size();
            long long r = ((k - 1) % n + n) % n;
            return static_cast<int>(r + 1);
        }
        const Rational& at(long long k) const { return entries_[wrap(k) - 1]; }

        /// The necklace read starting from label `first` (so that s_first becomes s_1).
        Necklace rotated(int first) const;
        Rational max_entry() const;

        bool operator==(const Necklace& o) const { return entries_ == o.entries_; }
};

/// Comma-separated rationals; whitespace around commas is ignored.
Necklace parse_necklace(std::string_view text);
std::string to_string(const Necklace& s);

/// A consecutive run of `length` entries starting at 1-based `start`.
struct Substring
{
    int start = 1;
    int length = 0;

    Substring complement(int n) const;
    /// The covered labels, in necklace order.
    std::vector<int> labels(int n) const;
    IndexSet as_set(int n) const;
};

enum class Balance { Light, Tied, Heavy };
const char* to_string(Balance b);

Rational weight(const Necklace& s, const Substring& sub);
/// Length must lie in [1, n-1].
Balance classify_substring(const Necklace& s, const Substring& sub);

/// One complementary pair of tied substrings, keyed by its shorter member.
struct TieRecord
{
    Substring substring;
    int width = 0;
};

/// All substring ties, sorted by (width, start).
std::vector<TieRecord> substring_ties(const Necklace& s);

bool is_majority_dominant(const Necklace& s);

struct DipolePoles
{
    int light_pole = 0;
    int heavy_pole = 0;
};

/// Even n only.  Returns the lexicographically least valid light pole.
std::optional<DipolePoles> dipole_tie_breaking(const Necklace& s);

struct SubsetTie
{
    IndexSet subset;            // the side not containing label 1
    int width = 0;
    int signature_plus = 0;     // w - 1
    int signature_minus = 0;    // n - w - 1
    BigInt reorder_count;       // w! (n - w)!
};

inline constexpr int kDefaultSubsetCap = 20;

/// Exhaustive over 2^(n-1) subsets; throws DomainError above `cap`.
std::vector<SubsetTie> subset_ties(const Necklace& s, int cap = kDefaultSubsetCap);

/**
 * The necklace scaled to integers with exactly the same weight comparisons:
 * entries multiplied by the lcm of the denominators.  Used by the
 * enumeration hot paths.
 */
struct ScaledWeights
{
    std::vector<BigInt> entries;
    BigInt total;

    explicit ScaledWeights(const Necklace& s);
    /// Compare a weight against half the total: -1 light, 0 tied, +1 heavy.
    int compare_half(const BigInt& w) const
    {
        BigInt twice = 2 * w;
        return twice < total ? -1 : (twice == total ? 0 : 1);
    }
};

}   // namespace anglepoly

#endif
