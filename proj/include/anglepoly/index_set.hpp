#ifndef ANGLEPOLY_INDEX_SET_HPP
#define ANGLEPOLY_INDEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace anglepoly {

/**
 * A set of 1-based labels in [1..64], stored as a bitmask (bit k-1 <-> label k).
 *
 * Used for zero-edge sets of fixed-angles faces and vertex sets of cyclic
 * polytope faces.  Ordering is lexicographic on the sorted member lists, which
 * is what every report and serializer sorts by.
 */
class IndexSet
{
    private:
        std::uint64_t bits_ = 0;

    public:
        IndexSet() = default;
        explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
        IndexSet(std::initializer_list<int> labels)
        {
            for (int k : labels)
                insert(k);
        }

        static IndexSet from_labels(const std::vector<int>& labels)
        {
            IndexSet s;
            for (int k : labels)
                s.insert(k);
            return s;
        }

        /// All labels 1..n.
        static IndexSet full(int n)
        {
            return IndexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
        }

        std::uint64_t bits() const { return bits_; }
        bool empty() const { return bits_ == 0; }
        int size() const { return std::popcount(bits_); }
        bool contains(int k) const { return (bits_ >> (k - 1)) & 1U; }
        void insert(int k) { bits_ |= std::uint64_t{1} << (k - 1); }
        void erase(int k) { bits_ &= ~(std::uint64_t{1} << (k - 1)); }

        bool is_subset_of(const IndexSet& other) const { return (bits_ & ~other.bits_) == 0; }
        IndexSet operator|(const IndexSet& o) const { return IndexSet(bits_ | o.bits_); }
        IndexSet operator&(const IndexSet& o) const { return IndexSet(bits_ & o.bits_); }
        IndexSet minus(const IndexSet& o) const { return IndexSet(bits_ & ~o.bits_); }
        /// Complement within 1..n.
        IndexSet complement(int n) const { return IndexSet(full(n).bits_ & ~bits_); }

        std::vector<int> labels() const
        {
            std::vector<int> out;
            out.reserve(size());
            for (std::uint64_t b = bits_; b != 0; b &= b - 1)
                out.push_back(std::countr_zero(b) + 1);
            return out;
        }

        bool operator==(const IndexSet&) const = default;
        std::strong_ordering operator<=>(const IndexSet& o) const
        {
            // Lexicographic on ascending label lists: compare the lowest label
            // where the sets differ.  The set containing it is smaller unless
            // the other set has already ended (a prefix sorts first).
            if (bits_ == o.bits_)
                return std::strong_ordering::equal;
            std::uint64_t diff = bits_ ^ o.bits_;
            std::uint64_t low = diff & (~diff + 1);
            bool mine = (bits_ & low) != 0;
            // Members above the first difference in the set lacking it.
            std::uint64_t above = ~((low << 1) - 1);
            if (mine)
                return (o.bits_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
            return (bits_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
};

struct IndexSetHash
{
    std::size_t operator()(const IndexSet& s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}   // namespace anglepoly

#endif
