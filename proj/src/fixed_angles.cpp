#include "anglepoly/fixed_angles.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "anglepoly/error.hpp"

namespace anglepoly {

namespace {

void require_full_dim(const Necklace& s, const char* op)
{
    if (classify_polytope(s) != PolytopeClass::FullDim)
        throw DomainError(std::string(op) + ": polytope for [" + to_string(s) + "] is not full-dimensional");
}

/// First vertex v with eps_v not zeroed; groups start exactly at such vertices.
int first_group_start(int n, const ZeroSet& z)
{
    for (int v = 1; v <= n; ++v)
        if (!z.contains(v))
            return v;
    return 0;
}

/**
 * Shared core of face_of_zero_set and the enumeration: evaluates z against
 * integer-scaled weights without building a MergeResult.
 */
std::optional<Face> face_from_weights(const ScaledWeights& sw, int n, const ZeroSet& z)
{
    int v0 = first_group_start(n, z);
    if (v0 == 0)
        return std::nullopt;   // a single supervertex of weight S
    BigInt run = 0;
    int group_start = v0;
    std::optional<std::pair<int, int>> tied;   // (first, last) vertex of a tied group
    for (int i = 0; i <= n; ++i)
    {
        int v = ((v0 - 1 + i) % n) + 1;
        bool closes = (i == n) || !z.contains(v);
        if (closes && i > 0)
        {
            int c = sw.compare_half(run);
            if (c > 0)
                return std::nullopt;
            if (c == 0)
                tied = {group_start, ((v - 2 + n) % n) + 1};
        }
        if (i == n)
            break;
        if (closes)
        {
            run = sw.entries[v - 1];
            group_start = v;
        }
        else
        {
            run += sw.entries[v - 1];
        }
    }
    if (tied)
    {
        // The two edges flanking the tied run survive as the antiparallel pair.
        int gap_a = tied->first;
        int gap_b = (tied->second % n) + 1;
        ZeroSet closed = ZeroSet::full(n);
        closed.erase(gap_a);
        closed.erase(gap_b);
        return Face{closed, FaceKind::DigonVertex, 0};
    }
    int dim = n - z.size() - 3;
    return Face{z, dim == 0 ? FaceKind::TrigonVertex : FaceKind::Generic, dim};
}

}   // namespace

const char* to_string(PolytopeClass c)
{
    switch (c)
    {
        case PolytopeClass::Empty: return "empty";
        case PolytopeClass::Point: return "point";
        case PolytopeClass::FullDim: return "full";
    }
    return "?";
}

const char* to_string(FaceKind k)
{
    switch (k)
    {
        case FaceKind::Generic: return "generic";
        case FaceKind::TrigonVertex: return "trigon";
        case FaceKind::DigonVertex: return "digon";
    }
    return "?";
}

PolytopeClass classify_polytope(const Necklace& s)
{
    Rational twice_max = 2 * s.max_entry();
    if (twice_max > s.total())
        return PolytopeClass::Empty;
    return twice_max == s.total() ? PolytopeClass::Point : PolytopeClass::FullDim;
}

MergeResult merge(const Necklace& s, const ZeroSet& z)
{
    const int n = s.size();
    int v0 = first_group_start(n, z);
    if (v0 == 0)
        throw DomainError("merge: zero set covers all " + std::to_string(n) + " edges");
    MergeResult out;
    for (int i = 0; i < n; ++i)
    {
        int v = ((v0 - 1 + i) % n) + 1;
        if (!z.contains(v))
        {
            out.entries.emplace_back(0);
            out.groups.emplace_back();
        }
        out.entries.back() += s.at(v);
        out.groups.back().push_back(v);
    }
    return out;
}

bool face_less(const Face& a, const Face& b)
{
    if (a.dim != b.dim)
        return a.dim < b.dim;
    return a.closed_zero_set < b.closed_zero_set;
}

std::optional<Face> face_of_zero_set(const Necklace& s, const ZeroSet& z)
{
    require_full_dim(s, "face_of_zero_set");
    if (!z.is_subset_of(ZeroSet::full(s.size())))
        throw DomainError("face_of_zero_set: zero set has labels outside 1.." + std::to_string(s.size()));
    return face_from_weights(ScaledWeights(s), s.size(), z);
}

FaceLattice::FaceLattice(int n, std::vector<Face> faces) : n_(n), faces_(std::move(faces))
{
    std::sort(faces_.begin(), faces_.end(), face_less);
    dim_ = faces_.empty() ? -1 : faces_.back().dim;
    fvector_.assign(std::max(dim_, 0), 0);
    for (const auto& f : faces_)
    {
        if (f.dim < dim_)
            ++fvector_[f.dim];
        if (f.dim == dim_ - 1 && !f.closed_zero_set.empty())
        {
            // a segment (n = 4) can end in digon vertices that shrink two edges at once
            int label = f.closed_zero_set.labels().front();
            facet_edges_.insert(label);
            facet_labels_.emplace_back(label, f.closed_zero_set);
        }
    }
}

IndexSet FaceLattice::incident_facets(const Face& f) const
{
    IndexSet out;
    for (const auto& [label, closed] : facet_labels_)
        if (closed.is_subset_of(f.closed_zero_set))
            out.insert(label);
    return out;
}

std::vector<Face> FaceLattice::faces_of_dim(int d) const
{
    std::vector<Face> out;
    for (const auto& f : faces_)
        if (f.dim == d)
            out.push_back(f);
    return out;
}

std::optional<Face> FaceLattice::find(const ZeroSet& closed) const
{
    for (const auto& f : faces_)
        if (f.closed_zero_set == closed)
            return f;
    return std::nullopt;
}

std::vector<Face> FaceLattice::vertices_of(const Face& f) const
{
    std::vector<Face> out;
    for (const auto& v : faces_)
        if (v.dim == 0 && leq(v, f))
            out.push_back(v);
    return out;
}

std::vector<int> FaceLattice::facet_sizes() const
{
    std::vector<int> sizes;
    for (const auto& f : faces_)
        if (f.dim == dim_ - 1)
            sizes.push_back(static_cast<int>(vertices_of(f).size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

long long FaceLattice::euler_characteristic() const
{
    long long chi = 0;
    for (std::size_t i = 0; i < fvector_.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(fvector_[i]);
    return chi;
}

FaceLattice enumerate_faces(const Necklace& s, int cap)
{
    const int n = s.size();
    if (n > cap)
        throw DomainError("face enumeration capped at n = " + std::to_string(cap) + ", got n = " + std::to_string(n));
    if (n > 62)
        throw DomainError("face enumeration supports n <= 62");
    require_full_dim(s, "enumerate_faces");
    ScaledWeights sw(s);
    std::unordered_map<std::uint64_t, Face> found;

    // Decide edges 2..n in order, pruning as soon as a run of merged vertices
    // is heavy (merging more can only make it heavier); edge 1 is decided last
    // because it joins the final run to the first.
    std::function<void(int, std::uint64_t, const BigInt&)> visit = [&](int v, std::uint64_t mask, const BigInt& run) {
        if (v > n)
        {
            for (std::uint64_t with_first : {std::uint64_t{0}, std::uint64_t{1}})
            {
                ZeroSet z(mask | with_first);
                if (z.size() == n)
                    continue;
                if (auto face = face_from_weights(sw, n, z))
                    found.try_emplace(face->closed_zero_set.bits(), *face);
            }
            return;
        }
        visit(v + 1, mask, sw.entries[v - 1]);
        BigInt extended = run + sw.entries[v - 1];
        if (sw.compare_half(extended) <= 0)
            visit(v + 1, mask | (std::uint64_t{1} << (v - 1)), extended);
    };
    visit(2, 0, sw.entries[0]);

    std::vector<Face> faces;
    faces.reserve(found.size());
    for (auto& [bits, face] : found)
        faces.push_back(face);
    return FaceLattice(n, std::move(faces));
}

std::vector<std::array<int, 3>> trigon_vertices(const Necklace& s)
{
    require_full_dim(s, "trigon_vertices");
    const int n = s.size();
    ScaledWeights sw(s);
    // prefix[k] = s_1 + ... + s_k
    std::vector<BigInt> prefix(n + 1, 0);
    for (int k = 1; k <= n; ++k)
        prefix[k] = prefix[k - 1] + sw.entries[k - 1];
    std::vector<std::array<int, 3>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
        {
            if (sw.compare_half(prefix[j - 1] - prefix[i - 1]) >= 0)
                break;   // (s_i..s_{j-1}) only grows with j
            for (int k = j + 1; k <= n; ++k)
            {
                BigInt middle = prefix[k - 1] - prefix[j - 1];
                if (sw.compare_half(middle) >= 0)
                    break;
                BigInt last = sw.total - prefix[k - 1] + prefix[i - 1];
                if (sw.compare_half(last) < 0)
                    out.push_back({i, j, k});
            }
        }
    return out;
}

std::vector<DigonVertex> digon_vertices(const Necklace& s)
{
    require_full_dim(s, "digon_vertices");
    const int n = s.size();
    std::vector<DigonVertex> out;
    for (const auto& tie : substring_ties(s))
    {
        ZeroSet closed = ZeroSet::full(n);
        closed.erase(tie.substring.start);
        closed.erase(s.wrap(tie.substring.start + tie.substring.length));
        out.push_back(DigonVertex{tie, Face{closed, FaceKind::DigonVertex, 0}});
    }
    return out;
}

VertexFigureShape VertexFigureShape::product(int a, int b)
{
    if (a == 0 && b != 0)
        return VertexFigureShape{b, 0};
    return VertexFigureShape{a, b};
}

int VertexFigureShape::facet_count() const
{
    if (is_empty())
        return 0;
    if (is_simplex())
        return a + 1;
    return (a + 1) + (b + 1);
}

VertexFigureShape vertex_figure(const Necklace& s, const Face& v)
{
    const int n = s.size();
    if (v.dim != 0)
        throw DomainError("vertex_figure: face of dimension " + std::to_string(v.dim) + " is not a vertex");
    if (v.kind == FaceKind::TrigonVertex)
        return VertexFigureShape::product(n - 4, 0);
    if (v.kind != FaceKind::DigonVertex)
        throw DomainError("vertex_figure: face is not classified as a vertex");
    auto gaps = v.closed_zero_set.complement(n).labels();
    if (gaps.size() != 2)
        throw DomainError("vertex_figure: digon vertex must leave exactly two edges");
    int len = gaps[1] - gaps[0];
    int w = std::min(len, n - len);
    return VertexFigureShape::product(w - 2, n - w - 2);
}

bool is_simple(const Necklace& s)
{
    FaceLattice lattice = enumerate_faces(s);
    for (const auto& v : lattice.vertices())
        if (lattice.incident_facets(v).size() != s.size() - 3)
            return false;
    return true;
}

bool dual_is_neighborly(const Necklace& s)
{
    require_full_dim(s, "dual_is_neighborly");
    const int n = s.size();
    const int k = (n - 3) / 2;
    ScaledWeights sw(s);
    std::vector<int> facets;
    for (int e = 1; e <= n; ++e)
        if (auto f = face_from_weights(sw, n, ZeroSet{e}); f && f->dim == n - 4)
            facets.push_back(e);
    if (k == 0)
        return true;
    if (static_cast<int>(facets.size()) < k)
        return false;
    // Walk all k-subsets of the facets.
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i)
        pick[i] = i;
    while (true)
    {
        ZeroSet z;
        for (int i : pick)
            z.insert(facets[i]);
        if (!face_from_weights(sw, n, z))
            return false;
        int i = k - 1;
        while (i >= 0 && pick[i] == static_cast<int>(facets.size()) - k + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return true;
}

}   // namespace anglepoly
