#include "anglepoly/cyclic.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "anglepoly/error.hpp"

namespace anglepoly {

namespace {

void check_params(int d, int m)
{
    if (d < 1 || d >= m)
        throw DomainError("cyclic polytope C_d(m) needs 1 <= d < m, got d = " + std::to_string(d) + ", m = " + std::to_string(m));
    if (m > 62)
        throw DomainError("cyclic polytope support is limited to m <= 62");
}

/// Calls fn(mask) for every d-subset of labels 1..m (Gosper's hack, increasing mask order).
template <typename Fn>
void for_each_subset(int d, int m, Fn&& fn)
{
    std::uint64_t mask = (std::uint64_t{1} << d) - 1;
    const std::uint64_t limit = std::uint64_t{1} << m;
    while (mask < limit)
    {
        fn(VertexSet(mask));
        std::uint64_t c = mask & (~mask + 1);
        std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

bool vertex_face_less(const VertexFace& a, const VertexFace& b)
{
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
}

}   // namespace

bool CyclicLattice::has_face(const VertexSet& v) const
{
    return std::any_of(faces.begin(), faces.end(), [&](const VertexFace& f) { return f.vertices == v; });
}

VertexSet CyclicLattice::vertex_labels() const
{
    VertexSet all;
    for (const auto& f : facets)
        all = all | f;
    return all;
}

bool satisfies_evenness(const VertexSet& f, int m)
{
    int last_gap = 0;
    int between = 0;
    for (int k = 1; k <= m; ++k)
    {
        if (f.contains(k))
        {
            ++between;
            continue;
        }
        if (last_gap != 0 && between % 2 != 0)
            return false;
        last_gap = k;
        between = 0;
    }
    return true;
}

std::vector<VertexSet> gale_facets(int d, int m)
{
    check_params(d, m);
    std::vector<VertexSet> out;
    for_each_subset(d, m, [&](const VertexSet& f) {
        if (satisfies_evenness(f, m))
            out.push_back(f);
    });
    std::sort(out.begin(), out.end());
    return out;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (a[k][k] == 0)
        {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
        {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<VertexSet> moment_oracle_facets(int d, int m, std::vector<long long> params)
{
    check_params(d, m);
    if (d > 8 || m > 14)
        throw DomainError("moment-curve oracle limited to d <= 8, m <= 14");
    if (params.empty())
        for (int i = 1; i <= m; ++i)
            params.push_back(i);
    if (static_cast<int>(params.size()) != m)
        throw DomainError("moment-curve oracle needs " + std::to_string(m) + " parameters, got " + std::to_string(params.size()));
    for (int i = 1; i < m; ++i)
        if (params[i] <= params[i - 1])
            throw DomainError("moment-curve parameters must be strictly increasing");

    // Homogeneous coordinates (1, t, t^2, ..., t^d).
    std::vector<std::vector<BigInt>> points(m, std::vector<BigInt>(d + 1));
    for (int i = 0; i < m; ++i)
    {
        BigInt p = 1;
        for (int j = 0; j <= d; ++j)
        {
            points[i][j] = p;
            p *= params[i];
        }
    }

    std::vector<VertexSet> out;
    for_each_subset(d, m, [&](const VertexSet& f) {
        auto members = f.labels();
        std::vector<std::vector<BigInt>> rows;
        for (int v : members)
            rows.push_back(points[v - 1]);
        rows.emplace_back();
        int side = 0;
        bool facet = true;
        for (int other = 1; other <= m && facet; ++other)
        {
            if (f.contains(other))
                continue;
            rows.back() = points[other - 1];
            BigInt det = bareiss_determinant(rows);
            if (det == 0)
                throw std::logic_error("moment-curve oracle: zero orientation determinant for distinct parameters");
            int sgn = det > 0 ? 1 : -1;
            if (side == 0)
                side = sgn;
            else if (sgn != side)
                facet = false;
        }
        if (facet)
            out.push_back(f);
    });
    std::sort(out.begin(), out.end());
    return out;
}

CyclicLattice simplicial_lattice(int d, int m, std::vector<VertexSet> facets)
{
    std::sort(facets.begin(), facets.end());
    std::unordered_set<VertexSet, IndexSetHash> seen;
    for (const auto& f : facets)
        for (std::uint64_t sub = f.bits(); sub != 0; sub = (sub - 1) & f.bits())
            seen.insert(VertexSet(sub));
    CyclicLattice lat;
    lat.d = d;
    lat.m = m;
    lat.facets = std::move(facets);
    lat.fvector.assign(d, 0);
    for (const auto& v : seen)
    {
        int dim = v.size() - 1;
        lat.faces.push_back(VertexFace{v, dim});
        if (dim < d)
            ++lat.fvector[dim];
    }
    std::sort(lat.faces.begin(), lat.faces.end(), vertex_face_less);
    return lat;
}

CyclicLattice face_lattice(int d, int m)
{
    return simplicial_lattice(d, m, gale_facets(d, m));
}

bool is_neighborly(int d, int m)
{
    auto facets = gale_facets(d, m);
    int k = d / 2;
    if (k == 0)
        return true;
    bool ok = true;
    for_each_subset(k, m, [&](const VertexSet& v) {
        if (ok && std::none_of(facets.begin(), facets.end(), [&](const VertexSet& f) { return v.is_subset_of(f); }))
            ok = false;
    });
    return ok;
}

bool max_faced_check(const std::vector<std::size_t>& candidate, int d, int m)
{
    return candidate == face_lattice(d, m).fvector;
}

CyclicLattice vertex_figure_lattice(int d, int m, int v)
{
    check_params(d, m);
    if (v < 1 || v > m)
        throw DomainError("vertex label " + std::to_string(v) + " outside 1.." + std::to_string(m));
    std::vector<VertexSet> figure;
    for (const auto& f : gale_facets(d, m))
    {
        if (!f.contains(v))
            continue;
        VertexSet g;
        for (int k : f.labels())
            if (k != v)
                g.insert(k < v ? k : k - 1);
        figure.push_back(g);
    }
    return simplicial_lattice(d - 1, m - 1, std::move(figure));
}

std::optional<std::vector<int>> find_isomorphism(const CyclicLattice& a, const CyclicLattice& b)
{
    if (a.faces.size() != b.faces.size() || a.facets.size() != b.facets.size())
        return std::nullopt;
    auto va = a.vertex_labels().labels();
    auto vb = b.vertex_labels().labels();
    if (va.size() != vb.size())
        return std::nullopt;
    const int count = static_cast<int>(va.size());

    // co[i][j]: facets containing both vertices (degree on the diagonal).
    auto codegree = [](const CyclicLattice& lat, const std::vector<int>& verts) {
        std::vector<std::vector<int>> co(verts.size(), std::vector<int>(verts.size(), 0));
        for (const auto& f : lat.facets)
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (f.contains(verts[i]))
                    for (std::size_t j = 0; j < verts.size(); ++j)
                        if (f.contains(verts[j]))
                            ++co[i][j];
        return co;
    };
    auto ca = codegree(a, va);
    auto cb = codegree(b, vb);

    std::unordered_set<VertexSet, IndexSetHash> b_faces;
    for (const auto& f : b.faces)
        b_faces.insert(f.vertices);

    std::vector<int> assign(count, -1);
    std::vector<bool> used(count, false);
    std::optional<std::vector<int>> result;

    auto full_check = [&]() {
        for (const auto& f : a.faces)
        {
            VertexSet img;
            for (int i = 0; i < count; ++i)
                if (f.vertices.contains(va[i]))
                    img.insert(vb[assign[i]]);
            if (!b_faces.count(img))
                return false;
        }
        return true;
    };

    auto search = [&](auto&& self, int i) -> bool {
        if (i == count)
            return full_check();
        for (int j = 0; j < count; ++j)
        {
            if (used[j] || ca[i][i] != cb[j][j])
                continue;
            bool ok = true;
            for (int p = 0; p < i && ok; ++p)
                ok = ca[p][i] == cb[assign[p]][j];
            if (!ok)
                continue;
            assign[i] = j;
            used[j] = true;
            if (self(self, i + 1))
                return true;
            used[j] = false;
        }
        assign[i] = -1;
        return false;
    };
    if (!search(search, 0))
        return std::nullopt;

    std::vector<int> map(a.m, 0);
    for (int i = 0; i < count; ++i)
        map[va[i] - 1] = vb[assign[i]];
    return map;
}

}   // namespace anglepoly
