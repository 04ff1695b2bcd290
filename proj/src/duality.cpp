#include "anglepoly/duality.hpp"

#include <algorithm>
#include <unordered_map>

#include "anglepoly/error.hpp"

namespace anglepoly {

namespace {

/// Incidence data shared by the witness check and the search.
struct DualProblem
{
    const FaceLattice& a;
    const CyclicLattice& b;
    int d = 0;
    std::vector<int> facets;     // facet labels of a, ascending
    std::vector<int> vertices;   // vertex labels of b, ascending
    std::vector<std::vector<int>> co_a;   // vertices of a on both facets
    std::vector<std::vector<int>> co_b;   // facets of b through both vertices
    std::unordered_map<std::uint64_t, int> b_dims;

    DualProblem(const FaceLattice& a_, const CyclicLattice& b_) : a(a_), b(b_), d(a_.dim())
    {
        if (b.d != d)
            throw DomainError("dimension mismatch: fixed-angles polytope has dimension " + std::to_string(d) + ", cyclic lattice " + std::to_string(b.d));
        facets = a.facet_edges().labels();
        vertices = b.vertex_labels().labels();
        if (facets.size() != vertices.size())
            throw DomainError("size mismatch: " + std::to_string(facets.size()) + " facets vs " + std::to_string(vertices.size()) + " vertices");
        const std::size_t k = facets.size();
        co_a.assign(k, std::vector<int>(k, 0));
        for (const auto& v : a.vertices())
        {
            IndexSet inc = a.incident_facets(v);
            for (std::size_t i = 0; i < k; ++i)
                if (inc.contains(facets[i]))
                    for (std::size_t j = 0; j < k; ++j)
                        if (inc.contains(facets[j]))
                            ++co_a[i][j];
        }
        co_b.assign(k, std::vector<int>(k, 0));
        for (const auto& f : b.facets)
            for (std::size_t i = 0; i < k; ++i)
                if (f.contains(vertices[i]))
                    for (std::size_t j = 0; j < k; ++j)
                        if (f.contains(vertices[j]))
                            ++co_b[i][j];
        for (const auto& f : b.faces)
            b_dims.emplace(f.vertices.bits(), f.dim);
    }

    /// First disagreement under `map` (facet label -> vertex label), or nullopt.
    std::optional<DualityCertificate> check(const std::vector<int>& map) const
    {
        std::unordered_map<std::uint64_t, int> hit;
        std::size_t proper = 0;
        for (const auto& g : a.faces())
        {
            if (g.dim == d)
                continue;
            ++proper;
            IndexSet inc = a.incident_facets(g);
            VertexSet image;
            for (int e : inc.labels())
                image.insert(map[e - 1]);
            auto it = b_dims.find(image.bits());
            if (it == b_dims.end())
                return DualityCertificate{"these facets meet in a " + std::to_string(g.dim) + "-face, but their image is not a face of the cyclic lattice", inc};
            if (it->second != d - 1 - g.dim)
                return DualityCertificate{"these facets meet in a " + std::to_string(g.dim) + "-face, but their image is a face of dimension " + std::to_string(it->second), inc};
            if (++hit[image.bits()] > 1)
                return DualityCertificate{"two faces meeting these facets map to the same cyclic face", inc};
        }
        if (proper != b.faces.size())
        {
            for (const auto& f : b.faces)
            {
                if (hit.count(f.vertices.bits()))
                    continue;
                IndexSet pre;
                for (int e : facets)
                    if (f.vertices.contains(map[e - 1]))
                        pre.insert(e);
                return DualityCertificate{"the image of these facets is a cyclic face, but no face of the fixed-angles polytope lies on exactly them", pre};
            }
        }
        return std::nullopt;
    }

    /// Enumerate degree-compatible bijections in lexicographic order; stop when fn returns false.
    template <typename Fn>
    void search(Fn&& fn) const
    {
        const int k = static_cast<int>(facets.size());
        std::vector<int> assign(k, -1);
        std::vector<bool> used(k, false);
        std::vector<int> map(a.n(), 0);
        bool stop = false;
        auto rec = [&](auto&& self, int i) -> void {
            if (stop)
                return;
            if (i == k)
            {
                if (!check(map))
                    stop = !fn(map);
                return;
            }
            for (int j = 0; j < k && !stop; ++j)
            {
                if (used[j] || co_a[i][i] != co_b[j][j])
                    continue;
                bool ok = true;
                for (int p = 0; p < i && ok; ++p)
                    ok = co_a[p][i] == co_b[assign[p]][j];
                if (!ok)
                    continue;
                assign[i] = j;
                used[j] = true;
                map[facets[i] - 1] = vertices[j];
                self(self, i + 1);
                used[j] = false;
                map[facets[i] - 1] = 0;
            }
        };
        rec(rec, 0);
    }

    DualityCertificate exhaustion_certificate() const
    {
        // Prefer a concrete facet set: a vertex on more than d facets has no
        // counterpart among the d-vertex facets of a simplicial lattice.
        bool simplicial = std::all_of(b.facets.begin(), b.facets.end(), [&](const VertexSet& f) { return f.size() == d; });
        if (simplicial)
            for (const auto& v : a.vertices())
            {
                IndexSet inc = a.incident_facets(v);
                if (inc.size() != d)
                    return DualityCertificate{"these " + std::to_string(inc.size()) + " facets meet at a vertex, but every facet of the cyclic lattice has " + std::to_string(d) + " vertices", inc};
            }
        if (dual_fvector(a) != b.fvector)
            return DualityCertificate{"f-vectors of the dual and the cyclic lattice differ", IndexSet{}};
        return DualityCertificate{"no facet-vertex bijection preserves all incidences", IndexSet{}};
    }
};

}   // namespace

int facet_vertex_map(int n, int i)
{
    if (n % 2 == 0)
        throw DomainError("the -2i facet map needs odd n, got n = " + std::to_string(n));
    if (i < 1 || i > n)
        throw DomainError("facet label " + std::to_string(i) + " outside 1.." + std::to_string(n));
    int r = static_cast<int>(((-2LL * i) % n + n) % n);
    return r == 0 ? n : r;
}

int facet_vertex_map_inverse(int n, int v)
{
    if (n % 2 == 0)
        throw DomainError("the -2i facet map needs odd n, got n = " + std::to_string(n));
    int m = (n - 1) / 2;
    int r = static_cast<int>((static_cast<long long>(m) * v) % n);
    return r == 0 ? n : r;
}

const char* to_string(DualityMethod m)
{
    switch (m)
    {
        case DualityMethod::ExplicitOddMap: return "explicit-odd-map";
        case DualityMethod::EvenReduction: return "even-reduction";
        case DualityMethod::ExhaustiveSearch: return "exhaustive-search";
    }
    return "?";
}

DualityReport anti_isomorphic(const FaceLattice& a, const CyclicLattice& b, const std::optional<std::vector<int>>& seed)
{
    DualProblem problem(a, b);
    DualityReport report;
    report.n = a.n();
    if (seed)
    {
        report.method = DualityMethod::ExplicitOddMap;
        if (static_cast<int>(seed->size()) != a.n())
            throw DomainError("seed map must have one entry per edge label");
        report.witness = *seed;
        report.failure_certificate = problem.check(*seed);
        report.verdict = !report.failure_certificate;
        return report;
    }
    report.method = DualityMethod::ExhaustiveSearch;
    problem.search([&](const std::vector<int>& map) {
        report.witness = map;
        return false;
    });
    report.verdict = !report.witness.empty();
    if (!report.verdict)
        report.failure_certificate = problem.exhaustion_certificate();
    return report;
}

std::vector<std::vector<int>> all_anti_isomorphisms(const FaceLattice& a, const CyclicLattice& b)
{
    DualProblem problem(a, b);
    std::vector<std::vector<int>> out;
    problem.search([&](const std::vector<int>& map) {
        out.push_back(map);
        return true;
    });
    return out;
}

DualityReport verify_prop4(const Necklace& s)
{
    const int n = s.size();
    if (n < 5 || n % 2 == 0)
        throw DomainError("odd-n duality check needs odd n >= 5, got n = " + std::to_string(n));
    if (!is_majority_dominant(s))
        throw DomainError("necklace [" + to_string(s) + "] is not majority dominant");
    FaceLattice a = enumerate_faces(s);
    CyclicLattice b = face_lattice(n - 3, n);
    std::vector<int> seed(n);
    for (int i = 1; i <= n; ++i)
        seed[i - 1] = facet_vertex_map(n, i);
    DualityReport report = anti_isomorphic(a, b, seed);
    report.method = DualityMethod::ExplicitOddMap;
    return report;
}

DualityReport verify_prop6(const Necklace& s)
{
    const int n = s.size();
    if (n < 4 || n % 2 != 0)
        throw DomainError("even-n duality check needs even n >= 4, got n = " + std::to_string(n));
    if (!is_majority_dominant(s))
        throw DomainError("necklace [" + to_string(s) + "] is not majority dominant");
    FaceLattice a = enumerate_faces(s);
    CyclicLattice b = face_lattice(n - 3, n);
    DualityReport report = anti_isomorphic(a, b);
    report.poles = dipole_tie_breaking(s);
    if (report.poles)
    {
        report.method = DualityMethod::EvenReduction;
        std::vector<Rational> reference(n, Rational(1));
        reference.back() = 2;
        // Rotate so the heavy pole becomes s_n.
        Necklace aligned = s.rotated(s.wrap(report.poles->heavy_pole + 1));
        report.reduction_matches = enumerate_faces(aligned).faces() == enumerate_faces(Necklace(reference)).faces();
    }
    return report;
}

CyclicLattice formal_dual(const FaceLattice& a)
{
    CyclicLattice out;
    out.d = a.dim();
    out.m = a.n();
    for (const auto& g : a.faces())
    {
        if (g.dim == a.dim())
            continue;
        VertexSet inc = a.incident_facets(g);
        out.faces.push_back(VertexFace{inc, a.dim() - 1 - g.dim});
        if (g.dim == 0)
            out.facets.push_back(inc);
    }
    std::sort(out.facets.begin(), out.facets.end());
    std::sort(out.faces.begin(), out.faces.end(), [](const VertexFace& x, const VertexFace& y) {
        return x.dim != y.dim ? x.dim < y.dim : x.vertices < y.vertices;
    });
    out.fvector = dual_fvector(a);
    return out;
}

std::vector<std::size_t> dual_fvector(const FaceLattice& a)
{
    auto f = a.fvector();
    std::reverse(f.begin(), f.end());
    return f;
}

bool max_faced_check(const FaceLattice& a, int d, int m)
{
    return max_faced_check(dual_fvector(a), d, m);
}

}   // namespace anglepoly
