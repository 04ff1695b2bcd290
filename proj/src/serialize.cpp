#include "anglepoly/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace anglepoly {

double round12(double x)
{
    if (!std::isfinite(x) || x == 0)
        return x == 0 ? 0.0 : x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

Json encode(const Rational& q)
{
    return to_string(q);
}

Json encode(const std::vector<Rational>& xs)
{
    Json j = Json::array();
    for (const auto& x : xs)
        j.push_back(to_string(x));
    return j;
}

Json encode(const std::vector<double>& xs)
{
    Json j = Json::array();
    for (double x : xs)
        j.push_back(round12(x));
    return j;
}

Json encode(const IndexSet& s)
{
    return s.labels();
}

Json encode(const Substring& sub)
{
    return {{"start", sub.start}, {"length", sub.length}};
}

Json encode(const TieRecord& t)
{
    return {{"substring", encode(t.substring)}, {"width", t.width}};
}

Json encode(const SubsetTie& t)
{
    return {{"subset", encode(t.subset)},
            {"width", t.width},
            {"signature", {t.signature_plus, t.signature_minus}},
            {"reorder_count", t.reorder_count.str()}};
}

Json encode(const DipolePoles& p)
{
    return {{"light_pole", p.light_pole}, {"heavy_pole", p.heavy_pole}};
}

Json encode(const Face& f)
{
    return {{"zeros", encode(f.closed_zero_set)}, {"kind", to_string(f.kind)}, {"dim", f.dim}};
}

Json encode(const FaceLattice& lat)
{
    Json faces = Json::array();
    for (const auto& f : lat.faces())
        faces.push_back(encode(f));
    return {{"n", lat.n()},
            {"dim", lat.dim()},
            {"fvector", lat.fvector()},
            {"facet_edges", encode(lat.facet_edges())},
            {"faces", faces}};
}

Json encode(const VertexFigureShape& v)
{
    return {{"a", v.a}, {"b", v.b}, {"facets", v.facet_count()}};
}

Json encode(const CyclicLattice& lat)
{
    Json facets = Json::array();
    for (const auto& f : lat.facets)
        facets.push_back(encode(f));
    Json faces = Json::array();
    for (const auto& f : lat.faces)
        faces.push_back({{"labels", encode(f.vertices)}, {"dim", f.dim}});
    return {{"d", lat.d}, {"m", lat.m}, {"fvector", lat.fvector}, {"facets", facets}, {"faces", faces}};
}

Json encode(const DualityReport& r)
{
    Json j = {{"verdict", r.verdict}, {"method", to_string(r.method)}, {"n", r.n}, {"witness", r.witness}};
    j["failure_certificate"] = r.failure_certificate
        ? Json{{"reason", r.failure_certificate->reason}, {"facets", encode(r.failure_certificate->facets)}}
        : Json(nullptr);
    j["poles"] = r.poles ? encode(*r.poles) : Json(nullptr);
    j["reduction_matches"] = r.reduction_matches ? Json(*r.reduction_matches) : Json(nullptr);
    return j;
}

Json encode(const Point2& p)
{
    return {round12(p.x), round12(p.y)};
}

Json encode(const PolygonRealization& p)
{
    Json vertices = Json::array();
    for (const auto& v : p.vertices)
        vertices.push_back(encode(v));
    return {{"lengths", encode(p.lengths)},
            {"headings", encode(p.headings)},
            {"vertices", vertices},
            {"perimeter", round12(p.perimeter())},
            {"closure_residual", round12(p.closure_residual())},
            {"marginal", p.marginal}};
}

Json encode(const AreaSignature& a)
{
    return {{"plus", a.plus}, {"minus", a.minus}, {"degenerate", a.degenerate}, {"eigenvalues", encode(a.eigenvalues)}};
}

Json encode(const Feasibility& f)
{
    Json j = {{"status", to_string(f.status)}, {"reason", f.reason}};
    j["realization"] = f.realization ? encode(*f.realization) : Json(nullptr);
    if (f.status == Feasibility::Status::Infeasible)
    {
        j["offending_run"] = f.offending_run;
        j["run_weight"] = encode(f.run_weight);
    }
    return j;
}

Json encode(const Tour& t)
{
    return {{"tour", t.normal_form()}, {"steps", t.steps()}};
}

Json encode(const Transition& t)
{
    return {{"tie", encode(t.tie)}, {"below_dim", t.below_dim}, {"above_dim", t.above_dim}};
}

Json encode(const SweepReport& r)
{
    Json ties = Json::array();
    for (const auto& t : r.ties)
        ties.push_back(encode(t));
    Json transitions = Json::array();
    for (const auto& t : r.transitions)
        transitions.push_back(encode(t));
    return {{"value", encode(r.value)},
            {"polytope", to_string(r.polytope)},
            {"fvector", r.fvector},
            {"facet_sizes", r.facet_sizes},
            {"critical", r.critical},
            {"ties", ties},
            {"transitions", transitions}};
}

Json encode(const FixedLengthsShape& s)
{
    return {{"lengths", encode(s.lengths)}, {"turns", encode(s.turns)}, {"base_heading", round12(s.base_heading)}};
}

Json encode(const KMResult& r)
{
    return {{"lengths", encode(r.lengths)},
            {"raw_lengths", encode(r.raw_lengths)},
            {"closure_residual", round12(r.closure_residual)},
            {"self_convergence", round12(r.self_convergence)},
            {"nodes", r.nodes}};
}

Json encode(const ExponentProbe& p)
{
    return {{"k", p.k},
            {"q_analytic", round12(p.q_analytic)},
            {"q_hat", round12(p.q_hat)},
            {"q_hat_normalized", round12(p.q_hat_normalized)},
            {"fit_residual", round12(p.fit_residual)},
            {"rhos", encode(p.rhos)},
            {"r_raw", encode(p.r_raw)},
            {"r_normalized", encode(p.r_normalized)}};
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}   // namespace anglepoly
