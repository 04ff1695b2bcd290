#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "anglepoly/error.hpp"
#include "anglepoly/serialize.hpp"

namespace anglepoly::cli {

namespace {

struct Options
{
    bool json = false;
    int cap = kDefaultFaceCap;
};

std::string join(const std::vector<int>& xs, const char* sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? sep : "") + std::to_string(xs[i]);
    return out;
}

std::string join(const std::vector<std::size_t>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

std::string join(const std::vector<Rational>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? " " : "") + to_string(xs[i]);
    return out;
}

std::string fixed12(double x)
{
    std::ostringstream os;
    os << std::setprecision(12) << round12(x);
    return os.str();
}

std::string join(const std::vector<double>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? " " : "") + fixed12(xs[i]);
    return out;
}

std::string figure_name(const VertexFigureShape& f)
{
    if (f.is_simplex())
        return "simplex D" + std::to_string(f.a);
    return "D" + std::to_string(f.a) + " x D" + std::to_string(f.b);
}

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ','))
        out.push_back(token);
    return out;
}

FaceLattice full_lattice(const Necklace& s, const Options& opt, const char* what)
{
    PolytopeClass c = classify_polytope(s);
    if (c != PolytopeClass::FullDim)
        throw DomainError(std::string(what) + ": polytope of [" + to_string(s) + "] is " + to_string(c) + ", not full-dimensional");
    return enumerate_faces(s, opt.cap);
}

void cmd_analyze(const Necklace& s, const Options& opt, std::ostream& out)
{
    const int n = s.size();
    PolytopeClass c = classify_polytope(s);
    bool md = is_majority_dominant(s);
    std::optional<DipolePoles> poles;
    if (n % 2 == 0)
        poles = dipole_tie_breaking(s);
    auto ties = substring_ties(s);
    auto subset = subset_ties(s, opt.cap);

    if (opt.json)
    {
        Json j = {{"necklace", encode(s.entries())},
                  {"n", n},
                  {"total", encode(s.total())},
                  {"polytope", to_string(c)},
                  {"majority_dominant", md}};
        j["dipole"] = n % 2 != 0 ? Json("odd-n") : (poles ? encode(*poles) : Json(nullptr));
        Json jt = Json::array();
        for (const auto& t : ties)
            jt.push_back(encode(t));
        j["substring_ties"] = jt;
        Json js = Json::array();
        for (const auto& t : subset)
            js.push_back(encode(t));
        j["subset_ties"] = js;
        if (c == PolytopeClass::FullDim)
        {
            j["simple"] = is_simple(s);
            j["dimension"] = n - 3;
        }
        out << dump(j);
        return;
    }
    out << "necklace: " << to_string(s) << "  (n = " << n << ", S = " << to_string(s.total()) << ")\n";
    out << "polytope: " << to_string(c);
    if (c == PolytopeClass::FullDim)
        out << " (dimension " << n - 3 << ", " << (is_simple(s) ? "simple" : "not simple") << ")";
    out << "\n";
    out << "majority dominant: " << (md ? "yes" : "no") << "\n";
    out << "dipole tie-breaking: ";
    if (n % 2 != 0)
        out << "n/a (odd n)\n";
    else if (poles)
        out << "light pole " << poles->light_pole << ", heavy pole " << poles->heavy_pole << "\n";
    else
        out << "none\n";
    out << "substring ties: " << ties.size() << "\n";
    for (const auto& t : ties)
        out << "  start " << t.substring.start << " length " << t.substring.length << " (width " << t.width << ")\n";
    out << "subset ties: " << subset.size() << "\n";
    for (const auto& t : subset)
        out << "  {" << join(t.subset.labels(), ",") << "} width " << t.width << " signature (" << t.signature_plus << ","
            << t.signature_minus << ") reorderings " << t.reorder_count.str() << "\n";
}

void cmd_fvector(const Necklace& s, const Options& opt, std::ostream& out)
{
    FaceLattice lat = full_lattice(s, opt, "fvector");
    if (opt.json)
    {
        out << dump({{"n", s.size()}, {"fvector", lat.fvector()}, {"facet_sizes", lat.facet_sizes()}});
        return;
    }
    out << "fvector: " << join(lat.fvector()) << "\n";
    out << "facet sizes: " << join(lat.facet_sizes()) << "\n";
}

void cmd_lattice(const Necklace& s, const Options& opt, std::ostream& out)
{
    FaceLattice lat = full_lattice(s, opt, "lattice");
    if (opt.json)
    {
        out << dump(encode(lat));
        return;
    }
    out << "dimension " << lat.dim() << ", fvector " << join(lat.fvector()) << "\n";
    out << "dim  kind     zero set\n";
    for (const auto& f : lat.faces())
        out << std::setw(3) << f.dim << "  " << std::left << std::setw(8) << to_string(f.kind) << std::right << " {"
            << join(f.closed_zero_set.labels(), ",") << "}\n";
}

void cmd_vertices(const Necklace& s, const Options& opt, std::ostream& out)
{
    FaceLattice lat = full_lattice(s, opt, "vertices");
    const int n = s.size();
    Json trigons = Json::array(), digons = Json::array();
    std::ostringstream text_t, text_d;
    int count_t = 0, count_d = 0;
    for (const auto& v : lat.vertices())
    {
        auto survivors = v.closed_zero_set.complement(n).labels();
        VertexFigureShape fig = vertex_figure(s, v);
        PolygonRealization p = vertex_realization(s, v);
        Json j = {{"zeros", encode(v.closed_zero_set)},
                  {"edges", survivors},
                  {"figure", encode(fig)},
                  {"incident_facets", encode(lat.incident_facets(v))},
                  {"realization", encode(p)}};
        std::ostringstream line;
        line << "  edges " << join(survivors) << "   figure " << figure_name(fig) << "   lengths " << join(p.lengths)
             << "   residual " << fixed12(p.closure_residual()) << "\n";
        if (v.kind == FaceKind::DigonVertex)
        {
            digons.push_back(j);
            text_d << line.str();
            ++count_d;
        }
        else
        {
            trigons.push_back(j);
            text_t << line.str();
            ++count_t;
        }
    }
    if (opt.json)
    {
        out << dump({{"n", n}, {"trigon", trigons}, {"digon", digons}});
        return;
    }
    out << "trigon vertices: " << count_t << "\n" << text_t.str();
    out << "digon vertices: " << count_d << "\n" << text_d.str();
}

DualityReport duality_report(const Necklace& s, const Options& opt)
{
    const int n = s.size();
    if (n >= 4 && is_majority_dominant(s))
        return n % 2 != 0 ? verify_prop4(s) : verify_prop6(s);
    FaceLattice a = full_lattice(s, opt, "duality");
    CyclicLattice b = face_lattice(n - 3, n);
    try
    {
        return anti_isomorphic(a, b);
    }
    catch (const DomainError& e)
    {
        DualityReport r;
        r.n = n;
        r.failure_certificate = DualityCertificate{e.what(), IndexSet{}};
        return r;
    }
}

void cmd_duality(const Necklace& s, const Options& opt, std::ostream& out)
{
    DualityReport r = duality_report(s, opt);
    if (opt.json)
    {
        out << dump(encode(r));
        return;
    }
    out << "verdict: " << (r.verdict ? "true" : "false") << "\n";
    out << "method: " << to_string(r.method) << "\n";
    if (!r.witness.empty())
    {
        out << "witness (facet -> cyclic vertex):";
        for (std::size_t i = 0; i < r.witness.size(); ++i)
            if (r.witness[i] != 0)
                out << " " << i + 1 << "->" << r.witness[i];
        out << "\n";
    }
    if (r.poles)
        out << "poles: light " << r.poles->light_pole << ", heavy " << r.poles->heavy_pole << "\n";
    if (r.reduction_matches)
        out << "reduction to [1,...,1,2]: " << (*r.reduction_matches ? "matches" : "differs") << "\n";
    if (r.failure_certificate)
        out << "certificate: " << r.failure_certificate->reason << " {" << join(r.failure_certificate->facets.labels(), ",") << "}\n";
}

void cmd_tours(int n, const Options& opt, std::ostream& out)
{
    auto small = enumerate_small(n);
    auto odd = enumerate_odd(n);
    if (opt.json)
    {
        Json js = Json::array(), jo = Json::array();
        for (const auto& t : small)
        {
            Json j = encode(t);
            j["neg2"] = map_neg2(t).normal_form();
            js.push_back(j);
        }
        for (const auto& t : odd)
            jo.push_back(encode(t));
        out << dump({{"n", n}, {"expected", small_tour_count(n)}, {"small", js}, {"odd", jo}});
        return;
    }
    out << "n = " << n << ": " << small.size() << " small tours, " << odd.size() << " odd tours (C(n+1,3)/4 = " << small_tour_count(n) << ")\n";
    out << "small tour   steps      -2 x tour\n";
    for (const auto& t : small)
    {
        auto f = t.normal_form();
        auto st = t.steps();
        auto g = map_neg2(t).normal_form();
        std::ostringstream a, b, c;
        a << f[0] << " " << f[1] << " " << f[2];
        b << st[0] << " " << st[1] << " " << st[2];
        c << g[0] << " " << g[1] << " " << g[2];
        out << std::left << std::setw(13) << a.str() << std::setw(11) << b.str() << c.str() << std::right << "\n";
    }
}

std::vector<double> parse_doubles(const std::string& text, const char* what)
{
    std::vector<double> out;
    for (const auto& tok : split_commas(text))
    {
        std::size_t used = 0;
        double x = 0;
        try
        {
            x = std::stod(tok, &used);
        }
        catch (const std::exception&)
        {
            used = 0;
        }
        if (used == 0 || used != tok.size())
            throw ParseError(std::string(what) + ": invalid number '" + tok + "'");
        out.push_back(x);
    }
    return out;
}

struct SweepArgs
{
    std::string text;
    int index = 0;
    std::string from, to, step;
};

void cmd_sweep(const SweepArgs& a, const Options& opt, std::ostream& out)
{
    std::string text = a.text;
    if (a.index != 0)
    {
        auto tokens = split_commas(text);
        if (a.index < 1 || a.index > static_cast<int>(tokens.size()))
            throw ParseError("--index " + std::to_string(a.index) + " outside 1.." + std::to_string(tokens.size()));
        for (std::size_t i = 0; i < tokens.size(); ++i)
            if (tokens[i].find('?') != std::string::npos && static_cast<int>(i) + 1 != a.index)
                throw ParseError("--index " + std::to_string(a.index) + " disagrees with the '?' at entry " + std::to_string(i + 1));
        tokens[a.index - 1] = "?";
        text.clear();
        for (std::size_t i = 0; i < tokens.size(); ++i)
            text += (i ? "," : "") + tokens[i];
    }
    SweepTemplate t = parse_sweep_template(text);
    Rational lo = parse_rational(a.from);
    Rational hi = parse_rational(a.to);
    auto crit = critical_values(t, lo, hi);
    std::vector<Rational> values;
    if (!a.step.empty())
    {
        Rational h = parse_rational(a.step);
        if (h <= 0)
            throw ParseError("--step '" + a.step + "' must be positive");
        for (Rational v = lo; v <= hi; v += h)
            values.push_back(v);
    }
    else
        values = sweep_samples(t, lo, hi);
    auto reports = sweep(t, values, opt.cap);

    if (opt.json)
    {
        Json jr = Json::array();
        for (const auto& r : reports)
            jr.push_back(encode(r));
        out << dump({{"template", text}, {"marked", t.marked}, {"from", encode(lo)}, {"to", encode(hi)}, {"critical_values", encode(crit)}, {"reports", jr}});
        return;
    }
    out << "template: " << text << "  (swept entry " << t.marked << ")\n";
    out << "critical values in [" << to_string(lo) << ", " << to_string(hi) << "]: " << join(crit) << "\n";
    out << std::left << std::setw(9) << "value" << std::setw(7) << "class" << std::setw(12) << "fvector" << "facet sizes" << std::right << "\n";
    for (const auto& r : reports)
    {
        out << std::left << std::setw(9) << to_string(r.value) << std::setw(7) << to_string(r.polytope) << std::setw(12) << join(r.fvector)
            << join(r.facet_sizes) << std::right << "\n";
        for (const auto& tr : r.transitions)
        {
            auto face = [](int d) { return d < 0 ? std::string("empty") : std::to_string(d) + "-face"; };
            out << "    tie at start " << tr.tie.substring.start << " length " << tr.tie.substring.length << ": "
                << face(tr.below_dim) << " below, " << face(tr.above_dim) << " above\n";
        }
    }
}

struct ScArgs
{
    std::string lengths;
    std::string turns;
    double base = 0;
    int nodes = kDefaultScNodes;
    int probe = 0;
    double rho_max = 1e-2;
    double rho_min = 1e-4;
    int points = 9;
};

void cmd_scmap(const ScArgs& a, const Options& opt, std::ostream& out)
{
    Necklace s = parse_necklace(a.lengths);
    if (a.probe != 0)
    {
        ExponentProbe p = boundary_exponent_probe(s, a.probe, log_grid(a.rho_max, a.rho_min, a.points));
        if (opt.json)
        {
            out << dump(encode(p));
            return;
        }
        out << "pair (" << to_string(s.at(p.k)) << ", " << to_string(s.at(p.k + 1)) << ") at k = " << p.k << "\n";
        out << "analytic q: " << fixed12(p.q_analytic) << "\n";
        out << "fitted q:   " << fixed12(p.q_hat) << "  (rms residual " << fixed12(p.fit_residual) << ")\n";
        out << "fitted q after unit-perimeter scaling: " << fixed12(p.q_hat_normalized) << "\n";
        return;
    }
    FixedLengthsShape shape;
    std::vector<double> lengths;
    for (const auto& x : s.entries())
        lengths.push_back(static_cast<double>(x));
    if (a.turns.empty())
        shape = inscribed_shape(lengths);
    else
    {
        shape.lengths = lengths;
        for (const auto& tok : split_commas(a.turns))
        {
            Rational q;
            try
            {
                q = parse_rational(tok);
            }
            catch (const ParseError&)
            {
                throw ParseError("--turns: invalid fraction of a full turn '" + tok + "'");
            }
            if (q < 0)
                throw ParseError("--turns: negative turn '" + tok + "'");
            shape.turns.push_back(2 * std::numbers::pi * static_cast<double>(q));
        }
        shape.base_heading = a.base;
    }
    KMResult r = km_map(s, shape, a.nodes);
    if (opt.json)
    {
        out << dump({{"shape", encode(shape)}, {"result", encode(r)}});
        return;
    }
    out << "turns: " << join(shape.turns) << "\n";
    out << "image lengths: " << join(r.lengths) << "\n";
    out << "closure residual: " << fixed12(r.closure_residual) << "\n";
    out << "quadrature self-convergence: " << fixed12(r.self_convergence) << " (" << r.nodes << " nodes per panel)\n";
}

void cmd_oracle(int d, int m, const std::string& params, const Options& opt, std::ostream& out)
{
    std::vector<long long> ps;
    for (const auto& tok : split_commas(params))
    {
        std::size_t used = 0;
        long long x = 0;
        try
        {
            x = std::stoll(tok, &used);
        }
        catch (const std::exception&)
        {
            used = 0;
        }
        if (used == 0 || used != tok.size())
            throw ParseError("--params: invalid integer '" + tok + "'");
        ps.push_back(x);
    }
    auto gale = gale_facets(d, m);
    auto oracle = moment_oracle_facets(d, m, ps);
    bool match = gale == oracle;
    if (opt.json)
    {
        Json g = Json::array();
        for (const auto& f : gale)
            g.push_back(encode(f));
        out << dump({{"d", d}, {"m", m}, {"gale_count", gale.size()}, {"oracle_count", oracle.size()}, {"match", match}, {"facets", g}});
        return;
    }
    out << "C_" << d << "(" << m << "): " << gale.size() << " facets by evenness, " << oracle.size() << " by moment-curve determinants\n";
    out << "match: " << (match ? "yes" : "no") << "\n";
}

}   // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fixed-angle polygon polytopes: face lattices, duality with cyclic polytopes, and the conformal map", "anglepoly"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "Machine-readable output");
    app.add_option("--cap", opt.cap, "Largest n for exhaustive enumeration")->check(CLI::Range(3, 62));

    std::string necklace_text;
    auto necklace_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("necklace", necklace_text, "Comma-separated positive rationals, e.g. 1,3,2,4,5")->required();
        return sub;
    };
    auto* analyze = necklace_cmd("analyze", "Classification, majority dominance, dipole and ties");
    auto* fvector = necklace_cmd("fvector", "f-vector and facet-size multiset");
    auto* lattice = necklace_cmd("lattice", "Full face lattice");
    auto* vertices = necklace_cmd("vertices", "Trigon and digon vertices with figures and realizations");
    auto* duality = necklace_cmd("duality", "Anti-isomorphism with the cyclic polytope C_{n-3}(n)");

    int tour_n = 0;
    auto* tours = app.add_subcommand("tours", "Small and odd tours mod an odd n");
    tours->add_option("n", tour_n, "Odd modulus")->required();

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Vary one entry and report the polytope along the way");
    sweep_cmd->add_option("template", sw.text, "Necklace with one entry '?', e.g. 1,3,1,4,2,?")->required();
    sweep_cmd->add_option("--index", sw.index, "Swept entry, replacing that token by '?'");
    sweep_cmd->add_option("--from", sw.from, "Lower end of the range")->required();
    sweep_cmd->add_option("--to", sw.to, "Upper end of the range")->required();
    sweep_cmd->add_option("--step", sw.step, "Regular grid step instead of the critical-value samples");

    ScArgs sc;
    auto* scmap = app.add_subcommand("scmap", "Image of a convex fixed-lengths shape under the conformal map");
    scmap->add_option("--lengths", sc.lengths, "Edge lengths, which are also the necklace")->required();
    scmap->add_option("--turns", sc.turns, "Exterior turns as fractions of a full turn (default: inscribed shape)");
    scmap->add_option("--base", sc.base, "Heading of edge 1 in radians");
    scmap->add_option("--nodes", sc.nodes, "Coarse quadrature nodes per panel")->check(CLI::Range(4, 200));
    scmap->add_option("--probe", sc.probe, "Fit the boundary exponent at the pair (s_k, s_k+1)");
    scmap->add_option("--rho-max", sc.rho_max, "Largest turn of the probe grid");
    scmap->add_option("--rho-min", sc.rho_min, "Smallest turn of the probe grid");
    scmap->add_option("--points", sc.points, "Number of probe turns")->check(CLI::Range(2, 100));

    int od = 0, om = 0;
    std::string oparams;
    auto* oracle = app.add_subcommand("oracle-check", "Compare evenness facets with moment-curve determinants");
    oracle->add_option("d", od, "Dimension")->required();
    oracle->add_option("m", om, "Number of vertices")->required();
    oracle->add_option("--params", oparams, "Strictly increasing integer parameters (default 1..m)");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try
    {
        if (analyze->parsed())
            cmd_analyze(parse_necklace(necklace_text), opt, out);
        else if (fvector->parsed())
            cmd_fvector(parse_necklace(necklace_text), opt, out);
        else if (lattice->parsed())
            cmd_lattice(parse_necklace(necklace_text), opt, out);
        else if (vertices->parsed())
            cmd_vertices(parse_necklace(necklace_text), opt, out);
        else if (duality->parsed())
            cmd_duality(parse_necklace(necklace_text), opt, out);
        else if (tours->parsed())
            cmd_tours(tour_n, opt, out);
        else if (sweep_cmd->parsed())
            cmd_sweep(sw, opt, out);
        else if (scmap->parsed())
            cmd_scmap(sc, opt, out);
        else if (oracle->parsed())
            cmd_oracle(od, om, oparams, opt, out);
    }
    catch (const ParseError& e)
    {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    catch (const DomainError& e)
    {
        err << "error: " << e.what() << "\n";
        return kDomain;
    }
    catch (const NumericError& e)
    {
        err << "error: " << e.what() << "\n";
        return kDomain;
    }
    return kOk;
}

}   // namespace anglepoly::cli
