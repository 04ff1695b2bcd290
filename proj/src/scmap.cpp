#include "anglepoly/scmap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "anglepoly/error.hpp"
#include "anglepoly/geometry.hpp"
#include "anglepoly/quadrature.hpp"

namespace anglepoly {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

struct LineFit
{
    double slope = 0;
    double residual = 0;   // root mean square
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y)
{
    const double count = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        mx += x[i];
        my += y[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        double e = y[i] - (my + fit.slope * (x[i] - mx));
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / count);
    return fit;
}

/// 2 sin(x/2) / x, which tends to 1 as x -> 0.
double chord_ratio(double x)
{
    return x < 1e-8 ? 1.0 - x * x / 24 : 2 * std::sin(x / 2) / x;
}

}   // namespace

std::vector<double> FixedLengthsShape::edge_headings() const
{
    std::vector<double> psi(lengths.size());
    double h = base_heading;
    for (std::size_t k = 0; k < psi.size(); ++k)
    {
        psi[k] = h;
        h += turns[k];
    }
    return psi;
}

double FixedLengthsShape::closure_residual() const
{
    auto psi = edge_headings();
    std::complex<double> sum = 0;
    for (std::size_t k = 0; k < lengths.size(); ++k)
        sum += std::polar(lengths[k], psi[k]);
    return std::abs(sum);
}

void validate_shape(const FixedLengthsShape& shape)
{
    const int n = shape.size();
    if (n < 3)
        throw DomainError("shape needs at least 3 edges, got " + std::to_string(n));
    if (static_cast<int>(shape.turns.size()) != n)
        throw DomainError("shape has " + std::to_string(n) + " lengths but " + std::to_string(shape.turns.size()) + " turns");
    double perimeter = 0, total_turn = 0;
    for (int k = 0; k < n; ++k)
    {
        if (!(shape.lengths[k] > 0))
            throw DomainError("shape length " + std::to_string(k + 1) + " is not positive");
        if (shape.turns[k] < 0)
            throw DomainError("shape turn t_" + std::to_string(k + 1) + " is negative: not ccw-convex");
        perimeter += shape.lengths[k];
        total_turn += shape.turns[k];
    }
    if (std::abs(total_turn - kTwoPi) > 1e-10)
        throw DomainError("shape turns sum to " + std::to_string(total_turn) + ", not 2 pi");
    if (shape.closure_residual() > 1e-9 * std::max(1.0, perimeter))
        throw DomainError("shape does not close: residual " + std::to_string(shape.closure_residual()));
}

FixedLengthsShape shape_from_edges(const std::vector<std::complex<double>>& edges)
{
    const std::size_t n = edges.size();
    FixedLengthsShape shape;
    shape.base_heading = std::arg(edges.front());
    for (std::size_t k = 0; k < n; ++k)
    {
        shape.lengths.push_back(std::abs(edges[k]));
        double t = std::arg(edges[(k + 1) % n] / edges[k]);
        if (t < 0)
        {
            if (t > -1e-14)
                t = 0;
            else
                throw DomainError("edge " + std::to_string(k + 2) + " turns clockwise: shape is not ccw-convex");
        }
        shape.turns.push_back(t);
    }
    return shape;
}

FixedLengthsShape equiangular_shape(const std::vector<double>& lengths)
{
    FixedLengthsShape shape;
    shape.lengths = lengths;
    shape.turns.assign(lengths.size(), kTwoPi / static_cast<double>(lengths.size()));
    return shape;
}

FixedLengthsShape inscribed_shape(const std::vector<double>& lengths)
{
    const std::size_t n = lengths.size();
    if (n < 3)
        throw DomainError("inscribed_shape needs at least 3 sides");
    std::size_t longest = std::max_element(lengths.begin(), lengths.end()) - lengths.begin();
    const double big = lengths[longest];
    double rest = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (i != longest)
            rest += lengths[i];
    if (!(big < rest))
        throw DomainError("inscribed_shape: longest side is not shorter than the others together");

    // Unknown: half the central angle theta of the longest side, which may
    // exceed pi/2 when the centre lies outside.  Solving in theta rather than
    // in the radius stays well conditioned near a diametral longest side.
    auto others = [&](double theta) {
        std::vector<double> c(n);
        for (std::size_t i = 0; i < n; ++i)
            c[i] = i == longest ? 2 * theta : 2 * std::asin(lengths[i] * std::sin(theta) / big);
        return c;
    };
    auto excess = [&](double theta) {
        double sum = 0;
        for (double c : others(theta))
            sum += c;
        return sum - kTwoPi;
    };
    double lo = 0, hi = std::numbers::pi / 2;
    if (excess(hi) < 0)
    {
        lo = hi;
        double gap = std::numbers::pi / 2;
        do
        {
            gap /= 2;
            hi = std::numbers::pi - gap;
        } while (excess(hi) <= 0 && gap > 1e-300);
    }
    for (int it = 0; it < 200; ++it)
    {
        double mid = 0.5 * (lo + hi);
        (excess(mid) < 0 ? lo : hi) = mid;
    }
    const auto central = others(0.5 * (lo + hi));

    std::vector<std::complex<double>> edges;
    double at = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        double c = central[i];
        edges.push_back(std::polar(lengths[i], at + c / 2 + std::numbers::pi / 2));
        at += c;
    }
    return shape_from_edges(edges);
}

FixedLengthsShape bent_shape(const Necklace& s, int k, double rho)
{
    const int n = s.size();
    if (n < 4)
        throw DomainError("bent_shape needs n >= 4");
    if (!(rho > 0 && rho < std::numbers::pi))
        throw DomainError("bent_shape: bend must lie in (0, pi)");
    k = s.wrap(k);
    const double a = static_cast<double>(s.at(k));
    const double b = static_cast<double>(s.at(k + 1));
    std::complex<double> fused = a + std::polar(b, rho);

    // Sides in order: fused, s_{k+2}, ..., s_{k-1}.
    std::vector<double> sides{std::abs(fused)};
    for (int i = 2; i < n; ++i)
        sides.push_back(static_cast<double>(s.at(k + i)));
    FixedLengthsShape base = inscribed_shape(sides);
    auto psi = base.edge_headings();

    std::vector<std::complex<double>> edges(n);
    const double first = psi[0] - std::arg(fused);
    edges[k - 1] = std::polar(a, first);
    edges[s.wrap(k + 1) - 1] = std::polar(b, first + rho);
    for (int i = 2; i < n; ++i)
        edges[s.wrap(k + i) - 1] = std::polar(sides[i - 1], psi[i - 1]);
    return shape_from_edges(edges);
}

std::vector<std::complex<double>> prevertices(const FixedLengthsShape& shape)
{
    validate_shape(shape);
    for (int k = 0; k < shape.size(); ++k)
        if (shape.turns[k] == 0)
            throw DomainError("turn t_" + std::to_string(k + 1) + " is zero: prevertices coincide (boundary shape)");
    std::vector<std::complex<double>> z;
    for (double psi : shape.edge_headings())
        z.push_back(std::polar(1.0, psi));
    return z;
}

std::vector<double> sc_exponents(const Necklace& s)
{
    std::vector<double> alpha;
    for (const auto& x : s.entries())
        alpha.push_back(static_cast<double>(2 * x / s.total()));
    return alpha;
}

KMResult km_map(const Necklace& s, const FixedLengthsShape& shape, int nodes)
{
    const int n = s.size();
    if (shape.size() != n)
        throw DomainError("shape has " + std::to_string(shape.size()) + " edges, necklace has " + std::to_string(n));
    prevertices(shape);
    if (classify_polytope(s) != PolytopeClass::FullDim)
        throw DomainError("km_map needs every entry below S/2");
    double perimeter = 0;
    for (double l : shape.lengths)
        perimeter += l;
    for (int k = 1; k <= n; ++k)
        if (std::abs(shape.lengths[k - 1] / perimeter - static_cast<double>(s.at(k) / s.total())) > 1e-12)
            throw DomainError("shape length " + std::to_string(k) + " does not match necklace entry " + to_string(s.at(k)));

    const auto alpha = sc_exponents(s);
    const auto psi = shape.edge_headings();
    auto turn = [&](int j) { return shape.turns[s.wrap(j) - 1]; };

    auto integrate = [&](int points) {
        std::vector<double> raw(n);
        for (int j = 1; j <= n; ++j)
        {
            const int before = s.wrap(j - 1);
            const double hi = psi[j - 1];
            const double lo = hi - turn(j - 1);
            auto smooth = [&](double theta) {
                double log_sum = 0;
                for (int k = 1; k <= n; ++k)
                {
                    double factor;
                    if (k == before)
                        factor = chord_ratio(theta - lo);
                    else if (k == j)
                        factor = chord_ratio(hi - theta);
                    else
                        factor = 2 * std::abs(std::sin((theta - psi[k - 1]) / 2));
                    log_sum -= alpha[k - 1] * std::log(factor);
                }
                return std::exp(log_sum);
            };
            double resolve = 0.5 * std::min(turn(j - 2), turn(j));
            raw[j - 1] = integrate_singular_ends(smooth, lo, hi, alpha[before - 1], alpha[j - 1], resolve, points);
        }
        return raw;
    };

    auto coarse = integrate(nodes);
    auto fine = integrate(2 * nodes);
    KMResult out;
    out.nodes = 2 * nodes;
    for (int j = 0; j < n; ++j)
        out.self_convergence = std::max(out.self_convergence, std::abs(fine[j] - coarse[j]) / std::abs(fine[j]));
    if (!(out.self_convergence <= kScTolerance))
        throw NumericError("km_map: quadrature levels " + std::to_string(nodes) + " and " + std::to_string(2 * nodes) + " differ by " + std::to_string(out.self_convergence) + " relative");

    out.raw_lengths = fine;
    double total = 0;
    for (double l : fine)
        total += l;
    for (double l : fine)
        out.lengths.push_back(l / total);
    out.closure_residual = realize(s, out.lengths).closure_residual();
    return out;
}

ExponentProbe boundary_exponent_probe(const Necklace& s, int k, const std::vector<double>& rhos)
{
    if (rhos.size() < 2)
        throw DomainError("boundary_exponent_probe needs at least two turns");
    ExponentProbe probe;
    probe.k = s.wrap(k);
    probe.q_analytic = static_cast<double>(1 - 2 * (s.at(k) + s.at(k + 1)) / s.total());
    probe.rhos = rhos;
    const int edge = s.wrap(k + 1) - 1;
    std::vector<double> x, y_raw, y_norm;
    for (double rho : rhos)
    {
        KMResult km = km_map(s, bent_shape(s, k, rho));
        probe.r_raw.push_back(km.raw_lengths[edge]);
        probe.r_normalized.push_back(km.lengths[edge]);
        x.push_back(std::log(rho));
        y_raw.push_back(std::log(km.raw_lengths[edge]));
        y_norm.push_back(std::log(km.lengths[edge]));
    }
    LineFit raw = fit_line(x, y_raw);
    probe.q_hat = raw.slope;
    probe.fit_residual = raw.residual;
    probe.q_hat_normalized = fit_line(x, y_norm).slope;
    return probe;
}

std::vector<double> log_grid(double hi, double lo, int count)
{
    if (count < 2 || !(lo > 0) || !(hi > lo))
        throw DomainError("log_grid needs count >= 2 and 0 < lo < hi");
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(std::exp(std::log(hi) + (std::log(lo) - std::log(hi)) * i / (count - 1)));
    return out;
}

}   // namespace anglepoly
