#include "anglepoly/quadrature.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "anglepoly/error.hpp"

namespace anglepoly {

QuadratureRule gauss_jacobi(int points, double a, double b)
{
    if (points < 1)
        throw DomainError("gauss_jacobi: need at least one node");
    if (a <= -1 || b <= -1)
        throw DomainError("gauss_jacobi: exponents must exceed -1");

    Eigen::VectorXd diag(points);
    Eigen::VectorXd off(points > 1 ? points - 1 : 0);
    const double ab = a + b;
    for (int k = 0; k < points; ++k)
    {
        double t = 2.0 * k + ab;
        if (k == 0)
            diag(k) = (b - a) / (ab + 2);
        else
            diag(k) = (b * b - a * a) / (t * (t + 2));
        if (k >= 1)
        {
            double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
            double den = t * t * (t + 1) * (t - 1);
            off(k - 1) = std::sqrt(num / den);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
    eig.computeFromTridiagonal(diag, off);
    if (eig.info() != Eigen::Success)
        throw NumericError("gauss_jacobi: eigenvalue iteration failed");

    const double mu0 = std::exp((ab + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(ab + 2));
    QuadratureRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    for (int k = 0; k < points; ++k)
    {
        rule.nodes[k] = eig.eigenvalues()(k);
        double v = eig.eigenvectors()(0, k);
        rule.weights[k] = mu0 * v * v;
    }
    return rule;
}

namespace {

/// Integral of w(t) g(t) over [lo, hi] where the rule's weight is expressed in t.
double apply(const QuadratureRule& rule, const std::function<double(double)>& f, double lo, double hi)
{
    double half = 0.5 * (hi - lo);
    double mid = 0.5 * (hi + lo);
    double sum = 0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
    return sum * half;
}

}   // namespace

double integrate_singular_ends(const std::function<double(double)>& g, double lo, double hi,
                               double left, double right, double resolve, int points)
{
    if (!(hi > lo))
        throw DomainError("integrate_singular_ends: empty interval");
    const double length = hi - lo;
    resolve = std::min(resolve, length / 4);

    // Breakpoints lo < lo + h_M < ... < lo + L/4 and symmetrically at hi.
    std::vector<double> left_cuts{length / 4};
    while (left_cuts.back() > resolve)
        left_cuts.push_back(left_cuts.back() / 2);

    QuadratureRule legendre = gauss_legendre(points);
    auto full = [&](double t) { return std::pow(t - lo, -left) * std::pow(hi - t, -right) * g(t); };

    double total = 0;
    // Middle panel.
    total += apply(legendre, full, lo + length / 4, hi - length / 4);
    // Graded panels on both sides, skipping the innermost.
    for (std::size_t i = 0; i + 1 < left_cuts.size(); ++i)
    {
        total += apply(legendre, full, lo + left_cuts[i + 1], lo + left_cuts[i]);
        total += apply(legendre, full, hi - left_cuts[i], hi - left_cuts[i + 1]);
    }

    // End panels: the algebraic factor at the interval end goes into the weight.
    const double h = left_cuts.back();
    {
        QuadratureRule rule = gauss_jacobi(points, 0.0, -left);
        auto rest = [&](double t) { return std::pow(hi - t, -right) * g(t); };
        // (t - lo)^{-left} = (h / 2)^{-left} (1 + x)^{-left}
        total += std::pow(h / 2, -left) * apply(rule, rest, lo, lo + h);
    }
    {
        QuadratureRule rule = gauss_jacobi(points, -right, 0.0);
        auto rest = [&](double t) { return std::pow(t - lo, -left) * g(t); };
        total += std::pow(h / 2, -right) * apply(rule, rest, hi - h, hi);
    }
    return total;
}

}   // namespace anglepoly
