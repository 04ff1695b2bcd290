#include "anglepoly/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "anglepoly/error.hpp"

namespace anglepoly {

namespace {

double fraction_of_total(const Rational& part, const Necklace& s)
{
    return static_cast<double>(part / s.total());
}

/// Tangential lengths for a polygon with all angle shares below half, scaled to unit perimeter.
std::vector<double> tangential_lengths(const Necklace& s)
{
    const int n = s.size();
    std::vector<double> tangent(n);
    for (int k = 1; k <= n; ++k)
        tangent[k - 1] = std::tan(std::numbers::pi * fraction_of_total(s.at(k), s));
    std::vector<double> len(n);
    double total = 0;
    for (int k = 1; k <= n; ++k)
    {
        len[k - 1] = tangent[s.wrap(k - 1) - 1] + tangent[k - 1];
        total += len[k - 1];
    }
    for (auto& l : len)
        l /= total;
    return len;
}

}   // namespace

std::vector<double> headings(const Necklace& s)
{
    std::vector<double> phi(s.size());
    Rational before = 0;
    for (int k = 1; k <= s.size(); ++k)
    {
        phi[k - 1] = 2 * std::numbers::pi * fraction_of_total(before, s);
        before += s.at(k);
    }
    return phi;
}

double PolygonRealization::perimeter() const
{
    double p = 0;
    for (double l : lengths)
        p += l;
    return p;
}

double PolygonRealization::closure_residual() const
{
    double x = 0, y = 0;
    for (std::size_t k = 0; k < lengths.size(); ++k)
    {
        x += lengths[k] * std::cos(headings[k]);
        y += lengths[k] * std::sin(headings[k]);
    }
    return std::hypot(x, y);
}

PolygonRealization realize(const Necklace& s, std::vector<double> lengths, const Tolerances& tol)
{
    if (static_cast<int>(lengths.size()) != s.size())
        throw DomainError("realize: expected " + std::to_string(s.size()) + " lengths, got " + std::to_string(lengths.size()));
    PolygonRealization p;
    p.headings = headings(s);
    p.lengths = std::move(lengths);
    Point2 at{0, 0};
    for (std::size_t k = 0; k < p.lengths.size(); ++k)
    {
        if (p.lengths[k] < 0)
            throw DomainError("realize: negative edge length l_" + std::to_string(k + 1));
        if (p.lengths[k] > 0 && p.lengths[k] < tol.feasibility)
            p.marginal = true;
        at.x += p.lengths[k] * std::cos(p.headings[k]);
        at.y += p.lengths[k] * std::sin(p.headings[k]);
        p.vertices.push_back(at);
    }
    return p;
}

Eigen::MatrixXd closure_matrix(const Necklace& s)
{
    auto phi = headings(s);
    Eigen::MatrixXd c(2, s.size());
    for (int k = 0; k < s.size(); ++k)
    {
        c(0, k) = std::cos(phi[k]);
        c(1, k) = std::sin(phi[k]);
    }
    return c;
}

int closure_rank(const Necklace& s, const Tolerances& tol)
{
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(closure_matrix(s));
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol.rank * sv(0))
            ++rank;
    return rank;
}

PolygonRealization tangential_polygon(const Necklace& s, const Tolerances& tol)
{
    if (classify_polytope(s) != PolytopeClass::FullDim)
        throw DomainError("tangential_polygon: [" + to_string(s) + "] has an entry >= S/2");
    PolygonRealization p = realize(s, tangential_lengths(s), tol);
    if (p.closure_residual() > tol.construction)
        throw NumericError("tangential_polygon: closure residual " + std::to_string(p.closure_residual()));
    return p;
}

PolygonRealization vertex_realization(const Necklace& s, const Face& v, const Tolerances& tol)
{
    const int n = s.size();
    if (v.dim != 0)
        throw DomainError("vertex_realization: face is not a vertex");
    auto survivors = v.closed_zero_set.complement(n).labels();
    std::vector<double> len(n, 0.0);
    if (v.kind == FaceKind::DigonVertex)
    {
        if (survivors.size() != 2)
            throw DomainError("vertex_realization: a digon vertex leaves exactly two edges");
        len[survivors[0] - 1] = 0.5;
        len[survivors[1] - 1] = 0.5;
    }
    else
    {
        if (survivors.size() != 3)
            throw DomainError("vertex_realization: a trigon vertex leaves exactly three edges");
        auto phi = headings(s);
        Eigen::Matrix3d a;
        for (int c = 0; c < 3; ++c)
        {
            double h = phi[survivors[c] - 1];
            a(0, c) = std::cos(h);
            a(1, c) = std::sin(h);
            a(2, c) = 1.0;
        }
        Eigen::Vector3d sol = a.fullPivLu().solve(Eigen::Vector3d(0, 0, 1));
        for (int c = 0; c < 3; ++c)
        {
            // Strictly light cut substrings give a nondegenerate triangle.
            if (!(sol(c) > 0))
                throw std::logic_error("vertex_realization: singular trigon system");
            len[survivors[c] - 1] = sol(c);
        }
    }
    PolygonRealization p = realize(s, std::move(len), tol);
    if (p.closure_residual() > tol.feasibility)
        throw NumericError("vertex_realization: closure residual " + std::to_string(p.closure_residual()));
    return p;
}

double area(const PolygonRealization& p)
{
    double twice = 0;
    Point2 prev{0, 0};
    for (const auto& v : p.vertices)
    {
        twice += prev.x * v.y - prev.y * v.x;
        prev = v;
    }
    return 0.5 * twice;
}

AreaSignature area_form_signature(const Necklace& s, const Tolerances& tol)
{
    const int n = s.size();
    auto phi = headings(s);
    // area(l) = l^T Q l for closed length vectors, with Q_jk = sin(phi_k - phi_j) / 4 for j < k.
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            q(j, k) = q(k, j) = 0.25 * std::sin(phi[k] - phi[j]);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(closure_matrix(s), Eigen::ComputeFullV);
    Eigen::MatrixXd basis = svd.matrixV().rightCols(n - 2);
    Eigen::MatrixXd restricted = basis.transpose() * q * basis;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(restricted);
    if (eig.info() != Eigen::Success)
        throw NumericError("area_form_signature: eigensolver failed");
    const auto& values = eig.eigenvalues();
    double residual = (restricted * eig.eigenvectors() - eig.eigenvectors() * values.asDiagonal()).norm();
    if (residual > tol.eigen_residual)
        throw NumericError("area_form_signature: eigen residual " + std::to_string(residual));

    AreaSignature sig;
    double largest = values.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < values.size(); ++i)
    {
        double lambda = values(i);
        sig.eigenvalues.push_back(lambda);
        if (std::abs(lambda) <= tol.eigenvalue * largest)
            sig.degenerate = true;
        else if (lambda > 0)
            ++sig.plus;
        else
            ++sig.minus;
    }
    if (sig.degenerate)
        sig.plus = sig.minus = 0;
    return sig;
}

const char* to_string(Feasibility::Status s)
{
    switch (s)
    {
        case Feasibility::Status::Witness: return "witness";
        case Feasibility::Status::Digon: return "digon";
        case Feasibility::Status::Infeasible: return "infeasible";
    }
    return "?";
}

Feasibility feasibility_witness(const Necklace& s, const ZeroSet& z, const Tolerances& tol)
{
    const int n = s.size();
    Feasibility out;
    if (z.size() == n)
    {
        out.offending_run.resize(n);
        for (int k = 1; k <= n; ++k)
            out.offending_run[k - 1] = k;
        out.run_weight = s.total();
        out.reason = "every edge shrunk: a single supervertex of weight S";
        return out;
    }
    MergeResult m = merge(s, z);
    Rational half = s.half();
    for (std::size_t t = 0; t < m.entries.size(); ++t)
    {
        if (m.entries[t] > half)
        {
            out.offending_run = m.groups[t];
            out.run_weight = m.entries[t];
            out.reason = "merged run of " + std::to_string(m.groups[t].size()) + " vertices weighs " + to_string(m.entries[t]) + " > S/2 = " + to_string(half);
            return out;
        }
    }
    for (std::size_t t = 0; t < m.entries.size(); ++t)
    {
        if (m.entries[t] == half)
        {
            std::vector<double> len(n, 0.0);
            len[m.groups[t].front() - 1] = 0.5;
            len[s.wrap(m.groups[t].back() + 1) - 1] = 0.5;
            out.status = Feasibility::Status::Digon;
            out.realization = realize(s, std::move(len), tol);
            return out;
        }
    }
    Necklace merged(m.entries);
    auto merged_len = tangential_lengths(merged);
    std::vector<double> len(n, 0.0);
    for (std::size_t t = 0; t < m.groups.size(); ++t)
        len[m.groups[t].front() - 1] = merged_len[t];
    out.status = Feasibility::Status::Witness;
    out.realization = realize(s, std::move(len), tol);
    return out;
}

}   // namespace anglepoly
