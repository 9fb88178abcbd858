#include "extremal/rigidity.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

namespace extremal {

RigidityCertificate rigidity_count(const Graph& g, const Partition& p, int r, int ell)
{
    if (r < 0 || ell < 0)
        throw parameter_error("rigidity_count: r and ell must be nonnegative");
    RigidityCertificate c;
    c.r = r;
    c.ell = ell;
    c.crossing = static_cast<long>(crossing_edges(g, p));
    c.partition = p;
    c.trivial_count = static_cast<long>(p.trivial_count());
    c.required = (3L * r + ell) * (static_cast<long>(p.size()) - 1) - static_cast<long>(r) * c.trivial_count;
    c.deficit = c.required - c.crossing;
    return c;
}

void check_rigidity_params(int r, int d)
{
    if (r < 1 || d < 6 * r)
        throw parameter_error("rigidity checks require r >= 1 and d >= 6r (got r=" + std::to_string(r) +
                              ", d=" + std::to_string(d) + ")");
}

RigidityCertificate rigidity_certificate(int r, int d)
{
    check_rigidity_params(r, d);
    const Graph g = build_extremal_graph(3 * r - 1, d);
    return rigidity_count(g, clique_partition(g), r, 0);
}

void Mu2Report::require_ok() const
{
    if (!ok())
        throw theorem_check_failure(failures.front());
}

Mu2Report mu2_window(int r, int d, double tol)
{
    check_rigidity_params(r, d);
    const Graph g = build_extremal_graph(3 * r - 1, d);
    Mu2Report rep;
    rep.r = r;
    rep.d = d;
    rep.tol = tol;
    rep.lambda2 = eigenvalues_dense(g).values.at(1);
    rep.mu2 = d - rep.lambda2;
    rep.laplacian_mu2 = algebraic_connectivity(g);
    rep.lower = (6.0 * r - 1.0) / (d + 3.0);
    rep.upper = (6.0 * r - 1.0) / (d + 1.0);
    rep.in_window = rep.mu2 > rep.lower - tol && rep.mu2 <= rep.upper + tol;

    std::ostringstream where;
    where.precision(17);
    where << "r=" << r << " d=" << d << ": ";
    if (!rep.in_window) {
        std::ostringstream msg;
        msg.precision(17);
        msg << where.str() << "mu2 " << rep.mu2 << " outside (" << rep.lower << ", " << rep.upper << "]";
        rep.failures.push_back(msg.str());
    }
    if (!(std::abs(rep.mu2 - rep.laplacian_mu2) <= regularity_identity_tol)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << where.str() << "d - lambda2 = " << rep.mu2 << " but Laplacian mu2 = " << rep.laplacian_mu2;
        rep.failures.push_back(msg.str());
    }
    return rep;
}

namespace {

int min_degree(const Graph& g)
{
    const std::vector<int> deg = degrees(g);
    return deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
}

// mu2(H) - numerator/(delta(H)+1); positive when the condition holds for H.
double condition_margin(const Graph& h, double numerator)
{
    return algebraic_connectivity(h) - numerator / (min_degree(h) + 1.0);
}

} // namespace

RigidityHypothesesReport check_spectral_rigidity_hypotheses(int r, int d, double tol, bool vertex_deleted)
{
    check_rigidity_params(r, d);
    const Graph g = build_extremal_graph(3 * r - 1, d);
    RigidityHypothesesReport rep;
    rep.r = r;
    rep.d = d;
    rep.mu2 = d - eigenvalues_dense(g).values.at(1);
    rep.min_degree = min_degree(g);
    rep.condition1_threshold = (6.0 * r - 1.0) / (rep.min_degree + 1.0);
    rep.condition1_holds = rep.mu2 > rep.condition1_threshold + tol;
    rep.lower_threshold = (6.0 * r - 1.0) / (rep.min_degree + 3.0);
    rep.holds_at_lower_threshold = rep.mu2 > rep.lower_threshold - tol;

    if (vertex_deleted) {
        double margin2 = std::numeric_limits<double>::infinity();
        for (int u = 0; u < g.vertex_count(); ++u) {
            const std::array<int, 1> removed{u};
            margin2 = std::min(margin2, condition_margin(g.without_vertices(removed), 4.0 * r - 1.0));
        }
        double margin3 = std::numeric_limits<double>::infinity();
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int w = v + 1; w < g.vertex_count(); ++w) {
                const std::array<int, 2> removed{v, w};
                margin3 = std::min(margin3, condition_margin(g.without_vertices(removed), 2.0 * r - 1.0));
            }
        }
        rep.condition2_min_margin = margin2;
        rep.condition3_min_margin = margin3;
        rep.condition2_holds = margin2 > 0.0;
        rep.condition3_holds = margin3 > 0.0;
    }
    return rep;
}

} // namespace extremal
