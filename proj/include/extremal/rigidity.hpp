#ifndef EXTREMAL_RIGIDITY_HPP
#define EXTREMAL_RIGIDITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "extremal/graph.hpp"
#include "extremal/spectral.hpp"

namespace extremal {

/// Partition count for r spanning rigid subgraphs plus ell spanning trees,
/// all edge-disjoint: they require crossing >= (3r+ell)(|pi|-1) - r t.
struct RigidityCertificate
{
    int r = 0;
    int ell = 0;
    Partition partition;
    long trivial_count = 0; ///< t, singleton parts
    long crossing = 0;
    long required = 0;
    long deficit = 0; ///< required - crossing; positive rules the packing out

    bool certifies_infeasible() const { return deficit > 0; }
};

/// Evaluates the count for an arbitrary partition.
RigidityCertificate rigidity_count(const Graph& g, const Partition& p, int r, int ell);

/// Throws parameter_error unless r >= 1 and d >= 6r.
void check_rigidity_params(int r, int d);

/// Clique partition of the extremal graph with m = 3r-1, ell = 0:
/// crossing (3r-1)(6r-1), required 3r(6r-2), deficit 3r-1.
RigidityCertificate rigidity_certificate(int r, int d);

struct Mu2Report
{
    int r = 0;
    int d = 0;
    double mu2 = 0.0;     ///< d - lambda2
    double lambda2 = 0.0;
    double laplacian_mu2 = 0.0; ///< second smallest Laplacian eigenvalue, computed directly
    double lower = 0.0;   ///< (6r-1)/(d+3), strict
    double upper = 0.0;   ///< (6r-1)/(d+1), inclusive
    double tol = 0.0;
    bool in_window = false;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void require_ok() const;
};

inline constexpr double regularity_identity_tol = 1e-10;

/// mu2 of the extremal graph with m = 3r-1 against (6r-1)/(d+3) < mu2 <= (6r-1)/(d+1).
Mu2Report mu2_window(int r, int d, double tol = theorem_slack);

struct RigidityHypothesesReport
{
    int r = 0;
    int d = 0;
    double mu2 = 0.0;
    int min_degree = 0;
    double condition1_threshold = 0.0; ///< (6r-1)/(delta+1)
    bool condition1_holds = false;     ///< mu2 > threshold
    double lower_threshold = 0.0;      ///< (6r-1)/(delta+3)
    bool holds_at_lower_threshold = false;
    /// Vertex-deleted conditions, filled only when requested.
    std::optional<bool> condition2_holds;
    std::optional<bool> condition3_holds;
    std::optional<double> condition2_min_margin;
    std::optional<double> condition3_min_margin;

    /// Condition (1) fails while the lower threshold would pass.
    bool tightness_demonstrated() const { return !condition1_holds && holds_at_lower_threshold; }
};

/// Evaluates condition (1) of the sufficient spectral rigidity criterion on
/// the extremal graph with m = 3r-1 and, optionally, conditions (2) and (3)
/// on all one- and two-vertex-deleted subgraphs.
RigidityHypothesesReport check_spectral_rigidity_hypotheses(int r, int d, double tol = theorem_slack,
                                                            bool vertex_deleted = false);

} // namespace extremal

#endif
