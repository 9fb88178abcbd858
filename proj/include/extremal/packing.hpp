#ifndef EXTREMAL_PACKING_HPP
#define EXTREMAL_PACKING_HPP

#include <optional>
#include <string>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

/// Nash-Williams/Tutte count for one partition: sigma(G) >= k requires
/// crossing >= k(t-1). A positive deficit certifies sigma(G) < k.
struct PartitionCertificate
{
    Partition partition;
    long crossing = 0;
    long k = 0;
    long required = 0; ///< k(t-1)
    long deficit = 0;  ///< required - crossing

    bool passes() const { return deficit <= 0; }
    bool certifies_fewer_than_k() const { return deficit > 0; }
};

/// k pairwise edge-disjoint spanning trees, each as an edge list.
struct ForestPacking
{
    std::vector<std::vector<Edge>> trees;
};

/// Either a packing or a blocking partition (never both).
struct PackingResult
{
    std::optional<ForestPacking> packing;
    std::optional<PartitionCertificate> witness;

    bool success() const { return packing.has_value(); }
};

PartitionCertificate verify_nash_williams(const Graph& g, const Partition& p, long k);

/// Clique partition of the extremal graph with k = m+1: deficit m.
PartitionCertificate clique_certificate(int m, int d);

/// k edge-disjoint spanning trees by matroid union (shortest augmenting
/// paths over the exchange graph of k graphic matroids, edges inserted in
/// increasing order). On failure the witness partition has
/// crossing < k(|pi|-1) and has been checked before it is returned.
PackingResult pack_spanning_trees(const Graph& g, int k);

/// Largest k <= k_max for which pack_spanning_trees succeeds.
int sigma(const Graph& g, int k_max);

/// Empty string if `packing` is a valid set of edge-disjoint spanning trees
/// of g, otherwise a description of the first problem found.
std::string check_forest_packing(const Graph& g, const ForestPacking& packing);

} // namespace extremal

#endif
