#ifndef EXTREMAL_GRAPH_HPP
#define EXTREMAL_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace extremal {

/// Parameters of the extremal family: 2m+1 modified cliques K_{d+1}.
struct FamilyParams
{
    int m = 0;
    int d = 0;

    int clique_count() const { return 2 * m + 1; }
    int clique_size() const { return d + 1; }
    int vertex_count() const { return clique_count() * clique_size(); }

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Vertex (clique, slot) of the extremal family; clique in [0, 2m], slot in [0, d].
struct VertexId
{
    int clique = 0;
    int slot = 0;

    friend bool operator==(const VertexId&, const VertexId&) = default;
};

/// Undirected edge with u < v.
struct Edge
{
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Throws parameter_error unless m >= 1 and d >= 2m+2.
void check_family_params(int m, int d);

/// Linearized vertex index clique*(d+1) + slot.
inline int linear_id(const FamilyParams& p, VertexId v) { return v.clique * p.clique_size() + v.slot; }
inline VertexId vertex_of(const FamilyParams& p, int id) { return {id / p.clique_size(), id % p.clique_size()}; }

/// Simple undirected graph with sorted adjacency lists. Immutable once built.
class Graph
{
public:
    Graph() = default;
    /// Builds from an edge list; rejects loops, duplicates and out-of-range ids.
    Graph(int vertex_count, std::span<const Edge> edges, std::optional<FamilyParams> params = std::nullopt);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(int u, int v) const;
    /// All edges (u < v), sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::optional<FamilyParams>& params() const { return params_; }

    template <typename Scalar = double>
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix() const
    {
        const int n = vertex_count();
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
            Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
        for (const Edge& e : edges_) {
            a(e.u, e.v) = Scalar(1);
            a(e.v, e.u) = Scalar(1);
        }
        return a;
    }

    /// Degree matrix minus adjacency.
    Eigen::MatrixXd laplacian_matrix() const;

    /// Graph with the given vertices removed, remaining vertices renumbered
    /// in increasing order.
    Graph without_vertices(std::span<const int> removed) const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::optional<FamilyParams> params_;
};

/// Disjoint nonempty vertex sets covering V(G).
struct Partition
{
    std::vector<std::vector<int>> parts;

    std::size_t size() const { return parts.size(); }
    /// Number of singleton parts.
    std::size_t trivial_count() const;
};

/// The extremal graph: 2m+1 copies of K_{d+1}, copy i missing the matching
/// (i,2a-2)~(i,2a-1) for 1 <= a <= m, joined by the circulant edges
/// (i,2j+1)~(i+j+1 mod 2m+1, 2j) for 0 <= j <= m-1.
Graph build_extremal_graph(int m, int d);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// {H_0, ..., H_2m} for a graph built by build_extremal_graph.
Partition clique_partition(const Graph& g);
Partition single_part_partition(const Graph& g);
Partition singleton_partition(const Graph& g);
/// Connected components, each sorted, ordered by smallest vertex.
Partition components(const Graph& g);

/// Throws invalid_partition unless p partitions {0, ..., n-1} into nonempty parts.
void validate_partition(const Graph& g, const Partition& p);
/// part index of every vertex; validates first.
std::vector<int> part_labels(const Graph& g, const Partition& p);

/// Number of edges whose endpoints lie in different parts.
std::size_t crossing_edges(const Graph& g, const Partition& p);
/// Number of edges between two vertex sets (assumed disjoint).
std::size_t edges_between(const Graph& g, std::span<const int> a, std::span<const int> b);

bool is_connected(const Graph& g);
std::vector<int> degrees(const Graph& g);

enum class ExportFormat { edgelist, dot };

ExportFormat parse_export_format(std::string_view name);
std::string export_graph(const Graph& g, ExportFormat format);
std::string export_edgelist(const Graph& g);
std::string export_dot(const Graph& g);

} // namespace extremal

#endif
