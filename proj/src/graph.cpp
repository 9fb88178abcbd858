#include "extremal/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "extremal/errors.hpp"

namespace extremal {

void check_family_params(int m, int d)
{
    if (m < 1 || d < 2 * m + 2)
        throw parameter_error("parameters must satisfy d >= 2m+2 >= 4 (got m=" + std::to_string(m) +
                              ", d=" + std::to_string(d) + ")");
}

Graph::Graph(int vertex_count, std::span<const Edge> edges, std::optional<FamilyParams> params)
    : adj_(static_cast<std::size_t>(vertex_count)), params_(params)
{
    if (vertex_count < 0)
        throw std::invalid_argument("Graph: negative vertex count");
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("Graph: loop at vertex " + std::to_string(e.u));
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= vertex_count)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: repeated edge");
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_)
        std::sort(list.begin(), list.end());
}

bool Graph::adjacent(int u, int v) const
{
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

Eigen::MatrixXd Graph::laplacian_matrix() const
{
    Eigen::MatrixXd l = -adjacency_matrix<double>();
    for (int v = 0; v < vertex_count(); ++v)
        l(v, v) = degree(v);
    return l;
}

Graph Graph::without_vertices(std::span<const int> removed) const
{
    std::vector<int> relabel(adj_.size(), 0);
    for (int v : removed)
        relabel[static_cast<std::size_t>(v)] = -1;
    int next = 0;
    for (auto& r : relabel)
        r = (r < 0) ? -1 : next++;
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
        const int u = relabel[static_cast<std::size_t>(e.u)];
        const int v = relabel[static_cast<std::size_t>(e.v)];
        if (u >= 0 && v >= 0)
            kept.push_back({u, v});
    }
    return Graph(next, kept);
}

std::size_t Partition::trivial_count() const
{
    return static_cast<std::size_t>(
        std::count_if(parts.begin(), parts.end(), [](const auto& part) { return part.size() == 1; }));
}

Graph build_extremal_graph(int m, int d)
{
    check_family_params(m, d);
    const FamilyParams p{m, d};
    const int cliques = p.clique_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(p.vertex_count()) * static_cast<std::size_t>(d) / 2);

    for (int i = 0; i < cliques; ++i) {
        for (int a = 0; a <= d; ++a) {
            for (int b = a + 1; b <= d; ++b) {
                // deleted matching: slots (2a-2, 2a-1) for 1 <= a <= m
                const bool matched = (a % 2 == 0) && (b == a + 1) && (a / 2 < m);
                if (!matched)
                    edges.push_back({linear_id(p, {i, a}), linear_id(p, {i, b})});
            }
        }
    }
    for (int i = 0; i < cliques; ++i) {
        for (int j = 0; j < m; ++j) {
            const int target = (i + j + 1) % cliques;
            edges.push_back({linear_id(p, {i, 2 * j + 1}), linear_id(p, {target, 2 * j})});
        }
    }
    return Graph(p.vertex_count(), edges, p);
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, edges);
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u)
        edges.push_back({u, u + 1});
    return Graph(n, edges);
}

Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        edges.push_back({u, (u + 1) % n});
    return Graph(n, edges);
}

Partition clique_partition(const Graph& g)
{
    if (!g.params())
        throw std::invalid_argument("clique_partition: graph was not built by build_extremal_graph");
    const FamilyParams& p = *g.params();
    Partition out;
    out.parts.resize(static_cast<std::size_t>(p.clique_count()));
    for (int i = 0; i < p.clique_count(); ++i)
        for (int j = 0; j < p.clique_size(); ++j)
            out.parts[static_cast<std::size_t>(i)].push_back(linear_id(p, {i, j}));
    return out;
}

Partition single_part_partition(const Graph& g)
{
    Partition out;
    out.parts.emplace_back();
    for (int v = 0; v < g.vertex_count(); ++v)
        out.parts.front().push_back(v);
    return out;
}

Partition singleton_partition(const Graph& g)
{
    Partition out;
    for (int v = 0; v < g.vertex_count(); ++v)
        out.parts.push_back({v});
    return out;
}

Partition components(const Graph& g)
{
    Partition out;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<int> part;
        std::queue<int> queue;
        queue.push(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            part.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    queue.push(w);
                }
            }
        }
        std::sort(part.begin(), part.end());
        out.parts.push_back(std::move(part));
    }
    return out;
}

std::vector<int> part_labels(const Graph& g, const Partition& p)
{
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i].empty())
            throw invalid_partition("part " + std::to_string(i) + " is empty");
        for (int v : p.parts[i]) {
            if (v < 0 || v >= g.vertex_count())
                throw invalid_partition("vertex " + std::to_string(v) + " is out of range");
            if (label[static_cast<std::size_t>(v)] >= 0)
                throw invalid_partition("vertex " + std::to_string(v) + " occurs in more than one part");
            label[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    for (std::size_t v = 0; v < label.size(); ++v)
        if (label[v] < 0)
            throw invalid_partition("vertex " + std::to_string(v) + " is not covered");
    return label;
}

void validate_partition(const Graph& g, const Partition& p) { (void)part_labels(g, p); }

std::size_t crossing_edges(const Graph& g, const Partition& p)
{
    const std::vector<int> label = part_labels(g, p);
    return static_cast<std::size_t>(std::count_if(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return label[static_cast<std::size_t>(e.u)] != label[static_cast<std::size_t>(e.v)];
    }));
}

std::size_t edges_between(const Graph& g, std::span<const int> a, std::span<const int> b)
{
    std::vector<bool> in_b(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : b)
        in_b[static_cast<std::size_t>(v)] = true;
    std::size_t count = 0;
    for (int u : a)
        for (int w : g.neighbors(u))
            count += in_b[static_cast<std::size_t>(w)] ? 1 : 0;
    return count;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<int> degrees(const Graph& g)
{
    std::vector<int> out(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        out[static_cast<std::size_t>(v)] = g.degree(v);
    return out;
}

ExportFormat parse_export_format(std::string_view name)
{
    if (name == "edgelist")
        return ExportFormat::edgelist;
    if (name == "dot")
        return ExportFormat::dot;
    throw usage_error("unknown export format '" + std::string(name) + "' (expected edgelist or dot)");
}

std::string export_graph(const Graph& g, ExportFormat format)
{
    switch (format) {
    case ExportFormat::edgelist:
        return export_edgelist(g);
    case ExportFormat::dot:
        return export_dot(g);
    }
    throw usage_error("unknown export format");
}

std::string export_edgelist(const Graph& g)
{
    std::ostringstream out;
    out << "#";
    if (g.params())
        out << " m=" << g.params()->m << " d=" << g.params()->d;
    out << " n=" << g.vertex_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string export_dot(const Graph& g)
{
    std::ostringstream out;
    if (g.params()) {
        const FamilyParams& p = *g.params();
        out << "graph G_" << p.m << '_' << p.d << " {\n";
        for (int v = 0; v < g.vertex_count(); ++v) {
            const VertexId id = vertex_of(p, v);
            out << "  " << v << " [clique=" << id.clique << ", slot=" << id.slot << ", label=\"(" << id.clique
                << ',' << id.slot << ")\"];\n";
        }
        for (const Edge& e : g.edges()) {
            out << "  " << e.u << " -- " << e.v;
            if (vertex_of(p, e.u).clique != vertex_of(p, e.v).clique)
                out << " [cross=true]";
            out << ";\n";
        }
        // deleted matching, drawn dashed; not edges of the graph
        for (int i = 0; i < p.clique_count(); ++i)
            for (int a = 1; a <= p.m; ++a)
                out << "  " << linear_id(p, {i, 2 * a - 2}) << " -- " << linear_id(p, {i, 2 * a - 1})
                    << " [style=dashed, deleted=true];\n";
    } else {
        out << "graph G {\n";
        for (int v = 0; v < g.vertex_count(); ++v)
            out << "  " << v << ";\n";
        for (const Edge& e : g.edges())
            out << "  " << e.u << " -- " << e.v << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace extremal
