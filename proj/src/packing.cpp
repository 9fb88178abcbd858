#include "extremal/packing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "extremal/errors.hpp"

namespace extremal {

PartitionCertificate verify_nash_williams(const Graph& g, const Partition& p, long k)
{
    PartitionCertificate c;
    c.crossing = static_cast<long>(crossing_edges(g, p));
    c.partition = p;
    c.k = k;
    c.required = k * (static_cast<long>(p.size()) - 1);
    c.deficit = c.required - c.crossing;
    return c;
}

PartitionCertificate clique_certificate(int m, int d)
{
    const Graph g = build_extremal_graph(m, d);
    return verify_nash_williams(g, clique_partition(g), m + 1);
}

namespace {

constexpr int no_forest = -1;
constexpr int no_edge = -1;

class ForestUnion
{
public:
    ForestUnion(const Graph& g, int k)
        : g_(g), k_(k), owner_(g.edge_count(), no_forest),
          incident_(static_cast<std::size_t>(k), std::vector<std::vector<int>>(static_cast<std::size_t>(g.vertex_count()))),
          sizes_(static_cast<std::size_t>(k), 0)
    {
    }

    bool full() const
    {
        return std::all_of(sizes_.begin(), sizes_.end(), [&](int s) { return s == g_.vertex_count() - 1; });
    }

    // Inserts edge e, rearranging forests along a shortest exchange path.
    bool insert(int e)
    {
        label_.assign(g_.edge_count(), Label{});
        label_[static_cast<std::size_t>(e)] = Label{true, no_edge, no_forest};
        std::deque<int> queue{e};
        return search(queue);
    }

    // Labels everything reachable from all uncovered edges. Must not find an
    // augmenting path; returns the labeled edge set.
    std::vector<int> reachable_from_uncovered()
    {
        label_.assign(g_.edge_count(), Label{});
        std::deque<int> queue;
        for (int e = 0; e < static_cast<int>(g_.edge_count()); ++e) {
            if (owner_[static_cast<std::size_t>(e)] == no_forest) {
                label_[static_cast<std::size_t>(e)] = Label{true, no_edge, no_forest};
                queue.push_back(e);
            }
        }
        if (search(queue))
            throw consistency_error("pack_spanning_trees: forest union was not maximal");
        std::vector<int> out;
        for (int e = 0; e < static_cast<int>(g_.edge_count()); ++e)
            if (label_[static_cast<std::size_t>(e)].seen)
                out.push_back(e);
        return out;
    }

    ForestPacking packing() const
    {
        ForestPacking p;
        p.trees.resize(static_cast<std::size_t>(k_));
        for (std::size_t e = 0; e < owner_.size(); ++e)
            if (owner_[e] != no_forest)
                p.trees[static_cast<std::size_t>(owner_[e])].push_back(g_.edges()[e]);
        return p;
    }

private:
    struct Label
    {
        bool seen = false;
        int parent = no_edge; // edge that takes this edge's place
        int forest = no_forest;
    };

    bool search(std::deque<int>& queue)
    {
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            const Edge ex = g_.edges()[static_cast<std::size_t>(x)];
            for (int i = 0; i < k_; ++i) {
                if (owner_[static_cast<std::size_t>(x)] == i)
                    continue;
                std::vector<int> cycle = forest_path(i, ex.u, ex.v);
                if (cycle.empty()) {
                    augment(x, i);
                    return true;
                }
                std::sort(cycle.begin(), cycle.end());
                for (int y : cycle) {
                    auto& l = label_[static_cast<std::size_t>(y)];
                    if (!l.seen) {
                        l = Label{true, x, i};
                        queue.push_back(y);
                    }
                }
            }
        }
        return false;
    }

    // Edge ids on the u-v path in forest i; empty if u and v are disconnected.
    std::vector<int> forest_path(int i, int u, int v) const
    {
        const auto& inc = incident_[static_cast<std::size_t>(i)];
        std::vector<int> via(static_cast<std::size_t>(g_.vertex_count()), no_edge);
        std::vector<bool> seen(static_cast<std::size_t>(g_.vertex_count()), false);
        std::deque<int> queue{u};
        seen[static_cast<std::size_t>(u)] = true;
        while (!queue.empty() && !seen[static_cast<std::size_t>(v)]) {
            const int a = queue.front();
            queue.pop_front();
            for (int e : inc[static_cast<std::size_t>(a)]) {
                const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
                const int b = ed.u == a ? ed.v : ed.u;
                if (!seen[static_cast<std::size_t>(b)]) {
                    seen[static_cast<std::size_t>(b)] = true;
                    via[static_cast<std::size_t>(b)] = e;
                    queue.push_back(b);
                }
            }
        }
        std::vector<int> path;
        if (!seen[static_cast<std::size_t>(v)])
            return path;
        for (int b = v; b != u;) {
            const int e = via[static_cast<std::size_t>(b)];
            path.push_back(e);
            const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
            b = ed.u == b ? ed.v : ed.u;
        }
        return path;
    }

    void move(int e, int to)
    {
        const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
        const int from = owner_[static_cast<std::size_t>(e)];
        if (from != no_forest) {
            for (int end : {ed.u, ed.v}) {
                auto& list = incident_[static_cast<std::size_t>(from)][static_cast<std::size_t>(end)];
                list.erase(std::find(list.begin(), list.end(), e));
            }
            --sizes_[static_cast<std::size_t>(from)];
        }
        for (int end : {ed.u, ed.v})
            incident_[static_cast<std::size_t>(to)][static_cast<std::size_t>(end)].push_back(e);
        ++sizes_[static_cast<std::size_t>(to)];
        owner_[static_cast<std::size_t>(e)] = to;
    }

    // x enters forest i; walk back the labels, each edge taking the place of
    // the one it displaced.
    void augment(int x, int i)
    {
        int cur = x, dest = i;
        while (true) {
            move(cur, dest);
            const Label& l = label_[static_cast<std::size_t>(cur)];
            if (l.parent == no_edge)
                break;
            dest = l.forest;
            cur = l.parent;
        }
    }

    const Graph& g_;
    int k_;
    std::vector<int> owner_;
    std::vector<std::vector<std::vector<int>>> incident_; // [forest][vertex] -> edge ids
    std::vector<int> sizes_;
    std::vector<Label> label_;
};

Partition partition_from_edges(const Graph& g, const std::vector<int>& edge_ids)
{
    std::vector<Edge> kept;
    kept.reserve(edge_ids.size());
    for (int e : edge_ids)
        kept.push_back(g.edges()[static_cast<std::size_t>(e)]);
    return components(Graph(g.vertex_count(), kept));
}

} // namespace

PackingResult pack_spanning_trees(const Graph& g, int k)
{
    if (k < 1)
        throw parameter_error("pack_spanning_trees: k must be >= 1");
    PackingResult result;
    if (!is_connected(g)) {
        result.witness = verify_nash_williams(g, components(g), k);
        return result;
    }

    ForestUnion forests(g, k);
    for (int e = 0; e < static_cast<int>(g.edge_count()) && !forests.full(); ++e)
        forests.insert(e);

    if (forests.full()) {
        result.packing = forests.packing();
        const std::string problem = check_forest_packing(g, *result.packing);
        if (!problem.empty())
            throw consistency_error("pack_spanning_trees: " + problem);
        return result;
    }

    // Every labeled edge is spanned inside each forest by labeled edges, so
    // the components of the labeled edge set carry exactly k spanning trees
    // each and every uncovered edge lies inside a component.
    PartitionCertificate witness = verify_nash_williams(g, partition_from_edges(g, forests.reachable_from_uncovered()), k);
    if (!witness.certifies_fewer_than_k())
        throw consistency_error("pack_spanning_trees: extracted partition is not deficient");
    result.witness = std::move(witness);
    return result;
}

int sigma(const Graph& g, int k_max)
{
    int best = 0;
    for (int k = 1; k <= k_max; ++k) {
        if (!pack_spanning_trees(g, k).success())
            break;
        best = k;
    }
    return best;
}

std::string check_forest_packing(const Graph& g, const ForestPacking& packing)
{
    const int n = g.vertex_count();
    std::set<Edge> used;
    for (std::size_t t = 0; t < packing.trees.size(); ++t) {
        const auto& tree = packing.trees[t];
        const std::string which = "tree " + std::to_string(t);
        if (static_cast<int>(tree.size()) != n - 1)
            return which + " has " + std::to_string(tree.size()) + " edges, expected " + std::to_string(n - 1);
        // union-find: acyclic with n-1 edges means spanning
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) {
                parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
                v = parent[static_cast<std::size_t>(v)];
            }
            return v;
        };
        for (Edge e : tree) {
            if (e.u > e.v)
                std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n || !g.adjacent(e.u, e.v))
                return which + " uses a non-edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
            if (!used.insert(e).second)
                return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is used twice";
            const int a = find(e.u), b = find(e.v);
            if (a == b)
                return which + " contains a cycle through " + std::to_string(e.u) + "-" + std::to_string(e.v);
            parent[static_cast<std::size_t>(a)] = b;
        }
    }
    return {};
}

} // namespace extremal
