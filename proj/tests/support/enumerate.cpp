#include "support/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <set>

namespace cvd::ref {

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

void for_each_labeled(std::size_t n, const std::function<void(const Graph&)>& visit) {
    const std::size_t pairs = n * (n - (n > 0)) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) visit(graph_from_mask(n, mask));
}

namespace {

using Mask = std::uint32_t;
using Cells = std::vector<Mask>;

// Split cells by the number of neighbours in each cell until the partition is equitable.
Cells refine(const std::vector<Mask>& adj, Cells cells) {
    for (std::size_t target = 0; target < cells.size();) {
        const Mask t = cells[target];
        Cells next;
        bool changed = false;
        for (Mask cell : cells) {
            std::array<Mask, 33> by_count{};
            for (Mask rest = cell; rest; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                by_count[std::popcount(adj[v] & t)] |= Mask{1} << v;
            }
            std::size_t parts = 0;
            for (Mask part : by_count)
                if (part) {
                    next.push_back(part);
                    ++parts;
                }
            changed = changed || parts > 1;
        }
        cells = std::move(next);
        target = changed ? 0 : target + 1;
    }
    return cells;
}

std::uint64_t code_of(const std::vector<Mask>& adj, const Cells& order) {
    std::uint64_t code = 0;
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int a = std::countr_zero(order[i]);
        for (std::size_t j = i + 1; j < n; ++j) code = code << 1 | (adj[a] >> std::countr_zero(order[j]) & 1);
    }
    return code;
}

void search(const std::vector<Mask>& adj, const Cells& cells, std::uint64_t& best, bool& have) {
    Cells eq = refine(adj, cells);
    auto open = std::find_if(eq.begin(), eq.end(), [](Mask c) { return std::popcount(c) > 1; });
    if (open == eq.end()) {
        std::uint64_t code = code_of(adj, eq);
        if (!have || code > best) best = code;
        have = true;
        return;
    }
    const std::size_t at = static_cast<std::size_t>(open - eq.begin());
    Mask tried = 0;
    for (Mask rest = eq[at]; rest; rest &= rest - 1) {
        const Mask v = rest & (~rest + 1);
        const int vi = std::countr_zero(v);
        // Swapping two (true or false) twins is an automorphism: one branch covers both.
        bool twin_of_tried = false;
        for (Mask t = tried; t && !twin_of_tried; t &= t - 1) {
            const int ti = std::countr_zero(t);
            twin_of_tried = (adj[ti] & ~v) == (adj[vi] & ~(Mask{1} << ti));
        }
        if (twin_of_tried) continue;
        tried |= v;
        Cells branch(eq.begin(), eq.begin() + at);
        branch.push_back(v);
        branch.push_back(eq[at] & ~v);
        branch.insert(branch.end(), eq.begin() + at + 1, eq.end());
        search(adj, branch, best, have);
    }
}

} // namespace

std::uint64_t canonical_code(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Mask> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    std::uint64_t best = 0;
    bool have = false;
    search(adj, Cells{n ? static_cast<Mask>((std::uint64_t{1} << n) - 1) : Mask{0}}, best, have);
    return best;
}

std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
    static std::mutex lock;
    static std::map<std::size_t, std::vector<Graph>> memo;
    std::lock_guard guard(lock);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::vector<Graph> level{Graph::from_edges(0, {})};
    for (std::size_t k = 1; k <= n; ++k) {
        std::set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            auto edges = g.edges();
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
                auto grown = edges;
                for (Vertex u = 0; u + 1 < k; ++u)
                    if (nb >> u & 1) grown.emplace_back(u, k - 1);
                Graph h = Graph::from_edges(k, grown);
                if (seen.insert(canonical_code(h)).second) next.push_back(std::move(h));
            }
        }
        level = std::move(next);
        memo.emplace(k, level);
    }
    return level;
}

bool connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

} // namespace cvd::ref
