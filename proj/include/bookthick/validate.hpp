#pragma once

#include <deque>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"

namespace bookthick {

struct crossing_report {
    bool ok = true;
    /// Same-page interleaving pairs, sorted lexicographically (first edge < second edge).
    std::vector<std::pair<edge, edge>> violations;
};

/// Exhaustive pairwise crossing check of a complete page assignment.
inline crossing_report validate(const graph &g, const book_embedding &emb)
{
    if (!emb.order.covers(g))
        throw std::invalid_argument("order does not cover the graph");
    const auto &a = emb.assignment;
    if (a.pages.size() != g.m() || !a.total())
        throw std::invalid_argument("page assignment is not total over [1..k]");

    crossing_report report;
    const auto &edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (a.pages[i] == a.pages[j] && edges_interleave(emb.order, edges[i], edges[j]))
                report.violations.emplace_back(edges[i], edges[j]);
    report.ok = report.violations.empty();
    return report;
}

inline bool is_valid_embedding(const graph &g, const book_embedding &emb)
{
    if (!emb.order.covers(g) || emb.assignment.pages.size() != g.m() || !emb.assignment.total())
        return false;
    return validate(g, emb).ok;
}

/// One node per edge of g; adjacent iff the two edges interleave under the order.
struct conflict_graph {
    std::vector<std::vector<std::size_t>> adjacency;

    std::size_t size() const { return adjacency.size(); }
    std::size_t edge_count() const
    {
        std::size_t twice = 0;
        for (const auto &row : adjacency)
            twice += row.size();
        return twice / 2;
    }
    bool adjacent(std::size_t a, std::size_t b) const
    {
        const auto &row = adjacency.at(a);
        return std::find(row.begin(), row.end(), b) != row.end();
    }
};

inline conflict_graph build_conflict_graph(const graph &g, const linear_order &order)
{
    if (!order.covers(g))
        throw std::invalid_argument("order does not cover the graph");
    conflict_graph cg;
    cg.adjacency.resize(g.m());
    const auto &edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges_interleave(order, edges[i], edges[j])) {
                cg.adjacency[i].push_back(j);
                cg.adjacency[j].push_back(i);
            }
    return cg;
}

/// Fixed-order two-page test: 2-colour the conflict graph. Returns a one-page
/// assignment when nothing conflicts and k = 0 for edgeless graphs.
inline std::optional<page_assignment> two_page_fixed_order(const graph &g, const linear_order &order)
{
    if (g.m() == 0)
        return page_assignment{0, {}};
    auto cg = build_conflict_graph(g, order);
    if (cg.edge_count() == 0)
        return page_assignment{1, std::vector<int>(g.m(), 1)};

    std::vector<int> colour(g.m(), 0);
    for (std::size_t start = 0; start < g.m(); ++start) {
        if (colour[start])
            continue;
        colour[start] = 1;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            for (auto y : cg.adjacency[x]) {
                if (!colour[y]) {
                    colour[y] = 3 - colour[x];
                    queue.push_back(y);
                }
                else if (colour[y] == colour[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return page_assignment{2, std::move(colour)};
}

} // namespace bookthick
