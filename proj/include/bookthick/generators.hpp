#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "graph.hpp"

// Small graph families used by the CLI `gen` command and the test suites.

namespace bookthick::gen {

inline graph complete(int n)
{
    std::vector<edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return graph(n, std::move(edges));
}

/// Sides [0, a) and [a, a + b).
inline graph complete_bipartite(int a, int b)
{
    std::vector<edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            edges.emplace_back(u, a + v);
    return graph(a + b, std::move(edges));
}

inline graph path(int n)
{
    std::vector<edge> edges;
    for (int u = 0; u + 1 < n; ++u)
        edges.emplace_back(u, u + 1);
    return graph(n, std::move(edges));
}

inline graph cycle(int n)
{
    std::vector<edge> edges;
    for (int u = 0; u + 1 < n; ++u)
        edges.emplace_back(u, u + 1);
    if (n >= 3)
        edges.emplace_back(n - 1, 0);
    return graph(n, std::move(edges));
}

/// Centre 0 with `leaves` leaves.
inline graph star(int leaves)
{
    std::vector<edge> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return graph(leaves + 1, std::move(edges));
}

/// Edge subset `mask` of K_n, bit i for the i-th pair in lexicographic order.
inline graph from_mask(int n, std::uint64_t mask)
{
    std::vector<edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u)
                edges.emplace_back(u, v);
    return graph(n, std::move(edges));
}

inline double unit_interval(std::mt19937_64 &rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// G(n, p).
inline graph random_graph(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_interval(rng) < p)
                edges.emplace_back(u, v);
    return graph(n, std::move(edges));
}

/// Random graph whose vertices [0, tau) cover every edge: each pair inside the
/// cover and each cover/non-cover pair is an edge with probability p.
inline graph random_cover_graph(int n, int tau, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<edge> edges;
    for (int u = 0; u < tau; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_interval(rng) < p)
                edges.emplace_back(u, v);
    return graph(n, std::move(edges));
}

inline linear_order random_order(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
    return linear_order(std::move(perm));
}

/// Triangle a=0, b=1, c=2 plus n-3 pendant leaves, with a spine order
/// a, leaves, b, leaves, c, leaves. Leaves between a and b hang off a or b,
/// leaves between b and c off b or c, the tail off c. Two pages suffice.
struct ordered_graph {
    graph g;
    linear_order order;
};

inline ordered_graph triangle_caterpillar(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<edge> edges{{0, 1}, {1, 2}, {0, 2}};
    const int leaves = n - 3;
    const int block = leaves / 3;
    std::vector<vertex> perm{0};
    int next = 3;
    auto add_block = [&](int count, vertex left, vertex right) {
        for (int i = 0; i < count; ++i, ++next) {
            edges.emplace_back(next, (rng() & 1u) ? left : right);
            perm.push_back(next);
        }
    };
    add_block(block, 0, 1);
    perm.push_back(1);
    add_block(block, 1, 2);
    perm.push_back(2);
    add_block(leaves - 2 * block, 2, 2);
    return {graph(n, std::move(edges)), linear_order(std::move(perm))};
}

} // namespace bookthick::gen
