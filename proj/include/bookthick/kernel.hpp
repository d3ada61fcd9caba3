#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "vc_dp.hpp"

// Book thickness (free order) parameterised by the vertex cover number:
// shrink every neighbourhood class outside the cover to 2 k^tau + 1 vertices,
// solve the kernel exactly, then re-insert the removed vertices next to a
// page-equivalent twin.

namespace bookthick::kernel {

struct kernel_result {
    graph kernel;
    /// keep[i] is the input vertex represented by kernel vertex i (increasing).
    std::vector<vertex> keep;
    /// Per neighbourhood class, the input vertices that were dropped.
    type_classes removed;
    std::vector<vertex> cover;
    long long threshold = 0;
};

/// 2 k^tau + 1, saturating.
inline long long class_threshold(int k, int tau)
{
    constexpr long long cap = std::numeric_limits<int>::max();
    long long power = 1;
    for (int i = 0; i < tau && power <= cap; ++i)
        power *= k;
    return std::min(cap, 2 * power + 1);
}

inline kernel_result build_kernel(const graph &g, std::span<const vertex> cover, int k)
{
    if (k < 1)
        throw std::invalid_argument("page count must be positive");
    kernel_result out;
    out.cover.assign(cover.begin(), cover.end());
    std::sort(out.cover.begin(), out.cover.end());
    out.threshold = class_threshold(k, static_cast<int>(cover.size()));

    std::vector<char> keep(static_cast<std::size_t>(g.n()), 1);
    for (const auto &[type, members] : vertex_types(g, cover)) {
        if (static_cast<long long>(members.size()) <= out.threshold)
            continue;
        auto &dropped = out.removed[type];
        for (std::size_t i = static_cast<std::size_t>(out.threshold); i < members.size(); ++i) {
            dropped.push_back(members[i]);
            keep[static_cast<std::size_t>(members[i])] = 0;
        }
    }
    for (vertex v = 0; v < g.n(); ++v)
        if (keep[static_cast<std::size_t>(v)])
            out.keep.push_back(v);
    out.kernel = g.induced(out.keep);
    return out;
}

/// u1 and u2 (both with neighbourhood `type`) use the same page towards every w in `type`.
inline bool page_equivalent(const graph &g, const book_embedding &emb, vertex u1, vertex u2, std::span<const vertex> type)
{
    for (auto u : {u1, u2}) {
        auto nb = g.neighbors(u);
        if (!std::equal(nb.begin(), nb.end(), type.begin(), type.end()))
            throw std::invalid_argument("vertex " + std::to_string(u) + " is not of the stated type");
    }
    for (auto w : type)
        if (emb.assignment.pages.at(*g.edge_index(u1, w)) != emb.assignment.pages.at(*g.edge_index(u2, w)))
            return false;
    return true;
}

inline std::optional<book_embedding> solve_kernel(const graph &kernel, int k, int jobs = 1)
{
    return bt_oracle(kernel, k, jobs);
}

/// Extends an embedding of kr.kernel to the input graph with the same pages.
inline book_embedding lift_embedding(const graph &g, const kernel_result &kr, const book_embedding &kemb)
{
    if (!kemb.order.covers(kr.kernel) || kemb.assignment.pages.size() != kr.kernel.m())
        throw std::invalid_argument("embedding does not match the kernel");

    std::vector<vertex> spine;
    for (auto v : kemb.order.permutation())
        spine.push_back(kr.keep[static_cast<std::size_t>(v)]);
    std::vector<int> pages(g.m(), 0);
    for (std::size_t i = 0; i < kr.kernel.m(); ++i) {
        const auto &e = kr.kernel.edge_at(i);
        pages[*g.edge_index(kr.keep[static_cast<std::size_t>(e.u)], kr.keep[static_cast<std::size_t>(e.v)])] = kemb.assignment.pages[i];
    }
    auto page_of = [&](vertex a, vertex b) { return pages[*g.edge_index(a, b)]; };

    std::vector<char> kept(static_cast<std::size_t>(g.n()), 0);
    for (auto v : kr.keep)
        kept[static_cast<std::size_t>(v)] = 1;

    for (const auto &[type, dropped] : kr.removed) {
        // Kept members of this class in spine order, grouped by page signature.
        std::map<std::vector<int>, std::vector<vertex>> groups;
        std::optional<vertex> host;
        for (auto v : spine) {
            if (!kept[static_cast<std::size_t>(v)] || g.neighbors(v) != type)
                continue;
            std::vector<int> signature;
            for (auto w : type)
                signature.push_back(page_of(v, w));
            auto &group = groups[signature];
            group.push_back(v);
            if (group.size() == 3) {
                host = group.front();
                break;
            }
        }
        if (!host)
            throw std::logic_error("no page-equivalent triple in a thresholded class");
        std::vector<int> used;
        for (auto w : type)
            used.push_back(page_of(*host, w));
        std::sort(used.begin(), used.end());
        if (std::adjacent_find(used.begin(), used.end()) != used.end())
            throw std::logic_error("page-equivalent twin with two edges on one page");

        for (auto v : dropped) {
            auto at = std::find(spine.begin(), spine.end(), *host);
            spine.insert(at + 1, v);
            for (auto w : type)
                pages[*g.edge_index(v, w)] = page_of(*host, w);
        }
    }
    return {linear_order(std::move(spine)), page_assignment{kemb.assignment.k, std::move(pages)}};
}

/// Decides bt(g) <= k; returns a witness on success.
inline std::optional<book_embedding> solve_bt(const graph &g, int k, int jobs = 1)
{
    auto identity = linear_order::identity(g.n());
    if (g.m() == 0)
        return book_embedding{identity, page_assignment{std::max(k, 0), {}}};
    auto cover = minimum_vertex_cover(g);
    if (static_cast<int>(cover.size()) <= k) {
        auto a = vc::trivial_cover_embedding(g, identity, cover);
        a.k = k;
        return book_embedding{identity, std::move(a)};
    }
    if (k < 1)
        return std::nullopt;
    auto kr = build_kernel(g, cover, k);
    auto kemb = solve_kernel(kr.kernel, k, jobs);
    if (!kemb)
        return std::nullopt;
    return lift_embedding(g, kr, *kemb);
}

/// bt(g) and a witness by binary search over [0, tau].
inline std::pair<int, book_embedding> min_pages_bt(const graph &g, int jobs = 1)
{
    const int tau = static_cast<int>(minimum_vertex_cover(g).size());
    int lo = 0, hi = tau;
    auto best = *solve_bt(g, hi, jobs);
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (auto emb = solve_bt(g, mid, jobs)) {
            hi = mid;
            best = std::move(*emb);
        }
        else {
            lo = mid + 1;
        }
    }
    best.assignment.k = hi;
    return {hi, std::move(best)};
}

} // namespace bookthick::kernel
