#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"

namespace bookthick {

namespace detail {

    struct oracle_search {
        std::vector<std::size_t> sequence;                 // edge indices in search order
        std::vector<std::vector<std::size_t>> earlier_conflicts; // by sequence slot, slots of earlier interleaving edges
        std::vector<int> page_of_slot;
        int k = 0;

        bool place(std::size_t slot, int max_used)
        {
            if (slot == sequence.size())
                return true;
            const int limit = std::min(k, max_used + 1);
            for (int p = 1; p <= limit; ++p) {
                bool clash = false;
                for (auto other : earlier_conflicts[slot])
                    if (page_of_slot[other] == p) {
                        clash = true;
                        break;
                    }
                if (clash)
                    continue;
                page_of_slot[slot] = p;
                if (place(slot + 1, std::max(max_used, p)))
                    return true;
            }
            page_of_slot[slot] = 0;
            return false;
        }
    };

} // namespace detail

/// Exact fixed-order k-page test by backtracking. Edges are taken by left
/// endpoint position, then span; a new edge may open at most one fresh page,
/// which pins the first edge to page 1 and removes page-relabelling symmetry.
inline std::optional<page_assignment> fobt_oracle(const graph &g, const linear_order &order, int k)
{
    if (g.m() == 0)
        return page_assignment{std::max(k, 0), {}};
    if (k < 1)
        return std::nullopt;

    detail::oracle_search search;
    search.k = k;
    search.sequence.resize(g.m());
    for (std::size_t i = 0; i < g.m(); ++i)
        search.sequence[i] = i;
    auto span_of = [&](std::size_t i) {
        int a = order.position(g.edge_at(i).u), b = order.position(g.edge_at(i).v);
        return std::pair{std::min(a, b), std::abs(a - b)};
    };
    std::stable_sort(search.sequence.begin(), search.sequence.end(),
                     [&](std::size_t x, std::size_t y) { return span_of(x) < span_of(y); });
    search.earlier_conflicts.resize(g.m());
    for (std::size_t s = 0; s < g.m(); ++s)
        for (std::size_t t = 0; t < s; ++t)
            if (edges_interleave(order, g.edge_at(search.sequence[s]), g.edge_at(search.sequence[t])))
                search.earlier_conflicts[s].push_back(t);
    search.page_of_slot.assign(g.m(), 0);

    if (!search.place(0, 0))
        return std::nullopt;
    page_assignment out{k, std::vector<int>(g.m(), 0)};
    for (std::size_t s = 0; s < g.m(); ++s)
        out.pages[search.sequence[s]] = search.page_of_slot[s];
    return out;
}

/// Exact book-thickness test over all vertex orders, for small graphs (n <= ~10).
///
/// Crossings depend only on the cyclic order of the spine up to reflection, so
/// the first non-isolated vertex is fixed in front and the second position is
/// required to be smaller than the last. Isolated vertices go to the end.
/// Orders are searched in lexicographic order; `jobs` > 1 splits the search by
/// the second vertex and still returns the lexicographically first success.
inline std::optional<book_embedding> bt_oracle(const graph &g, int k, int jobs = 1)
{
    std::vector<vertex> active, isolated;
    for (vertex v = 0; v < g.n(); ++v)
        (g.degree(v) > 0 ? active : isolated).push_back(v);

    auto assemble = [&](const std::vector<vertex> &front) {
        std::vector<vertex> perm = front;
        perm.insert(perm.end(), isolated.begin(), isolated.end());
        return linear_order(std::move(perm));
    };

    if (active.size() <= 3) {
        auto order = assemble(active);
        if (auto a = fobt_oracle(g, order, k))
            return book_embedding{std::move(order), std::move(*a)};
        return std::nullopt;
    }
    if (k < 1)
        return std::nullopt;

    const std::size_t branches = active.size() - 1;
    std::vector<std::optional<book_embedding>> found(branches);
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::atomic<std::size_t> next{0};

    auto run_branch = [&](std::size_t b) {
        std::vector<vertex> perm;
        perm.push_back(active[0]);
        perm.push_back(active[b + 1]);
        for (std::size_t i = 1; i < active.size(); ++i)
            if (i != b + 1)
                perm.push_back(active[i]);
        do {
            if (best.load() < b)
                return;
            if (perm[1] > perm.back())
                continue;
            auto order = assemble(perm);
            if (auto a = fobt_oracle(g, order, k)) {
                found[b] = book_embedding{std::move(order), std::move(*a)};
                std::size_t cur = best.load();
                while (b < cur && !best.compare_exchange_weak(cur, b)) {
                }
                return;
            }
        } while (std::next_permutation(perm.begin() + 2, perm.end()));
    };
    auto worker = [&] {
        for (std::size_t b = next++; b < branches; b = next++)
            run_branch(b);
    };

    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(branches)));
    if (threads == 1) {
        worker();
    }
    else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }
    for (auto &f : found)
        if (f)
            return std::move(f);
    return std::nullopt;
}

} // namespace bookthick
