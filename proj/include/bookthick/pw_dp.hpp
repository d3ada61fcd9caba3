#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"

// Fixed-order book thickness parameterised by the pathwidth of the order.
//
// Positions are swept right to left. The record at v_i holds one visibility
// vector for v_i and one per guard of v_i (nearest first). Component p of a
// vector is the important guard on page p: the left endpoint of the shortest
// already-placed edge that reaches over the reference vertex from a guard.
// Everything right of that guard is visible on p, nothing left of it is.

namespace bookthick::pw {

inline constexpr int no_guard = -1;

/// Input graph relabelled by position: real vertices are 1..n, 0 is a
/// degree-0 sentinel placed in front.
struct path_context {
    graph g;
    int n = 0;
    std::vector<std::vector<int>> guards;                              // guards[i], nearest first, sentinel omitted
    std::vector<std::vector<std::pair<int, std::size_t>>> left_edges;  // left_edges[i]: (left endpoint, edge), increasing
    std::vector<std::size_t> original_edge;                            // ctx edge -> input edge
    int pathwidth = 0;

    static path_context make(const graph &input, const linear_order &order)
    {
        if (!order.covers(input))
            throw std::invalid_argument("order does not cover the graph");
        path_context ctx;
        ctx.n = input.n();
        std::vector<edge> edges;
        for (const auto &e : input.edges())
            edges.emplace_back(order.position(e.u) + 1, order.position(e.v) + 1);
        ctx.g = graph(ctx.n + 1, edges);
        ctx.original_edge.resize(input.m());
        for (std::size_t i = 0; i < input.m(); ++i) {
            const auto &e = input.edge_at(i);
            ctx.original_edge[*ctx.g.edge_index(order.position(e.u) + 1, order.position(e.v) + 1)] = i;
        }
        ctx.left_edges.resize(static_cast<std::size_t>(ctx.n + 1));
        for (std::size_t i = 0; i < ctx.g.m(); ++i) {
            const auto &e = ctx.g.edge_at(i);
            ctx.left_edges[static_cast<std::size_t>(e.v)].emplace_back(e.u, i);
        }
        for (auto &row : ctx.left_edges)
            std::sort(row.begin(), row.end());

        auto profile = compute_guard_profile(input, order);
        ctx.pathwidth = profile.pathwidth;
        ctx.guards.resize(static_cast<std::size_t>(ctx.n + 1));
        for (int i = 1; i <= ctx.n; ++i)
            for (auto v : profile.guards[static_cast<std::size_t>(i - 1)])
                ctx.guards[static_cast<std::size_t>(i)].push_back(order.position(v) + 1);
        return ctx;
    }

    bool is_guard(int i, int w) const
    {
        const auto &row = guards.at(static_cast<std::size_t>(i));
        return std::find(row.begin(), row.end(), w) != row.end();
    }

    page_assignment to_input(const std::vector<int> &ctx_pages, int k) const
    {
        page_assignment out{k, std::vector<int>(original_edge.size(), 0)};
        for (std::size_t i = 0; i < original_edge.size(); ++i)
            out.pages[original_edge[i]] = ctx_pages.at(i);
        return out;
    }
};

using visibility_vector = std::vector<int>;

/// The (alpha, i, p)-important edge of v_a: among placed edges v_c v_d on page p
/// with c < i < d (left end a guard of v_i) and c < a, the one with c closest to
/// a, then the shortest. Returns (edge, c).
inline std::optional<std::pair<std::size_t, int>> important_edge(const path_context &ctx, int i, int p, std::span<const int> alpha, int a)
{
    std::optional<std::pair<std::size_t, int>> best;
    int best_d = 0;
    for (std::size_t e = 0; e < ctx.g.m(); ++e) {
        if (alpha[e] != p)
            continue;
        const auto &ed = ctx.g.edge_at(e);
        const int c = ed.u, d = ed.v;
        if (d <= i || c >= i || c >= a)
            continue;
        if (!best || a - c < a - best->second || (a - c == a - best->second && d - c < best_d - best->second)) {
            best = std::pair{e, c};
            best_d = d;
        }
    }
    return best;
}

inline visibility_vector compute_visibility_vector(const path_context &ctx, int i, int a, std::span<const int> alpha, int k)
{
    visibility_vector out(static_cast<std::size_t>(k), no_guard);
    for (int p = 1; p <= k; ++p)
        if (auto ie = important_edge(ctx, i, p, alpha, a))
            out[static_cast<std::size_t>(p - 1)] = ie->second;
    return out;
}

/// Folds new edges (left endpoint, page) into the vector of reference vertex `ref`.
inline void absorb_edges(visibility_vector &vec, int ref, std::span<const std::pair<int, int>> new_edges)
{
    for (const auto &[left, page] : new_edges) {
        int &comp = vec[static_cast<std::size_t>(page - 1)];
        if (left < ref && (comp == no_guard || left > comp))
            comp = left;
    }
}

struct pw_record {
    /// Vector-major: entry 0 is v_i, entry 1+j is guard j of v_i.
    std::vector<int> queue;
    int parent = -1;
    /// Pages of the left edges of the vertex that was just passed.
    std::vector<std::int8_t> beta;
};

struct queue_hash {
    std::size_t operator()(const std::vector<int> &v) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto x : v)
            h = (h ^ static_cast<std::size_t>(x + 2)) * 0x100000001b3ull;
        return h;
    }
};

class pw_program {
public:
    pw_program(const path_context &ctx, int k) : ctx_(ctx), k_(k)
    {
        if (k < 1)
            throw std::invalid_argument("page count must be positive");
        pw_record start;
        start.queue.assign((ctx_.guards[static_cast<std::size_t>(ctx_.n)].size() + 1) * static_cast<std::size_t>(k_), no_guard);
        layers_.push_back({std::move(start)});
    }

    int k() const { return k_; }
    /// Position i whose record set Q_i is the newest layer.
    int current() const { return ctx_.n - (static_cast<int>(layers_.size()) - 1); }
    bool done() const { return current() == 0; }
    const std::vector<pw_record> &layer_at(int i) const { return layers_.at(static_cast<std::size_t>(ctx_.n - i)); }

    /// Reference vertex of queue entry `slot` at position i.
    int slot_vertex(int i, int slot) const { return slot == 0 ? i : ctx_.guards[static_cast<std::size_t>(i)][static_cast<std::size_t>(slot - 1)]; }

    visibility_vector vector_of(const pw_record &r, int slot) const
    {
        auto first = r.queue.begin() + static_cast<std::ptrdiff_t>(slot) * k_;
        return {first, first + k_};
    }

    /// Assignment of E_i carried by record `index` of Q_i (pages over ctx edges).
    std::vector<int> witness(int i, std::size_t index) const
    {
        std::vector<int> pages(ctx_.g.m(), 0);
        int rec = static_cast<int>(index);
        for (int pos = i; pos < ctx_.n; ++pos) {
            const auto &r = layer_at(pos)[static_cast<std::size_t>(rec)];
            const auto &fresh = ctx_.left_edges[static_cast<std::size_t>(pos + 1)];
            for (std::size_t j = 0; j < fresh.size(); ++j)
                pages[fresh[j].second] = r.beta[j];
            rec = r.parent;
        }
        return pages;
    }

    /// Computes Q_{i-1} from Q_i.
    void step()
    {
        if (done())
            throw std::logic_error("sweep already finished");
        const int i = current();
        const auto &prev = layers_.back();
        const auto &old_guards = ctx_.guards[static_cast<std::size_t>(i)];
        const auto &new_guards = ctx_.guards[static_cast<std::size_t>(i - 1)];
        const auto &fresh = ctx_.left_edges[static_cast<std::size_t>(i)];
        const bool passes_guard = i == 1 || (!old_guards.empty() && old_guards.front() == i - 1);
        const std::size_t k = static_cast<std::size_t>(k_);

        // For each entry of the new queue: which old entry it starts from.
        // Entry 0 is v_{i-1}; new guards copy their right neighbour in the queue.
        std::vector<int> source;
        if (i > 1) {
            source.push_back(passes_guard ? 1 : 0);
            for (auto g : new_guards) {
                auto it = std::find(old_guards.begin(), old_guards.end(), g);
                source.push_back(it != old_guards.end() ? static_cast<int>(it - old_guards.begin()) + 1 : source.back());
            }
        }
        std::vector<int> refs;
        if (i > 1) {
            refs.push_back(i - 1);
            refs.insert(refs.end(), new_guards.begin(), new_guards.end());
        }

        std::vector<pw_record> next;
        std::unordered_map<std::vector<int>, int, queue_hash> seen;
        std::vector<std::int8_t> beta(fresh.size(), 1);
        std::vector<std::pair<int, int>> placed(fresh.size());
        for (std::size_t r = 0; r < prev.size(); ++r) {
            const auto &omega = prev[r];
            std::fill(beta.begin(), beta.end(), 1);
            while (true) {
                // v_j is visible to v_i on p iff p's important guard is absent or at most j.
                bool valid = true;
                for (std::size_t j = 0; j < fresh.size() && valid; ++j) {
                    const int comp = omega.queue[static_cast<std::size_t>(beta[j] - 1)];
                    valid = comp == no_guard || comp <= fresh[j].first;
                }
                if (valid) {
                    for (std::size_t j = 0; j < fresh.size(); ++j)
                        placed[j] = {fresh[j].first, beta[j]};
                    std::vector<int> queue;
                    queue.reserve(source.size() * k);
                    for (std::size_t s = 0; s < source.size(); ++s) {
                        auto first = omega.queue.begin() + static_cast<std::ptrdiff_t>(source[s]) * k_;
                        visibility_vector vec(first, first + k_);
                        absorb_edges(vec, refs[s], placed);
                        queue.insert(queue.end(), vec.begin(), vec.end());
                    }
                    if (seen.emplace(queue, static_cast<int>(next.size())).second)
                        next.push_back({std::move(queue), static_cast<int>(r), beta});
                }
                int j = static_cast<int>(fresh.size()) - 1;
                while (j >= 0 && beta[static_cast<std::size_t>(j)] == k_)
                    beta[static_cast<std::size_t>(j--)] = 1;
                if (j < 0)
                    break;
                ++beta[static_cast<std::size_t>(j)];
            }
        }
        check_bound(next.size());
        layers_.push_back(std::move(next));
    }

    bool run()
    {
        while (!done() && !layers_.back().empty())
            step();
        return done() && !layers_.back().empty();
    }

    std::optional<std::vector<int>> solution() const
    {
        if (!done() || layers_.back().empty())
            return std::nullopt;
        return witness(0, 0);
    }

private:
    void check_bound(std::size_t records) const
    {
        const double kappa = ctx_.pathwidth;
        const double bound = std::pow(kappa + 2.0, kappa * kappa);
        if (bound < 1e18 && static_cast<double>(records) > bound)
            throw std::logic_error("record set exceeds its bound");
    }

    const path_context &ctx_;
    int k_;
    std::vector<std::vector<pw_record>> layers_;
};

/// Right-to-left sweep keeping an injective guard -> page map; each left edge
/// takes the page of its guard. Uses at most pathwidth(g, order) pages.
inline page_assignment trivial_pathwidth_embedding(const graph &g, const linear_order &order)
{
    auto profile = compute_guard_profile(g, order);
    const int n = g.n();
    page_assignment out{profile.pathwidth, std::vector<int>(g.m(), 0)};
    std::vector<int> page_of(static_cast<std::size_t>(n), 0);
    std::vector<char> taken(static_cast<std::size_t>(profile.pathwidth) + 2, 0);
    for (int i = n - 1; i >= 0; --i) {
        const vertex v = order.at(i);
        if (page_of[static_cast<std::size_t>(v)]) {
            taken[static_cast<std::size_t>(page_of[static_cast<std::size_t>(v)])] = 0;
            page_of[static_cast<std::size_t>(v)] = 0;
        }
        for (auto guard : profile.guards[static_cast<std::size_t>(i)]) {
            if (page_of[static_cast<std::size_t>(guard)])
                continue;
            int p = 1;
            while (taken[static_cast<std::size_t>(p)])
                ++p;
            taken[static_cast<std::size_t>(p)] = 1;
            page_of[static_cast<std::size_t>(guard)] = p;
        }
        for (const auto &inc : g.incident(v))
            if (order.position(inc.neighbor) < i)
                out.pages[inc.edge_index] = page_of[static_cast<std::size_t>(inc.neighbor)];
    }
    return out;
}

inline std::optional<page_assignment> solve_fixed_order_pw(const graph &g, const linear_order &order, int k)
{
    if (!order.covers(g))
        throw std::invalid_argument("order does not cover the graph");
    if (g.n() <= 1 || g.m() == 0)
        return page_assignment{std::max(k, 0), {}};
    auto ctx = path_context::make(g, order);
    if (k >= ctx.pathwidth) {
        auto out = trivial_pathwidth_embedding(g, order);
        out.k = k;
        return out;
    }
    if (k < 1)
        return std::nullopt;
    pw_program program(ctx, k);
    if (!program.run())
        return std::nullopt;
    return ctx.to_input(*program.solution(), k);
}

inline std::pair<int, page_assignment> min_pages_fixed_order_pw(const graph &g, const linear_order &order)
{
    for (int k = 0;; ++k)
        if (auto a = solve_fixed_order_pw(g, order, k))
            return {k, std::move(*a)};
}

} // namespace bookthick::pw
