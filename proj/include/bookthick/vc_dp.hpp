#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"

// Fixed-order book thickness parameterised by the vertex cover number.
//
// Non-cover vertices u_0 < u_1 < ... (a degree-0 dummy appended last) are
// swept left to right. The record for u_i is a tuple of visibility matrices:
// one for u_i and one for each non-cover vertex directly following a cover
// vertex. Two partial assignments with equal tuples complete identically, so
// only one witness per tuple is kept.

namespace bookthick::vc {

struct cover_context {
    graph g;                             // relabelled by position, dummy = last vertex
    int real_n = 0;
    std::vector<int> cover;              // positions c_0 < c_1 < ...
    std::vector<int> cover_rank;         // position -> rank in cover or -1
    std::vector<int> others;             // positions of u_0 < u_1 < ..., dummy last
    std::vector<int> x;                  // indices into `others` directly after a cover vertex
    std::vector<std::size_t> cover_edges;                          // edges inside the cover
    std::vector<std::vector<std::pair<int, std::size_t>>> u_edges; // per u: (cover rank, edge)
    std::vector<std::size_t> original_edge;                        // ctx edge -> input edge

    int tau() const { return static_cast<int>(cover.size()); }
    int u_count() const { return static_cast<int>(others.size()); }

    static cover_context make(const graph &input, const linear_order &order, std::span<const vertex> cover_vertices)
    {
        if (!order.covers(input))
            throw std::invalid_argument("order does not cover the graph");
        if (!is_vertex_cover(input, cover_vertices))
            throw std::invalid_argument("not a vertex cover");
        if (cover_vertices.size() > 32)
            throw std::length_error("vertex cover too large for packed visibility rows");

        cover_context ctx;
        const int n = input.n();
        ctx.real_n = n;
        std::vector<edge> edges;
        edges.reserve(input.m());
        for (const auto &e : input.edges())
            edges.emplace_back(order.position(e.u), order.position(e.v));
        ctx.g = graph(n + 1, edges);
        ctx.original_edge.resize(input.m());
        for (std::size_t i = 0; i < input.m(); ++i) {
            const auto &e = input.edge_at(i);
            ctx.original_edge[*ctx.g.edge_index(order.position(e.u), order.position(e.v))] = i;
        }

        std::vector<char> in(static_cast<std::size_t>(n + 1), 0);
        for (auto c : cover_vertices)
            in[static_cast<std::size_t>(order.position(c))] = 1;
        ctx.cover_rank.assign(static_cast<std::size_t>(n + 1), -1);
        for (int p = 0; p <= n; ++p) {
            if (in[static_cast<std::size_t>(p)]) {
                ctx.cover_rank[static_cast<std::size_t>(p)] = static_cast<int>(ctx.cover.size());
                ctx.cover.push_back(p);
            }
            else {
                if (p > 0 && in[static_cast<std::size_t>(p - 1)])
                    ctx.x.push_back(static_cast<int>(ctx.others.size()));
                ctx.others.push_back(p);
            }
        }
        ctx.u_edges.resize(ctx.others.size());
        for (std::size_t j = 0; j < ctx.others.size(); ++j)
            for (const auto &inc : ctx.g.incident(ctx.others[j])) {
                int rank = ctx.cover_rank[static_cast<std::size_t>(inc.neighbor)];
                if (rank < 0)
                    throw std::logic_error("edge with both endpoints outside the cover");
                ctx.u_edges[j].emplace_back(rank, inc.edge_index);
            }
        for (std::size_t i = 0; i < ctx.g.m(); ++i) {
            const auto &e = ctx.g.edge_at(i);
            if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)])
                ctx.cover_edges.push_back(i);
        }
        return ctx;
    }

    /// Assignment over ctx edges mapped back to the input graph's edge indices.
    page_assignment to_input(const std::vector<int> &ctx_pages, int k) const
    {
        page_assignment out{k, std::vector<int>(original_edge.size(), 0)};
        for (std::size_t i = 0; i < original_edge.size(); ++i)
            out.pages[original_edge[i]] = ctx_pages.at(i);
        return out;
    }
};

/// k x tau visibility matrix, one packed row per page (bit b = cover vertex c_b).
struct visibility_matrix {
    int k = 0;
    int tau = 0;
    std::vector<std::uint32_t> rows;

    bool visible(int page, int b) const { return (rows.at(static_cast<std::size_t>(page - 1)) >> b) & 1u; }
    bool operator==(const visibility_matrix &) const = default;
};

/// Direct evaluation: c_b is visible to u_a on page p iff the edge u_a c_b does
/// not interleave any edge placed on p by `partial` (pages over ctx edges, 0 = unplaced).
inline visibility_matrix compute_visibility_matrix(const cover_context &ctx, int a, std::span<const int> partial, int k)
{
    visibility_matrix m{k, ctx.tau(), std::vector<std::uint32_t>(static_cast<std::size_t>(k), 0)};
    const int ua = ctx.others.at(static_cast<std::size_t>(a));
    for (int p = 1; p <= k; ++p)
        for (int b = 0; b < ctx.tau(); ++b) {
            const int cb = ctx.cover[static_cast<std::size_t>(b)];
            bool blocked = false;
            for (std::size_t e = 0; e < ctx.g.m() && !blocked; ++e)
                if (partial[e] == p) {
                    const auto &f = ctx.g.edge_at(e);
                    blocked = positions_interleave(ua, cb, f.u, f.v);
                }
            if (!blocked)
                m.rows[static_cast<std::size_t>(p - 1)] |= 1u << b;
        }
    return m;
}

/// Every non-crossing assignment of the cover-internal edges to pages [1..k],
/// in lexicographic order of the page tuple (edges in ctx edge order).
/// `visit` returns false to stop early.
inline void for_each_cover_assignment(const cover_context &ctx, int k, const std::function<bool(const std::vector<int> &)> &visit)
{
    const auto &ce = ctx.cover_edges;
    std::vector<int> pages(ce.size(), 0);
    bool stop = false;
    std::function<void(std::size_t)> place = [&](std::size_t slot) {
        if (stop)
            return;
        if (slot == ce.size()) {
            stop = !visit(pages);
            return;
        }
        const auto &e = ctx.g.edge_at(ce[slot]);
        for (int p = 1; p <= k && !stop; ++p) {
            bool clash = false;
            for (std::size_t t = 0; t < slot && !clash; ++t)
                if (pages[t] == p) {
                    const auto &f = ctx.g.edge_at(ce[t]);
                    clash = positions_interleave(e.u, e.v, f.u, f.v);
                }
            if (clash)
                continue;
            pages[slot] = p;
            place(slot + 1);
        }
        pages[slot] = 0;
    };
    place(0);
}

inline std::vector<std::vector<int>> enumerate_cover_assignments(const cover_context &ctx, int k)
{
    std::vector<std::vector<int>> all;
    for_each_cover_assignment(ctx, k, [&](const std::vector<int> &s) {
        all.push_back(s);
        return true;
    });
    return all;
}

struct vc_record {
    /// Slot-major packed rows: slot 0 is u_i itself, slot 1+t is u_{x_t}.
    std::vector<std::uint32_t> rows;
    int parent = -1;
    /// Pages of the edges of u_{i-1}, in ctx.u_edges order.
    std::vector<std::int8_t> beta;
};

struct vc_options {
    /// Keep one witness per distinct matrix tuple. Off: every candidate is kept.
    bool collapse = true;
    /// Rebuild the witness and evaluate validity and matrices from scratch
    /// instead of updating the parent's matrices.
    bool from_witness = false;
};

struct rows_hash {
    std::size_t operator()(const std::vector<std::uint32_t> &v) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto x : v)
            h = (h ^ x) * 0x100000001b3ull;
        return h;
    }
};

/// The sweep for one fixed assignment `s` of the cover-internal edges.
class vc_program {
public:
    vc_program(const cover_context &ctx, std::vector<int> s_pages, int k, vc_options opts = {})
        : ctx_(ctx), s_(std::move(s_pages)), k_(k), opts_(opts)
    {
        if (k < 1)
            throw std::invalid_argument("page count must be positive");
        if (s_.size() != ctx_.cover_edges.size())
            throw std::invalid_argument("cover assignment size mismatch");
        std::vector<int> base(ctx_.g.m(), 0);
        for (std::size_t t = 0; t < s_.size(); ++t)
            base[ctx_.cover_edges[t]] = s_[t];
        vc_record first;
        first.rows = tuple_from(base, 0);
        layers_.push_back({std::move(first)});
    }

    int k() const { return k_; }
    int slots() const { return 1 + static_cast<int>(ctx_.x.size()); }
    /// Index i of the newest layer R_i.
    int current() const { return static_cast<int>(layers_.size()) - 1; }
    bool done() const { return current() == ctx_.u_count() - 1; }
    const std::vector<vc_record> &layer(int i) const { return layers_.at(static_cast<std::size_t>(i)); }

    /// Reference u-index of a tuple slot.
    int slot_vertex(int slot, int i) const { return slot == 0 ? i : ctx_.x[static_cast<std::size_t>(slot - 1)]; }

    visibility_matrix matrix(const vc_record &r, int slot) const
    {
        visibility_matrix m{k_, ctx_.tau(), {}};
        auto first = r.rows.begin() + static_cast<std::ptrdiff_t>(slot) * k_;
        m.rows.assign(first, first + k_);
        return m;
    }

    /// s plus the partial assignment of E_i carried by record `index` of layer i.
    std::vector<int> witness(int i, std::size_t index) const
    {
        std::vector<int> pages(ctx_.g.m(), 0);
        for (std::size_t t = 0; t < s_.size(); ++t)
            pages[ctx_.cover_edges[t]] = s_[t];
        int rec = static_cast<int>(index);
        for (int layer = i; layer > 0; --layer) {
            const auto &r = layers_[static_cast<std::size_t>(layer)][static_cast<std::size_t>(rec)];
            const auto &edges = ctx_.u_edges[static_cast<std::size_t>(layer - 1)];
            for (std::size_t j = 0; j < edges.size(); ++j)
                pages[edges[j].second] = r.beta[j];
            rec = r.parent;
        }
        return pages;
    }

    /// Computes R_i from R_{i-1}.
    void step()
    {
        if (done())
            throw std::logic_error("sweep already finished");
        const int i = current() + 1;
        const auto &prev = layers_.back();
        const auto &edges = ctx_.u_edges[static_cast<std::size_t>(i - 1)];
        const int degree = static_cast<int>(edges.size());
        const int prev_pos = ctx_.others[static_cast<std::size_t>(i - 1)];
        const int nslots = slots();

        // cross[slot][j]: cover ranks b such that u_ref c_b interleaves the j-th edge of u_{i-1}.
        std::vector<std::vector<std::uint32_t>> cross(static_cast<std::size_t>(nslots), std::vector<std::uint32_t>(edges.size(), 0));
        for (int slot = 0; slot < nslots; ++slot) {
            const int ref = ctx_.others[static_cast<std::size_t>(slot_vertex(slot, i))];
            for (std::size_t j = 0; j < edges.size(); ++j) {
                const int cj = ctx_.cover[static_cast<std::size_t>(edges[j].first)];
                for (int b = 0; b < ctx_.tau(); ++b)
                    if (positions_interleave(ref, ctx_.cover[static_cast<std::size_t>(b)], prev_pos, cj))
                        cross[static_cast<std::size_t>(slot)][j] |= 1u << b;
            }
        }
        // Slot whose stored matrix already refers to u_i, if u_i follows a cover vertex.
        int carried = 0;
        for (std::size_t t = 0; t < ctx_.x.size(); ++t)
            if (ctx_.x[t] == i)
                carried = static_cast<int>(t) + 1;

        std::vector<vc_record> next;
        std::unordered_map<std::vector<std::uint32_t>, int, rows_hash> seen;
        std::vector<std::int8_t> beta(edges.size(), 1);
        for (std::size_t r = 0; r < prev.size(); ++r) {
            const auto &rho = prev[r];
            std::vector<int> gamma;
            if (opts_.from_witness)
                gamma = witness(i - 1, r);
            std::fill(beta.begin(), beta.end(), 1);
            while (true) {
                std::vector<std::uint32_t> rows;
                bool valid = true;
                if (opts_.from_witness) {
                    auto full = gamma;
                    for (std::size_t j = 0; j < edges.size(); ++j)
                        full[edges[j].second] = beta[j];
                    valid = crossing_free(full);
                    if (valid)
                        rows = tuple_from(full, i);
                }
                else {
                    for (std::size_t j = 0; j < edges.size() && valid; ++j)
                        valid = (rho.rows[static_cast<std::size_t>(beta[j] - 1)] >> edges[j].first) & 1u;
                    if (valid) {
                        rows = rho.rows;
                        if (carried == 0)
                            std::copy_n(rho.rows.begin(), k_, rows.begin());
                        else
                            std::copy_n(rho.rows.begin() + carried * k_, k_, rows.begin());
                        for (int slot = 0; slot < nslots; ++slot)
                            for (std::size_t j = 0; j < edges.size(); ++j)
                                rows[static_cast<std::size_t>(slot * k_ + beta[j] - 1)] &= ~cross[static_cast<std::size_t>(slot)][j];
                    }
                }
                if (valid) {
                    bool fresh = true;
                    if (opts_.collapse)
                        fresh = seen.emplace(rows, static_cast<int>(next.size())).second;
                    if (fresh)
                        next.push_back({std::move(rows), static_cast<int>(r), beta});
                }
                // Lexicographic successor of beta in [1..k]^degree.
                int j = degree - 1;
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

    /// Runs to the dummy vertex; true iff the final layer is nonempty.
    bool run()
    {
        while (!done() && !layers_.back().empty())
            step();
        return done() && !layers_.back().empty();
    }

    /// Full assignment (ctx edges) from the first record of the final layer.
    std::optional<std::vector<int>> solution() const
    {
        if (!done() || layers_.back().empty())
            return std::nullopt;
        return witness(current(), 0);
    }

private:
    std::vector<std::uint32_t> tuple_from(std::span<const int> partial, int i) const
    {
        std::vector<std::uint32_t> rows;
        rows.reserve(static_cast<std::size_t>(slots() * k_));
        for (int slot = 0; slot < slots(); ++slot) {
            auto m = compute_visibility_matrix(ctx_, slot_vertex(slot, i), partial, k_);
            rows.insert(rows.end(), m.rows.begin(), m.rows.end());
        }
        return rows;
    }

    bool crossing_free(std::span<const int> pages) const
    {
        for (std::size_t a = 0; a < pages.size(); ++a)
            for (std::size_t b = a + 1; b < pages.size(); ++b)
                if (pages[a] != 0 && pages[a] == pages[b]) {
                    const auto &e = ctx_.g.edge_at(a), &f = ctx_.g.edge_at(b);
                    if (positions_interleave(e.u, e.v, f.u, f.v))
                        return false;
                }
        return true;
    }

    void check_bound(std::size_t records) const
    {
        const long long tau = ctx_.tau();
        const long long exponent = tau * tau * tau + tau * tau;
        if (opts_.collapse && exponent < 63 && records > (1ull << exponent))
            throw std::logic_error("record set exceeds its bound");
    }

    const cover_context &ctx_;
    std::vector<int> s_;
    int k_;
    vc_options opts_;
    std::vector<std::vector<vc_record>> layers_;
};

/// One page per cover vertex, cover ranked by position.
inline page_assignment trivial_cover_embedding(const graph &g, const linear_order &order, std::span<const vertex> cover)
{
    if (!order.covers(g))
        throw std::invalid_argument("order does not cover the graph");
    if (!is_vertex_cover(g, cover))
        throw std::invalid_argument("not a vertex cover");
    std::vector<vertex> ranked(cover.begin(), cover.end());
    std::sort(ranked.begin(), ranked.end(), [&](vertex a, vertex b) { return order.position(a) < order.position(b); });
    std::vector<int> page_of(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t r = 0; r < ranked.size(); ++r)
        page_of[static_cast<std::size_t>(ranked[r])] = static_cast<int>(r) + 1;
    page_assignment out{static_cast<int>(ranked.size()), std::vector<int>(g.m(), 0)};
    // Edge u c_i with u outside the cover or u = c_j, j < i, goes to page i.
    for (std::size_t i = 0; i < g.m(); ++i) {
        const auto &e = g.edge_at(i);
        out.pages[i] = std::max(page_of[static_cast<std::size_t>(e.u)], page_of[static_cast<std::size_t>(e.v)]);
    }
    return out;
}

/// Decides fobt(g, order) <= k using a given vertex cover.
inline std::optional<page_assignment> solve_fixed_order_vc(const graph &g, const linear_order &order, int k,
                                                           std::span<const vertex> cover, vc_options opts = {})
{
    if (!order.covers(g))
        throw std::invalid_argument("order does not cover the graph");
    if (g.m() == 0)
        return page_assignment{std::max(k, 0), {}};
    if (static_cast<int>(cover.size()) <= k) {
        auto out = trivial_cover_embedding(g, order, cover);
        out.k = k;
        return out;
    }
    if (k < 1)
        return std::nullopt;

    auto ctx = cover_context::make(g, order, cover);
    std::optional<page_assignment> answer;
    for_each_cover_assignment(ctx, k, [&](const std::vector<int> &s) {
        vc_program program(ctx, s, k, opts);
        if (!program.run())
            return true;
        answer = ctx.to_input(*program.solution(), k);
        return false;
    });
    return answer;
}

inline std::optional<page_assignment> solve_fixed_order_vc(const graph &g, const linear_order &order, int k)
{
    auto cover = minimum_vertex_cover(g);
    return solve_fixed_order_vc(g, order, k, cover);
}

/// fobt(g, order) and a witness, by increasing k from 0.
inline std::pair<int, page_assignment> min_pages_fixed_order_vc(const graph &g, const linear_order &order)
{
    auto cover = minimum_vertex_cover(g);
    for (int k = 0;; ++k)
        if (auto a = solve_fixed_order_vc(g, order, k, cover))
            return {k, std::move(*a)};
}

} // namespace bookthick::vc
