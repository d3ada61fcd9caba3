#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bookthick {

using vertex = int;

/// Undirected edge, always stored with u < v.
struct edge {
    vertex u = 0;
    vertex v = 0;

    edge() = default;
    edge(vertex a, vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    auto operator<=>(const edge &) const = default;

    vertex other(vertex w) const { return w == u ? v : u; }
};

/// Simple undirected graph on the dense vertex set [0, n). Immutable once built.
class graph {
public:
    graph() = default;

    graph(int n, std::vector<edge> edges) : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(std::max(n, 0)))
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        for (const auto &e : edges_) {
            if (e.u == e.v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
            if (e.u < 0 || e.v >= n)
                throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            adj_[edges_[i].u].push_back({edges_[i].v, i});
            adj_[edges_[i].v].push_back({edges_[i].u, i});
        }
        for (auto &row : adj_)
            std::sort(row.begin(), row.end());
    }

    struct incidence {
        vertex neighbor;
        std::size_t edge_index;
        auto operator<=>(const incidence &) const = default;
    };

    int n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    const std::vector<edge> &edges() const { return edges_; }
    const edge &edge_at(std::size_t i) const { return edges_.at(i); }

    /// Incident edges of v, sorted by neighbor index.
    std::span<const incidence> incident(vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(vertex v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

    std::optional<std::size_t> edge_index(vertex a, vertex b) const
    {
        edge key(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || *it != key)
            return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }
    bool has_edge(vertex a, vertex b) const { return edge_index(a, b).has_value(); }

    std::vector<vertex> neighbors(vertex v) const
    {
        std::vector<vertex> out;
        for (const auto &inc : incident(v))
            out.push_back(inc.neighbor);
        return out;
    }

    /// Subgraph induced by `keep` (relabelled in the given order).
    graph induced(std::span<const vertex> keep) const
    {
        std::vector<int> label(static_cast<std::size_t>(n_), -1);
        for (std::size_t i = 0; i < keep.size(); ++i)
            label.at(static_cast<std::size_t>(keep[i])) = static_cast<int>(i);
        std::vector<edge> kept;
        for (const auto &e : edges_)
            if (label[e.u] >= 0 && label[e.v] >= 0)
                kept.emplace_back(label[e.u], label[e.v]);
        return graph(static_cast<int>(keep.size()), std::move(kept));
    }

private:
    int n_ = 0;
    std::vector<edge> edges_;
    std::vector<std::vector<incidence>> adj_;
};

/// A permutation of [0, n) read left to right along the spine.
class linear_order {
public:
    linear_order() = default;

    explicit linear_order(std::vector<vertex> perm) : perm_(std::move(perm)), pos_(perm_.size(), -1)
    {
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            auto v = perm_[i];
            if (v < 0 || static_cast<std::size_t>(v) >= perm_.size() || pos_[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("order is not a permutation");
            pos_[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }

    static linear_order identity(int n)
    {
        std::vector<vertex> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            perm[static_cast<std::size_t>(i)] = i;
        return linear_order(std::move(perm));
    }

    int size() const { return static_cast<int>(perm_.size()); }
    vertex at(int position) const { return perm_.at(static_cast<std::size_t>(position)); }
    int position(vertex v) const { return pos_.at(static_cast<std::size_t>(v)); }
    const std::vector<vertex> &permutation() const { return perm_; }

    bool covers(const graph &g) const { return size() == g.n(); }

    bool operator==(const linear_order &o) const { return perm_ == o.perm_; }

private:
    std::vector<vertex> perm_;
    std::vector<int> pos_;
};

/// True iff spine intervals [a,b] and [c,d] strictly alternate (a<c<b<d or c<a<d<b).
/// Arguments need not be sorted.
inline bool positions_interleave(int a, int b, int c, int d)
{
    if (a > b)
        std::swap(a, b);
    if (c > d)
        std::swap(c, d);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

inline bool edges_interleave(const linear_order &order, const edge &e, const edge &f)
{
    return positions_interleave(order.position(e.u), order.position(e.v), order.position(f.u), order.position(f.v));
}

/// Graph relabelled so that vertex i sits at position i of `order`.
inline graph relabel_by_position(const graph &g, const linear_order &order)
{
    std::vector<edge> edges;
    edges.reserve(g.m());
    for (const auto &e : g.edges())
        edges.emplace_back(order.position(e.u), order.position(e.v));
    return graph(g.n(), std::move(edges));
}

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

struct parsed_graph {
    graph g;
    std::optional<linear_order> order;
};

/// Reads the line-oriented graph format:
///   n <count>
///   edge <u> <v>
///   order <p0> ... <p(n-1)>   (optional)
/// `#` starts a comment.
inline parsed_graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    std::optional<int> n;
    std::vector<edge> edges;
    std::set<edge> seen;
    std::optional<linear_order> order;

    auto read_int = [&](std::istringstream &ls, const char *what) {
        long long value = 0;
        if (!(ls >> value))
            throw parse_error(line_no, std::string("expected integer ") + what);
        if (value < 0 || value > 100'000'000)
            throw parse_error(line_no, std::string("value out of range for ") + what);
        return static_cast<int>(value);
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        std::string keyword;
        if (!(ls >> keyword))
            continue;
        if (keyword == "n") {
            if (n)
                throw parse_error(line_no, "duplicate n line");
            n = read_int(ls, "vertex count");
        }
        else if (keyword == "edge") {
            if (!n)
                throw parse_error(line_no, "edge before n line");
            int u = read_int(ls, "endpoint");
            int v = read_int(ls, "endpoint");
            if (u >= *n || v >= *n)
                throw parse_error(line_no, "index " + std::to_string(std::max(u, v)) + " out of range");
            if (u == v)
                throw parse_error(line_no, "self-loop at " + std::to_string(u));
            edge e(u, v);
            if (!seen.insert(e).second)
                throw parse_error(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
            edges.push_back(e);
        }
        else if (keyword == "order") {
            if (!n)
                throw parse_error(line_no, "order before n line");
            if (order)
                throw parse_error(line_no, "duplicate order line");
            std::vector<vertex> perm;
            long long value = 0;
            while (ls >> value) {
                if (value < 0 || value >= *n)
                    throw parse_error(line_no, "index " + std::to_string(value) + " out of range");
                perm.push_back(static_cast<vertex>(value));
            }
            if (!ls.eof())
                throw parse_error(line_no, "expected integer in order");
            if (static_cast<int>(perm.size()) != *n)
                throw parse_error(line_no, "order has " + std::to_string(perm.size()) + " entries, expected " + std::to_string(*n));
            try {
                order = linear_order(std::move(perm));
            }
            catch (const std::invalid_argument &) {
                throw parse_error(line_no, "order is not a permutation");
            }
            continue;
        }
        else {
            throw parse_error(line_no, "unknown keyword '" + keyword + "'");
        }
        std::string trailing;
        if (ls >> trailing)
            throw parse_error(line_no, "unexpected trailing token '" + trailing + "'");
    }
    if (!n)
        throw parse_error(line_no, "missing n line");
    return {graph(*n, std::move(edges)), std::move(order)};
}

inline std::string format_graph(const graph &g, const linear_order *order = nullptr)
{
    std::ostringstream out;
    out << "n " << g.n() << '\n';
    for (const auto &e : g.edges())
        out << "edge " << e.u << ' ' << e.v << '\n';
    if (order) {
        out << "order";
        for (auto v : order->permutation())
            out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

inline bool is_vertex_cover(const graph &g, std::span<const vertex> cover)
{
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (auto c : cover)
        in.at(static_cast<std::size_t>(c)) = 1;
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const edge &e) { return in[e.u] || in[e.v]; });
}

namespace detail {

    // Can the edges still uncovered be covered with `budget` more vertices?
    inline bool cover_within(const graph &g, std::vector<char> &in, std::vector<vertex> &chosen, int budget)
    {
        const edge *open = nullptr;
        for (const auto &e : g.edges())
            if (!in[e.u] && !in[e.v]) {
                open = &e;
                break;
            }
        if (!open)
            return true;
        if (budget == 0)
            return false;
        for (vertex pick : {open->u, open->v}) {
            in[pick] = 1;
            chosen.push_back(pick);
            if (cover_within(g, in, chosen, budget - 1))
                return true;
            chosen.pop_back();
            in[pick] = 0;
        }
        return false;
    }

} // namespace detail

/// Minimum vertex cover by two-way branching on the lexicographically smallest
/// uncovered edge, with iterative deepening on the cover size. Returned sorted.
inline std::vector<vertex> minimum_vertex_cover(const graph &g)
{
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int budget = 0;; ++budget) {
        std::vector<vertex> chosen;
        if (detail::cover_within(g, in, chosen, budget)) {
            std::sort(chosen.begin(), chosen.end());
            return chosen;
        }
    }
}

/// Guard sets of (g, order), indexed by position. guards[i] lists the vertices
/// left of position i adjacent to the vertex at i or to something right of it,
/// nearest first.
struct guard_profile {
    std::vector<std::vector<vertex>> guards;
    int pathwidth = 0;
};

inline guard_profile compute_guard_profile(const graph &g, const linear_order &order)
{
    if (!order.covers(g))
        throw std::invalid_argument("order does not cover graph");
    const int n = g.n();
    // A vertex at position j guards every position in (j, last[j]], where
    // last[j] is its rightmost neighbour position.
    std::vector<int> last(static_cast<std::size_t>(n), -1);
    for (const auto &e : g.edges()) {
        int a = order.position(e.u), b = order.position(e.v);
        if (a > b)
            std::swap(a, b);
        last[static_cast<std::size_t>(a)] = std::max(last[static_cast<std::size_t>(a)], b);
    }
    guard_profile out;
    out.guards.resize(static_cast<std::size_t>(n));
    std::vector<int> active; // positions, increasing
    for (int i = 0; i < n; ++i) {
        std::erase_if(active, [&](int j) { return last[static_cast<std::size_t>(j)] < i; });
        auto &row = out.guards[static_cast<std::size_t>(i)];
        for (auto it = active.rbegin(); it != active.rend(); ++it)
            row.push_back(order.at(*it));
        out.pathwidth = std::max(out.pathwidth, static_cast<int>(row.size()));
        if (last[static_cast<std::size_t>(i)] > i)
            active.push_back(i);
    }
    return out;
}

/// Non-cover vertices grouped by neighbourhood. Keys are sorted neighbour lists
/// (subsets of the cover); members are sorted by index.
using type_classes = std::map<std::vector<vertex>, std::vector<vertex>>;

inline type_classes vertex_types(const graph &g, std::span<const vertex> cover)
{
    if (!is_vertex_cover(g, cover))
        throw std::invalid_argument("not a vertex cover");
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (auto c : cover)
        in[static_cast<std::size_t>(c)] = 1;
    type_classes classes;
    for (vertex v = 0; v < g.n(); ++v)
        if (!in[static_cast<std::size_t>(v)])
            classes[g.neighbors(v)].push_back(v);
    return classes;
}

} // namespace bookthick
