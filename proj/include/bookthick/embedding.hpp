#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "graph.hpp"

namespace bookthick {

/// Page of every edge of a graph, parallel to graph::edges(). Pages are
/// 1-based; 0 marks an edge left unassigned in a partial assignment.
struct page_assignment {
    int k = 0;
    std::vector<int> pages;

    int pages_used() const
    {
        std::set<int> used(pages.begin(), pages.end());
        used.erase(0);
        return static_cast<int>(used.size());
    }
    int max_page() const { return pages.empty() ? 0 : *std::max_element(pages.begin(), pages.end()); }

    bool total() const
    {
        return std::all_of(pages.begin(), pages.end(), [&](int p) { return p >= 1 && p <= k; });
    }

    bool operator==(const page_assignment &) const = default;
};

struct book_embedding {
    linear_order order;
    page_assignment assignment;
};

/// Embedding document: a graph together with its book embedding.
///
/// Serialised as JSON:
///   {"n": 4, "k": 2, "order": [0, 1, 2, 3], "pages": [[0, 1, 1], [0, 2, 2], ...]}
/// Each pages entry is (u, v, page); the edge set of the graph is exactly the
/// set of listed pairs. Entries are written sorted by (u, v) with u < v.
struct embedding_document {
    graph g;
    book_embedding embedding;
};

class document_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline nlohmann::json to_json(const graph &g, const book_embedding &emb)
{
    nlohmann::json doc;
    doc["n"] = g.n();
    doc["k"] = emb.assignment.k;
    doc["order"] = emb.order.permutation();
    auto pages = nlohmann::json::array();
    for (std::size_t i = 0; i < g.m(); ++i) {
        const auto &e = g.edge_at(i);
        pages.push_back({e.u, e.v, emb.assignment.pages.at(i)});
    }
    doc["pages"] = std::move(pages);
    return doc;
}

inline std::string write_embedding_document(const graph &g, const book_embedding &emb)
{
    return to_json(g, emb).dump() + "\n";
}

inline embedding_document read_embedding_document(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error &e) {
        throw document_error(std::string("malformed embedding document: ") + e.what());
    }
    try {
        if (!doc.is_object())
            throw document_error("embedding document must be an object");
        for (const char *field : {"n", "k", "order", "pages"})
            if (!doc.contains(field))
                throw document_error(std::string("missing field '") + field + "'");
        const int n = doc.at("n").get<int>();
        const int k = doc.at("k").get<int>();
        if (n < 0 || k < 0)
            throw document_error("n and k must be non-negative");
        auto perm = doc.at("order").get<std::vector<int>>();
        if (static_cast<int>(perm.size()) != n)
            throw document_error("order length differs from n");
        linear_order order;
        try {
            order = linear_order(std::move(perm));
        }
        catch (const std::invalid_argument &) {
            throw document_error("order is not a permutation");
        }

        std::vector<std::pair<edge, int>> listed;
        for (const auto &entry : doc.at("pages")) {
            if (!entry.is_array() || entry.size() != 3)
                throw document_error("pages entries must be [u, v, page]");
            int u = entry[0].get<int>(), v = entry[1].get<int>(), p = entry[2].get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw document_error("bad edge in pages: " + entry.dump());
            listed.emplace_back(edge(u, v), p);
        }
        std::vector<edge> edges;
        for (const auto &[e, p] : listed)
            edges.push_back(e);
        graph g;
        try {
            g = graph(n, edges);
        }
        catch (const std::invalid_argument &e) {
            throw document_error(e.what());
        }
        page_assignment assignment{k, std::vector<int>(g.m(), 0)};
        for (const auto &[e, p] : listed)
            assignment.pages[*g.edge_index(e.u, e.v)] = p;
        return {std::move(g), {std::move(order), std::move(assignment)}};
    }
    catch (const nlohmann::json::exception &e) {
        throw document_error(std::string("malformed embedding document: ") + e.what());
    }
}

} // namespace bookthick
