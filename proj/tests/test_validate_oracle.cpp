#include <gtest/gtest.h>

#include <bookthick/embedding.hpp>
#include <bookthick/generators.hpp>
#include <bookthick/oracle.hpp>
#include <bookthick/validate.hpp>

#include "brute_force.hpp"

using namespace bookthick;

namespace {

book_embedding one_page(const graph &g, linear_order order)
{
    return {std::move(order), page_assignment{1, std::vector<int>(g.m(), 1)}};
}

} // namespace

TEST(Validate, CycleInNaturalOrderIsOnePage)
{
    auto c4 = gen::cycle(4);
    EXPECT_TRUE(validate(c4, one_page(c4, linear_order::identity(4))).ok);
}

TEST(Validate, CompleteGraphReportsUniqueCrossing)
{
    auto k4 = gen::complete(4);
    auto report = validate(k4, one_page(k4, linear_order::identity(4)));
    EXPECT_FALSE(report.ok);
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_EQ(report.violations[0].first, edge(0, 2));
    EXPECT_EQ(report.violations[0].second, edge(1, 3));
}

TEST(Validate, SharedEndpointNeverCrosses)
{
    auto s = gen::star(7);
    EXPECT_TRUE(validate(s, one_page(s, gen::random_order(8, 5))).ok);
}

TEST(Validate, RejectsPartialAssignments)
{
    auto k4 = gen::complete(4);
    book_embedding emb{linear_order::identity(4), page_assignment{1, std::vector<int>(k4.m(), 1)}};
    emb.assignment.pages[2] = 0;
    EXPECT_THROW(validate(k4, emb), std::invalid_argument);
    emb.assignment.pages[2] = 2;
    EXPECT_THROW(validate(k4, emb), std::invalid_argument);
    EXPECT_THROW(validate(k4, one_page(k4, linear_order::identity(3))), std::invalid_argument);
}

TEST(Validate, ViolationsAreGenuineAndOrdered)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = gen::random_graph(9, 0.5, seed);
        auto order = gen::random_order(9, seed + 100);
        book_embedding emb{order, page_assignment{2, {}}};
        for (std::size_t i = 0; i < g.m(); ++i)
            emb.assignment.pages.push_back(1 + static_cast<int>((i * 7 + seed) % 2));
        auto report = validate(g, emb);
        EXPECT_EQ(report.ok, report.violations.empty());
        EXPECT_TRUE(std::is_sorted(report.violations.begin(), report.violations.end()));
        auto pos = brute::positions(order.permutation());
        for (const auto &[e, f] : report.violations)
            EXPECT_TRUE(brute::cross(pos, e, f));
    }
}

TEST(ConflictGraph, Examples)
{
    auto k4 = conflict_graph{build_conflict_graph(gen::complete(4), linear_order::identity(4))};
    EXPECT_EQ(k4.edge_count(), 1u);
    EXPECT_EQ(build_conflict_graph(gen::path(6), linear_order::identity(6)).edge_count(), 0u);

    // The 5-cycle is outerplanar in its natural order; the pentagram order
    // turns the conflict graph into a 5-cycle.
    auto c5 = gen::cycle(5);
    EXPECT_EQ(build_conflict_graph(c5, linear_order::identity(5)).edge_count(), 0u);
    auto star_order = build_conflict_graph(c5, linear_order({0, 2, 4, 1, 3}));
    EXPECT_EQ(star_order.edge_count(), 5u);
    for (const auto &row : star_order.adjacency)
        EXPECT_EQ(row.size(), 2u);
}

TEST(ConflictGraph, SymmetricIrreflexiveExact)
{
    auto g = gen::random_graph(8, 0.5, 11);
    auto order = gen::random_order(8, 12);
    auto cg = build_conflict_graph(g, order);
    auto pos = brute::positions(order.permutation());
    for (std::size_t a = 0; a < g.m(); ++a) {
        EXPECT_FALSE(cg.adjacent(a, a));
        for (std::size_t b = 0; b < g.m(); ++b)
            if (a != b) {
                EXPECT_EQ(cg.adjacent(a, b), cg.adjacent(b, a));
                EXPECT_EQ(cg.adjacent(a, b), brute::cross(pos, g.edge_at(a), g.edge_at(b)));
            }
    }
}

TEST(TwoPage, Examples)
{
    auto k4 = gen::complete(4);
    auto a = two_page_fixed_order(k4, linear_order::identity(4));
    ASSERT_TRUE(a);
    EXPECT_TRUE(validate(k4, {linear_order::identity(4), *a}).ok);
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        EXPECT_FALSE(two_page_fixed_order(gen::complete(5), gen::random_order(5, seed)));
    auto empty = two_page_fixed_order(graph(3, {}), linear_order::identity(3));
    ASSERT_TRUE(empty);
    EXPECT_EQ(empty->k, 0);
    auto path = two_page_fixed_order(gen::path(4), linear_order::identity(4));
    ASSERT_TRUE(path);
    EXPECT_EQ(path->k, 1);
}

TEST(TwoPage, AgreesWithOracleOnSmallGraphs)
{
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t mask = 0; mask < (1ull << (n * (n - 1) / 2)); mask += (n == 6 ? 7 : 1)) {
            auto g = gen::from_mask(n, mask);
            std::vector<linear_order> orders{linear_order::identity(n)};
            for (std::uint64_t s = 0; s < 3; ++s)
                orders.push_back(gen::random_order(n, mask * 3 + s));
            for (const auto &order : orders) {
                auto fast = two_page_fixed_order(g, order);
                auto exact = fobt_oracle(g, order, 2);
                ASSERT_EQ(fast.has_value(), exact.has_value()) << "n=" << n << " mask=" << mask;
                if (fast) {
                    ASSERT_TRUE(validate(g, {order, *fast}).ok);
                }
            }
        }
}

TEST(FobtOracle, FrozenValues)
{
    auto k4 = gen::complete(4);
    EXPECT_TRUE(fobt_oracle(k4, linear_order::identity(4), 2));
    EXPECT_FALSE(fobt_oracle(k4, linear_order::identity(4), 1));
    auto c4 = gen::cycle(4);
    linear_order crossed({0, 2, 1, 3});
    EXPECT_TRUE(fobt_oracle(c4, crossed, 2));
    EXPECT_FALSE(fobt_oracle(c4, crossed, 1));
    EXPECT_TRUE(fobt_oracle(gen::star(5), gen::random_order(6, 1), 1));
}

TEST(FobtOracle, MatchesExhaustiveEnumeration)
{
    for (int n = 2; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < (1ull << (n * (n - 1) / 2)); ++mask) {
            auto g = gen::from_mask(n, mask);
            auto order = gen::random_order(n, mask + 17);
            for (int k = 1; k <= 3; ++k) {
                auto a = fobt_oracle(g, order, k);
                ASSERT_EQ(a.has_value(), brute::fixed_order_feasible(g, order.permutation(), k));
                if (a) {
                    ASSERT_TRUE(validate(g, {order, *a}).ok);
                    ASSERT_LE(a->max_page(), k);
                }
            }
        }
}

TEST(FobtOracle, MonotoneInPages)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = gen::random_graph(8, 0.6, seed);
        auto order = gen::random_order(8, seed);
        bool before = false;
        for (int k = 1; k <= 5; ++k) {
            bool now = fobt_oracle(g, order, k).has_value();
            EXPECT_TRUE(!before || now);
            before = now;
        }
    }
}

TEST(BtOracle, FrozenValues)
{
    auto k5 = gen::complete(5);
    auto three = bt_oracle(k5, 3);
    ASSERT_TRUE(three);
    EXPECT_TRUE(validate(k5, *three).ok);
    EXPECT_FALSE(bt_oracle(k5, 2));

    auto k23 = gen::complete_bipartite(2, 3);
    EXPECT_TRUE(bt_oracle(k23, 2));
    EXPECT_FALSE(bt_oracle(k23, 1));

    graph tree(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    auto t = bt_oracle(tree, 1);
    ASSERT_TRUE(t);
    EXPECT_TRUE(validate(tree, *t).ok);
}

TEST(BtOracle, MatchesAllPermutationsOnSmallGraphs)
{
    for (int n = 2; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < (1ull << (n * (n - 1) / 2)); mask += 3) {
            auto g = gen::from_mask(n, mask);
            const int expected = brute::bt(g);
            for (int k = 1; k <= 3; ++k) {
                auto emb = bt_oracle(g, k);
                ASSERT_EQ(emb.has_value(), expected <= k) << "n=" << n << " mask=" << mask << " k=" << k;
                if (emb) {
                    ASSERT_TRUE(validate(g, *emb).ok);
                    ASSERT_TRUE(fobt_oracle(g, emb->order, k));
                }
            }
        }
}

TEST(BtOracle, ParallelSearchIsDeterministic)
{
    auto g = gen::random_graph(8, 0.55, 4);
    for (int k = 1; k <= 3; ++k) {
        auto serial = bt_oracle(g, k, 1);
        auto parallel = bt_oracle(g, k, 4);
        ASSERT_EQ(serial.has_value(), parallel.has_value());
        if (serial) {
            EXPECT_EQ(serial->order, parallel->order);
            EXPECT_EQ(serial->assignment, parallel->assignment);
        }
    }
}

TEST(BtOracle, NeverBeatsAnyFixedOrder)
{
    for (std::uint64_t mask = 0; mask < 1024; mask += 5) {
        auto g = gen::from_mask(5, mask);
        int bt = 0;
        while (!bt_oracle(g, bt))
            ++bt;
        for (std::uint64_t s = 0; s < 4; ++s) {
            auto order = gen::random_order(5, s + mask);
            int k = 0;
            while (!fobt_oracle(g, order, k))
                ++k;
            EXPECT_GE(k, bt);
        }
    }
}

TEST(EmbeddingDocument, RoundTripAndErrors)
{
    auto k4 = gen::complete(4);
    book_embedding emb{linear_order({3, 1, 0, 2}), *fobt_oracle(k4, linear_order({3, 1, 0, 2}), 2)};
    auto text = write_embedding_document(k4, emb);
    auto doc = read_embedding_document(text);
    EXPECT_EQ(doc.g.edges(), k4.edges());
    EXPECT_EQ(doc.embedding.order, emb.order);
    EXPECT_EQ(doc.embedding.assignment, emb.assignment);

    EXPECT_THROW(read_embedding_document(text.substr(0, text.size() / 2)), document_error);
    EXPECT_THROW(read_embedding_document(R"({"n": 2, "k": 1, "order": [0, 1]})"), document_error);
    EXPECT_THROW(read_embedding_document(R"({"n": 2, "k": 1, "order": [0, 0], "pages": []})"), document_error);
    EXPECT_THROW(read_embedding_document(R"({"n": 2, "k": 1, "order": [0, 1], "pages": [[0, 1, 1], [1, 0, 1]]})"), document_error);
    EXPECT_THROW(read_embedding_document(R"({"n": 2, "k": 1, "order": [0, 1], "pages": [[0, 2, 1]]})"), document_error);
}
