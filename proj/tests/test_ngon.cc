/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fraisse/ngon.hh>

#include "helpers.hh"

#include <random>

using namespace fraisse;
using namespace fraisse::test;

namespace
{
    constexpr int inf = 1 << 20;

    // Floyd-Warshall on the edge relation.
    auto all_distances(const Structure & g) -> std::vector<std::vector<int>>
    {
        int n = g.size();
        std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
        for (int i = 0; i < n; ++i) {
            d[i][i] = 0;
            for (int j = 0; j < n; ++j)
                if (i != j && g.related(i, j))
                    d[i][j] = 1;
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        return d;
    }

    // Minimum over every vertex subset H of Y of chi(H) - chi(H & X), where
    // H & X keeps X's own edges. Counts edges directly.
    auto brute_min_rel_chi(int n, const Structure & x, const Structure & y) -> long
    {
        long best = 0;
        int m = y.size();
        for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
            long vh = 0, eh = 0, vx = 0, ex = 0;
            for (int i = 0; i < m; ++i) {
                if (! (mask >> i & 1))
                    continue;
                ++vh;
                bool in_x = x.has(y.id(i));
                vx += in_x;
                for (int j = i + 1; j < m; ++j) {
                    if (! (mask >> j & 1))
                        continue;
                    eh += y.related(i, j);
                    if (in_x && x.has(y.id(j)))
                        ex += x.related(*x.index_of(y.id(i)), *x.index_of(y.id(j)));
                }
            }
            best = std::min(best, ((n - 1) * vh - (n - 2) * eh) - ((n - 1) * vx - (n - 2) * ex));
        }
        return best;
    }

    auto random_tree(int n, int vertices, std::mt19937_64 & rng) -> Structure
    {
        Edges e;
        std::vector<int> parts(vertices, 0);
        for (int v = 1; v < vertices; ++v) {
            int p = std::uniform_int_distribution<int>(0, v - 1)(rng);
            e.emplace_back(p, v);
            parts[v] = parts[p] ^ 1;
        }
        return ngon_graph(n, vertices, e, parts);
    }
}

TEST_CASE("graph metrics")
{
    auto hex = ngon_path(3, 6, true);
    CHECK(diameter(hex) == 3);
    CHECK(girth(hex) == 6);

    auto path = ngon_path(3, 5, false);
    CHECK(graph_metric(path, 0, 4) == 4);
    CHECK_FALSE(girth(path).has_value());

    auto point = ngon_path(3, 1, false);
    CHECK(diameter(point) == 0);
    CHECK_FALSE(girth(point).has_value());

    CHECK_FALSE(diameter(ngon_graph(3, 2, {}, {0, 1})).has_value());
}

TEST_CASE("graph metric agrees with Floyd-Warshall on random trees")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        auto g = random_tree(4, 9, rng);
        auto d = all_distances(g);
        for (int i = 0; i < g.size(); ++i)
            for (int j = 0; j < g.size(); ++j)
                CHECK(graph_metric(g, g.id(i), g.id(j)).value_or(inf) == d[i][j]);
    }
}

TEST_CASE("f_k path functions")
{
    auto hex = ngon_path(3, 6, true);
    CHECK(eval_fk(hex, 1, 0, 1).value == 1);
    CHECK(eval_fk(hex, 0, 0, 2).value == 0);
    CHECK(eval_fk(hex, 1, 0, 2).value == 1);
    CHECK(eval_fk(hex, 2, 0, 2).value == 2);

    // opposite vertices are at distance n: two shortest paths, fallback x
    auto opp = eval_fk(hex, 1, 0, 3);
    CHECK(opp.value == 0);
    CHECK(opp.depth_caveat);

    CHECK_THROWS(eval_fk(hex, 4, 0, 1));
}

TEST_CASE("closure under the path functions")
{
    auto hex = ngon_path(3, 6, true);
    CHECK(generated(hex, {0, 2}) == VertexSet{0, 1, 2});
    CHECK(generated(hex, hex.vertex_set()) == hex.vertex_set());
    CHECK(generated(hex, {0, 3}) == VertexSet{0, 3});

    SUBCASE("closure operator laws")
    {
        auto g = ngon_path(4, 8, true);
        std::vector<VertexSet> samples{{0}, {0, 2}, {0, 2, 5}, {1, 3}, {0, 4}, {2, 4, 6}};
        for (auto & s : samples) {
            auto c = generated(g, s);
            CHECK(is_subset(s, c));
            CHECK(generated(g, c) == c);
            for (auto & t : samples)
                if (is_subset(s, t))
                    CHECK(is_subset(c, generated(g, t)));
        }
    }

    SUBCASE("far pairs need a deeper fragment")
    {
        auto path = ngon_path(3, 6, false);
        CHECK_THROWS_AS(generated(path, {0, 5}), DepthInsufficient);
    }
}

TEST_CASE("Euler characteristic")
{
    Edges k6;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            k6.emplace_back(i, j);
    auto k = graph(6, k6);
    CHECK(k.edge_count() == 15);
    CHECK(chi(3, k) == 2 * 6 - 15);
    CHECK(chi(3, graph(0, {})) == 0);

    for (int n = 3; n <= 6; ++n) {
        // a path of length n - 1 over its two endpoints
        auto p = ngon_path(n, n, false);
        CHECK(rel_chi(n, p, {0, n - 1}) == 0);
    }
}

TEST_CASE("n-strong examples")
{
    auto x = ngon_graph(3, 2, {}, {0, 0});
    StructureBuilder b(ClassTag::ngon(3));
    b.add_vertex(0, 0);
    b.add_vertex(1, 0);
    b.add_vertex(2, 1);
    b.set_related(0, 2);
    b.set_related(2, 1);
    auto y = std::move(b).build();
    auto cert = is_n_strong(3, x, y);
    CHECK(cert.verdict);
    CHECK(cert.minimum == 0);

    CHECK(is_n_strong(3, y, y).verdict);

    Edges k6;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            k6.emplace_back(i, j);
    StructureBuilder kb(ClassTag::ngon(3));
    for (int i = 0; i < 6; ++i)
        kb.add_vertex(i);
    for (auto [u, v] : k6)
        kb.set_related(u, v);
    auto k = kb.build();
    auto bad = is_n_strong(3, Structure(ClassTag::ngon(3)), k);
    CHECK_FALSE(bad.verdict);
    CHECK(bad.minimum == -3);
    CHECK(bad.witness == k.vertex_set());
    CHECK(rel_chi(3, induced(k, bad.witness), {}) == -3);
}

TEST_CASE("reduced n-strong search equals the unreduced brute force")
{
    // every graph Y on up to 5 vertices, every vertex subset X, induced and
    // with edges dropped
    for (int n : {3, 4})
        for (int m = 1; m <= 5; ++m) {
            int pairs = m * (m - 1) / 2;
            for (unsigned emask = 0; emask < (1u << pairs); ++emask) {
                StructureBuilder yb(ClassTag::ngon(n));
                for (int i = 0; i < m; ++i)
                    yb.add_vertex(i);
                int bit = 0;
                Edges edges;
                for (int i = 0; i < m; ++i)
                    for (int j = i + 1; j < m; ++j, ++bit)
                        if (emask >> bit & 1) {
                            yb.set_related(i, j);
                            edges.emplace_back(i, j);
                        }
                auto y = yb.build();
                for (unsigned xmask = 0; xmask < (1u << m); ++xmask) {
                    VertexSet xs;
                    for (int i = 0; i < m; ++i)
                        if (xmask >> i & 1)
                            xs.push_back(i);
                    auto x = induced(y, xs);
                    StrongConfig reduced, full;
                    full.unreduced = true;
                    auto r = is_n_strong(n, x, y, reduced), f = is_n_strong(n, x, y, full);
                    auto oracle = brute_min_rel_chi(n, x, y);
                    CHECK(r.minimum == oracle);
                    CHECK(f.minimum == oracle);
                    CHECK(r.verdict == (oracle >= 0));

                    // drop X's first internal edge
                    Edges kept;
                    bool dropped = false;
                    for (auto [u, v] : edges)
                        if (x.has(u) && x.has(v)) {
                            if (dropped)
                                kept.emplace_back(u, v);
                            dropped = true;
                        }
                    if (dropped) {
                        auto thin = subgraph_with_edges(y, xs, kept);
                        CHECK(is_n_strong(n, thin, y).minimum == brute_min_rel_chi(n, thin, y));
                    }
                }
            }
        }
}

TEST_CASE("reduced n-strong search on random larger graphs")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        int m = std::uniform_int_distribution<int>(6, 10)(rng);
        StructureBuilder yb(ClassTag::ngon(3));
        for (int i = 0; i < m; ++i)
            yb.add_vertex(i);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (std::bernoulli_distribution(0.35)(rng))
                    yb.set_related(i, j);
        auto y = yb.build();
        VertexSet xs;
        for (int i = 0; i < m; ++i)
            if (std::bernoulli_distribution(0.4)(rng))
                xs.push_back(i);
        auto x = induced(y, xs);
        CHECK(is_n_strong(3, x, y).minimum == brute_min_rel_chi(3, x, y));
    }
}

TEST_CASE("free completion")
{
    auto path = ngon_path(3, 5, false);
    REQUIRE(frontier(path) == std::vector<std::pair<VertexId, VertexId>>{{0, 4}});

    auto step = free_completion_step(path);
    CHECK(step.result.size() == 6);
    CHECK(step.result.edge_count() == 6);
    CHECK(girth(step.result) == 6);
    CHECK(diameter(step.result) == 3);
    CHECK(step.result.depth() == path.depth() + 1);
    REQUIRE(step.paths.size() == 1);
    CHECK(step.paths[0].interior.size() == 1);
    CHECK(rel_chi(3, induced(step.result, set_union(step.paths[0].interior, {0, 4})), {0, 4}) == 0);

    auto hex = ngon_path(3, 6, true);
    CHECK(free_completion_step(hex).result == hex);

    auto report = free_completion(path, 1);
    CHECK(report.fixpoint);
    CHECK(report.result.size() == 6);
    CHECK(free_completion(path, 0).result == path);
}

TEST_CASE("completion preserves girth and strength, and replays")
{
    std::mt19937_64 rng(3);
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
        int n = t % 2 ? 4 : 3;
        auto g = random_tree(n, std::uniform_int_distribution<int>(3, 8)(rng), rng);
        auto step = free_completion_step(g);
        CHECK(girth(step.result).value_or(inf) >= 2 * n);
        if (step.result.size() - g.size() > 18)
            continue;
        ++checked;
        CHECK(is_n_strong(n, g, step.result).verdict);
        CHECK(is_free_completion_of(step.result, g.vertex_set(), 1));

        // a subset that is not n-strong is not a completion seed
        auto ids = step.result.vertex_set();
        for (int s = 0; s < 4; ++s) {
            VertexSet xs;
            for (auto v : ids)
                if (std::bernoulli_distribution(0.5)(rng))
                    xs.push_back(v);
            auto x = induced(step.result, xs);
            if (is_n_strong(n, x, step.result).verdict)
                continue;
            bool replayed = false;
            try {
                replayed = is_free_completion_of(step.result, xs, 2);
            }
            catch (const DepthInsufficient &) {
            }
            CHECK_FALSE(replayed);
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("replay oracle examples")
{
    auto hex = ngon_path(3, 6, true);
    CHECK(is_free_completion_of(hex, {0, 1, 2, 3, 4}, 1));
    CHECK(is_free_completion_of(hex, hex.vertex_set(), 0));
    CHECK(is_n_strong(3, induced(hex, {0, 3}), hex).verdict);
    CHECK_FALSE(is_free_completion_of(hex, {0, 3}, 2));
}
