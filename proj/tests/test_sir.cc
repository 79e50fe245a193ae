/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fraisse/katetov.hh>
#include <fraisse/sir.hh>

#include "helpers.hh"

#include <random>

using namespace fraisse;
using namespace fraisse::test;

namespace
{
    auto subsets(const VertexSet & x) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        for (unsigned long mask = 0; mask < (1UL << x.size()); ++mask) {
            VertexSet s;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (mask >> i & 1)
                    s.push_back(x[i]);
            out.push_back(s);
        }
        return out;
    }

    auto minus(const VertexSet & a, const VertexSet & c) -> VertexSet
    {
        VertexSet r;
        for (auto v : a)
            if (! contains(c, v))
                r.push_back(v);
        return r;
    }

    // the graph conditions written out directly
    auto free_oracle(const Structure & m, const VertexSet & a, const VertexSet & b, const VertexSet & c) -> bool
    {
        for (auto u : minus(a, c))
            for (auto v : minus(b, c))
                if (u == v || m.related(m.at(u), m.at(v)))
                    return false;
        return true;
    }

    auto complete_oracle(const Structure & m, const VertexSet & a, const VertexSet & b, const VertexSet & c) -> bool
    {
        for (auto u : minus(a, c))
            for (auto v : minus(b, c))
                if (u == v || ! m.related(m.at(u), m.at(v)))
                    return false;
        return true;
    }

    auto metric_oracle(const Structure & m, const VertexSet & a, const VertexSet & b, const VertexSet & c) -> bool
    {
        for (auto u : minus(a, c))
            for (auto v : minus(b, c)) {
                if (u == v)
                    return false;
                std::optional<Rational> best;
                for (auto w : c) {
                    auto s = m.distance(m.at(u), m.at(w)) + m.distance(m.at(w), m.at(v));
                    if (! best || s < *best)
                        best = s;
                }
                if (m.distance(m.at(u), m.at(v)) != *best)
                    return false;
            }
        return true;
    }

    auto random_graph(int n, double p, std::mt19937_64 & rng) -> Structure
    {
        Edges e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::bernoulli_distribution(p)(rng))
                    e.emplace_back(i, j);
        return graph(n, e);
    }

    auto random_subset(const VertexSet & from, double p, std::mt19937_64 & rng) -> VertexSet
    {
        VertexSet s;
        for (auto v : from)
            if (std::bernoulli_distribution(p)(rng))
                s.push_back(v);
        return s;
    }
}

TEST_CASE("kind names")
{
    CHECK(parse_sir_kind("free-graph") == SirKind::free_graph());
    CHECK(parse_sir_kind("ngon-strong", 4) == SirKind::ngon_strong(4));
    CHECK(parse_sir_kind(to_string(SirKind::min_metric())) == SirKind::min_metric());
    CHECK_THROWS(parse_sir_kind("tree"));
    CHECK(SirKind::min_metric().local());
    CHECK_FALSE(SirKind::poset_amalgam().local());
}

TEST_CASE("graph examples")
{
    auto apart = graph(2, {});
    auto joined = graph(2, {{0, 1}});
    CHECK(indep(SirKind::free_graph(), apart, {0}, {1}, {}));
    CHECK_FALSE(indep(SirKind::free_graph(), joined, {0}, {1}, {}));
    CHECK_FALSE(indep(SirKind::complete_graph(), apart, {0}, {1}, {}));
    CHECK(indep(SirKind::complete_graph(), joined, {0}, {1}, {}));

    // overlap outside the base
    CHECK_FALSE(indep(SirKind::free_graph(), apart, {0}, {0}, {}));
    CHECK(indep(SirKind::free_graph(), apart, {0}, {0}, {}, Variant::overlap_blind));

    CHECK_THROWS_AS(indep(SirKind::poset_amalgam(), apart, {0}, {1}, {}), ClassMismatch);
}

TEST_CASE("graph relations agree with the direct conditions")
{
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; ++t) {
        auto m = random_graph(7, 0.5, rng);
        auto ids = m.vertex_set();
        auto a = random_subset(ids, 0.3, rng), b = random_subset(ids, 0.3, rng), c = random_subset(ids, 0.3, rng);
        CHECK(indep(SirKind::free_graph(), m, a, b, c) == free_oracle(m, a, b, c));
        CHECK(indep(SirKind::complete_graph(), m, a, b, c) == complete_oracle(m, a, b, c));
    }
}

TEST_CASE("poset amalgam")
{
    // a < c < b
    auto chain = poset(3, {{0, 2}, {2, 1}, {0, 1}});
    CHECK(indep(SirKind::poset_amalgam(), chain, {0}, {1}, {2}));
    // a < b with nothing between them
    auto pair = poset(3, {{0, 1}});
    CHECK_FALSE(indep(SirKind::poset_amalgam(), pair, {0}, {1}, {2}));
    CHECK(indep(SirKind::poset_amalgam(), pair, {2}, {0}, {}));
    // incomparable points over an empty base
    CHECK(indep(SirKind::poset_amalgam(), poset(2, {}), {0}, {1}, {}));
}

TEST_CASE("metric minimum")
{
    auto m = metric({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    CHECK(indep(SirKind::min_metric(), m, {0}, {2}, {1}));
    auto short_cut = metric({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK_FALSE(indep(SirKind::min_metric(), short_cut, {0}, {2}, {1}));
    CHECK_THROWS_AS(indep(SirKind::min_metric(), m, {0}, {2}, {}), EmptyBase);

    std::mt19937_64 rng(2);
    auto ambient = saturate(SaturationRecipe::standard(SirKind::min_metric(), 3)).levels.at(2);
    auto ids = ambient.vertex_set();
    for (int t = 0; t < 200; ++t) {
        auto a = random_subset(ids, 0.25, rng), b = random_subset(ids, 0.25, rng), c = random_subset(ids, 0.25, rng);
        if (c.empty())
            continue;
        CHECK(indep(SirKind::min_metric(), ambient, a, b, c) == metric_oracle(ambient, a, b, c));
    }
}

TEST_CASE("base swallowing B")
{
    std::mt19937_64 rng(4);
    auto m = random_graph(6, 0.5, rng);
    for (auto kind : {SirKind::free_graph(), SirKind::complete_graph()})
        CHECK(indep(kind, m, {0, 1}, {2, 3}, {2, 3, 4}));
    CHECK(indep(SirKind::poset_amalgam(), poset(4, {{0, 1}, {1, 2}, {0, 2}}), {0, 3}, {2}, {2, 1}));
    CHECK(indep(SirKind::min_metric(), metric({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}}), {0}, {2}, {2}));
}

TEST_CASE("n-gon strong independence on the hexagon")
{
    auto hex = ngon_path(3, 6, true);
    // <AC> and <BC> are paths 0-1-2 and 1-2-3; <ABC> is the path 0-1-2-3
    // with no more edges, so the free amalgam is all of it
    CHECK(generated(hex, {0, 1, 2, 3}) == VertexSet{0, 1, 2, 3});
    CHECK(indep(SirKind::ngon_strong(3), hex, {0}, {3}, {1, 2}));
    // over the empty base: <AB> = {0, 3} has no edges either way
    CHECK(indep(SirKind::ngon_strong(3), hex, {0}, {3}, {}));
    // adjacent points are never free over the empty base
    CHECK_FALSE(indep(SirKind::ngon_strong(3), hex, {0}, {1}, {}));
    // the hexagon itself over {0, 3}: two 3-paths glued, chi 6 - 6 - 4 + 4
    CHECK(indep(SirKind::ngon_strong(3), hex, {1, 2}, {4, 5}, {0, 3}));
}

TEST_CASE("independence over a set matches the exhaustive definition")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        auto m = random_graph(8, 0.4, rng);
        auto ids = m.vertex_set();
        auto a = random_subset(ids, 0.25, rng), b = random_subset(ids, 0.25, rng);
        auto x = random_subset(ids, 0.6, rng);
        if (x.size() > 6)
            x.resize(6);
        for (auto kind : {SirKind::free_graph(), SirKind::complete_graph()}) {
            bool oracle = false;
            for (auto & c : subsets(x)) {
                bool all = true;
                for (auto & cp : subsets(x))
                    if (is_subset(c, cp) && ! indep(kind, m, a, b, cp))
                        all = false;
                if (all) {
                    oracle = true;
                    break;
                }
            }
            auto r = indep_over_set(kind, m, a, b, x);
            CHECK(r.independent == oracle);
            if (r.independent) {
                CHECK(is_subset(r.witness, x));
                for (auto & cp : subsets(x))
                    if (is_subset(r.witness, cp))
                        CHECK(indep(kind, m, a, b, cp));
            }
        }
    }

    auto m = graph(3, {{0, 1}});
    auto single = indep_over_set(SirKind::free_graph(), m, {0}, {1}, {2});
    CHECK_FALSE(single.independent);
    auto overlap = indep_over_set(SirKind::free_graph(), graph(3, {}), {0}, {0}, {1, 2});
    CHECK_FALSE(overlap.independent);
}

TEST_CASE("supports")
{
    // vertex 0 adjacent to 1 and 3 inside X = {1, 2, 3}
    auto m = graph(5, {{0, 1}, {0, 3}, {2, 4}});
    auto s = find_support(SirKind::free_graph(), m, {0}, {1, 2, 3});
    REQUIRE(s);
    CHECK(*s == VertexSet{1, 3});

    auto none = find_support(SirKind::free_graph(), m, {4}, {1, 3});
    REQUIRE(none);
    CHECK(none->empty());

    std::mt19937_64 rng(6);
    auto ambient = saturate(SaturationRecipe::standard(SirKind::min_metric(), 1)).levels.at(2);
    auto ids = ambient.vertex_set();
    for (int t = 0; t < 40; ++t) {
        VertexSet x = random_subset(ids, 0.5, rng);
        if (x.size() < 2)
            continue;
        x.resize(2);
        VertexSet a{ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)]};
        auto found = find_support(SirKind::min_metric(), ambient, a, x);

        // smallest C inside X, nonempty, with A free from X over C
        std::optional<VertexSet> oracle;
        for (auto & c : subsets(x)) {
            if (c.empty() || ! indep(SirKind::min_metric(), ambient, a, x, c))
                continue;
            if (! oracle || c.size() < oracle->size())
                oracle = c;
        }
        REQUIRE(found.has_value() == oracle.has_value());
        if (found) {
            CHECK(found->size() == oracle->size());
            CHECK(indep(SirKind::min_metric(), ambient, a, x, *found));
        }
    }
}

TEST_CASE("strong independence keeps closures apart")
{
    // whenever A is free from B and D together over C, the closures of ABC
    // and BCD meet exactly in the closure of BC
    auto ambient = saturate(SaturationRecipe::standard(SirKind::ngon_strong(3), 2)).last();
    auto kind = SirKind::ngon_strong(3);
    auto dist = distance_matrix(ambient);
    std::mt19937_64 rng(8);
    int exercised = 0;
    for (int t = 0; t < 400 && exercised < 40; ++t) {
        int centre = std::uniform_int_distribution<int>(0, ambient.size() - 1)(rng);
        VertexSet ball;
        for (int i = 0; i < ambient.size(); ++i)
            if (dist[centre][i] >= 0 && dist[centre][i] <= 2)
                ball.push_back(ambient.id(i));
        auto pick = [&](int lo) {
            VertexSet s;
            while (static_cast<int>(s.size()) < lo)
                s = random_subset(ball, 0.3, rng);
            if (s.size() > 2)
                s.resize(2);
            return s;
        };
        auto a = pick(1), b = pick(1), c = pick(0), d = pick(0);
        try {
            if (! indep(kind, ambient, a, set_union(b, d), c))
                continue;
            ++exercised;
            auto abc = generated(ambient, set_union(set_union(a, b), c));
            auto bcd = generated(ambient, set_union(set_union(b, c), d));
            VertexSet meet;
            for (auto v : abc)
                if (contains(bcd, v))
                    meet.push_back(v);
            CHECK(meet == generated(ambient, set_union(b, c)));
        }
        catch (const DepthInsufficient &) {
        }
    }
    CHECK(exercised > 5);
}
