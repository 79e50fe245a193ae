/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef FRAISSE_GUARD_TESTS_HELPERS_HH
#define FRAISSE_GUARD_TESTS_HELPERS_HH 1

#include <fraisse/amalgam.hh>
#include <fraisse/sir.hh>
#include <fraisse/structure.hh>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace fraisse::test
{
    using Edges = std::vector<std::pair<VertexId, VertexId>>;

    inline auto graph(int vertices, const Edges & edges) -> Structure
    {
        StructureBuilder b(ClassTag::graph());
        for (int i = 0; i < vertices; ++i)
            b.add_vertex(i);
        for (auto [u, v] : edges)
            b.set_related(u, v);
        return std::move(b).build();
    }

    /// Graph on the vertices of a bitmask-encoded edge set over 0..n-1.
    inline auto graph_from_mask(int n, unsigned mask) -> Structure
    {
        Edges e;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (mask & (1u << bit))
                    e.emplace_back(i, j);
        return graph(n, e);
    }

    /// Order relation given by its strict pairs a < b.
    inline auto poset(int vertices, const Edges & less) -> Structure
    {
        StructureBuilder b(ClassTag::poset());
        for (int i = 0; i < vertices; ++i)
            b.add_vertex(i);
        for (auto [u, v] : less)
            b.set_related(u, v);
        return std::move(b).build();
    }

    inline auto metric(const std::vector<std::vector<int>> & d) -> Structure
    {
        StructureBuilder b(ClassTag::metric());
        for (std::size_t i = 0; i < d.size(); ++i)
            b.add_vertex(i);
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j)
                b.set_distance(i, j, Rational(d[i][j]));
        return std::move(b).build();
    }

    /// Path or cycle fragment for n-gons, parts alternating from vertex 0.
    inline auto ngon_path(int n, int vertices, bool closed, int depth = 1) -> Structure
    {
        StructureBuilder b(ClassTag::ngon(n));
        for (int i = 0; i < vertices; ++i)
            b.add_vertex(i, i % 2);
        for (int i = 0; i + 1 < vertices; ++i)
            b.set_related(i, i + 1);
        if (closed)
            b.set_related(vertices - 1, 0);
        b.set_depth(depth);
        return std::move(b).build();
    }

    inline auto ngon_graph(int n, int vertices, const Edges & edges, const std::vector<int> & parts, int depth = 1) -> Structure
    {
        StructureBuilder b(ClassTag::ngon(n));
        for (int i = 0; i < vertices; ++i)
            b.add_vertex(i, parts[i]);
        for (auto [u, v] : edges)
            b.set_related(u, v);
        b.set_depth(depth);
        return std::move(b).build();
    }

    inline auto all_permutations(int n) -> std::vector<std::vector<int>>
    {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i)
            p[i] = i;
        std::vector<std::vector<int>> r;
        do
            r.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return r;
    }

    /// `start` plus `extra` random new vertices, valid for the kind. N-gon
    /// vertices hang off at most one earlier vertex, so the result stays a
    /// forest and `start` stays closed.
    inline auto random_extension_of(const SirKind & kind, const Structure & start, int extra, std::mt19937_64 & rng) -> Structure
    {
        for (int attempt = 0;; ++attempt) {
            StructureBuilder b(start);
            VertexId next = start.max_id() + 1;
            for (int k = 0; k < extra; ++k) {
                auto before = b.current();
                int part = kind.family == SirFamily::ngon_strong ? std::uniform_int_distribution<int>(0, 1)(rng) : 0;
                int anchor = -1;
                if (kind.family == SirFamily::ngon_strong && before.size() > 0
                    && std::bernoulli_distribution(0.7)(rng)) {
                    anchor = std::uniform_int_distribution<int>(0, before.size() - 1)(rng);
                    part = before.part(anchor) ^ 1;
                }
                auto v = next++;
                b.add_vertex(v, part);
                for (int i = 0; i < before.size(); ++i) {
                    auto u = before.id(i);
                    switch (kind.family) {
                    case SirFamily::free_graph:
                    case SirFamily::complete_graph:
                        b.set_related(u, v, std::bernoulli_distribution(0.5)(rng));
                        break;
                    case SirFamily::poset_amalgam:
                        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
                        case 1: b.set_related(u, v); break;
                        case 2: b.set_related(v, u); break;
                        default: break;
                        }
                        break;
                    case SirFamily::min_metric:
                        b.set_distance(u, v, Rational(std::uniform_int_distribution<int>(1, 3)(rng)));
                        break;
                    case SirFamily::ngon_strong:
                        if (i == anchor)
                            b.set_related(u, v);
                        break;
                    }
                }
            }
            if (kind.family == SirFamily::poset_amalgam)
                close_order(b);
            auto s = std::move(b).build();
            if (! validate(s) && induced(s, start.vertex_set()) == start)
                return s;
            if (attempt > 1000)
                throw FraisseError("no random extension found");
        }
    }

    inline auto random_structure(const SirKind & kind, int size, std::mt19937_64 & rng) -> Structure
    {
        return random_extension_of(kind, Structure(kind.class_tag()), size, rng);
    }

    inline auto all_kinds() -> std::vector<SirKind>
    {
        return {SirKind::free_graph(), SirKind::complete_graph(), SirKind::poset_amalgam(), SirKind::min_metric(),
            SirKind::ngon_strong(3)};
    }
}

#endif
