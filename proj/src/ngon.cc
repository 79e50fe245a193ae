/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <fraisse/ngon.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>

using std::pair;
using std::vector;

namespace fraisse
{
    namespace
    {
        auto adjacency(const Structure & g) -> vector<vector<int>>
        {
            vector<vector<int>> adj(g.size());
            for (int i = 0; i < g.size(); ++i)
                for (int j = i + 1; j < g.size(); ++j)
                    if (g.related(i, j)) {
                        adj[i].push_back(j);
                        adj[j].push_back(i);
                    }
            return adj;
        }

        auto bfs(const vector<vector<int>> & adj, int from, int skip_a = -1, int skip_b = -1) -> vector<int>
        {
            vector<int> dist(adj.size(), -1);
            std::deque<int> queue{from};
            dist[from] = 0;
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int w : adj[u]) {
                    if ((u == skip_a && w == skip_b) || (u == skip_b && w == skip_a))
                        continue;
                    if (dist[w] == -1) {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            return dist;
        }

        auto require_graph_like(const Structure & g) -> void
        {
            if (! g.tag().graph_like())
                throw ClassMismatch("graph metric needs a graph or n-gon fragment, got " + to_string(g.tag()));
        }

        auto require_ngon(const Structure & g) -> int
        {
            if (g.tag().kind != ClassKind::ngon)
                throw ClassMismatch("n-gon operation on " + to_string(g.tag()));
            return g.tag().n;
        }
    }

    auto distance_matrix(const Structure & g) -> vector<vector<int>>
    {
        require_graph_like(g);
        auto adj = adjacency(g);
        vector<vector<int>> d;
        d.reserve(g.size());
        for (int i = 0; i < g.size(); ++i)
            d.push_back(bfs(adj, i));
        return d;
    }

    auto graph_metric(const Structure & g, VertexId x, VertexId y) -> Distance
    {
        require_graph_like(g);
        auto d = bfs(adjacency(g), g.at(x))[g.at(y)];
        if (d < 0)
            return std::nullopt;
        return d;
    }

    auto girth(const Structure & g) -> Distance
    {
        require_graph_like(g);
        auto adj = adjacency(g);
        int best = -1;
        for (int u = 0; u < g.size(); ++u)
            for (int v : adj[u]) {
                if (v < u)
                    continue;
                auto d = bfs(adj, u, u, v)[v];
                if (d >= 0 && (best == -1 || d + 1 < best))
                    best = d + 1;
            }
        if (best == -1)
            return std::nullopt;
        return best;
    }

    auto diameter(const Structure & g) -> Distance
    {
        int best = 0;
        for (auto & row : distance_matrix(g))
            for (int d : row) {
                if (d < 0)
                    return std::nullopt;
                best = std::max(best, d);
            }
        return best;
    }

    auto shortest_path_count(const Structure & g, int x, int y) -> long
    {
        require_graph_like(g);
        auto adj = adjacency(g);
        auto dist = bfs(adj, x);
        if (dist[y] < 0)
            return 0;
        vector<int> order(g.size());
        for (int i = 0; i < g.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
        vector<long> count(g.size(), 0);
        count[x] = 1;
        for (int u : order) {
            if (dist[u] < 0)
                continue;
            for (int w : adj[u])
                if (dist[w] == dist[u] + 1)
                    count[w] += count[u];
        }
        return count[y];
    }

    auto shortest_path(const Structure & g, int x, int y) -> vector<int>
    {
        require_graph_like(g);
        auto adj = adjacency(g);
        auto dist = bfs(adj, y);
        if (dist[x] < 0)
            return {};
        vector<int> path{x};
        int u = x;
        while (u != y) {
            for (int w : adj[u])
                if (dist[w] == dist[u] - 1) {
                    u = w;
                    break;
                }
            path.push_back(u);
        }
        return path;
    }

    auto frontier(const Structure & g) -> vector<pair<VertexId, VertexId>>
    {
        int n = require_ngon(g);
        auto d = distance_matrix(g);
        vector<pair<VertexId, VertexId>> r;
        for (int i = 0; i < g.size(); ++i)
            for (int j = 0; j < g.size(); ++j)
                if (d[i][j] == n + 1 && g.id(i) < g.id(j))
                    r.emplace_back(g.id(i), g.id(j));
        std::sort(r.begin(), r.end());
        return r;
    }

    namespace
    {
        // Distances, shortest-path counts (capped at 2) and BFS parents from
        // one source.
        struct Reach
        {
            vector<int> dist, count, parent;
        };

        auto reach(const vector<vector<int>> & adj, int from) -> Reach
        {
            Reach r{vector<int>(adj.size(), -1), vector<int>(adj.size(), 0), vector<int>(adj.size(), -1)};
            std::deque<int> queue{from};
            r.dist[from] = 0;
            r.count[from] = 1;
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int w : adj[u]) {
                    if (r.dist[w] == -1) {
                        r.dist[w] = r.dist[u] + 1;
                        r.parent[w] = u;
                        queue.push_back(w);
                    }
                    if (r.dist[w] == r.dist[u] + 1)
                        r.count[w] = std::min(2, r.count[w] + r.count[u]);
                }
            }
            return r;
        }
    }

    auto ngon_closure(const Structure & g, const VertexSet & subset) -> VertexSet
    {
        int n = require_ngon(g);
        auto adj = adjacency(g);
        vector<char> in(g.size(), 0);
        vector<int> members;
        vector<Reach> from;
        auto admit = [&](int i) {
            if (in[i])
                return false;
            in[i] = 1;
            members.push_back(i);
            from.push_back(reach(adj, i));
            return true;
        };
        for (auto v : subset)
            admit(g.at(v));

        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    int x = members[a], y = members[b];
                    int l = from[a].dist[y];
                    if (l > n)
                        throw DepthInsufficient("closure contains " + std::to_string(g.id(x)) + "," + std::to_string(g.id(y)) +
                            " at fragment distance " + std::to_string(l) + " > " + std::to_string(n) + "; deepen the fragment");
                    if (l < 2 || l >= n || from[a].count[y] != 1)
                        continue;
                    for (int w = from[a].parent[y]; w != x; w = from[a].parent[w])
                        changed = admit(w) || changed;
                }
        }

        VertexSet r;
        for (int i : members)
            r.push_back(g.id(i));
        return make_set(std::move(r));
    }

    auto eval_fk(const Structure & g, int k, VertexId x, VertexId y) -> FkValue
    {
        int n = require_ngon(g);
        if (k < 0 || k > n)
            throw FraisseError("f_k needs 0 <= k <= n");
        int xi = g.at(x), yi = g.at(y);
        auto l = bfs(adjacency(g), xi)[yi];
        if (l < 0 || l >= n)
            return {x, true};
        if (l < k || k == 0)
            return {x, false};
        if (shortest_path_count(g, xi, yi) != 1)
            return {x, false};
        return {g.id(shortest_path(g, xi, yi)[k]), false};
    }

    auto chi(int n, const Structure & h) -> long
    {
        return static_cast<long>(n - 1) * h.size() - static_cast<long>(n - 2) * h.edge_count();
    }

    auto rel_chi(int n, const Structure & h, const VertexSet & x) -> long
    {
        auto inside = set_intersection(h.vertex_set(), make_set(x));
        return chi(n, h) - chi(n, induced(h, inside));
    }

    auto subgraph_with_edges(const Structure & y, const VertexSet & vertices,
        const vector<pair<VertexId, VertexId>> & edges) -> Structure
    {
        StructureBuilder b(y.tag());
        for (int i = 0; i < y.size(); ++i)
            if (contains(vertices, y.id(i)))
                b.add_vertex(y.id(i), y.part(i));
        for (auto & [u, v] : edges) {
            if (! y.related(y.at(u), y.at(v)))
                throw FraisseError("edge " + std::to_string(u) + "," + std::to_string(v) + " is not in the ambient graph");
            b.set_related(u, v);
        }
        b.set_depth(y.depth());
        return std::move(b).build();
    }

    auto is_n_strong(int n, const Structure & x, const Structure & y, const StrongConfig & config) -> StrongCertificate
    {
        require_graph_like(y);
        // X as a subgraph of Y, in Y's indices
        vector<char> in_x(y.size(), 0);
        for (int i = 0; i < x.size(); ++i)
            in_x[y.at(x.id(i))] = 1;
        auto x_edge = [&](int a, int b) -> bool {
            auto xa = x.index_of(y.id(a)), xb = x.index_of(y.id(b));
            return xa && xb && x.related(*xa, *xb);
        };
        for (int a = 0; a < y.size(); ++a)
            for (int b = a + 1; b < y.size(); ++b)
                if (x_edge(a, b) && ! y.related(a, b))
                    throw FraisseError("X has an edge that Y lacks");

        vector<int> search;
        for (int i = 0; i < y.size(); ++i)
            if (config.unreduced || ! in_x[i])
                search.push_back(i);
        if (static_cast<int>(search.size()) > config.subset_bound || search.size() > 62)
            throw SearchBoundExceeded("n-strong search over " + std::to_string(search.size()) +
                " vertices exceeds bound " + std::to_string(config.subset_bound));

        const long wv = n - 1, we = n - 2;
        auto s = search.size();
        vector<std::uint64_t> y_adj(s, 0), x_adj(s, 0);
        vector<long> to_x(s, 0);
        for (std::size_t a = 0; a < s; ++a) {
            for (std::size_t b = 0; b < s; ++b) {
                if (a == b)
                    continue;
                if (y.related(search[a], search[b]))
                    y_adj[a] |= std::uint64_t{1} << b;
                if (in_x[search[a]] && in_x[search[b]] && x_edge(search[a], search[b]))
                    x_adj[a] |= std::uint64_t{1} << b;
            }
            if (! config.unreduced)
                for (int j = 0; j < y.size(); ++j)
                    if (in_x[j] && y.related(search[a], j))
                        ++to_x[a];
        }

        // reduced form: H = V_X + S, value = wv |S| - we (e(S) + e(S, X) + e_Y(X) - e_X(X))
        long constant = 0;
        if (! config.unreduced) {
            for (int a = 0; a < y.size(); ++a)
                for (int b = a + 1; b < y.size(); ++b)
                    if (in_x[a] && in_x[b] && y.related(a, b) && ! x_edge(a, b))
                        ++constant;
        }

        long size_out = 0, y_edges = 0, x_edges = 0, cross = 0;
        std::uint64_t mask = 0, best_mask = 0;
        long best = -we * constant;
        std::uint64_t total = std::uint64_t{1} << s;
        for (std::uint64_t step = 1; step < total; ++step) {
            int bit = std::countr_zero(step);
            std::uint64_t b = std::uint64_t{1} << bit;
            bool adding = ! (mask & b);
            long sign = adding ? 1 : -1;
            std::uint64_t rest = mask & ~b;
            bool bit_in_x = in_x[search[bit]];
            y_edges += sign * std::popcount(y_adj[bit] & rest);
            if (bit_in_x)
                x_edges += sign * std::popcount(x_adj[bit] & rest);
            if (config.unreduced) {
                if (! bit_in_x)
                    size_out += sign;
            }
            else {
                size_out += sign;
                cross += sign * to_x[bit];
            }
            mask ^= b;

            long value = config.unreduced
                ? wv * size_out - we * (y_edges - x_edges)
                : wv * size_out - we * (y_edges + cross + constant);
            if (value < best) {
                best = value;
                best_mask = mask;
            }
        }

        StrongCertificate cert;
        cert.minimum = best;
        cert.verdict = best >= 0;
        if (! cert.verdict || config.want_witness) {
            VertexSet w;
            if (! config.unreduced)
                for (int i = 0; i < y.size(); ++i)
                    if (in_x[i])
                        w.push_back(y.id(i));
            for (std::size_t a = 0; a < s; ++a)
                if (best_mask & (std::uint64_t{1} << a))
                    w.push_back(y.id(search[a]));
            cert.witness = make_set(std::move(w));
        }
        return cert;
    }

    auto free_completion_step(const Structure & g) -> CompletionStep
    {
        int n = require_ngon(g);
        auto pairs = frontier(g);
        if (pairs.empty())
            return {g, {}};

        StructureBuilder b(g);
        VertexId next = g.max_id() + 1;
        vector<AddedPath> paths;
        for (auto & [x, y] : pairs) {
            AddedPath p{x, y, {}};
            int part = g.part(g.at(x));
            VertexId prev = x;
            for (int t = 1; t <= n - 2; ++t) {
                VertexId v = next++;
                b.add_vertex(v, part ^ (t & 1));
                b.set_related(prev, v);
                p.interior.push_back(v);
                prev = v;
            }
            b.set_related(prev, y);
            paths.push_back(std::move(p));
        }
        b.set_depth(g.depth() + 1);
        auto result = std::move(b).build();

        auto gr = girth(result);
        if (gr && *gr < 2 * n)
            throw InternalInvariantViolation("completion step produced girth " + std::to_string(*gr) + " < " + std::to_string(2 * n));
        return {std::move(result), std::move(paths)};
    }

    auto free_completion(const Structure & g, int depth, const CompletionConfig & config) -> CompletionReport
    {
        require_ngon(g);
        if (depth < 0)
            throw FraisseError("completion depth must be non-negative");
        CompletionReport report{g, {}, false};
        for (int r = 0; r < depth; ++r) {
            auto step = free_completion_step(report.result);
            if (step.paths.empty())
                break;
            if (step.result.size() > config.max_vertices)
                throw SearchBoundExceeded("free completion exceeds " + std::to_string(config.max_vertices) + " vertices");
            report.result = std::move(step.result);
            report.rounds.push_back(std::move(step.paths));
        }
        report.fixpoint = frontier(report.result).empty();
        return report;
    }

    auto is_free_completion_of(const Structure & delta, const VertexSet & x, int depth) -> bool
    {
        int n = require_ngon(delta);
        auto current = make_set(x);
        for (auto v : current)
            delta.at(v);
        auto all = delta.vertex_set();
        long expected_edges = induced(delta, current).edge_count();
        auto adj_dist = distance_matrix(delta);

        for (int round = 0;; ++round) {
            if (current == all)
                return delta.edge_count() == expected_edges;

            auto pairs = frontier(induced(delta, current));
            if (pairs.empty())
                return false;
            if (round == depth)
                return false;

            VertexSet added;
            for (auto & [a, b] : pairs) {
                int ai = delta.at(a), bi = delta.at(b);
                if (adj_dist[ai][bi] != n - 1)
                    return false;
                auto path = shortest_path(delta, ai, bi);
                for (std::size_t t = 1; t + 1 < path.size(); ++t) {
                    auto v = delta.id(path[t]);
                    if (contains(current, v) || contains(added, v))
                        return false;
                    added.insert(std::upper_bound(added.begin(), added.end(), v), v);
                }
                expected_edges += n - 1;
            }
            current = set_union(current, added);
        }
    }
}
