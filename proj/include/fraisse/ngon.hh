/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef FRAISSE_GUARD_FRAISSE_NGON_HH
#define FRAISSE_GUARD_FRAISSE_NGON_HH 1

#include <fraisse/structure.hh>

#include <optional>
#include <utility>
#include <vector>

namespace fraisse
{
    /// Graph distances; nullopt stands for infinity.
    using Distance = std::optional<int>;

    /// All-pairs breadth-first distances, -1 for unreachable, by index.
    auto distance_matrix(const Structure & g) -> std::vector<std::vector<int>>;

    auto graph_metric(const Structure & g, VertexId x, VertexId y) -> Distance;
    auto girth(const Structure & g) -> Distance;
    auto diameter(const Structure & g) -> Distance;

    /// Number of distinct shortest paths between two indices.
    auto shortest_path_count(const Structure & g, int x, int y) -> long;

    /// One shortest path between two indices (empty when unreachable).
    auto shortest_path(const Structure & g, int x, int y) -> std::vector<int>;

    /// Pairs (by id, smaller first) at distance exactly n + 1: the pairs the
    /// next completion round will join.
    auto frontier(const Structure & g) -> std::vector<std::pair<VertexId, VertexId>>;

    /// Closure of a vertex set under the f_k path functions.
    auto ngon_closure(const Structure & g, const VertexSet & subset) -> VertexSet;

    struct FkValue
    {
        VertexId value;
        /// The answer in the infinite n-gon may differ: the pair is at
        /// distance >= n (or unreachable) in this fragment.
        bool depth_caveat = false;
    };

    auto eval_fk(const Structure & g, int k, VertexId x, VertexId y) -> FkValue;

    /// (n - 1)|V| - (n - 2)|E|
    auto chi(int n, const Structure & h) -> long;

    /// chi of H relative to H intersected with the vertex set X, where the
    /// intersection carries the edges of H.
    auto rel_chi(int n, const Structure & h, const VertexSet & x) -> long;

    struct StrongConfig
    {
        int subset_bound = 20;
        /// Also search subsets that leave out vertices of X.
        bool unreduced = false;
        /// Report a minimising witness even when the verdict is true.
        bool want_witness = false;
    };

    struct StrongCertificate
    {
        bool verdict = true;
        long minimum = 0;
        VertexSet witness;
    };

    /// Whether X is n-strong in Y. X's vertices must be among Y's and X's
    /// edges among Y's edges; X need not be induced. Exact by exhaustive
    /// minimisation of the relative characteristic.
    auto is_n_strong(int n, const Structure & x, const Structure & y, const StrongConfig & config = {}) -> StrongCertificate;

    /// Subgraph of Y on the given vertices carrying only the listed edges.
    auto subgraph_with_edges(const Structure & y, const VertexSet & vertices,
        const std::vector<std::pair<VertexId, VertexId>> & edges) -> Structure;

    struct AddedPath
    {
        VertexId from, to;
        std::vector<VertexId> interior;
    };

    struct CompletionStep
    {
        Structure result;
        std::vector<AddedPath> paths;
    };

    /// One round of the free n-completion: a new path of length n - 1 for
    /// every pair at distance n + 1, all added simultaneously.
    auto free_completion_step(const Structure & g) -> CompletionStep;

    struct CompletionReport
    {
        Structure result;
        std::vector<std::vector<AddedPath>> rounds;
        bool fixpoint = false;
    };

    struct CompletionConfig
    {
        int max_vertices = 20000;
    };

    auto free_completion(const Structure & g, int depth, const CompletionConfig & config = {}) -> CompletionReport;

    /// Replays the completion layers from X inside delta. True when the
    /// layers tile delta within `depth` rounds using only new paths; a
    /// frontier pair of the replay with no path in delta means false.
    auto is_free_completion_of(const Structure & delta, const VertexSet & x, int depth) -> bool;
}

#endif
