/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef FRAISSE_GUARD_FRAISSE_KATETOV_HH
#define FRAISSE_GUARD_FRAISSE_KATETOV_HH 1

#include <fraisse/amalgam.hh>
#include <fraisse/ngon.hh>
#include <fraisse/search.hh>
#include <fraisse/sir.hh>
#include <fraisse/structure.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fraisse
{
    struct KatetovConfig
    {
        SearchConfig search;
        /// Distances available to new metric points.
        std::vector<Rational> menu;
        /// Upper limit on raw candidate extensions enumerated per catalog.
        std::uint64_t candidate_bound = std::uint64_t{1} << 22;
    };

    /// Every extension of the base by 1..m new vertices, one per
    /// isomorphism class over the base, sorted by key.
    struct TypeCatalog
    {
        Structure base;
        int m = 1;
        std::vector<ExtensionType> entries;

        auto find(const CanonicalKey & key) const -> std::optional<int>;
    };

    auto enum_types(const SirKind & kind, const Structure & x, int m, const KatetovConfig & config = {}) -> TypeCatalog;

    struct KatetovStep
    {
        Structure result;
        TypeCatalog catalog;
        /// catalog positions in the order they were folded
        std::vector<int> order;
        Amalgam amalgam;
        /// n-gon steps close up with one round of free completion
        std::optional<CompletionStep> completion;
    };

    /// E_1 of x. `order`, when given, permutes the fold order of the catalog.
    auto katetov_step(const SirKind & kind, const Structure & x, int m, const KatetovConfig & config = {},
        const std::optional<std::vector<int>> & order = std::nullopt) -> KatetovStep;

    struct Tower
    {
        SirKind kind;
        int m = 1;
        std::vector<Structure> levels;
        /// inclusions[j]: levels[j] -> levels[j + 1]
        std::vector<Embedding> inclusions;
        std::vector<KatetovStep> steps;
        bool truncated = false;
        std::string truncation_reason;

        auto inclusion(int from, int to) const -> Embedding;
    };

    /// Levels 0..k; a level that exceeds a bound ends the tower early with
    /// truncated set instead of throwing.
    auto build_tower(const SirKind & kind, const Structure & x, int m, int k, const KatetovConfig & config = {}) -> Tower;

    struct LiftedAutomorphism
    {
        /// maps[j] is an automorphism of level j
        std::vector<Embedding> maps;
        /// sigmas[j][i]: where the lift sends catalog entry order[i] of step j
        std::vector<std::vector<int>> sigmas;
    };

    /// Extends an automorphism of step.catalog.base to step.result.
    auto lift_through_step(const SirKind & kind, const KatetovStep & step, const Embedding & f,
        const SearchConfig & config = {}) -> std::pair<Embedding, std::vector<int>>;

    auto lift_automorphism(const Tower & tower, const Embedding & f, const SearchConfig & config = {}) -> LiftedAutomorphism;

    /// Precomputed lifts of all of Aut(E_0) into E_1, for answering many
    /// continuity questions about one step.
    class LiftContext
    {
        private:
            const Tower & _tower;
            std::vector<Embedding> _autos, _lifts;
            std::vector<VertexSet> _vertex_witness;
            std::vector<VertexId> _level1;
            std::vector<VertexId> _level0;

        public:
            explicit LiftContext(const Tower & tower, const SearchConfig & config = {});

            auto automorphisms() const -> const std::vector<Embedding> & { return _autos; }
            auto lifts() const -> const std::vector<Embedding> & { return _lifts; }
            auto level1_ids() const -> const std::vector<VertexId> & { return _level1; }
            auto level0_ids() const -> const std::vector<VertexId> & { return _level0; }

            /// Support of one vertex of E_1 in E_0.
            auto vertex_witness(VertexId v) const -> const VertexSet &;
            auto witness(const VertexSet & a) const -> VertexSet;

            /// Does agreement with automorphism `f` on c force agreement of
            /// the lifts on a? Exhaustive over Aut(E_0).
            auto determines(std::size_t f, const VertexSet & c, const VertexSet & a) const -> bool;
    };

    struct DeterminationWitness
    {
        VertexSet support;
        bool verified = false;
    };

    auto finite_determination_witness(const Tower & tower, const Embedding & f, const VertexSet & a,
        const SearchConfig & config = {}) -> DeterminationWitness;

    /// How to grow a saturated approximant.
    struct SaturationRecipe
    {
        SirKind kind;
        Structure start{ClassTag::graph()};
        int m = 1;
        int rounds = 3;
        /// extension problems are posed over subsets up to this size
        int base_bound = 2;
        std::uint64_t seed = 0;
        KatetovConfig katetov;
        int max_vertices = 5000;

        static auto standard(const SirKind & kind, std::uint64_t seed = 0) -> SaturationRecipe;
    };

    struct SaturationChain
    {
        std::vector<Structure> levels;
        bool truncated = false;
        std::string truncation_reason;

        auto last() const -> const Structure & { return levels.back(); }
    };

    auto saturate(const SaturationRecipe & recipe) -> SaturationChain;

    struct BackAndForthResult
    {
        bool equivalent = false;
        /// Spoiler's winning line: (0 = left, 1 = right, vertex) per move.
        std::vector<std::pair<int, VertexId>> witness;
    };

    /// Bounded extension game between two chains. Move i of `depth` is taken
    /// inside level max(0, L - depth + i) of each chain (1-based, L the last
    /// level). Single structures give the ordinary depth-bounded game.
    auto back_and_forth_iso(const std::vector<Structure> & a, const std::vector<Structure> & b, int depth)
        -> BackAndForthResult;
    auto back_and_forth_iso(const Structure & a, const Structure & b, int depth) -> BackAndForthResult;

    struct Probe
    {
        int level = 0;
        ExtensionType problem;
    };

    enum class ProbeStatus
    {
        solved,
        unsolved,
        out_of_bound
    };

    struct RichnessReport
    {
        std::vector<ProbeStatus> status;
        std::size_t solved = 0, unsolved = 0, out_of_bound = 0;

        auto ratio() const -> double;
    };

    /// Each probe's extension must embed over its base into the next level.
    auto check_richness(const std::vector<Structure> & levels, int m, const std::vector<Probe> & probes,
        const SearchConfig & config = {}) -> RichnessReport;

    /// All one-point probes over subsets of levels[level] of size at most
    /// base_bound (negative: every subset).
    auto one_point_probes(const SirKind & kind, const std::vector<Structure> & levels, int level, int base_bound,
        const KatetovConfig & config = {}) -> std::vector<Probe>;
}

#endif
