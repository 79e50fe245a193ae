/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef FRAISSE_GUARD_FRAISSE_SIR_HH
#define FRAISSE_GUARD_FRAISSE_SIR_HH 1

#include <fraisse/ngon.hh>
#include <fraisse/structure.hh>

#include <optional>
#include <string>

namespace fraisse
{
    enum class SirFamily
    {
        free_graph,
        complete_graph,
        poset_amalgam,
        min_metric,
        ngon_strong
    };

    /// Which stationary independence relation interprets independence.
    struct SirKind
    {
        SirFamily family = SirFamily::free_graph;
        int n = 0;

        static auto free_graph() -> SirKind { return {SirFamily::free_graph, 0}; }
        static auto complete_graph() -> SirKind { return {SirFamily::complete_graph, 0}; }
        static auto poset_amalgam() -> SirKind { return {SirFamily::poset_amalgam, 0}; }
        static auto min_metric() -> SirKind { return {SirFamily::min_metric, 0}; }
        static auto ngon_strong(int n) -> SirKind { return {SirFamily::ngon_strong, n}; }

        auto class_tag() const -> ClassTag;
        /// Local relations are only defined over nonempty bases.
        auto local() const -> bool { return family == SirFamily::min_metric; }

        auto operator==(const SirKind &) const -> bool = default;
    };

    auto to_string(const SirKind & k) -> std::string;

    /// Accepts free-graph, complete-graph, poset, min-metric, ngon-strong.
    auto parse_sir_kind(const std::string & name, int n = 3) -> SirKind;

    /// overlap_blind forgets the requirement that A and B meet only inside C;
    /// it exists to give the axiom checker something to catch.
    enum class Variant
    {
        faithful,
        overlap_blind
    };

    /// A independent from B over C inside the ambient structure.
    auto indep(const SirKind & kind, const Structure & m, const VertexSet & a, const VertexSet & b,
        const VertexSet & c, Variant variant = Variant::faithful) -> bool;

    struct OverSetResult
    {
        bool independent = false;
        VertexSet witness; ///< the base C found, when independent
    };

    /// Independence over an arbitrary (finite) base X: some C inside X such
    /// that every C' with C inside C' inside X witnesses independence.
    auto indep_over_set(const SirKind & kind, const Structure & m, const VertexSet & a, const VertexSet & b,
        const VertexSet & x) -> OverSetResult;

    /// A minimum-size C inside X with A independent from X over C, or
    /// nullopt when there is none.
    auto find_support(const SirKind & kind, const Structure & m, const VertexSet & a,
        const VertexSet & x) -> std::optional<VertexSet>;
}

#endif
