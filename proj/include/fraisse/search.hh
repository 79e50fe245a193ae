/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef FRAISSE_GUARD_FRAISSE_SEARCH_HH
#define FRAISSE_GUARD_FRAISSE_SEARCH_HH 1

#include <fraisse/structure.hh>

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace fraisse
{
    struct SearchConfig
    {
        /// Maximum number of domain vertices the backtracking search may
        /// place freely (vertices pinned by a partial map do not count).
        int search_bound = 10;

        /// Stop after this many solutions.
        std::size_t max_results = std::numeric_limits<std::size_t>::max();
    };

    /// All embeddings dom -> cod extending the partial map `fixing`, by
    /// exhaustive backtracking with degree pruning. Results come in a
    /// deterministic order.
    auto find_embeddings(const Structure & dom, const Structure & cod,
        const Embedding & fixing = {}, const SearchConfig & config = {}) -> std::vector<Embedding>;

    /// An isomorphism a -> b fixing `over` pointwise (the ids in `over` must
    /// belong to both structures), or nullopt.
    auto are_isomorphic(const Structure & a, const Structure & b,
        const VertexSet & over = {}, const SearchConfig & config = {}) -> std::optional<Embedding>;

    /// Like are_isomorphic, but the base correspondence is an arbitrary
    /// partial map rather than the identity.
    auto find_isomorphism(const Structure & a, const Structure & b,
        const Embedding & fixing, const SearchConfig & config = {}) -> std::optional<Embedding>;

    using CanonicalKey = std::string;

    /// Deterministic encoding of the structure up to isomorphism fixing the
    /// listed base vertices pointwise, in the listed order. Minimises the
    /// encoded relation data over all orderings of the remaining vertices.
    auto canonical_key(const Structure & s, const std::vector<VertexId> & base = {},
        const SearchConfig & config = {}) -> CanonicalKey;

    /// The minimising ordering behind canonical_key: base first, then the
    /// free vertices in canonical position order.
    auto canonical_order(const Structure & s, const std::vector<VertexId> & base = {},
        const SearchConfig & config = {}) -> std::vector<VertexId>;

    /// All automorphisms of a small structure.
    auto automorphisms(const Structure & s, const SearchConfig & config = {}) -> std::vector<Embedding>;
}

#endif
