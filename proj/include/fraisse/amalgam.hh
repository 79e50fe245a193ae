/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef FRAISSE_GUARD_FRAISSE_AMALGAM_HH
#define FRAISSE_GUARD_FRAISSE_AMALGAM_HH 1

#include <fraisse/search.hh>
#include <fraisse/sir.hh>
#include <fraisse/structure.hh>

#include <optional>
#include <vector>

namespace fraisse
{
    /// An extension of a base structure, identified up to isomorphism over
    /// the base. The key fixes the base vertices in base.ids() order.
    struct ExtensionType
    {
        Structure base;
        Structure ext;
        CanonicalKey key;

        auto new_vertices() const -> VertexSet;
    };

    auto make_extension(const Structure & base, const Structure & ext, const SearchConfig & config = {}) -> ExtensionType;

    struct Amalgam
    {
        Structure result;
        Embedding base_embedding;
        /// factor i: ext of the i-th amalgamated extension -> result
        std::vector<Embedding> factor_embeddings;
    };

    /// Adds the vertices of ext outside base_map's domain to host, relating
    /// them to the rest of host as the relation's canonical independent
    /// amalgam prescribes. base_map sends ext's base vertices to host ids.
    /// Returns the map ext -> host; new vertices get ids counting up from
    /// next_id. Poset results still need close_order.
    auto amalgamate_into(const SirKind & kind, StructureBuilder & host, const Structure & ext,
        const Embedding & base_map, VertexId & next_id) -> Embedding;

    /// Transitive closure of a poset under construction.
    auto close_order(StructureBuilder & b) -> void;

    auto canonical_amalgam(const SirKind & kind, const ExtensionType & a, const ExtensionType & b,
        const std::optional<Embedding> & base_identification = std::nullopt,
        const SearchConfig & config = {}) -> Amalgam;

    /// Left fold of canonical amalgams over the base. Extensions whose base
    /// is not literally `base` are matched to it by an isomorphism search.
    auto si_amalgam_family(const SirKind & kind, const Structure & base, const std::vector<ExtensionType> & exts,
        const SearchConfig & config = {}) -> Amalgam;

    /// Assembles the automorphism of am.result that restricts to fs[i] on
    /// factor i, where fs[i] maps factor i's ext onto factor sigma[i]'s ext.
    /// base_map is only needed for the empty family.
    auto glue_automorphisms(const Amalgam & am, const std::vector<int> & sigma,
        const std::vector<Embedding> & fs, const Embedding & base_map = {}) -> Embedding;

    /// The unique extension of a type over C (a.base) to the larger base X,
    /// supported on C.
    auto extend_type(const SirKind & kind, const ExtensionType & a, const Structure & x,
        const SearchConfig & config = {}) -> ExtensionType;
}

#endif
