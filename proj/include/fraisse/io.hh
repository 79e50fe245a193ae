/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef FRAISSE_GUARD_FRAISSE_IO_HH
#define FRAISSE_GUARD_FRAISSE_IO_HH 1

#include <fraisse/amalgam.hh>
#include <fraisse/axioms.hh>
#include <fraisse/katetov.hh>
#include <fraisse/ngon.hh>
#include <fraisse/structure.hh>

#include <json.hpp>

#include <map>
#include <string>

namespace fraisse
{
    using Json = nlohmann::ordered_json;

    /// {"class", "n"?, "vertices", "part"?, "edges"? | "order"? | "dist"?, "depth"?}
    auto to_json(const Structure & s) -> Json;
    auto structure_from_json(const Json & j) -> Structure;

    auto load_structure(const std::string & path) -> Structure;
    auto save_structure(const std::string & path, const Structure & s) -> void;

    /// [[from, to], ...]
    auto to_json(const Embedding & e) -> Json;
    auto embedding_from_json(const Json & j) -> Embedding;

    /// Graphs and n-gon fragments. Parts become shapes; `round` marks the
    /// completion round that added a vertex.
    auto to_dot(const Structure & s, const std::map<VertexId, int> & round = {}) -> std::string;

    auto to_json(const StrongCertificate & c) -> Json;
    auto to_json(const CompletionReport & r) -> Json;
    auto to_json(const Amalgam & a) -> Json;
    auto to_json(const TypeCatalog & c) -> Json;
    auto to_json(const Tower & t) -> Json;
    auto to_json(const LiftedAutomorphism & l) -> Json;
    auto to_json(const RichnessReport & r) -> Json;
    auto to_json(const BackAndForthResult & r) -> Json;

    /// One object per axiom.
    auto axiom_lines(const AxiomReport & r) -> std::vector<Json>;
}

#endif
