/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <fraisse/amalgam.hh>

#include <algorithm>

using std::optional;
using std::vector;

namespace fraisse
{
    auto ExtensionType::new_vertices() const -> VertexSet
    {
        return set_difference(ext.vertex_set(), base.vertex_set());
    }

    auto make_extension(const Structure & base, const Structure & ext, const SearchConfig & config) -> ExtensionType
    {
        if (! (base.tag() == ext.tag()))
            throw ClassMismatch("extension of " + to_string(base.tag()) + " by " + to_string(ext.tag()));
        auto ids = base.vertex_set();
        for (auto v : ids)
            if (! ext.has(v))
                throw BaseMismatch("extension does not contain base vertex " + std::to_string(v));
        if (! is_embedding(base, ext, Embedding::identity(ids)))
            throw BaseMismatch("base is not an induced substructure of the extension");
        if (ext.tag().kind == ClassKind::ngon) {
            try {
                if (generated(ext, ids) != ids)
                    throw BaseMismatch("n-gon base is not closed in its extension");
            }
            catch (const DepthInsufficient &) {
                // far-apart base points: closedness is not decidable in the fragment
            }
        }
        return {base, ext, canonical_key(ext, base.ids(), config)};
    }

    auto amalgamate_into(const SirKind & kind, StructureBuilder & host, const Structure & ext,
        const Embedding & base_map, VertexId & next_id) -> Embedding
    {
        if (! (kind.class_tag() == ext.tag()) || ! (kind.class_tag() == host.current().tag()))
            throw ClassMismatch(to_string(kind) + " cannot amalgamate " + to_string(ext.tag()));
        bool metric = kind.family == SirFamily::min_metric;

        const int old_n = host.current().size();
        vector<int> base_ext, base_host;
        vector<char> host_is_base(old_n, 0);
        for (auto & [from, to] : base_map.map()) {
            base_ext.push_back(ext.at(from));
            int h = host.current().at(to);
            base_host.push_back(h);
            host_is_base[h] = 1;
        }
        if (metric && base_ext.empty() && old_n > 0 && ext.size() > 0)
            throw EmptyBase("min-metric amalgam needs a nonempty base");

        // ext index -> host index
        Embedding e = base_map;
        vector<int> to_host(ext.size(), -1);
        for (std::size_t k = 0; k < base_ext.size(); ++k)
            to_host[base_ext[k]] = base_host[k];
        vector<int> fresh;
        for (int i = 0; i < ext.size(); ++i)
            if (to_host[i] == -1) {
                VertexId v = next_id++;
                to_host[i] = host.add_vertex(v, ext.part(i));
                e.set(ext.id(i), v);
                fresh.push_back(i);
            }

        for (int i : fresh)
            for (int j = 0; j < ext.size(); ++j) {
                if (ext.related(i, j))
                    host.set_related_index(to_host[i], to_host[j]);
                if (ext.related(j, i))
                    host.set_related_index(to_host[j], to_host[i]);
                if (metric && i != j)
                    host.set_distance_index(to_host[i], to_host[j], ext.distance(i, j));
            }

        const auto & h = host.current();
        for (int i : fresh) {
            int a = to_host[i];
            for (int o = 0; o < old_n; ++o) {
                if (host_is_base[o])
                    continue;
                switch (kind.family) {
                case SirFamily::free_graph:
                case SirFamily::ngon_strong:
                    break;
                case SirFamily::complete_graph:
                    host.set_related_index(a, o);
                    break;
                case SirFamily::poset_amalgam:
                    for (std::size_t k = 0; k < base_ext.size(); ++k) {
                        if (ext.related(i, base_ext[k]) && h.related(base_host[k], o))
                            host.set_related_index(a, o);
                        if (h.related(o, base_host[k]) && ext.related(base_ext[k], i))
                            host.set_related_index(o, a);
                    }
                    break;
                case SirFamily::min_metric: {
                    Rational best = ext.distance(i, base_ext[0]) + h.distance(base_host[0], o);
                    for (std::size_t k = 1; k < base_ext.size(); ++k)
                        best = std::min(best, ext.distance(i, base_ext[k]) + h.distance(base_host[k], o));
                    host.set_distance_index(a, o, best);
                    break;
                }
                }
            }
        }
        return e;
    }

    auto close_order(StructureBuilder & b) -> void
    {
        const auto & s = b.current();
        int n = s.size();
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (s.related(i, k))
                    for (int j = 0; j < n; ++j)
                        if (s.related(k, j) && ! s.related(i, j))
                            b.set_related_index(i, j);
    }

    namespace
    {
        auto finish(const SirKind & kind, StructureBuilder & b) -> Structure
        {
            if (kind.family == SirFamily::poset_amalgam)
                close_order(b);
            auto s = std::move(b).build();
            if (auto bad = validate(s))
                throw InternalInvariantViolation("amalgam is not a valid " + to_string(s.tag()) + ": " + *bad);
            return s;
        }

        // A' and B' meet exactly in the base and are independent over it.
        auto verify_factor(const SirKind & kind, const Structure & result, const VertexSet & a,
            const VertexSet & b, const VertexSet & base) -> void
        {
            bool ok;
            if (kind.family == SirFamily::ngon_strong) {
                ok = set_intersection(a, b) == base;
                for (auto u : set_difference(a, base))
                    for (auto v : set_difference(b, base))
                        if (result.related(result.at(u), result.at(v)))
                            ok = false;
            }
            else
                ok = indep(kind, result, a, b, base);
            if (! ok)
                throw InternalInvariantViolation("amalgam factors are not independent over the base under " + to_string(kind));
        }

        auto base_map_for(const Structure & ext_base, const Structure & base, const SearchConfig & config) -> Embedding
        {
            if (ext_base == base)
                return Embedding::identity(base.vertex_set());
            auto iso = find_isomorphism(ext_base, base, {}, config);
            if (! iso)
                throw BaseMismatch("extension base is not isomorphic to the amalgamation base");
            return *iso;
        }
    }

    auto canonical_amalgam(const SirKind & kind, const ExtensionType & a, const ExtensionType & b,
        const optional<Embedding> & base_identification, const SearchConfig & config) -> Amalgam
    {
        Embedding ident;
        if (base_identification) {
            ident = *base_identification;
            if (! is_embedding(b.base, a.base, ident) || b.base.size() != a.base.size())
                throw BaseMismatch("supplied base identification is not an isomorphism");
        }
        else
            ident = base_map_for(b.base, a.base, config);

        StructureBuilder host(a.ext);
        VertexId next = a.ext.max_id() + 1;
        auto eb = amalgamate_into(kind, host, b.ext, ident, next);
        auto result = finish(kind, host);

        auto base_ids = a.base.vertex_set();
        Amalgam am{std::move(result), Embedding::identity(base_ids), {Embedding::identity(a.ext.vertex_set()), eb}};
        verify_factor(kind, am.result, a.ext.vertex_set(), eb.image(b.ext.vertex_set()), base_ids);
        return am;
    }

    auto si_amalgam_family(const SirKind & kind, const Structure & base, const vector<ExtensionType> & exts,
        const SearchConfig & config) -> Amalgam
    {
        StructureBuilder host(base);
        VertexId next = base.max_id() + 1;
        Amalgam am;
        for (auto & x : exts)
            am.factor_embeddings.push_back(amalgamate_into(kind, host, x.ext, base_map_for(x.base, base, config), next));
        am.result = finish(kind, host);
        auto base_ids = base.vertex_set();
        am.base_embedding = Embedding::identity(base_ids);

        VertexSet earlier = base_ids;
        for (std::size_t i = 0; i < exts.size(); ++i) {
            auto img = am.factor_embeddings[i].image(exts[i].ext.vertex_set());
            if (i > 0)
                verify_factor(kind, am.result, img, earlier, base_ids);
            earlier = set_union(earlier, img);
        }
        return am;
    }

    auto glue_automorphisms(const Amalgam & am, const vector<int> & sigma,
        const vector<Embedding> & fs, const Embedding & base_map) -> Embedding
    {
        auto k = am.factor_embeddings.size();
        if (sigma.size() != k || fs.size() != k)
            throw FraisseError("glue needs one map and one target index per factor");
        vector<char> hit(k, 0);
        for (int t : sigma) {
            if (t < 0 || static_cast<std::size_t>(t) >= k || hit[t])
                throw FraisseError("factor permutation is not a bijection");
            hit[t] = 1;
        }

        std::map<VertexId, VertexId> glued;
        auto put = [&](VertexId from, VertexId to) {
            auto [it, inserted] = glued.emplace(from, to);
            if (! inserted && it->second != to)
                throw BaseMismatch("factor maps disagree on the base at vertex " + std::to_string(from));
        };
        for (auto & [from, to] : base_map.map())
            put(from, to);
        for (std::size_t i = 0; i < k; ++i) {
            const auto & src = am.factor_embeddings[i];
            const auto & dst = am.factor_embeddings[sigma[i]];
            for (auto & [v, w] : fs[i].map()) {
                if (! src.defined(v) || ! dst.defined(w))
                    throw FraisseError("factor map leaves its factor");
                put(src(v), dst(w));
            }
        }

        Embedding e(std::move(glued));
        if (e.size() != static_cast<std::size_t>(am.result.size()) || ! is_automorphism(am.result, e))
            throw InternalInvariantViolation("glued factor maps do not form an automorphism of the amalgam");
        return e;
    }

    auto extend_type(const SirKind & kind, const ExtensionType & a, const Structure & x,
        const SearchConfig & config) -> ExtensionType
    {
        auto c_ids = a.base.vertex_set();
        if (! is_embedding(a.base, x, Embedding::identity(c_ids)))
            throw BaseMismatch("the type's base is not an induced substructure of the new base");
        ExtensionType over_c{a.base, x, {}};
        auto am = canonical_amalgam(kind, over_c, a, Embedding::identity(c_ids), config);
        return make_extension(x, am.result, config);
    }
}
