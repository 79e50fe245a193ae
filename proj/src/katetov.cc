/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <fraisse/katetov.hh>

#include <algorithm>
#include <map>
#include <numeric>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace fraisse
{
    auto TypeCatalog::find(const CanonicalKey & key) const -> optional<int>
    {
        auto it = std::lower_bound(entries.begin(), entries.end(), key,
            [](const ExtensionType & e, const CanonicalKey & k) { return e.key < k; });
        if (it == entries.end() || it->key != key)
            return std::nullopt;
        return static_cast<int>(it - entries.begin());
    }

    namespace
    {
        // A vertex pair whose relation the enumeration chooses; `fresh` is
        // the new vertex's index, `other` any vertex indexed before it.
        struct Slot
        {
            int fresh, other;
        };

        auto ngon_types(const Structure & x, std::map<CanonicalKey, ExtensionType> & out, const SearchConfig & config) -> void
        {
            VertexId v = x.max_id() + 1;
            auto add = [&](int part, optional<int> neighbour) {
                StructureBuilder b(x);
                int i = b.add_vertex(v, part);
                if (neighbour)
                    b.set_related_index(i, *neighbour);
                auto s = std::move(b).build();
                if (validate(s))
                    return;
                auto key = canonical_key(s, x.ids(), config);
                out.emplace(key, ExtensionType{x, std::move(s), key});
            };
            // A new generator hangs off exactly one base vertex: two
            // neighbours would put it inside the base's closure, and an
            // isolated one would never be reached by the completion.
            if (x.size() == 0) {
                add(0, std::nullopt);
                add(1, std::nullopt);
            }
            else
                for (int i = 0; i < x.size(); ++i)
                    add(x.part(i) ^ 1, i);
        }
    }

    auto enum_types(const SirKind & kind, const Structure & x, int m, const KatetovConfig & config) -> TypeCatalog
    {
        auto tag = kind.class_tag();
        if (! (x.tag() == tag))
            throw ClassMismatch(to_string(kind) + " types over a " + to_string(x.tag()) + " base");
        if (m < 1)
            throw FraisseError("extension types need at least one new generator");
        if (m > config.search.search_bound)
            throw SearchBoundExceeded("m = " + std::to_string(m) + " exceeds the search bound");
        if (tag.kind == ClassKind::metric && config.menu.empty())
            throw MenuRequired("metric extension types need a distance menu");

        std::map<CanonicalKey, ExtensionType> found;
        if (tag.kind == ClassKind::ngon)
            ngon_types(x, found, config.search);
        else {
            for (int k = 1; k <= m; ++k) {
                vector<Slot> slots;
                int base_n = x.size();
                for (int t = 0; t < k; ++t)
                    for (int o = 0; o < base_n + t; ++o)
                        slots.push_back({base_n + t, o});

                std::uint64_t radix = tag.kind == ClassKind::metric ? config.menu.size()
                    : tag.kind == ClassKind::poset                  ? 3
                                                                    : 2;
                std::uint64_t total = 1;
                for (std::size_t s = 0; s < slots.size(); ++s) {
                    if (total > config.candidate_bound / radix)
                        throw SearchBoundExceeded("too many candidate extensions over a base of size " + std::to_string(base_n));
                    total *= radix;
                }

                vector<std::uint64_t> digit(slots.size(), 0);
                for (std::uint64_t c = 0; c < total; ++c) {
                    StructureBuilder b(x);
                    for (int t = 0; t < k; ++t)
                        b.add_vertex(x.max_id() + 1 + t);
                    for (std::size_t s = 0; s < slots.size(); ++s) {
                        auto [f, o] = slots[s];
                        switch (tag.kind) {
                        case ClassKind::graph:
                        case ClassKind::ngon:
                            if (digit[s])
                                b.set_related_index(f, o);
                            break;
                        case ClassKind::poset:
                            if (digit[s] == 1)
                                b.set_related_index(f, o);
                            else if (digit[s] == 2)
                                b.set_related_index(o, f);
                            break;
                        case ClassKind::metric:
                            b.set_distance_index(f, o, config.menu[digit[s]]);
                            break;
                        }
                    }
                    auto s = std::move(b).build();
                    if (! validate(s)) {
                        auto key = canonical_key(s, x.ids(), config.search);
                        found.emplace(key, ExtensionType{x, std::move(s), key});
                    }

                    for (std::size_t s = 0; s < digit.size(); ++s) {
                        if (++digit[s] < radix)
                            break;
                        digit[s] = 0;
                    }
                }
            }
        }

        TypeCatalog cat{x, m, {}};
        for (auto & [key, e] : found)
            cat.entries.push_back(std::move(e));
        return cat;
    }

    auto katetov_step(const SirKind & kind, const Structure & x, int m, const KatetovConfig & config,
        const optional<vector<int>> & order) -> KatetovStep
    {
        KatetovStep step;
        step.catalog = enum_types(kind, x, m, config);
        auto count = step.catalog.entries.size();
        if (order) {
            auto sorted = *order;
            std::sort(sorted.begin(), sorted.end());
            vector<int> expect(count);
            std::iota(expect.begin(), expect.end(), 0);
            if (sorted != expect)
                throw FraisseError("fold order is not a permutation of the catalog");
            step.order = *order;
        }
        else {
            step.order.resize(count);
            std::iota(step.order.begin(), step.order.end(), 0);
        }

        vector<ExtensionType> exts;
        exts.reserve(count);
        for (int i : step.order)
            exts.push_back(step.catalog.entries[i]);
        step.amalgam = si_amalgam_family(kind, x, exts, config.search);
        step.result = step.amalgam.result;
        if (kind.family == SirFamily::ngon_strong) {
            step.completion = free_completion_step(step.result);
            step.result = step.completion->result;
        }
        return step;
    }

    auto Tower::inclusion(int from, int to) const -> Embedding
    {
        auto e = Embedding::identity(levels.at(from).vertex_set());
        for (int j = from; j < to; ++j)
            e = inclusions.at(j).after(e);
        return e;
    }

    auto build_tower(const SirKind & kind, const Structure & x, int m, int k, const KatetovConfig & config) -> Tower
    {
        Tower t;
        t.kind = kind;
        t.m = m;
        t.levels.push_back(x);
        for (int j = 0; j < k; ++j) {
            try {
                auto step = katetov_step(kind, t.levels.back(), m, config);
                t.inclusions.push_back(Embedding::identity(t.levels.back().vertex_set()));
                t.levels.push_back(step.result);
                t.steps.push_back(std::move(step));
            }
            catch (const SearchBoundExceeded & e) {
                t.truncated = true;
                t.truncation_reason = "level " + std::to_string(j + 1) + ": " + e.what();
                break;
            }
        }
        return t;
    }

    auto lift_through_step(const SirKind & kind, const KatetovStep & step, const Embedding & f,
        const SearchConfig & config) -> pair<Embedding, vector<int>>
    {
        const auto & x = step.catalog.base;
        if (! is_automorphism(x, f))
            throw FraisseError("map to lift is not an automorphism of the base");

        const auto & entries = step.catalog.entries;
        vector<int> position(entries.size());
        for (std::size_t i = 0; i < step.order.size(); ++i)
            position[step.order[i]] = i;

        auto base_ids = x.vertex_set();
        vector<int> sigma(step.order.size());
        vector<Embedding> fs(step.order.size());
        for (std::size_t i = 0; i < step.order.size(); ++i) {
            const auto & ext = entries[step.order[i]].ext;
            // f on the base, new vertices kept
            Embedding shift = f;
            for (auto v : entries[step.order[i]].new_vertices())
                shift.set(v, v);
            auto moved = relabel(ext, shift);
            auto target = step.catalog.find(canonical_key(moved, x.ids(), config));
            if (! target)
                throw InternalInvariantViolation("image of a catalog entry is missing from the catalog");
            auto iso = find_isomorphism(moved, entries[*target].ext, Embedding::identity(base_ids), config);
            if (! iso)
                throw InternalInvariantViolation("catalog keys agree but the extensions are not isomorphic");
            fs[i] = iso->after(shift);
            sigma[i] = position[*target];
        }

        auto lifted = glue_automorphisms(step.amalgam, sigma, fs, f);

        if (step.completion) {
            std::map<pair<VertexId, VertexId>, const AddedPath *> by_ends;
            for (auto & p : step.completion->paths)
                by_ends.emplace(std::minmax(p.from, p.to), &p);
            auto amalgam_map = lifted;
            for (auto & p : step.completion->paths) {
                auto a = amalgam_map(p.from), b = amalgam_map(p.to);
                auto it = by_ends.find(std::minmax(a, b));
                if (it == by_ends.end())
                    throw InternalInvariantViolation("lift moves a completion path off the frontier");
                auto interior = it->second->interior;
                if (it->second->from != a)
                    std::reverse(interior.begin(), interior.end());
                for (std::size_t t = 0; t < p.interior.size(); ++t)
                    lifted.set(p.interior[t], interior[t]);
            }
            if (! is_automorphism(step.result, lifted))
                throw InternalInvariantViolation("lift through the completion round is not an automorphism");
        }
        (void)kind;
        return {lifted, sigma};
    }

    auto lift_automorphism(const Tower & tower, const Embedding & f, const SearchConfig & config) -> LiftedAutomorphism
    {
        LiftedAutomorphism l;
        l.maps.push_back(f);
        for (std::size_t j = 0; j < tower.steps.size(); ++j) {
            auto [g, sigma] = lift_through_step(tower.kind, tower.steps[j], l.maps.back(), config);
            if (! (g.restricted(tower.levels[j].vertex_set()) == l.maps.back()))
                throw InternalInvariantViolation("lift does not restrict to the previous level");
            l.maps.push_back(std::move(g));
            l.sigmas.push_back(std::move(sigma));
        }
        return l;
    }

    LiftContext::LiftContext(const Tower & tower, const SearchConfig & config) :
        _tower(tower)
    {
        if (tower.steps.empty())
            throw FraisseError("continuity needs a tower with at least one step");
        const auto & step = tower.steps.front();
        const auto & x = tower.levels[0];
        _level0 = x.vertex_set();
        _level1 = tower.levels[1].vertex_set();
        _autos = fraisse::automorphisms(x, config);
        for (auto & f : _autos)
            _lifts.push_back(lift_through_step(tower.kind, step, f, config).first);

        std::map<VertexId, VertexSet> w;
        for (auto v : _level0)
            w[v] = {v};
        for (std::size_t i = 0; i < step.order.size(); ++i) {
            const auto & entry = step.catalog.entries[step.order[i]];
            auto image = step.amalgam.factor_embeddings[i].image(entry.new_vertices());
            auto support = find_support(tower.kind, step.amalgam.result, image, _level0);
            for (auto v : image)
                w[v] = support ? *support : _level0;
        }
        if (step.completion)
            for (auto & p : step.completion->paths)
                for (auto v : p.interior)
                    w[v] = set_union(w.at(p.from), w.at(p.to));

        for (auto v : _level1)
            _vertex_witness.push_back(w.at(v));
    }

    auto LiftContext::vertex_witness(VertexId v) const -> const VertexSet &
    {
        auto it = std::lower_bound(_level1.begin(), _level1.end(), v);
        if (it == _level1.end() || *it != v)
            throw UnknownVertex(v);
        return _vertex_witness[it - _level1.begin()];
    }

    auto LiftContext::witness(const VertexSet & a) const -> VertexSet
    {
        VertexSet c;
        for (auto v : a)
            c = set_union(c, vertex_witness(v));
        return c;
    }

    auto LiftContext::determines(std::size_t f, const VertexSet & c, const VertexSet & a) const -> bool
    {
        for (std::size_t g = 0; g < _autos.size(); ++g) {
            bool agree = std::all_of(c.begin(), c.end(), [&](VertexId v) { return _autos[g](v) == _autos[f](v); });
            if (agree && ! std::all_of(a.begin(), a.end(), [&](VertexId v) { return _lifts[g](v) == _lifts[f](v); }))
                return false;
        }
        return true;
    }

    auto finite_determination_witness(const Tower & tower, const Embedding & f, const VertexSet & a,
        const SearchConfig & config) -> DeterminationWitness
    {
        LiftContext ctx(tower, config);
        auto it = std::find(ctx.automorphisms().begin(), ctx.automorphisms().end(), f);
        if (it == ctx.automorphisms().end())
            throw FraisseError("map is not an automorphism of level 0");
        DeterminationWitness w;
        w.support = ctx.witness(a);
        w.verified = ctx.determines(it - ctx.automorphisms().begin(), w.support, a);
        return w;
    }
}
