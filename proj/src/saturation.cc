/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <fraisse/katetov.hh>

#include <algorithm>
#include <functional>
#include <random>

using std::optional;
using std::vector;

namespace fraisse
{
    namespace
    {
        // Does cod contain a vertex outside the base that realizes ext's
        // single new vertex over the identically named base?
        auto realizes_point(const Structure & cod, const ExtensionType & e) -> bool
        {
            const auto & ext = e.ext;
            auto fresh = e.new_vertices();
            int u = ext.at(fresh.front());
            vector<int> ext_base, cod_base;
            vector<char> in_base(cod.size(), 0);
            for (auto v : e.base.ids()) {
                auto j = cod.index_of(v);
                if (! j)
                    return false;
                ext_base.push_back(ext.at(v));
                cod_base.push_back(*j);
                in_base[*j] = 1;
            }
            bool metric = cod.tag().kind == ClassKind::metric;
            for (int w = 0; w < cod.size(); ++w) {
                if (in_base[w] || cod.part(w) != ext.part(u))
                    continue;
                bool ok = true;
                for (std::size_t k = 0; ok && k < ext_base.size(); ++k) {
                    int a = ext_base[k], b = cod_base[k];
                    if (metric)
                        ok = ext.distance(u, a) == cod.distance(w, b);
                    else
                        ok = ext.related(u, a) == cod.related(w, b) && ext.related(a, u) == cod.related(b, w);
                }
                if (ok)
                    return true;
            }
            return false;
        }

        auto solved_in(const Structure & cod, const ExtensionType & e, const SearchConfig & config) -> bool
        {
            auto fresh = e.new_vertices();
            if (fresh.empty())
                return true;
            if (fresh.size() == 1)
                return realizes_point(cod, e);
            auto c = config;
            c.max_results = 1;
            return ! find_embeddings(e.ext, cod, Embedding::identity(e.base.vertex_set()), c).empty();
        }

        auto for_each_subset(const VertexSet & ids, int bound, const std::function<void (const VertexSet &)> & fn) -> void
        {
            int limit = bound < 0 ? static_cast<int>(ids.size()) : std::min<int>(bound, ids.size());
            VertexSet cur;
            std::function<void (std::size_t)> rec = [&](std::size_t from) {
                fn(cur);
                if (static_cast<int>(cur.size()) == limit)
                    return;
                for (std::size_t i = from; i < ids.size(); ++i) {
                    cur.push_back(ids[i]);
                    rec(i + 1);
                    cur.pop_back();
                }
            };
            rec(0);
        }

        auto cycle(int length, int n) -> Structure
        {
            StructureBuilder b(ClassTag::ngon(n));
            for (int i = 0; i < length; ++i)
                b.add_vertex(i, i % 2);
            for (int i = 0; i < length; ++i)
                b.set_related(i, (i + 1) % length);
            b.set_depth(1);
            return std::move(b).build();
        }
    }

    auto SaturationRecipe::standard(const SirKind & kind, std::uint64_t seed) -> SaturationRecipe
    {
        SaturationRecipe r;
        r.kind = kind;
        r.seed = seed;
        r.start = Structure(kind.class_tag());
        switch (kind.family) {
        case SirFamily::free_graph:
        case SirFamily::complete_graph:
        case SirFamily::poset_amalgam:
            break;
        case SirFamily::min_metric: {
            StructureBuilder b(ClassTag::metric());
            b.add_vertex(0);
            r.start = std::move(b).build();
            r.katetov.menu = {Rational(1), Rational(2)};
            break;
        }
        case SirFamily::ngon_strong:
            r.start = cycle(2 * kind.n, kind.n);
            r.base_bound = 3;
            r.rounds = 2;
            break;
        }
        return r;
    }

    auto saturate(const SaturationRecipe & recipe) -> SaturationChain
    {
        const auto & kind = recipe.kind;
        bool ngon = kind.family == SirFamily::ngon_strong;
        SaturationChain chain;
        chain.levels.push_back(recipe.start);

        for (int round = 0; round < recipe.rounds; ++round) {
            const auto & level = chain.levels.back();
            vector<ExtensionType> problems;
            try {
                for_each_subset(level.vertex_set(), recipe.base_bound, [&](const VertexSet & a) {
                    if (kind.local() && a.empty())
                        return;
                    if (ngon) {
                        try {
                            if (generated(level, a) != a)
                                return;
                        }
                        catch (const DepthInsufficient &) {
                            return;
                        }
                    }
                    for (auto & e : enum_types(kind, induced(level, a), recipe.m, recipe.katetov).entries)
                        problems.push_back(std::move(e));
                });
            }
            catch (const SearchBoundExceeded & e) {
                chain.truncated = true;
                chain.truncation_reason = e.what();
                return chain;
            }

            std::seed_seq seq{recipe.seed, static_cast<std::uint64_t>(round)};
            std::mt19937_64 rng(seq);
            std::shuffle(problems.begin(), problems.end(), rng);

            StructureBuilder host(level);
            VertexId next = level.max_id() + 1;
            for (auto & p : problems) {
                if (solved_in(host.current(), p, recipe.katetov.search))
                    continue;
                amalgamate_into(kind, host, p.ext, Embedding::identity(p.base.vertex_set()), next);
                if (kind.family == SirFamily::poset_amalgam)
                    close_order(host);
                if (host.current().size() > recipe.max_vertices) {
                    chain.truncated = true;
                    chain.truncation_reason = "round " + std::to_string(round + 1) + " exceeds "
                        + std::to_string(recipe.max_vertices) + " vertices";
                    return chain;
                }
            }

            auto next_level = std::move(host).build();
            if (ngon)
                next_level = free_completion_step(next_level).result;
            if (auto bad = validate(next_level))
                throw InternalInvariantViolation("saturation produced an invalid structure: " + *bad);
            chain.levels.push_back(std::move(next_level));
        }
        return chain;
    }

    namespace
    {
        class Game
        {
        public:
            Game(const vector<Structure> & a, const vector<Structure> & b, int depth) :
                _depth(depth)
            {
                _side[0] = &a;
                _side[1] = &b;
            }

            auto run() -> BackAndForthResult
            {
                BackAndForthResult r;
                r.equivalent = duplicator_wins(1, r.witness);
                if (r.equivalent)
                    r.witness.clear();
                return r;
            }

        private:
            int _depth;
            const vector<Structure> * _side[2];
            vector<int> _picks[2];

            auto level(int s, int move) const -> const Structure &
            {
                int last = static_cast<int>(_side[s]->size()) - 1;
                return (*_side[s])[std::max(0, last - _depth + move)];
            }

            // Picks are indices into the last level, which contains them all.
            auto consistent(int v, int w) const -> bool
            {
                const auto & a = _side[0]->back();
                const auto & b = _side[1]->back();
                if (a.part(v) != b.part(w))
                    return false;
                bool metric = a.tag().kind == ClassKind::metric;
                for (std::size_t k = 0; k < _picks[0].size(); ++k) {
                    int p = _picks[0][k], q = _picks[1][k];
                    if ((p == v) != (q == w))
                        return false;
                    if (metric) {
                        if (a.distance(v, p) != b.distance(w, q))
                            return false;
                    }
                    else if (a.related(v, p) != b.related(w, q) || a.related(p, v) != b.related(q, w))
                        return false;
                }
                return true;
            }

            auto duplicator_wins(int move, vector<std::pair<int, VertexId>> & line) -> bool
            {
                if (move > _depth)
                    return true;
                for (int s = 0; s < 2; ++s) {
                    const auto & from = level(s, move);
                    const auto & to = level(1 - s, move);
                    const auto & from_last = _side[s]->back();
                    const auto & to_last = _side[1 - s]->back();
                    for (int i = 0; i < from.size(); ++i) {
                        int v = from_last.at(from.id(i));
                        bool answered = false;
                        for (int j = 0; j < to.size() && ! answered; ++j) {
                            int w = to_last.at(to.id(j));
                            bool ok = s == 0 ? consistent(v, w) : consistent(w, v);
                            if (! ok)
                                continue;
                            _picks[s].push_back(v);
                            _picks[1 - s].push_back(w);
                            vector<std::pair<int, VertexId>> sub;
                            answered = duplicator_wins(move + 1, sub);
                            _picks[s].pop_back();
                            _picks[1 - s].pop_back();
                        }
                        if (! answered) {
                            line.assign(1, {s, from.id(i)});
                            return false;
                        }
                    }
                }
                return true;
            }
        };
    }

    auto back_and_forth_iso(const vector<Structure> & a, const vector<Structure> & b, int depth) -> BackAndForthResult
    {
        if (a.empty() || b.empty())
            throw FraisseError("back-and-forth needs nonempty chains");
        if (! (a.back().tag() == b.back().tag()))
            throw ClassMismatch("back-and-forth between " + to_string(a.back().tag()) + " and " + to_string(b.back().tag()));
        if (depth < 0)
            throw FraisseError("negative game depth");
        double work = 1;
        for (int i = 0; i < depth; ++i)
            work *= 2.0 * a.back().size() * b.back().size();
        if (work > 1e10)
            throw SearchBoundExceeded("back-and-forth game too large at depth " + std::to_string(depth));
        return Game(a, b, depth).run();
    }

    auto back_and_forth_iso(const Structure & a, const Structure & b, int depth) -> BackAndForthResult
    {
        return back_and_forth_iso(vector<Structure>{a}, vector<Structure>{b}, depth);
    }

    auto RichnessReport::ratio() const -> double
    {
        auto in_bound = solved + unsolved;
        return in_bound == 0 ? 1.0 : static_cast<double>(solved) / in_bound;
    }

    auto check_richness(const vector<Structure> & levels, int m, const vector<Probe> & probes,
        const SearchConfig & config) -> RichnessReport
    {
        RichnessReport r;
        for (auto & p : probes) {
            ProbeStatus st;
            if (p.level < 0 || p.level + 1 >= static_cast<int>(levels.size())
                || static_cast<int>(p.problem.new_vertices().size()) > m)
                st = ProbeStatus::out_of_bound;
            else {
                bool base_ok = std::all_of(p.problem.base.ids().begin(), p.problem.base.ids().end(),
                    [&](VertexId v) { return levels[p.level].has(v); });
                st = base_ok && solved_in(levels[p.level + 1], p.problem, config) ? ProbeStatus::solved : ProbeStatus::unsolved;
            }
            r.status.push_back(st);
            switch (st) {
            case ProbeStatus::solved: ++r.solved; break;
            case ProbeStatus::unsolved: ++r.unsolved; break;
            case ProbeStatus::out_of_bound: ++r.out_of_bound; break;
            }
        }
        return r;
    }

    auto one_point_probes(const SirKind & kind, const vector<Structure> & levels, int level, int base_bound,
        const KatetovConfig & config) -> vector<Probe>
    {
        vector<Probe> probes;
        const auto & l = levels.at(level);
        for_each_subset(l.vertex_set(), base_bound, [&](const VertexSet & a) {
            if (kind.local() && a.empty())
                return;
            for (auto & e : enum_types(kind, induced(l, a), 1, config).entries)
                probes.push_back({level, std::move(e)});
        });
        return probes;
    }
}
