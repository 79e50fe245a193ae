/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <fraisse/axioms.hh>

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace fraisse
{
    auto AxiomReport::total_violations() const -> std::size_t
    {
        std::size_t t = 0;
        for (auto & a : axioms)
            t += a.violations;
        return t;
    }

    namespace
    {
        constexpr std::size_t window_size = 6;
        constexpr std::size_t max_examples = 3;
        constexpr std::size_t realization_tries = 256;

        auto show(const VertexSet & s) -> string
        {
            string r = "{";
            for (std::size_t i = 0; i < s.size(); ++i)
                r += (i ? "," : "") + std::to_string(s[i]);
            return r + "}";
        }

        struct Sample
        {
            VertexSet a, b, c, d;

            auto describe() const -> string
            {
                return "A=" + show(a) + " B=" + show(b) + " C=" + show(c) + " D=" + show(d);
            }
        };

        class Trial
        {
        public:
            Trial(const SirKind & kind, const Structure & m, Variant variant, const SearchConfig & config, std::mt19937_64 & rng) :
                _kind(kind), _m(m), _variant(variant), _config(config), _rng(rng)
            {
            }

            auto sample() -> Sample
            {
                auto w = window();
                int g = _kind.family == SirFamily::ngon_strong ? 2 : 3;
                Sample s;
                s.a = pick(w, 1, g);
                s.b = pick(w, 1, g);
                s.c = pick(w, _kind.local() ? 1 : 0, g);
                s.d = pick(w, 0, g);
                return s;
            }

            auto indep(const VertexSet & a, const VertexSet & b, const VertexSet & c) const -> bool
            {
                return fraisse::indep(_kind, _m, a, b, c, _variant);
            }

            auto gen(const VertexSet & s) const -> VertexSet
            {
                return generated(_m, s);
            }

            // SIR1: a random renaming of the ambient, and a re-embedding of
            // the generated configuration.
            auto invariance(const Sample & s) -> optional<bool>
            {
                auto before = indep(s.a, s.b, s.c);

                auto ids = _m.ids();
                auto shuffled = ids;
                std::shuffle(shuffled.begin(), shuffled.end(), _rng);
                Embedding pi;
                for (std::size_t i = 0; i < ids.size(); ++i)
                    pi.set(ids[i], shuffled[i]);
                auto renamed = relabel(_m, pi);
                if (fraisse::indep(_kind, renamed, pi.image(s.a), pi.image(s.b), pi.image(s.c), _variant) != before)
                    return false;

                auto whole = gen(set_union(set_union(s.a, s.b), s.c));
                auto config = _config;
                config.max_results = 64;
                auto embs = find_embeddings(induced(_m, whole), _m, {}, config);
                if (embs.empty())
                    return std::nullopt;
                auto & e = embs[std::uniform_int_distribution<std::size_t>(0, embs.size() - 1)(_rng)];
                if (gen(e.image(whole)) != e.image(whole))
                    return std::nullopt;
                return indep(e.image(s.a), e.image(s.b), e.image(s.c)) == before;
            }

            // Copies e(A) of A over <C>, in a deterministic but shuffled order.
            auto copies_over_c(const Sample & s) -> vector<Embedding>
            {
                auto cc = gen(s.c);
                auto ac = gen(set_union(s.a, s.c));
                auto config = _config;
                config.max_results = realization_tries;
                auto embs = find_embeddings(induced(_m, ac), _m, Embedding::identity(cc), config);
                std::shuffle(embs.begin(), embs.end(), _rng);
                vector<Embedding> closed;
                for (auto & e : embs) {
                    auto img = e.image(ac);
                    if (gen(img) == img)
                        closed.push_back(std::move(e));
                }
                return closed;
            }

            // SIR5: e(A) independent from B over C as well must have the same
            // type over <BC>, i.e. e together with the identity on <BC>
            // extends to an isomorphism of the generated configurations.
            auto stationary(const Sample & s, const Embedding & e) const -> bool
            {
                auto ac = gen(set_union(s.a, s.c));
                auto bc = gen(set_union(s.b, s.c));
                std::map<VertexId, VertexId> psi;
                for (auto v : ac)
                    psi[v] = e(v);
                for (auto v : bc) {
                    auto [it, fresh] = psi.emplace(v, v);
                    if (! fresh && it->second != v)
                        return false;
                }
                Embedding p(psi);
                auto dom = set_union(ac, bc);
                auto img = p.image(dom);
                if (img.size() != dom.size())
                    return false;
                if (! is_embedding(induced(_m, dom), induced(_m, img), p))
                    return false;
                if (_kind.family != SirFamily::ngon_strong)
                    return true;
                auto from = gen(set_union(set_union(s.a, s.b), s.c));
                auto to = gen(set_union(e.image(s.a), bc));
                return find_isomorphism(induced(_m, from), induced(_m, to), p, _config).has_value();
            }

        private:
            const SirKind & _kind;
            const Structure & _m;
            Variant _variant;
            const SearchConfig & _config;
            std::mt19937_64 & _rng;

            auto near(int i, int j) const -> bool
            {
                if (_m.tag().kind == ClassKind::metric)
                    return true;
                return _m.related(i, j) || _m.related(j, i);
            }

            // Up to window_size vertices close to a random centre.
            auto window() -> VertexSet
            {
                int n = _m.size();
                int centre = std::uniform_int_distribution<int>(0, n - 1)(_rng);
                vector<int> order;
                if (_m.tag().kind == ClassKind::metric) {
                    order.resize(n);
                    std::iota(order.begin(), order.end(), 0);
                    std::shuffle(order.begin(), order.end(), _rng);
                    std::stable_sort(order.begin(), order.end(), [&](int p, int q) {
                        return _m.distance(centre, p) < _m.distance(centre, q);
                    });
                }
                else {
                    vector<char> seen(n, 0);
                    std::deque<int> queue{centre};
                    seen[centre] = 1;
                    while (! queue.empty() && order.size() < window_size) {
                        int v = queue.front();
                        queue.pop_front();
                        order.push_back(v);
                        vector<int> next;
                        for (int u = 0; u < n; ++u)
                            if (! seen[u] && near(v, u))
                                next.push_back(u);
                        std::shuffle(next.begin(), next.end(), _rng);
                        for (int u : next) {
                            seen[u] = 1;
                            queue.push_back(u);
                        }
                    }
                    // fill from elsewhere when the component is small
                    vector<int> rest;
                    for (int u = 0; u < n; ++u)
                        if (! seen[u])
                            rest.push_back(u);
                    std::shuffle(rest.begin(), rest.end(), _rng);
                    for (int u : rest)
                        order.push_back(u);
                }
                if (order.size() > window_size)
                    order.resize(window_size);
                vector<VertexId> ids;
                for (int i : order)
                    ids.push_back(_m.id(i));
                return make_set(std::move(ids));
            }

            auto pick(const VertexSet & w, int lo, int hi) -> VertexSet
            {
                hi = std::min<int>(hi, w.size());
                lo = std::min(lo, hi);
                int k = std::uniform_int_distribution<int>(lo, hi)(_rng);
                auto pool = w;
                std::shuffle(pool.begin(), pool.end(), _rng);
                pool.resize(k);
                return make_set(std::move(pool));
            }
        };

        auto record(AxiomTally & t, const optional<bool> & outcome, const Sample & s) -> void
        {
            if (! outcome)
                ++t.unwitnessed;
            else if (! *outcome) {
                ++t.violations;
                if (t.examples.size() < max_examples)
                    t.examples.push_back(s.describe());
            }
        }
    }

    auto check_axioms_in(const SirKind & kind, const Structure & ambient, int trials, std::uint64_t seed,
        Variant variant, const SearchConfig & config) -> AxiomReport
    {
        if (trials < 1)
            throw FraisseError("axiom check needs at least one trial");
        if (! (kind.class_tag() == ambient.tag()))
            throw ClassMismatch(to_string(kind) + " cannot be checked inside a " + to_string(ambient.tag()));
        if (ambient.size() == 0)
            throw FraisseError("axiom check needs a nonempty ambient");

        AxiomReport r;
        r.kind = kind;
        r.variant = variant;
        r.trials = trials;
        r.seed = seed;
        r.ambient_size = ambient.size();

        for (int t = 0; t < trials; ++t) {
            std::seed_seq seq{seed, static_cast<std::uint64_t>(t)};
            std::mt19937_64 rng(seq);
            Trial trial(kind, ambient, variant, config, rng);
            auto s = trial.sample();

            // each axiom runs guarded: a closure too deep for the fragment
            // or a search over the bound leaves that axiom unwitnessed
            auto guarded = [&](int axiom, auto && body) {
                auto & tally = r.axioms[axiom];
                ++tally.tested;
                try {
                    body(tally);
                }
                catch (const DepthInsufficient &) {
                    ++tally.unwitnessed;
                }
                catch (const SearchBoundExceeded &) {
                    ++tally.unwitnessed;
                }
            };

            guarded(0, [&](AxiomTally & tally) {
                ++tally.exercised;
                record(tally, trial.invariance(s), s);
            });

            guarded(1, [&](AxiomTally & tally) {
                ++tally.exercised;
                record(tally, trial.indep(s.a, s.b, s.c) == trial.indep(s.b, s.a, s.c), s);
            });

            guarded(2, [&](AxiomTally & tally) {
                if (! trial.indep(s.a, set_union(s.b, s.d), s.c))
                    return;
                ++tally.exercised;
                auto bc = trial.gen(set_union(s.b, s.c));
                record(tally, trial.indep(s.a, s.b, s.c) && trial.indep(s.a, s.d, bc), s);
            });

            guarded(3, [&](AxiomTally & tally) {
                ++tally.exercised;
                for (auto & e : trial.copies_over_c(s))
                    if (trial.indep(e.image(s.a), s.b, s.c))
                        return;
                ++tally.unwitnessed;
            });

            guarded(4, [&](AxiomTally & tally) {
                if (! trial.indep(s.a, s.b, s.c))
                    return;
                auto ac = trial.gen(set_union(s.a, s.c));
                for (auto & e : trial.copies_over_c(s)) {
                    auto moved = e.image(s.a);
                    if (e == Embedding::identity(ac) || ! trial.indep(moved, s.b, s.c))
                        continue;
                    ++tally.exercised;
                    record(tally, trial.stationary(s, e), s);
                    return;
                }
            });

            guarded(5, [&](AxiomTally & tally) {
                auto bc = trial.gen(set_union(s.b, s.c));
                if (! trial.indep(s.a, s.b, s.c) || ! trial.indep(s.a, s.d, bc))
                    return;
                ++tally.exercised;
                record(tally, trial.indep(s.a, set_union(s.b, s.d), s.c), s);
            });
        }
        return r;
    }

    auto check_axioms(const SaturationRecipe & recipe, int trials, std::uint64_t seed, Variant variant) -> AxiomReport
    {
        auto chain = saturate(recipe);
        auto r = check_axioms_in(recipe.kind, chain.last(), trials, seed, variant, recipe.katetov.search);
        r.ambient_truncated = chain.truncated;
        return r;
    }
}
